//! Primitive prime divisors of a^n - 1.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::arith::{divisors, smallest_prime_factor_progression};
use crate::error::{Error, Result};
use crate::limits;

fn check_args(a: u64, n: u32) -> Result<()> {
    if a < 2 || n < 1 {
        return Err(Error::invalid(format!("zsigmondy needs a >= 2 and n >= 1, got ({a}, {n})")));
    }
    let bits = (64 - a.leading_zeros()) as u64 * n as u64;
    if bits > limits::ZSIGMONDY_MAX_BITS {
        return Err(Error::scale("ZSIGMONDY_MAX_BITS", limits::ZSIGMONDY_MAX_BITS, format!("~{bits} bits for {a}^{n} - 1")));
    }
    Ok(())
}

/// The largest divisor of a^n - 1 coprime to every a^j - 1 with j < n.
/// Its prime factors are exactly the primitive prime divisors of (a, n).
pub fn primitive_part(a: u64, n: u32) -> Result<BigUint> {
    check_args(a, n)?;
    let big_a = BigUint::from(a);
    let one = BigUint::one();
    let mut r = big_a.pow(n) - &one;
    for j in divisors(n as u64) {
        if j == n as u64 {
            continue;
        }
        let l = big_a.pow(j as u32) - &one;
        loop {
            let g = r.gcd(&l);
            if g.is_one() {
                break;
            }
            r /= g;
        }
    }
    Ok(r)
}

/// Whether (a, n) admits a primitive prime divisor. Exact and cheap.
pub fn has_primitive_prime_divisor(a: u64, n: u32) -> Result<bool> {
    Ok(!primitive_part(a, n)?.is_one())
}

/// The smallest primitive prime divisor of (a, n), or `None` in the exception cases
/// (n = 6 with a = 2, n = 2 with a + 1 a power of 2, and (2, 1)).
pub fn zsigmondy_ppd(a: u64, n: u32) -> Result<Option<BigUint>> {
    let r = primitive_part(a, n)?;
    if r.is_one() {
        return Ok(None);
    }
    smallest_prime_factor_progression(&r, n as u64)
}

/// The exception rule as stated in the classical theorem.
pub fn is_zsigmondy_exception(a: u64, n: u32) -> bool {
    (n == 6 && a == 2) || (n == 2 && (a + 1).is_power_of_two()) || (n == 1 && a == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(zsigmondy_ppd(2, 6).unwrap(), None);
        assert_eq!(zsigmondy_ppd(3, 2).unwrap(), None);
        assert_eq!(zsigmondy_ppd(2, 4).unwrap(), Some(BigUint::from(5u32)));
        assert_eq!(zsigmondy_ppd(2, 1).unwrap(), None);
        assert_eq!(zsigmondy_ppd(2, 15).unwrap(), Some(BigUint::from(151u32)));
        assert_eq!(zsigmondy_ppd(2, 5).unwrap(), Some(BigUint::from(31u32)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(zsigmondy_ppd(1, 3).is_err());
        assert!(zsigmondy_ppd(5, 0).is_err());
        assert!(matches!(zsigmondy_ppd(u64::MAX, 100), Err(Error::Scale { .. })));
    }
}
