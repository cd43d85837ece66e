//! Search for the smallest order (p^n)^3 (p^n - 1)/(p^(n/d) - 1) d over admissible triples.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::arith::{divisors, gcd, is_prime, prime_divisors};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalOrder {
    pub p: u64,
    pub n: u32,
    pub d: u32,
    #[serde(with = "crate::bigser")]
    pub order: BigUint,
}

/// Whether (n, d) is admissible for p^n = `pn`: d | n, d odd, d has two distinct odd prime
/// divisors, gcd(d, p^n - 1) = 1.
pub fn admissible(n: u32, d: u32, pn: u128) -> bool {
    if d <= 1 || n % d != 0 || d % 2 == 0 {
        return false;
    }
    let odd_primes = prime_divisors(d as u64).into_iter().filter(|&r| r != 2).count();
    if odd_primes < 2 {
        return false;
    }
    gcd(d as u64, ((pn - 1) % d as u128) as u64) == 1
}

/// The order formula for an admissible triple.
pub fn order_formula(p: u64, n: u32, d: u32) -> BigUint {
    let pn = BigUint::from(p).pow(n);
    let one = BigUint::from(1u32);
    let sub = BigUint::from(p).pow(n / d) - &one;
    let num = &pn - &one;
    pn.pow(3) * (num / sub) * BigUint::from(d)
}

/// Minimizes the order over all admissible (p, n, d) with p^n <= bound.
/// Ties are broken by smallest (p, n, d). `None` when nothing is admissible.
pub fn minimal_order_search(bound: u128) -> Result<Option<MinimalOrder>> {
    if bound < 2 {
        return Err(Error::invalid("bound must be at least 2"));
    }
    let mut best: Option<MinimalOrder> = None;
    let mut p = 2u64;
    // Admissible n is at least 15 (d needs two distinct odd primes).
    while (p as u128).checked_pow(15).is_some_and(|v| v <= bound) {
        if is_prime(p) {
            let mut n = 1u32;
            while let Some(pn) = (p as u128).checked_pow(n).filter(|&v| v <= bound) {
                for d in divisors(n as u64) {
                    let d = d as u32;
                    if !admissible(n, d, pn) {
                        continue;
                    }
                    let order = order_formula(p, n, d);
                    let better = match &best {
                        None => true,
                        Some(b) => order < b.order,
                    };
                    if better {
                        best = Some(MinimalOrder { p, n, d, order });
                    }
                }
                n += 1;
            }
        }
        p += 1;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lewis_order() -> BigUint {
        (BigUint::from(1u32) << 45u32) * BigUint::from(32767u32) * BigUint::from(15u32)
    }

    #[test]
    fn examples() {
        let r = minimal_order_search(1 << 20).unwrap().unwrap();
        assert_eq!((r.p, r.n, r.d), (2, 15, 15));
        assert_eq!(r.order, lewis_order());
        assert!(minimal_order_search(1 << 14).unwrap().is_none());
        let r30 = minimal_order_search(1 << 30).unwrap().unwrap();
        assert_eq!(r30, r);
    }

    #[test]
    fn admissibility() {
        assert!(admissible(15, 15, 32768));
        assert!(!admissible(15, 5, 32768));
        assert!(!admissible(30, 30, 1 << 30));
        // gcd(15, 4^15 - 1) = 15
        assert!(!admissible(15, 15, 1 << 30));
    }
}
