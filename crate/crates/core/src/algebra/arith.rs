//! Integer arithmetic: primality, factorization, modular powers and orders.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::limits;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse, if `a` is a unit mod `m`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Checked integer power.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub fn pow_big(base: u64, exp: u32) -> BigUint {
    BigUint::from(base).pow(exp)
}

fn miller_rabin_u64(n: u64, a: u64) -> bool {
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod(a % n, d, n);
    if x == 1 || x == n - 1 || a % n == 0 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        .iter()
        .all(|&a| miller_rabin_u64(n, a))
}

/// Primality for 128-bit inputs: deterministic below 3.3e24, probabilistic
/// with 20 fixed bases above.
pub fn is_prime_u128(n: u128) -> bool {
    if n <= u64::MAX as u128 {
        return is_prime(n as u64);
    }
    if n % 2 == 0 {
        return false;
    }
    let mont = Mont128::new(n);
    const BASES: [u128; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let one = mont.one();
    let minus_one = mont.to_mont(n - 1);
    'outer: for &a in &BASES {
        let mut x = mont.pow(mont.to_mont(a), d);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = mont.mul(x, x);
            if x == minus_one {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Probable-prime test for big integers (Miller-Rabin, 20 fixed bases).
pub fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(v) = n.to_u128() {
        return is_prime_u128(v);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'outer: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Montgomery arithmetic modulo an odd modulus below 2^127.
#[derive(Clone, Copy, Debug)]
pub struct Mont128 {
    m: u128,
    m_neg_inv: u128,
    r2: u128,
}

#[inline]
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a0, a1) = (a as u64 as u128, a >> 64);
    let (b0, b1) = (b as u64 as u128, b >> 64);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 as u64 as u128) + (p10 as u64 as u128);
    let lo = (p00 as u64 as u128) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (lo, hi)
}

impl Mont128 {
    pub fn new(m: u128) -> Self {
        assert!(m % 2 == 1 && m < (1u128 << 127), "Mont128 needs an odd modulus below 2^127");
        let mut inv = m;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(m.wrapping_mul(inv)));
        }
        let r2 = {
            let r = BigUint::one() << 256u32;
            (r % BigUint::from(m)).to_u128().unwrap_or(0)
        };
        Mont128 {
            m,
            m_neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    pub fn modulus(&self) -> u128 {
        self.m
    }

    #[inline]
    fn redc(&self, lo: u128, hi: u128) -> u128 {
        let u = lo.wrapping_mul(self.m_neg_inv);
        let (ulo, uhi) = mul_wide(u, self.m);
        let (_, carry) = lo.overflowing_add(ulo);
        let mut t = hi + uhi + carry as u128;
        if t >= self.m {
            t -= self.m;
        }
        t
    }

    #[inline]
    pub fn mul(&self, a: u128, b: u128) -> u128 {
        let (lo, hi) = mul_wide(a, b);
        self.redc(lo, hi)
    }

    pub fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.m, self.r2)
    }

    pub fn from_mont(&self, a: u128) -> u128 {
        self.redc(a, 0)
    }

    pub fn one(&self) -> u128 {
        self.to_mont(1)
    }

    #[inline]
    pub fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u128, b: u128) -> u128 {
        if a >= b {
            a - b
        } else {
            a + self.m - b
        }
    }

    pub fn pow(&self, mut base: u128, mut exp: u128) -> u128 {
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// Primes up to `n` (inclusive) by a sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return vec![];
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn rho_u64(n: u64, budget: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mut c = 1u64;
    let mut spent = 0u64;
    while spent < budget {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 && spent < budget {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
            spent += 1;
        }
        if d != 1 && d != n {
            return Some(d);
        }
        c += 1;
    }
    None
}

/// Prime factorization of a 64-bit integer: trial division then Pollard rho.
/// Primes strictly increasing; `factorize(1)` is empty.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m && p < 1000 {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![m];
    let mut big: Vec<u64> = Vec::new();
    while let Some(x) = stack.pop() {
        if x == 1 {
            continue;
        }
        if is_prime(x) {
            big.push(x);
            continue;
        }
        // 64-bit composites with no factor below 1000 always split within the budget.
        let d = rho_u64(x, u64::MAX).unwrap_or(x);
        stack.push(d);
        stack.push(x / d);
    }
    big.sort_unstable();
    for q in big {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// Distinct prime divisors, increasing.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors, increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// The `p`-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut m = n;
    let mut out = 1;
    while m % p == 0 {
        m /= p;
        out *= p;
    }
    out
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1, m > 1).
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    // Order divides Carmichael-like exponent; use phi(m).
    let phi = euler_phi(m);
    let mut ord = phi;
    for (p, _) in factorize(phi) {
        while ord % p == 0 && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    Some(ord)
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// Whether `n` is a prime power p^k with k >= 1; returns (p, k).
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).map_or(true, |v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

/// Pollard rho (Brent variant) on an odd composite below 2^127.
/// Returns a nontrivial factor or `None` when the budget runs out.
pub fn rho_u128(n: u128, budget: u64) -> Option<u128> {
    let mont = Mont128::new(n);
    let mut spent = 0u64;
    let mut c_raw = 1u128;
    while spent < budget {
        let c = mont.to_mont(c_raw);
        let f = |x: u128| mont.add(mont.mul(x, x), c);
        let mut y = mont.to_mont(2);
        let mut r = 1u64;
        let mut q = mont.one();
        let mut g = 1u128;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let lim = BATCH.min(r - k);
                for _ in 0..lim {
                    y = f(y);
                    q = mont.mul(q, x.abs_diff(y));
                }
                g = gcd_u128(mont.from_mont(q), n);
                k += lim;
            }
            spent += r;
            r *= 2;
            if spent > budget {
                break;
            }
        }
        if g == n {
            // Backtrack one step at a time from the saved point.
            loop {
                ys = f(ys);
                g = gcd_u128(mont.from_mont(x.abs_diff(ys)), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return Some(g);
        }
        c_raw += 1;
    }
    None
}

fn mod_inverse_u128(a: u128, n: u128) -> Option<u128> {
    use num_bigint::BigInt;
    let e = BigInt::from(a).extended_gcd(&BigInt::from(n));
    if e.gcd != BigInt::one() {
        return None;
    }
    let x = e.x.mod_floor(&BigInt::from(n));
    x.to_u128()
}

/// Prime powers q^e <= b1, one per prime q.
fn stage1_exponents(b1: u64) -> Vec<u64> {
    primes_up_to(b1)
        .into_iter()
        .map(|p| {
            let mut pe = p;
            while pe <= b1 / p {
                pe *= p;
            }
            pe
        })
        .collect()
}

/// Pollard p-1: stage 1 to `b1`, then a baby-step giant-step stage 2 to `b2`
/// using V-sequences with wheel D = 2310 (covers every prime in (b1, b2]).
pub fn pm1_u128(n: u128, b1: u64, b2: u64) -> Option<u128> {
    let mont = Mont128::new(n);
    let one = mont.one();
    let mut a = mont.to_mont(2);
    for pe in stage1_exponents(b1) {
        a = mont.pow(a, pe as u128);
    }
    let g = gcd_u128(mont.from_mont(mont.sub(a, one)), n);
    if g == n {
        return None;
    }
    if g > 1 {
        return Some(g);
    }
    let a_plain = mont.from_mont(a);
    let ainv = mont.to_mont(mod_inverse_u128(a_plain, n)?);
    const D: u64 = 2310;
    // y_u = a^u + a^-u for u < D/2 coprime to D.
    let mut ys = Vec::new();
    let (mut pu, mut pinv) = (one, one);
    for u in 1..D / 2 {
        pu = mont.mul(pu, a);
        pinv = mont.mul(pinv, ainv);
        if gcd(u, D) == 1 {
            ys.push(mont.add(pu, pinv));
        }
    }
    let b = mont.pow(a, D as u128);
    let binv = mont.pow(ainv, D as u128);
    let v1 = mont.add(b, binv);
    let two = mont.add(one, one);
    let v_start = b1 / D;
    let v_end = b2 / D + 1;
    // V_k(v1) for k = v_start, v_start + 1 by a Lucas ladder.
    let lucas = |k: u64| -> (u128, u128) {
        let (mut x0, mut x1) = (two, v1);
        for bit in (0..64).rev() {
            if (k >> bit) & 1 == 1 {
                x0 = mont.sub(mont.mul(x0, x1), v1);
                x1 = mont.sub(mont.mul(x1, x1), two);
            } else {
                x1 = mont.sub(mont.mul(x0, x1), v1);
                x0 = mont.sub(mont.mul(x0, x0), two);
            }
        }
        (x0, x1)
    };
    let (mut prev, mut cur) = lucas(v_start);
    let mut acc = one;
    for v in v_start..=v_end {
        for &y in &ys {
            acc = mont.mul(acc, mont.sub(cur, y));
        }
        if v % 64 == 63 {
            let g = gcd_u128(mont.from_mont(acc), n);
            if g > 1 {
                return if g < n { Some(g) } else { None };
            }
        }
        let next = mont.sub(mont.mul(cur, v1), prev);
        prev = cur;
        cur = next;
    }
    let g = gcd_u128(mont.from_mont(acc), n);
    if g > 1 && g < n {
        Some(g)
    } else {
        None
    }
}

/// Williams p+1, stage 1 only, trying a few fixed seeds.
pub fn pp1_u128(n: u128, b1: u64) -> Option<u128> {
    let mont = Mont128::new(n);
    let two = mont.to_mont(2);
    let exps = stage1_exponents(b1);
    // Discriminants A^2 - 4 with square-free parts 3, 2, 5, 15, 21, 7.
    for seed in [4u128, 6, 3, 8, 5, 3 + 4] {
        let mut v = mont.to_mont(seed);
        for &pe in &exps {
            let (mut x0, mut x1) = (two, v);
            for bit in (0..64).rev() {
                if (pe >> bit) & 1 == 1 {
                    x0 = mont.sub(mont.mul(x0, x1), v);
                    x1 = mont.sub(mont.mul(x1, x1), two);
                } else {
                    x1 = mont.sub(mont.mul(x0, x1), v);
                    x0 = mont.sub(mont.mul(x0, x0), two);
                }
            }
            v = x0;
        }
        let g = gcd_u128(mont.from_mont(mont.sub(v, two)), n);
        if g > 1 && g < n {
            return Some(g);
        }
    }
    None
}

/// Smallest prime factor of `n`, given that every prime factor is 1 mod `step`.
/// Uses trial division on that progression, primality testing, Pollard p-1,
/// then budgeted Pollard rho.
pub fn smallest_prime_factor_progression(n: &BigUint, step: u64) -> Result<Option<BigUint>> {
    if n.is_one() || n.is_zero() {
        return Ok(None);
    }
    let step = step.max(1);
    // Trial division over t = 1 + k*step (and t = 2 when step = 1).
    const TRIAL: u64 = 1 << 20;
    if step == 1 && n.is_even() {
        return Ok(Some(BigUint::from(2u32)));
    }
    let small = n.to_u128();
    let mut t = step + 1;
    while t <= TRIAL {
        let t2 = t as u128 * t as u128;
        let divides = match small {
            Some(v) => {
                if t2 > v {
                    return Ok(Some(n.clone()));
                }
                v % t as u128 == 0
            }
            None => (n % t).is_zero(),
        };
        if divides {
            return Ok(Some(BigUint::from(t)));
        }
        t += step;
    }
    let mut pending = vec![n.clone()];
    let mut best: Option<BigUint> = None;
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime_big(&m) {
            if best.as_ref().map_or(true, |b| &m < b) {
                best = Some(m);
            }
            continue;
        }
        let d = split(&m)?;
        let other = &m / &d;
        pending.push(d);
        pending.push(other);
    }
    Ok(best)
}

fn split(m: &BigUint) -> Result<BigUint> {
    let Some(v) = m.to_u128().filter(|&v| v < (1u128 << 127)) else {
        return Err(Error::scale(
            "Pollard rho modulus below 2^127",
            "2^127",
            format!("{} bits", m.bits()),
        ));
    };
    if v % 2 == 0 {
        return Ok(BigUint::from(2u32));
    }
    let found = rho_u128(v, 1 << 18)
        .or_else(|| pm1_u128(v, 10_000, 1_000))
        .or_else(|| pp1_u128(v, 20_000))
        .or_else(|| pm1_u128(v, 20_000, 50_000_000));
    if let Some(d) = found {
        return Ok(BigUint::from(d));
    }
    match rho_u128(v, limits::RHO_BUDGET) {
        Some(d) => Ok(BigUint::from(d)),
        None => Err(Error::Budget(format!(
            "Pollard rho did not split a {}-bit cofactor within {} iterations",
            m.bits(),
            limits::RHO_BUDGET
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).is_empty());
        assert_eq!(factorize(32767), vec![(7, 1), (31, 1), (151, 1)]);
        assert_eq!(factorize(24), vec![(2, 3), (3, 1)]);
        assert_eq!(factorize(1u64 << 61), vec![(2, 61)]);
        // Two primes near 2^31.
        assert_eq!(factorize(2147483647 * 2147483629), vec![(2147483629, 1), (2147483647, 1)]);
    }

    #[test]
    fn mont_matches_bigint() {
        let m: u128 = (1u128 << 126) + 12345;
        let m = m | 1;
        let mont = Mont128::new(m);
        let a = 0x1234_5678_9abc_def0_1122_3344_5566_7788u128 % m;
        let b = 0x0fed_cba9_8765_4321_0f0f_f0f0_1357_9bdfu128 % m;
        let got = mont.from_mont(mont.mul(mont.to_mont(a), mont.to_mont(b)));
        let want = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
        assert_eq!(BigUint::from(got), want);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(is_prime(32749));
        assert!(!is_prime(3215031751));
        assert!(is_prime_u128(170141183460469231731687303715884105727)); // 2^127 - 1
        assert!(!is_prime_u128(1_000_000_007u128 * 998_244_353 * 1_000_000_009));
    }

    #[test]
    fn rho_splits_u128() {
        let p: u128 = 1_000_000_007;
        let q: u128 = 998_244_353;
        let d = rho_u128(p * q, 1 << 24).expect("split");
        assert!(d == p || d == q);
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(2, 32767), Some(15));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(isqrt(99), 9);
    }
}
