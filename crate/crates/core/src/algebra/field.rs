//! GF(p^n): field specs, elements, Frobenius, log tables and discrete logs.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::arith::{is_prime, prime_divisors};
use super::poly;
use crate::error::{Error, Result};
use crate::limits;

/// GF(p^n) given by a monic irreducible modulus (coefficients low-to-high).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub n: u32,
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    /// The field with the lowest monic irreducible modulus of degree n
    /// (ordered by the integer code of its lower coefficients).
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::invalid(format!("field characteristic {p} is not a prime below 2^31")));
        }
        if n == 0 {
            return Err(Error::invalid("field degree must be positive"));
        }
        let bound = (p as u128).checked_pow(n).filter(|&q| q <= u64::MAX as u128);
        let Some(q) = bound else {
            return Err(Error::Overflow(format!("{p}^{n} does not fit in 64 bits")));
        };
        for code in 0..q as u64 {
            let f = poly::monic_from_code(code, n as usize, p);
            if poly::is_irreducible(&f, p) {
                return Ok(FieldSpec { p, n, modulus: f });
            }
        }
        Err(Error::invariant(format!("no irreducible polynomial of degree {n} over GF({p})")))
    }

    /// Validates a user-supplied modulus.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::invalid(format!("field characteristic {p} is not a prime below 2^31")));
        }
        let m = poly::trim(modulus.iter().map(|c| c % p).collect());
        let n = poly::degree(&m).unwrap_or(0);
        if n == 0 || m[n] != 1 {
            return Err(Error::invalid("modulus must be monic of positive degree"));
        }
        if !poly::is_irreducible(&m, p) {
            return Err(Error::invalid("modulus is reducible"));
        }
        Ok(FieldSpec { p, n: n as u32, modulus: m })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.n)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { spec: self.clone(), coeffs: vec![0; self.n as usize] }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_prime(1)
    }

    pub fn from_prime(self: &Arc<Self>, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.n as usize];
        coeffs[0] = c % self.p;
        FieldElement { spec: self.clone(), coeffs }
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::invalid("coefficient vector has wrong length or range"));
        }
        Ok(FieldElement { spec: self.clone(), coeffs: coeffs.to_vec() })
    }

    /// Element with integer code sum c_i p^i.
    pub fn from_code(self: &Arc<Self>, mut code: u64) -> FieldElement {
        let mut coeffs = vec![0; self.n as usize];
        for c in coeffs.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        FieldElement { spec: self.clone(), coeffs }
    }

    /// The polynomial generator x as an element.
    pub fn x(self: &Arc<Self>) -> FieldElement {
        let f = poly::rem(&[0, 1], &self.modulus, self.p);
        let mut coeffs = vec![0; self.n as usize];
        coeffs[..f.len()].copy_from_slice(&f);
        FieldElement { spec: self.clone(), coeffs }
    }

    /// The smallest-code element of multiplicative order p^n - 1.
    pub fn primitive_element(self: &Arc<Self>) -> FieldElement {
        let q1 = self.order() - 1;
        let primes = prime_divisors(q1);
        for code in 1..self.order() {
            let g = self.from_code(code);
            if primes.iter().all(|&r| !g.pow(q1 / r).is_one()) {
                return g;
            }
        }
        unreachable!("finite field multiplicative groups are cyclic")
    }
}

/// An element of GF(p^n).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub spec: Arc<FieldSpec>,
    pub coeffs: Vec<u64>,
}

impl FieldElement {
    fn wrap(&self, f: poly::Poly) -> FieldElement {
        let mut coeffs = vec![0; self.spec.n as usize];
        coeffs[..f.len()].copy_from_slice(&f);
        FieldElement { spec: self.spec.clone(), coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn code(&self) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * self.spec.p + c)
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.wrap(poly::add(&self.coeffs, &other.coeffs, self.spec.p))
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.wrap(poly::sub(&self.coeffs, &other.coeffs, self.spec.p))
    }

    pub fn neg(&self) -> FieldElement {
        self.spec.zero().sub(self)
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.wrap(poly::mulmod(&self.coeffs, &other.coeffs, &self.spec.modulus, self.spec.p))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(poly::powmod(&self.coeffs, e as u128, &self.spec.modulus, self.spec.p))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::invalid("zero has no inverse"));
        }
        Ok(self.pow(self.spec.order() - 2))
    }

    /// x^(p^k).
    pub fn frobenius(&self, k: u32) -> FieldElement {
        let mut cur = self.clone();
        for _ in 0..k % self.spec.n {
            cur = cur.pow(self.spec.p);
        }
        cur
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::invalid("zero has no multiplicative order"));
        }
        let q1 = self.spec.order() - 1;
        let mut ord = q1;
        for r in prime_divisors(q1) {
            while ord % r == 0 && self.pow(ord / r).is_one() {
                ord /= r;
            }
        }
        Ok(ord)
    }
}

/// The Galois automorphism x -> x^(p^power).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisAuto {
    pub spec: Arc<FieldSpec>,
    pub power: u32,
}

impl GaloisAuto {
    pub fn new(spec: &Arc<FieldSpec>, power: u32) -> Result<Self> {
        if power >= spec.n {
            return Err(Error::invalid(format!("Galois power {power} not in [0, {})", spec.n)));
        }
        Ok(GaloisAuto { spec: spec.clone(), power })
    }

    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        x.frobenius(self.power)
    }
}

/// The Galois orbit {x^(p^k) : 0 <= k < n} of a nonzero element, sorted by code.
pub fn frobenius_orbit(x: &FieldElement) -> Result<Vec<FieldElement>> {
    if x.is_zero() {
        return Err(Error::invalid("frobenius_orbit needs a nonzero element"));
    }
    let mut out = vec![x.clone()];
    let mut cur = x.pow(x.spec.p);
    while &cur != x {
        out.push(cur.clone());
        cur = cur.pow(x.spec.p);
    }
    out.sort_by_key(|e| e.code());
    Ok(out)
}

/// Baby-step giant-step discrete logs with respect to a primitive element.
#[derive(Clone, Debug)]
pub struct DiscreteLog {
    pub generator: FieldElement,
    m: u64,
    baby: HashMap<u64, u64>,
    giant: FieldElement,
}

impl DiscreteLog {
    pub fn new(spec: &Arc<FieldSpec>) -> Result<Self> {
        let q = spec.order();
        if q > limits::MAX_FIELD_ORDER {
            return Err(Error::scale("MAX_FIELD_ORDER", limits::MAX_FIELD_ORDER, q));
        }
        let g = spec.primitive_element();
        let m = super::arith::isqrt(q - 1) + 1;
        let mut baby = HashMap::with_capacity(m as usize);
        let mut cur = spec.one();
        for j in 0..m {
            baby.entry(cur.code()).or_insert(j);
            cur = cur.mul(&g);
        }
        let giant = g.pow(m).inv()?;
        Ok(DiscreteLog { generator: g, m, baby, giant })
    }

    /// log_g(x) in [0, p^n - 1).
    pub fn log(&self, x: &FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::invalid("log of zero"));
        }
        let q1 = x.spec.order() - 1;
        let mut y = x.clone();
        for i in 0..=self.m {
            if let Some(&j) = self.baby.get(&y.code()) {
                return Ok((i * self.m + j) % q1);
            }
            y = y.mul(&self.giant);
        }
        Err(Error::invariant("discrete log not found"))
    }
}

/// Table-driven GF(q), q <= 2^20: elements are integer codes, nonzero
/// elements also have logs with respect to a fixed primitive element.
#[derive(Clone, Debug)]
pub struct GfTable {
    pub spec: Arc<FieldSpec>,
    pub q: u64,
    /// exp[i] = code of g^i, i in [0, q-1).
    pub exp: Vec<u32>,
    /// log[code] for code != 0; log[0] unused.
    pub log: Vec<u32>,
}

impl GfTable {
    pub fn new(spec: &Arc<FieldSpec>) -> Result<Self> {
        let q = spec.order();
        if q > limits::MAX_FIELD_ORDER {
            return Err(Error::scale("MAX_FIELD_ORDER", limits::MAX_FIELD_ORDER, q));
        }
        let g = spec.primitive_element();
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = spec.one();
        for i in 0..q - 1 {
            let c = cur.code();
            exp.push(c as u32);
            log[c as usize] = i as u32;
            cur = cur.mul(&g);
        }
        Ok(GfTable { spec: spec.clone(), q, exp, log })
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p as u32;
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.spec.n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.spec.p as u32;
        if p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.spec.n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let q1 = self.q - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % q1;
        self.exp[e as usize]
    }

    /// g^e for any integer exponent (reduced mod q - 1).
    #[inline]
    pub fn g_pow(&self, e: i64) -> u32 {
        let q1 = (self.q - 1) as i64;
        self.exp[e.rem_euclid(q1) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let q1 = self.q - 1;
        let l = (self.log[a as usize] as u128 * e as u128 % q1 as u128) as usize;
        self.exp[l]
    }

    pub fn inv(&self, a: u32) -> u32 {
        let q1 = self.q - 1;
        self.exp[((q1 - self.log[a as usize] as u64) % q1) as usize]
    }

    /// x^(p^k).
    pub fn frob(&self, a: u32, k: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let q1 = self.q - 1;
        let pk = super::arith::pow_mod(self.spec.p, k as u64, q1);
        self.exp[(self.log[a as usize] as u64 * pk % q1) as usize]
    }

    pub fn element(&self, code: u32) -> FieldElement {
        self.spec.from_code(code as u64)
    }

    /// The prime-field coordinates of a code.
    pub fn coords(&self, mut code: u32) -> Vec<u64> {
        let p = self.spec.p as u32;
        (0..self.spec.n)
            .map(|_| {
                let c = code % p;
                code /= p;
                c as u64
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u64]) -> u32 {
        coords.iter().rev().fold(0u32, |acc, &c| acc * self.spec.p as u32 + c as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_basics() {
        let s = Arc::new(FieldSpec::new(2, 4).unwrap());
        assert_eq!(s.modulus, vec![1, 1, 0, 0, 1]);
        let g = s.primitive_element();
        assert_eq!(g.order().unwrap(), 15);
        for code in 0..16 {
            let x = s.from_code(code);
            assert_eq!(x.pow(16), x);
        }
    }

    #[test]
    fn frobenius_orbits() {
        let s4 = Arc::new(FieldSpec::new(2, 2).unwrap());
        let g = s4.primitive_element();
        assert_eq!(frobenius_orbit(&g).unwrap().len(), 2);
        let s16 = Arc::new(FieldSpec::new(2, 4).unwrap());
        let x = s16.primitive_element().pow(3); // order 5
        assert_eq!(x.order().unwrap(), 5);
        assert_eq!(frobenius_orbit(&x).unwrap().len(), 4);
        let one = s16.one();
        assert_eq!(frobenius_orbit(&one).unwrap(), vec![one.clone()]);
        assert!(frobenius_orbit(&s16.zero()).is_err());
    }

    #[test]
    fn dlog_and_tables_agree() {
        let s = Arc::new(FieldSpec::new(3, 3).unwrap());
        let d = DiscreteLog::new(&s).unwrap();
        let t = GfTable::new(&s).unwrap();
        for code in 1..27u64 {
            let x = s.from_code(code);
            assert_eq!(d.log(&x).unwrap(), t.log[code as usize] as u64);
            let y = s.from_code((code * 7) % 27);
            assert_eq!(x.add(&y).code() as u32, t.add(code as u32, y.code() as u32));
            assert_eq!(x.mul(&y).code() as u32, t.mul(code as u32, y.code() as u32));
        }
    }

    #[test]
    fn custom_modulus() {
        assert!(FieldSpec::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FieldSpec::with_modulus(2, vec![1, 1, 1]).is_ok());
        assert!(FieldSpec::new(4, 2).is_err());
    }
}
