use num_bigint::BigUint;
use serde::Serialize;

use crate::algebra::arith::{gcd, is_prime, multiplicative_order};
use crate::error::{Error, Result};
use crate::limits;
use crate::semilin::{GModule, Irreducibility, SemilinearGroup};

/// One stratum of characters of P: the nontrivial characters of a chief
/// factor dual, realized as GF(p^n) with H acting by x -> c^e x^(p^k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerSpec {
    /// Multiplier exponent e of the twisted action.
    pub exponent: i64,
    /// theta(1) for the characters of P lying over a nontrivial lambda.
    pub theta_degree: u64,
    /// Number of such theta over each lambda, all with the inertia group of lambda.
    pub theta_count: u64,
    /// 1 for a single copy of the field, 2 for a sum of two with diagonal action.
    pub copies: u32,
}

impl LayerSpec {
    pub fn new(exponent: i64, theta_degree: u64) -> LayerSpec {
        LayerSpec { exponent, theta_degree, theta_count: 1, copies: 1 }
    }

    pub fn with_count(mut self, theta_count: u64) -> LayerSpec {
        self.theta_count = theta_count;
        self
    }

    pub fn with_copies(mut self, copies: u32) -> LayerSpec {
        self.copies = copies;
        self
    }
}

/// G = P x| H described by its layers, from the top of P down.
#[derive(Clone, Debug)]
pub struct CliffordSpec {
    pub name: String,
    pub h: SemilinearGroup,
    pub layers: Vec<LayerSpec>,
}

impl CliffordSpec {
    /// Validates the layers: p-power theta degrees, irreducible layer
    /// modules, and the sum of squares 1 + sum theta^2 count (q^c - 1) = |P|.
    pub fn new(name: impl Into<String>, h: SemilinearGroup, layers: Vec<LayerSpec>) -> Result<CliffordSpec> {
        let spec = CliffordSpec { name: name.into(), h, layers };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let p = self.h.p();
        if self.layers.is_empty() {
            return Err(Error::invalid("a spec needs at least one layer"));
        }
        if self.layers.len() == 1 && self.layers[0].theta_degree != 1 {
            return Err(Error::invalid("a single-layer spec describes an abelian P and needs theta degree 1"));
        }
        let q = BigUint::from(self.h.q());
        let mut sum = BigUint::from(1u32);
        for (i, l) in self.layers.iter().enumerate() {
            if !(1..=2).contains(&l.copies) {
                return Err(Error::invalid(format!("layer {}: copies must be 1 or 2", i + 1)));
            }
            if l.theta_count == 0 {
                return Err(Error::invalid(format!("layer {}: theta count must be positive", i + 1)));
            }
            let mut t = l.theta_degree;
            while t > 1 && t % p == 0 {
                t /= p;
            }
            if t != 1 || l.theta_degree == 0 {
                return Err(Error::invalid(format!("layer {}: theta degree {} is not a power of {p}", i + 1, l.theta_degree)));
            }
            let theta = BigUint::from(l.theta_degree);
            sum += &theta * &theta * l.theta_count * (q.pow(l.copies) - 1u32);
            if let Irreducibility::Reducible { .. } | Irreducibility::Undecided = layer_irreducibility(&self.h, l.exponent) {
                return Err(Error::hyp(format!("layer {}: module with exponent {} is not certified irreducible", i + 1, l.exponent)));
            }
        }
        let p_order = self.p_order();
        if sum != p_order {
            return Err(Error::invariant(format!(
                "layer profile gives {sum} characters' worth of squared degrees, |P| = {p_order}"
            )));
        }
        let theta_max = self.layers.iter().map(|l| l.theta_degree).max().unwrap_or(1);
        if p_order.clone() % (BigUint::from(theta_max) * theta_max) != BigUint::from(0u32) {
            return Err(Error::invalid("theta degree squared does not divide |P|"));
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.h.p()
    }

    pub fn n(&self) -> u32 {
        self.h.n()
    }

    pub fn q(&self) -> u64 {
        self.h.q()
    }

    /// |P| = q^(total copies).
    pub fn p_order(&self) -> BigUint {
        let c: u32 = self.layers.iter().map(|l| l.copies).sum();
        BigUint::from(self.q()).pow(c)
    }

    pub fn group_order(&self) -> Result<u128> {
        let o = self.p_order() * self.h.order();
        u128::try_from(o.clone()).map_err(|_| Error::Overflow(format!("group order {o}")))
    }

    /// The spec for G/N where N is the product of the layers after `k`.
    pub fn truncated(&self, k: usize) -> Result<CliffordSpec> {
        if k == 0 || k > self.layers.len() {
            return Err(Error::invalid(format!("cannot keep {k} of {} layers", self.layers.len())));
        }
        CliffordSpec::new(format!("{}/top{k}", self.name), self.h.clone(), self.layers[..k].to_vec())
    }
}

/// Irreducibility of GF(q) under H acting with multiplier exponent e: first
/// by the order of the multipliers, then by the module machinery.
pub fn layer_irreducibility(h: &SemilinearGroup, e: i64) -> Irreducibility {
    let q1 = (h.q() - 1).max(1);
    let d = h.mult_index();
    let e_red = e.rem_euclid(q1 as i64) as u64;
    let mult = q1 / gcd(e_red * d % q1, q1);
    if h.n() == 1 || (mult > 1 && multiplicative_order(h.p() % mult, mult) == Some(h.n() as u64)) {
        return Irreducibility::Irreducible { certificate: format!("multipliers of order {mult} generate the field") };
    }
    if h.n() as usize > limits::MAX_MODULE_DIM || !is_prime(h.p()) {
        return Irreducibility::Undecided;
    }
    match GModule::from_semilinear(h, e) {
        Ok(m) => m.irreducibility(0x5eed),
        Err(_) => Irreducibility::Undecided,
    }
}
