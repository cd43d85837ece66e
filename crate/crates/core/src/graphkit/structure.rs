//! Group-side helpers for the classification checkers.

use std::collections::BTreeSet;

use crate::algebra::arith::{checked_pow, prime_divisors};
use crate::characters::{degree_oracle, DegreeMultiset};
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::Mat;
use crate::permgrp::{Perm, PermGroup, Quotient};
use crate::semilin::GModule;

/// Structural data shared by the checkers.
#[derive(Clone, Debug)]
pub struct Structure {
    pub fitting: PermGroup,
    pub fitting2: PermGroup,
    pub center: PermGroup,
    pub fitting_height: usize,
    pub order: u64,
}

impl Structure {
    pub fn compute(g: &PermGroup) -> Result<Structure> {
        let series = g.fitting_series()?;
        let fitting = series.get(1).cloned().unwrap_or_else(|| series[0].clone());
        let fitting2 = series.get(2).cloned().unwrap_or_else(|| fitting.clone());
        Ok(Structure { fitting, fitting2, center: g.center()?, fitting_height: series.len() - 1, order: g.size()? })
    }

    /// pi(K/F).
    pub fn pi_k_over_f(&self) -> Result<Vec<u64>> {
        Ok(prime_divisors(self.fitting2.size()? / self.fitting.size()?))
    }

    /// pi(G/K).
    pub fn pi_g_over_k(&self) -> Result<Vec<u64>> {
        Ok(prime_divisors(self.order / self.fitting2.size()?))
    }

    pub fn pi_g_over_f(&self) -> Result<Vec<u64>> {
        Ok(prime_divisors(self.order / self.fitting.size()?))
    }
}

/// Primes r with O_r(G) not contained in Z(G).
pub fn noncentral_primes(g: &PermGroup, center: &PermGroup) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for r in g.prime_divisors() {
        let o = g.o_p(r)?;
        if !o.is_subgroup_of(center) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Primes r with O_r(G) non-abelian.
pub fn nonabelian_primes(g: &PermGroup) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for r in g.prime_divisors() {
        if !g.o_p(r)?.is_abelian() {
            out.push(r);
        }
    }
    Ok(out)
}

/// Character degrees of G/N by the oracle.
pub fn quotient_degrees(g: &PermGroup, n: &PermGroup) -> Result<DegreeMultiset> {
    if n.is_trivial() {
        return degree_oracle(g);
    }
    let q = Quotient::new(g, n)?;
    degree_oracle(&q.group)
}

/// Whether K/F is cyclic, for F normal in K.
pub fn is_cyclic_quotient(k: &PermGroup, f: &PermGroup) -> Result<bool> {
    let index = k.size()? / f.size()?;
    if index == 1 {
        return Ok(true);
    }
    let mut found = false;
    k.for_each_element(|x| {
        if PermGroup::order_modulo(x, f) == index {
            found = true;
            return std::ops::ControlFlow::Break(());
        }
        std::ops::ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// An element x of G with x of order |G:F| and <x> F = G, when G/F is cyclic.
pub fn cyclic_complement(g: &PermGroup, f: &PermGroup) -> Result<Option<Perm>> {
    let index = g.size()? / f.size()?;
    let mut out = None;
    g.for_each_element(|x| {
        if x.order() == index && PermGroup::order_modulo(x, f) == index {
            out = Some(x.clone());
            return std::ops::ControlFlow::Break(());
        }
        std::ops::ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The elementary abelian section A/B as a GF(p)G-module under conjugation.
#[derive(Clone, Debug)]
pub struct Section {
    pub p: u64,
    pub dim: usize,
    pub module: GModule,
}

pub fn section_module(g: &PermGroup, a: &PermGroup, b: &PermGroup, p: u64) -> Result<Section> {
    if !b.is_subgroup_of(a) || !a.is_normal_in(g) || !b.is_normal_in(g) {
        return Err(Error::hyp("section needs normal subgroups B <= A"));
    }
    let index = a.size()? / b.size()?;
    let mut basis: Vec<Perm> = Vec::new();
    let mut span = b.clone();
    for x in a.generators() {
        if !span.contains(x) {
            basis.push(x.clone());
            span = span.join_elements(std::slice::from_ref(x));
        }
    }
    let dim = basis.len();
    if checked_pow(p, dim as u32) != Some(index) {
        return Err(Error::hyp(format!("section of order {index} is not elementary abelian of exponent {p}")));
    }
    if dim > limits::MAX_MODULE_DIM {
        return Err(Error::scale("MAX_MODULE_DIM", limits::MAX_MODULE_DIM, dim));
    }
    for x in &basis {
        if !b.contains(&x.pow(p as i64)) || basis.iter().any(|y| !b.contains(&Perm::commutator(x, y))) {
            return Err(Error::hyp("section is not elementary abelian"));
        }
    }
    // All combinations of the basis with their coordinates.
    let mut combos: Vec<(Perm, Vec<u64>)> = vec![(a.identity(), vec![0; dim])];
    for (i, x) in basis.iter().enumerate() {
        let mut next = Vec::with_capacity(combos.len() * p as usize);
        for (z, c) in &combos {
            let mut w = z.clone();
            for k in 0..p {
                let mut cc = c.clone();
                cc[i] = k;
                next.push((w.clone(), cc));
                w = w.mul(x);
            }
        }
        combos = next;
    }
    let coords = |y: &Perm| -> Result<Vec<u64>> {
        combos
            .iter()
            .find(|(z, _)| b.contains(&y.mul(&z.inv())))
            .map(|(_, c)| c.clone())
            .ok_or_else(|| Error::invariant("element outside the section"))
    };
    let mut action = Vec::new();
    for s in g.generators() {
        let cols = basis.iter().map(|x| coords(&x.conj(s))).collect::<Result<Vec<_>>>()?;
        action.push(Mat::from_cols(p, &cols));
    }
    if action.is_empty() {
        action.push(Mat::identity(p, dim));
    }
    Ok(Section { p, dim, module: GModule::new(p, action)? })
}

pub fn as_set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_sections() {
        let g = PermGroup::symmetric(4).unwrap();
        let st = Structure::compute(&g).unwrap();
        assert_eq!(st.fitting.size().unwrap(), 4);
        assert_eq!(st.fitting_height, 3);
        let sec = section_module(&g, &st.fitting, &PermGroup::trivial(4), 2).unwrap();
        assert_eq!(sec.dim, 2);
        assert!(sec.module.irreducibility(1).is_irreducible());
        assert!(!is_cyclic_quotient(&g, &st.fitting).unwrap());
        assert!(is_cyclic_quotient(&st.fitting2, &st.fitting).unwrap());
        assert_eq!(noncentral_primes(&g, &st.center).unwrap(), vec![2]);
    }
}
