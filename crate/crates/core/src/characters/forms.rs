//! Commutator forms of central characters and the ramification count.

use std::collections::HashMap;

use serde::Serialize;

use super::dixon::{dixon, DixonResult};
use crate::algebra::arith::{checked_pow, pow_mod};
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::Mat;
use crate::permgrp::{Perm, PermGroup};

/// A skew matrix over GF(p) with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingForm {
    pub p: u64,
    pub matrix: Mat,
}

impl AlternatingForm {
    pub fn new(matrix: Mat) -> Result<AlternatingForm> {
        let p = matrix.p;
        if !matrix.is_square() {
            return Err(Error::invalid("form matrix is not square"));
        }
        for i in 0..matrix.rows {
            if matrix.get(i, i) != 0 {
                return Err(Error::invalid("form has a nonzero diagonal entry"));
            }
            for j in 0..i {
                if (matrix.get(i, j) + matrix.get(j, i)) % p != 0 {
                    return Err(Error::invalid("form is not skew"));
                }
            }
        }
        Ok(AlternatingForm { p, matrix })
    }

    pub fn dimension(&self) -> usize {
        self.matrix.rows
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank() < self.dimension()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.data.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationRecord {
    /// Base-p digits give the functional's coefficients on the basis of N.
    pub lambda_index: u64,
    pub z_lambda_order: u64,
    pub fully_ramified: bool,
    pub form_rank: usize,
}

/// Coordinates for N and P/N under the hypotheses of the ramification lemma.
#[derive(Clone, Debug)]
pub struct CentralSetup {
    pub p: u64,
    /// Basis of N.
    pub n_basis: Vec<Perm>,
    /// Representatives of a basis of P/N.
    pub quotient_basis: Vec<Perm>,
    coords: HashMap<Box<[u16]>, Vec<u64>>,
    n_chain_base: Vec<usize>,
    /// Coordinates of [a_i, a_j] in N, row-major.
    commutators: Vec<Vec<u64>>,
}

impl CentralSetup {
    /// Checks each hypothesis and fixes bases.
    pub fn new(p_grp: &PermGroup, n: &PermGroup) -> Result<CentralSetup> {
        let p = p_grp.prime().ok_or_else(|| Error::hyp("P is not a nontrivial p-group"))?;
        if !n.is_subgroup_of(p_grp) {
            return Err(Error::hyp("N is not contained in P"));
        }
        if !n.is_trivial() && n.prime() != Some(p) {
            return Err(Error::hyp("N is not a p-group for the prime of P"));
        }
        if !n.is_elementary_abelian() {
            return Err(Error::hyp("N is not elementary abelian"));
        }
        for x in n.generators() {
            if p_grp.generators().iter().any(|g| !g.commutes_with(x)) {
                return Err(Error::hyp("N is not central in P"));
            }
        }
        for a in p_grp.generators() {
            if !n.contains(&a.pow(p as i64)) {
                return Err(Error::hyp("Frattini subgroup of P not contained in N: p-th power outside N"));
            }
            for b in p_grp.generators() {
                if !n.contains(&Perm::commutator(a, b)) {
                    return Err(Error::hyp("Frattini subgroup of P not contained in N: commutator outside N"));
                }
            }
        }
        let n_order = n.size()?;
        if n_order > limits::MAX_ENUM_ORDER {
            return Err(Error::scale("MAX_ENUM_ORDER", limits::MAX_ENUM_ORDER, n_order));
        }

        let mut n_basis = Vec::new();
        let mut span = PermGroup::trivial(p_grp.degree());
        for x in n.generators() {
            if !span.contains(x) {
                span = span.join_elements(std::slice::from_ref(x));
                n_basis.push(x.clone());
            }
        }
        let mut quotient_basis = Vec::new();
        let mut span = n.clone();
        for x in p_grp.generators() {
            if !span.contains(x) {
                span = span.join_elements(std::slice::from_ref(x));
                quotient_basis.push(x.clone());
            }
        }

        // Enumerate N by coordinate vectors.
        let m = n_basis.len();
        let n_chain_base = n.chain().base();
        let mut coords = HashMap::with_capacity(n_order as usize);
        let mut digits = vec![0u64; m];
        for _ in 0..n_order {
            let mut x = p_grp.identity();
            for (b, &d) in n_basis.iter().zip(&digits) {
                x = x.mul(&b.pow(d as i64));
            }
            coords.insert(key(&n_chain_base, &x), digits.clone());
            for d in digits.iter_mut() {
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
        }

        let k = quotient_basis.len();
        let mut setup = CentralSetup { p, n_basis, quotient_basis, coords, n_chain_base, commutators: Vec::with_capacity(k * k) };
        for i in 0..k {
            for j in 0..k {
                let c = Perm::commutator(&setup.quotient_basis[i], &setup.quotient_basis[j]);
                let v = setup.coordinates(&c).ok_or_else(|| Error::invariant("commutator outside N"))?;
                setup.commutators.push(v);
            }
        }
        Ok(setup)
    }

    /// dim N over GF(p).
    pub fn m(&self) -> usize {
        self.n_basis.len()
    }

    /// dim P/N over GF(p).
    pub fn n(&self) -> usize {
        self.quotient_basis.len()
    }

    pub fn dual_size(&self) -> Result<u64> {
        checked_pow(self.p, self.m() as u32).ok_or_else(|| Error::Overflow("p^m".into()))
    }

    /// Coordinates of an element of N.
    pub fn coordinates(&self, x: &Perm) -> Option<Vec<u64>> {
        self.coords.get(&key(&self.n_chain_base, x)).cloned()
    }

    /// Functional coefficients encoded by a dual index.
    pub fn functional(&self, lambda_index: u64) -> Result<Vec<u64>> {
        if lambda_index >= self.dual_size()? {
            return Err(Error::invalid(format!("character index {lambda_index} out of range")));
        }
        let mut idx = lambda_index;
        Ok((0..self.m())
            .map(|_| {
                let d = idx % self.p;
                idx /= self.p;
                d
            })
            .collect())
    }

    pub fn form(&self, lambda: &[u64]) -> AlternatingForm {
        let k = self.n();
        let mut mat = Mat::zeros(self.p, k, k);
        for i in 0..k {
            for j in 0..k {
                let c = &self.commutators[i * k + j];
                let v = c.iter().zip(lambda).fold(0u64, |acc, (a, b)| (acc + a * b) % self.p);
                mat.set(i, j, v);
            }
        }
        AlternatingForm { p: self.p, matrix: mat }
    }

    pub fn record(&self, lambda_index: u64) -> Result<RamificationRecord> {
        let f = self.form(&self.functional(lambda_index)?);
        let rank = f.rank();
        let radical = (self.n() - rank) as u32;
        let n_order = self.dual_size()?;
        let z = n_order * checked_pow(self.p, radical).ok_or_else(|| Error::Overflow("|Z_lambda|".into()))?;
        Ok(RamificationRecord { lambda_index, z_lambda_order: z, fully_ramified: rank == self.n(), form_rank: rank })
    }
}

fn key(base: &[usize], x: &Perm) -> Box<[u16]> {
    base.iter().map(|&b| x.apply(b) as u16).collect()
}

/// The form (aN, bN) -> f([a, b]) for the functional with coefficients `lambda`.
pub fn commutator_form(p_grp: &PermGroup, n: &PermGroup, lambda: &[u64]) -> Result<AlternatingForm> {
    let setup = CentralSetup::new(p_grp, n)?;
    if lambda.len() != setup.m() {
        return Err(Error::invalid(format!("functional has {} coefficients, N has dimension {}", lambda.len(), setup.m())));
    }
    let lambda: Vec<u64> = lambda.iter().map(|x| x % setup.p).collect();
    Ok(setup.form(&lambda))
}

#[derive(Clone, Debug, Serialize)]
pub struct RamificationCount {
    pub p: u64,
    pub m: usize,
    pub n: usize,
    pub count: u64,
    pub records: Vec<RamificationRecord>,
    /// p^(m - floor(n/2)) when the lemma applies (n >= 1 and 2m > n).
    pub bound: Option<u64>,
}

impl RamificationCount {
    /// `None` when the lemma does not apply.
    pub fn bound_holds(&self) -> Option<bool> {
        self.bound.map(|b| self.count >= b)
    }
}

pub fn count_non_fully_ramified(p_grp: &PermGroup, n: &PermGroup) -> Result<RamificationCount> {
    let setup = CentralSetup::new(p_grp, n)?;
    count_with(&setup)
}

pub fn count_with(setup: &CentralSetup) -> Result<RamificationCount> {
    let size = setup.dual_size()?;
    let mut records = Vec::with_capacity(size as usize);
    for i in 0..size {
        records.push(setup.record(i)?);
    }
    let count = records.iter().filter(|r| !r.fully_ramified).count() as u64;
    let (m, n) = (setup.m(), setup.n());
    let bound = if n >= 1 && 2 * m > n { checked_pow(setup.p, (m - n / 2) as u32) } else { None };
    Ok(RamificationCount { p: setup.p, m, n, count, records, bound })
}

/// Character-side ramification data from one oracle run on P.
#[derive(Clone, Debug)]
pub struct CharacterRamification {
    setup: CentralSetup,
    oracle: DixonResult,
    zeta: u64,
    basis_classes: Vec<usize>,
    index: u64,
}

impl CharacterRamification {
    pub fn new(p_grp: &PermGroup, n: &PermGroup) -> Result<CharacterRamification> {
        let setup = CentralSetup::new(p_grp, n)?;
        Self::with_setup(p_grp, setup)
    }

    pub fn with_setup(p_grp: &PermGroup, setup: CentralSetup) -> Result<CharacterRamification> {
        let order = p_grp.size()?;
        let oracle = dixon(p_grp)?;
        let l = oracle.prime;
        let e = (l - 1) / setup.p;
        let zeta = (2..l).map(|a| pow_mod(a, e, l)).find(|&z| z != 1).expect("l = 1 mod p");
        let basis_classes = setup
            .n_basis
            .iter()
            .map(|b| {
                let idx = oracle.classes.table.index_of(b).expect("element of P");
                oracle.classes.class_of[idx] as usize
            })
            .collect();
        let index = order / setup.dual_size()?;
        Ok(CharacterRamification { setup, oracle, zeta, basis_classes, index })
    }

    pub fn setup(&self) -> &CentralSetup {
        &self.setup
    }

    /// Degrees of the irreducible characters lying over the given character of N.
    pub fn degrees_over(&self, lambda_index: u64) -> Result<Vec<u64>> {
        let f = self.setup.functional(lambda_index)?;
        let l = self.oracle.prime;
        let targets: Vec<u64> = f.iter().map(|&c| pow_mod(self.zeta, c, l)).collect();
        Ok(self
            .oracle
            .omegas
            .iter()
            .zip(&self.oracle.degrees)
            .filter(|(w, _)| self.basis_classes.iter().zip(&targets).all(|(&c, &t)| w[c] == t))
            .map(|(_, &d)| d)
            .collect())
    }

    pub fn is_fully_ramified(&self, lambda_index: u64) -> Result<bool> {
        let over = self.degrees_over(lambda_index)?;
        Ok(over.len() == 1 && over[0] * over[0] == self.index)
    }
}

/// Whether the given character of N is fully ramified in P, from the degree oracle.
pub fn fully_ramified_via_characters(p_grp: &PermGroup, n: &PermGroup, lambda_index: u64) -> Result<bool> {
    CharacterRamification::new(p_grp, n)?.is_fully_ramified(lambda_index)
}
