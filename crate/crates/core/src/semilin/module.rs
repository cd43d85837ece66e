//! Modules over GF(p) given by generator matrices: irreducibility and
//! realization inside a semilinear group.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::group::{Elem, SemilinearGroup};
use crate::algebra::arith::checked_pow;
use crate::algebra::poly;
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::{spin, Mat};
use crate::permgrp::{Perm, PermGroup};

const TRIALS: usize = 20;

/// GF(p)-module: one invertible matrix per generator, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    pub p: u64,
    pub dim: usize,
    pub action: Vec<Mat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Irreducibility {
    Irreducible { certificate: String },
    /// A vector whose spin is a proper nonzero submodule (of the dual if `dual`).
    Reducible { vector: Vec<u64>, submodule_dim: usize, dual: bool },
    Undecided,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }
}

impl GModule {
    pub fn new(p: u64, action: Vec<Mat>) -> Result<GModule> {
        let dim = action.first().map(|m| m.rows).ok_or_else(|| Error::invalid("module without generators"))?;
        if dim == 0 {
            return Err(Error::invalid("zero-dimensional module"));
        }
        if dim > limits::MAX_MODULE_DIM {
            return Err(Error::scale("MAX_MODULE_DIM", limits::MAX_MODULE_DIM, dim));
        }
        for m in &action {
            if m.p != p || m.rows != dim || m.cols != dim {
                return Err(Error::invalid("generator matrices of inconsistent shape or field"));
            }
            if m.det() == 0 {
                return Err(Error::invalid("singular generator matrix"));
            }
        }
        Ok(GModule { p, dim, action })
    }

    /// A module for a permutation group, spot-checked on random words: the
    /// matrix of a word raised to the order of its permutation must be 1.
    pub fn for_group(p: u64, g: &PermGroup, action: Vec<Mat>, seed: u64) -> Result<GModule> {
        if action.len() != g.generators().len() {
            return Err(Error::invalid("one matrix per group generator required"));
        }
        let m = GModule::new(p, action)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..TRIALS {
            let len = rng.gen_range(1..=8);
            let mut x = g.identity();
            let mut a = Mat::identity(p, m.dim);
            for _ in 0..len {
                let i = rng.gen_range(0..g.generators().len());
                x = x.mul(&g.generators()[i]);
                a = m.action[i].mul(&a);
            }
            if !a.pow(x.order()).is_identity() {
                return Err(Error::hyp("matrices do not respect the group relations"));
            }
        }
        Ok(m)
    }

    /// GF(q) over GF(p) with (A, k) acting as x -> g^(eA) x^(p^k).
    pub fn from_semilinear(h: &SemilinearGroup, e: i64) -> Result<GModule> {
        let action = h.generators().into_iter().map(|x| semilinear_matrix(h, e, x)).collect::<Vec<_>>();
        let action = if action.iter().all(|m| m.is_identity()) { vec![Mat::identity(h.p(), h.n() as usize)] } else { action };
        GModule::new(h.p(), action)
    }

    pub fn dual(&self) -> GModule {
        let action = self.action.iter().map(|m| m.inverse().expect("invertible").transpose()).collect();
        GModule { p: self.p, dim: self.dim, action }
    }

    fn transposed(&self) -> Vec<Mat> {
        self.action.iter().map(|m| m.transpose()).collect()
    }

    fn random_word(&self, rng: &mut ChaCha8Rng) -> Mat {
        let mut a = Mat::identity(self.p, self.dim);
        for _ in 0..rng.gen_range(1..=4) {
            a = a.mul(&self.action[rng.gen_range(0..self.action.len())]);
        }
        a
    }

    /// Norton-style test with seeded random algebra elements, then exhaustive
    /// spinning when p^dim is small.
    pub fn irreducibility(&self, seed: u64) -> Irreducibility {
        let p = self.p;
        let n = self.dim;
        if n == 1 {
            return Irreducibility::Irreducible { certificate: "dimension one".into() };
        }
        for (i, a) in self.action.iter().enumerate() {
            if poly::is_irreducible(&a.charpoly(), p) {
                return Irreducibility::Irreducible { certificate: format!("generator {i} has irreducible characteristic polynomial") };
            }
        }
        let trans = self.transposed();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..TRIALS {
            let mut theta = Mat::zeros(p, n, n);
            for _ in 0..3 {
                let c = rng.gen_range(1..p.max(2)) % p;
                theta = theta.add(&self.random_word(&mut rng).scale(c));
            }
            if poly::is_irreducible(&theta.charpoly(), p) {
                // An element of the algebra acting irreducibly.
                return Irreducibility::Irreducible { certificate: "algebra element with irreducible characteristic polynomial".into() };
            }
            for r in poly::roots(&theta.charpoly(), p, &mut rng) {
                let shifted = theta.sub(&Mat::identity(p, n).scale(r));
                let ker = shifted.nullspace();
                let v = &ker[0];
                let s = spin(p, v, &self.action);
                if s.len() < n {
                    return Irreducibility::Reducible { vector: v.clone(), submodule_dim: s.len(), dual: false };
                }
                let kt = shifted.transpose().nullspace();
                let w = &kt[0];
                let st = spin(p, w, &trans);
                if st.len() < n {
                    return Irreducibility::Reducible { vector: w.clone(), submodule_dim: st.len(), dual: true };
                }
                if ker.len() == 1 {
                    return Irreducibility::Irreducible { certificate: "one-dimensional eigenspace spins to the module and its dual".into() };
                }
            }
        }
        match checked_pow(p, n as u32) {
            Some(total) if total <= limits::EXHAUSTIVE_SPIN_MAX => {
                let mut v = vec![0u64; n];
                for code in 1..total {
                    let mut c = code;
                    for x in v.iter_mut() {
                        *x = c % p;
                        c /= p;
                    }
                    // One representative per line: leading coordinate 1.
                    if v.iter().find(|&&x| x != 0) != Some(&1) {
                        continue;
                    }
                    let s = spin(p, &v, &self.action);
                    if s.len() < n {
                        return Irreducibility::Reducible { vector: v.clone(), submodule_dim: s.len(), dual: false };
                    }
                }
                Irreducibility::Irreducible { certificate: "exhaustive spinning".into() }
            }
            _ => Irreducibility::Undecided,
        }
    }

    /// All elements of the matrix group generated by the action.
    pub fn image(&self) -> Result<Vec<Mat>> {
        let id = Mat::identity(self.p, self.dim);
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        seen.insert(id.data.clone());
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.action {
                let y = g.mul(&x);
                if seen.insert(y.data.clone()) {
                    if out.len() as u64 >= limits::MAX_ENUM_ORDER {
                        return Err(Error::scale("MAX_ENUM_ORDER", limits::MAX_ENUM_ORDER, "matrix group closure"));
                    }
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }
}

/// Matrix of a semilinear element in the polynomial basis 1, x, x^2, ...
pub fn semilinear_matrix(h: &SemilinearGroup, e: i64, x: Elem) -> Mat {
    let t = h.table();
    let n = h.n() as usize;
    let q1 = (h.q() - 1).max(1) as i64;
    let mult = t.g_pow((e.rem_euclid(q1) as i128 * x.a as i128 % q1 as i128) as i64);
    let cols: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let basis = checked_pow(h.p(), i as u32).expect("fits") as u32;
            t.coords(t.mul(mult, t.frob(basis, x.k)))
        })
        .collect();
    Mat::from_cols(h.p(), &cols)
}

/// Field structure found inside the image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GammaEmbedding {
    Embedded {
        field_order: u64,
        /// Order of the normal irreducible cyclic subgroup used.
        cyclic_order: u64,
        /// Per generator, the k with g^-1 c g = c^(p^k).
        galois_powers: Vec<u32>,
    },
    NotEmbedded {
        reason: String,
        image_order: u64,
        candidates_checked: u64,
    },
}

impl GammaEmbedding {
    pub fn is_embedded(&self) -> bool {
        matches!(self, GammaEmbedding::Embedded { .. })
    }
}

/// Looks for a normal cyclic subgroup C acting irreducibly whose centralizer
/// algebra is a field of order p^dim normalized by every generator.
pub fn embeds_in_gamma(m: &GModule, seed: u64) -> Result<GammaEmbedding> {
    match m.irreducibility(seed) {
        Irreducibility::Irreducible { .. } => {}
        Irreducibility::Reducible { .. } => return Err(Error::hyp("module is reducible")),
        Irreducibility::Undecided => return Err(Error::hyp("irreducibility could not be certified")),
    }
    let p = m.p;
    let n = m.dim;
    let image = m.image()?;
    let inverses: Vec<Mat> = m.action.iter().map(|g| g.inverse().expect("invertible")).collect();
    let mut checked = 0u64;
    let mut tried: HashSet<Vec<u64>> = HashSet::new();
    for x in &image {
        if !poly::is_irreducible(&x.charpoly(), p) || poly::degree(&x.charpoly()) != Some(n) {
            continue;
        }
        if tried.contains(&x.data) {
            continue;
        }
        checked += 1;
        // Powers of x, keyed to their exponents.
        let mut powers: HashMap<Vec<u64>, u64> = HashMap::new();
        let mut y = Mat::identity(p, n);
        let mut e = 0u64;
        loop {
            powers.insert(y.data.clone(), e);
            y = y.mul(x);
            e += 1;
            if y.is_identity() {
                break;
            }
        }
        let order = e;
        let mut galois = Vec::with_capacity(m.action.len());
        let mut normal = true;
        for (g, gi) in m.action.iter().zip(&inverses) {
            let c = gi.mul(x).mul(g);
            match powers.get(&c.data) {
                Some(&ex) => {
                    // ex = p^k mod order for some k < n.
                    let k = (0..n as u32).find(|&k| crate::algebra::arith::pow_mod(p, k as u64, order) == ex % order);
                    match k {
                        Some(k) => galois.push(k),
                        None => {
                            normal = false;
                            break;
                        }
                    }
                }
                None => {
                    normal = false;
                    break;
                }
            }
        }
        for k in powers.keys() {
            tried.insert(k.clone());
        }
        if !normal {
            continue;
        }
        if centralizer_algebra_dim(x) != n {
            return Err(Error::invariant("centralizer of an irreducible cyclic subgroup is not a field of order p^dim"));
        }
        let field_order = checked_pow(p, n as u32).ok_or_else(|| Error::Overflow("p^dim".into()))?;
        return Ok(GammaEmbedding::Embedded { field_order, cyclic_order: order, galois_powers: galois });
    }
    Ok(GammaEmbedding::NotEmbedded {
        reason: "no normal cyclic subgroup of the image acts irreducibly".into(),
        image_order: image.len() as u64,
        candidates_checked: checked,
    })
}

/// Dimension of {Y : XY = YX}.
pub fn centralizer_algebra_dim(x: &Mat) -> usize {
    let n = x.rows;
    let p = x.p;
    // Unknown Y_{ab} at index a*n+b; equation (XY - YX)_{ij} = 0.
    let mut sys = Mat::zeros(p, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                let v = sys.get(row, k * n + j);
                sys.set(row, k * n + j, v + x.get(i, k));
                let v = sys.get(row, i * n + k);
                sys.set(row, i * n + k, v + p - x.get(k, j));
            }
        }
    }
    n * n - sys.rank()
}

/// Permutation action of a semilinear group on the logs of nonzero vectors.
pub fn semilinear_perm_group(h: &SemilinearGroup, e: i64) -> Result<PermGroup> {
    let q1 = (h.q() - 1) as usize;
    if q1 > limits::MAX_DEGREE {
        return Err(Error::scale("MAX_DEGREE", limits::MAX_DEGREE, q1));
    }
    let gens = h
        .generators()
        .into_iter()
        .map(|x| Perm::from_images(&(0..q1 as u64).map(|b| h.act(e, x, b) as usize).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(q1, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilin::group::field_table;

    #[test]
    fn gamma16_embeds() {
        let h = SemilinearGroup::gamma(field_table(2, 4).unwrap()).unwrap();
        let m = GModule::from_semilinear(&h, 1).unwrap();
        assert!(m.irreducibility(0).is_irreducible());
        assert_eq!(m.image().unwrap().len(), 60);
        match embeds_in_gamma(&m, 0).unwrap() {
            GammaEmbedding::Embedded { field_order, .. } => assert_eq!(field_order, 16),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn frobenius_alone_is_reducible() {
        let h = SemilinearGroup::galois(field_table(2, 4).unwrap()).unwrap();
        let m = GModule::from_semilinear(&h, 1).unwrap();
        assert!(matches!(m.irreducibility(0), Irreducibility::Reducible { .. }));
    }

    fn s3_plane(p: u64) -> GModule {
        // Permutation module of S3 on the sum-zero plane, basis e0 - e2, e1 - e2.
        let g = PermGroup::symmetric(3).unwrap();
        let mats: Vec<Mat> = g
            .generators()
            .iter()
            .map(|s| {
                let delta = |x: usize, j: usize| u64::from(x == j);
                let col = |i: usize| -> Vec<u64> { (0..2).map(|j| (delta(s.apply(i), j) + p - delta(s.apply(2), j)) % p).collect() };
                Mat::from_cols(p, &[col(0), col(1)])
            })
            .collect();
        GModule::for_group(p, &g, mats, 0).unwrap()
    }

    #[test]
    fn s3_planes() {
        // Over GF(5) the 3-cycle acts irreducibly, so S3 sits inside Gamma(25).
        let m = s3_plane(5);
        assert!(m.irreducibility(0).is_irreducible());
        assert_eq!(m.image().unwrap().len(), 6);
        assert!(embeds_in_gamma(&m, 0).unwrap().is_embedded());
        // Over GF(7) the 3-cycle is diagonalizable and no cyclic normal subgroup is irreducible.
        let m = s3_plane(7);
        assert!(m.irreducibility(0).is_irreducible());
        assert!(!embeds_in_gamma(&m, 0).unwrap().is_embedded());
    }
}
