//! Degrees from common eigenvectors of the class matrices modulo a splitting prime.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::degrees::{DegreeMultiset, Provenance};
use crate::algebra::arith::{inv_mod, is_prime, isqrt, lcm};
use crate::algebra::poly;
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::{span_basis, Mat};
use crate::permgrp::{ClassData, PermGroup};

/// Output of the oracle with the data behind it.
#[derive(Clone, Debug)]
pub struct DixonResult {
    pub multiset: DegreeMultiset,
    pub prime: u64,
    /// Degree of each character, in the order of `omegas`.
    pub degrees: Vec<u64>,
    /// Central character values mod `prime`, indexed by class.
    pub omegas: Vec<Vec<u64>>,
    pub classes: ClassData,
}

/// Smallest prime l = 1 mod `exponent` above max(2 ceil(sqrt(order)), 101).
pub fn dixon_prime(order: u64, exponent: u64) -> Result<u64> {
    let mut root = isqrt(order);
    if root * root < order {
        root += 1;
    }
    let floor = (2 * root).max(101);
    let mut l = (floor / exponent + 1) * exponent + 1;
    while l <= limits::ORACLE_MAX_PRIME {
        if l > floor && is_prime(l) {
            return Ok(l);
        }
        l += exponent;
    }
    Err(Error::scale("ORACLE_MAX_PRIME", limits::ORACLE_MAX_PRIME, format!("no splitting prime for exponent {exponent}")))
}

/// The multiset of irreducible character degrees.
pub fn degree_oracle(g: &PermGroup) -> Result<DegreeMultiset> {
    Ok(dixon(g)?.multiset)
}

pub fn dixon(g: &PermGroup) -> Result<DixonResult> {
    let order = g.size()?;
    if order > limits::ORACLE_MAX_ORDER {
        return Err(Error::scale("ORACLE_MAX_ORDER", limits::ORACLE_MAX_ORDER, order));
    }
    let classes = ClassData::new(g, limits::ORACLE_MAX_CLASSES).map_err(|e| match e {
        Error::Scale { limit, actual, .. } => Error::Scale { bound: "ORACLE_MAX_CLASSES", limit, actual },
        other => other,
    })?;
    let r = classes.classes.len();
    let exponent = classes.classes.iter().fold(1u64, |e, c| lcm(e, c.representative.order()));
    let l = dixon_prime(order, exponent)?;

    let table = &classes.table;
    let n = table.len();
    let inv: Vec<usize> = (0..n).map(|a| table.inv_index(a)).collect();
    let reps: Vec<usize> = classes.members.iter().map(|m| m[0] as usize).collect();
    let inv_class: Vec<usize> = reps.iter().map(|&x| classes.class_of[inv[x]] as usize).collect();

    // c[i][j][k] = #{x in C_i : x^-1 z_k in C_j}.
    let mut c = vec![0u32; r * r * r];
    for (i, mem) in classes.members.iter().enumerate() {
        for (k, &z) in reps.iter().enumerate() {
            for &x in mem {
                let y = table.mul_index(inv[x as usize], z);
                let j = classes.class_of[y] as usize;
                c[(i * r + j) * r + k] += 1;
            }
        }
    }
    let class_matrix = |i: usize| -> Mat {
        let mut m = Mat::zeros(l, r, r);
        for j in 0..r {
            for k in 0..r {
                m.set(j, k, c[(i * r + j) * r + k] as u64);
            }
        }
        m
    };

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let full: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![full];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(i);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(&a, &space, l, &mut rng)?);
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::invariant(format!("eigenspace splitting produced {} characters for {r} classes", spaces.len())));
    }

    let sizes: Vec<u64> = classes.classes.iter().map(|c| c.size).collect();
    let mut degrees = Vec::with_capacity(r);
    let mut omegas = Vec::with_capacity(r);
    let max_d = isqrt(order);
    for s in spaces {
        let w = &s[0];
        let w0 = w[0];
        let inv0 = inv_mod(w0, l).ok_or_else(|| Error::invariant("eigenvector vanishes on the identity class"))?;
        let w: Vec<u64> = w.iter().map(|&x| x * inv0 % l).collect();
        let mut s = 0u64;
        for k in 0..r {
            let term = w[k] * w[inv_class[k]] % l * inv_mod(sizes[k] % l, l).expect("class size below l") % l;
            s = (s + term) % l;
        }
        let s_inv = inv_mod(s, l).ok_or_else(|| Error::invariant("degenerate norm in degree recovery"))?;
        let d2 = (order % l) * s_inv % l;
        let d = (1..=max_d).find(|&d| d * d % l == d2).ok_or_else(|| Error::invariant("no integral degree matches"))?;
        degrees.push(d);
        omegas.push(w);
    }
    // Canonical order: by degree, then by omega vector.
    let mut idx: Vec<usize> = (0..r).collect();
    idx.sort_by(|&a, &b| (degrees[a], &omegas[a]).cmp(&(degrees[b], &omegas[b])));
    let degrees: Vec<u64> = idx.iter().map(|&i| degrees[i]).collect();
    let omegas: Vec<Vec<u64>> = idx.iter().map(|&i| omegas[i].clone()).collect();
    let multiset = DegreeMultiset::from_list(order as u128, &degrees, Provenance::Oracle)?;
    Ok(DixonResult { multiset, prime: l, degrees, omegas, classes })
}

/// Splits an invariant subspace into eigenspaces of `a`.
fn split_space(a: &Mat, basis: &[Vec<u64>], l: u64, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<Vec<u64>>>> {
    let t = basis.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).expect("nonzero basis vector")).collect();
    let mut rmat = Mat::zeros(l, t, t);
    for (j, b) in basis.iter().enumerate() {
        let v = a.mul_vec(b);
        for (li, &pc) in pivots.iter().enumerate() {
            rmat.set(li, j, v[pc]);
        }
    }
    let cp = rmat.charpoly();
    let roots = poly::roots(&cp, l, rng);
    let mut out = Vec::new();
    let mut total = 0;
    for mu in roots {
        let shifted = rmat.sub(&Mat::identity(l, t).scale(mu));
        let ns = shifted.nullspace();
        total += ns.len();
        let vecs: Vec<Vec<u64>> = ns
            .iter()
            .map(|cv| {
                let mut v = vec![0u64; basis[0].len()];
                for (coef, b) in cv.iter().zip(basis) {
                    if *coef != 0 {
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi = (*vi + coef * bi) % l;
                        }
                    }
                }
                v
            })
            .collect();
        out.push(span_basis(l, &vecs, basis[0].len()));
    }
    if total != t {
        return Err(Error::invariant("class matrix not diagonalizable over the splitting prime"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiset(g: &PermGroup) -> Vec<(u64, u64)> {
        degree_oracle(g).unwrap().pairs()
    }

    #[test]
    fn small_groups() {
        assert_eq!(multiset(&PermGroup::cyclic(7).unwrap()), vec![(1, 7)]);
        assert_eq!(multiset(&PermGroup::symmetric(3).unwrap()), vec![(1, 2), (2, 1)]);
        assert_eq!(multiset(&PermGroup::symmetric(4).unwrap()), vec![(1, 2), (2, 1), (3, 2)]);
        assert_eq!(multiset(&PermGroup::symmetric(5).unwrap()), vec![(1, 2), (4, 2), (5, 2), (6, 1)]);
    }

    #[test]
    fn prime_choice() {
        let l = dixon_prime(24, 12).unwrap();
        assert_eq!(l, 109);
        assert_eq!((l - 1) % 12, 0);
    }
}
