//! Factor groups realized by the action on cosets of a core-free-modulo-N subgroup.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::group::PermGroup;
use super::perm::Perm;
use crate::algebra::arith::is_prime;
use crate::error::{Error, Result};
use crate::limits;

/// Attempts made when enlarging the point stabilizer.
const GREEDY_ATTEMPTS: usize = 200;

#[derive(Clone, Debug)]
pub struct Quotient {
    /// G/N as a permutation group on cosets of `stabilizer`.
    pub group: PermGroup,
    pub stabilizer: PermGroup,
    reps: Vec<Perm>,
    orbit_of: Vec<u32>,
    n_orbits: usize,
    buckets: HashMap<Vec<u16>, Vec<u32>>,
}

impl Quotient {
    /// G/N for a normal subgroup N.
    pub fn new(g: &PermGroup, n: &PermGroup) -> Result<Quotient> {
        if !n.is_subgroup_of(g) || !n.is_normal_in(g) {
            return Err(Error::hyp("quotient by a non-normal subgroup"));
        }
        let stab = greedy_stabilizer(g, n)?;
        Quotient::on_cosets(g, &stab)
    }

    /// Action of G on the right cosets of `s`.
    pub fn on_cosets(g: &PermGroup, s: &PermGroup) -> Result<Quotient> {
        let index = (g.order_u128()? / s.order_u128()?) as usize;
        if index > limits::MAX_DEGREE {
            return Err(Error::scale("MAX_DEGREE", limits::MAX_DEGREE, index));
        }
        let orbits = s.orbits();
        let mut orbit_of = vec![0u32; g.degree()];
        for (i, o) in orbits.iter().enumerate() {
            for &x in o {
                orbit_of[x] = i as u32;
            }
        }
        let mut q = Quotient {
            group: PermGroup::trivial(index),
            stabilizer: s.clone(),
            reps: vec![g.identity()],
            orbit_of,
            n_orbits: orbits.len(),
            buckets: HashMap::new(),
        };
        let k = q.key(&g.identity());
        q.buckets.insert(k, vec![0]);
        let mut images: Vec<Vec<usize>> = vec![Vec::new(); g.generators().len()];
        let mut i = 0;
        while i < q.reps.len() {
            for (gi, x) in g.generators().iter().enumerate() {
                let y = q.reps[i].mul(x);
                let j = match q.find(&y) {
                    Some(j) => j,
                    None => {
                        let j = q.reps.len();
                        let k = q.key(&y);
                        q.buckets.entry(k).or_default().push(j as u32);
                        q.reps.push(y);
                        j
                    }
                };
                images[gi].push(j);
            }
            i += 1;
        }
        if q.reps.len() != index {
            return Err(Error::invariant("coset enumeration count mismatch"));
        }
        let gens = images.iter().map(|im| Perm::from_images(im)).collect::<Result<Vec<_>>>()?;
        q.group = PermGroup::new(index, gens)?;
        Ok(q)
    }

    /// Coset invariant: for each stabilizer orbit O, the least point of O^x.
    fn key(&self, x: &Perm) -> Vec<u16> {
        let mut k = vec![u16::MAX; self.n_orbits];
        for (pt, &o) in self.orbit_of.iter().enumerate() {
            let im = x.apply(pt) as u16;
            let slot = &mut k[o as usize];
            if im < *slot {
                *slot = im;
            }
        }
        k
    }

    fn find(&self, y: &Perm) -> Option<usize> {
        let bucket = self.buckets.get(&self.key(y))?;
        bucket.iter().map(|&j| j as usize).find(|&j| self.stabilizer.contains(&y.mul(&self.reps[j].inv())))
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// Image of an element of G in the factor group.
    pub fn image(&self, x: &Perm) -> Perm {
        let img: Vec<u16> = self
            .reps
            .iter()
            .map(|r| self.find(&r.mul(x)).expect("coset of an element of G") as u16)
            .collect();
        Perm::from_raw(img)
    }

    pub fn image_subgroup(&self, h: &PermGroup) -> PermGroup {
        let gens = h.generators().iter().map(|x| self.image(x)).collect();
        PermGroup::new(self.degree(), gens).expect("image of a subgroup")
    }

    /// Full preimage in G of a subgroup of the factor group.
    pub fn preimage(&self, g: &PermGroup, q: &PermGroup) -> Result<PermGroup> {
        g.filter_subgroup(|x| q.contains(&self.image(x)))
    }
}

/// A maximal-by-greedy subgroup S with N <= S and core_G(S) = N.
fn greedy_stabilizer(g: &PermGroup, n: &PermGroup) -> Result<PermGroup> {
    let mut s = n.clone();
    let n_order = n.order();
    let mut candidates: Vec<Perm> = Vec::new();
    g.for_each_element(|x| {
        if is_prime(x.order()) && !n.contains(x) {
            candidates.push(x.clone());
            if candidates.len() >= GREEDY_ATTEMPTS * 4 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    let mut attempts = 0;
    for x in candidates {
        if attempts >= GREEDY_ATTEMPTS {
            break;
        }
        if s.contains(&x) {
            continue;
        }
        attempts += 1;
        let t = s.join_elements(std::slice::from_ref(&x));
        if t.order() == g.order() {
            continue;
        }
        if g.core(&t)?.order() == n_order {
            s = t;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_mod_v4() {
        let g = PermGroup::symmetric(4).unwrap();
        let v4 = g
            .subgroup(vec![
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ])
            .unwrap();
        let q = Quotient::new(&g, &v4).unwrap();
        assert_eq!(q.group.size().unwrap(), 6);
        assert!(q.degree() <= 6);
        let pre = q.preimage(&g, &PermGroup::trivial(q.degree())).unwrap();
        assert_eq!(pre.size().unwrap(), 4);
    }
}
