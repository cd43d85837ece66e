use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::spec::CliffordSpec;
use crate::characters::{DegreeMultiset, Provenance};
use crate::error::{Error, Result};
use crate::limits;
use crate::semilin::{Elem, SemilinearGroup, StabilizerShape};

/// Orbits of H with a common size and stabilizer shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub size: u64,
    pub count: u64,
    pub stabilizer_order: u64,
    /// cd of the stabilizer with multiplicities.
    pub stabilizer_degrees: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerBreakdown {
    pub exponent: i64,
    pub theta_degree: u64,
    pub theta_count: u64,
    pub copies: u32,
    pub orbits: Vec<OrbitClass>,
    /// Degrees contributed by this layer.
    pub degrees: BTreeMap<u64, u64>,
}

fn group_orbits(h: &SemilinearGroup, items: impl IntoIterator<Item = (u64, StabilizerShape)>) -> Vec<OrbitClass> {
    let mut acc: BTreeMap<(u64, u64, u64, u32), u64> = BTreeMap::new();
    for (size, s) in items {
        *acc.entry((size, s.normal_order, s.top_order, s.galois_power)).or_insert(0) += 1;
    }
    acc.into_iter()
        .map(|((size, normal_order, top_order, galois_power), count)| {
            let shape = StabilizerShape { normal_order, top_order, galois_power };
            OrbitClass { size, count, stabilizer_order: shape.order(), stabilizer_degrees: shape.degrees(h.p(), h.n()) }
        })
        .collect()
}

/// Orbits on nonzero pairs (x1, x2) with the diagonal twisted action.
fn pair_orbits(h: &SemilinearGroup, e: i64) -> Result<Vec<(u64, StabilizerShape)>> {
    let q = h.q();
    let points = q.checked_mul(q).filter(|&n| n <= limits::MAX_CLOSURE);
    let points = points.ok_or_else(|| Error::scale("MAX_CLOSURE", limits::MAX_CLOSURE, format!("{q}^2")))? as usize;
    // Coordinate code: 0 for zero, 1 + log otherwise.
    let act = |x: Elem, c: u64| if c == 0 { 0 } else { 1 + h.act(e, x, c - 1) };
    let img = |x: Elem, pt: usize| act(x, pt as u64 / q) as usize * q as usize + act(x, pt as u64 % q) as usize;
    let gens = h.generators();
    let elems = h.elements()?;
    let mut seen = vec![false; points];
    seen[0] = true;
    let mut reps = Vec::new();
    for start in 1..points {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0u64;
        while let Some(v) = stack.pop() {
            size += 1;
            for &x in &gens {
                let w = img(x, v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        reps.push((start, size));
    }
    let out = reps
        .par_iter()
        .map(|&(rep, size)| {
            let stab: Vec<Elem> = elems.iter().copied().filter(|&x| img(x, rep) == rep).collect();
            debug_assert_eq!(stab.len() as u64 * size, h.order());
            (size, h.shape_of(&stab))
        })
        .collect();
    Ok(out)
}

/// Per-layer orbit data and contributed degrees.
pub fn clifford_breakdown(spec: &CliffordSpec) -> Result<Vec<LayerBreakdown>> {
    let h = &spec.h;
    let order = h.order();
    let mut out = Vec::new();
    for l in &spec.layers {
        let raw: Vec<(u64, StabilizerShape)> = if l.copies == 1 {
            h.orbits(l.exponent)?.into_iter().map(|o| (o.size, o.stabilizer)).collect()
        } else {
            pair_orbits(h, l.exponent)?
        };
        let total: u64 = raw.iter().map(|(s, _)| s).sum();
        if total != h.q().pow(l.copies) - 1 {
            return Err(Error::invariant(format!("orbit sizes sum to {total}, not q^{} - 1", l.copies)));
        }
        let orbits = group_orbits(h, raw);
        let mut degrees = BTreeMap::new();
        for o in &orbits {
            let index = order / o.stabilizer_order;
            for (&d, &m) in &o.stabilizer_degrees {
                *degrees.entry(l.theta_degree * index * d).or_insert(0) += m * o.count * l.theta_count;
            }
        }
        out.push(LayerBreakdown {
            exponent: l.exponent,
            theta_degree: l.theta_degree,
            theta_count: l.theta_count,
            copies: l.copies,
            orbits,
            degrees,
        });
    }
    Ok(out)
}

/// cd(G) with multiplicities: cd(H) plus, per layer and H-orbit of nontrivial
/// lambda, theta(1) |H : I| d for d in cd(I). Fails unless the squares sum to |G|.
pub fn clifford_degrees(spec: &CliffordSpec) -> Result<DegreeMultiset> {
    let mut degrees = spec.h.character_degrees();
    for b in clifford_breakdown(spec)? {
        for (d, m) in b.degrees {
            *degrees.entry(d).or_insert(0) += m;
        }
    }
    DegreeMultiset::new(spec.group_order()?, degrees, Provenance::Clifford)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliffordcd::LayerSpec;
    use crate::semilin::field_table;

    #[test]
    fn abelian_and_frobenius() {
        let t = field_table(2, 1).unwrap();
        let triv = SemilinearGroup::new(t.clone(), 1, &[]).unwrap();
        let s = CliffordSpec::new("c2", triv, vec![LayerSpec::new(1, 1)]).unwrap();
        assert_eq!(clifford_degrees(&s).unwrap().pairs(), vec![(1, 2)]);
        // A trivial action on GF(8) is a reducible layer.
        let triv8 = SemilinearGroup::new(field_table(2, 3).unwrap(), 1, &[]).unwrap();
        assert!(CliffordSpec::new("c2^3", triv8, vec![LayerSpec::new(1, 1)]).is_err());
        let t = field_table(5, 2).unwrap();
        let s = CliffordSpec::new("f600", SemilinearGroup::gamma0(t.clone()).unwrap(), vec![LayerSpec::new(1, 1)]).unwrap();
        assert_eq!(clifford_degrees(&s).unwrap().pairs(), vec![(1, 24), (24, 1)]);
        let s = CliffordSpec::new("a1200", SemilinearGroup::gamma(t).unwrap(), vec![LayerSpec::new(1, 1)]).unwrap();
        let cd = clifford_degrees(&s).unwrap();
        assert_eq!(cd.support(), vec![1, 2, 24]);
    }

    #[test]
    fn profile_gate() {
        let t = field_table(2, 2).unwrap();
        let h = SemilinearGroup::gamma0(t).unwrap();
        // Pairing group: V^2 on top, then the center with theta(1) = q.
        let ok = CliffordSpec::new("h4", h.clone(), vec![LayerSpec::new(1, 1).with_copies(2), LayerSpec::new(2, 4)]);
        assert_eq!(clifford_degrees(&ok.unwrap()).unwrap().order(), 192);
        let bad = CliffordSpec::new("bad", h, vec![LayerSpec::new(1, 1).with_copies(2), LayerSpec::new(2, 2)]);
        assert!(bad.is_err());
    }
}
