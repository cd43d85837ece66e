use serde::Serialize;

use super::degrees::clifford_degrees;
use super::spec::{CliffordSpec, LayerSpec};
use crate::algebra::arith::prime_divisors;
use crate::characters::DegreeMultiset;
use crate::error::Result;
use crate::graphkit::{build_graph, PrimeGraph};
use crate::semilin::SemilinearGroup;

/// GF(q) x| H with H semilinear, so F = GF(q) and K/F = F(H).
#[derive(Clone, Debug, Serialize)]
pub struct ClassBReport {
    pub degrees: DegreeMultiset,
    pub graph: PrimeGraph,
    pub components: Vec<Vec<u64>>,
    /// pi(K/F) = pi(F(H)).
    pub pi_k_over_f: Vec<u64>,
    /// pi(G/K) = pi(H/F(H)).
    pub pi_g_over_k: Vec<u64>,
    /// Whether the components are exactly the two predicted sets; `None` when connected.
    pub matches: Option<bool>,
}

pub fn disconnected_class_b_degrees(h: &SemilinearGroup) -> Result<ClassBReport> {
    let spec = CliffordSpec::new(format!("GF({}) x| H", h.q()), h.clone(), vec![LayerSpec::new(1, 1)])?;
    let degrees = clifford_degrees(&spec)?;
    let graph = build_graph(&degrees);
    let components = graph.components();
    let f = h.fitting_order();
    let pi_k_over_f = prime_divisors(f);
    let pi_g_over_k = prime_divisors(h.order() / f);
    let matches = (components.len() > 1).then(|| {
        let mut want = vec![pi_k_over_f.clone(), pi_g_over_k.clone()];
        want.sort();
        let mut got = components.clone();
        got.sort();
        got == want
    });
    Ok(ClassBReport { degrees, graph, components, pi_k_over_f, pi_g_over_k, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilin::field_table;

    #[test]
    fn gamma16_components() {
        let h = SemilinearGroup::gamma(field_table(2, 4).unwrap()).unwrap();
        assert_eq!(h.fitting_order(), 15);
        let r = disconnected_class_b_degrees(&h).unwrap();
        assert_eq!(r.components, vec![vec![2], vec![3, 5]]);
        assert_eq!(r.matches, Some(true));
        let h = SemilinearGroup::gamma0(field_table(2, 2).unwrap()).unwrap();
        let r = disconnected_class_b_degrees(&h).unwrap();
        assert_eq!(r.degrees.pairs(), vec![(1, 3), (3, 1)]);
        assert_eq!(r.matches, None);
    }
}
