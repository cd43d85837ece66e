use cdgraph_core::algebra::arith::{is_prime, p_part};
use cdgraph_core::algebra::{frobenius_orbit, zsigmondy_ppd, FieldSpec};
use cdgraph_core::characters::{degree_oracle, DegreeMultiset, Provenance};
use cdgraph_core::cliffordcd::{clifford_degrees, parse_spec, write_spec};
use cdgraph_core::constructions::{affine_semilinear, affine_spec};
use cdgraph_core::graphkit::{build_graph, check_palfy, Diameter};
use cdgraph_core::permgrp::{Perm, PermGroup};
use cdgraph_core::semilin::{field_table, SemilinearGroup};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::sync::Arc;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(&v).unwrap())
}

fn group(n: usize) -> impl Strategy<Value = PermGroup> {
    prop::collection::vec(perm(n), 1..4).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn perm_laws(a in perm(9), b in perm(9)) {
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert!(a.pow(a.order() as i64).is_identity());
        prop_assert_eq!(a.conj(&b), b.inv().mul(&a).mul(&b));
        prop_assert_eq!(a.mul(&b).inv(), b.inv().mul(&a.inv()));
    }

    #[test]
    fn group_order_and_subgroups(g in group(6)) {
        let o = g.size().unwrap();
        prop_assert_eq!(720 % o, 0);
        for x in g.generators() {
            prop_assert!(g.contains(x));
        }
        let z = g.center().unwrap();
        prop_assert!(z.is_abelian() && z.is_normal_in(&g));
        let d = g.derived_subgroup();
        prop_assert!(d.is_normal_in(&g));
        for p in g.prime_divisors() {
            let s = g.sylow(p).unwrap();
            prop_assert_eq!(s.size().unwrap(), p_part(o, p));
            let op = g.o_p(p).unwrap();
            prop_assert!(op.is_subgroup_of(&s) && op.is_normal_in(&g));
        }
    }

    #[test]
    fn degrees_of_small_groups(g in group(5)) {
        let cd = degree_oracle(&g).unwrap();
        let o = g.size().unwrap();
        prop_assert_eq!(cd.sum_of_squares(), BigUint::from(o));
        for d in cd.support() {
            prop_assert_eq!(o % d, 0);
        }
        // Linear characters correspond to G/G'.
        prop_assert_eq!(cd.linear_count(), o / g.derived_subgroup().size().unwrap());
        if g.is_solvable() {
            prop_assert!(check_palfy(&build_graph(&cd)));
        }
    }

    #[test]
    fn graph_invariants(list in prop::collection::vec(1u64..400, 0..8)) {
        let g = build_graph_from(&list);
        let comps = g.components();
        let mut all: Vec<u64> = comps.concat();
        all.sort_unstable();
        prop_assert_eq!(&all, &g.vertices);
        for &(a, b) in &g.edges {
            prop_assert!(a < b && g.adjacent(b, a));
            prop_assert!(list.iter().any(|d| d % (a * b) == 0));
        }
        match g.diameter() {
            Diameter::Finite(d) => {
                prop_assert!(comps.len() <= 1);
                for &a in &g.vertices {
                    for &b in &g.vertices {
                        prop_assert!(g.distance(a, b).unwrap() <= d);
                    }
                }
            }
            Diameter::Infinite => prop_assert!(comps.len() >= 2),
        }
        prop_assert_eq!(check_palfy(&g), g.independent_triple().is_none());
    }

    #[test]
    fn field_arithmetic(pi in 0usize..4, n in 1u32..5, code in 1u64..10_000) {
        let p = [2u64, 3, 5, 7][pi];
        let spec = Arc::new(FieldSpec::new(p, n).unwrap());
        let q = spec.order();
        let x = spec.from_code(code % (q - 1) + 1);
        prop_assert_eq!(x.pow(q), x.clone());
        prop_assert_eq!((q - 1) % x.order().unwrap(), 0);
        let orbit = frobenius_orbit(&x).unwrap();
        prop_assert_eq!(n as usize % orbit.len(), 0);
    }

    #[test]
    fn zsigmondy_primes_are_primitive(a in 2u64..40, n in 1u32..16) {
        if let Some(t) = zsigmondy_ppd(a, n).unwrap() {
            let t: u64 = t.try_into().unwrap();
            prop_assert!(is_prime(t));
            let big = |j: u32| BigUint::from(a).pow(j) - 1u32;
            prop_assert!((big(n) % t) == BigUint::from(0u32));
            for j in 1..n {
                prop_assert!((big(j) % t) != BigUint::from(0u32));
            }
            prop_assert!(t > n as u64);
        }
    }
}

fn build_graph_from(list: &[u64]) -> cdgraph_core::graphkit::PrimeGraph {
    cdgraph_core::graphkit::PrimeGraph::from_degrees(list.iter())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    /// Clifford degrees of V x| H agree with the oracle for random H <= Gamma(q).
    #[test]
    fn clifford_agrees_on_random_affine_groups(fi in 0usize..6, pick in 0usize..1000) {
        let (p, n) = [(2u64, 2u32), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)][fi];
        let t = field_table(p, n).unwrap();
        let subs: Vec<SemilinearGroup> = SemilinearGroup::all_subgroups(&t).unwrap();
        let h = &subs[pick % subs.len()];
        if let Ok(spec) = affine_spec(h) {
            let g = affine_semilinear(h).unwrap();
            let c = clifford_degrees(&spec).unwrap();
            let o = degree_oracle(&g).unwrap();
            prop_assert!(c.same_multiset(&o), "{:?}: {:?} vs {:?}", h.describe(), c.pairs(), o.pairs());
            let back = parse_spec(&write_spec(&spec)).unwrap();
            prop_assert!(clifford_degrees(&back).unwrap().same_multiset(&c));
        }
    }

    #[test]
    fn multiset_gate(list in prop::collection::vec(1u64..20, 1..10)) {
        let mut l = list.clone();
        l.push(1);
        let order: u128 = l.iter().map(|&d| (d * d) as u128).sum();
        prop_assert!(DegreeMultiset::from_list(order, &l, Provenance::Manual).is_ok());
        prop_assert!(DegreeMultiset::from_list(order + 1, &l, Provenance::Manual).is_err());
    }
}
