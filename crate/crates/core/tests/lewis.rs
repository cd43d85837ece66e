use cdgraph_core::algebra::{minimal_order_search, zsigmondy_ppd};
use cdgraph_core::analysis::{analyze, Input};
use cdgraph_core::cliffordcd::{clifford_degrees, parse_spec, write_spec};
use cdgraph_core::constructions::{named, Named};
use cdgraph_core::graphkit::{build_graph, Diameter};
use cdgraph_core::report::Verdict;
use num_bigint::BigUint;

fn lewis() -> cdgraph_core::cliffordcd::CliffordSpec {
    match named("lewis").unwrap() {
        Named::Spec(s) => s,
        Named::Group(_) => panic!("lewis is a spec"),
    }
}

fn lewis_order() -> BigUint {
    BigUint::from(2u32).pow(45) * BigUint::from(32767u32) * BigUint::from(15u32)
}

#[test]
fn graph_facts() {
    let s = lewis();
    let cd = clifford_degrees(&s).unwrap();
    assert_eq!(cd.sum_of_squares(), lewis_order());
    let g = build_graph(&cd);
    assert_eq!(g.vertices, vec![2, 3, 5, 7, 31, 151]);
    assert_eq!(g.diameter(), Diameter::Finite(3));
    for &v in &g.vertices {
        assert!(g.distance(2, v).unwrap() <= 2, "d(2, {v})");
    }
    let (pi1, pi2) = g.pi_sets(Some(2)).unwrap();
    assert_eq!(pi1, vec![2, 7, 31, 151]);
    assert_eq!(pi2, vec![3, 5]);
    assert!(pi1.len() >= 1 << pi2.len());
}

#[test]
fn analysis_passes_graph_level_checks() {
    let s = lewis();
    let a = analyze("lewis", Input::Spec(&s)).unwrap();
    assert_eq!(a.order, lewis_order().to_string());
    let t = a.verdicts.diameter_three.as_ref().unwrap();
    assert_eq!(t.verdict, Verdict::Pass, "{t:?}");
    assert_eq!(a.verdict, Verdict::Pass);
}

#[test]
fn spec_file_round_trip() {
    let s = lewis();
    let text = write_spec(&s);
    let back = parse_spec(&text).unwrap();
    assert!(clifford_degrees(&back).unwrap().same_multiset(&clifford_degrees(&s).unwrap()));
}

#[test]
fn minimal_order_is_lewis() {
    assert_eq!(minimal_order_search(1 << 14).unwrap(), None);
    for k in [15u32, 16, 20, 30, 45, 60] {
        let m = minimal_order_search(1u128 << k).unwrap().unwrap();
        assert_eq!((m.p, m.n, m.d), (2, 15, 15), "bound 2^{k}");
        assert_eq!(m.order, lewis_order());
    }
}

#[test]
fn zsigmondy_exceptions() {
    let mut found = Vec::new();
    for a in 2..=50u64 {
        for n in 1..=24u32 {
            if zsigmondy_ppd(a, n).unwrap().is_none() {
                found.push((a, n));
            }
        }
    }
    let mut want = vec![(2, 1), (2, 6)];
    want.extend((2..=50u64).filter(|a| (a + 1).is_power_of_two()).map(|a| (a, 2)));
    want.sort_unstable();
    found.sort_unstable();
    assert_eq!(found, want);
}
