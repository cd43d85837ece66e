use cdgraph_core::algebra::arith::prime_divisors;
use cdgraph_core::report::Verdict;
use cdgraph_core::semilin::*;

#[test]
fn hall_conjugacy_equivalence_exhaustive() {
    let (mut yes, mut no) = (0, 0);
    for (p, n) in [(2, 3), (2, 4), (3, 3), (2, 6), (3, 4)] {
        let t = field_table(p, n).unwrap();
        let subs = SemilinearGroup::all_subgroups(&t).unwrap();
        for h in &subs {
            for delta in admissible_deltas(h) {
                let r = check_semilinear0(h, &delta).unwrap();
                assert!(r.consistent(), "p^n = {p}^{n}, H = {:?}, delta = {delta:?}: {r:?}", h.describe());
                if r.hall_order > 1 {
                    if r.a {
                        yes += 1;
                    } else {
                        no += 1;
                    }
                }
            }
        }
    }
    assert!(yes > 0 && no > 0, "{yes} true, {no} false");
}

#[test]
fn module_lemma_sweep_clean() {
    let reports = module_lemma_sweep(4096).unwrap();
    assert!(reports.len() > 20);
    for r in &reports {
        assert!(r.conclusions_verified, "{r:?}");
        if r.q.pow(r.m) <= 4096 {
            assert_eq!(r.matrix_agrees, Some(true), "{r:?}");
        }
        assert_ne!(r.verdict(), Verdict::Fail);
    }
}

#[test]
fn sylow_stabilizers_force_field_structure() {
    let mut passed = 0;
    for (p, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (2, 6), (7, 2)] {
        let t = field_table(p, n).unwrap();
        for h in SemilinearGroup::all_subgroups(&t).unwrap() {
            for s in prime_divisors(h.order()) {
                let r = check_semilinear1(&h, s, 0).unwrap();
                assert_ne!(r.verdict, Verdict::Fail, "{:?} s={s}: {r:?}", h.describe());
                passed += usize::from(r.verdict == Verdict::Pass);
            }
        }
    }
    assert!(passed > 10, "only {passed} instances met the hypothesis");
}

#[test]
fn hall_conjugacy_equivalence_sampled_at_2_15() {
    let t = field_table(2, 15).unwrap();
    let subs = SemilinearGroup::sampled_subgroups(&t, 2, 0).unwrap();
    let mut checked = 0;
    for h in &subs {
        for delta in admissible_deltas(h) {
            let r = check_semilinear0(h, &delta).unwrap();
            assert!(r.consistent(), "H = {:?}, delta = {delta:?}: {r:?}", h.describe());
            checked += 1;
        }
    }
    assert!(checked >= 40, "{checked} instances");
}
