use cdgraph_core::analysis::{analyze, Input};
use cdgraph_core::characters::degree_oracle;
use cdgraph_core::cliffordcd::clifford_degrees;
use cdgraph_core::constructions::{default_corpus, named_group, Built};
use cdgraph_core::graphkit::*;
use cdgraph_core::report::Verdict;
use std::sync::OnceLock;

fn corpus() -> &'static [Built] {
    static C: OnceLock<Vec<Built>> = OnceLock::new();
    C.get_or_init(|| default_corpus().expect("corpus builds"))
}

fn solvable() -> impl Iterator<Item = &'static Built> {
    corpus().iter().filter(|b| b.group.is_solvable())
}

#[test]
fn corpus_shape() {
    let n = solvable().count();
    assert!(n >= 25, "{n} solvable groups");
    for b in solvable() {
        let o = b.group.size().unwrap();
        assert!((1..=20000).contains(&o), "{}: order {o}", b.recipe.name);
    }
    let roles: Vec<&str> = corpus().iter().filter_map(|b| b.recipe.role.as_deref()).collect();
    for r in ["abelian", "nilpotent", "type_a", "type_b", "type_c", "control"] {
        assert!(roles.contains(&r), "no {r} recipe");
    }
}

#[test]
fn palfy_holds_on_solvable_corpus() {
    for b in solvable() {
        let g = build_graph(&degree_oracle(&b.group).unwrap());
        assert!(check_palfy(&g), "{}: {:?}", b.recipe.name, g);
    }
    // The non-solvable control has three pairwise non-adjacent primes.
    let a5 = corpus().iter().find(|b| b.recipe.name == "a5").unwrap();
    assert!(!check_palfy(&build_graph(&degree_oracle(&a5.group).unwrap())));
}

#[test]
fn diameter_or_two_complete_components() {
    for b in solvable() {
        let g = build_graph(&degree_oracle(&b.group).unwrap());
        let comps = g.components();
        match g.diameter() {
            Diameter::Finite(d) => assert!(d <= 3, "{}: diameter {d}", b.recipe.name),
            Diameter::Infinite => {
                assert_eq!(comps.len(), 2, "{}", b.recipe.name);
                for c in &comps {
                    assert!(g.is_complete_on(c), "{}: component {c:?} not complete", b.recipe.name);
                }
            }
        }
    }
}

#[test]
fn structural_lemmas_have_no_violations() {
    for b in solvable() {
        let a = analyze(&b.recipe.name, Input::Group { group: &b.group, spec: b.spec.as_ref() }).unwrap();
        for l in &a.lemmas {
            assert_ne!(l.verdict, Verdict::Fail, "{}: {:?}", b.recipe.name, l);
        }
        assert_ne!(a.verdict, Verdict::Fail, "{}: {}", b.recipe.name, serde_json::to_string(&a.verdicts).unwrap());
    }
}

#[test]
fn every_disconnected_group_has_one_noncentral_prime() {
    let mut seen = 0;
    for b in solvable() {
        let cd = degree_oracle(&b.group).unwrap();
        let g = build_graph(&cd);
        if g.is_connected() {
            continue;
        }
        let st = Structure::compute(&b.group).unwrap();
        assert_eq!(noncentral_primes(&b.group, &st.center).unwrap().len(), 1, "{}", b.recipe.name);
        seen += 1;
    }
    assert!(seen >= 8, "{seen} disconnected groups");
}

#[test]
fn clifford_matches_oracle_on_structured_corpus() {
    let mut seen = 0;
    for b in corpus() {
        let Some(spec) = &b.spec else { continue };
        let o = degree_oracle(&b.group).unwrap();
        let c = clifford_degrees(spec).unwrap();
        assert!(c.same_multiset(&o), "{}: clifford {:?} oracle {:?}", b.recipe.name, c.pairs(), o.pairs());
        seen += 1;
    }
    assert!(seen >= 12, "{seen} structured groups");
}

fn support(id: &str) -> Vec<u64> {
    degree_oracle(&named_group(id).unwrap().group).unwrap().support()
}

#[test]
fn degree_sets_of_fixtures() {
    assert_eq!(support("heis3"), vec![1, 2, 3]);
    assert_eq!(support("heis4"), vec![1, 3, 12]);
    assert_eq!(support("heis5"), vec![1, 4, 10]);
    assert_eq!(support("heis8"), vec![1, 3, 7, 21, 56]);
    assert_eq!(support("e27c4"), vec![1, 3, 4]);
    assert_eq!(support("asl23"), vec![1, 2, 3, 8]);
    assert_eq!(support("suz8"), vec![1, 3, 7, 14]);
}

#[test]
fn classification_types() {
    let ty = |id: &str| {
        let g = named_group(id).unwrap().group;
        classify_disconnected(&g, &degree_oracle(&g).unwrap()).unwrap()
    };
    for (id, want) in [("e27c4", DisconnectedType::A), ("sl23xc5", DisconnectedType::A), ("aff16", DisconnectedType::B), ("suz8", DisconnectedType::C)] {
        let v = ty(id);
        assert_eq!(v.disconnected_type, Some(want), "{id}");
        assert_eq!(v.classification.as_ref().unwrap().verdict, Verdict::Pass, "{id}");
    }
    // Abelian F and only two vertices: none of the three types applies.
    let v = ty("aff8");
    assert_eq!(v.disconnected_type, None);
    assert_eq!(v.components, vec![vec![3], vec![7]]);
}

#[test]
fn disconnected_structure_branches() {
    let branch = |id: &str| {
        let g = named_group(id).unwrap().group;
        let v = check_disconnected_structure(&g, &degree_oracle(&g).unwrap()).unwrap();
        let r = v.disconnected_structure.unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{id}: {r:?}");
        r.branch.unwrap()
    };
    assert_eq!(branch("sl23"), "i");
    assert_eq!(branch("e27c4"), "i");
    assert_eq!(branch("heis3"), "i");
    // p = 2 is adjacent to 7, and G/P' is the affine group of order 168.
    assert_eq!(branch("suz8"), "ii");
}

#[test]
fn pairing_group_over_gf8_is_connected() {
    let g = named_group("heis8").unwrap().group;
    assert_eq!(g.size().unwrap(), 512 * 21);
    let cd = degree_oracle(&g).unwrap();
    let graph = build_graph(&cd);
    assert_eq!(graph.vertices, vec![2, 3, 7]);
    assert_eq!(graph.diameter(), Diameter::Finite(2));
}
