use cdgraph_core::characters::{count_with, CentralSetup, CharacterRamification};
use cdgraph_core::constructions::{extraspecial, ramification_instances, ExtraspecialVariant};

#[test]
fn non_fully_ramified_count_meets_bound() {
    let mut applicable = 0;
    for inst in ramification_instances().unwrap() {
        let setup = CentralSetup::new(&inst.p_group, &inst.n).unwrap();
        let c = count_with(&setup).unwrap();
        if let Some(ok) = c.bound_holds() {
            applicable += 1;
            assert!(ok, "{}: count {} below bound {:?}", inst.name, c.count, c.bound);
        }
    }
    assert!(applicable >= 6, "only {applicable} instances satisfy 2m > n");
}

#[test]
fn form_criterion_agrees_with_characters() {
    let mut compared = 0;
    for inst in ramification_instances().unwrap() {
        if inst.p_group.size().unwrap() > 2000 {
            continue;
        }
        let setup = CentralSetup::new(&inst.p_group, &inst.n).unwrap();
        let forms = count_with(&setup).unwrap();
        let chars = CharacterRamification::with_setup(&inst.p_group, setup).unwrap();
        for r in &forms.records {
            let via_chars = chars.is_fully_ramified(r.lambda_index).unwrap();
            assert_eq!(r.fully_ramified, via_chars, "{} lambda {}", inst.name, r.lambda_index);
            compared += 1;
        }
    }
    assert!(compared >= 40, "{compared} characters compared");
}

#[test]
fn q8_times_c2_has_two_non_fully_ramified() {
    let inst = ramification_instances().unwrap().into_iter().find(|i| i.name == "q8xc2").unwrap();
    let c = count_with(&CentralSetup::new(&inst.p_group, &inst.n).unwrap()).unwrap();
    assert_eq!((c.m, c.n), (2, 2));
    assert_eq!(c.count, 2);
    assert_eq!(c.bound, Some(2));
}

#[test]
fn extraspecial_central_characters_are_fully_ramified() {
    use ExtraspecialVariant::*;
    for (p, m, v) in [(2, 1, Dihedral), (2, 1, Quaternion), (2, 2, Dihedral), (2, 2, Quaternion), (3, 1, ExponentP), (3, 1, ExponentP2), (5, 1, ExponentP), (3, 2, ExponentP)] {
        let g = extraspecial(p, m, v).unwrap();
        let z = g.center().unwrap();
        let setup = CentralSetup::new(&g, &z).unwrap();
        let c = count_with(&setup).unwrap();
        let faithful: Vec<_> = c.records.iter().filter(|r| r.lambda_index != 0).collect();
        assert_eq!(faithful.len() as u64, p - 1);
        assert!(faithful.iter().all(|r| r.fully_ramified), "{p} {m} {v:?}");
        let chars = CharacterRamification::with_setup(&g, setup).unwrap();
        for r in faithful {
            assert_eq!(chars.degrees_over(r.lambda_index).unwrap(), vec![p.pow(m)]);
        }
    }
}
