use cdgraph_core::characters::{degree_oracle, dixon};
use cdgraph_core::constructions::{extraspecial, named_group, ExtraspecialVariant};
use cdgraph_core::permgrp::PermGroup;

fn pairs(g: &PermGroup) -> Vec<(u64, u64)> {
    degree_oracle(g).unwrap().pairs()
}

#[test]
fn small_fixtures() {
    assert_eq!(pairs(&named_group("q8").unwrap().group), vec![(1, 4), (2, 1)]);
    assert_eq!(pairs(&named_group("d8").unwrap().group), vec![(1, 4), (2, 1)]);
    assert_eq!(pairs(&named_group("sl23").unwrap().group), vec![(1, 3), (2, 3), (3, 1)]);
    assert_eq!(pairs(&PermGroup::symmetric(4).unwrap()), vec![(1, 2), (2, 1), (3, 2)]);
    assert_eq!(pairs(&PermGroup::symmetric(5).unwrap()), vec![(1, 2), (4, 2), (5, 2), (6, 1)]);
    assert_eq!(pairs(&extraspecial(3, 1, ExtraspecialVariant::ExponentP).unwrap()), vec![(1, 9), (3, 2)]);
    assert_eq!(pairs(&named_group("q8xc2").unwrap().group), vec![(1, 8), (2, 2)]);
    assert_eq!(pairs(&PermGroup::cyclic(12).unwrap()), vec![(1, 12)]);
}

#[test]
fn class_count_matches_character_count() {
    for id in ["s3", "a4", "sl23", "aff16", "heis4", "e27c4"] {
        let g = named_group(id).unwrap().group;
        let d = dixon(&g).unwrap();
        assert_eq!(d.degrees.len(), d.classes.classes.len(), "{id}");
        let total: u64 = d.classes.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, g.size().unwrap());
    }
}
