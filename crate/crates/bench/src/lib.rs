//! Fixtures shared by the kernel benchmarks.

use cdgraph_core::cliffordcd::CliffordSpec;
use cdgraph_core::constructions::{named, named_group, Named};
use cdgraph_core::permgrp::PermGroup;

pub fn group(id: &str) -> PermGroup {
    named_group(id).unwrap_or_else(|e| panic!("{id}: {e}")).group
}

/// Same generators, with every cached structure dropped.
pub fn fresh(g: &PermGroup) -> PermGroup {
    PermGroup::new(g.degree(), g.generators().to_vec()).expect("valid generators")
}

pub fn layered_spec() -> CliffordSpec {
    match named("lewis").expect("bundled") {
        Named::Spec(s) => s,
        Named::Group(_) => unreachable!("bundled as a spec"),
    }
}
