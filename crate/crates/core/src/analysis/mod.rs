//! End-to-end analysis of one group or spec: degrees, prime graph, metrics
//! and every checker whose hypotheses the input meets.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::characters::{degree_oracle, DegreeMultiset};
use crate::cliffordcd::{clifford_degrees, CliffordSpec};
use crate::error::{Error, Result};
use crate::graphkit::{
    build_graph, check_abelian_fitting_diameter, check_central_quotient_graph, check_fitting_degree, check_hypercentral, check_sylow_degrees,
    check_diameter_three, check_disconnected_structure, check_unique_noncentral, classify_disconnected, ClassificationVerdict, Diameter, Metrics, PrimeGraph, Structure,
    Subject,
};
use crate::limits;
use crate::permgrp::PermGroup;
use crate::report::{LemmaReport, Verdict};

#[derive(Clone, Copy, Debug)]
pub enum Input<'a> {
    Group { group: &'a PermGroup, spec: Option<&'a CliffordSpec> },
    Spec(&'a CliffordSpec),
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureSummary {
    pub solvable: bool,
    pub fitting_order: u64,
    pub fitting2_order: u64,
    pub center_order: u64,
    pub fitting_height: usize,
    pub fitting_abelian: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub name: String,
    pub kind: &'static str,
    /// Decimal, since orders of layered specs exceed 64 bits.
    pub order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub cd: DegreeMultiset,
    /// Clifford degrees versus the oracle, when both were computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clifford_agrees: Option<bool>,
    pub graph: PrimeGraph,
    pub metrics: Metrics,
    pub verdicts: ClassificationVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSummary>,
    pub lemmas: Vec<LemmaReport>,
    pub verdict: Verdict,
}

/// Stage timings in milliseconds, kept apart from the report so that
/// reports stay deterministic.
pub type Timings = BTreeMap<String, u128>;

struct Clock {
    start: Instant,
    out: Timings,
}

impl Clock {
    fn new() -> Clock {
        Clock { start: Instant::now(), out: Timings::new() }
    }

    fn lap(&mut self, stage: &str) {
        self.out.insert(stage.to_string(), self.start.elapsed().as_millis());
        self.start = Instant::now();
    }
}

pub fn analyze(name: &str, input: Input<'_>) -> Result<Analysis> {
    Ok(analyze_timed(name, input)?.0)
}

pub fn analyze_timed(name: &str, input: Input<'_>) -> Result<(Analysis, Timings)> {
    analyze_with(name, input, None)
}

/// As [`analyze_timed`], reusing oracle degrees computed earlier for the
/// same group (ignored for specs).
pub fn analyze_with(name: &str, input: Input<'_>, known: Option<DegreeMultiset>) -> Result<(Analysis, Timings)> {
    let mut clock = Clock::new();
    let report = match input {
        Input::Group { group, spec } => analyze_group(name, group, spec, known, &mut clock)?,
        Input::Spec(spec) => analyze_spec(name, spec, &mut clock)?,
    };
    Ok((report, clock.out))
}

fn merge(into: &mut ClassificationVerdict, from: ClassificationVerdict) {
    into.disconnected_type = into.disconnected_type.or(from.disconnected_type);
    into.classification = into.classification.take().or(from.classification);
    into.diameter_three = into.diameter_three.take().or(from.diameter_three);
    into.disconnected_structure = into.disconnected_structure.take().or(from.disconnected_structure);
    into.pi1 = into.pi1.take().or(from.pi1);
    into.pi2 = into.pi2.take().or(from.pi2);
}

fn overall(v: &ClassificationVerdict, lemmas: &[LemmaReport], solvable: bool, agrees: Option<bool>) -> Verdict {
    let palfy = if solvable { Verdict::from_bool(v.palfy_ok) } else { Verdict::NotApplicable };
    let reports = [v.classification.as_ref(), v.diameter_three.as_ref(), v.disconnected_structure.as_ref()];
    Verdict::combine(
        reports
            .into_iter()
            .flatten()
            .map(|r| r.verdict)
            .chain(lemmas.iter().map(|l| l.verdict))
            .chain([palfy])
            .chain(agrees.map(Verdict::from_bool)),
    )
}

fn analyze_group(name: &str, g: &PermGroup, spec: Option<&CliffordSpec>, known: Option<DegreeMultiset>, clock: &mut Clock) -> Result<Analysis> {
    let solvable = g.is_solvable();
    let cd = match known {
        Some(cd) if cd.order() == g.order_u128()? => cd,
        Some(_) => return Err(Error::invalid("stored degrees belong to a group of another order")),
        None => degree_oracle(g)?,
    };
    clock.lap("oracle");
    let clifford_agrees = match spec {
        Some(s) if cd.order() <= limits::ORACLE_MAX_ORDER as u128 => {
            let c = clifford_degrees(s)?;
            clock.lap("clifford");
            Some(c.same_multiset(&cd))
        }
        _ => None,
    };
    let graph = build_graph(&cd);
    let metrics = graph.metrics();
    let mut verdicts = ClassificationVerdict::of_graph(&graph);
    let mut lemmas = Vec::new();
    let structure;
    if solvable {
        let st = Structure::compute(g)?;
        structure = Some(StructureSummary {
            solvable,
            fitting_order: st.fitting.size()?,
            fitting2_order: st.fitting2.size()?,
            center_order: st.center.size()?,
            fitting_height: st.fitting_height,
            fitting_abelian: st.fitting.is_abelian(),
        });
        clock.lap("structure");
        let comps = verdicts.components.len();
        if comps == 2 {
            merge(&mut verdicts, classify_disconnected(g, &cd)?);
        }
        if comps >= 2 && !st.fitting.is_abelian() {
            merge(&mut verdicts, check_disconnected_structure(g, &cd)?);
        }
        if verdicts.diameter == Some(Diameter::Finite(3)) {
            merge(&mut verdicts, check_diameter_three(Subject::Group(g), &cd)?);
        }
        clock.lap("classification");
        lemmas.push(check_fitting_degree(&cd, &st)?);
        lemmas.push(check_abelian_fitting_diameter(&graph, &st));
        lemmas.push(check_unique_noncentral(g, &graph, &st)?);
        lemmas.push(check_central_quotient_graph(g, &graph, &st)?);
        lemmas.push(check_sylow_degrees(g, &cd)?);
        lemmas.push(check_hypercentral(g)?);
        clock.lap("lemmas");
    } else {
        structure = Some(StructureSummary {
            solvable,
            fitting_order: g.fitting_subgroup().and_then(|f| f.size()).unwrap_or(0),
            fitting2_order: 0,
            center_order: g.center()?.size()?,
            fitting_height: 0,
            fitting_abelian: false,
        });
    }
    let verdict = overall(&verdicts, &lemmas, solvable, clifford_agrees);
    Ok(Analysis {
        name: name.to_string(),
        kind: "group",
        order: cd.order().to_string(),
        degree: Some(g.degree()),
        cd,
        clifford_agrees,
        graph,
        metrics,
        verdicts,
        structure,
        lemmas,
        verdict,
    })
}

fn analyze_spec(name: &str, spec: &CliffordSpec, clock: &mut Clock) -> Result<Analysis> {
    let cd = clifford_degrees(spec)?;
    clock.lap("clifford");
    let graph = build_graph(&cd);
    let metrics = graph.metrics();
    let mut verdicts = ClassificationVerdict::of_graph(&graph);
    if verdicts.diameter == Some(Diameter::Finite(3)) {
        merge(&mut verdicts, check_diameter_three(Subject::Spec(spec), &cd)?);
    }
    clock.lap("classification");
    let verdict = overall(&verdicts, &[], true, None);
    Ok(Analysis {
        name: name.to_string(),
        kind: "spec",
        order: spec.group_order()?.to_string(),
        degree: None,
        cd,
        clifford_agrees: None,
        graph,
        metrics,
        verdicts,
        structure: None,
        lemmas: Vec::new(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named_group;

    #[test]
    fn sl23_pipeline() {
        let g = named_group("sl23").unwrap().group;
        let a = analyze("sl23", Input::Group { group: &g, spec: None }).unwrap();
        assert_eq!(a.metrics.components, vec![vec![2], vec![3]]);
        assert_eq!(a.verdicts.disconnected_structure.as_ref().unwrap().branch.as_deref(), Some("i"));
        assert_eq!(a.verdict, Verdict::Pass);
    }

    #[test]
    fn trivial_has_null_diameter() {
        let g = PermGroup::trivial(1);
        let a = analyze("trivial", Input::Group { group: &g, spec: None }).unwrap();
        let v = serde_json::to_value(&a).unwrap();
        assert!(v["verdicts"]["diameter"].is_null());
    }
}
