//! Corpus-level consistency checks between degrees and group structure.

use serde_json::json;

use super::graph::{build_graph, Diameter, PrimeGraph};
use super::structure::{cyclic_complement, noncentral_primes, quotient_degrees, Structure};
use crate::algebra::arith::{p_part, prime_divisors};
use crate::characters::DegreeMultiset;
use crate::error::Result;
use crate::permgrp::PermGroup;
use crate::report::{LemmaReport, Verdict};

/// Some degree is divisible by every prime of |K/F|.
pub fn check_fitting_degree(cd: &DegreeMultiset, st: &Structure) -> Result<LemmaReport> {
    let pi = st.pi_k_over_f()?;
    let witness = cd.support().into_iter().find(|&d| pi.iter().all(|&r| d % r == 0));
    Ok(LemmaReport::new("fitting-primes-in-one-degree", json!({"pi_k_over_f": pi}), Verdict::from_bool(witness.is_some()), json!({"degree": witness})))
}

/// Abelian F and connected graph force diameter at most 2.
pub fn check_abelian_fitting_diameter(graph: &PrimeGraph, st: &Structure) -> LemmaReport {
    let params = json!({"fitting_abelian": st.fitting.is_abelian(), "diameter": graph.diameter().to_string()});
    if !st.fitting.is_abelian() || !graph.is_connected() {
        return LemmaReport::new("abelian-fitting-diameter", params, Verdict::NotApplicable, json!(null)).with_reason("needs abelian F and connected graph");
    }
    let ok = graph.diameter() <= Diameter::Finite(2);
    LemmaReport::new("abelian-fitting-diameter", params, Verdict::from_bool(ok), json!(null))
}

/// A disconnected graph has exactly one prime with non-central O_p.
pub fn check_unique_noncentral(g: &PermGroup, graph: &PrimeGraph, st: &Structure) -> Result<LemmaReport> {
    if graph.is_connected() {
        return Ok(LemmaReport::new("unique-noncentral-prime", json!({}), Verdict::NotApplicable, json!(null)).with_reason("graph is connected"));
    }
    let ncp = noncentral_primes(g, &st.center)?;
    Ok(LemmaReport::new("unique-noncentral-prime", json!({}), Verdict::from_bool(ncp.len() == 1), json!({"primes": ncp})))
}

/// With F = M x Z, Z central, M normal, and every character of F extending to
/// its inertia group, the graphs of G and G/Z coincide. The extension
/// hypothesis is certified when F is a normal Hall subgroup, or F is abelian
/// with a cyclic complement.
pub fn check_central_quotient_graph(g: &PermGroup, graph: &PrimeGraph, st: &Structure) -> Result<LemmaReport> {
    let name = "central-factor-graph";
    let mut central = Vec::new();
    let mut z = PermGroup::trivial(g.degree());
    for r in prime_divisors(st.fitting.size()?) {
        let o = g.o_p(r)?;
        if o.is_subgroup_of(&st.center) {
            central.push(r);
            z = z.join(&o);
        }
    }
    let params = json!({"central_primes": central, "z_order": z.size()?});
    if z.is_trivial() {
        return Ok(LemmaReport::new(name, params, Verdict::NotApplicable, json!(null)).with_reason("no central primary component of F"));
    }
    let f = st.fitting.size()?;
    let index = st.order / f;
    let hall = crate::algebra::arith::gcd(f, index) == 1;
    let certified = hall || (st.fitting.is_abelian() && cyclic_complement(g, &st.fitting)?.is_some());
    if !certified {
        return Ok(LemmaReport::new(name, params, Verdict::NotApplicable, json!(null)).with_reason("extension hypothesis not certified"));
    }
    let qgraph = build_graph(&quotient_degrees(g, &z)?);
    let ok = qgraph == *graph;
    Ok(LemmaReport::new(name, params, Verdict::from_bool(ok), json!({"graph": graph, "quotient_graph": qgraph})))
}

/// p divides no degree iff the Sylow p-subgroup is normal and abelian.
pub fn check_sylow_degrees(g: &PermGroup, cd: &DegreeMultiset) -> Result<LemmaReport> {
    let order = g.size()?;
    let support = cd.support();
    let mut bad = Vec::new();
    for p in prime_divisors(order) {
        let divides = support.iter().any(|d| d % p == 0);
        let o = g.o_p(p)?;
        let normal_abelian = o.size()? == p_part(order, p) && o.is_abelian();
        if divides == normal_abelian {
            bad.push(p);
        }
    }
    Ok(LemmaReport::new("sylow-degree-divisibility", json!({"order": order}), Verdict::from_bool(bad.is_empty()), json!({"violating_primes": bad})))
}

/// If G/C_G(O_p(G)) is a p-group, O_p(G) lies in the hypercenter.
pub fn check_hypercentral(g: &PermGroup) -> Result<LemmaReport> {
    let series = g.upper_central_series()?;
    let hyper = series.last().cloned().unwrap_or_else(|| PermGroup::trivial(g.degree()));
    let mut tested = Vec::new();
    let mut bad = Vec::new();
    for p in g.prime_divisors() {
        let o = g.o_p(p)?;
        if o.is_trivial() {
            continue;
        }
        let index = g.size()? / g.centralizer(&o)?.size()?;
        if p_part(index, p) != index {
            continue;
        }
        tested.push(p);
        if !o.is_subgroup_of(&hyper) {
            bad.push(p);
        }
    }
    let verdict = if tested.is_empty() { Verdict::NotApplicable } else { Verdict::from_bool(bad.is_empty()) };
    Ok(LemmaReport::new("hypercentral-p-subgroup", json!({"tested_primes": tested}), verdict, json!({"violating_primes": bad})))
}
