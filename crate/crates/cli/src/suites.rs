//! Verification suites run by `cdgraph verify`.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use cdgraph_core::algebra::arith::{is_probable_prime_big, prime_divisors, prime_power};
use cdgraph_core::algebra::zsigmondy::is_zsigmondy_exception;
use cdgraph_core::algebra::{minimal_order_search, zsigmondy_ppd};
use cdgraph_core::analysis::{analyze_timed, analyze_with, Analysis, Input, Timings};
use cdgraph_core::characters::{count_with, CentralSetup, CharacterRamification};
use cdgraph_core::cliffordcd::CliffordSpec;
use cdgraph_core::constructions::{named, ramification_instances, Named};
use cdgraph_core::graphkit::Diameter;
use cdgraph_core::limits;
use cdgraph_core::permgrp::PermGroup;
use cdgraph_core::report::{LemmaReport, Verdict};
use cdgraph_core::semilin::{admissible_deltas, check_ppd_centralizer, check_semilinear0, check_semilinear1, field_table, module_lemma_sweep, SemilinearGroup};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::error::{CliError, CliResult};
use crate::inputs::{Corpus, Loaded, Subject};

/// Every suite id accepted by `verify`, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "zsigmondy",
    "palfy",
    "diameter",
    "lemmas",
    "classification",
    "clifford",
    "ramification",
    "semilinear0",
    "semilinear1",
    "ppd",
    "modules",
    "lewis",
    "minimal",
];

const CORPUS_SUITES: &[&str] = &["palfy", "diameter", "lemmas", "classification", "clifford"];

pub fn uses_corpus(suite: &str) -> bool {
    suite == "all" || CORPUS_SUITES.contains(&suite)
}

/// Sweep ranges. Defaults reproduce the documented sweeps.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Params {
    pub a_max: u64,
    pub n_max: u32,
    pub qm_max: u64,
    /// Field orders swept exhaustively by `semilinear0`.
    pub fields: Vec<u64>,
    /// Field orders sampled by `semilinear0`.
    pub sample_fields: Vec<u64>,
    pub per_shape: usize,
    /// Field orders swept by `semilinear1` and `ppd`.
    pub small_fields: Vec<u64>,
    pub bound_log_min: u32,
    pub bound_log_max: u32,
}

impl Default for Params {
    fn default() -> Params {
        Params {
            a_max: 50,
            n_max: 24,
            qm_max: 4096,
            fields: vec![8, 16, 27, 64, 81],
            sample_fields: vec![1 << 15],
            per_shape: 2,
            small_fields: vec![4, 8, 9, 16, 25, 27, 49, 64],
            bound_log_min: 15,
            bound_log_max: 60,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub subject: String,
    pub report: LemmaReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub verdict: Verdict,
    pub checked: usize,
    pub not_applicable: usize,
    pub failures: Vec<Failure>,
    pub summary: Value,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    not_applicable: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn add(&mut self, subject: &str, r: LemmaReport) {
        match r.verdict {
            Verdict::Pass => self.checked += 1,
            Verdict::Fail => {
                self.checked += 1;
                self.failures.push(Failure { subject: subject.to_string(), report: r });
            }
            Verdict::NotApplicable | Verdict::Unchecked => self.not_applicable += 1,
        }
    }

    fn finish(self, suite: &str, summary: Value) -> SuiteOutcome {
        let verdict = if !self.failures.is_empty() {
            Verdict::Fail
        } else if self.checked > 0 {
            Verdict::Pass
        } else {
            Verdict::NotApplicable
        };
        SuiteOutcome { suite: suite.into(), verdict, checked: self.checked, not_applicable: self.not_applicable, failures: self.failures, summary }
    }
}

/// Runs an analysis, reusing and filling the degree cache for groups.
pub fn analyze_cached(name: &str, group: &PermGroup, spec: Option<&CliffordSpec>, cache: Option<&Cache>) -> CliResult<(Analysis, Timings)> {
    let known = cache.and_then(|c| c.get(group));
    let hit = known.is_some();
    let (a, t) = analyze_with(name, Input::Group { group, spec }, known)?;
    if let (Some(c), false) = (cache, hit) {
        c.put(group, &a.cd)?;
    }
    Ok((a, t))
}

pub fn analyze_loaded(loaded: &Loaded, cache: Option<&Cache>) -> CliResult<(Analysis, Timings)> {
    match &loaded.subject {
        Subject::Spec(s) => Ok(analyze_timed(&loaded.id.name, Input::Spec(s))?),
        Subject::Group { group, spec } => analyze_cached(&loaded.id.name, group, spec.as_ref(), cache),
    }
}

/// Shared state of one `verify` run; the corpus is analyzed at most once.
pub struct Ctx<'a> {
    pub params: Params,
    pub seed: u64,
    pub corpus: Option<&'a Corpus>,
    pub cache: Option<&'a Cache>,
    analyses: OnceLock<Vec<Analysis>>,
}

impl<'a> Ctx<'a> {
    pub fn new(params: Params, seed: u64, corpus: Option<&'a Corpus>, cache: Option<&'a Cache>) -> Ctx<'a> {
        Ctx { params, seed, corpus, cache, analyses: OnceLock::new() }
    }

    fn analyses(&self) -> CliResult<&[Analysis]> {
        if let Some(a) = self.analyses.get() {
            return Ok(a);
        }
        let corpus = self.corpus.ok_or_else(|| CliError::Usage("this suite needs --corpus".into()))?;
        let out: Vec<Analysis> = corpus
            .entries
            .par_iter()
            .map(|b| analyze_cached(&b.recipe.name, &b.group, b.spec.as_ref(), self.cache).map(|(a, _)| a))
            .collect::<CliResult<_>>()?;
        Ok(self.analyses.get_or_init(|| out))
    }
}

/// Runs one suite, or every suite for `all`, returning outcomes and per-suite milliseconds.
pub fn run(suite: &str, ctx: &Ctx<'_>) -> CliResult<(Vec<SuiteOutcome>, Timings)> {
    let ids: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::UnknownSuite(suite.into(), format!("{}, all", SUITES.join(", "))));
    };
    let mut outcomes = Vec::new();
    let mut timings = Timings::new();
    for id in ids {
        let start = Instant::now();
        outcomes.push(run_one(id, ctx)?);
        timings.insert(id.to_string(), start.elapsed().as_millis());
    }
    Ok((outcomes, timings))
}

fn run_one(suite: &str, ctx: &Ctx<'_>) -> CliResult<SuiteOutcome> {
    let p = &ctx.params;
    match suite {
        "zsigmondy" => zsigmondy(p.a_max, p.n_max),
        "palfy" => palfy(ctx.analyses()?),
        "diameter" => diameter(ctx.analyses()?),
        "lemmas" => lemmas(ctx.analyses()?),
        "classification" => classification(ctx.analyses()?),
        "clifford" => clifford(ctx.analyses()?),
        "ramification" => ramification(),
        "semilinear0" => semilinear0(&p.fields, &p.sample_fields, p.per_shape, ctx.seed),
        "semilinear1" => semilinear1(&p.small_fields, ctx.seed),
        "ppd" => ppd(&p.small_fields),
        "modules" => modules(p.qm_max),
        "lewis" => lewis(),
        "minimal" => minimal(p.bound_log_min, p.bound_log_max),
        other => Err(CliError::UnknownSuite(other.into(), SUITES.join(", "))),
    }
}

pub fn zsigmondy(a_max: u64, n_max: u32) -> CliResult<SuiteOutcome> {
    let pairs: Vec<(u64, u32)> = (2..=a_max).flat_map(|a| (1..=n_max).map(move |n| (a, n))).collect();
    let results: Vec<(u64, u32, Option<BigUint>)> = pairs.par_iter().map(|&(a, n)| zsigmondy_ppd(a, n).map(|r| (a, n, r))).collect::<Result<_, _>>()?;
    let mut t = Tally::default();
    let mut exceptions = Vec::new();
    for (a, n, r) in results {
        let ok = match &r {
            None => {
                exceptions.push((a, n));
                is_zsigmondy_exception(a, n)
            }
            Some(t) => !is_zsigmondy_exception(a, n) && is_primitive_prime_divisor(t, a, n),
        };
        let subject = format!("({a}, {n})");
        t.add(&subject, LemmaReport::new("zsigmondy", json!({"a": a, "n": n}), Verdict::from_bool(ok), json!({"ppd": r.map(|x| x.to_string())})));
    }
    Ok(t.finish("zsigmondy", json!({"a_max": a_max, "n_max": n_max, "exceptions": exceptions})))
}

/// Direct check: t is prime, divides a^n - 1 and no a^j - 1 with j < n.
fn is_primitive_prime_divisor(t: &BigUint, a: u64, n: u32) -> bool {
    let one = BigUint::from(1u32);
    let a = BigUint::from(a) % t;
    is_probable_prime_big(t) && a.modpow(&BigUint::from(n), t) == one && (1..n).all(|j| a.modpow(&BigUint::from(j), t) != one)
}

fn solvable(a: &Analysis) -> bool {
    a.structure.as_ref().is_some_and(|s| s.solvable)
}

pub fn palfy(analyses: &[Analysis]) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let mut nonsolvable = Vec::new();
    for a in analyses {
        if !solvable(a) {
            nonsolvable.push(json!({"group": a.name, "palfy_ok": a.verdicts.palfy_ok}));
            t.add(&a.name, LemmaReport::new("palfy", json!({}), Verdict::NotApplicable, json!(null)).with_reason("group is not solvable"));
            continue;
        }
        let witness = json!({"vertices": a.graph.vertices, "independent_triple": a.graph.independent_triple()});
        t.add(&a.name, LemmaReport::new("palfy", json!({}), Verdict::from_bool(a.verdicts.palfy_ok), witness));
    }
    let solvable_count = analyses.iter().filter(|a| solvable(a)).count();
    Ok(t.finish("palfy", json!({"groups": analyses.len(), "solvable": solvable_count, "non_solvable": nonsolvable})))
}

pub fn diameter(analyses: &[Analysis]) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let mut shapes = BTreeMap::new();
    for a in analyses {
        if !solvable(a) {
            t.add(&a.name, LemmaReport::new("diameter", json!({}), Verdict::NotApplicable, json!(null)).with_reason("group is not solvable"));
            continue;
        }
        let comps = &a.metrics.components;
        let (ok, shape) = match a.verdicts.diameter {
            None => (true, "empty".to_string()),
            Some(Diameter::Finite(d)) => (d <= 3, format!("diameter {d}")),
            Some(Diameter::Infinite) => (comps.len() == 2 && comps.iter().all(|c| a.graph.is_complete_on(c)), "two components".to_string()),
        };
        *shapes.entry(shape).or_insert(0usize) += 1;
        t.add(&a.name, LemmaReport::new("diameter", json!({}), Verdict::from_bool(ok), json!({"components": comps, "diameter": a.verdicts.diameter})));
    }
    Ok(t.finish("diameter", json!({"shapes": shapes})))
}

pub fn lemmas(analyses: &[Analysis]) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let mut by_lemma: BTreeMap<String, BTreeMap<Verdict, usize>> = BTreeMap::new();
    for a in analyses {
        for l in &a.lemmas {
            *by_lemma.entry(l.lemma.clone()).or_default().entry(l.verdict).or_insert(0) += 1;
            t.add(&a.name, l.clone());
        }
    }
    Ok(t.finish("lemmas", json!({"by_lemma": by_lemma})))
}

pub fn classification(analyses: &[Analysis]) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let mut types = BTreeMap::new();
    let mut branches = BTreeMap::new();
    for a in analyses {
        let v = &a.verdicts;
        if let Some(ty) = v.disconnected_type {
            types.insert(a.name.clone(), ty);
        }
        for (label, r) in [("classification", &v.classification), ("diameter-three", &v.diameter_three), ("disconnected-structure", &v.disconnected_structure)] {
            let Some(r) = r else { continue };
            if label == "disconnected-structure" {
                if let Some(b) = &r.branch {
                    branches.insert(a.name.clone(), b.clone());
                }
            }
            let mut lr = LemmaReport::new(label, json!({"branch": r.branch}), r.verdict, serde_json::to_value(&r.claims).expect("serializable"));
            lr.reason = r.reason.clone();
            t.add(&a.name, lr);
        }
    }
    let branch_ii: Vec<&String> = branches.iter().filter(|(_, b)| b.as_str() == "ii").map(|(n, _)| n).collect();
    Ok(t.finish("classification", json!({"types": types, "disconnected_structure_branches": branches, "branch_ii_found": branch_ii})))
}

pub fn clifford(analyses: &[Analysis]) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let mut compared = Vec::new();
    for a in analyses {
        let Some(agrees) = a.clifford_agrees else { continue };
        compared.push(json!({"group": a.name, "order": a.order}));
        t.add(&a.name, LemmaReport::new("clifford-oracle", json!({"order": a.order}), Verdict::from_bool(agrees), json!({"oracle": a.cd.pairs()})));
    }
    Ok(t.finish("clifford", json!({"compared": compared})))
}

pub fn ramification() -> CliResult<SuiteOutcome> {
    let instances = ramification_instances()?;
    let rows: Vec<(String, Vec<LemmaReport>, usize)> = instances
        .par_iter()
        .map(|inst| -> CliResult<_> {
            let setup = CentralSetup::new(&inst.p_group, &inst.n)?;
            let c = count_with(&setup)?;
            let params = json!({"p": c.p, "m": c.m, "n": c.n});
            let bound = match c.bound_holds() {
                Some(ok) => LemmaReport::new("ramification-bound", params.clone(), Verdict::from_bool(ok), json!({"count": c.count, "bound": c.bound})),
                None => LemmaReport::new("ramification-bound", params.clone(), Verdict::NotApplicable, json!({"count": c.count})).with_reason("needs n >= 1 and 2m > n"),
            };
            let mut out = vec![bound];
            let mut compared = 0;
            if inst.p_group.size()? <= limits::FORM_ORACLE_MAX_ORDER {
                let chars = CharacterRamification::with_setup(&inst.p_group, setup)?;
                let mut mismatches = Vec::new();
                for r in &c.records {
                    compared += 1;
                    if chars.is_fully_ramified(r.lambda_index)? != r.fully_ramified {
                        mismatches.push(r.lambda_index);
                    }
                }
                out.push(LemmaReport::new("form-criterion", params, Verdict::from_bool(mismatches.is_empty()), json!({"characters": compared, "mismatches": mismatches})));
            } else {
                out.push(LemmaReport::new("form-criterion", params, Verdict::NotApplicable, json!(null)).with_reason("|P| above FORM_ORACLE_MAX_ORDER"));
            }
            Ok((inst.name.clone(), out, compared))
        })
        .collect::<CliResult<_>>()?;
    let mut t = Tally::default();
    let mut characters = 0;
    for (name, reports, compared) in rows {
        characters += compared;
        for r in reports {
            t.add(&name, r);
        }
    }
    Ok(t.finish("ramification", json!({"instances": instances.len(), "characters_compared": characters})))
}

fn table_for(q: u64) -> CliResult<std::sync::Arc<cdgraph_core::algebra::GfTable>> {
    let (p, n) = prime_power(q).ok_or_else(|| CliError::Usage(format!("field order {q} is not a prime power")))?;
    Ok(field_table(p, n)?)
}

fn semilinear0_over(subs: &[SemilinearGroup], q: u64, mode: &str, t: &mut Tally) -> CliResult<Value> {
    let rows: Vec<Vec<(bool, LemmaReport)>> = subs
        .par_iter()
        .map(|h| -> CliResult<_> {
            admissible_deltas(h).iter().map(|d| check_semilinear0(h, d).map(|r| (r.hall_order > 1 && r.a, r.to_report(h)))).collect::<Result<Vec<_>, _>>().map_err(CliError::from)
        })
        .collect::<CliResult<_>>()?;
    let (mut instances, mut a_true) = (0, 0);
    for (a, r) in rows.into_iter().flatten() {
        instances += 1;
        a_true += usize::from(a);
        t.add(&format!("GF({q})"), r);
    }
    Ok(json!({"q": q, "mode": mode, "subgroups": subs.len(), "instances": instances, "a_true_nontrivial": a_true}))
}

pub fn semilinear0(fields: &[u64], sample_fields: &[u64], per_shape: usize, seed: u64) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let mut fields_out = Vec::new();
    for &q in fields {
        let subs = SemilinearGroup::all_subgroups(&table_for(q)?)?;
        fields_out.push(semilinear0_over(&subs, q, "exhaustive", &mut t)?);
    }
    for &q in sample_fields {
        let subs = SemilinearGroup::sampled_subgroups(&table_for(q)?, per_shape, seed)?;
        fields_out.push(semilinear0_over(&subs, q, "sampled", &mut t)?);
    }
    Ok(t.finish("semilinear0", json!({"fields": fields_out, "per_shape": per_shape})))
}

pub fn semilinear1(fields: &[u64], seed: u64) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    for &q in fields {
        for h in SemilinearGroup::all_subgroups(&table_for(q)?)? {
            for s in prime_divisors(h.order()) {
                let r = check_semilinear1(&h, s, seed)?;
                t.add(&format!("GF({q})"), LemmaReport::new("semilinear1", json!({"H": h.describe(), "s": s}), r.verdict, serde_json::to_value(&r).expect("serializable")));
            }
        }
    }
    Ok(t.finish("semilinear1", json!({"fields": fields})))
}

pub fn ppd(fields: &[u64]) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    for &q in fields {
        for h in SemilinearGroup::all_subgroups(&table_for(q)?)? {
            t.add(&format!("GF({q})"), check_ppd_centralizer(&h)?.to_report(&h));
        }
    }
    Ok(t.finish("ppd", json!({"fields": fields})))
}

pub fn modules(qm_max: u64) -> CliResult<SuiteOutcome> {
    let mut t = Tally::default();
    let reports = module_lemma_sweep(qm_max)?;
    let matrix_compared = reports.iter().filter(|r| r.matrix_agrees.is_some()).count();
    for r in &reports {
        t.add(&format!("q={} m={} |G|={}", r.q, r.m, r.group_order), r.to_report());
    }
    Ok(t.finish("modules", json!({"qm_max": qm_max, "cases": reports.len(), "matrix_compared": matrix_compared})))
}

/// Graph facts of the layered diameter-3 spec.
pub fn lewis() -> CliResult<SuiteOutcome> {
    let spec = match named("lewis")? {
        Named::Spec(s) => s,
        Named::Group(_) => return Err(CliError::Usage("`lewis` should name a spec".into())),
    };
    let (a, _) = analyze_timed("lewis", Input::Spec(&spec))?;
    let g = &a.graph;
    let order = BigUint::from(2u32).pow(45) * BigUint::from(32767u32) * BigUint::from(15u32);
    let pis = g.pi_sets(Some(2));
    let far: Vec<u64> = g.vertices.iter().copied().filter(|&v| g.distance(2, v).map_or(true, |d| d > 2)).collect();
    let mut t = Tally::default();
    let mut check = |name: &str, ok: bool, witness: Value| t.add("lewis", LemmaReport::new(name, json!({}), Verdict::from_bool(ok), witness));
    check("vertex-set", g.vertices == [2, 3, 5, 7, 31, 151], json!(g.vertices));
    check("diameter", a.verdicts.diameter == Some(Diameter::Finite(3)), json!(a.verdicts.diameter));
    check("distance-from-2", far.is_empty(), json!({"farther_than_2": far}));
    let pi_ok = pis.as_ref().is_some_and(|(p1, p2)| p1 == &[2, 7, 31, 151] && p2 == &[3, 5]);
    check("pi-sets", pi_ok, json!(pis));
    let ineq = pis.as_ref().is_some_and(|(p1, p2)| p1.len() >= 1 << p2.len());
    check("pi1-lower-bound", ineq, json!(pis.as_ref().map(|(p1, p2)| (p1.len(), 1usize << p2.len()))));
    check("sum-of-squares", a.cd.sum_of_squares() == order, json!(a.order));
    t.add("lewis", LemmaReport::new("graph-level-checks", json!({}), a.verdict, json!(a.verdicts.diameter_three)));
    Ok(t.finish("lewis", json!({"order": a.order, "cd": a.cd.pairs(), "vertices": g.vertices, "edges": g.edges})))
}

pub fn minimal(log_min: u32, log_max: u32) -> CliResult<SuiteOutcome> {
    if log_max >= 128 || log_min > log_max {
        return Err(CliError::Usage(format!("bound exponents must satisfy min <= max < 128, got {log_min}..{log_max}")));
    }
    let want = BigUint::from(2u32).pow(45) * BigUint::from(32767u32) * BigUint::from(15u32);
    let mut t = Tally::default();
    for k in log_min..=log_max {
        let found = minimal_order_search(1u128 << k)?;
        let ok = found.as_ref().is_some_and(|m| (m.p, m.n, m.d) == (2, 15, 15) && m.order == want);
        let witness = json!(found.as_ref().map(|m| json!({"p": m.p, "n": m.n, "d": m.d, "order": m.order.to_string()})));
        t.add(&format!("2^{k}"), LemmaReport::new("minimal-order", json!({"bound_log2": k}), Verdict::from_bool(ok), witness));
    }
    Ok(t.finish("minimal", json!({"bound_log_min": log_min, "bound_log_max": log_max, "expected_order": want.to_string()})))
}
