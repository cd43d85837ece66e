//! Classification of disconnected graphs and the diameter-three and
//! disconnected structure checkers.

use serde::Serialize;

use super::graph::{build_graph, check_palfy, Diameter, PrimeGraph};
use super::structure::{
    as_set, is_cyclic_quotient, noncentral_primes, nonabelian_primes, quotient_degrees, section_module, Structure,
};
use crate::algebra::arith::{p_part, prime_divisors};
use crate::characters::{degree_oracle, DegreeMultiset};
use crate::cliffordcd::{clifford_degrees, CliffordSpec};
use crate::error::{Error, Result};
use crate::permgrp::PermGroup;
use crate::report::Verdict;
use crate::semilin::{embeds_in_gamma, GammaEmbedding, Irreducibility, SemilinearGroup};

const SEED: u64 = 0x0dd5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DisconnectedType {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Group,
    Spec,
    GraphOnly,
}

/// One checked sub-claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn claim(name: &str, verdict: Verdict, detail: impl Into<Option<String>>) -> Claim {
    Claim { name: name.into(), verdict, detail: detail.into() }
}

fn holds(name: &str, ok: bool, detail: impl Into<Option<String>>) -> Claim {
    claim(name, Verdict::from_bool(ok), detail)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimsReport {
    pub verdict: Verdict,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub claims: Vec<Claim>,
}

impl ClaimsReport {
    fn not_applicable(mode: Mode, reason: impl Into<String>) -> ClaimsReport {
        ClaimsReport { verdict: Verdict::NotApplicable, mode, branch: None, reason: Some(reason.into()), claims: vec![] }
    }

    fn from_claims(mode: Mode, branch: Option<String>, claims: Vec<Claim>) -> ClaimsReport {
        ClaimsReport { verdict: Verdict::combine(claims.iter().map(|c| c.verdict)), mode, branch, reason: None, claims }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationVerdict {
    pub vertices: Vec<u64>,
    pub components: Vec<Vec<u64>>,
    pub connected: bool,
    /// `None` for the empty graph.
    pub diameter: Option<Diameter>,
    pub palfy_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnected_type: Option<DisconnectedType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClaimsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter_three: Option<ClaimsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnected_structure: Option<ClaimsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi1: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi2: Option<Vec<u64>>,
}

impl ClassificationVerdict {
    pub fn of_graph(g: &PrimeGraph) -> ClassificationVerdict {
        let components = g.components();
        ClassificationVerdict {
            vertices: g.vertices.clone(),
            connected: components.len() <= 1,
            components,
            diameter: (!g.vertices.is_empty()).then(|| g.diameter()),
            palfy_ok: check_palfy(g),
            disconnected_type: None,
            classification: None,
            diameter_three: None,
            disconnected_structure: None,
            pi1: None,
            pi2: None,
        }
    }

    /// Worst verdict over the claim reports present.
    pub fn verdict(&self) -> Verdict {
        let palfy = Verdict::from_bool(self.palfy_ok);
        Verdict::combine([self.classification.as_ref(), self.diameter_three.as_ref(), self.disconnected_structure.as_ref()].into_iter().flatten().map(|r| r.verdict).chain([palfy]))
    }
}

fn same_partition(got: &[Vec<u64>], want: [Vec<u64>; 2]) -> bool {
    let mut g: Vec<_> = got.iter().map(|c| as_set(c)).collect();
    let mut w: Vec<_> = want.iter().map(|c| as_set(c)).collect();
    g.sort();
    w.sort();
    g == w
}

fn fmt_sets(sets: &[Vec<u64>]) -> String {
    format!("{sets:?}")
}

fn check_order(g: &PermGroup, cd: &DegreeMultiset) -> Result<()> {
    if g.order_u128()? != cd.order() {
        return Err(Error::invalid(format!("degree multiset of order {} does not belong to a group of order {}", cd.order(), g.order())));
    }
    Ok(())
}

/// Primes r whose Sylow r-subgroup is normal and non-abelian.
fn normal_nonabelian_sylows(g: &PermGroup, order: u64) -> Result<Vec<(u64, PermGroup)>> {
    let mut out = Vec::new();
    for r in g.prime_divisors() {
        let o = g.o_p(r)?;
        if o.size()? == p_part(order, r) && !o.is_abelian() {
            out.push((r, o));
        }
    }
    Ok(out)
}

fn irreducible_claim(name: &str, irr: Irreducibility) -> Claim {
    match irr {
        Irreducibility::Irreducible { certificate } => claim(name, Verdict::Pass, Some(certificate)),
        Irreducibility::Reducible { submodule_dim, .. } => claim(name, Verdict::Fail, Some(format!("submodule of dimension {submodule_dim}"))),
        Irreducibility::Undecided => claim(name, Verdict::Unchecked, Some("irreducibility undecided".to_string())),
    }
}

fn embedding_claim(name: &str, e: Result<GammaEmbedding>) -> Claim {
    match e {
        Ok(GammaEmbedding::Embedded { field_order, .. }) => claim(name, Verdict::Pass, Some(format!("embeds in Gamma({field_order})"))),
        Ok(GammaEmbedding::NotEmbedded { reason, .. }) => claim(name, Verdict::Fail, Some(reason)),
        Err(e) => claim(name, Verdict::Unchecked, Some(e.to_string())),
    }
}

fn type_a_claims(g: &PermGroup, graph: &PrimeGraph, st: &Structure) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let sylows = normal_nonabelian_sylows(g, st.order)?;
    claims.push(holds("G = PH with P a normal non-abelian Sylow subgroup", sylows.len() == 1, format!("primes {:?}", sylows.iter().map(|s| s.0).collect::<Vec<_>>())));
    let Some((p, big_p)) = sylows.into_iter().next() else { return Ok(claims) };
    let h = g.p_complement(p)?;
    claims.push(holds("p-complement H is abelian", h.is_abelian(), None));
    let n = big_p.centralizer(&h)?;
    claims.push(holds("P' <= C_P(H)", big_p.derived_subgroup().is_subgroup_of(&n), None));
    let index = big_p.size()? / n.size()?;
    if n.is_subgroup_of(&big_p.center()?) {
        let cd_p = degree_oracle(&big_p)?;
        let bad: Vec<u64> = cd_p.support().into_iter().filter(|&d| d > 1 && d * d != index).collect();
        claims.push(holds("non-linear characters of P fully ramified over C_P(H)", bad.is_empty(), format!("|P : C_P(H)| = {index}, offending degrees {bad:?}")));
    } else {
        claims.push(claim("non-linear characters of P fully ramified over C_P(H)", Verdict::Unchecked, Some("C_P(H) is not central in P".into())));
    }
    let want = [vec![p], st.pi_g_over_f()?];
    claims.push(holds("components are {p} and pi(G/F)", same_partition(&graph.components(), want.clone()), format!("predicted {}", fmt_sets(&want))));
    Ok(claims)
}

/// Claims of the abelian-Fitting type; reused on G/P' for the third type.
fn type_b_claims(g: &PermGroup, graph: &PrimeGraph, st: &Structure) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let ncp = noncentral_primes(g, &st.center)?;
    let Some(&p) = ncp.first() else {
        claims.push(holds("a prime with non-central O_p exists", false, None));
        return Ok(claims);
    };
    let m = PermGroup::commutator(&g.o_p(p)?, g);
    claims.push(holds("M = [O_p(G), G] is elementary abelian", !m.is_trivial() && m.is_elementary_abelian() && m.prime() == Some(p), format!("|M| = {}", m.size()?)));
    let m_order = m.size()?;
    if m_order % p != 0 || !m.is_elementary_abelian() {
        return Ok(claims);
    }
    if p_part(st.order, p) == m_order {
        claims.push(holds("M has a complement H", true, Some("M is a Sylow subgroup".to_string())));
    } else {
        claims.push(claim("M has a complement H", Verdict::Unchecked, Some("M is not a Hall subgroup".to_string())));
    }
    let z = &st.center;
    let meets = m.intersection(z)?;
    claims.push(holds("F = M x Z(G)", meets.is_trivial() && st.fitting.size()? == m_order * z.size()?, None));
    claims.push(holds("C_G(M) = F, so Z(G) = C_H(M)", g.centralizer(&m)?.same_group(&st.fitting), None));
    let sec = section_module(g, &m, &PermGroup::trivial(g.degree()), p)?;
    claims.push(embedding_claim("G/F embeds in Gamma(M)", embeds_in_gamma(&sec.module, SEED)));
    let sec_k = section_module(&st.fitting2, &m, &PermGroup::trivial(g.degree()), p)?;
    claims.push(irreducible_claim("K acts irreducibly on M", sec_k.module.irreducibility(SEED)));
    claims.push(holds("K/F is cyclic", is_cyclic_quotient(&st.fitting2, &st.fitting)?, None));
    claims.push(holds("G/K is cyclic", is_cyclic_quotient(g, &st.fitting2)?, None));
    let want = [st.pi_k_over_f()?, st.pi_g_over_k()?];
    claims.push(holds("components are pi(K/F) and pi(G/K)", same_partition(&graph.components(), want.clone()), format!("predicted {}", fmt_sets(&want))));
    Ok(claims)
}

fn type_c_claims(g: &PermGroup, graph: &PrimeGraph, st: &Structure) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let sylows = normal_nonabelian_sylows(g, st.order)?;
    claims.push(holds("G = PH with P a normal non-abelian Sylow subgroup", sylows.len() == 1, None));
    let Some((p, big_p)) = sylows.into_iter().next() else { return Ok(claims) };
    let u = st.fitting.p_complement(p)?;
    claims.push(holds("F = P x U with U central", u.is_subgroup_of(&st.center) && st.fitting.size()? == big_p.size()? * u.size()?, None));
    let pd = big_p.derived_subgroup();
    let q = crate::permgrp::Quotient::new(g, &pd)?;
    let qg = q.group;
    let qcd = degree_oracle(&qg)?;
    let qgraph = build_graph(&qcd);
    let qst = Structure::compute(&qg)?;
    claims.push(holds("G/P' has abelian Fitting subgroup", qst.fitting.is_abelian(), None));
    claims.push(holds("graph of G/P' is disconnected", !qgraph.is_connected(), format!("components {}", fmt_sets(&qgraph.components()))));
    for c in type_b_claims(&qg, &qgraph, &qst)? {
        claims.push(Claim { name: format!("G/P': {}", c.name), ..c });
    }
    claims.push(holds("K/F is cyclic", is_cyclic_quotient(&st.fitting2, &st.fitting)?, None));
    claims.push(holds("G/K is cyclic", is_cyclic_quotient(g, &st.fitting2)?, None));
    let mut first = st.pi_k_over_f()?;
    first.push(p);
    first.sort_unstable();
    first.dedup();
    let want = [first, st.pi_g_over_k()?];
    claims.push(holds("components are {p} u pi(K/F) and pi(G/K)", same_partition(&graph.components(), want.clone()), format!("predicted {}", fmt_sets(&want))));
    Ok(claims)
}

/// Decides the type of a solvable group with two-component graph and checks
/// the structure each applicable type asserts.
pub fn classify_disconnected(g: &PermGroup, cd: &DegreeMultiset) -> Result<ClassificationVerdict> {
    check_order(g, cd)?;
    let graph = build_graph(cd);
    let mut v = ClassificationVerdict::of_graph(&graph);
    if v.components.len() != 2 {
        v.classification = Some(ClaimsReport::not_applicable(Mode::Group, "graph does not have exactly two components"));
        return Ok(v);
    }
    if !g.is_solvable() {
        v.classification = Some(ClaimsReport::not_applicable(Mode::Group, "group is not solvable"));
        return Ok(v);
    }
    let st = Structure::compute(g)?;
    let ncp = noncentral_primes(g, &st.center)?;
    let mut claims = vec![holds("unique prime with non-central O_p", ncp.len() == 1, format!("primes {ncp:?}"))];
    let mut applicable = Vec::new();
    if st.fitting_height <= 2 {
        applicable.push(DisconnectedType::A);
    }
    let f_abelian = st.fitting.is_abelian();
    if f_abelian && graph.vertices.len() > 2 {
        applicable.push(DisconnectedType::B);
    }
    if !f_abelian {
        let isolated_nonabelian = nonabelian_primes(g)?.into_iter().any(|r| graph.is_isolated(r));
        if !isolated_nonabelian {
            applicable.push(DisconnectedType::C);
        }
    }
    for t in &applicable {
        let (tag, sub) = match t {
            DisconnectedType::A => ("a", type_a_claims(g, &graph, &st)?),
            DisconnectedType::B => ("b", type_b_claims(g, &graph, &st)?),
            DisconnectedType::C => ("c", type_c_claims(g, &graph, &st)?),
        };
        claims.extend(sub.into_iter().map(|c| Claim { name: format!("({tag}) {}", c.name), ..c }));
    }
    v.disconnected_type = applicable.first().copied();
    let branch = (!applicable.is_empty()).then(|| applicable.iter().map(|t| format!("{t:?}").to_lowercase()).collect::<Vec<_>>().join(","));
    let mut report = ClaimsReport::from_claims(Mode::Group, branch, claims);
    if applicable.is_empty() {
        report.reason = Some("no type hypothesis holds (abelian F with two vertices, or an isolated prime with non-abelian O_r)".into());
    }
    v.classification = Some(report);
    Ok(v)
}

/// Chief-factor claims for the lower central factors of P and [P,G]/P'.
fn layer_claims(g: &PermGroup, p: u64, big_p: &PermGroup, min_n: u32, need_two_odd: bool) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let lcs = big_p.lower_central_series()?;
    let pd = lcs.get(1).cloned().unwrap_or_else(|| PermGroup::trivial(g.degree()));
    let mut sections = vec![(PermGroup::commutator(big_p, g), pd.clone())];
    for w in lcs.windows(2).skip(1) {
        sections.push((w[0].clone(), w[1].clone()));
    }
    let mut dims = Vec::new();
    for (i, (a, b)) in sections.iter().enumerate() {
        let label = format!("M{}", i + 1);
        match section_module(g, a, b, p) {
            Ok(sec) => {
                dims.push(sec.dim as u32);
                claims.push(irreducible_claim(&format!("{label} is a chief factor"), sec.module.irreducibility(SEED)));
                claims.push(embedding_claim(&format!("G/C_G({label}) embeds irreducibly in Gamma(p^n)"), embeds_in_gamma(&sec.module, SEED)));
            }
            Err(e) => claims.push(claim(&format!("{label} is a chief factor"), Verdict::Fail, Some(e.to_string()))),
        }
    }
    let n = dims.first().copied().unwrap_or(0);
    claims.push(holds("all factors have the same order p^n", dims.iter().all(|&d| d == n), format!("dimensions {dims:?}")));
    claims.push(holds(&format!("n >= {min_n}"), n >= min_n, format!("n = {n}")));
    if need_two_odd {
        let odd = prime_divisors(n as u64).into_iter().filter(|&r| r != 2).count();
        claims.push(holds("n divisible by two distinct odd primes", odd >= 2, format!("n = {n}")));
    }
    Ok(claims)
}

/// Disconnected graph with non-abelian F: a unique non-central O_p and
/// either p isolated or the layered structure of G/P'.
pub fn check_disconnected_structure(g: &PermGroup, cd: &DegreeMultiset) -> Result<ClassificationVerdict> {
    check_order(g, cd)?;
    let graph = build_graph(cd);
    let mut v = ClassificationVerdict::of_graph(&graph);
    if v.connected {
        v.disconnected_structure = Some(ClaimsReport::not_applicable(Mode::Group, "graph is connected"));
        return Ok(v);
    }
    if !g.is_solvable() {
        v.disconnected_structure = Some(ClaimsReport::not_applicable(Mode::Group, "group is not solvable"));
        return Ok(v);
    }
    let st = Structure::compute(g)?;
    if st.fitting.is_abelian() {
        v.disconnected_structure = Some(ClaimsReport::not_applicable(Mode::Group, "Fitting subgroup is abelian"));
        return Ok(v);
    }
    let ncp = noncentral_primes(g, &st.center)?;
    let mut claims = vec![holds("unique prime with non-central O_p", ncp.len() == 1, format!("primes {ncp:?}"))];
    let Some(&p) = ncp.first() else {
        v.disconnected_structure = Some(ClaimsReport::from_claims(Mode::Group, None, claims));
        return Ok(v);
    };
    let branch;
    if graph.is_isolated(p) || !graph.contains(p) {
        branch = "i";
        claims.push(holds("p is an isolated vertex", graph.is_isolated(p), format!("p = {p}")));
    } else {
        branch = "ii";
        let big_p = g.o_p(p)?;
        let qcd = quotient_degrees(g, &big_p.derived_subgroup())?;
        let qgraph = build_graph(&qcd);
        claims.push(holds("graph of G/P' is disconnected", !qgraph.is_connected(), format!("components {}", fmt_sets(&qgraph.components()))));
        claims.extend(layer_claims(g, p, &big_p, 3, false)?);
    }
    v.disconnected_structure = Some(ClaimsReport::from_claims(Mode::Group, Some(branch.into()), claims));
    Ok(v)
}

/// What the diameter-three checker may use.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Group(&'a PermGroup),
    Spec(&'a CliffordSpec),
    GraphOnly,
}

/// Sylow subgroups of H all cyclic.
pub fn semilinear_sylows_cyclic(h: &SemilinearGroup) -> Result<bool> {
    let order = h.order();
    let needs: Vec<u64> = prime_divisors(order).into_iter().filter(|&r| order % (r * r) == 0).collect();
    if needs.is_empty() {
        return Ok(true);
    }
    let elems = h.elements()?;
    Ok(needs.iter().all(|&r| {
        let full = p_part(order, r);
        elems.iter().any(|&x| h.elem_order(x) % full == 0)
    }))
}

type PiSets = (Vec<u64>, Vec<u64>);

fn graph_claims(graph: &PrimeGraph, p: Option<u64>) -> (Vec<Claim>, Option<PiSets>) {
    let mut claims = Vec::new();
    let Some((pi1, pi2)) = graph.pi_sets(p) else {
        return (vec![holds("diametral neighborhoods exist", false, None)], None);
    };
    let disjoint = pi1.iter().all(|x| !pi2.contains(x));
    let union = {
        let mut u: Vec<u64> = pi1.iter().chain(&pi2).copied().collect();
        u.sort_unstable();
        u.dedup();
        u == graph.vertices
    };
    claims.push(holds("pi1 and pi2 partition the vertices", disjoint && union, format!("pi1 = {pi1:?}, pi2 = {pi2:?}")));
    claims.push(holds("pi1 and pi2 induce complete subgraphs", graph.is_complete_on(&pi1) && graph.is_complete_on(&pi2), None));
    let bound = 1u64.checked_shl(pi2.len() as u32).unwrap_or(u64::MAX);
    claims.push(holds("|pi1| >= 2^|pi2|", pi1.len() as u64 >= bound, format!("{} >= {bound}", pi1.len())));
    claims.push(holds("2 not in pi2", !pi2.contains(&2), None));
    claims.push(holds("|pi2| >= 2", pi2.len() >= 2, None));
    match p {
        Some(p) => {
            claims.push(holds("p in pi1", pi1.contains(&p), format!("p = {p}")));
            let far = graph.vertices.iter().all(|&v| graph.distance(p, v).is_some_and(|d| d <= 2));
            claims.push(holds("d(p, v) <= 2 for every vertex v", far, None));
            let (r, s) = graph.diametral_pair().expect("diameter three");
            let endpoint = graph.vertices.iter().any(|&v| graph.distance(p, v) == Some(3));
            claims.push(holds("p is not an end of a diametral pair", !endpoint, format!("pair ({r}, {s})")));
        }
        None => {
            for name in ["p in pi1", "d(p, v) <= 2 for every vertex v", "p is not an end of a diametral pair"] {
                claims.push(claim(name, Verdict::Unchecked, Some("no group provided; graph-only mode".to_string())));
            }
        }
    }
    (claims, Some((pi1, pi2)))
}

/// Connected graph of diameter three: structural conclusions on the group,
/// or the graph-level subset for a spec or a bare degree set.
pub fn check_diameter_three(subject: Subject<'_>, cd: &DegreeMultiset) -> Result<ClassificationVerdict> {
    let graph = build_graph(cd);
    let mut v = ClassificationVerdict::of_graph(&graph);
    let mode = match subject {
        Subject::Group(_) => Mode::Group,
        Subject::Spec(_) => Mode::Spec,
        Subject::GraphOnly => Mode::GraphOnly,
    };
    if v.diameter != Some(Diameter::Finite(3)) {
        let d = v.diameter.map_or_else(|| "undefined".to_string(), |d| d.to_string());
        v.diameter_three = Some(ClaimsReport::not_applicable(mode, format!("diameter is {d}")));
        return Ok(v);
    }
    let mut claims = Vec::new();
    let mut branch = None;
    match subject {
        Subject::GraphOnly => {
            let (c, pis) = graph_claims(&graph, None);
            claims.extend(c);
            claims.push(claim("group structure", Verdict::Unchecked, Some("no group provided; graph-only mode".to_string())));
            if let Some((a, b)) = pis {
                v.pi1 = Some(a);
                v.pi2 = Some(b);
            }
        }
        Subject::Spec(spec) => {
            let h = &spec.h;
            let p = spec.p();
            let (c, pis) = graph_claims(&graph, Some(p));
            claims.extend(c);
            let f = h.fitting_order();
            claims.push(holds("H is not nilpotent", f < h.order(), format!("|F(H)| = {f}, |H| = {}", h.order())));
            claims.push(holds("H has cyclic Sylow subgroups", semilinear_sylows_cyclic(h)?, None));
            if let Some((pi1, pi2)) = &pis {
                let mut want1 = prime_divisors(f);
                want1.push(p);
                want1.sort_unstable();
                want1.dedup();
                claims.push(holds("pi1 = {p} u pi(F(H))", *pi1 == want1, format!("predicted {want1:?}")));
                claims.push(holds("pi2 = pi(H/F(H))", *pi2 == prime_divisors(h.order() / f), None));
            }
            if spec.layers.len() >= 2 {
                let top = clifford_degrees(&spec.truncated(2)?)?;
                let tg = build_graph(&top);
                let ok = !tg.is_connected() && tg.vertices == graph.vertices;
                claims.push(holds("graph of G/gamma_3(P) is disconnected on the same vertices", ok, format!("components {}", fmt_sets(&tg.components()))));
                if let Some((pi1, pi2)) = &pis {
                    claims.push(holds("its components are pi1 and pi2", same_partition(&tg.components(), [pi1.clone(), pi2.clone()]), None));
                }
            }
            let odd = prime_divisors(spec.n() as u64).into_iter().filter(|&r| r != 2).count();
            claims.push(holds("n divisible by two distinct odd primes", odd >= 2, format!("n = {}", spec.n())));
            claims.push(holds("all layers are irreducible of order p^n", true, Some("validated when the spec was built".to_string())));
            claims.push(holds("Fitting height is 3", f < h.order(), Some("F(G) = P, F_2(G)/P = F(H), H metacyclic".to_string())));
            if let Some((a, b)) = pis {
                v.pi1 = Some(a);
                v.pi2 = Some(b);
            }
        }
        Subject::Group(g) => {
            check_order(g, cd)?;
            if !g.is_solvable() {
                v.diameter_three = Some(ClaimsReport::not_applicable(mode, "group is not solvable"));
                return Ok(v);
            }
            let st = Structure::compute(g)?;
            let sylows = normal_nonabelian_sylows(g, st.order)?;
            claims.push(holds("G = PH with P a normal non-abelian Sylow subgroup", sylows.len() == 1, None));
            let p = sylows.first().map(|s| s.0);
            let (c, pis) = graph_claims(&graph, p);
            claims.extend(c);
            if let Some((p, big_p)) = sylows.into_iter().next() {
                branch = Some(format!("p = {p}"));
                let h = g.p_complement(p)?;
                let a = h.centralizer(&big_p)?;
                claims.push(holds("F = P x A with A = C_H(P)", st.fitting.size()? == big_p.size()? * a.size()?, None));
                claims.push(holds("A <= Z(G)", a.is_subgroup_of(&st.center), None));
                claims.push(holds("H/A is not nilpotent", st.fitting2.size()? < st.order, None));
                let gf = st.order / st.fitting.size()?;
                let mut cyclic = true;
                for r in prime_divisors(gf) {
                    let full = p_part(gf, r);
                    let mut found = false;
                    g.for_each_element(|x| {
                        if PermGroup::order_modulo(x, &st.fitting) % full == 0 {
                            found = true;
                            return std::ops::ControlFlow::Break(());
                        }
                        std::ops::ControlFlow::Continue(())
                    })?;
                    cyclic &= found;
                }
                claims.push(holds("H/A has cyclic Sylow subgroups", cyclic, None));
                let lcs = big_p.lower_central_series()?;
                let g3 = lcs.get(2).cloned().unwrap_or_else(|| PermGroup::trivial(g.degree()));
                let qgraph = build_graph(&quotient_degrees(g, &g3)?);
                claims.push(holds("graph of G/gamma_3(P) is disconnected", !qgraph.is_connected(), None));
                claims.extend(layer_claims(g, p, &big_p, 1, true)?);
                if let Some((pi1, pi2)) = &pis {
                    let pi_f2_z = prime_divisors(st.fitting2.size()? / st.center.size()?);
                    claims.push(holds("pi1 = pi(F_2/Z)", *pi1 == pi_f2_z, None));
                    claims.push(holds("pi2 = pi(G/F_2)", *pi2 == st.pi_g_over_k()?, None));
                }
                claims.push(holds("Fitting height is 3", st.fitting_height == 3, format!("height {}", st.fitting_height)));
            }
            if let Some((a, b)) = pis {
                v.pi1 = Some(a);
                v.pi2 = Some(b);
            }
        }
    }
    v.diameter_three = Some(ClaimsReport::from_claims(mode, branch, claims));
    Ok(v)
}
