//! Brute-force checks of statements about subgroups of semilinear groups.

use std::collections::HashSet;

use serde::Serialize;
use serde_json::json;

use super::group::{Elem, SemilinearGroup};
use super::module::{embeds_in_gamma, semilinear_perm_group, GModule};
use crate::algebra::arith::{checked_pow, gcd, multiplicative_order, p_part, prime_divisors};
use crate::algebra::zsigmondy_ppd;
use crate::error::{Error, Result};
use crate::limits;
use crate::report::{LemmaReport, Verdict};

/// Conjugacy of a Hall subgroup versus fixed points and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Semilinear0Report {
    pub delta: Vec<u64>,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub k: u64,
    pub hall_order: u64,
    pub conjugates: u64,
    pub hall_generator: Elem,
    /// Log of an orbit representative meeting no fixed point of D, when (a) fails.
    pub a_witness: Option<u64>,
}

impl Semilinear0Report {
    pub fn consistent(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    pub fn to_report(&self, h: &SemilinearGroup) -> LemmaReport {
        LemmaReport::new(
            "semilinear0",
            json!({"H": h.describe(), "delta": self.delta}),
            Verdict::from_bool(self.consistent()),
            json!({"a": self.a, "b": self.b, "c": self.c, "k": self.k, "hall_order": self.hall_order,
                   "conjugates": self.conjugates, "hall_generator": self.hall_generator, "a_witness": self.a_witness}),
        )
    }
}

/// Every delta allowed for H: subsets of the primes of |H| not dividing |X0|.
pub fn admissible_deltas(h: &SemilinearGroup) -> Vec<Vec<u64>> {
    let x0 = prime_divisors(h.mult_order());
    let cand: Vec<u64> = prime_divisors(h.order()).into_iter().filter(|r| !x0.contains(r)).collect();
    (0..1u32 << cand.len())
        .map(|mask| cand.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &r)| r).collect())
        .collect()
}

pub fn check_semilinear0(h: &SemilinearGroup, delta: &[u64]) -> Result<Semilinear0Report> {
    let mut delta: Vec<u64> = delta.to_vec();
    delta.sort_unstable();
    delta.dedup();
    let pi_h = prime_divisors(h.order());
    let pi_x0 = prime_divisors(h.mult_order());
    for &r in &delta {
        if !pi_h.contains(&r) || pi_x0.contains(&r) {
            return Err(Error::hyp(format!("prime {r} is not in pi(H) minus pi(X0)")));
        }
    }
    let top = h.top_order() as u64;
    let hall_order: u64 = delta.iter().map(|&r| p_part(top, r)).product();
    let n = h.n() as u64;
    if n % hall_order != 0 {
        return Err(Error::invariant("Hall subgroup order does not divide n"));
    }
    let q1 = h.q() - 1;
    let sub = checked_pow(h.p(), (n / hall_order) as u32).expect("below q") - 1;
    let k = q1 / sub;

    // Generator of a Hall delta-subgroup.
    let w = h.pow(h.top(), top / hall_order);
    let ow = h.elem_order(w);
    let dgen = h.pow(w, ow / hall_order);
    if h.elem_order(dgen) != hall_order {
        return Err(Error::invariant("Hall generator has the wrong order"));
    }
    let d_elems: Vec<Elem> = (0..hall_order).map(|i| h.pow(dgen, i)).collect();

    let mut conj: HashSet<Vec<Elem>> = HashSet::new();
    for x in h.elements()? {
        let xi = h.inv(x);
        let mut s: Vec<Elem> = d_elems.iter().map(|&y| h.mul(h.mul(xi, y), x)).collect();
        s.sort_unstable();
        conj.insert(s);
    }
    let conjugates = conj.len() as u64;

    // (a): every orbit meets the fixed points of D.
    let labels = orbit_labels(h, 1);
    let n_orbits = labels.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut hit = vec![false; n_orbits];
    for beta in 0..q1 {
        if h.act(1, dgen, beta) == beta {
            hit[labels[beta as usize] as usize] = true;
        }
    }
    let a_witness = (0..q1).find(|&b| !hit[labels[b as usize] as usize]);
    let a = a_witness.is_none();
    let b = conjugates == k;
    let c = h.mult_order() % k == 0 && gcd(hall_order, q1) == 1;
    Ok(Semilinear0Report { delta, a, b, c, k, hall_order, conjugates, hall_generator: dgen, a_witness })
}

/// Orbit index of every log on the layer with exponent `e`.
pub fn orbit_labels(h: &SemilinearGroup, e: i64) -> Vec<u32> {
    let q1 = h.q() - 1;
    let mut label = vec![u32::MAX; q1 as usize];
    let gens = h.generators();
    let mut next = 0u32;
    for s in 0..q1 {
        if label[s as usize] != u32::MAX {
            continue;
        }
        label[s as usize] = next;
        let mut stack = vec![s];
        while let Some(b) = stack.pop() {
            for &g in &gens {
                let c = h.act(e, g, b);
                if label[c as usize] == u32::MAX {
                    label[c as usize] = next;
                    stack.push(c);
                }
            }
        }
        next += 1;
    }
    label
}

/// Centralizer of a subgroup of primitive prime order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PpdReport {
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub t: Option<u64>,
    pub centralizer_order: Option<u64>,
    pub x0_order: u64,
    pub fitting_order: Option<u64>,
}

impl PpdReport {
    pub fn to_report(&self, h: &SemilinearGroup) -> LemmaReport {
        let r = LemmaReport::new(
            "ppd",
            json!({"H": h.describe()}),
            self.verdict,
            json!({"t": self.t, "centralizer_order": self.centralizer_order, "x0_order": self.x0_order, "fitting_order": self.fitting_order}),
        );
        match &self.reason {
            Some(s) => r.with_reason(s.clone()),
            None => r,
        }
    }
}

pub fn check_ppd_centralizer(h: &SemilinearGroup) -> Result<PpdReport> {
    let x0_order = h.mult_order();
    let na = |reason: &str, t| PpdReport {
        verdict: Verdict::NotApplicable,
        reason: Some(reason.into()),
        t,
        centralizer_order: None,
        x0_order,
        fitting_order: None,
    };
    let t = match zsigmondy_ppd(h.p(), h.n())? {
        None => return Ok(na("no primitive prime divisor (Zsigmondy exception)", None)),
        Some(t) => u64::try_from(t).map_err(|_| Error::Overflow("ppd".into()))?,
    };
    if h.order() % t != 0 {
        return Ok(na("the primitive prime divisor does not divide |H|", Some(t)));
    }
    let q1 = h.q() - 1;
    let t0 = Elem { a: q1 / t, k: 0 };
    let elems = h.elements()?;
    let cent: Vec<Elem> = elems.iter().copied().filter(|&x| h.mul(x, t0) == h.mul(t0, x)).collect();
    let centralizer_order = cent.len() as u64;
    let in_x0 = cent.iter().all(|x| x.k == 0) && centralizer_order == x0_order;
    let fitting_order = if (q1 as usize) <= limits::MAX_DEGREE {
        Some(semilinear_perm_group(h, 1)?.fitting_subgroup()?.size()?)
    } else {
        None
    };
    let ok = in_x0 && fitting_order.map_or(true, |f| f == x0_order);
    let (verdict, reason) = match (ok, fitting_order) {
        (false, _) => (Verdict::Fail, None),
        (true, None) => (Verdict::Pass, Some("Fitting subgroup unchecked above the degree bound".to_string())),
        (true, Some(_)) => (Verdict::Pass, None),
    };
    Ok(PpdReport { verdict, reason, t: Some(t), centralizer_order: Some(centralizer_order), x0_order, fitting_order })
}

/// Sylow-normal point stabilizers force a semilinear field structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Semilinear1Report {
    pub s: u64,
    pub hypothesis: bool,
    pub excluded: bool,
    pub embeds: Option<bool>,
    pub x0_irreducible: bool,
    pub s_divides_x0: bool,
    pub verdict: Verdict,
}

/// For H acting on GF(q): if each nonzero vector's stabilizer contains a Sylow
/// s-subgroup of H as a normal subgroup and (q, s) != (9, 3), the module
/// embeds, X0 acts irreducibly and s does not divide |X0|.
pub fn check_semilinear1(h: &SemilinearGroup, s: u64, seed: u64) -> Result<Semilinear1Report> {
    let order = h.order();
    if order % s != 0 {
        return Err(Error::hyp(format!("{s} does not divide |H|")));
    }
    let sylow = p_part(order, s);
    let elems = h.elements()?;
    let mut hypothesis = true;
    for o in h.orbits_on_nonzero()? {
        let beta = o.representative_log;
        let stab: Vec<Elem> = elems.iter().copied().filter(|&x| h.act(1, x, beta) == beta).collect();
        let s_elems = stab.iter().filter(|&&x| p_part(h.elem_order(x), s) == h.elem_order(x)).count() as u64;
        if p_part(stab.len() as u64, s) != sylow || s_elems != sylow {
            hypothesis = false;
            break;
        }
    }
    let excluded = h.q() == 9 && s == 3;
    let q1 = h.q() - 1;
    let x0_irreducible = h.mult_order() > 1 && multiplicative_order(h.p() % h.mult_order(), h.mult_order()) == Some(h.n() as u64)
        || (q1 == 1 && h.n() == 1);
    let s_divides_x0 = h.mult_order() % s == 0;
    let embeds = if hypothesis && !excluded && h.q() <= limits::MODULE_MATRIX_MAX {
        Some(embeds_in_gamma(&GModule::from_semilinear(h, 1)?, seed)?.is_embedded())
    } else {
        None
    };
    let verdict = if !hypothesis || excluded {
        Verdict::NotApplicable
    } else {
        Verdict::from_bool(x0_irreducible && !s_divides_x0 && embeds != Some(false))
    };
    Ok(Semilinear1Report { s, hypothesis, excluded, embeds, x0_irreducible, s_divides_x0, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilin::group::field_table;

    #[test]
    fn hall_conjugates_gamma16() {
        let h = SemilinearGroup::gamma(field_table(2, 4).unwrap()).unwrap();
        let r = check_semilinear0(&h, &[2]).unwrap();
        assert_eq!((r.hall_order, r.k, r.conjugates), (4, 15, 15));
        assert!(r.a && r.b && r.c);
        let r = check_semilinear0(&h, &[]).unwrap();
        assert!(r.a && r.b && r.c && r.k == 1);
        assert!(check_semilinear0(&h, &[3]).is_err());
    }

    #[test]
    fn galois_only_fails_all_three() {
        let h = SemilinearGroup::galois(field_table(2, 15).unwrap()).unwrap();
        let r = check_semilinear0(&h, &[3, 5]).unwrap();
        assert_eq!(r.k, 32767);
        assert!(!r.a && !r.b && !r.c);
    }

    #[test]
    fn ppd_centralizers() {
        let h = SemilinearGroup::gamma(field_table(2, 4).unwrap()).unwrap();
        let r = check_ppd_centralizer(&h).unwrap();
        assert_eq!(r.t, Some(5));
        assert_eq!(r.centralizer_order, Some(15));
        assert_eq!(r.fitting_order, Some(15));
        assert_eq!(r.verdict, Verdict::Pass);
        let h = SemilinearGroup::gamma(field_table(2, 6).unwrap()).unwrap();
        assert_eq!(check_ppd_centralizer(&h).unwrap().verdict, Verdict::NotApplicable);
        let h = SemilinearGroup::gamma0(field_table(3, 4).unwrap()).unwrap();
        let r = check_ppd_centralizer(&h).unwrap();
        assert_eq!(r.centralizer_order, Some(80));
        assert_eq!(r.verdict, Verdict::Pass);
    }
}
