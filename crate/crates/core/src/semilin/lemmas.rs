//! Tensor, wedge and dual constituents of the faithful irreducible module of
//! a cyclic group: arithmetic criteria and an explicit matrix check.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::group::field_table;
use crate::algebra::arith::{checked_pow, divisors, gcd, is_prime, multiplicative_order, pow_mod, prime_power};
use crate::algebra::GfTable;
use crate::error::{Error, Result};
use crate::limits;
use crate::report::{LemmaReport, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleLemmaReport {
    pub q: u64,
    pub m: u32,
    pub group_order: u64,
    pub tensor_constituent: bool,
    pub wedge_constituent: bool,
    pub self_contragredient: bool,
    pub tensor_witness: Option<(u32, u32)>,
    pub wedge_witness: Option<(u32, u32)>,
    pub contragredient_witness: Option<u32>,
    /// Proper divisors r of m with (q^m - 1)/(q^r - 1) dividing the group order.
    pub admissible_r: Vec<u32>,
    /// Whether the explicit matrix decomposition ran and, if so, agreed.
    pub matrix_agrees: Option<bool>,
    pub conclusions_verified: bool,
}

impl ModuleLemmaReport {
    pub fn verdict(&self) -> Verdict {
        if self.matrix_agrees == Some(false) || !self.conclusions_verified {
            Verdict::Fail
        } else if self.admissible_r.is_empty() {
            Verdict::NotApplicable
        } else {
            Verdict::Pass
        }
    }

    pub fn to_report(&self) -> LemmaReport {
        LemmaReport::new(
            "modules",
            json!({"q": self.q, "m": self.m, "group_order": self.group_order}),
            self.verdict(),
            json!({
                "tensor": self.tensor_witness,
                "wedge": self.wedge_witness,
                "contragredient": self.contragredient_witness,
                "admissible_r": self.admissible_r,
                "matrix_agrees": self.matrix_agrees,
            }),
        )
    }
}

/// Decides the three constituent questions for the cyclic group of order
/// `group_order` acting faithfully and irreducibly in dimension `m` over GF(q).
pub fn check_module_lemmas(q: u64, m: u32, group_order: u64) -> Result<ModuleLemmaReport> {
    let (p, r_field) = prime_power(q).ok_or_else(|| Error::hyp(format!("{q} is not a prime power")))?;
    let n = group_order;
    if n == 0 || gcd(q, n) != 1 {
        return Err(Error::hyp("group order must be positive and coprime to q"));
    }
    let ord = if n == 1 { 1 } else { multiplicative_order(q % n, n).expect("coprime") };
    if ord != m as u64 {
        return Err(Error::hyp(format!("dimension {m} differs from the order {ord} of q modulo {n}")));
    }
    let qp = |e: u32| pow_mod(q, e as u64, n);
    let one = 1 % n;
    let mut tensor = None;
    let mut wedge = None;
    for a in 0..m {
        for b in a..m {
            if (qp(a) + qp(b)) % n == one {
                tensor.get_or_insert((a, b));
                if a != b {
                    wedge.get_or_insert((a, b));
                }
            }
        }
    }
    let contra = (0..m).find(|&k| (qp(k) + 1) % n == 0);
    let qm = checked_pow(q, m).ok_or_else(|| Error::Overflow("q^m".into()))?;
    let admissible_r: Vec<u32> = if r_field == 1 {
        divisors(m as u64)
            .into_iter()
            .map(|r| r as u32)
            .filter(|&r| r < m && n % ((qm - 1) / (checked_pow(q, r).expect("below q^m") - 1)) == 0)
            .collect()
    } else {
        vec![]
    };
    let conclusions_verified = admissible_r.iter().all(|&r| {
        let wedge_ok = wedge.is_none() || (p == 2 && m / r == 2);
        let contra_ok = contra.is_none() || (n == checked_pow(p, r).expect("small") + 1 && m / r == 2);
        wedge_ok && contra_ok
    });
    let matrix_agrees = if qm <= limits::MODULE_MATRIX_MAX {
        let (t, w, c) = matrix_constituents(p, r_field, m, n)?;
        Some(t == tensor.is_some() && w == wedge.is_some() && c == contra.is_some())
    } else {
        None
    };
    Ok(ModuleLemmaReport {
        q,
        m,
        group_order,
        tensor_constituent: tensor.is_some(),
        wedge_constituent: wedge.is_some(),
        self_contragredient: contra.is_some(),
        tensor_witness: tensor,
        wedge_witness: wedge,
        contragredient_witness: contra,
        admissible_r,
        matrix_agrees,
        conclusions_verified,
    })
}

/// Every (p, m, |G|) with p^m <= `qm_max`, p prime, m >= 2, m the order of p
/// modulo |G|, and some admissible r.
pub fn module_lemma_sweep(qm_max: u64) -> Result<Vec<ModuleLemmaReport>> {
    let mut cases = Vec::new();
    for p in (2..=qm_max).filter(|&p| is_prime(p) && p * p <= qm_max) {
        let mut m = 2u32;
        while let Some(qm) = checked_pow(p, m).filter(|&x| x <= qm_max) {
            for n in divisors(qm - 1) {
                if n > 1 && multiplicative_order(p % n, n) == Some(m as u64) {
                    let has_r = divisors(m as u64).into_iter().any(|r| r < m as u64 && n % ((qm - 1) / (p.pow(r as u32) - 1)) == 0);
                    if has_r {
                        cases.push((p, m, n));
                    }
                }
            }
            m += 1;
        }
    }
    cases.into_par_iter().map(|(p, m, n)| check_module_lemmas(p, m, n)).collect()
}

/// Square matrices over a table field.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FMat {
    n: usize,
    d: Vec<u32>,
}

impl FMat {
    fn zeros(n: usize) -> FMat {
        FMat { n, d: vec![0; n * n] }
    }

    fn identity(n: usize) -> FMat {
        let mut m = FMat::zeros(n);
        for i in 0..n {
            m.d[i * n + i] = 1;
        }
        m
    }

    fn at(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    fn mul(&self, t: &GfTable, o: &FMat) -> FMat {
        let n = self.n;
        let mut out = FMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = o.at(k, j);
                    if b != 0 {
                        let idx = i * n + j;
                        out.d[idx] = t.add(out.d[idx], t.mul(a, b));
                    }
                }
            }
        }
        out
    }

    fn add_scalar(&mut self, t: &GfTable, c: u32) {
        for i in 0..self.n {
            let idx = i * self.n + i;
            self.d[idx] = t.add(self.d[idx], c);
        }
    }

    fn rank(&self, t: &GfTable) -> usize {
        let n = self.n;
        let mut a = self.d.clone();
        let mut r = 0;
        for c in 0..n {
            let Some(piv) = (r..n).find(|&i| a[i * n + c] != 0) else { continue };
            for j in 0..n {
                a.swap(r * n + j, piv * n + j);
            }
            let inv = t.inv(a[r * n + c]);
            for j in 0..n {
                a[r * n + j] = t.mul(a[r * n + j], inv);
            }
            for i in 0..n {
                let f = a[i * n + c];
                if i != r && f != 0 {
                    let nf = t.neg(f);
                    for j in 0..n {
                        let v = t.mul(nf, a[r * n + j]);
                        a[i * n + j] = t.add(a[i * n + j], v);
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn kron(&self, t: &GfTable, o: &FMat) -> FMat {
        let (n, k) = (self.n, o.n);
        let mut out = FMat::zeros(n * k);
        for i in 0..n {
            for j in 0..n {
                for a in 0..k {
                    for b in 0..k {
                        out.d[(i * k + a) * n * k + j * k + b] = t.mul(self.at(i, j), o.at(a, b));
                    }
                }
            }
        }
        out
    }

    fn exterior_square(&self, t: &GfTable) -> FMat {
        let n = self.n;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut out = FMat::zeros(pairs.len());
        for (r, &(i, j)) in pairs.iter().enumerate() {
            for (c, &(k, l)) in pairs.iter().enumerate() {
                let v = t.sub(t.mul(self.at(i, k), self.at(j, l)), t.mul(self.at(i, l), self.at(j, k)));
                out.d[r * out.n + c] = v;
            }
        }
        out
    }

    /// f(X) for f given low-to-high.
    fn eval(&self, t: &GfTable, f: &[u32]) -> FMat {
        let mut acc = FMat::zeros(self.n);
        for &c in f.iter().rev() {
            acc = acc.mul(t, self);
            acc.add_scalar(t, c);
        }
        acc
    }
}

/// (tensor, wedge, dual) constituent flags from explicit matrices over GF(q).
fn matrix_constituents(p: u64, r_field: u32, m: u32, n: u64) -> Result<(bool, bool, bool)> {
    let t = field_table(p, r_field * m)?;
    let t = t.as_ref();
    let q = checked_pow(p, r_field).expect("small");
    let big = t.q - 1;
    let eps_log = big / n;
    // Minimal polynomial of eps over GF(q): product over its q-power conjugates.
    let mut mu: Vec<u32> = vec![1];
    for a in 0..m {
        let root = t.g_pow((eps_log as u128 * pow_mod(q, a as u64, big) as u128 % big as u128) as i64);
        let mut next = vec![0u32; mu.len() + 1];
        for (i, &c) in mu.iter().enumerate() {
            next[i + 1] = t.add(next[i + 1], c);
            next[i] = t.sub(next[i], t.mul(c, root));
        }
        mu = next;
    }
    let dim = m as usize;
    let mut comp = FMat::zeros(dim);
    for (i, &c) in mu.iter().enumerate().take(dim) {
        if i + 1 < dim {
            comp.d[(i + 1) * dim + i] = 1;
        }
        comp.d[i * dim + dim - 1] = t.neg(c);
    }
    let singular = |x: &FMat| x.eval(t, &mu).rank(t) < x.n;
    let tensor = singular(&comp.kron(t, &comp));
    let wedge = dim >= 2 && singular(&comp.exterior_square(t));
    // comp^-1 = comp^(order - 1).
    let mut inv = FMat::identity(dim);
    for _ in 0..n.max(1) - 1 {
        inv = inv.mul(t, &comp);
    }
    let dual = singular(&inv);
    Ok((tensor, wedge, dual))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_instances() {
        let r = check_module_lemmas(2, 2, 3).unwrap();
        assert!(r.tensor_constituent && !r.wedge_constituent && r.self_contragredient);
        assert_eq!(r.admissible_r, vec![1]);
        assert_eq!(r.matrix_agrees, Some(true));
        assert!(r.conclusions_verified);

        let r = check_module_lemmas(2, 4, 5).unwrap();
        assert!(r.self_contragredient);
        assert_eq!(r.admissible_r, vec![2]);
        assert!(r.conclusions_verified && r.matrix_agrees == Some(true));

        let r = check_module_lemmas(2, 3, 7).unwrap();
        assert!(!r.self_contragredient);
        assert_eq!(r.matrix_agrees, Some(true));
    }

    #[test]
    fn prime_power_field() {
        let r = check_module_lemmas(4, 2, 5).unwrap();
        assert!(r.self_contragredient);
        assert!(r.admissible_r.is_empty());
        assert_eq!(r.matrix_agrees, Some(true));
    }

    #[test]
    fn rejects_wrong_dimension() {
        assert!(matches!(check_module_lemmas(2, 3, 5), Err(Error::Hypothesis(_))));
    }
}
