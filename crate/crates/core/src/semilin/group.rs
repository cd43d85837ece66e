//! Subgroups of the semilinear group of GF(q), q = p^n.
//!
//! Elements are pairs (A, k) standing for x -> g^A x^(p^k), with g the
//! table's primitive element. On logs of nonzero vectors of a layer with
//! multiplier exponent e, (A, k) acts by beta -> e A + p^k beta (mod q - 1).

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::arith::{divisors, euler_phi, gcd, multiplicative_order, pow_mod, prime_divisors};
use crate::algebra::{FieldSpec, GfTable};
use crate::error::{Error, Result};
use crate::limits;

/// (multiplier log, Galois power).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Elem {
    pub a: u64,
    pub k: u32,
}

/// A subgroup H of Gamma(q): X0 = H meets Gamma_0 in the multipliers of order
/// dividing `mult_order`, and H/X0 is generated by the image of (top_multiplier, galois_step).
#[derive(Clone, Debug)]
pub struct SemilinearGroup {
    table: Arc<GfTable>,
    mult_order: u64,
    galois_step: u32,
    top_multiplier: u64,
    /// p^j mod q - 1 for j in [0, n).
    ppow: Vec<u64>,
}

/// One orbit on the nonzero vectors of a layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub size: u64,
    pub stabilizer_order: u64,
    /// Least log in the orbit.
    pub representative_log: u64,
    /// Field code of the representative.
    pub representative: u64,
    pub stabilizer: StabilizerShape,
}

/// A subgroup I of H described by |I meet Gamma_0|, |I : I meet Gamma_0| and the
/// Galois power of a generator of I modulo Gamma_0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StabilizerShape {
    pub normal_order: u64,
    pub top_order: u64,
    pub galois_power: u32,
}

pub fn field_table(p: u64, n: u32) -> Result<Arc<GfTable>> {
    let spec = Arc::new(FieldSpec::new(p, n)?);
    Ok(Arc::new(GfTable::new(&spec)?))
}

impl SemilinearGroup {
    /// The subgroup with the given X0 order, Galois step k0 (dividing n) and top multiplier.
    pub fn from_parts(table: Arc<GfTable>, mult_order: u64, galois_step: u32, top_multiplier: u64) -> Result<SemilinearGroup> {
        let q1 = table.q - 1;
        let n = table.n();
        if mult_order == 0 || q1 % mult_order != 0 {
            return Err(Error::invalid(format!("multiplier order {mult_order} does not divide {q1}")));
        }
        if galois_step == 0 || n % galois_step != 0 {
            return Err(Error::invalid(format!("Galois step {galois_step} does not divide {n}")));
        }
        let p = table.p();
        let ppow = (0..n).map(|j| pow_mod(p, j as u64, q1)).collect();
        let d = q1 / mult_order;
        let g = SemilinearGroup { table, mult_order, galois_step, top_multiplier: top_multiplier % d, ppow };
        if g.galois_step == n && g.top_multiplier != 0 {
            return Err(Error::invalid("top multiplier without a Galois part"));
        }
        // t^s must land in X0.
        let ts = g.pow(g.top(), g.top_order() as u64);
        if ts.k != 0 || ts.a % d != 0 {
            return Err(Error::hyp("top element does not close up inside X0"));
        }
        Ok(g)
    }

    /// Closure of field multiplications of order `mult_order` and the given (multiplier log, power) pairs.
    pub fn new(table: Arc<GfTable>, mult_order: u64, galois: &[(u64, u32)]) -> Result<SemilinearGroup> {
        let q1 = table.q - 1;
        let n = table.n();
        if mult_order == 0 || q1 % mult_order != 0 {
            return Err(Error::invalid(format!("multiplier order {mult_order} does not divide {q1}")));
        }
        let d = q1 / mult_order;
        if d * n as u64 > limits::MAX_CLOSURE {
            return Err(Error::scale("MAX_CLOSURE", limits::MAX_CLOSURE, d * n as u64));
        }
        let probe = SemilinearGroup::from_parts(table.clone(), mult_order, n, 0)?;
        let gens: Vec<Elem> = galois.iter().map(|&(a, k)| Elem { a: a % q1, k: k % n }).collect();
        // Closure in Gamma / X0.
        let id = Elem { a: 0, k: 0 };
        let mut seen = std::collections::HashSet::new();
        seen.insert(id);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = probe.mul(x, *g);
                let y = Elem { a: y.a % d, k: y.k };
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut by_k: BTreeMap<u32, u64> = BTreeMap::new();
        for e in &seen {
            if by_k.insert(e.k, e.a).is_some() {
                return Err(Error::hyp("generators produce field multiplications outside the declared X0"));
            }
        }
        let k0 = by_k.keys().copied().find(|&k| k > 0).unwrap_or(n);
        let a0 = if k0 == n { 0 } else { by_k[&k0] };
        SemilinearGroup::from_parts(table, mult_order, k0, a0)
    }

    /// Gamma(q).
    pub fn gamma(table: Arc<GfTable>) -> Result<SemilinearGroup> {
        let q1 = table.q - 1;
        SemilinearGroup::from_parts(table, q1, 1, 0)
    }

    /// Gamma_0(q).
    pub fn gamma0(table: Arc<GfTable>) -> Result<SemilinearGroup> {
        let (q1, n) = (table.q - 1, table.n());
        SemilinearGroup::from_parts(table, q1, n, 0)
    }

    /// The Galois group alone, x -> x^(p^k).
    pub fn galois(table: Arc<GfTable>) -> Result<SemilinearGroup> {
        SemilinearGroup::from_parts(table, 1, 1, 0)
    }

    /// Every subgroup of Gamma(q), as (X0 order, Galois step, top multiplier mod d).
    pub fn all_subgroups(table: &Arc<GfTable>) -> Result<Vec<SemilinearGroup>> {
        let q1 = table.q - 1;
        let n = table.n();
        let mut out = Vec::new();
        for m in divisors(q1) {
            let d = q1 / m;
            for k0 in divisors(n as u64) {
                let k0 = k0 as u32;
                let tops = if k0 == n { 1 } else { d };
                if tops * (out.len() as u64 + 1) > limits::MAX_CLOSURE {
                    return Err(Error::scale("MAX_CLOSURE", limits::MAX_CLOSURE, "subgroup enumeration"));
                }
                for a0 in 0..tops {
                    if let Ok(h) = SemilinearGroup::from_parts(table.clone(), m, k0, a0) {
                        out.push(h);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Up to `per_shape` subgroups for each (X0 order, Galois step) pair,
    /// drawn with a seeded generator among the valid top multipliers.
    pub fn sampled_subgroups(table: &Arc<GfTable>, per_shape: usize, seed: u64) -> Result<Vec<SemilinearGroup>> {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let q1 = table.q - 1;
        let n = table.n();
        let mut out = Vec::new();
        for m in divisors(q1) {
            let d = q1 / m;
            for k0 in divisors(n as u64) {
                let k0 = k0 as u32;
                let tops = if k0 == n { 1 } else { d };
                if tops > limits::MAX_CLOSURE {
                    return Err(Error::scale("MAX_CLOSURE", limits::MAX_CLOSURE, tops));
                }
                let valid: Vec<SemilinearGroup> =
                    (0..tops).filter_map(|a0| SemilinearGroup::from_parts(table.clone(), m, k0, a0).ok()).collect();
                out.extend(valid.choose_multiple(&mut rng, per_shape).cloned());
            }
        }
        Ok(out)
    }

    pub fn table(&self) -> &Arc<GfTable> {
        &self.table
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.table.spec
    }

    pub fn p(&self) -> u64 {
        self.table.p()
    }

    pub fn n(&self) -> u32 {
        self.table.n()
    }

    pub fn q(&self) -> u64 {
        self.table.q
    }

    fn q1(&self) -> u64 {
        self.table.q - 1
    }

    /// |X0|.
    pub fn mult_order(&self) -> u64 {
        self.mult_order
    }

    /// Index of X0 in Gamma_0.
    pub fn mult_index(&self) -> u64 {
        self.q1() / self.mult_order
    }

    pub fn galois_step(&self) -> u32 {
        self.galois_step
    }

    pub fn top_multiplier(&self) -> u64 {
        self.top_multiplier
    }

    /// |H/X0|.
    pub fn top_order(&self) -> u32 {
        self.n() / self.galois_step
    }

    pub fn order(&self) -> u64 {
        self.mult_order * self.top_order() as u64
    }

    /// Generators as (multiplier log, Galois power).
    pub fn galois_part(&self) -> Vec<(u64, u32)> {
        if self.galois_step == self.n() {
            vec![]
        } else {
            vec![(self.top_multiplier, self.galois_step)]
        }
    }

    pub fn x0_generator(&self) -> Elem {
        Elem { a: self.mult_index() % self.q1().max(1), k: 0 }
    }

    pub fn top(&self) -> Elem {
        Elem { a: self.top_multiplier, k: self.galois_step % self.n() }
    }

    pub fn generators(&self) -> Vec<Elem> {
        let mut g = vec![self.x0_generator()];
        if self.galois_step < self.n() {
            g.push(self.top());
        }
        g
    }

    pub fn identity(&self) -> Elem {
        Elem { a: 0, k: 0 }
    }

    /// Product: x first, then y.
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let q1 = self.q1().max(1);
        let a = (y.a as u128 + self.ppow[y.k as usize] as u128 * x.a as u128) % q1 as u128;
        Elem { a: a as u64, k: (x.k + y.k) % self.n() }
    }

    pub fn inv(&self, x: Elem) -> Elem {
        let q1 = self.q1().max(1);
        let k = (self.n() - x.k) % self.n();
        let a = (q1 - (self.ppow[k as usize] as u128 * x.a as u128 % q1 as u128) as u64) % q1;
        Elem { a, k }
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut acc = self.identity();
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn elem_order(&self, x: Elem) -> u64 {
        let mut y = x;
        let mut o = 1;
        while y != self.identity() {
            y = self.mul(y, x);
            o += 1;
        }
        o
    }

    pub fn contains(&self, x: Elem) -> bool {
        let d = self.mult_index();
        if x.k % self.galois_step != 0 {
            return false;
        }
        let j = x.k / self.galois_step;
        let tj = self.pow(self.top(), j as u64);
        (x.a + self.q1() - tj.a) % d == 0
    }

    /// Every element: X0 times t^j.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let order = self.order();
        if order > limits::MAX_CLOSURE {
            return Err(Error::scale("MAX_CLOSURE", limits::MAX_CLOSURE, order));
        }
        let d = self.mult_index();
        let q1 = self.q1().max(1);
        let mut out = Vec::with_capacity(order as usize);
        let mut tj = self.identity();
        for _ in 0..self.top_order() {
            for i in 0..self.mult_order {
                out.push(Elem { a: (tj.a + d * i) % q1, k: tj.k });
            }
            tj = self.mul(tj, self.top());
        }
        Ok(out)
    }

    /// Image of the log `beta` under x on a layer with multiplier exponent `e`.
    pub fn act(&self, e: i64, x: Elem, beta: u64) -> u64 {
        let q1 = self.q1().max(1) as u128;
        let ea = (e.rem_euclid(q1 as i64) as u128 * x.a as u128) % q1;
        ((ea + self.ppow[x.k as usize] as u128 * beta as u128) % q1) as u64
    }

    /// Orbits on the nonzero vectors of the layer with multiplier exponent `e`.
    pub fn orbits(&self, e: i64) -> Result<Vec<Orbit>> {
        let q1 = self.q1();
        if self.q() > limits::MAX_FIELD_ORDER {
            return Err(Error::scale("MAX_FIELD_ORDER", limits::MAX_FIELD_ORDER, self.q()));
        }
        if q1 == 1 {
            let shape = StabilizerShape { normal_order: 1, top_order: self.top_order() as u64, galois_power: self.galois_step };
            return Ok(vec![Orbit { size: 1, stabilizer_order: self.order(), representative_log: 0, representative: 1, stabilizer: shape }]);
        }
        let e_red = e.rem_euclid(q1 as i64) as u64;
        let ge = gcd(e_red * self.mult_index() % q1, q1);
        let t = self.top();
        let step = |r: u64| -> u64 {
            ((e_red as u128 * t.a as u128 + self.ppow[t.k as usize] as u128 * r as u128) % ge as u128) as u64
        };
        let coset = q1 / ge;
        let normal_order = gcd(e_red, self.mult_order);
        let mut seen = vec![false; ge as usize];
        let mut out = Vec::new();
        for r in 0..ge {
            if seen[r as usize] {
                continue;
            }
            let mut c = 0u64;
            let mut x = r;
            while !seen[x as usize] {
                seen[x as usize] = true;
                c += 1;
                x = step(x);
            }
            let size = coset * c;
            let stab = self.order() / size;
            let top_order = self.top_order() as u64 / c;
            let shape = StabilizerShape { normal_order, top_order, galois_power: self.galois_step * c as u32 };
            debug_assert_eq!(shape.normal_order * shape.top_order, stab);
            out.push(Orbit { size, stabilizer_order: stab, representative_log: r, representative: self.table.exp[r as usize] as u64, stabilizer: shape });
        }
        Ok(out)
    }

    /// Orbits on the natural module.
    pub fn orbits_on_nonzero(&self) -> Result<Vec<Orbit>> {
        self.orbits(1)
    }

    /// Structure of an explicit subgroup given by its elements.
    pub fn shape_of(&self, elems: &[Elem]) -> StabilizerShape {
        let normal_order = elems.iter().filter(|x| x.k == 0).count() as u64;
        let galois_power = elems.iter().map(|x| x.k).filter(|&k| k > 0).min().unwrap_or(self.n());
        StabilizerShape { normal_order, top_order: elems.len() as u64 / normal_order, galois_power }
    }

    /// Character degrees of H.
    pub fn character_degrees(&self) -> BTreeMap<u64, u64> {
        self.shape().degrees(self.p(), self.n())
    }

    pub fn shape(&self) -> StabilizerShape {
        StabilizerShape { normal_order: self.mult_order, top_order: self.top_order() as u64, galois_power: self.galois_step }
    }

    pub fn is_abelian(&self) -> bool {
        self.shape().is_abelian(self.p())
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_divisors(self.order())
    }

    /// |F(H)|. F(H) = X0<t^j> for the least j | s such that t^j acts on each
    /// Sylow r-subgroup of X0 with r-power order.
    pub fn fitting_order(&self) -> u64 {
        let m = self.mult_order;
        let s = self.top_order() as u64;
        let nilpotent = |j: u64| {
            prime_divisors(m).into_iter().all(|r| {
                let mut ra = 1;
                while m % (ra * r) == 0 {
                    ra *= r;
                }
                let o = multiplicative_order(pow_mod(self.p(), j * self.galois_step as u64, ra), ra).expect("p is prime to m");
                prime_divisors(o).iter().all(|&x| x == r)
            })
        };
        let j = divisors(s).into_iter().find(|&j| nilpotent(j)).unwrap_or(s);
        m * (s / j)
    }

    /// Parameters for reports.
    pub fn describe(&self) -> SemilinearParams {
        SemilinearParams {
            p: self.p(),
            n: self.n(),
            order: self.order(),
            mult_subgroup_order: self.mult_order,
            galois_part: self.galois_part(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemilinearParams {
    pub p: u64,
    pub n: u32,
    pub order: u64,
    pub mult_subgroup_order: u64,
    pub galois_part: Vec<(u64, u32)>,
}

impl StabilizerShape {
    pub fn order(&self) -> u64 {
        self.normal_order * self.top_order
    }

    pub fn is_abelian(&self, p: u64) -> bool {
        self.top_order == 1 || pow_mod(p, self.galois_power as u64, self.normal_order.max(1)) % self.normal_order.max(1) == 1 % self.normal_order.max(1)
    }

    /// Degrees of the cyclic-by-cyclic group: for each divisor r of the normal
    /// order, the phi(r) characters of order r fall into Frobenius orbits of
    /// size o, each giving top_order / o characters of degree o.
    pub fn degrees(&self, p: u64, _n: u32) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for r in divisors(self.normal_order) {
            let o = if r == 1 { 1 } else { multiplicative_order(pow_mod(p, self.galois_power as u64, r), r).expect("coprime to p") };
            debug_assert_eq!(self.top_order % o, 0);
            let count = euler_phi(r) / o * (self.top_order / o);
            *out.entry(o).or_insert(0) += count;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_subgroups() {
        let t = field_table(5, 2).unwrap();
        assert_eq!(SemilinearGroup::gamma(t.clone()).unwrap().order(), 48);
        let t = field_table(2, 1).unwrap();
        assert_eq!(SemilinearGroup::gamma(t).unwrap().order(), 1);
        let t = field_table(2, 2).unwrap();
        assert_eq!(SemilinearGroup::all_subgroups(&t).unwrap().len(), 6);
    }

    #[test]
    fn group_law() {
        let t = field_table(2, 4).unwrap();
        let h = SemilinearGroup::gamma(t).unwrap();
        let els = h.elements().unwrap();
        assert_eq!(els.len(), 60);
        for &x in els.iter().step_by(7) {
            assert_eq!(h.mul(x, h.inv(x)), h.identity());
            for &y in els.iter().step_by(11) {
                let xy = h.mul(x, y);
                assert!(h.contains(xy));
                for beta in [0u64, 3, 7] {
                    assert_eq!(h.act(1, xy, beta), h.act(1, y, h.act(1, x, beta)));
                }
            }
        }
    }

    #[test]
    fn gamma_degrees() {
        let t = field_table(2, 15).unwrap();
        let h = SemilinearGroup::gamma(t).unwrap();
        let cd = h.character_degrees();
        assert_eq!(cd.into_iter().collect::<Vec<_>>(), vec![(1, 15), (3, 10), (5, 18), (15, 2182)]);
    }

    #[test]
    fn galois_orbits_gf32768() {
        let t = field_table(2, 15).unwrap();
        let h = SemilinearGroup::galois(t).unwrap();
        let mut stab: BTreeMap<u64, u64> = BTreeMap::new();
        for o in h.orbits_on_nonzero().unwrap() {
            *stab.entry(o.stabilizer_order).or_insert(0) += o.size;
        }
        assert_eq!(stab.into_iter().collect::<Vec<_>>(), vec![(1, 32767 - 37), (3, 30), (5, 6), (15, 1)]);
    }
}
