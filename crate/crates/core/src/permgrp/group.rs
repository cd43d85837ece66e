use std::ops::ControlFlow;
use std::sync::Arc;

use num_bigint::BigUint;

use super::chain::Chain;
use super::perm::Perm;
use crate::algebra::arith::{factorize, is_prime, p_part};
use crate::error::{Error, Result};
use crate::limits;

/// A permutation group with its stabilizer chain, built at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: Arc<Chain>,
}

/// Subgroups share the representation of their parent (same point set).
pub type Subgroup = PermGroup;

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        if degree > limits::MAX_DEGREE {
            return Err(Error::scale("MAX_DEGREE", limits::MAX_DEGREE, degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::invalid(format!("generator of degree {} in group of degree {degree}", g.degree())));
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = Arc::new(Chain::build(degree, &gens));
        Ok(PermGroup { degree, gens, chain })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, gens: vec![], chain: Arc::new(Chain::build(degree, &[])) }
    }

    pub fn symmetric(n: usize) -> Result<PermGroup> {
        if n < 2 {
            return Ok(PermGroup::trivial(n));
        }
        let cyc: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![Perm::from_cycles(n, &[cyc])?, Perm::from_cycles(n, &[vec![0, 1]])?])
    }

    pub fn cyclic(n: usize) -> Result<PermGroup> {
        if n < 2 {
            return Ok(PermGroup::trivial(n.max(1)));
        }
        let cyc: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![Perm::from_cycles(n, &[cyc])?])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn order_u128(&self) -> Result<u128> {
        self.chain.order_u128().ok_or_else(|| Error::Overflow("group order exceeds 128 bits".into()))
    }

    /// Order as u64; errors above u64.
    pub fn size(&self) -> Result<u64> {
        let o = self.order_u128()?;
        u64::try_from(o).map_err(|_| Error::Overflow(format!("group order {o} exceeds 64 bits")))
    }

    fn size_unchecked(&self) -> u64 {
        self.size().expect("desk-scale order")
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Subgroup generated by elements of `self`.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<Subgroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::invalid(format!("{g} is not an element of the group")));
            }
        }
        PermGroup::new(self.degree, gens)
    }

    /// `<self, extra>`, reusing the chain.
    pub fn join_elements(&self, extra: &[Perm]) -> PermGroup {
        // Keep only generators that enlarge the group built so far.
        let mut chain: Option<Chain> = None;
        let mut gens = self.gens.clone();
        for g in extra {
            let c = chain.as_ref().unwrap_or(&self.chain);
            if c.contains(g) {
                continue;
            }
            chain = Some(c.extend(std::slice::from_ref(g)));
            gens.push(g.clone());
        }
        match chain {
            Some(c) => PermGroup { degree: self.degree, gens, chain: Arc::new(c) },
            None => self.clone(),
        }
    }

    pub fn join(&self, other: &PermGroup) -> PermGroup {
        self.join_elements(&other.gens)
    }

    pub fn check_enumerable(&self) -> Result<u64> {
        let n = self.size()?;
        if n > limits::MAX_ENUM_ORDER {
            return Err(Error::scale("MAX_ENUM_ORDER", limits::MAX_ENUM_ORDER, n));
        }
        Ok(n)
    }

    /// Visits every element; stops early on `Break`.
    pub fn for_each_element<F: FnMut(&Perm) -> ControlFlow<()>>(&self, mut f: F) -> Result<()> {
        self.check_enumerable()?;
        let levels = &self.chain.levels;
        fn rec<F: FnMut(&Perm) -> ControlFlow<()>>(
            levels: &[super::chain::Level],
            depth: usize,
            acc: &Perm,
            f: &mut F,
        ) -> ControlFlow<()> {
            if depth == 0 {
                return f(acc);
            }
            let lvl = &levels[depth - 1];
            for &b in &lvl.orbit {
                let u = lvl.trans[b].as_ref().expect("transversal");
                rec(levels, depth - 1, &acc.mul(u), f)?;
            }
            ControlFlow::Continue(())
        }
        let _ = rec(levels, levels.len(), &self.identity(), &mut f);
        Ok(())
    }

    /// All elements. Bounded by MAX_ENUM_ORDER and MAX_ENUM_ENTRIES.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        let n = self.check_enumerable()?;
        let entries = n.saturating_mul(self.degree as u64);
        if entries > limits::MAX_ENUM_ENTRIES {
            return Err(Error::scale("MAX_ENUM_ENTRIES", limits::MAX_ENUM_ENTRIES, entries));
        }
        Ok(self.chain.elements())
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.gens.iter().all(|x| self.gens.iter().all(|h| self.contains(&h.conj(x))))
    }

    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        let gens: Vec<Perm> = self.gens.iter().map(|h| h.conj(g)).collect();
        PermGroup::new(self.degree, gens).expect("conjugate of a valid group")
    }

    /// Smallest subgroup of `self` normal in `self` containing `xs`.
    pub fn normal_closure(&self, xs: &[Perm]) -> PermGroup {
        let mut n = PermGroup::trivial(self.degree).join_elements(xs);
        let mut queue: Vec<Perm> = n.gens.clone();
        while let Some(h) = queue.pop() {
            for g in &self.gens {
                let c = h.conj(g);
                if !n.contains(&c) {
                    n = n.join_elements(std::slice::from_ref(&c));
                    queue.push(c);
                }
            }
        }
        n
    }

    /// `[A, B]`.
    pub fn commutator(a: &PermGroup, b: &PermGroup) -> PermGroup {
        let ab = a.join(b);
        let comms: Vec<Perm> =
            a.gens.iter().flat_map(|x| b.gens.iter().map(move |y| Perm::commutator(x, y))).collect();
        ab.normal_closure(&comms)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        PermGroup::commutator(self, self)
    }

    /// G, G', G'', ... down to the first repeated term.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut out = vec![self.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let d = last.derived_subgroup();
            if d.order() == last.order() {
                return out;
            }
            out.push(d);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().expect("nonempty").is_trivial()
    }

    fn lower_central_unchecked(&self) -> Vec<PermGroup> {
        let mut out = vec![self.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = PermGroup::commutator(last, self);
            if next.order() == last.order() {
                return out;
            }
            out.push(next);
        }
    }

    /// gamma_1 = P, gamma_{i+1} = [gamma_i, P], ending at the trivial group.
    pub fn lower_central_series(&self) -> Result<Vec<PermGroup>> {
        if self.prime().is_none() && !self.is_trivial() {
            return Err(Error::hyp(format!("lower central series needs a p-group, order is {}", self.order())));
        }
        Ok(self.lower_central_unchecked())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_unchecked().last().expect("nonempty").is_trivial()
    }

    /// Nilpotency class (0 for the trivial group); `None` if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_unchecked();
        s.last().expect("nonempty").is_trivial().then(|| s.len() - 1)
    }

    /// The prime if `self` is a nontrivial p-group.
    pub fn prime(&self) -> Option<u64> {
        let n = self.size().ok()?;
        let f = factorize(n);
        (f.len() == 1).then(|| f[0].0)
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        factorize(self.size_unchecked()).into_iter().map(|(p, _)| p).collect()
    }

    /// Elements of `self` commuting with every generator of `x`.
    pub fn centralizer(&self, x: &PermGroup) -> Result<PermGroup> {
        self.filter_subgroup(|g| x.gens.iter().all(|h| g.commutes_with(h)))
    }

    pub fn centralizer_of_element(&self, h: &Perm) -> Result<PermGroup> {
        self.filter_subgroup(|g| g.commutes_with(h))
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// Elements of `self` normalizing `h`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.filter_subgroup(|g| h.gens.iter().all(|x| h.contains(&x.conj(g))))
    }

    /// Subgroup of elements satisfying a predicate that defines a subgroup.
    pub fn filter_subgroup<F: Fn(&Perm) -> bool>(&self, pred: F) -> Result<PermGroup> {
        let mut sub = PermGroup::trivial(self.degree);
        let target = self.size()?;
        self.for_each_element(|g| {
            if !sub.contains(g) && pred(g) {
                sub = sub.join_elements(std::slice::from_ref(g));
                if sub.size_unchecked() == target {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
        Ok(sub)
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let (small, big) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        small.filter_subgroup(|g| big.contains(g))
    }

    /// Largest normal subgroup of `self` contained in `h`.
    pub fn core(&self, h: &PermGroup) -> Result<PermGroup> {
        let mut c = h.clone();
        loop {
            let mut changed = false;
            for g in &self.gens {
                if c.gens.iter().all(|x| c.contains(&x.conj(g))) {
                    continue;
                }
                c = c.intersection(&c.conjugate(g))?;
                changed = true;
            }
            if !changed {
                return Ok(c);
            }
        }
    }

    /// Smallest k > 0 with g^k in `n`.
    pub fn order_modulo(g: &Perm, n: &PermGroup) -> u64 {
        let o = g.order();
        let mut best = o;
        for d in crate::algebra::arith::divisors(o) {
            if n.contains(&g.pow(d as i64)) {
                best = d;
                break;
            }
        }
        best
    }

    /// A Sylow p-subgroup, grown inside successive normalizers.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        let n = self.size()?;
        let target = p_part(n, p);
        let mut s = PermGroup::trivial(self.degree);
        while s.size_unchecked() < target {
            let mut found: Option<Perm> = None;
            self.for_each_element(|g| {
                if s.contains(g) || !s.gens.iter().all(|x| s.contains(&x.conj(g))) {
                    return ControlFlow::Continue(());
                }
                let k = PermGroup::order_modulo(g, &s);
                if k % p == 0 {
                    found = Some(g.pow((k / p) as i64));
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?;
            let y = found.ok_or_else(|| Error::invariant("no p-element in the normalizer of a non-Sylow p-subgroup"))?;
            s = s.join_elements(&[y]);
        }
        Ok(s)
    }

    /// O_p(G): the core of a Sylow p-subgroup.
    pub fn o_p(&self, p: u64) -> Result<PermGroup> {
        if self.size()? % p != 0 {
            return Ok(PermGroup::trivial(self.degree));
        }
        let s = self.sylow(p)?;
        self.core(&s)
    }

    /// Preimage of F(G/N) for a normal subgroup N.
    pub fn fitting_over(&self, n: &PermGroup) -> Result<PermGroup> {
        let mut f = n.clone();
        let idx = self.size()? / n.size()?;
        for (p, _) in factorize(idx) {
            let s = self.sylow(p)?;
            let sn = s.join(n);
            let c = self.core(&sn)?;
            f = f.join(&c);
        }
        Ok(f)
    }

    pub fn fitting_subgroup(&self) -> Result<PermGroup> {
        self.check_enumerable()?;
        self.fitting_over(&PermGroup::trivial(self.degree))
    }

    /// 1 = F_0 < F_1 = F(G) < F_2 < ... < F_h = G.
    pub fn fitting_series(&self) -> Result<Vec<PermGroup>> {
        if !self.is_solvable() {
            return Err(Error::hyp("Fitting series requested for a nonsolvable group"));
        }
        let mut out = vec![PermGroup::trivial(self.degree)];
        while out.last().expect("nonempty").order() != self.order() {
            let next = self.fitting_over(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn fitting_height(&self) -> Result<usize> {
        Ok(self.fitting_series()?.len() - 1)
    }

    /// Whether every Sylow subgroup of G/N is cyclic.
    pub fn is_sylow_cyclic_quotient(&self, n: &PermGroup) -> Result<bool> {
        if !n.is_subgroup_of(self) || !n.is_normal_in(self) {
            return Err(Error::hyp("subgroup is not normal"));
        }
        let idx = self.size()? / n.size()?;
        for (p, _) in factorize(idx) {
            let target = p_part(idx, p);
            let s = self.sylow(p)?;
            let mut cyclic = false;
            s.for_each_element(|g| {
                if PermGroup::order_modulo(g, n) == target {
                    cyclic = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?;
            if !cyclic {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hall pi-subgroup of a solvable group, assembled from Sylow conjugates.
    pub fn hall(&self, pi: &[u64]) -> Result<PermGroup> {
        let n = self.size()?;
        let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).filter(|p| pi.contains(p)).collect();
        let mut h = PermGroup::trivial(self.degree);
        let mut trials = 0u64;
        for p in primes {
            let s = self.sylow(p)?;
            let target = h.size()? * s.size()?;
            let mut next: Option<PermGroup> = None;
            let mut budget_hit = false;
            self.for_each_element(|g| {
                trials += 1;
                if trials > limits::HALL_BUDGET {
                    budget_hit = true;
                    return ControlFlow::Break(());
                }
                let cand = h.join(&s.conjugate(g));
                if cand.size_unchecked() == target {
                    next = Some(cand);
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?;
            if budget_hit {
                return Err(Error::Budget(format!("Hall subgroup search exceeded {} trials", limits::HALL_BUDGET)));
            }
            h = next.ok_or_else(|| Error::hyp("no Hall subgroup found; group is not solvable"))?;
        }
        Ok(h)
    }

    /// A p-complement (Hall p'-subgroup).
    pub fn p_complement(&self, p: u64) -> Result<PermGroup> {
        let others: Vec<u64> = self.prime_divisors().into_iter().filter(|&q| q != p).collect();
        self.hall(&others)
    }

    /// Z_1 < Z_2 < ... upper central series, until it stabilizes.
    pub fn upper_central_series(&self) -> Result<Vec<PermGroup>> {
        let mut out = vec![PermGroup::trivial(self.degree)];
        loop {
            let z = out.last().expect("nonempty").clone();
            // Z_{i+1} = { g : [g, x] in Z_i for all generators x }.
            let next = self.filter_subgroup(|g| self.gens.iter().all(|x| z.contains(&Perm::commutator(g, x))))?;
            if next.order() == z.order() {
                return Ok(out);
            }
            out.push(next);
        }
    }

    /// Exponent (lcm of element orders).
    pub fn exponent(&self) -> Result<u64> {
        let mut e = 1u64;
        self.for_each_element(|g| {
            e = crate::algebra::arith::lcm(e, g.order());
            ControlFlow::Continue(())
        })?;
        Ok(e)
    }

    /// Frattini-free test helper: whether `n` is elementary abelian.
    pub fn is_elementary_abelian(&self) -> bool {
        match self.prime() {
            None => self.is_trivial(),
            Some(p) => self.is_abelian() && self.gens.iter().all(|g| g.pow(p as i64).is_identity()),
        }
    }

    /// Orbits on points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s];
            let mut i = 0;
            while i < orb.len() {
                for g in &self.gens {
                    let c = g.apply(orb[i]);
                    if !seen[c] {
                        seen[c] = true;
                        orb.push(c);
                    }
                }
                i += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    /// Direct product acting on disjoint point sets.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
        let n = a.degree + b.degree;
        let mut gens = Vec::new();
        for g in &a.gens {
            gens.push(g.extend(n));
        }
        for g in &b.gens {
            let mut img: Vec<usize> = (0..a.degree).collect();
            img.extend(g.images().iter().map(|&x| x as usize + a.degree));
            gens.push(Perm::from_images(&img)?);
        }
        PermGroup::new(n, gens)
    }
}
