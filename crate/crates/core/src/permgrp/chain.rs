//! Deterministic Schreier-Sims.

use num_bigint::BigUint;

use super::perm::Perm;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: usize,
    pub gens: Vec<Perm>,
    pub orbit: Vec<usize>,
    /// `trans[b]` maps the level point to `b`.
    pub trans: Vec<Option<Perm>>,
    /// Per generator, number of orbit points whose Schreier generator was sifted.
    done: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Level {
        let mut trans = vec![None; degree];
        trans[point] = Some(Perm::identity(degree));
        Level { point, gens: Vec::new(), orbit: vec![point], trans, done: Vec::new() }
    }

    fn add_gen(&mut self, g: Perm) {
        self.gens.push(g);
        self.done.push(0);
        self.extend_orbit();
    }

    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.trans[c].is_none() {
                    let u = self.trans[b].as_ref().expect("orbit point has transversal").mul(s);
                    self.trans[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct Chain {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl Chain {
    pub fn build(degree: usize, gens: &[Perm]) -> Chain {
        let mut chain = Chain { degree, levels: Vec::new() };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if !chain.levels.iter().any(|l| g.apply(l.point) != l.point) {
                let pt = g.first_moved().expect("nonidentity");
                chain.levels.push(Level::new(pt, degree));
            }
        }
        for g in &gens {
            let fixing = chain.levels.iter().take_while(|l| g.apply(l.point) == l.point).count();
            for l in 0..=fixing.min(chain.levels.len() - 1) {
                chain.levels[l].add_gen(g.clone());
            }
        }
        chain.complete();
        chain
    }

    /// Builds the chain of `<existing, extra>` by continuing from an existing chain.
    pub fn extend(&self, extra: &[Perm]) -> Chain {
        let mut chain = self.clone();
        for g in extra {
            let (j, h) = chain.sift(g, 0);
            if h.is_identity() && j == chain.levels.len() {
                continue;
            }
            if j == chain.levels.len() {
                let pt = h.first_moved().expect("nonidentity");
                chain.levels.push(Level::new(pt, chain.degree));
            }
            for l in 0..=j {
                chain.levels[l].add_gen(h.clone());
            }
            chain.complete();
        }
        chain
    }

    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.next_residue(i) {
                Some((j, h)) => {
                    if j == self.levels.len() {
                        let pt = h.first_moved().expect("nonidentity residue");
                        self.levels.push(Level::new(pt, self.degree));
                    }
                    for l in i + 1..=j {
                        self.levels[l].add_gen(h.clone());
                    }
                    i = j;
                }
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Sifts unchecked Schreier generators of level `i` until one has a nontrivial residue.
    fn next_residue(&mut self, i: usize) -> Option<(usize, Perm)> {
        loop {
            let lvl = &self.levels[i];
            let olen = lvl.orbit.len();
            let s_idx = (0..lvl.gens.len()).find(|&s| lvl.done[s] < olen)?;
            let b = lvl.orbit[lvl.done[s_idx]];
            self.levels[i].done[s_idx] += 1;
            let lvl = &self.levels[i];
            let s = &lvl.gens[s_idx];
            let c = s.apply(b);
            let ub = lvl.trans[b].as_ref().expect("transversal");
            let uc = lvl.trans[c].as_ref().expect("transversal");
            let sch = ub.mul(s).mul(&uc.inv());
            if sch.is_identity() {
                continue;
            }
            let (j, h) = self.sift(&sch, i + 1);
            if j < self.levels.len() || !h.is_identity() {
                return Some((j, h));
            }
        }
    }

    /// Sifts `g` starting at level `from`. Returns the level where sifting stopped and the residue.
    pub(crate) fn sift(&self, g: &Perm, from: usize) -> (usize, Perm) {
        let mut h = g.clone();
        for (j, lvl) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(lvl.point);
            match &lvl.trans[b] {
                None => return (j, h),
                Some(u) => h = h.mul(&u.inv()),
            }
        }
        (self.levels.len(), h)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (j, h) = self.sift(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order if it fits in a u128.
    pub fn order_u128(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Every element, as products of transversal elements deepest first.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let reps: Vec<&Perm> = lvl.orbit.iter().map(|&b| lvl.trans[b].as_ref().expect("transversal")).collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for g in &out {
                for u in &reps {
                    next.push(g.mul(u));
                }
            }
            out = next;
        }
        out
    }

    /// The element with the given base images, if any.
    pub fn element_from_base_images(&self, images: &[usize]) -> Option<Perm> {
        let mut g = Perm::identity(self.degree);
        // Walk down: choose u at each level so that the product maps base points as requested.
        let mut rem: Vec<usize> = images.to_vec();
        let mut parts = Vec::with_capacity(self.levels.len());
        for (j, lvl) in self.levels.iter().enumerate() {
            let u = lvl.trans[rem[j]].as_ref()?;
            parts.push(u.clone());
            let ui = u.inv();
            for r in rem.iter_mut().skip(j + 1) {
                *r = ui.apply(*r);
            }
        }
        for u in parts.iter().rev() {
            g = g.mul(u);
        }
        Some(g)
    }

    /// Base images of `g`, a key that determines `g` within the group.
    pub fn base_key(&self, g: &Perm) -> Box<[u16]> {
        self.levels.iter().map(|l| g.apply(l.point) as u16).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Perm> {
        let cyc: Vec<usize> = (0..n).collect();
        vec![Perm::from_cycles(n, &[cyc]).unwrap(), Perm::from_cycles(n, &[vec![0, 1]]).unwrap()]
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..8 {
            let c = Chain::build(n, &sym(n));
            let f: u64 = (1..=n as u64).product();
            assert_eq!(c.order(), BigUint::from(f));
        }
        let c = Chain::build(4, &sym(4));
        assert_eq!(c.elements().len(), 24);
        let g = Perm::from_cycles(4, &[vec![0, 2, 3]]).unwrap();
        assert!(c.contains(&g));
        let key: Vec<usize> = c.base_key(&g).iter().map(|&x| x as usize).collect();
        assert_eq!(c.element_from_base_images(&key).unwrap(), g);
    }

    #[test]
    fn extend_chain() {
        let a = Chain::build(5, &[Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap()]);
        assert_eq!(a.order(), BigUint::from(3u32));
        let b = a.extend(&[Perm::from_cycles(5, &[vec![2, 3, 4]]).unwrap()]);
        assert_eq!(b.order(), BigUint::from(60u32));
    }
}
