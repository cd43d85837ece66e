use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::arith::prime_divisors;
use crate::characters::DegreeMultiset;

/// Prime graph on character degrees: vertices are primes dividing some
/// degree, and p ~ q when pq divides some degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    pub vertices: Vec<u64>,
    pub edges: BTreeSet<(u64, u64)>,
}

/// Graph diameter; infinite when disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_str("infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub components: Vec<Vec<u64>>,
    /// `None` for the empty graph.
    pub diameter: Option<Diameter>,
    /// Distances between distinct vertices in the same component, u < v.
    pub distances: BTreeMap<String, u32>,
}

impl PrimeGraph {
    pub fn from_degrees<'a>(degrees: impl IntoIterator<Item = &'a u64>) -> PrimeGraph {
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for &d in degrees {
            if d <= 1 {
                continue;
            }
            let ps = prime_divisors(d);
            for (i, &p) in ps.iter().enumerate() {
                vertices.insert(p);
                for &q in &ps[i + 1..] {
                    edges.insert((p, q));
                }
            }
        }
        PrimeGraph { vertices: vertices.into_iter().collect(), edges }
    }

    pub fn from_edges(vertices: &[u64], edges: &[(u64, u64)]) -> PrimeGraph {
        let vs: BTreeSet<u64> = vertices.iter().copied().chain(edges.iter().flat_map(|&(a, b)| [a, b])).collect();
        let es = edges.iter().filter(|(a, b)| a != b).map(|&(a, b)| (a.min(b), a.max(b))).collect();
        PrimeGraph { vertices: vs.into_iter().collect(), edges: es }
    }

    pub fn adjacent(&self, a: u64, b: u64) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn contains(&self, v: u64) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: u64) -> Vec<u64> {
        self.vertices.iter().copied().filter(|&w| w != v && self.adjacent(v, w)).collect()
    }

    /// v together with its neighbors.
    pub fn closed_neighborhood(&self, v: u64) -> Vec<u64> {
        let mut n = self.neighbors(v);
        n.push(v);
        n.sort_unstable();
        n
    }

    pub fn is_isolated(&self, v: u64) -> bool {
        self.contains(v) && self.neighbors(v).is_empty()
    }

    fn bfs(&self, src: u64) -> BTreeMap<u64, u32> {
        let mut dist = BTreeMap::from([(src, 0u32)]);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in self.neighbors(v) {
                dist.entry(w).or_insert_with(|| {
                    queue.push_back(w);
                    d + 1
                });
            }
        }
        dist
    }

    pub fn distance(&self, a: u64, b: u64) -> Option<u32> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        self.bfs(a).get(&b).copied()
    }

    pub fn components(&self) -> Vec<Vec<u64>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &v in &self.vertices {
            if seen.contains(&v) {
                continue;
            }
            let comp: Vec<u64> = self.bfs(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn diameter(&self) -> Diameter {
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        let d = self.vertices.iter().map(|&v| self.bfs(v).into_values().max().unwrap_or(0)).max().unwrap_or(0);
        Diameter::Finite(d)
    }

    pub fn metrics(&self) -> Metrics {
        let mut distances = BTreeMap::new();
        for &v in &self.vertices {
            for (w, d) in self.bfs(v) {
                if v < w {
                    distances.insert(format!("{v}-{w}"), d);
                }
            }
        }
        Metrics { components: self.components(), diameter: (!self.vertices.is_empty()).then(|| self.diameter()), distances }
    }

    /// Three pairwise non-adjacent vertices, if any.
    pub fn independent_triple(&self) -> Option<[u64; 3]> {
        let v = &self.vertices;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if self.adjacent(v[i], v[j]) {
                    continue;
                }
                for k in j + 1..v.len() {
                    if !self.adjacent(v[i], v[k]) && !self.adjacent(v[j], v[k]) {
                        return Some([v[i], v[j], v[k]]);
                    }
                }
            }
        }
        None
    }

    pub fn is_complete_on(&self, set: &[u64]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    /// A pair at maximal distance in a connected graph, least first.
    pub fn diametral_pair(&self) -> Option<(u64, u64)> {
        let d = self.diameter().finite()?;
        if d == 0 {
            return None;
        }
        for &v in &self.vertices {
            if let Some((&w, _)) = self.bfs(v).iter().find(|(_, &dw)| dw == d) {
                return Some((v, w));
            }
        }
        None
    }

    /// For diameter 3: closed neighborhoods of the ends of a diametral pair.
    /// The first set is the one containing `prefer` if given, else the larger.
    pub fn pi_sets(&self, prefer: Option<u64>) -> Option<(Vec<u64>, Vec<u64>)> {
        if self.diameter() != Diameter::Finite(3) {
            return None;
        }
        let (r, s) = self.diametral_pair()?;
        let (a, b) = (self.closed_neighborhood(r), self.closed_neighborhood(s));
        let swap = match prefer {
            Some(p) if b.contains(&p) => true,
            Some(p) if a.contains(&p) => false,
            _ => b.len() > a.len(),
        };
        Some(if swap { (b, a) } else { (a, b) })
    }

    /// Graphviz rendering; vertices colored by component.
    pub fn to_dot(&self, name: &str) -> String {
        const COLORS: [&str; 6] = ["lightblue", "palegreen", "lightsalmon", "khaki", "plum", "lightgray"];
        let mut out = format!("graph \"{}\" {{\n  node [style=filled];\n", name.replace('"', "'"));
        for (i, comp) in self.components().iter().enumerate() {
            for v in comp {
                out.push_str(&format!("  {v} [label=\"{v}\", fillcolor={}];\n", COLORS[i % COLORS.len()]));
            }
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Prime graph of a degree multiset; degree 1 contributes nothing.
pub fn build_graph(cd: &DegreeMultiset) -> PrimeGraph {
    PrimeGraph::from_degrees(&cd.support())
}

pub fn metrics(g: &PrimeGraph) -> Metrics {
    g.metrics()
}

/// True iff every three vertices include an adjacent pair.
pub fn check_palfy(g: &PrimeGraph) -> bool {
    g.independent_triple().is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let g = PrimeGraph::from_degrees(&[1]);
        assert!(g.vertices.is_empty());
        assert_eq!(g.diameter(), Diameter::Finite(0));
        let g = PrimeGraph::from_degrees(&[1, 2, 3]);
        assert_eq!(g.components(), vec![vec![2], vec![3]]);
        assert_eq!(g.diameter(), Diameter::Infinite);
        let g = PrimeGraph::from_degrees(&[1, 3, 5, 15]);
        assert!(g.adjacent(3, 5));
        let path = PrimeGraph::from_degrees(&[6, 15, 35]);
        assert_eq!(path.diameter(), Diameter::Finite(3));
        assert_eq!(path.diametral_pair(), Some((2, 7)));
        assert_eq!(path.pi_sets(Some(3)).unwrap(), (vec![2, 3], vec![5, 7]));
        let single = PrimeGraph::from_degrees(&[4]);
        assert_eq!(single.diameter(), Diameter::Finite(0));
    }

    #[test]
    fn palfy_condition() {
        assert!(check_palfy(&PrimeGraph::from_degrees(&[2, 3])));
        assert!(!check_palfy(&PrimeGraph::from_degrees(&[2, 3, 5])));
        let c5 = PrimeGraph::from_edges(&[], &[(2, 3), (3, 5), (5, 7), (7, 11), (2, 11)]);
        // C5 has independence number 2.
        assert!(check_palfy(&c5));
    }
}
