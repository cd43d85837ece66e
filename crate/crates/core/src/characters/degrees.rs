use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Oracle,
    Clifford,
    Manual,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Oracle => "oracle",
            Provenance::Clifford => "clifford",
            Provenance::Manual => "manual",
        }
    }
}

/// Irreducible character degrees with multiplicities. Construction enforces
/// that the squares sum to the group order and that 1 occurs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMultiset", into = "RawMultiset")]
pub struct DegreeMultiset {
    order: u128,
    degrees: BTreeMap<u64, u64>,
    provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct RawMultiset {
    order: u128,
    degrees: Vec<(u64, u64)>,
    provenance: Provenance,
}

impl TryFrom<RawMultiset> for DegreeMultiset {
    type Error = Error;
    fn try_from(r: RawMultiset) -> Result<Self> {
        DegreeMultiset::new(r.order, r.degrees, r.provenance)
    }
}

impl From<DegreeMultiset> for RawMultiset {
    fn from(d: DegreeMultiset) -> Self {
        RawMultiset { order: d.order, degrees: d.degrees.into_iter().collect(), provenance: d.provenance }
    }
}

impl DegreeMultiset {
    pub fn new(order: u128, pairs: impl IntoIterator<Item = (u64, u64)>, provenance: Provenance) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        for (d, m) in pairs {
            if d == 0 {
                return Err(Error::invalid("degree 0"));
            }
            if m > 0 {
                *degrees.entry(d).or_insert(0) += m;
            }
        }
        let ms = DegreeMultiset { order, degrees, provenance };
        if !ms.degrees.contains_key(&1) {
            return Err(Error::invariant("degree multiset lacks the trivial character"));
        }
        let sum = ms.sum_of_squares();
        if sum != BigUint::from(order) {
            return Err(Error::invariant(format!("sum of squared degrees {sum} differs from group order {order}")));
        }
        Ok(ms)
    }

    /// From a plain list of degrees (with repetition).
    pub fn from_list(order: u128, list: &[u64], provenance: Provenance) -> Result<Self> {
        DegreeMultiset::new(order, list.iter().map(|&d| (d, 1)), provenance)
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn sum_of_squares(&self) -> BigUint {
        self.degrees.iter().fold(BigUint::from(0u32), |acc, (&d, &m)| acc + BigUint::from(d) * BigUint::from(d) * BigUint::from(m))
    }

    /// Distinct degrees, ascending.
    pub fn support(&self) -> Vec<u64> {
        self.degrees.keys().copied().collect()
    }

    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.degrees.iter().map(|(&d, &m)| (d, m)).collect()
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        self.degrees.get(&d).copied().unwrap_or(0)
    }

    /// Number of irreducible characters.
    pub fn count(&self) -> u64 {
        self.degrees.values().sum()
    }

    pub fn linear_count(&self) -> u64 {
        self.multiplicity(1)
    }

    /// Same degrees and multiplicities, ignoring provenance.
    pub fn same_multiset(&self, other: &DegreeMultiset) -> bool {
        self.order == other.order && self.degrees == other.degrees
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_gate() {
        assert!(DegreeMultiset::from_list(6, &[1, 1, 2], Provenance::Manual).is_ok());
        assert!(DegreeMultiset::from_list(7, &[1, 1, 2], Provenance::Manual).is_err());
        assert!(DegreeMultiset::from_list(4, &[2], Provenance::Manual).is_err());
        let d = DegreeMultiset::from_list(24, &[1, 1, 1, 2, 2, 2, 3], Provenance::Oracle).unwrap();
        let js = serde_json::to_string(&d).unwrap();
        assert_eq!(js, r#"{"order":24,"degrees":[[1,3],[2,3],[3,1]],"provenance":"oracle"}"#);
        let back: DegreeMultiset = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<DegreeMultiset>(r#"{"order":5,"degrees":[[1,3]],"provenance":"manual"}"#).is_err());
    }
}
