//! Permutation groups on a stabilizer-chain backbone.

mod chain;
mod classes;
pub mod format;
mod group;
mod perm;
mod quotient;

pub use chain::Chain;
pub use classes::{conjugacy_classes, ClassData, ConjugacyClass, ElementTable};
pub use group::{PermGroup, Subgroup};
pub use perm::Perm;
pub use quotient::Quotient;

use serde::Serialize;

use crate::error::Result;

/// Fitting and central series of a group.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub fitting: Subgroup,
    pub fitting2: Subgroup,
    pub center: Subgroup,
    /// The designated normal p-subgroup with its lower central series.
    pub lower_central_of: Option<(u64, Vec<Subgroup>)>,
    pub fitting_height: usize,
}

/// Orders only, for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SeriesSummary {
    pub fitting_order: u64,
    pub fitting2_order: u64,
    pub center_order: u64,
    pub lower_central_orders: Vec<u64>,
    pub fitting_height: usize,
}

impl SeriesReport {
    /// Series data; `p` designates O_p(G) for the lower central series.
    pub fn compute(g: &PermGroup, p: Option<u64>) -> Result<SeriesReport> {
        let series = g.fitting_series()?;
        let fitting = series.get(1).cloned().unwrap_or_else(|| series[0].clone());
        let fitting2 = series.get(2).cloned().unwrap_or_else(|| fitting.clone());
        let center = g.center()?;
        let lower_central_of = match p {
            Some(p) => Some((p, g.o_p(p)?.lower_central_series()?)),
            None => None,
        };
        Ok(SeriesReport { fitting, fitting2, center, lower_central_of, fitting_height: series.len() - 1 })
    }

    pub fn summary(&self) -> SeriesSummary {
        let sz = |h: &Subgroup| h.size().unwrap_or(0);
        SeriesSummary {
            fitting_order: sz(&self.fitting),
            fitting2_order: sz(&self.fitting2),
            center_order: sz(&self.center),
            lower_central_orders: self.lower_central_of.as_ref().map(|(_, v)| v.iter().map(sz).collect()).unwrap_or_default(),
            fitting_height: self.fitting_height,
        }
    }
}
