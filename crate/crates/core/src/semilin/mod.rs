//! Semilinear groups over finite fields and the module lemmas about them.

mod checks;
mod group;
mod lemmas;
mod module;

pub use checks::{admissible_deltas, check_ppd_centralizer, check_semilinear0, check_semilinear1, orbit_labels, PpdReport, Semilinear0Report, Semilinear1Report};
pub use group::{field_table, Elem, Orbit, SemilinearGroup, SemilinearParams, StabilizerShape};
pub use lemmas::{check_module_lemmas, module_lemma_sweep, ModuleLemmaReport};
pub use module::{
    centralizer_algebra_dim, embeds_in_gamma, semilinear_matrix, semilinear_perm_group, GModule, GammaEmbedding, Irreducibility,
};

use crate::error::Result;

/// Gamma(p^n).
pub fn gamma_group(p: u64, n: u32) -> Result<SemilinearGroup> {
    SemilinearGroup::gamma(field_table(p, n)?)
}

/// Orbits of H on the nonzero vectors of its natural module.
pub fn orbits_on_nonzero(h: &SemilinearGroup) -> Result<Vec<Orbit>> {
    h.orbits_on_nonzero()
}
