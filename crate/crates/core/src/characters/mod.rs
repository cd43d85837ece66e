//! Irreducible character degrees and ramification over central subgroups.

mod degrees;
mod dixon;
mod forms;

pub use degrees::{DegreeMultiset, Provenance};
pub use dixon::{degree_oracle, dixon, dixon_prime, DixonResult};
pub use forms::{
    commutator_form, count_non_fully_ramified, count_with, fully_ramified_via_characters, AlternatingForm, CentralSetup,
    CharacterRamification, RamificationCount, RamificationRecord,
};
