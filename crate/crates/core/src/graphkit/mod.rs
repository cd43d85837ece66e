//! Prime graphs on character degrees and the structure checkers built on them.

mod graph;
mod lemmas;
mod structure;
mod verdicts;

pub use graph::{build_graph, check_palfy, metrics, Diameter, Metrics, PrimeGraph};
pub use lemmas::{
    check_abelian_fitting_diameter, check_central_quotient_graph, check_fitting_degree, check_hypercentral, check_sylow_degrees,
    check_unique_noncentral,
};
pub use structure::{
    cyclic_complement, is_cyclic_quotient, noncentral_primes, nonabelian_primes, quotient_degrees, section_module, Section, Structure,
};
pub use verdicts::{
    check_diameter_three, check_disconnected_structure, classify_disconnected, semilinear_sylows_cyclic, Claim, ClassificationVerdict, DisconnectedType, Mode,
    Subject, ClaimsReport,
};
