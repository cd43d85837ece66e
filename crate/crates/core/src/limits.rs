//! Named scale bounds. Every scale error names one of these.

/// Largest group order for element enumeration.
pub const MAX_ENUM_ORDER: u64 = 1_000_000;
/// Largest |G| * degree for stored element lists.
pub const MAX_ENUM_ENTRIES: u64 = 1 << 27;
/// Largest permutation degree.
pub const MAX_DEGREE: usize = 4096;
/// Largest group order accepted by the degree oracle.
pub const ORACLE_MAX_ORDER: u64 = 20_000;
/// Largest class count accepted by the degree oracle.
pub const ORACLE_MAX_CLASSES: usize = 120;
/// Largest class count produced by class enumeration.
pub const MAX_CLASSES: usize = 200;
/// Upper bound for the oracle's splitting prime.
pub const ORACLE_MAX_PRIME: u64 = 1 << 31;
/// Largest field order for semilinear groups and discrete logs.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;
/// Largest field order for affine permutation constructions.
pub const AFFINE_MAX_ORDER: u64 = 4096;
/// Largest |P| = p^{3n} for pairing constructions.
pub const PAIRING_MAX_ORDER: u64 = 1 << 12;
/// Trial budget for Hall subgroup searches.
pub const HALL_BUDGET: u64 = 100_000;
/// Largest |P| for the character-side ramification check.
pub const FORM_ORACLE_MAX_ORDER: u64 = 2000;
/// Largest module dimension for irreducibility and Gamma embedding.
pub const MAX_MODULE_DIM: usize = 20;
/// Largest closure size for semilinear and matrix group closures.
pub const MAX_CLOSURE: u64 = 10_000_000;
/// Largest q^m for the explicit matrix path of the module lemmas.
pub const MODULE_MATRIX_MAX: u64 = 4096;
/// Largest bit length of a^n - 1 in Zsigmondy computations.
pub const ZSIGMONDY_MAX_BITS: u64 = 4096;
/// Iteration budget for Pollard rho.
pub const RHO_BUDGET: u64 = 1 << 28;
/// Largest dimension certified irreducible by exhaustive spinning.
pub const EXHAUSTIVE_SPIN_MAX: u64 = 1 << 16;

/// All limits as (name, value, meaning), for the `limits` subcommand.
pub fn all() -> Vec<(&'static str, u128, &'static str)> {
    vec![
        ("MAX_ENUM_ORDER", MAX_ENUM_ORDER as u128, "largest group order for element enumeration"),
        ("MAX_ENUM_ENTRIES", MAX_ENUM_ENTRIES as u128, "largest |G| * degree for stored element lists"),
        ("MAX_DEGREE", MAX_DEGREE as u128, "largest permutation degree"),
        ("ORACLE_MAX_ORDER", ORACLE_MAX_ORDER as u128, "largest |G| for the degree oracle"),
        ("ORACLE_MAX_CLASSES", ORACLE_MAX_CLASSES as u128, "largest class count for the degree oracle"),
        ("MAX_CLASSES", MAX_CLASSES as u128, "largest class count for class enumeration"),
        ("ORACLE_MAX_PRIME", ORACLE_MAX_PRIME as u128, "upper bound for the oracle splitting prime"),
        ("MAX_FIELD_ORDER", MAX_FIELD_ORDER as u128, "largest p^n for semilinear groups and discrete logs"),
        ("AFFINE_MAX_ORDER", AFFINE_MAX_ORDER as u128, "largest p^n for affine constructions"),
        ("PAIRING_MAX_ORDER", PAIRING_MAX_ORDER as u128, "largest p^{3n} for pairing constructions"),
        ("HALL_BUDGET", HALL_BUDGET as u128, "trial budget for Hall subgroup searches"),
        ("FORM_ORACLE_MAX_ORDER", FORM_ORACLE_MAX_ORDER as u128, "largest |P| for the character-side ramification check"),
        ("MAX_MODULE_DIM", MAX_MODULE_DIM as u128, "largest module dimension"),
        ("MAX_CLOSURE", MAX_CLOSURE as u128, "largest closure size for semilinear and matrix groups"),
        ("MODULE_MATRIX_MAX", MODULE_MATRIX_MAX as u128, "largest q^m for the matrix path of the module lemmas"),
        ("ZSIGMONDY_MAX_BITS", ZSIGMONDY_MAX_BITS as u128, "largest bit length of a^n - 1"),
        ("RHO_BUDGET", RHO_BUDGET as u128, "iteration budget for Pollard rho"),
        ("EXHAUSTIVE_SPIN_MAX", EXHAUSTIVE_SPIN_MAX as u128, "largest p^dim certified by exhaustive spinning"),
    ]
}
