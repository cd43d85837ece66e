//! Exact integer and finite-field arithmetic.

pub mod arith;
pub mod field;
pub mod minimal;
pub mod poly;
pub mod zsigmondy;

pub use arith::{factorize, is_prime, prime_divisors};
pub use field::{frobenius_orbit, DiscreteLog, FieldElement, FieldSpec, GaloisAuto, GfTable};
pub use minimal::{minimal_order_search, MinimalOrder};
pub use zsigmondy::{has_primitive_prime_divisor, primitive_part, zsigmondy_ppd};
