//! Character degrees of P x| H from orbit data on the layers of P.

mod degrees;
pub(crate) mod format;
mod iso;
mod spec;

pub use degrees::{clifford_breakdown, clifford_degrees, LayerBreakdown, OrbitClass};
pub use format::{parse_spec, write_spec};
pub use iso::{layer_isomorphisms, LayerIsomorphism};
pub use spec::{layer_irreducibility, CliffordSpec, LayerSpec};

mod class_b;
pub use class_b::{disconnected_class_b_degrees, ClassBReport};
