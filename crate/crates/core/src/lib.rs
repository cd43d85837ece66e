//! Character degree graphs of finite solvable groups.
//!
//! The crate builds permutation groups and structured semidirect products,
//! computes their irreducible character degrees (by a modular Dixon oracle or
//! by Clifford strata over semilinear groups), and checks prime graph
//! properties and the structural statements about them.

pub mod algebra;
pub mod analysis;
pub mod characters;
pub mod cliffordcd;
pub mod constructions;
pub mod graphkit;
pub(crate) mod bigser;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod permgrp;
pub mod report;
pub mod semilin;

pub use error::{Error, Result};
