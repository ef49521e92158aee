//! Quasiparticle-induced dissipation and noise in superconducting circuits.
//!
//! Energies are in joules and frequencies in rad/s throughout; conductivities
//! are normalized by the normal-state value σN.

// Negated comparisons are how NaN inputs get rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuit;
pub mod constants;
pub mod decoherence;
pub mod error;
pub mod fdt;
pub mod noise;
pub mod numerics;
pub mod qp;

pub use error::{Error, Result};
