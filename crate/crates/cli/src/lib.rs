//! Config ingestion, figure data, sweeps and CSV/JSON output for qpnoise.

// Negated comparisons are how NaN inputs get rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod app;
pub mod config;
pub mod error;
pub mod figures;
pub mod output;
pub mod sweep;

pub use error::{CliError, Result};
