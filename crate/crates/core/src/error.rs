use crate::numerics::{BesselDomainError, QuadratureError, RootError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {constraint} (got {value})")]
    InvalidParameter {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },
    #[error("energy {energy:e} J lies below the gap {gap:e} J")]
    BelowGap { energy: f64, gap: f64 },
    #[error("frequency {omega:e} rad/s is at or above the pair-breaking edge 2Δ/ħ")]
    PairBreaking { omega: f64 },
    #[error("spectrum diverges at ω = 0")]
    ZeroFrequency,
    #[error("σ2 = 0: the wire is not superconducting")]
    DegenerateSuperconductor,
    #[error("junction impedance approximation invalid at φ = {phi} rad")]
    ApproximationInvalid { phi: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Bessel(#[from] BesselDomainError),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            constraint: "must be positive and finite",
            value,
        })
    }
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            constraint: "must be non-negative and finite",
            value,
        })
    }
}
