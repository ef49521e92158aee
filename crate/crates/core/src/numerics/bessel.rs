//! Modified Bessel function of the second kind, order zero.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("K0 is defined for y > 0, got {0}")]
pub struct BesselDomainError(pub f64);

/// Value of K0 together with an underflow marker.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct K0Value {
    pub value: f64,
    pub underflow: bool,
}

/// K0(y). Below `f64::MIN_POSITIVE` the value is flushed to zero and flagged.
pub fn bessel_k0(y: f64) -> Result<K0Value, BesselDomainError> {
    if !(y > 0.0) || y.is_nan() {
        return Err(BesselDomainError(y));
    }
    let value = if y < 2.0 {
        k0_series(y)
    } else {
        bessel_k0_scaled(y)? * (-y).exp()
    };
    if value < f64::MIN_POSITIVE {
        Ok(K0Value {
            value: 0.0,
            underflow: true,
        })
    } else {
        Ok(K0Value {
            value,
            underflow: false,
        })
    }
}

/// e^y · K0(y), finite for every positive `y`.
pub fn bessel_k0_scaled(y: f64) -> Result<f64, BesselDomainError> {
    if !(y > 0.0) || y.is_nan() {
        return Err(BesselDomainError(y));
    }
    if y < 2.0 {
        Ok(k0_series(y) * y.exp())
    } else {
        Ok(k0_scaled_cf(y))
    }
}

// K0(y) = -(ln(y/2) + γ) I0(y) + Σ_{k≥1} H_k (y²/4)^k / (k!)²
fn k0_series(y: f64) -> f64 {
    let q = 0.25 * y * y;
    let log_term = (0.5 * y).ln() + EULER_GAMMA;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    let mut harmonic = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term < 1e-18 * i0 {
            break;
        }
    }
    -log_term * i0 + tail
}

// Steed's continued fraction for e^y K0(y) (Temme's CF2 with ν = 0).
fn k0_scaled_cf(y: f64) -> f64 {
    let mut b = 2.0 * (1.0 + y);
    let mut d = 1.0 / b;
    let mut delh = d;
    let (mut q1, mut q2) = (0.0, 1.0);
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    (PI / (2.0 * y)).sqrt() / s
}
