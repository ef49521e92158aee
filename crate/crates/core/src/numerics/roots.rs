//! Bracketing root finder.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self, RootError> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(RootError::InvalidBracket { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("objective does not change sign: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { f_lo: f64, f_hi: f64 },
    #[error("objective is not finite at x = {x:e}")]
    NonFinite { x: f64 },
    #[error("tolerance not reached; best iterate {best:e} with bracket width {width:e}")]
    ToleranceUnreachable { best: f64, width: f64 },
}

const MAX_ITER: usize = 2000;

/// Bisection. Stops once the bracket width is below `tol · max(1, |x|)`.
pub fn find_root<F>(f: F, bracket: Bracket, tol: f64) -> Result<f64, RootError>
where
    F: Fn(f64) -> f64,
{
    find_root_fallible(|x| Ok::<f64, RootError>(f(x)), bracket, tol)
}

/// Same as [`find_root`] for objectives that can fail.
pub fn find_root_fallible<F, E>(f: F, bracket: Bracket, tol: f64) -> Result<f64, E>
where
    F: Fn(f64) -> Result<f64, E>,
    E: From<RootError>,
{
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let f_lo = eval(&f, lo)?;
    let f_hi = eval(&f, hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(RootError::NoSignChange { f_lo, f_hi }.into());
    }
    let lo_negative = f_lo < 0.0;
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol * mid.abs().max(1.0) {
            return Ok(mid);
        }
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(&f, mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(RootError::ToleranceUnreachable {
        best: 0.5 * (lo + hi),
        width: hi - lo,
    }
    .into())
}

fn eval<F, E>(f: &F, x: f64) -> Result<f64, E>
where
    F: Fn(f64) -> Result<f64, E>,
    E: From<RootError>,
{
    let v = f(x)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(RootError::NonFinite { x }.into())
    }
}
