//! Double-exponential quadrature.
//!
//! Finite intervals use the tanh-sinh map, semi-infinite ones the exp-sinh
//! map. Both push the abscissae towards the endpoints doubly exponentially,
//! so integrable endpoint singularities such as `x^(-1/2)` converge at the
//! same rate as smooth integrands.

use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;
use thiserror::Error;

/// Tolerances and refinement budget for [`integrate_singular`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub max_levels: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_floor: 1e-300,
            max_levels: 12,
        }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, abs_floor: f64, max_levels: u32) -> Result<Self, QuadratureError> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-3) {
            return Err(QuadratureError::InvalidSpec(
                "rel_tol must lie in (0, 1e-3]",
            ));
        }
        if !(abs_floor >= 0.0) {
            return Err(QuadratureError::InvalidSpec(
                "abs_floor must be non-negative",
            ));
        }
        if max_levels < 6 {
            return Err(QuadratureError::InvalidSpec(
                "max_levels must be at least 6",
            ));
        }
        Ok(Self {
            rel_tol,
            abs_floor,
            max_levels,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("quadrature did not converge after {levels} levels: estimate {estimate:e}, error bound {error_bound:e}")]
    NotConverged {
        estimate: f64,
        error_bound: f64,
        levels: u32,
    },
    #[error("integrand returned a non-finite value at x = {x:e}")]
    NonFinite { x: f64 },
    #[error("invalid integration limits [{a}, {b}]")]
    InvalidLimits { a: f64, b: f64 },
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(&'static str),
}

// Beyond these |t| the node spacing from the endpoint underflows.
const T_MAX_FINITE: f64 = 6.1;
const T_MIN_HALF_LINE: f64 = -6.1;
const T_MAX_HALF_LINE: f64 = 3.5;
const H0: f64 = 0.5;

/// An abscissa with its exact distances to both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// Integrates `f` over `(a, b)`; pass `f64::INFINITY` for a half-line.
///
/// Endpoints are never evaluated, so `f` may be singular there.
pub fn integrate_singular<F>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<f64, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    integrate_singular_nodes(|n: Node| f(n.x), a, b, spec)
}

/// Like [`integrate_singular`] but hands the integrand the distance to each
/// endpoint, so singular factors such as `(x - a)^(-1/2)` keep full relative
/// precision when `a` is far from zero.
pub fn integrate_singular_nodes<F>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<f64, QuadratureError>
where
    F: Fn(Node) -> f64,
{
    if a.is_nan() || b.is_nan() || !a.is_finite() || !(b > a) {
        if a == b {
            return Ok(0.0);
        }
        return Err(QuadratureError::InvalidLimits { a, b });
    }
    if b.is_infinite() {
        refine(
            |t| exp_sinh_node(&f, a, t),
            T_MIN_HALF_LINE,
            T_MAX_HALF_LINE,
            spec,
        )
    } else {
        refine(
            |t| tanh_sinh_node(&f, a, b, t),
            -T_MAX_FINITE,
            T_MAX_FINITE,
            spec,
        )
    }
}

fn tanh_sinh_node<F: Fn(Node) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    t: f64,
) -> Result<f64, QuadratureError> {
    let len = b - a;
    let u = FRAC_PI_2 * t.sinh();
    // Distance to the nearer endpoint, computed without cancellation.
    let gap = len / (1.0 + (2.0 * u.abs()).exp());
    if gap <= 0.0 {
        return Ok(0.0);
    }
    let node = if t < 0.0 {
        Node {
            x: a + gap,
            from_lo: gap,
            to_hi: len - gap,
        }
    } else {
        Node {
            x: b - gap,
            from_lo: len - gap,
            to_hi: gap,
        }
    };
    let cu = u.cosh();
    let w = 0.5 * len * FRAC_PI_2 * t.cosh() / (cu * cu);
    let fx = f(node);
    if !fx.is_finite() {
        return Err(QuadratureError::NonFinite { x: node.x });
    }
    Ok(w * fx)
}

fn exp_sinh_node<F: Fn(Node) -> f64>(f: &F, a: f64, t: f64) -> Result<f64, QuadratureError> {
    let e = (FRAC_PI_2 * t.sinh()).exp();
    if e <= 0.0 || !e.is_finite() {
        return Ok(0.0);
    }
    let node = Node {
        x: a + e,
        from_lo: e,
        to_hi: f64::INFINITY,
    };
    let w = FRAC_PI_2 * t.cosh() * e;
    let fx = f(node);
    if !fx.is_finite() {
        return Err(QuadratureError::NonFinite { x: node.x });
    }
    let term = w * fx;
    Ok(if term.is_finite() { term } else { 0.0 })
}

// Trapezoidal sums on a halving step; each level only adds the odd nodes.
fn refine<G>(node: G, t_lo: f64, t_hi: f64, spec: &QuadratureSpec) -> Result<f64, QuadratureError>
where
    G: Fn(f64) -> Result<f64, QuadratureError>,
{
    let mut h = H0;
    let mut sum = 0.0;
    let n0 = ((t_hi - t_lo) / h).round() as i64;
    for k in 0..=n0 {
        sum += node(t_lo + k as f64 * h)?;
    }
    let mut estimate = sum * h;
    let mut last_diff = f64::INFINITY;
    for level in 1..=spec.max_levels {
        h *= 0.5;
        let n = ((t_hi - t_lo) / h).round() as i64;
        let mut k = 1;
        while k < n {
            sum += node(t_lo + k as f64 * h)?;
            k += 2;
        }
        let next = sum * h;
        let diff = (next - estimate).abs();
        estimate = next;
        if level >= 2 && diff <= (spec.rel_tol * estimate.abs()).max(spec.abs_floor) {
            return Ok(estimate);
        }
        last_diff = diff;
    }
    Err(QuadratureError::NotConverged {
        estimate,
        error_bound: last_diff,
        levels: spec.max_levels,
    })
}

/// Composite Gauss-Legendre rule, 8 nodes per panel, for smooth integrands
/// on a caller-supplied partition.
pub fn gauss_legendre_panels<F: Fn(f64) -> f64>(f: F, edges: &[f64]) -> f64 {
    const X: [f64; 4] = [
        0.183_434_642_495_649_8,
        0.525_532_409_916_329,
        0.796_666_477_413_626_7,
        0.960_289_856_497_536_3,
    ];
    const W: [f64; 4] = [
        0.362_683_783_378_362,
        0.313_706_645_877_887_3,
        0.222_381_034_453_374_5,
        0.101_228_536_290_376_3,
    ];
    edges
        .windows(2)
        .map(|p| {
            let (c, r) = (0.5 * (p[0] + p[1]), 0.5 * (p[1] - p[0]));
            r * X
                .iter()
                .zip(W.iter())
                .map(|(x, w)| w * (f(c - r * x) + f(c + r * x)))
                .sum::<f64>()
        })
        .sum()
}
