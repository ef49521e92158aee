//! Finite-dimensional check of the generalized fluctuation-dissipation
//! theorem for density matrices diagonal in the energy basis.
//!
//! Spectra are sums of delta lines; each line is stored as a transition
//! (m, n) at ω_mn = (E_m - E_n)/ħ with its weight.

use crate::constants::HBAR;
use crate::error::{non_negative, Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

pub const MIN_DIMENSION: usize = 2;
pub const MAX_DIMENSION: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct ToySystem {
    energies: Vec<f64>,
    /// Row-major d×d.
    observable: Vec<Complex64>,
    weights: Vec<f64>,
    kt: f64,
}

fn invalid(name: &'static str, constraint: &'static str, value: f64) -> Error {
    Error::InvalidParameter {
        name,
        constraint,
        value,
    }
}

impl ToySystem {
    /// Weights must be non-negative and sum to one.
    pub fn new(
        energies: Vec<f64>,
        observable: Vec<Complex64>,
        weights: Vec<f64>,
        kt: f64,
    ) -> Result<Self> {
        let sys = Self::unnormalized(energies, observable, weights, kt)?;
        let total: f64 = sys.weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(invalid("weights", "must sum to 1", total));
        }
        Ok(sys)
    }

    fn unnormalized(
        energies: Vec<f64>,
        observable: Vec<Complex64>,
        weights: Vec<f64>,
        kt: f64,
    ) -> Result<Self> {
        let d = energies.len();
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&d) {
            return Err(invalid("dimension", "must lie in [2, 16]", d as f64));
        }
        if observable.len() != d * d {
            return Err(invalid(
                "observable",
                "must be d×d",
                observable.len() as f64,
            ));
        }
        if weights.len() != d {
            return Err(invalid(
                "weights",
                "need one weight per level",
                weights.len() as f64,
            ));
        }
        non_negative("kt", kt)?;
        for pair in energies.windows(2) {
            if !(pair[1] > pair[0]) {
                return Err(invalid("energies", "must be strictly increasing", pair[1]));
            }
        }
        for &w in &weights {
            non_negative("weight", w)?;
        }
        for m in 0..d {
            for n in 0..d {
                let a = observable[m * d + n];
                let b = observable[n * d + m].conj();
                if (a - b).norm() > 1e-12 * (a.norm() + b.norm()).max(1e-300) {
                    return Err(invalid("observable", "must be Hermitian", (a - b).norm()));
                }
            }
        }
        Ok(Self {
            energies,
            observable,
            weights,
            kt,
        })
    }

    /// ρ ∝ e^{-E/k_BT}, normalized.
    pub fn thermal(energies: Vec<f64>, observable: Vec<Complex64>, kt: f64) -> Result<Self> {
        crate::error::positive("kt", kt)?;
        let e0 = energies.first().copied().unwrap_or(0.0);
        let raw: Vec<f64> = energies.iter().map(|e| (-(e - e0) / kt).exp()).collect();
        let z: f64 = raw.iter().sum();
        Self::new(
            energies,
            observable,
            raw.iter().map(|w| w / z).collect(),
            kt,
        )
    }

    /// ρ(E) = n0·e^{-(E-E0)/k_BT} without normalization.
    pub fn quasithermal(
        energies: Vec<f64>,
        observable: Vec<Complex64>,
        kt: f64,
        prefactor: f64,
    ) -> Result<Self> {
        crate::error::positive("kt", kt)?;
        crate::error::positive("prefactor", prefactor)?;
        let e0 = energies.first().copied().unwrap_or(0.0);
        let w = energies
            .iter()
            .map(|e| prefactor * (-(e - e0) / kt).exp())
            .collect();
        Self::unnormalized(energies, observable, w, kt)
    }

    /// Random levels in [0, 5k_BT), random Hermitian observable and random
    /// normalized diagonal weights.
    pub fn random(dimension: usize, kt: f64, seed: u64) -> Result<Self> {
        let (energies, observable) = random_levels_and_observable(dimension, kt, seed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let raw: Vec<f64> = (0..dimension).map(|_| rng.gen_range(0.0..1.0)).collect();
        let z: f64 = raw.iter().sum();
        Self::new(
            energies,
            observable,
            raw.iter().map(|w| w / z).collect(),
            kt,
        )
    }

    /// Random levels and observable with thermal weights.
    pub fn random_thermal(dimension: usize, kt: f64, seed: u64) -> Result<Self> {
        let (energies, observable) = random_levels_and_observable(dimension, kt, seed)?;
        Self::thermal(energies, observable, kt)
    }

    pub fn dimension(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kt(&self) -> f64 {
        self.kt
    }

    pub fn observable(&self, m: usize, n: usize) -> Complex64 {
        self.observable[m * self.dimension() + n]
    }

    /// Tr(ρO)/Tr ρ.
    pub fn mean(&self) -> f64 {
        let total: f64 = self.weights.iter().sum();
        let tr: f64 = (0..self.dimension())
            .map(|n| self.weights[n] * self.observable(n, n).re)
            .sum();
        tr / total
    }

    pub fn transition_frequency(&self, m: usize, n: usize) -> f64 {
        (self.energies[m] - self.energies[n]) / HBAR
    }

    /// |⟨m|O - ⟨O⟩|n⟩|².
    fn fluctuation_element(&self, m: usize, n: usize) -> f64 {
        let mut o = self.observable(m, n);
        if m == n {
            o -= self.mean();
        }
        o.norm_sqr()
    }
}

fn random_levels_and_observable(
    d: usize,
    kt: f64,
    seed: u64,
) -> Result<(Vec<f64>, Vec<Complex64>)> {
    if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&d) {
        return Err(invalid("dimension", "must lie in [2, 16]", d as f64));
    }
    crate::error::positive("kt", kt)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Cumulative random spacings keep the levels ordered and separated.
    let mut energies = Vec::with_capacity(d);
    let mut e = 0.0;
    for _ in 0..d {
        energies.push(e);
        e += kt * rng.gen_range(0.2..5.0 / d as f64 + 0.2);
    }
    let mut o = vec![Complex64::new(0.0, 0.0); d * d];
    for m in 0..d {
        o[m * d + m] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for n in m + 1..d {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            o[m * d + n] = z;
            o[n * d + m] = z.conj();
        }
    }
    Ok((energies, o))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub m: usize,
    pub n: usize,
    pub omega: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralLines {
    pub lines: Vec<Line>,
}

impl SpectralLines {
    pub fn weight(&self, m: usize, n: usize) -> f64 {
        self.lines
            .iter()
            .find(|l| l.m == m && l.n == n)
            .map_or(0.0, |l| l.weight)
    }

    pub fn max_abs_weight(&self) -> f64 {
        self.lines.iter().fold(0.0, |a, l| a.max(l.weight.abs()))
    }
}

fn all_pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |m| (0..d).map(move |n| (m, n)))
}

/// ⟨S_O(ω)⟩_ρ: weight 2π·ρ_n·|⟨m|O - ⟨O⟩|n⟩|² at ω_mn.
pub fn correlation_spectrum(sys: &ToySystem) -> SpectralLines {
    correlation_with(sys, |_, n| sys.weights[n])
}

/// The correlation spectrum averaged over ρ(E + ħω), i.e. line (m, n)
/// reweighted by ρ_m.
pub fn shifted_correlation_spectrum(sys: &ToySystem) -> SpectralLines {
    correlation_with(sys, |m, _| sys.weights[m])
}

fn correlation_with<W: Fn(usize, usize) -> f64>(sys: &ToySystem, weight: W) -> SpectralLines {
    let lines = all_pairs(sys.dimension())
        .map(|(m, n)| Line {
            m,
            n,
            omega: sys.transition_frequency(m, n),
            weight: TAU * weight(m, n) * sys.fluctuation_element(m, n),
        })
        .collect();
    SpectralLines { lines }
}

/// 2ħ·Im⟨χ_O(ω)⟩_ρ, accumulated from the commutator: each pair (m, n)
/// contributes +2πρ_n|O_mn|² at ω_mn and -2πρ_n|O_mn|² at -ω_mn.
pub fn susceptibility_spectrum(sys: &ToySystem) -> SpectralLines {
    let d = sys.dimension();
    let mut acc = vec![0.0; d * d];
    for (m, n) in all_pairs(d) {
        let w = TAU * sys.weights[n] * sys.observable(m, n).norm_sqr();
        acc[m * d + n] += w;
        acc[n * d + m] -= w;
    }
    let lines = all_pairs(d)
        .map(|(m, n)| Line {
            m,
            n,
            omega: sys.transition_frequency(m, n),
            weight: acc[m * d + n],
        })
        .collect();
    SpectralLines { lines }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    /// Largest line-wise mismatch divided by the largest line weight.
    pub relative: f64,
    pub absolute: f64,
    pub scale: f64,
    pub lines_checked: usize,
}

fn residual(pairs: impl Iterator<Item = (f64, f64)>, scale: f64) -> Residual {
    let mut absolute: f64 = 0.0;
    let mut count = 0;
    for (a, b) in pairs {
        absolute = absolute.max((a - b).abs());
        count += 1;
    }
    Residual {
        relative: if scale > 0.0 {
            absolute / scale
        } else {
            absolute
        },
        absolute,
        scale,
        lines_checked: count,
    }
}

/// 2ħ Im χ(ω) against ⟨S(ω)⟩_ρ(E) - ⟨S(ω)⟩_ρ(E+ħω), line by line.
pub fn verify_gfdt(sys: &ToySystem) -> Residual {
    let chi = susceptibility_spectrum(sys);
    let s = correlation_spectrum(sys);
    let shifted = shifted_correlation_spectrum(sys);
    let scale = s.max_abs_weight().max(chi.max_abs_weight());
    residual(
        chi.lines
            .iter()
            .zip(s.lines.iter().zip(&shifted.lines))
            .map(|(c, (a, b))| (c.weight, a.weight - b.weight)),
        scale,
    )
}

/// ⟨S(ω)⟩ against 2ħ Im χ(ω)·[n_B(ω) + 1] on every inelastic line.
pub fn verify_fdt_reduction(sys: &ToySystem) -> Residual {
    let chi = susceptibility_spectrum(sys);
    let s = correlation_spectrum(sys);
    let kt = sys.kt;
    let scale = s.max_abs_weight();
    residual(
        chi.lines
            .iter()
            .zip(&s.lines)
            .filter(|(c, _)| c.m != c.n)
            .map(|(c, a)| {
                let x = HBAR * c.omega / kt;
                (a.weight, c.weight / -(-x).exp_m1())
            }),
        scale,
    )
}
