//! Quasiparticle occupation laws, normalized density and Mattis-Bardeen
//! conductivity for an arbitrary occupation n(E).

use crate::constants::{BOLTZMANN, HBAR, MU0, PLANCK};
use crate::error::{non_negative, positive, Error, Result};
use crate::numerics::{bessel_k0_scaled, integrate_singular, QuadratureSpec, EULER_GAMMA};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Exponential cutoff for the thermal tails, in units of k_BT above the gap.
pub const TAIL_CUTOFF_KT: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Material {
    gap_j: f64,
    penetration_depth_m: f64,
    critical_temperature_k: f64,
    temperature_k: f64,
}

impl Material {
    pub fn new(
        gap_j: f64,
        penetration_depth_m: f64,
        critical_temperature_k: f64,
        temperature_k: f64,
    ) -> Result<Self> {
        positive("gap", gap_j)?;
        positive("penetration_depth", penetration_depth_m)?;
        non_negative("critical_temperature", critical_temperature_k)?;
        positive("temperature", temperature_k)?;
        if BOLTZMANN * temperature_k >= gap_j {
            return Err(Error::InvalidParameter {
                name: "temperature",
                constraint: "k_B·T must stay below the gap",
                value: temperature_k,
            });
        }
        Ok(Self {
            gap_j,
            penetration_depth_m,
            critical_temperature_k,
            temperature_k,
        })
    }

    /// Gap as Δ/h in GHz, λ in nm, Tc in K, T in mK.
    pub fn from_lab_units(
        gap_ghz: f64,
        lambda_nm: f64,
        tc_k: f64,
        temperature_mk: f64,
    ) -> Result<Self> {
        Self::new(
            PLANCK * gap_ghz * 1e9,
            lambda_nm * 1e-9,
            tc_k,
            temperature_mk * 1e-3,
        )
    }

    /// Thin-film aluminum at 30 mK.
    pub fn aluminum() -> Self {
        Self::from_lab_units(44.0, 50.0, 1.2, 30.0).expect("valid constants")
    }

    pub fn with_temperature(&self, temperature_k: f64) -> Result<Self> {
        Self::new(
            self.gap_j,
            self.penetration_depth_m,
            self.critical_temperature_k,
            temperature_k,
        )
    }

    /// Same material at k_BT = `ratio`·Δ.
    pub fn with_reduced_temperature(&self, ratio: f64) -> Result<Self> {
        self.with_temperature(ratio * self.gap_j / BOLTZMANN)
    }

    pub fn gap(&self) -> f64 {
        self.gap_j
    }

    pub fn gap_ghz(&self) -> f64 {
        self.gap_j / PLANCK / 1e9
    }

    pub fn penetration_depth(&self) -> f64 {
        self.penetration_depth_m
    }

    pub fn critical_temperature(&self) -> f64 {
        self.critical_temperature_k
    }

    pub fn temperature(&self) -> f64 {
        self.temperature_k
    }

    pub fn kt(&self) -> f64 {
        BOLTZMANN * self.temperature_k
    }

    /// k_BT/Δ.
    pub fn reduced_temperature(&self) -> f64 {
        self.kt() / self.gap_j
    }

    /// Normal-state conductivity ħ/(μ0 λ² π Δ), in S/m.
    pub fn sigma_n(&self) -> f64 {
        HBAR / (MU0 * self.penetration_depth_m.powi(2) * PI * self.gap_j)
    }

    /// μ0 λ² ℓ/A.
    pub fn kinetic_inductance(&self, length_m: f64, area_m2: f64) -> f64 {
        MU0 * self.penetration_depth_m.powi(2) * length_m / area_m2
    }
}

/// Normal-state conductivity ħ/(μ0 λ² π Δ), in S/m.
pub fn sigma_n(mat: &Material) -> f64 {
    mat.sigma_n()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum DistributionMode {
    #[default]
    Quasithermal,
    ThermalEquilibrium,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QpDistribution {
    pub x_qp_res: f64,
    pub mode: DistributionMode,
}

impl QpDistribution {
    pub fn quasithermal(x_qp_res: f64) -> Result<Self> {
        non_negative("x_qp_res", x_qp_res)?;
        Ok(Self {
            x_qp_res,
            mode: DistributionMode::Quasithermal,
        })
    }

    pub fn thermal() -> Self {
        Self {
            x_qp_res: 0.0,
            mode: DistributionMode::ThermalEquilibrium,
        }
    }

    pub fn law(&self, mat: &Material) -> OccupationLaw {
        match self.mode {
            DistributionMode::Quasithermal => {
                OccupationLaw::Quasithermal(Quasithermal::from_xqp(xqp_total(self, mat), mat))
            }
            DistributionMode::ThermalEquilibrium => {
                OccupationLaw::FermiDirac(FermiDirac { kt: mat.kt() })
            }
        }
    }
}

/// Occupation n(E) of quasiparticle states, E in joules.
pub trait Occupation {
    fn n(&self, energy: f64) -> f64;

    /// n(E) - n(E + w). Implementations override this when a cancellation-free
    /// form exists.
    fn difference(&self, energy: f64, w: f64) -> f64 {
        self.n(energy) - self.n(energy + w)
    }
}

/// n(E) = n_Δ · e^{-(E-Δ)/k_BT}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quasithermal {
    pub at_gap: f64,
    pub gap: f64,
    pub kt: f64,
}

impl Quasithermal {
    pub fn from_xqp(x_qp: f64, mat: &Material) -> Self {
        Self {
            at_gap: x_qp * (mat.gap() / (2.0 * PI * mat.kt())).sqrt(),
            gap: mat.gap(),
            kt: mat.kt(),
        }
    }
}

impl Occupation for Quasithermal {
    fn n(&self, energy: f64) -> f64 {
        self.at_gap * (-(energy - self.gap) / self.kt).exp()
    }

    fn difference(&self, energy: f64, w: f64) -> f64 {
        -self.n(energy) * (-w / self.kt).exp_m1()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermiDirac {
    pub kt: f64,
}

impl Occupation for FermiDirac {
    fn n(&self, energy: f64) -> f64 {
        let a = energy / self.kt;
        if a > 0.0 {
            let e = (-a).exp();
            e / (1.0 + e)
        } else {
            1.0 / (1.0 + a.exp())
        }
    }

    // f(a) - f(b) = -f(a)(1 - f(b)) expm1(a - b)
    fn difference(&self, energy: f64, w: f64) -> f64 {
        let fa = self.n(energy);
        let fb = self.n(energy + w);
        -fa * (1.0 - fb) * (-w / self.kt).exp_m1()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OccupationLaw {
    Quasithermal(Quasithermal),
    FermiDirac(FermiDirac),
}

impl Occupation for OccupationLaw {
    fn n(&self, energy: f64) -> f64 {
        match self {
            Self::Quasithermal(q) => q.n(energy),
            Self::FermiDirac(f) => f.n(energy),
        }
    }

    fn difference(&self, energy: f64, w: f64) -> f64 {
        match self {
            Self::Quasithermal(q) => q.difference(energy, w),
            Self::FermiDirac(f) => f.difference(energy, w),
        }
    }
}

/// Forces the naive n(E) - n(E+w) subtraction.
#[derive(Debug, Clone, Copy)]
pub struct DirectDifference<O>(pub O);

impl<O: Occupation> Occupation for DirectDifference<O> {
    fn n(&self, energy: f64) -> f64 {
        self.0.n(energy)
    }
}

impl<T: Fn(f64) -> f64> Occupation for ClosureOccupation<T> {
    fn n(&self, energy: f64) -> f64 {
        (self.0)(energy)
    }
}

/// Adapts an arbitrary `Fn(E) -> n`.
pub struct ClosureOccupation<T>(pub T);

pub fn occupation(dist: &QpDistribution, mat: &Material, energy: f64) -> Result<f64> {
    if energy < mat.gap() {
        return Err(Error::BelowGap {
            energy,
            gap: mat.gap(),
        });
    }
    Ok(dist.law(mat).n(energy))
}

/// Resident plus thermal density, x_res + √(2πk_BT/Δ)·e^{-Δ/k_BT}.
pub fn xqp_total(dist: &QpDistribution, mat: &Material) -> f64 {
    let tau = mat.reduced_temperature();
    dist.x_qp_res + (2.0 * PI * tau).sqrt() * (-1.0 / tau).exp()
}

/// (1/Δ)∫dξ n(√(ξ²+Δ²)) by quadrature, with ξ = Δ sinh u.
pub fn xqp_from_occupation<O: Occupation>(
    n: &O,
    mat: &Material,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let gap = mat.gap();
    let u_max = (1.0 + TAIL_CUTOFF_KT * mat.reduced_temperature()).acosh();
    let v = integrate_singular(|u| u.cosh() * n.n(gap * u.cosh()), 0.0, u_max, spec)?;
    Ok(2.0 * v)
}

/// σ1/σN and σ2/σN at one frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexConductivity {
    pub sigma1: f64,
    pub sigma2: f64,
    pub omega: f64,
}

/// A closed-form value with its validity window flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Approximation {
    pub value: f64,
    pub valid: bool,
}

fn check_subgap(mat: &Material, omega: f64) -> Result<f64> {
    positive("omega", omega)?;
    let w = HBAR * omega / mat.gap();
    if w >= 2.0 {
        return Err(Error::PairBreaking { omega });
    }
    Ok(w)
}

pub fn sigma1_exact(
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    sigma1_exact_with(&dist.law(mat), mat, omega, spec)
}

/// σ1/σN for an arbitrary occupation.
///
/// With E - Δ = ħω sinh²v both inverse square roots cancel against the
/// Jacobian, leaving a smooth integrand on [0, v_max].
pub fn sigma1_exact_with<O: Occupation>(
    n: &O,
    mat: &Material,
    omega: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let w = check_subgap(mat, omega)?;
    let gap = mat.gap();
    let tau = mat.reduced_temperature();
    let v_max = (TAIL_CUTOFF_KT * tau / w).sqrt().asinh();
    let integrand = |v: f64| {
        let s = v.sinh();
        let eps = w * s * s;
        let e = 1.0 + eps;
        let num = e * (e + w) + 1.0;
        let den = ((eps + 2.0) * (eps + w + 2.0)).sqrt();
        2.0 * num / den * n.difference(gap * e, gap * w)
    };
    let v = integrate_singular(integrand, 0.0, v_max, spec)?;
    Ok(2.0 / w * v)
}

pub fn sigma2_exact(
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    sigma2_exact_with(&dist.law(mat), mat, omega, spec)
}

/// σ2/σN for an arbitrary occupation, using E = (Δ - ħω/2) - (ħω/2)cos θ.
pub fn sigma2_exact_with<O: Occupation>(
    n: &O,
    mat: &Material,
    omega: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let w = check_subgap(mat, omega)?;
    let gap = mat.gap();
    let integrand = |theta: f64| {
        let e = (1.0 - 0.5 * w) - 0.5 * w * theta.cos();
        let num = e * (e + w) + 1.0;
        let den = ((1.0 + e) * (e + w + 1.0)).sqrt();
        num / den * (1.0 - 2.0 * n.n(gap * (e + w)))
    };
    let v = integrate_singular(integrand, 0.0, PI, spec)?;
    Ok(v / w)
}

pub fn conductivity(
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    spec: &QuadratureSpec,
) -> Result<ComplexConductivity> {
    let law = dist.law(mat);
    Ok(ComplexConductivity {
        sigma1: sigma1_exact_with(&law, mat, omega, spec)?,
        sigma2: sigma2_exact_with(&law, mat, omega, spec)?,
        omega,
    })
}

/// x(2Δ/k_BT)^{3/2}, the natural σ1/σN scale.
pub fn sigma0_ratio(x_qp: f64, mat: &Material) -> f64 {
    x_qp * (2.0 / mat.reduced_temperature()).powf(1.5)
}

const APPROX_WINDOW: f64 = 0.1 * (1.0 + 1e-9);

/// Closed form with K0; `valid` when ħω and k_BT are at most 0.1Δ.
pub fn sigma1_approx(x_qp: f64, mat: &Material, omega: f64) -> Result<Approximation> {
    positive("omega", omega)?;
    let tau = mat.reduced_temperature();
    let z = HBAR * omega / (2.0 * mat.kt());
    // sinh(z)·K0(z) = ½(1 - e^{-2z})·e^z K0(z)
    let sinh_k0 = -0.5 * (-2.0 * z).exp_m1() * bessel_k0_scaled(z)?;
    let value = sigma0_ratio(x_qp, mat) / PI.sqrt() / (2.0 * z) * sinh_k0;
    let valid = tau <= APPROX_WINDOW && HBAR * omega <= APPROX_WINDOW * mat.gap();
    Ok(Approximation { value, valid })
}

/// Low-frequency logarithmic form.
pub fn sigma1_lowfreq(x_qp: f64, mat: &Material, omega: f64) -> f64 {
    let bracket = (4.0 * mat.kt() / (HBAR * omega)).ln() - EULER_GAMMA;
    sigma0_ratio(x_qp, mat) / (2.0 * PI.sqrt()) * bracket
}

/// High-frequency power law ½x(2Δ/ħω)^{3/2}.
pub fn sigma1_highfreq(x_qp: f64, mat: &Material, omega: f64) -> f64 {
    0.5 * x_qp * (2.0 * mat.gap() / (HBAR * omega)).powf(1.5)
}

/// πΔ/ħω.
pub fn sigma2_approx(mat: &Material, omega: f64) -> f64 {
    PI * mat.gap() / (HBAR * omega)
}

/// Which σ1 the noise and decoherence layers evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ConductivityModel {
    /// Closed form with K0, as used by the analytic rate formulas.
    #[default]
    Approximate,
    Exact(QuadratureSpec),
}

impl ConductivityModel {
    /// σ1/σN at |ω|.
    pub fn sigma1(&self, dist: &QpDistribution, mat: &Material, omega: f64) -> Result<f64> {
        let w = omega.abs();
        match self {
            Self::Approximate => Ok(sigma1_approx(xqp_total(dist, mat), mat, w)?.value),
            Self::Exact(spec) => sigma1_exact(dist, mat, w, spec),
        }
    }
}
