//! Two-fluid wire impedance, junction admittance and the composed device
//! admittances. Time dependence is e^{-iωt}, so an inductor has Z = -iωL and
//! a lossless device has positive imaginary admittance.

use crate::constants::{
    ELEMENTARY_CHARGE, FLUX_QUANTUM, HBAR, REDUCED_FLUX_QUANTUM, SPEED_OF_LIGHT,
};
use crate::error::{non_negative, positive, Error, Result};
use crate::noise::TlsParameters;
use crate::qp::{ComplexConductivity, Material};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Factor by which the junction impedance approximation must beat its
/// leading correction.
pub const APPROXIMATION_GUARD: f64 = 100.0;

/// Silicon.
pub const DEFAULT_REFRACTIVE_INDEX: f64 = 3.420_526_275_297_414; // √11.7

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WireSegment {
    pub length_m: f64,
    pub area_m2: f64,
    pub geometric_inductance_h: f64,
}

impl WireSegment {
    pub fn new(length_m: f64, area_m2: f64, geometric_inductance_h: f64) -> Result<Self> {
        positive("length", length_m)?;
        positive("area", area_m2)?;
        non_negative("geometric_inductance", geometric_inductance_h)?;
        Ok(Self {
            length_m,
            area_m2,
            geometric_inductance_h,
        })
    }

    pub fn kinetic_inductance(&self, mat: &Material) -> f64 {
        mat.kinetic_inductance(self.length_m, self.area_m2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Junction {
    pub josephson_inductance_h: f64,
    pub phase_rad: f64,
    pub gap_engineered: bool,
}

impl Junction {
    /// The phase is reduced to [0, 2π).
    pub fn new(josephson_inductance_h: f64, phase_rad: f64, gap_engineered: bool) -> Result<Self> {
        positive("josephson_inductance", josephson_inductance_h)?;
        if !phase_rad.is_finite() {
            return Err(Error::InvalidParameter {
                name: "phase",
                constraint: "must be finite",
                value: phase_rad,
            });
        }
        Ok(Self {
            josephson_inductance_h,
            phase_rad: phase_rad.rem_euclid(TAU),
            gap_engineered,
        })
    }

    pub fn from_josephson_energy(ej: f64, phase_rad: f64, gap_engineered: bool) -> Result<Self> {
        positive("josephson_energy", ej)?;
        Self::new(REDUCED_FLUX_QUANTUM.powi(2) / ej, phase_rad, gap_engineered)
    }

    pub fn josephson_energy(&self) -> f64 {
        REDUCED_FLUX_QUANTUM.powi(2) / self.josephson_inductance_h
    }
}

/// Josephson inductance (Φ0/2π)²/E_J.
pub fn josephson_inductance(ej: f64) -> f64 {
    REDUCED_FLUX_QUANTUM.powi(2) / ej
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Admittance {
    pub re: f64,
    pub im: f64,
    pub omega: f64,
}

impl Admittance {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// (σ1/σN)·ħ/(πΔ), the common loss prefactor, in seconds.
pub fn loss_prefactor(sigma1: f64, mat: &Material) -> f64 {
    sigma1 * HBAR / (PI * mat.gap())
}

/// Z = ℓ/(σA) - iωLg with σ = σN(σ1 + iσ2).
pub fn wire_impedance(
    w: &WireSegment,
    mat: &Material,
    sigma: &ComplexConductivity,
) -> Result<Complex64> {
    if sigma.sigma2 == 0.0 {
        return Err(Error::DegenerateSuperconductor);
    }
    let s = Complex64::new(sigma.sigma1, sigma.sigma2) * mat.sigma_n();
    Ok(w.length_m / (s * w.area_m2) - Complex64::new(0.0, sigma.omega * w.geometric_inductance_h))
}

/// Series-circuit resistance σ1ℓ/(σ2²A).
pub fn series_resistance(
    w: &WireSegment,
    mat: &Material,
    sigma: &ComplexConductivity,
) -> Result<f64> {
    if sigma.sigma2 == 0.0 {
        return Err(Error::DegenerateSuperconductor);
    }
    let sn = mat.sigma_n();
    Ok(sigma.sigma1 * sn * w.length_m / ((sigma.sigma2 * sn).powi(2) * w.area_m2))
}

/// Series-form wire admittance with Lk = μ0λ²ℓ/A.
pub fn wire_admittance(w: &WireSegment, sigma1: f64, mat: &Material, omega: f64) -> Admittance {
    let lk = w.kinetic_inductance(mat);
    let l = lk + w.geometric_inductance_h;
    Admittance {
        re: loss_prefactor(sigma1, mat) * lk / (l * l),
        im: 1.0 / (omega * l),
        omega,
    }
}

pub fn junction_admittance(j: &Junction, sigma1: f64, mat: &Material, omega: f64) -> Admittance {
    let c_half = (0.5 * j.phase_rad).cos();
    let re = if j.gap_engineered {
        0.0
    } else {
        loss_prefactor(sigma1, mat) * c_half * c_half / j.josephson_inductance_h
    };
    Admittance {
        re,
        im: j.phase_rad.cos().abs() / (omega * j.josephson_inductance_h),
        omega,
    }
}

fn check_guard(sigma1: f64, mat: &Material, omega: f64, phi: f64) -> Result<()> {
    let s = loss_prefactor(sigma1, mat) * omega;
    let c_half = (0.5 * phi).cos();
    if phi.cos().abs() > APPROXIMATION_GUARD * s * c_half * c_half {
        Ok(())
    } else {
        Err(Error::ApproximationInvalid { phi })
    }
}

/// Series-form junction impedance at phase `phi`, valid away from φ = π/2, 3π/2.
pub fn junction_impedance_approx(
    j: &Junction,
    sigma1: f64,
    mat: &Material,
    omega: f64,
    phi: f64,
) -> Result<Complex64> {
    check_guard(sigma1, mat, omega, phi)?;
    let c = phi.cos();
    let c_half = (0.5 * phi).cos();
    let lj = j.josephson_inductance_h;
    let re = if j.gap_engineered {
        0.0
    } else {
        loss_prefactor(sigma1, mat) * omega * omega * lj * c_half * c_half / (c * c)
    };
    Ok(Complex64::new(re, -omega * lj / c.abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CpwResonator {
    pub area_m2: f64,
    pub impedance_ohm: f64,
    pub mode_frequency_rad_s: f64,
    pub refractive_index: f64,
    pub tls: TlsParameters,
}

/// Lumped parallel-RLC equivalent of the lowest CPW mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RlcMap {
    pub resistance_ohm: f64,
    pub inductance_h: f64,
    pub capacitance_f: f64,
    pub resistance_per_length: f64,
    pub inductance_per_length: f64,
    pub capacitance_per_length: f64,
    pub length_m: f64,
    pub kinetic_inductance_h: f64,
    pub geometric_inductance_h: f64,
}

impl CpwResonator {
    pub fn new(
        area_m2: f64,
        impedance_ohm: f64,
        mode_frequency_rad_s: f64,
        refractive_index: f64,
        tls: TlsParameters,
    ) -> Result<Self> {
        positive("area", area_m2)?;
        positive("impedance", impedance_ohm)?;
        positive("mode_frequency", mode_frequency_rad_s)?;
        positive("refractive_index", refractive_index)?;
        Ok(Self {
            area_m2,
            impedance_ohm,
            mode_frequency_rad_s,
            refractive_index,
            tls,
        })
    }

    /// Half-wavelength length cπ/(nΩ).
    pub fn length(&self) -> f64 {
        SPEED_OF_LIGHT * PI / (self.refractive_index * self.mode_frequency_rad_s)
    }

    /// Total line inductance 𝓛ℓ = πZ0/Ω.
    pub fn total_inductance(&self) -> f64 {
        PI * self.impedance_ohm / self.mode_frequency_rad_s
    }

    /// Total line capacitance 𝓒ℓ = π/(Z0Ω).
    pub fn total_capacitance(&self) -> f64 {
        PI / (self.impedance_ohm * self.mode_frequency_rad_s)
    }

    pub fn kinetic_inductance(&self, mat: &Material) -> f64 {
        mat.kinetic_inductance(self.length(), self.area_m2)
    }

    pub fn geometric_inductance(&self, mat: &Material) -> f64 {
        self.total_inductance() - self.kinetic_inductance(mat)
    }
}

pub fn cpw_rlc_map(c: &CpwResonator, sigma1: f64, mat: &Material) -> RlcMap {
    let len = c.length();
    let lk = c.kinetic_inductance(mat);
    let lpl = c.total_inductance() / len;
    let cpl = c.total_capacitance() / len;
    let om = c.mode_frequency_rad_s;
    let rpl = loss_prefactor(sigma1, mat) * om * om * lk / len;
    RlcMap {
        resistance_ohm: 2.0 * lpl / (len * rpl * cpl),
        inductance_h: 2.0 * len * lpl / (PI * PI),
        capacitance_f: 0.5 * len * cpl,
        resistance_per_length: rpl,
        inductance_per_length: lpl,
        capacitance_per_length: cpl,
        length_m: len,
        kinetic_inductance_h: lk,
        geometric_inductance_h: c.total_inductance() - lk,
    }
}

/// Lead plus pad; the pad only contributes geometric inductance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Electrode {
    pub lead: WireSegment,
    pub pad_geometric_inductance_h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transmon {
    pub electrodes: [Electrode; 2],
    pub junction: Junction,
    pub capacitance_f: f64,
    pub tls: TlsParameters,
}

/// Capacitance e²√(2E_J/E_C)/(ħΩ) of a transmon at frequency Ω.
pub fn transmon_capacitance(ej_over_ec: f64, omega: f64) -> f64 {
    ELEMENTARY_CHARGE.powi(2) * (2.0 * ej_over_ec).sqrt() / (HBAR * omega)
}

/// Josephson inductance (Φ0/2π)²√(8E_C/E_J)/(ħΩ) of a transmon at frequency Ω.
pub fn transmon_josephson_inductance(ej_over_ec: f64, omega: f64) -> f64 {
    REDUCED_FLUX_QUANTUM.powi(2) * (8.0 / ej_over_ec).sqrt() / (HBAR * omega)
}

impl Transmon {
    pub fn new(
        electrodes: [Electrode; 2],
        junction: Junction,
        capacitance_f: f64,
        tls: TlsParameters,
    ) -> Result<Self> {
        positive("capacitance", capacitance_f)?;
        for e in &electrodes {
            non_negative("pad_geometric_inductance", e.pad_geometric_inductance_h)?;
        }
        let t = Self {
            electrodes,
            junction,
            capacitance_f,
            tls,
        };
        if t.ej_over_ec() <= 1.0 {
            return Err(Error::InvalidParameter {
                name: "ej_over_ec",
                constraint: "transmon regime needs E_J/E_C > 1",
                value: t.ej_over_ec(),
            });
        }
        Ok(t)
    }

    /// Chooses L_J and C so that ħΩ = √(8E_JE_C) at fixed E_J/E_C.
    pub fn at_frequency(
        electrodes: [Electrode; 2],
        ej_over_ec: f64,
        omega: f64,
        gap_engineered: bool,
        tls: TlsParameters,
    ) -> Result<Self> {
        positive("omega", omega)?;
        positive("ej_over_ec", ej_over_ec)?;
        let junction = Junction::new(
            transmon_josephson_inductance(ej_over_ec, omega),
            0.0,
            gap_engineered,
        )?;
        Self::new(
            electrodes,
            junction,
            transmon_capacitance(ej_over_ec, omega),
            tls,
        )
    }

    pub fn charging_energy(&self) -> f64 {
        ELEMENTARY_CHARGE.powi(2) / (2.0 * self.capacitance_f)
    }

    pub fn ej_over_ec(&self) -> f64 {
        self.junction.josephson_energy() / self.charging_energy()
    }

    /// Summed over both leads.
    pub fn kinetic_inductance(&self, mat: &Material) -> f64 {
        self.electrodes
            .iter()
            .map(|e| e.lead.kinetic_inductance(mat))
            .sum()
    }

    /// Summed over both pads and leads.
    pub fn geometric_inductance(&self) -> f64 {
        self.electrodes
            .iter()
            .map(|e| e.pad_geometric_inductance_h + e.lead.geometric_inductance_h)
            .sum()
    }

    pub fn total_inductance(&self, mat: &Material) -> f64 {
        self.junction.josephson_inductance_h
            + self.kinetic_inductance(mat)
            + self.geometric_inductance()
    }

    /// 1/√(L_J C).
    pub fn frequency(&self) -> f64 {
        1.0 / (self.junction.josephson_inductance_h * self.capacitance_f).sqrt()
    }
}

pub fn transmon_admittance(t: &Transmon, sigma1: f64, mat: &Material, omega: f64) -> Admittance {
    let lk = t.kinetic_inductance(mat);
    let l = t.total_inductance(mat);
    let lossy = if t.junction.gap_engineered {
        lk
    } else {
        t.junction.josephson_inductance_h + lk
    };
    Admittance {
        re: loss_prefactor(sigma1, mat) * lossy / (l * l),
        im: 1.0 / (omega * l),
        omega,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FluxQubit {
    pub loop_wire: WireSegment,
    pub josephson_inductance_h: f64,
    pub gap_engineered: bool,
    /// Overrides the double-well minimum when set.
    pub phase_rad: Option<f64>,
    pub capacitance_f: f64,
    pub tls: TlsParameters,
}

impl FluxQubit {
    pub fn new(
        loop_wire: WireSegment,
        josephson_inductance_h: f64,
        gap_engineered: bool,
        phase_rad: Option<f64>,
        capacitance_f: f64,
        tls: TlsParameters,
    ) -> Result<Self> {
        positive("josephson_inductance", josephson_inductance_h)?;
        positive("capacitance", capacitance_f)?;
        Ok(Self {
            loop_wire,
            josephson_inductance_h,
            gap_engineered,
            phase_rad,
            capacitance_f,
            tls,
        })
    }

    pub fn loop_inductance(&self, mat: &Material) -> f64 {
        self.loop_wire.kinetic_inductance(mat) + self.loop_wire.geometric_inductance_h
    }

    /// β = E_J/E_L = (Lk + Lg)/L_J.
    pub fn beta(&self, mat: &Material) -> f64 {
        self.loop_inductance(mat) / self.josephson_inductance_h
    }

    /// Phase used for the junction: the override, else π + √(6(β-1)).
    pub fn phase(&self, mat: &Material) -> Result<f64> {
        if let Some(p) = self.phase_rad {
            return Ok(p.rem_euclid(TAU));
        }
        let beta = self.beta(mat);
        if beta <= 1.0 {
            return Err(Error::InvalidParameter {
                name: "beta",
                constraint: "flux qubit regime needs β > 1",
                value: beta,
            });
        }
        Ok(double_well_minimum(beta))
    }

    pub fn junction(&self, mat: &Material) -> Result<Junction> {
        Junction::new(
            self.josephson_inductance_h,
            self.phase(mat)?,
            self.gap_engineered,
        )
    }

    /// [1/L_J + 1/(Lk+Lg)]⁻¹.
    pub fn total_inductance(&self, mat: &Material) -> f64 {
        1.0 / (1.0 / self.josephson_inductance_h + 1.0 / self.loop_inductance(mat))
    }

    pub fn frequency(&self, mat: &Material) -> f64 {
        1.0 / (self.total_inductance(mat) * self.capacitance_f).sqrt()
    }
}

/// π + √(6(β-1)) reduced to [0, 2π); the "+" well by convention.
pub fn double_well_minimum(beta: f64) -> f64 {
    (PI + (6.0 * (beta - 1.0)).sqrt()).rem_euclid(TAU)
}

/// Wire loop in parallel with the junction at phase `phi`.
pub fn flux_qubit_admittance(
    f: &FluxQubit,
    sigma1: f64,
    mat: &Material,
    omega: f64,
    phi: f64,
) -> Admittance {
    let lk = f.loop_wire.kinetic_inductance(mat);
    let ll = f.loop_inductance(mat);
    let lj = f.josephson_inductance_h;
    let c_half = (0.5 * phi).cos();
    let junction = if f.gap_engineered {
        0.0
    } else {
        c_half * c_half / lj
    };
    Admittance {
        re: loss_prefactor(sigma1, mat) * (lk / (ll * ll) + junction),
        im: phi.cos().abs() / (omega * lj) + 1.0 / (omega * ll),
        omega,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitTransmon {
    /// One of the two identical loop halves.
    pub loop_half: WireSegment,
    /// Per pad; pads carry geometric inductance only.
    pub pad_geometric_inductance_h: f64,
    /// Per junction.
    pub josephson_inductance_h: f64,
    pub gap_engineered: bool,
    /// Φ/Φ0.
    pub flux_bias: f64,
    pub capacitance_f: f64,
}

/// Smallest |cos(πΦ/Φ0)| accepted at construction.
pub const MIN_FLUX_COSINE: f64 = 1e-6;

impl SplitTransmon {
    pub fn new(
        loop_half: WireSegment,
        pad_geometric_inductance_h: f64,
        josephson_inductance_h: f64,
        gap_engineered: bool,
        flux_bias: f64,
        capacitance_f: f64,
    ) -> Result<Self> {
        non_negative("pad_geometric_inductance", pad_geometric_inductance_h)?;
        positive("josephson_inductance", josephson_inductance_h)?;
        positive("capacitance", capacitance_f)?;
        if !flux_bias.is_finite() || (PI * flux_bias).cos().abs() <= MIN_FLUX_COSINE {
            return Err(Error::InvalidParameter {
                name: "flux_bias",
                constraint: "|cos(πΦ/Φ0)| must stay away from zero",
                value: flux_bias,
            });
        }
        Ok(Self {
            loop_half,
            pad_geometric_inductance_h,
            josephson_inductance_h,
            gap_engineered,
            flux_bias,
            capacitance_f,
        })
    }

    /// C from E_J/E_C with E_J the single-junction energy.
    pub fn with_ej_over_ec(
        loop_half: WireSegment,
        pad_geometric_inductance_h: f64,
        josephson_inductance_h: f64,
        ej_over_ec: f64,
        gap_engineered: bool,
        flux_bias: f64,
    ) -> Result<Self> {
        positive("ej_over_ec", ej_over_ec)?;
        positive("josephson_inductance", josephson_inductance_h)?;
        let ec = josephson_inductance_energy(josephson_inductance_h) / ej_over_ec;
        let c = ELEMENTARY_CHARGE.powi(2) / (2.0 * ec);
        Self::new(
            loop_half,
            pad_geometric_inductance_h,
            josephson_inductance_h,
            gap_engineered,
            flux_bias,
            c,
        )
    }

    pub fn with_flux_bias(&self, flux_bias: f64) -> Result<Self> {
        Self::new(
            self.loop_half,
            self.pad_geometric_inductance_h,
            self.josephson_inductance_h,
            self.gap_engineered,
            flux_bias,
            self.capacitance_f,
        )
    }

    pub fn with_gap_engineering(&self, gap_engineered: bool) -> Self {
        Self {
            gap_engineered,
            ..*self
        }
    }

    pub fn reduced_flux(&self) -> f64 {
        PI * self.flux_bias
    }

    /// Junction phase φ: πΦ/Φ0 when cos(πΦ/Φ0) > 0, π + πΦ/Φ0 otherwise.
    pub fn phi(&self) -> f64 {
        let a = self.reduced_flux();
        if a.cos() > 0.0 {
            a
        } else {
            PI + a
        }
    }

    /// (φ1, φ2) for the branch in use; φ1 - φ2 = 2πΦ/Φ0.
    pub fn junction_phases(&self) -> (f64, f64) {
        let a = self.reduced_flux();
        if a.cos() > 0.0 {
            (a, -a)
        } else {
            (PI + a, PI - a)
        }
    }

    /// Lk = 2Lkp + Lkl/2 with Lkp = 0.
    pub fn kinetic_inductance(&self, mat: &Material) -> f64 {
        0.5 * self.loop_half.kinetic_inductance(mat)
    }

    /// Lg = 2Lgp + Lgl/2.
    pub fn geometric_inductance(&self) -> f64 {
        2.0 * self.pad_geometric_inductance_h + 0.5 * self.loop_half.geometric_inductance_h
    }

    /// L_J/|2cos(πΦ/Φ0)|.
    pub fn effective_josephson_inductance(&self) -> f64 {
        self.josephson_inductance_h / (2.0 * self.reduced_flux().cos().abs())
    }

    pub fn total_inductance(&self, mat: &Material) -> f64 {
        self.effective_josephson_inductance()
            + self.kinetic_inductance(mat)
            + self.geometric_inductance()
    }

    /// L_J cos²(φ/2)/(2cos²φ); zero for gap-engineered junctions.
    pub fn junction_loss_inductance(&self) -> f64 {
        if self.gap_engineered {
            return 0.0;
        }
        let phi = self.phi();
        let c_half = (0.5 * phi).cos();
        self.josephson_inductance_h * c_half * c_half / (2.0 * phi.cos().powi(2))
    }

    /// The bracket multiplying the loss prefactor in the flux noise.
    pub fn loss_inductance(&self, mat: &Material) -> f64 {
        self.junction_loss_inductance() + self.kinetic_inductance(mat)
    }

    /// Ω(Φ) = √(2|cos(πΦ/Φ0)|/(L_J C)).
    pub fn frequency(&self) -> f64 {
        (2.0 * self.reduced_flux().cos().abs() / (self.josephson_inductance_h * self.capacitance_f))
            .sqrt()
    }

    /// |∂Ω/∂Φ| = Ω·(π/2Φ0)·|tan(πΦ/Φ0)|.
    pub fn frequency_flux_slope(&self) -> f64 {
        self.frequency() * PI / (2.0 * FLUX_QUANTUM) * self.reduced_flux().tan().abs()
    }
}

fn josephson_inductance_energy(lj: f64) -> f64 {
    REDUCED_FLUX_QUANTUM.powi(2) / lj
}

pub fn split_transmon_admittance(
    s: &SplitTransmon,
    sigma1: f64,
    mat: &Material,
    omega: f64,
) -> Result<Admittance> {
    if !s.gap_engineered {
        check_guard(sigma1, mat, omega, s.phi())?;
    }
    let l = s.total_inductance(mat);
    Ok(Admittance {
        re: loss_prefactor(sigma1, mat) * s.loss_inductance(mat) / (l * l),
        im: 1.0 / (omega * l),
        omega,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DeviceSpec {
    Cpw(CpwResonator),
    Transmon(Transmon),
    FluxQubit(FluxQubit),
    SplitTransmon(SplitTransmon),
}

/// Resonance frequency Ω in rad/s.
pub fn device_frequency(d: &DeviceSpec, mat: &Material) -> f64 {
    match d {
        DeviceSpec::Cpw(c) => c.mode_frequency_rad_s,
        DeviceSpec::Transmon(t) => t.frequency(),
        DeviceSpec::FluxQubit(f) => f.frequency(mat),
        DeviceSpec::SplitTransmon(s) => s.frequency(),
    }
}
