//! Charge and flux noise from admittances via the fluctuation-dissipation
//! theorem, plus TLS and spin-impurity comparison spectra.
//!
//! Spectra are two-sided: S(ω) with ω < 0 is the absorption side. Flux
//! spectra are stored in Wb²·s; [`to_flux_quantum_per_hz`] converts.

use crate::circuit::{
    flux_qubit_admittance, split_transmon_admittance, Admittance, FluxQubit, SplitTransmon,
};
use crate::constants::{FLUX_QUANTUM, HBAR};
use crate::error::{non_negative, positive, Error, Result};
use crate::numerics::{find_root, Bracket};
use crate::qp::{ConductivityModel, Material, QpDistribution};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TlsParameters {
    pub surface_participation: f64,
    pub bulk_participation: f64,
    pub surface_tan_delta: f64,
    pub bulk_tan_delta: f64,
    /// Replaces pS·tanδS + pB·tanδB when a total is quoted directly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub effective_total: Option<f64>,
}

impl Default for TlsParameters {
    fn default() -> Self {
        Self {
            surface_participation: 23e-4,
            bulk_participation: 0.9,
            surface_tan_delta: 1e-3,
            bulk_tan_delta: 1e-6,
            effective_total: None,
        }
    }
}

impl TlsParameters {
    pub fn new(
        surface_participation: f64,
        bulk_participation: f64,
        surface_tan_delta: f64,
        bulk_tan_delta: f64,
    ) -> Result<Self> {
        for (name, p) in [
            ("surface_participation", surface_participation),
            ("bulk_participation", bulk_participation),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter {
                    name,
                    constraint: "must lie in [0, 1]",
                    value: p,
                });
            }
        }
        non_negative("surface_tan_delta", surface_tan_delta)?;
        non_negative("bulk_tan_delta", bulk_tan_delta)?;
        Ok(Self {
            surface_participation,
            bulk_participation,
            surface_tan_delta,
            bulk_tan_delta,
            effective_total: None,
        })
    }

    pub fn with_effective_total(self, total: f64) -> Result<Self> {
        non_negative("effective_total", total)?;
        Ok(Self {
            effective_total: Some(total),
            ..self
        })
    }

    /// Loss tangent before the tanh saturation factor.
    pub fn amplitude(&self) -> f64 {
        self.effective_total.unwrap_or(
            self.surface_participation * self.surface_tan_delta
                + self.bulk_participation * self.bulk_tan_delta,
        )
    }

    /// ⟨tan δ⟩ at ω, odd in ω.
    pub fn mean_loss_tangent(&self, kt: f64, omega: f64) -> f64 {
        self.amplitude() * thermal_tanh(kt, omega)
    }

    pub fn quality_factor(&self, kt: f64, omega: f64) -> f64 {
        1.0 / self.mean_loss_tangent(kt, omega)
    }
}

fn reduced(kt: f64, omega: f64) -> f64 {
    HBAR * omega / kt
}

/// tanh(ħω/2k_BT); sign(ω) at zero temperature.
pub fn thermal_tanh(kt: f64, omega: f64) -> f64 {
    if kt == 0.0 {
        return omega.signum();
    }
    (0.5 * reduced(kt, omega)).tanh()
}

/// coth(ħω/2k_BT).
pub fn thermal_coth(kt: f64, omega: f64) -> f64 {
    1.0 / thermal_tanh(kt, omega)
}

/// n_B(ω) + 1 = 1/(1 - e^{-ħω/k_BT}); equals -n_B(|ω|) for ω < 0.
pub fn bose_plus_one(kt: f64, omega: f64) -> f64 {
    if kt == 0.0 {
        return if omega > 0.0 { 1.0 } else { 0.0 };
    }
    -1.0 / (-reduced(kt, omega)).exp_m1()
}

pub fn bose(kt: f64, omega: f64) -> f64 {
    if kt == 0.0 {
        return if omega > 0.0 { 0.0 } else { -1.0 };
    }
    1.0 / reduced(kt, omega).exp_m1()
}

/// S_Q(ω) = 2ħ·Re{Y(|ω|)}/ω·[n_B(ω) + 1], in C²·s.
pub fn charge_noise_from_admittance(adm: &Admittance, kt: f64, omega: f64) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    if (adm.omega - omega.abs()).abs() > 1e-12 * omega.abs() {
        return Err(Error::InvalidParameter {
            name: "admittance.omega",
            constraint: "must equal |ω| of the requested spectrum point",
            value: adm.omega,
        });
    }
    let im_chi = adm.re / omega;
    Ok(2.0 * HBAR * im_chi * bose_plus_one(kt, omega))
}

/// S_Φ = (Lω)²·S_Q.
pub fn flux_noise_from_charge(s_q: f64, inductance: f64, omega: f64) -> Result<f64> {
    positive("inductance", inductance)?;
    if omega == 0.0 {
        return Ok(0.0);
    }
    Ok((inductance * omega).powi(2) * s_q)
}

fn flux_prefactor(sigma1: f64, mat: &Material, omega: f64) -> f64 {
    sigma1 * 2.0 * HBAR * HBAR * omega / (PI * mat.gap()) * bose_plus_one(mat.kt(), omega)
}

/// Closed form for a flux qubit; the junction term drops out when gap engineered.
pub fn qp_flux_noise_flux_qubit(
    f: &FluxQubit,
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    model: &ConductivityModel,
) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    let s1 = model.sigma1(dist, mat, omega)?;
    let phi = f.phase(mat)?;
    let lk = f.loop_wire.kinetic_inductance(mat);
    let ll = f.loop_inductance(mat);
    let junction = if f.gap_engineered {
        0.0
    } else {
        (0.5 * phi).cos().powi(2) / f.josephson_inductance_h
    };
    let l = f.total_inductance(mat);
    Ok(flux_prefactor(s1, mat, omega) * l * l * (lk / (ll * ll) + junction))
}

/// The same spectrum assembled through the admittance and the charge noise.
pub fn qp_flux_noise_flux_qubit_chain(
    f: &FluxQubit,
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    model: &ConductivityModel,
) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    let s1 = model.sigma1(dist, mat, omega)?;
    let y = flux_qubit_admittance(f, s1, mat, omega.abs(), f.phase(mat)?);
    let s_q = charge_noise_from_admittance(&y, mat.kt(), omega)?;
    flux_noise_from_charge(s_q, f.total_inductance(mat), omega)
}

/// Closed form for a split transmon, with the sin² replacement on the
/// negative-cosine branch.
pub fn qp_flux_noise_split_transmon(
    s: &SplitTransmon,
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    model: &ConductivityModel,
) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    let s1 = model.sigma1(dist, mat, omega)?;
    // Guard check only; the closed form does not need the admittance.
    split_transmon_admittance(s, s1, mat, omega.abs())?;
    let a = s.reduced_flux();
    let junction = if s.gap_engineered {
        0.0
    } else {
        let half = if a.cos() > 0.0 {
            (0.5 * a).cos()
        } else {
            (0.5 * a).sin()
        };
        s.josephson_inductance_h * half * half / (2.0 * a.cos().powi(2))
    };
    Ok(flux_prefactor(s1, mat, omega) * (junction + s.kinetic_inductance(mat)))
}

pub fn qp_flux_noise_split_transmon_chain(
    s: &SplitTransmon,
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    model: &ConductivityModel,
) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    let s1 = model.sigma1(dist, mat, omega)?;
    let y = split_transmon_admittance(s, s1, mat, omega.abs())?;
    let s_q = charge_noise_from_admittance(&y, mat.kt(), omega)?;
    flux_noise_from_charge(s_q, s.total_inductance(mat), omega)
}

/// Flux noise of a bare junction at phase φ with L = L_J.
pub fn qp_flux_noise_junction(
    josephson_inductance_h: f64,
    phase_rad: f64,
    dist: &QpDistribution,
    mat: &Material,
    omega: f64,
    model: &ConductivityModel,
) -> Result<f64> {
    positive("josephson_inductance", josephson_inductance_h)?;
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    let s1 = model.sigma1(dist, mat, omega)?;
    Ok(flux_prefactor(s1, mat, omega) * josephson_inductance_h * (0.5 * phase_rad).cos().powi(2))
}

/// S_Q = 2ħC⟨tan δ⟩[n_B + 1].
pub fn tls_charge_noise(tls: &TlsParameters, capacitance: f64, kt: f64, omega: f64) -> Result<f64> {
    positive("capacitance", capacitance)?;
    // tanh(x/2)·(n_B + 1) = 1/(1 + e^{-x})
    let occupation = if kt == 0.0 {
        if omega > 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        1.0 / (1.0 + (-reduced(kt, omega)).exp())
    };
    Ok(2.0 * HBAR * capacitance * tls.amplitude() * occupation)
}

/// S_Φ = (Lω)²·S_Q for TLS charge noise.
pub fn tls_flux_noise(
    tls: &TlsParameters,
    inductance: f64,
    capacitance: f64,
    kt: f64,
    omega: f64,
) -> Result<f64> {
    non_negative("inductance", inductance)?;
    Ok((inductance * omega).powi(2) * tls_charge_noise(tls, capacitance, kt, omega)?)
}

/// Spin-impurity 1/f background, 16π×10⁻¹¹·Φ0²/|ω|, in Wb²·s.
pub fn spin_flux_noise(omega: f64) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    Ok(16.0 * PI * 1e-11 * FLUX_QUANTUM * FLUX_QUANTUM / omega.abs())
}

pub fn to_flux_quantum_per_hz(s_wb2_s: f64) -> f64 {
    s_wb2_s / (FLUX_QUANTUM * FLUX_QUANTUM)
}

pub fn from_flux_quantum_per_hz(s: f64) -> f64 {
    s * FLUX_QUANTUM * FLUX_QUANTUM
}

/// Frequency where two spectra cross, by bisection in ln ω.
pub fn crossing_frequency<F, G>(a: F, b: G, omega_lo: f64, omega_hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
    G: Fn(f64) -> Result<f64>,
{
    positive("omega_lo", omega_lo)?;
    let bracket = Bracket::new(omega_lo.ln(), omega_hi.ln())?;
    let diff = |u: f64| -> f64 {
        let w = u.exp();
        match (a(w), b(w)) {
            (Ok(x), Ok(y)) if x > 0.0 && y > 0.0 => x.ln() - y.ln(),
            _ => f64::NAN,
        }
    };
    Ok(find_root(diff, bracket, 1e-12)?.exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumKind {
    Charge,
    Flux,
}

impl SpectrumKind {
    pub fn si_units(&self) -> &'static str {
        match self {
            Self::Charge => "C^2*s",
            Self::Flux => "Wb^2*s",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpectrum {
    pub kind: SpectrumKind,
    /// (ω in rad/s, S in SI units).
    pub samples: Vec<(f64, f64)>,
    pub temperature_k: f64,
    pub provenance: String,
}

impl NoiseSpectrum {
    /// Evaluates `f` on `omegas` and checks positivity for ω > 0.
    pub fn sample<F>(
        kind: SpectrumKind,
        provenance: impl Into<String>,
        temperature_k: f64,
        omegas: &[f64],
        f: F,
    ) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let samples = omegas
            .iter()
            .map(|&w| {
                let s = f(w)?;
                if w > 0.0 && !(s >= 0.0) {
                    return Err(Error::InvalidParameter {
                        name: "spectrum",
                        constraint: "must be non-negative for ω > 0",
                        value: s,
                    });
                }
                Ok((w, s))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            kind,
            samples,
            temperature_k,
            provenance: provenance.into(),
        })
    }

    /// Samples in Φ0²/Hz for flux spectra, SI otherwise.
    pub fn reported(&self) -> Vec<(f64, f64)> {
        match self.kind {
            SpectrumKind::Flux => self
                .samples
                .iter()
                .map(|&(w, s)| (w, to_flux_quantum_per_hz(s)))
                .collect(),
            SpectrumKind::Charge => self.samples.clone(),
        }
    }

    pub fn reported_units(&self) -> &'static str {
        match self.kind {
            SpectrumKind::Flux => "Phi0^2/Hz",
            SpectrumKind::Charge => "C^2*s",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::WireSegment;
    use crate::constants::BOLTZMANN;
    use crate::numerics::QuadratureSpec;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn al() -> Material {
        Material::aluminum()
    }

    fn dist() -> QpDistribution {
        QpDistribution::quasithermal(1e-5).unwrap()
    }

    fn fig5(ge: bool) -> FluxQubit {
        let wire = WireSegment::new(1.2e-3, 1e-12, 0.6e-9).unwrap();
        FluxQubit::new(wire, 0.24e-9, ge, None, 0.1e-12, TlsParameters::default()).unwrap()
    }

    fn fig6(flux: f64, ge: bool) -> SplitTransmon {
        let half = WireSegment::new(1e-6, 0.01e-12, 0.0).unwrap();
        SplitTransmon::with_ej_over_ec(half, 2e-11, 10e-9, 70.0, ge, flux).unwrap()
    }

    #[test]
    fn bose_identities() {
        let kt = 1e-23;
        for &w in &[1e8, 1e9, 1e11, 1e12] {
            assert!(rel(bose_plus_one(kt, w), bose(kt, w) + 1.0) < 1e-12);
            assert!(rel(bose_plus_one(kt, -w), -bose(kt, w)) < 1e-12);
            assert!(rel(2.0 * bose(kt, w) + 1.0, thermal_coth(kt, w)) < 1e-12);
        }
        assert_eq!(bose_plus_one(0.0, 1.0), 1.0);
        assert_eq!(bose_plus_one(0.0, -1.0), 0.0);
    }

    #[test]
    fn charge_noise_detailed_balance_and_limits() {
        let kt = 30e-3 * BOLTZMANN;
        for &w in &[1e7, 1e9, 5e10] {
            let y = Admittance {
                re: 1e-3,
                im: 1.0,
                omega: w,
            };
            let plus = charge_noise_from_admittance(&y, kt, w).unwrap();
            let minus = charge_noise_from_admittance(&y, kt, -w).unwrap();
            assert!(plus > 0.0 && minus > 0.0);
            assert!(rel(plus / minus, (HBAR * w / kt).exp()) < 1e-10);
            assert!(rel(plus + minus, 2.0 * HBAR * y.re / w * thermal_coth(kt, w)) < 1e-12);
            let cold = charge_noise_from_admittance(&y, 0.0, w).unwrap();
            assert!(rel(cold, 2.0 * HBAR * y.re / w) < 1e-15);
        }
        let lossless = Admittance {
            re: 0.0,
            im: 1.0,
            omega: 1e9,
        };
        assert_eq!(
            charge_noise_from_admittance(&lossless, kt, 1e9).unwrap(),
            0.0
        );
        assert_eq!(
            charge_noise_from_admittance(&lossless, kt, 0.0),
            Err(Error::ZeroFrequency)
        );
    }

    #[test]
    fn flux_from_charge_scaling() {
        let a = flux_noise_from_charge(2.0, 1e-9, 1e9).unwrap();
        let b = flux_noise_from_charge(2.0, 2e-9, 1e9).unwrap();
        assert!(rel(b, 4.0 * a) < 1e-15);
        assert_eq!(flux_noise_from_charge(2.0, 1e-9, 0.0).unwrap(), 0.0);
        assert!(flux_noise_from_charge(2.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn flux_qubit_chain_matches_closed_form() {
        let mat = al();
        let m = ConductivityModel::Approximate;
        for ge in [false, true] {
            let f = fig5(ge);
            for &w in &[3.3e6, 7.1e7, 2.2e9, 4.4e10, -5.5e8] {
                let closed = qp_flux_noise_flux_qubit(&f, &dist(), &mat, w, &m).unwrap();
                let chain = qp_flux_noise_flux_qubit_chain(&f, &dist(), &mat, w, &m).unwrap();
                assert!(rel(chain, closed) < 1e-10, "{w} {chain} {closed}");
            }
        }
    }

    #[test]
    fn split_transmon_chain_and_ratio() {
        let mat = al();
        let m = ConductivityModel::Approximate;
        for &flux in &[0.1, 0.25, 0.4, 0.6, 0.85] {
            let s = fig6(flux, false);
            let g = s.with_gap_engineering(true);
            let w = 2.0 * PI * 3e7;
            let n = qp_flux_noise_split_transmon(&s, &dist(), &mat, w, &m).unwrap();
            let e = qp_flux_noise_split_transmon(&g, &dist(), &mat, w, &m).unwrap();
            let chain = qp_flux_noise_split_transmon_chain(&s, &dist(), &mat, w, &m).unwrap();
            assert!(rel(chain, n) < 1e-10);
            let a = PI * flux;
            let half = if a.cos() > 0.0 {
                (0.5 * a).cos()
            } else {
                (0.5 * a).sin()
            };
            let lk = s.kinetic_inductance(&mat);
            let lj_term = 10e-9 * half * half / (2.0 * a.cos().powi(2));
            assert!(rel(e / n, lk / (lj_term + lk)) < 1e-12);
            assert!(e <= n);
        }
    }

    #[test]
    fn split_transmon_junction_term_at_zero_flux() {
        let s = fig6(0.0, false);
        assert!(rel(s.junction_loss_inductance(), 5e-9) < 1e-12);
    }

    #[test]
    fn split_transmon_diverges_at_zero_frequency() {
        let mat = al();
        let m = ConductivityModel::Approximate;
        let s = fig6(0.25, false);
        let at = |w: f64| qp_flux_noise_split_transmon(&s, &dist(), &mat, w, &m).unwrap();
        let (a, b, c) = (at(1e3), at(1e1), at(1e-1));
        assert!(b > a && c > b);
        // Logarithmic growth: equal increments per decade pair.
        assert!(rel(c - b, b - a) < 0.01);
    }

    #[test]
    fn flux_qubit_frequency_laws() {
        let mat = al();
        let m = ConductivityModel::Approximate;
        let f = fig5(false);
        let kt = mat.kt();
        // ħω ≫ k_BT: S ∝ 1/√ω.
        let w1 = 40.0 * kt / HBAR;
        let w2 = 4.0 * w1;
        let s1 = qp_flux_noise_flux_qubit(&f, &dist(), &mat, w1, &m).unwrap();
        let s2 = qp_flux_noise_flux_qubit(&f, &dist(), &mat, w2, &m).unwrap();
        let slope = (s2 / s1).ln() / 4f64.ln();
        assert!((slope + 0.5).abs() < 0.05, "{slope}");
        // ħω ≪ k_BT: S linear in ln ω with slope -(x/2√π)(2Δ/k_BT)^{3/2}·(k_BT/ħ)·(2ħ²/πΔ)·L²·[…].
        let wa = 1e-4 * kt / HBAR;
        let wb = 1e-3 * kt / HBAR;
        let sa = qp_flux_noise_flux_qubit(&f, &dist(), &mat, wa, &m).unwrap();
        let sb = qp_flux_noise_flux_qubit(&f, &dist(), &mat, wb, &m).unwrap();
        let fitted = (sb - sa) / (wb / wa).ln();
        let l = f.total_inductance(&mat);
        let lk = f.loop_wire.kinetic_inductance(&mat);
        let ll = f.loop_inductance(&mat);
        let bracket = lk / (ll * ll)
            + (0.5 * f.phase(&mat).unwrap()).cos().powi(2) / f.josephson_inductance_h;
        let tau = mat.reduced_temperature();
        let coefficient =
            -1e-5 * (2.0 / tau).powf(1.5) / (2.0 * PI.sqrt()) * (kt / HBAR) * 2.0 * HBAR * HBAR
                / (PI * mat.gap())
                * l
                * l
                * bracket;
        assert!(rel(fitted, coefficient) < 0.1, "{fitted} {coefficient}");
    }

    #[test]
    fn exact_and_approximate_models_agree_at_low_frequency() {
        let mat = al();
        let f = fig5(false);
        let w = 2.0 * PI * 1e8;
        let a = qp_flux_noise_flux_qubit(&f, &dist(), &mat, w, &ConductivityModel::Approximate)
            .unwrap();
        let e = qp_flux_noise_flux_qubit(
            &f,
            &dist(),
            &mat,
            w,
            &ConductivityModel::Exact(QuadratureSpec::default()),
        )
        .unwrap();
        assert!(rel(a, e) < 0.02, "{a} {e}");
    }

    #[test]
    fn tls_amplitude_and_limits() {
        let tls = TlsParameters::default();
        assert!(rel(tls.amplitude(), 3.2e-6) < 1e-12);
        let kt = 30e-3 * BOLTZMANN;
        let w = 1e4 * kt / HBAR;
        let s = tls_charge_noise(&tls, 1e-13, kt, w).unwrap();
        assert!(rel(s, 2.0 * HBAR * 1e-13 * 3.2e-6) < 1e-12);
        let w = 2.0 * PI * 5e9;
        let direct = 2.0 * HBAR * 1e-13 * tls.mean_loss_tangent(kt, w) * bose_plus_one(kt, w);
        assert!(rel(tls_charge_noise(&tls, 1e-13, kt, w).unwrap(), direct) < 1e-12);
        let fixed = tls.with_effective_total(1.0 / 3e5).unwrap();
        assert!(rel(fixed.quality_factor(kt, w), 3e5 / thermal_tanh(kt, w)) < 1e-12);
        assert_eq!(tls_flux_noise(&tls, 0.0, 1e-13, kt, w).unwrap(), 0.0);
        assert!(TlsParameters::new(1.5, 0.1, 1e-3, 1e-6).is_err());
    }

    #[test]
    fn tls_detailed_balance_and_slope() {
        let tls = TlsParameters::default();
        let kt = 30e-3 * BOLTZMANN;
        for &w in &[1e8, 1e10, 1e11] {
            let r = tls_charge_noise(&tls, 1e-13, kt, w).unwrap()
                / tls_charge_noise(&tls, 1e-13, kt, -w).unwrap();
            assert!(rel(r, (HBAR * w / kt).exp()) < 1e-10);
        }
        let w = 1e-3 * kt / HBAR;
        let a = tls_flux_noise(&tls, 1e-9, 1e-13, kt, w).unwrap();
        let b = tls_flux_noise(&tls, 1e-9, 1e-13, kt, 2.0 * w).unwrap();
        assert!(((b / a).log2() - 2.0).abs() < 0.01);
    }

    #[test]
    fn spin_noise_values() {
        let s = spin_flux_noise(2.0 * PI).unwrap();
        assert!(rel(to_flux_quantum_per_hz(s), 8e-11) < 1e-12);
        assert!(
            rel(
                spin_flux_noise(10.0).unwrap(),
                spin_flux_noise(1.0).unwrap() / 10.0
            ) < 1e-15
        );
        assert_eq!(spin_flux_noise(0.0), Err(Error::ZeroFrequency));
        assert!(rel(from_flux_quantum_per_hz(to_flux_quantum_per_hz(s)), s) < 1e-15);
    }

    #[test]
    fn crossing_of_power_laws() {
        // 1/ω meets a constant at ω = 1e6.
        let w = crossing_frequency(|w| Ok(1e6 / w), |_| Ok(1.0), 1.0, 1e12).unwrap();
        assert!(rel(w, 1e6) < 1e-9);
    }

    #[test]
    fn spectrum_sampling_rejects_negative_values() {
        let ok = NoiseSpectrum::sample(
            SpectrumKind::Flux,
            "spin",
            0.03,
            &[1.0, 10.0],
            spin_flux_noise,
        )
        .unwrap();
        assert_eq!(ok.samples.len(), 2);
        assert!(rel(ok.reported()[0].1, 16.0 * PI * 1e-11) < 1e-12);
        assert!(
            NoiseSpectrum::sample(SpectrumKind::Charge, "bad", 0.03, &[1.0], |_| Ok(-1.0)).is_err()
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn spectra_positive(lw in 0.0f64..11.0, flux in 0.05f64..0.45, ge: bool) {
                let mat = al();
                let m = ConductivityModel::Approximate;
                let w = 10f64.powf(lw);
                prop_assert!(qp_flux_noise_flux_qubit(&fig5(ge), &dist(), &mat, w, &m).unwrap() >= 0.0);
                prop_assert!(qp_flux_noise_flux_qubit(&fig5(ge), &dist(), &mat, -w, &m).unwrap() >= 0.0);
                prop_assert!(qp_flux_noise_split_transmon(&fig6(flux, ge), &dist(), &mat, w, &m).unwrap() >= 0.0);
                prop_assert!(tls_flux_noise(&TlsParameters::default(), 1e-9, 1e-13, mat.kt(), w).unwrap() >= 0.0);
            }

            #[test]
            fn ge_never_exceeds_nge(lw in 0.0f64..11.0, flux in 0.05f64..0.45) {
                let mat = al();
                let m = ConductivityModel::Approximate;
                let w = 10f64.powf(lw);
                let n = qp_flux_noise_flux_qubit(&fig5(false), &dist(), &mat, w, &m).unwrap();
                let g = qp_flux_noise_flux_qubit(&fig5(true), &dist(), &mat, w, &m).unwrap();
                prop_assert!(g <= n);
                let n = qp_flux_noise_split_transmon(&fig6(flux, false), &dist(), &mat, w, &m).unwrap();
                let g = qp_flux_noise_split_transmon(&fig6(flux, true), &dist(), &mat, w, &m).unwrap();
                prop_assert!(g <= n);
            }
        }
    }
}
