//! Quality factors, T1, free-induction-decay dephasing α(t) and T2*.

use crate::circuit::{cpw_rlc_map, transmon_admittance, CpwResonator, SplitTransmon, Transmon};
use crate::constants::{FLUX_QUANTUM, HBAR};
use crate::error::{non_negative, positive, Error, Result};
use crate::noise::{charge_noise_from_admittance, thermal_coth, tls_charge_noise};
use crate::numerics::{find_root_fallible, gauss_legendre_panels, Bracket, RootError, EULER_GAMMA};
use crate::qp::{
    sigma1_highfreq, xqp_total, Approximation, ConductivityModel, Material, QpDistribution,
};
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    QualityFactor,
    T1,
    T2Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mechanism {
    QpJunction,
    QpWire,
    Qp,
    Tls,
    Spin,
    Total,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoherenceResult {
    pub quantity: Quantity,
    /// Dimensionless for Q, seconds otherwise; infinite when lossless.
    pub value: f64,
    pub device: String,
    pub mechanism: Mechanism,
    pub valid: bool,
}

/// Σ rates, or Σ 1/Q.
pub fn combine_rates(rates: &[f64]) -> f64 {
    rates.iter().sum()
}

/// 1/Q = Σ 1/Q_i.
pub fn combine_quality_factors(qs: &[f64]) -> f64 {
    1.0 / qs.iter().map(|q| 1.0 / q).sum::<f64>()
}

/// 1/T2 = 1/(2T1) + 1/T_φ.
pub fn combined_t2(t1: f64, t_phi: f64) -> f64 {
    1.0 / (0.5 / t1 + 1.0 / t_phi)
}

/// 1/T1 = (Ω/2ħC)[S_Q(Ω) + S_Q(-Ω)].
pub fn relaxation_rate(s_plus: f64, s_minus: f64, capacitance: f64, omega: f64) -> Result<f64> {
    positive("capacitance", capacitance)?;
    positive("omega", omega)?;
    Ok(omega / (2.0 * HBAR * capacitance) * (s_plus + s_minus))
}

/// T1 from the charge noise at ±Ω; `None` when the rate vanishes.
pub fn t1_resonator(
    s_plus: f64,
    s_minus: f64,
    capacitance: f64,
    omega: f64,
) -> Result<Option<f64>> {
    let rate = relaxation_rate(s_plus, s_minus, capacitance, omega)?;
    Ok((rate > 0.0).then(|| 1.0 / rate))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CpwQuality {
    pub qp: f64,
    /// High-frequency power-law form of the QP term.
    pub qp_high_frequency: f64,
    pub tls: f64,
    pub total: f64,
}

pub fn quality_factor_cpw(
    c: &CpwResonator,
    dist: &QpDistribution,
    mat: &Material,
    model: &ConductivityModel,
) -> Result<CpwQuality> {
    let om = c.mode_frequency_rad_s;
    let s1 = model.sigma1(dist, mat, om)?;
    let map = cpw_rlc_map(c, s1, mat);
    if map.geometric_inductance_h < 0.0 {
        return Err(Error::InvalidParameter {
            name: "impedance",
            constraint: "line inductance must exceed its kinetic part",
            value: c.impedance_ohm,
        });
    }
    let ratio = map.kinetic_inductance_h / c.total_inductance();
    let w = HBAR * om / (PI * mat.gap());
    let qp = 1.0 / (s1 * ratio * w);
    let qp_high_frequency = 1.0 / (sigma1_highfreq(xqp_total(dist, mat), mat, om) * ratio * w);
    let tls = c.tls.quality_factor(mat.kt(), om);
    Ok(CpwQuality {
        qp,
        qp_high_frequency,
        tls,
        total: combine_quality_factors(&[qp, tls]),
    })
}

/// Relaxation rates of a transmon, in 1/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransmonRates {
    pub omega: f64,
    pub junction: f64,
    pub wire: f64,
    pub tls: f64,
    /// High-frequency, small-electrode limit of the QP rate.
    pub qp_limit: f64,
}

impl TransmonRates {
    pub fn qp(&self) -> f64 {
        self.junction + self.wire
    }

    pub fn total(&self) -> f64 {
        combine_rates(&[self.junction, self.wire, self.tls])
    }

    pub fn t1_qp(&self) -> f64 {
        1.0 / self.qp()
    }

    pub fn t1_tls(&self) -> f64 {
        1.0 / self.tls
    }

    pub fn t1(&self) -> f64 {
        1.0 / self.total()
    }
}

pub fn t1_transmon(
    t: &Transmon,
    dist: &QpDistribution,
    mat: &Material,
    model: &ConductivityModel,
) -> Result<TransmonRates> {
    let om = t.frequency();
    let s1 = model.sigma1(dist, mat, om)?;
    let c = t.capacitance_f;
    let lk = t.kinetic_inductance(mat);
    let lj = t.junction.josephson_inductance_h;
    let l = t.total_inductance(mat);
    let common = s1 * HBAR / (c * PI * mat.gap()) / (l * l) * thermal_coth(mat.kt(), om);
    let junction = if t.junction.gap_engineered {
        0.0
    } else {
        common * lj
    };
    let wire = common * lk;
    let s_plus = tls_charge_noise(&t.tls, c, mat.kt(), om)?;
    let s_minus = tls_charge_noise(&t.tls, c, mat.kt(), -om)?;
    let tls = relaxation_rate(s_plus, s_minus, c, om)?;
    let nge_limit = xqp_total(dist, mat) * (2.0 * mat.gap() * om / (HBAR * PI * PI)).sqrt();
    let qp_limit = if t.junction.gap_engineered {
        nge_limit * lk / lj
    } else {
        nge_limit
    };
    Ok(TransmonRates {
        omega: om,
        junction,
        wire,
        tls,
        qp_limit,
    })
}

/// QP rate through the admittance and the charge-noise path.
pub fn t1_transmon_from_noise(
    t: &Transmon,
    dist: &QpDistribution,
    mat: &Material,
    model: &ConductivityModel,
) -> Result<Option<f64>> {
    let om = t.frequency();
    let s1 = model.sigma1(dist, mat, om)?;
    let y = transmon_admittance(t, s1, mat, om);
    let s_plus = charge_noise_from_admittance(&y, mat.kt(), om)?;
    let s_minus = charge_noise_from_admittance(&y, mat.kt(), -om)?;
    t1_resonator(s_plus, s_minus, t.capacitance_f, om)
}

/// ½(sin(ωt/2)/(ω/2))², in s².
pub fn fid_filter(omega: f64, t: f64) -> f64 {
    let x = 0.5 * omega * t;
    if x.abs() < 1e-4 {
        0.5 * t * t * (1.0 - x * x / 3.0)
    } else {
        let s = (0.5 * omega * t).sin() / (0.5 * omega);
        0.5 * s * s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FilterEvaluation {
    pub time_s: f64,
    pub alpha: f64,
    pub omega_max: f64,
}

/// Lowest grid frequency, 2π·10⁻³ Hz.
pub const ALPHA_OMEGA_MIN: f64 = 2.0 * PI * 1e-3;
const PANELS_PER_DECADE: f64 = 16.0;
const OSCILLATING_HALF_PERIODS: f64 = 200.0;

fn log_edges(lo: f64, hi: f64) -> Vec<f64> {
    if hi <= lo {
        return vec![lo, lo];
    }
    let n = ((hi / lo).log10() * PANELS_PER_DECADE).ceil().max(1.0) as usize;
    let r = (hi / lo).ln() / n as f64;
    (0..=n)
        .map(|k| {
            if k == n {
                hi
            } else {
                lo * (r * k as f64).exp()
            }
        })
        .collect()
}

/// α(t) = ∫dω (∂Ω/∂Φ)² S_Φ(ω) F(ω, t) for a two-sided flux spectrum in Wb²·s.
///
/// The positive half-line carries S(ω) + S(-ω). Below the first filter zero
/// the grid is logarithmic, then one panel per half period of the filter, then
/// the period-averaged filter 1/ω², and a power-law tail past
/// ω_max = 10·max(k_BT/ħ, 2π/t).
pub fn alpha_numeric<S>(
    spectrum: S,
    d_omega_d_flux: f64,
    t: f64,
    kt: f64,
) -> Result<FilterEvaluation>
where
    S: Fn(f64) -> Result<f64>,
{
    non_negative("t", t)?;
    if t == 0.0 {
        return Ok(FilterEvaluation {
            time_s: 0.0,
            alpha: 0.0,
            omega_max: 0.0,
        });
    }
    let omega_max = 10.0 * (kt / HBAR).max(2.0 * PI / t);
    let w0 = ALPHA_OMEGA_MIN.min(0.1 / t);
    let half = PI / t;
    let w_osc = (OSCILLATING_HALF_PERIODS * half).min(omega_max);

    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let sym = |w: f64| -> f64 {
        match (spectrum(w), spectrum(-w)) {
            (Ok(a), Ok(b)) => a + b,
            (Err(e), _) | (_, Err(e)) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let sym = &sym;

    // Below w0: F ≈ t²/2 and S ≈ p + q ln ω.
    let (s_a, s_b) = (sym(w0), sym(2.0 * w0));
    let q = (s_b - s_a) / 2f64.ln();
    let p = s_a - q * w0.ln();
    let mut total = 0.5 * t * t * w0 * (p + q * (w0.ln() - 1.0));

    let smooth_hi = half.min(omega_max);
    total += gauss_legendre_panels(|w| sym(w) * fid_filter(w, t), &log_edges(w0, smooth_hi));

    if w_osc > smooth_hi {
        let n = ((w_osc - smooth_hi) / half).ceil() as usize;
        let step = (w_osc - smooth_hi) / n as f64;
        let edges: Vec<f64> = (0..=n).map(|k| smooth_hi + step * k as f64).collect();
        total += gauss_legendre_panels(|w| sym(w) * fid_filter(w, t), &edges);
    }
    if omega_max > w_osc {
        total += gauss_legendre_panels(|w| sym(w) / (w * w), &log_edges(w_osc, omega_max));
    }
    // Tail of S/ω² with S ∝ ω^k.
    let (s_hi, s_2hi) = (sym(omega_max), sym(2.0 * omega_max));
    if s_hi > 0.0 && s_2hi > 0.0 {
        let k = (s_2hi / s_hi).log2();
        if k < 1.0 {
            total += s_hi / omega_max / (1.0 - k);
        }
    }
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(FilterEvaluation {
        time_s: t,
        alpha: d_omega_d_flux * d_omega_d_flux * total,
        omega_max,
    })
}

/// Below this many ħ/k_BT the closed-form α is flagged invalid.
pub const ALPHA_VALIDITY_THERMAL_TIMES: f64 = 10.0;

/// Closed-form α(t) for a split transmon at long times; gap-engineered
/// junctions drop the L_J term.
pub fn alpha_analytic_st(
    s: &SplitTransmon,
    dist: &QpDistribution,
    mat: &Material,
    t: f64,
) -> Result<Approximation> {
    positive("t", t)?;
    let kt = mat.kt();
    let a = s.reduced_flux();
    let tan2 = a.tan().powi(2);
    let om = s.frequency();
    let scale = (2.0 * PI * HBAR * HBAR * mat.gap() / kt).sqrt();
    let u = kt * t / HBAR;
    let log_term = (4.0 * u * u * u).ln() + 1.0 - EULER_GAMMA;
    let value = xqp_total(dist, mat)
        * tan2
        * (om / FLUX_QUANTUM).powi(2)
        * scale
        * s.loss_inductance(mat)
        * t
        * log_term;
    Ok(Approximation {
        value,
        valid: u >= ALPHA_VALIDITY_THERMAL_TIMES,
    })
}

/// Default search window for T2*.
pub const T2_BRACKET: (f64, f64) = (1e-9, 1e4);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum T2Star {
    Root {
        seconds: f64,
        valid: bool,
    },
    /// α < 1 up to the end of the window.
    LowerBound {
        seconds: f64,
    },
    /// α > 1 already at the start of the window.
    UpperBound {
        seconds: f64,
    },
}

impl T2Star {
    pub fn seconds(&self) -> f64 {
        match *self {
            Self::Root { seconds, .. }
            | Self::LowerBound { seconds }
            | Self::UpperBound { seconds } => seconds,
        }
    }

    pub fn is_root(&self) -> bool {
        matches!(self, Self::Root { .. })
    }
}

/// Solves α(t) = 1 by bisection in ln t.
pub fn t2_star_from_alpha<A>(alpha: A, bracket: (f64, f64), valid_from: f64) -> Result<T2Star>
where
    A: Fn(f64) -> Result<f64>,
{
    positive("bracket.lo", bracket.0)?;
    let b = Bracket::new(bracket.0.ln(), bracket.1.ln())?;
    let g = |u: f64| -> Result<f64> { Ok(alpha(u.exp())? - 1.0) };
    if g(b.hi())? < 0.0 {
        return Ok(T2Star::LowerBound { seconds: bracket.1 });
    }
    if g(b.lo())? > 0.0 {
        return Ok(T2Star::UpperBound { seconds: bracket.0 });
    }
    match find_root_fallible(g, b, 1e-12) {
        Ok(u) => {
            let seconds = u.exp();
            Ok(T2Star::Root {
                seconds,
                valid: seconds >= valid_from,
            })
        }
        Err(Error::Root(RootError::ToleranceUnreachable { best, .. })) => Ok(T2Star::Root {
            seconds: best.exp(),
            valid: best.exp() >= valid_from,
        }),
        Err(e) => Err(e),
    }
}

/// T2* from the closed-form α; excludes the 1/T1 contribution.
pub fn t2_star(
    s: &SplitTransmon,
    dist: &QpDistribution,
    mat: &Material,
    bracket: (f64, f64),
) -> Result<T2Star> {
    let valid_from = ALPHA_VALIDITY_THERMAL_TIMES * HBAR / mat.kt();
    t2_star_from_alpha(
        |t| Ok(alpha_analytic_st(s, dist, mat, t)?.value),
        bracket,
        valid_from,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Electrode, WireSegment, DEFAULT_REFRACTIVE_INDEX};
    use crate::noise::{qp_flux_noise_split_transmon, TlsParameters};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn al() -> Material {
        Material::aluminum()
    }

    fn dist(x: f64) -> QpDistribution {
        QpDistribution::quasithermal(x).unwrap()
    }

    fn approx() -> ConductivityModel {
        ConductivityModel::Approximate
    }

    fn electrodes() -> [Electrode; 2] {
        let e = Electrode {
            lead: WireSegment::new(15e-6, 0.1e-12, 0.0).unwrap(),
            pad_geometric_inductance_h: 2e-11,
        };
        [e, e]
    }

    fn transmon(ghz: f64, ge: bool) -> Transmon {
        Transmon::at_frequency(
            electrodes(),
            70.0,
            2.0 * PI * ghz * 1e9,
            ge,
            TlsParameters::default(),
        )
        .unwrap()
    }

    fn fig6(flux: f64, ge: bool) -> SplitTransmon {
        let half = WireSegment::new(1e-6, 0.01e-12, 0.0).unwrap();
        SplitTransmon::with_ej_over_ec(half, 2e-11, 10e-9, 70.0, ge, flux).unwrap()
    }

    #[test]
    fn filter_limits() {
        let t = 1e-6;
        assert!(rel(fid_filter(0.0, t), 0.5 * t * t) < 1e-15);
        assert!(rel(fid_filter(1e-3, t), 0.5 * t * t) < 1e-12);
        for k in 1..5 {
            assert!(fid_filter(2.0 * PI * k as f64 / t, t) < 1e-20 * t * t);
        }
        // Continuity across the series switch.
        let x = 2e-4 / t;
        assert!(rel(fid_filter(x * 0.999, t), fid_filter(x * 1.001, t)) < 1e-6);
    }

    #[test]
    fn filter_normalization() {
        // ∫F dω over ℝ = πt; the tail beyond W contributes ≈ 1/W·2.
        let t = 1.0;
        let w = 2000.0 * PI;
        let edges: Vec<f64> = (0..=4000).map(|k| k as f64 * w / 4000.0).collect();
        let body = 2.0 * gauss_legendre_panels(|x| fid_filter(x, t), &edges);
        let total = body + 2.0 / w;
        assert!(rel(total, PI * t) < 1e-4, "{total}");
    }

    #[test]
    fn resonator_t1_identities() {
        let kt = al().kt();
        let om = 2.0 * PI * 5e9;
        let (c, re) = (1e-13, 1e-6);
        let y = crate::circuit::Admittance {
            re,
            im: 0.0,
            omega: om,
        };
        let sp = charge_noise_from_admittance(&y, kt, om).unwrap();
        let sm = charge_noise_from_admittance(&y, kt, -om).unwrap();
        let t1 = t1_resonator(sp, sm, c, om).unwrap().unwrap();
        // (Ω/C)·Im χ·coth with Im χ = Re Y/Ω.
        assert!(rel(1.0 / t1, re / c * thermal_coth(kt, om)) < 1e-12);
        let cold_sp = charge_noise_from_admittance(&y, 0.0, om).unwrap();
        let q = om * c / re;
        assert!(
            rel(
                1.0 / t1_resonator(cold_sp, 0.0, c, om).unwrap().unwrap(),
                om / q
            ) < 1e-12
        );
        assert_eq!(t1_resonator(0.0, 0.0, c, om).unwrap(), None);
    }

    #[test]
    fn cpw_quality_scaling_and_tls() {
        let mat = al();
        let om = 2.0 * PI * 6e9;
        let tls = TlsParameters::default()
            .with_effective_total(1.0 / 3e5)
            .unwrap();
        let c = CpwResonator::new(1e-12, 50.0, om, DEFAULT_REFRACTIVE_INDEX, tls).unwrap();
        let a = quality_factor_cpw(&c, &dist(1e-5), &mat, &approx()).unwrap();
        let b = quality_factor_cpw(&c, &dist(1e-7), &mat, &approx()).unwrap();
        assert!(rel(b.qp / a.qp, 100.0) < 1e-6);
        assert!(rel(a.qp, a.qp_high_frequency) < 0.1);
        assert!(rel(a.tls, 3e5 / (HBAR * om / (2.0 * mat.kt())).tanh()) < 1e-12);
        assert!(rel(1.0 / a.total, 1.0 / a.qp + 1.0 / a.tls) < 1e-12);
    }

    #[test]
    fn transmon_t1_paths_agree() {
        let mat = al();
        for ge in [false, true] {
            let t = transmon(5.0, ge);
            let rates = t1_transmon(&t, &dist(1e-5), &mat, &approx()).unwrap();
            let via_noise = t1_transmon_from_noise(&t, &dist(1e-5), &mat, &approx())
                .unwrap()
                .unwrap();
            assert!(rel(1.0 / via_noise, rates.qp()) < 1e-10);
        }
    }

    #[test]
    fn transmon_tls_rate() {
        let mat = al();
        let t = transmon(5.0, false);
        let r = t1_transmon(&t, &dist(1e-5), &mat, &approx()).unwrap();
        assert!(rel(r.tls, r.omega * 3.2e-6) < 1e-10);
    }

    #[test]
    fn transmon_ge_over_nge() {
        let mat = al();
        let n = t1_transmon(&transmon(5.0, false), &dist(1e-5), &mat, &approx()).unwrap();
        let g = t1_transmon(&transmon(5.0, true), &dist(1e-5), &mat, &approx()).unwrap();
        let lk = transmon(5.0, false).kinetic_inductance(&mat);
        let lj = transmon(5.0, false).junction.josephson_inductance_h;
        assert!(rel(g.qp() / n.qp(), lk / (lj + lk)) < 1e-12);
        assert!(g.qp() <= n.qp());
        assert!(rel(g.qp_limit / n.qp_limit, lk / lj) < 1e-12);
    }

    #[test]
    fn white_spectrum_alpha() {
        let kt = al().kt();
        let s0 = 1e-40;
        let t = 1e3 * HBAR / kt;
        let a = alpha_numeric(|_| Ok(s0), 1.0, t, kt).unwrap();
        assert!(
            rel(a.alpha, s0 * PI * t) < 1e-3,
            "{} {}",
            a.alpha,
            s0 * PI * t
        );
        let z = alpha_numeric(|_| Ok(0.0), 1.0, t, kt).unwrap();
        assert_eq!(z.alpha, 0.0);
    }

    #[test]
    fn analytic_alpha_structure() {
        let mat = al();
        let s = fig6(0.25, false);
        let d = dist(1e-5);
        let t0 = 1e-6;
        let coeff = |t: f64| alpha_analytic_st(&s, &d, &mat, t).unwrap().value / t;
        // α/t = A·(3 ln t + const).
        let slope = (coeff(10.0 * t0) - coeff(t0)) / 10f64.ln();
        let slope2 = (coeff(100.0 * t0) - coeff(10.0 * t0)) / 10f64.ln();
        assert!(rel(slope, slope2) < 1e-10);
        let a = coeff(t0) / ((4.0 * (mat.kt() * t0 / HBAR).powi(3)).ln() + 1.0 - EULER_GAMMA);
        assert!(rel(slope, 3.0 * a) < 1e-10);
        assert_eq!(
            alpha_analytic_st(&fig6(0.0, false), &d, &mat, t0)
                .unwrap()
                .value,
            0.0
        );
        assert!(
            !alpha_analytic_st(&s, &d, &mat, HBAR / mat.kt())
                .unwrap()
                .valid
        );
    }

    #[test]
    fn t2_star_scaling_identity() {
        let mat = al();
        let s = fig6(0.25, false);
        let d = dist(1e-6);
        let base = t2_star(&s, &d, &mat, T2_BRACKET).unwrap();
        let scaled = t2_star_from_alpha(
            |t| Ok(4.0 * alpha_analytic_st(&s, &d, &mat, t)?.value),
            T2_BRACKET,
            0.0,
        )
        .unwrap();
        let a = alpha_analytic_st(&s, &d, &mat, scaled.seconds())
            .unwrap()
            .value;
        assert!(rel(a, 0.25) < 1e-9);
        assert!(scaled.seconds() < base.seconds());
    }

    #[test]
    fn t2_star_bounds() {
        let mat = al();
        let s = fig6(0.25, true);
        let tiny = t2_star(&s, &dist(1e-15), &mat, (1e-9, 1e-6)).unwrap();
        assert_eq!(tiny, T2Star::LowerBound { seconds: 1e-6 });
        let huge = t2_star(&fig6(0.25, false), &dist(1e-2), &mat, (1e-3, 1.0)).unwrap();
        assert_eq!(huge, T2Star::UpperBound { seconds: 1e-3 });
    }

    #[test]
    fn t2_star_monotone() {
        let mat = al();
        let mut last = f64::INFINITY;
        for x in [1e-9, 1e-8, 1e-7, 1e-6, 1e-5] {
            let v = t2_star(&fig6(0.3, false), &dist(x), &mat, T2_BRACKET)
                .unwrap()
                .seconds();
            assert!(v < last);
            last = v;
        }
        let mut last = f64::INFINITY;
        for flux in [0.1, 0.2, 0.3, 0.4] {
            let v = t2_star(&fig6(flux, false), &dist(1e-7), &mat, T2_BRACKET)
                .unwrap()
                .seconds();
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn numeric_alpha_grows_with_time() {
        let mat = al();
        let s = fig6(0.25, false);
        let d = dist(1e-5);
        let spec = |w: f64| qp_flux_noise_split_transmon(&s, &d, &mat, w, &approx());
        let slope = s.frequency_flux_slope();
        let mut last = 0.0;
        for k in 0..5 {
            let t = 1e-8 * 10f64.powi(k);
            let a = alpha_numeric(spec, slope, t, mat.kt()).unwrap().alpha;
            assert!(a > last);
            last = a;
        }
    }

    #[test]
    fn rate_additivity() {
        let qs = [1e5, 3e6, 7e4];
        let q = combine_quality_factors(&qs);
        assert!(rel(1.0 / q, qs.iter().map(|q| 1.0 / q).sum::<f64>()) < 1e-12);
        assert!(rel(combined_t2(2.0, 1.0), 0.8) < 1e-15);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn filter_non_negative(w in -1e12f64..1e12, t in 1e-12f64..1e3) {
                prop_assert!(fid_filter(w, t) >= 0.0);
            }
        }
    }
}
