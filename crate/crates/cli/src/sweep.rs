//! Cartesian parameter sweeps. Every quantity subcommand is a sweep with a
//! fixed quantity; figures evaluate single points through the same code.

use crate::config::{DeviceConfig, GridSpec, OutputFormat, Quantity, RunConfig};
use crate::error::{CliError, Result};
use crate::output::{read_existing_rows, table_path, write_table, Cell, Provenance, Table};
use qpnoise_core::circuit::split_transmon_admittance;
use qpnoise_core::constants::HBAR;
use qpnoise_core::decoherence::{
    combined_t2, quality_factor_cpw, t1_resonator, t1_transmon, t2_star, T2Star, T2_BRACKET,
};
use qpnoise_core::noise::{
    charge_noise_from_admittance, qp_flux_noise_flux_qubit, qp_flux_noise_junction,
    qp_flux_noise_split_transmon, to_flux_quantum_per_hz,
};
use qpnoise_core::numerics::QuadratureSpec;
use qpnoise_core::qp::{
    conductivity, sigma0_ratio, sigma1_approx, xqp_total, ConductivityModel, Material,
    QpDistribution,
};
use rayon::prelude::*;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

pub const FLUX_UNITS: &str = "Phi0^2/Hz";

/// Resolved physics at one sweep point.
#[derive(Debug, Clone)]
pub struct Context {
    pub material: Material,
    pub x_qp_res: f64,
    pub distribution: QpDistribution,
    pub device: Option<DeviceConfig>,
    /// Evaluation frequency for conductivity and noise spectra.
    pub omega: Option<f64>,
}

fn allowed(q: Quantity) -> &'static [&'static str] {
    match q {
        Quantity::Conductivity => &["temperature_mK", "x_qp_res", "frequency_GHz", "hw_over_kT"],
        Quantity::QualityFactor => &["temperature_mK", "x_qp_res", "frequency_GHz"],
        Quantity::T1 => &[
            "temperature_mK",
            "x_qp_res",
            "frequency_GHz",
            "gap_engineered",
        ],
        Quantity::FluxNoise => &[
            "temperature_mK",
            "x_qp_res",
            "frequency_Hz",
            "flux_bias",
            "gap_engineered",
        ],
        Quantity::T2star => &["temperature_mK", "x_qp_res", "flux_bias", "gap_engineered"],
    }
}

fn required_device(q: Quantity) -> &'static [&'static str] {
    match q {
        Quantity::Conductivity => &[],
        Quantity::QualityFactor => &["cpw"],
        Quantity::T1 => &["transmon"],
        Quantity::FluxNoise => &["flux_qubit", "split_transmon", "junction"],
        Quantity::T2star => &["split_transmon"],
    }
}

pub fn output_columns(q: Quantity) -> &'static [&'static str] {
    match q {
        Quantity::Conductivity => &[
            "omega_rad_s",
            "hw_over_kT",
            "sigma1_exact_over_sigmaN",
            "sigma2_exact_over_sigmaN",
            "sigma1_approx_over_sigmaN",
            "sigma0_over_sigmaN",
            "sigma1_exact_over_sigma0",
            "sigma1_approx_over_sigma0",
            "approx_valid",
        ],
        Quantity::QualityFactor => &[
            "omega_rad_s",
            "Q_qp",
            "Q_qp_high_frequency",
            "Q_tls",
            "Q_total",
        ],
        Quantity::T1 => &[
            "omega_rad_s",
            "t1_junction_us",
            "t1_wire_us",
            "t1_qp_us",
            "t1_qp_limit_us",
            "t1_tls_us",
            "t1_total_us",
        ],
        Quantity::FluxNoise => &[
            "omega_rad_s",
            "frequency_Hz",
            "S_value",
            "S_symmetrized",
            "units",
        ],
        Quantity::T2star => &[
            "omega_rad_s",
            "frequency_GHz",
            "t2star_us",
            "t2star_bound",
            "t2star_valid",
            "t1_us",
            "t2_us",
        ],
    }
}

/// Checks the grids against the quantity and device, and prepends the
/// distribution's density list when no grid sweeps `x_qp_res`.
pub fn resolve_grids(
    cfg: &RunConfig,
    q: Quantity,
    grids: &[GridSpec],
) -> Result<Vec<(String, Vec<f64>)>> {
    let variant = cfg.device.as_ref().map(DeviceConfig::variant);
    let need = required_device(q);
    if !need.is_empty() && !variant.is_some_and(|v| need.contains(&v)) {
        return Err(CliError::Usage(format!(
            "{} needs a device of variant {} (got {})",
            q.name(),
            need.join(" | "),
            variant.unwrap_or("none")
        )));
    }
    let mut out = Vec::new();
    for g in grids {
        if !allowed(q).contains(&g.parameter.as_str()) {
            return Err(CliError::Usage(format!(
                "{} cannot sweep `{}`; allowed: {}",
                q.name(),
                g.parameter,
                allowed(q).join(", ")
            )));
        }
        if out
            .iter()
            .any(|(p, _): &(String, Vec<f64>)| *p == g.parameter)
        {
            return Err(CliError::Usage(format!("`{}` is swept twice", g.parameter)));
        }
        out.push((g.parameter.clone(), g.points()?));
    }
    let has = |p: &str| out.iter().any(|(n, _)| n == p);
    if has("flux_bias") && variant != Some("split_transmon") {
        return Err(CliError::Usage(
            "`flux_bias` applies to split transmons only".into(),
        ));
    }
    if has("gap_engineered") && variant == Some("junction") {
        return Err(CliError::Usage(
            "a bare junction has no gap-engineering switch".into(),
        ));
    }
    match q {
        Quantity::Conductivity if has("frequency_GHz") == has("hw_over_kT") => {
            return Err(CliError::Usage(
                "conductivity sweeps need exactly one of `frequency_GHz`, `hw_over_kT`".into(),
            ))
        }
        Quantity::FluxNoise if !has("frequency_Hz") => {
            return Err(CliError::Usage(
                "flux_noise sweeps need a `frequency_Hz` grid".into(),
            ))
        }
        _ => {}
    }
    if !has("x_qp_res") {
        out.insert(0, ("x_qp_res".into(), cfg.distribution.x_qp_res.clone()));
    }
    Ok(out)
}

/// Grid points in row-major order, first grid outermost.
pub fn cartesian(grids: &[(String, Vec<f64>)]) -> Vec<Vec<f64>> {
    grids.iter().fold(vec![Vec::new()], |acc, (_, vals)| {
        acc.iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect()
    })
}

fn physics<T>(curve: &str, r: qpnoise_core::Result<T>) -> Result<T> {
    r.map_err(CliError::physics(curve))
}

impl Context {
    pub fn at(cfg: &RunConfig, point: &[(&str, f64)]) -> Result<Self> {
        let curve = "point setup";
        let get = |k: &str| point.iter().find(|(n, _)| *n == k).map(|p| p.1);
        let mut mc = cfg.material;
        if let Some(t) = get("temperature_mK") {
            mc.temperature_mk = t;
        }
        let material = physics(curve, mc.build())?;
        let x = get("x_qp_res").unwrap_or(cfg.distribution.x_qp_res[0]);
        let distribution = physics(curve, cfg.distribution.build(x))?;
        let mut device = cfg.device.clone();
        let mut omega = None;
        if let Some(f) = get("frequency_GHz") {
            match &mut device {
                Some(DeviceConfig::Cpw(c)) => c.frequency_ghz = f,
                Some(DeviceConfig::Transmon(t)) => t.frequency_ghz = f,
                _ => omega = Some(2.0 * PI * f * 1e9),
            }
        }
        if let Some(f) = get("frequency_Hz") {
            omega = Some(2.0 * PI * f);
        }
        if let Some(r) = get("hw_over_kT") {
            omega = Some(r * material.kt() / HBAR);
        }
        if let Some(v) = get("flux_bias") {
            if let Some(DeviceConfig::SplitTransmon(s)) = &mut device {
                s.flux_bias = v;
            }
        }
        if let Some(v) = get("gap_engineered") {
            let ge = v != 0.0;
            match &mut device {
                Some(DeviceConfig::Transmon(t)) => t.gap_engineered = ge,
                Some(DeviceConfig::FluxQubit(f)) => f.gap_engineered = ge,
                Some(DeviceConfig::SplitTransmon(s)) => s.gap_engineered = ge,
                _ => {}
            }
        }
        Ok(Self {
            material,
            x_qp_res: x,
            distribution,
            device,
            omega,
        })
    }
}

fn us(seconds: f64) -> Cell {
    Cell::Num(seconds * 1e6)
}

fn bound_label(t: &T2Star) -> &'static str {
    match t {
        T2Star::Root { .. } => "root",
        T2Star::LowerBound { .. } => "lower_bound",
        T2Star::UpperBound { .. } => "upper_bound",
    }
}

/// Evaluates `q` at one point; cells align with [`output_columns`].
pub fn evaluate(ctx: &Context, q: Quantity, model: &ConductivityModel) -> Result<Vec<Cell>> {
    let mat = &ctx.material;
    let dist = &ctx.distribution;
    let curve = format!("{} at x_qp_res = {:e}", q.name(), ctx.x_qp_res);
    Ok(match (q, &ctx.device) {
        (Quantity::Conductivity, _) => {
            let w = ctx.omega.expect("conductivity grids set a frequency");
            let exact = physics(
                &curve,
                conductivity(dist, mat, w, &QuadratureSpec::default()),
            )?;
            let approx = physics(&curve, sigma1_approx(xqp_total(dist, mat), mat, w))?;
            let s0 = sigma0_ratio(xqp_total(dist, mat), mat);
            vec![
                w.into(),
                (HBAR * w / mat.kt()).into(),
                exact.sigma1.into(),
                exact.sigma2.into(),
                approx.value.into(),
                s0.into(),
                (exact.sigma1 / s0).into(),
                (approx.value / s0).into(),
                approx.valid.into(),
            ]
        }
        (Quantity::QualityFactor, Some(DeviceConfig::Cpw(c))) => {
            let cpw = physics(&curve, c.build())?;
            let q = physics(&curve, quality_factor_cpw(&cpw, dist, mat, model))?;
            vec![
                cpw.mode_frequency_rad_s.into(),
                q.qp.into(),
                q.qp_high_frequency.into(),
                q.tls.into(),
                q.total.into(),
            ]
        }
        (Quantity::T1, Some(DeviceConfig::Transmon(t))) => {
            let tr = physics(&curve, t.build())?;
            let r = physics(&curve, t1_transmon(&tr, dist, mat, model))?;
            vec![
                r.omega.into(),
                us(1.0 / r.junction),
                us(1.0 / r.wire),
                us(r.t1_qp()),
                us(1.0 / r.qp_limit),
                us(r.t1_tls()),
                us(r.t1()),
            ]
        }
        (Quantity::FluxNoise, Some(dev)) => {
            let w = ctx.omega.expect("flux-noise grids set a frequency");
            let s = |w: f64| -> Result<f64> {
                physics(
                    &curve,
                    match dev {
                        DeviceConfig::FluxQubit(f) => qp_flux_noise_flux_qubit(
                            &physics(&curve, f.build())?,
                            dist,
                            mat,
                            w,
                            model,
                        ),
                        DeviceConfig::SplitTransmon(st) => qp_flux_noise_split_transmon(
                            &physics(&curve, st.build())?,
                            dist,
                            mat,
                            w,
                            model,
                        ),
                        DeviceConfig::Junction(j) => qp_flux_noise_junction(
                            j.josephson_inductance_nh * 1e-9,
                            j.phase_rad,
                            dist,
                            mat,
                            w,
                            model,
                        ),
                        _ => unreachable!("device checked by resolve_grids"),
                    },
                )
            };
            let plus = s(w)?;
            let minus = s(-w)?;
            vec![
                w.into(),
                (w / (2.0 * PI)).into(),
                to_flux_quantum_per_hz(plus).into(),
                to_flux_quantum_per_hz(plus + minus).into(),
                FLUX_UNITS.into(),
            ]
        }
        (Quantity::T2star, Some(DeviceConfig::SplitTransmon(sc))) => {
            let st = physics(&curve, sc.build())?;
            let om = st.frequency();
            let t2 = physics(&curve, t2_star(&st, dist, mat, T2_BRACKET))?;
            let s1 = physics(&curve, model.sigma1(dist, mat, om))?;
            let y = physics(&curve, split_transmon_admittance(&st, s1, mat, om))?;
            let sp = physics(&curve, charge_noise_from_admittance(&y, mat.kt(), om))?;
            let sm = physics(&curve, charge_noise_from_admittance(&y, mat.kt(), -om))?;
            let t1 = physics(&curve, t1_resonator(sp, sm, st.capacitance_f, om))?
                .unwrap_or(f64::INFINITY);
            let valid = matches!(t2, T2Star::Root { valid: true, .. });
            vec![
                om.into(),
                (om / (2.0 * PI * 1e9)).into(),
                us(t2.seconds()),
                bound_label(&t2).into(),
                valid.into(),
                us(t1),
                us(combined_t2(t1, t2.seconds())),
            ]
        }
        _ => unreachable!("device checked by resolve_grids"),
    })
}

/// Evaluates `q` at a named point of `cfg`.
pub fn evaluate_point(cfg: &RunConfig, q: Quantity, point: &[(&str, f64)]) -> Result<Vec<Cell>> {
    evaluate(
        &Context::at(cfg, point)?,
        q,
        &ConductivityModel::Approximate,
    )
}

/// Runs the sweep over all grid points, reusing rows of an earlier run of the
/// same physics, and writes one table.
pub fn run_sweep(
    cfg: &RunConfig,
    q: Quantity,
    dir: &Path,
    format: OutputFormat,
) -> Result<PathBuf> {
    let grids = match &cfg.sweep {
        Some(s) => s.grids.clone(),
        None => return Err(CliError::Usage("config has no sweep block".into())),
    };
    let grids = resolve_grids(cfg, q, &grids)?;
    let names: Vec<&str> = grids.iter().map(|(n, _)| n.as_str()).collect();
    let mut columns: Vec<&str> = names.clone();
    columns.extend_from_slice(output_columns(q));
    let variant = cfg.device.as_ref().map_or("none", DeviceConfig::variant);
    let mut table = Table::new(
        q.name(),
        format!("sweep {} on {variant}", q.name()),
        &columns,
    );
    let prov = Provenance::of(cfg);
    let path = table_path(dir, &table.name, format);

    let mut done: HashMap<Vec<String>, Vec<Cell>> = HashMap::new();
    if let Some(rows) = read_existing_rows(&path, &table.columns, &prov.physics_sha256, format) {
        for r in rows {
            done.insert(r[..names.len()].iter().map(Cell::render).collect(), r);
        }
    }
    let points = cartesian(&grids);
    let rows: Vec<Vec<Cell>> = points
        .par_iter()
        .map(|pt| {
            let key: Vec<String> = pt.iter().map(|v| Cell::Num(*v).render()).collect();
            if let Some(r) = done.get(&key) {
                return Ok(r.clone());
            }
            let named: Vec<(&str, f64)> = names.iter().copied().zip(pt.iter().copied()).collect();
            let mut row: Vec<Cell> = pt.iter().map(|v| Cell::Num(*v)).collect();
            row.extend(evaluate_point(cfg, q, &named)?);
            Ok(row)
        })
        .collect::<Result<_>>()?;
    table.rows = rows;
    table.meta("points", points.len() as u64);
    table.meta("reused_rows", done.len().min(points.len()) as u64);
    table.meta("conductivity_model", "approximate");
    write_table(dir, &table, &prov, format).map_err(CliError::io(&path))
}
