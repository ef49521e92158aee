//! Data for figures 2 to 6, one table per curve.

use crate::config::{
    preset_config, DeviceConfig, GridSpec, OutputFormat, Quantity, RunConfig, Scale,
};
use crate::error::{CliError, Result};
use crate::output::{write_config_echo, write_table, Cell, Provenance, Table};
use crate::sweep::{evaluate_point, output_columns, Context, FLUX_UNITS};
use qpnoise_core::constants::HBAR;
use qpnoise_core::decoherence::{alpha_analytic_st, alpha_numeric};
use qpnoise_core::noise::{
    crossing_frequency, qp_flux_noise_flux_qubit, qp_flux_noise_split_transmon, spin_flux_noise,
    tls_flux_noise, to_flux_quantum_per_hz,
};
use qpnoise_core::qp::ConductivityModel;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

pub const FIGURES: [u8; 5] = [2, 3, 4, 5, 6];

/// Time, in units of ħ/k_BT, at which the numeric and closed-form α are compared.
pub const ALPHA_CHECK_THERMAL_TIMES: f64 = 100.0;

fn grid(cfg: &RunConfig, parameter: &str, default: GridSpec) -> Result<Vec<f64>> {
    let spec = cfg
        .sweep
        .as_ref()
        .and_then(|s| s.grids.iter().find(|g| g.parameter == parameter))
        .unwrap_or(&default);
    Ok(spec.points()?)
}

fn column(q: Quantity, name: &str) -> usize {
    output_columns(q)
        .iter()
        .position(|c| *c == name)
        .expect("known column")
}

fn x_label(x: f64) -> String {
    format!("x{x:e}")
}

/// Evaluates `q` on `points`, in parallel, keeping order.
fn eval_rows(cfg: &RunConfig, q: Quantity, points: &[Vec<(&str, f64)>]) -> Result<Vec<Vec<Cell>>> {
    points
        .par_iter()
        .map(|p| evaluate_point(cfg, q, p))
        .collect()
}

fn fig2(cfg: &RunConfig) -> Result<Vec<Table>> {
    let q = Quantity::Conductivity;
    let ratios = grid(
        cfg,
        "hw_over_kT",
        GridSpec::range("hw_over_kT", 1e-2, 10.0, 40, Scale::Log),
    )?;
    let x = cfg.distribution.x_qp_res[0];
    let points: Vec<Vec<(&str, f64)>> = ratios
        .iter()
        .map(|&r| vec![("hw_over_kT", r), ("x_qp_res", x)])
        .collect();
    let rows = eval_rows(cfg, q, &points)?;
    let mut t = Table::new(
        "fig2",
        "sigma1 normalized by sigma0, exact and closed form",
        &[
            "hw_over_kT",
            "sigma1_exact_over_sigma0",
            "sigma1_approx_over_sigma0",
            "relative_error",
        ],
    );
    let (ie, ia) = (
        column(q, "sigma1_exact_over_sigma0"),
        column(q, "sigma1_approx_over_sigma0"),
    );
    let mut worst: f64 = 0.0;
    for (r, row) in ratios.iter().zip(rows) {
        let (e, a) = (row[ie].as_f64().unwrap(), row[ia].as_f64().unwrap());
        let err = (a - e).abs() / e;
        worst = worst.max(err);
        t.push(vec![(*r).into(), e.into(), a.into(), err.into()]);
    }
    let mat = cfg.material.build().map_err(CliError::physics("fig2"))?;
    t.meta("kT_over_gap", mat.reduced_temperature());
    t.meta("x_qp_res", x);
    t.meta("max_relative_error", worst);
    Ok(vec![t])
}

fn fig3(cfg: &RunConfig) -> Result<Vec<Table>> {
    let q = Quantity::QualityFactor;
    let f = grid(
        cfg,
        "frequency_GHz",
        GridSpec::range("frequency_GHz", 2.0, 10.0, 81, Scale::Linear),
    )?;
    let mut tables = Vec::new();
    for &x in &cfg.distribution.x_qp_res {
        let points: Vec<_> = f
            .iter()
            .map(|&g| vec![("frequency_GHz", g), ("x_qp_res", x)])
            .collect();
        let rows = eval_rows(cfg, q, &points)?;
        let mut t = Table::new(
            format!("fig3_qp_{}", x_label(x)),
            format!("Q_QP of the CPW resonator at x_qp_res = {x:e}"),
            &["frequency_GHz", "Q_qp", "Q_qp_high_frequency"],
        );
        for (g, r) in f.iter().zip(rows) {
            t.push(vec![
                (*g).into(),
                r[column(q, "Q_qp")].clone(),
                r[column(q, "Q_qp_high_frequency")].clone(),
            ]);
        }
        t.meta("x_qp_res", x);
        tables.push(t);
    }
    let x0 = cfg.distribution.x_qp_res[0];
    let points: Vec<_> = f
        .iter()
        .map(|&g| vec![("frequency_GHz", g), ("x_qp_res", x0)])
        .collect();
    let rows = eval_rows(cfg, q, &points)?;
    let mut t = Table::new(
        "fig3_tls",
        "Q_TLS of the CPW resonator",
        &["frequency_GHz", "Q_tls"],
    );
    for (g, r) in f.iter().zip(rows) {
        t.push(vec![(*g).into(), r[column(q, "Q_tls")].clone()]);
    }
    tables.push(t);
    Ok(tables)
}

fn fig4(cfg: &RunConfig) -> Result<Vec<Table>> {
    let q = Quantity::T1;
    let f = grid(
        cfg,
        "frequency_GHz",
        GridSpec::range("frequency_GHz", 4.0, 8.0, 41, Scale::Linear),
    )?;
    let xs = &cfg.distribution.x_qp_res;
    let x_nge = xs.iter().copied().fold(f64::MIN, f64::max);
    let mut curves: Vec<(String, String, f64, f64, &str)> = vec![(
        format!("fig4_nge_{}", x_label(x_nge)),
        format!("T1 of the transmon without gap engineering at x_qp_res = {x_nge:e}"),
        x_nge,
        0.0,
        "t1_qp_us",
    )];
    for &x in xs {
        curves.push((
            format!("fig4_ge_{}", x_label(x)),
            format!("T1 of the gap-engineered transmon at x_qp_res = {x:e}"),
            x,
            1.0,
            "t1_qp_us",
        ));
    }
    curves.push((
        "fig4_tls".into(),
        "T1 of the transmon from TLS loss".into(),
        x_nge,
        0.0,
        "t1_tls_us",
    ));
    let mut tables = Vec::new();
    for (name, curve, x, ge, col) in curves {
        let points: Vec<_> = f
            .iter()
            .map(|&g| {
                vec![
                    ("frequency_GHz", g),
                    ("x_qp_res", x),
                    ("gap_engineered", ge),
                ]
            })
            .collect();
        let rows = eval_rows(cfg, q, &points).map_err(|e| relabel(e, &name))?;
        let mut t = Table::new(name, curve, &["frequency_GHz", "t1_us"]);
        for (g, r) in f.iter().zip(rows) {
            t.push(vec![(*g).into(), r[column(q, col)].clone()]);
        }
        t.meta("x_qp_res", x);
        t.meta("gap_engineered", ge != 0.0);
        tables.push(t);
    }
    Ok(tables)
}

fn relabel(e: CliError, curve: &str) -> CliError {
    match e {
        CliError::Physics { source, .. } => CliError::Physics {
            curve: curve.to_string(),
            source,
        },
        other => other,
    }
}

fn spectrum_table(
    name: String,
    curve: String,
    omegas: &[f64],
    s: impl Fn(f64) -> qpnoise_core::Result<f64> + Sync,
) -> Result<Table> {
    let rows: Vec<Vec<Cell>> = omegas
        .par_iter()
        .map(|&w| {
            let plus = s(w)?;
            let minus = s(-w)?;
            Ok(vec![
                w.into(),
                (w / (2.0 * PI)).into(),
                to_flux_quantum_per_hz(plus).into(),
                to_flux_quantum_per_hz(plus + minus).into(),
                FLUX_UNITS.into(),
            ])
        })
        .collect::<qpnoise_core::Result<_>>()
        .map_err(CliError::physics(&name))?;
    let mut t = Table::new(name, curve, output_columns(Quantity::FluxNoise));
    t.rows = rows;
    t.meta("symmetrized", "S_symmetrized = S(omega) + S(-omega)");
    Ok(t)
}

fn fig5(cfg: &RunConfig) -> Result<Vec<Table>> {
    let Some(DeviceConfig::FluxQubit(fc)) = &cfg.device else {
        return Err(CliError::Usage("figure 5 needs a flux_qubit device".into()));
    };
    let freqs = grid(
        cfg,
        "frequency_Hz",
        GridSpec::range("frequency_Hz", 1.0, 1e10, 101, Scale::Log),
    )?;
    let omegas: Vec<f64> = freqs.iter().map(|f| 2.0 * PI * f).collect();
    let fq = fc.build().map_err(CliError::physics("fig5 device"))?;
    let model = ConductivityModel::Approximate;
    let (lo, hi) = (omegas[0], *omegas.last().unwrap());
    let mut tables = Vec::new();
    for &x in &cfg.distribution.x_qp_res {
        let ctx = Context::at(cfg, &[("x_qp_res", x)])?;
        let (mat, dist) = (ctx.material, ctx.distribution);
        let s = |w: f64| qp_flux_noise_flux_qubit(&fq, &dist, &mat, w, &model);
        let mut t = spectrum_table(
            format!("fig5_qp_{}", x_label(x)),
            format!("QP flux noise of the flux qubit at x_qp_res = {x:e}"),
            &omegas,
            s,
        )?;
        let crossing = crossing_frequency(s, spin_flux_noise, lo, hi)
            .ok()
            .map(|w| w / (2.0 * PI));
        t.meta("x_qp_res", x);
        t.meta(
            "spin_crossing_Hz",
            crossing.map_or(Value::Null, |f| json!(f)),
        );
        tables.push(t);
    }
    let mat = cfg
        .material
        .build()
        .map_err(CliError::physics("fig5 material"))?;
    let (l, c, tls) = (fq.total_inductance(&mat), fq.capacitance_f, fq.tls);
    tables.push(spectrum_table(
        "fig5_tls".into(),
        "TLS flux noise of the flux qubit".into(),
        &omegas,
        |w| tls_flux_noise(&tls, l, c, mat.kt(), w),
    )?);
    tables.push(spectrum_table(
        "fig5_spin".into(),
        "spin flux noise".into(),
        &omegas,
        spin_flux_noise,
    )?);
    Ok(tables)
}

/// Ratio of the numerically integrated α to the closed form for the split
/// transmon in `cfg` at t = 100ħ/k_BT.
pub fn alpha_ratio(cfg: &RunConfig, x: f64, flux_bias: f64, gap_engineered: bool) -> Result<f64> {
    let ctx = Context::at(
        cfg,
        &[
            ("x_qp_res", x),
            ("flux_bias", flux_bias),
            ("gap_engineered", gap_engineered as u8 as f64),
        ],
    )?;
    let Some(DeviceConfig::SplitTransmon(sc)) = &ctx.device else {
        return Err(CliError::Usage(
            "the alpha check needs a split_transmon device".into(),
        ));
    };
    let curve = "alpha check";
    let st = sc.build().map_err(CliError::physics(curve))?;
    let (mat, dist) = (ctx.material, ctx.distribution);
    let t = ALPHA_CHECK_THERMAL_TIMES * HBAR / mat.kt();
    let model = ConductivityModel::Approximate;
    let num = alpha_numeric(
        |w| qp_flux_noise_split_transmon(&st, &dist, &mat, w, &model),
        st.frequency_flux_slope(),
        t,
        mat.kt(),
    )
    .map_err(CliError::physics(curve))?;
    let ana = alpha_analytic_st(&st, &dist, &mat, t).map_err(CliError::physics(curve))?;
    Ok(num.alpha / ana.value)
}

fn fig6(cfg: &RunConfig) -> Result<Vec<Table>> {
    let q = Quantity::T2star;
    let flux = grid(
        cfg,
        "flux_bias",
        GridSpec::range("flux_bias", 0.1, 0.4, 31, Scale::Linear),
    )?;
    let xs = &cfg.distribution.x_qp_res;
    let x_check = xs.iter().copied().fold(f64::MIN, f64::max);
    let ratio_nge = alpha_ratio(cfg, x_check, 0.25, false)?;
    let ratio_ge = alpha_ratio(cfg, x_check, 0.25, true)?;
    let mut tables = Vec::new();
    for (tag, ge) in [("nge", 0.0), ("ge", 1.0)] {
        for &x in xs {
            let name = format!("fig6_{tag}_{}", x_label(x));
            let points: Vec<_> = flux
                .iter()
                .map(|&p| vec![("flux_bias", p), ("x_qp_res", x), ("gap_engineered", ge)])
                .collect();
            let rows = eval_rows(cfg, q, &points).map_err(|e| relabel(e, &name))?;
            let what = if ge != 0.0 {
                "gap-engineered"
            } else {
                "non-gap-engineered"
            };
            let mut t = Table::new(
                name,
                format!("T2* of the {what} split transmon at x_qp_res = {x:e}"),
                &[
                    "flux_bias",
                    "frequency_GHz",
                    "t2star_us",
                    "t2star_bound",
                    "t2star_valid",
                ],
            );
            for (p, r) in flux.iter().zip(rows) {
                t.push(vec![
                    (*p).into(),
                    r[column(q, "frequency_GHz")].clone(),
                    r[column(q, "t2star_us")].clone(),
                    r[column(q, "t2star_bound")].clone(),
                    r[column(q, "t2star_valid")].clone(),
                ]);
            }
            t.meta("x_qp_res", x);
            t.meta("gap_engineered", ge != 0.0);
            t.meta("t2star_source", "closed-form alpha, 1/T1 excluded");
            t.meta("alpha_check_time_thermal_units", ALPHA_CHECK_THERMAL_TIMES);
            t.meta("alpha_check_flux_bias", 0.25);
            t.meta("alpha_check_x_qp_res", x_check);
            t.meta(
                "alpha_numeric_over_analytic",
                if ge != 0.0 { ratio_ge } else { ratio_nge },
            );
            tables.push(t);
        }
    }
    Ok(tables)
}

/// Builds every table of figure `n` from `cfg`.
pub fn run_figure(n: u8, cfg: &RunConfig) -> Result<Vec<Table>> {
    match n {
        2 => fig2(cfg),
        3 => fig3(cfg),
        4 => fig4(cfg),
        5 => fig5(cfg),
        6 => fig6(cfg),
        _ => Err(CliError::Usage(format!(
            "no figure {n}; choose one of 2, 3, 4, 5, 6"
        ))),
    }
}

/// The preset config of figure `n`.
pub fn figure_config(n: u8) -> Result<RunConfig> {
    if !FIGURES.contains(&n) {
        return Err(CliError::Usage(format!(
            "no figure {n}; choose one of 2, 3, 4, 5, 6"
        )));
    }
    Ok(preset_config(&format!("fig{n}"))?)
}

/// Runs figure `n` and writes its tables plus the config echo into `dir`.
pub fn write_figure(
    n: u8,
    cfg: &RunConfig,
    dir: &Path,
    format: OutputFormat,
) -> Result<Vec<PathBuf>> {
    let tables = run_figure(n, cfg)?;
    let prov = Provenance::of(cfg);
    let mut paths = vec![write_config_echo(dir, cfg).map_err(CliError::io(dir))?];
    for t in &tables {
        paths.push(write_table(dir, t, &prov, format).map_err(CliError::io(dir))?);
    }
    Ok(paths)
}
