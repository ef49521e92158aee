//! Command-line surface.

use crate::config::{
    load_config_with, preset_config, OutputFormat, Quantity, RunConfig, SweepConfig,
};
use crate::error::{CliError, Result};
use crate::figures::{figure_config, write_figure};
use crate::output::{write_config_echo, write_table, Cell, Provenance, Table};
use crate::sweep::run_sweep;
use clap::{Parser, Subcommand};
use qpnoise_core::fdt::{
    verify_fdt_reduction, verify_gfdt, ToySystem, MAX_DIMENSION, MIN_DIMENSION,
};
use rayon::prelude::*;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "qpnoise",
    version,
    about = "Quasiparticle dissipation and noise in superconducting circuits"
)]
pub struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory; overrides the config.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Table defaults to start from (fig2..fig6, nbtin).
    #[arg(long, global = true)]
    pub preset: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// σ1 and σ2 over a frequency grid.
    Conductivity,
    /// Resonator quality factors.
    QualityFactor,
    /// Transmon T1.
    T1,
    /// QP flux noise of a flux qubit, split transmon or bare junction.
    FluxNoise,
    /// Split-transmon Ramsey T2*.
    T2star,
    /// Checks the fluctuation-dissipation identities on random finite systems.
    FdtCheck {
        #[arg(long, default_value_t = 100)]
        systems: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Writes the data of one figure.
    Figure { n: u8 },
    /// Runs the sweep block of the config.
    Sweep,
}

impl Command {
    fn quantity(&self) -> Option<Quantity> {
        Some(match self {
            Self::Conductivity => Quantity::Conductivity,
            Self::QualityFactor => Quantity::QualityFactor,
            Self::T1 => Quantity::T1,
            Self::FluxNoise => Quantity::FluxNoise,
            Self::T2star => Quantity::T2star,
            _ => return None,
        })
    }
}

/// Preset a quantity subcommand starts from when none is given.
fn default_preset(q: Quantity) -> &'static str {
    match q {
        Quantity::Conductivity => "fig2",
        Quantity::QualityFactor => "fig3",
        Quantity::T1 => "fig4",
        Quantity::FluxNoise => "fig5",
        Quantity::T2star => "fig6",
    }
}

fn resolve(cli: &Cli, fallback: Option<&str>) -> Result<RunConfig> {
    let mut cfg = match (&cli.config, cli.preset.as_deref().or(fallback)) {
        (Some(path), _) => load_config_with(path, cli.preset.as_deref(), fallback)?,
        (None, Some(p)) => preset_config(p)?,
        (None, None) => return Err(CliError::Usage("give --config or --preset".into())),
    };
    if let Some(dir) = &cli.out {
        cfg.output.directory = dir.display().to_string();
    }
    if let Some(f) = cli.format {
        cfg.output.format = f;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Runs the parsed command and returns the written files.
pub fn run(cli: &Cli) -> Result<Vec<PathBuf>> {
    match &cli.command {
        Command::Figure { n } => {
            figure_config(*n)?;
            let fallback = format!("fig{n}");
            let cfg = resolve(cli, Some(&fallback))?;
            let dir = PathBuf::from(&cfg.output.directory);
            write_figure(*n, &cfg, &dir, cfg.output.format)
        }
        Command::FdtCheck { systems, seed } => {
            let cfg = resolve(cli, Some("fig2"))?;
            let dir = PathBuf::from(&cfg.output.directory);
            let t = fdt_check(*systems, *seed)?;
            let prov = Provenance::of(&cfg);
            Ok(vec![
                write_table(&dir, &t, &prov, cfg.output.format).map_err(CliError::io(&dir))?
            ])
        }
        Command::Sweep => {
            let cfg = resolve(cli, None)?;
            let Some(s) = &cfg.sweep else {
                return Err(CliError::Usage("config has no sweep block".into()));
            };
            let q = s.quantity;
            write_quantity(&cfg, q)
        }
        cmd => {
            let q = cmd.quantity().expect("quantity subcommand");
            let mut cfg = resolve(cli, Some(default_preset(q)))?;
            match &mut cfg.sweep {
                Some(s) => s.quantity = q,
                None => {
                    let grids = preset_config(default_preset(q))?
                        .sweep
                        .expect("presets sweep")
                        .grids;
                    cfg.sweep = Some(SweepConfig { quantity: q, grids });
                }
            }
            write_quantity(&cfg, q)
        }
    }
}

fn write_quantity(cfg: &RunConfig, q: Quantity) -> Result<Vec<PathBuf>> {
    let dir = PathBuf::from(&cfg.output.directory);
    let echo = write_config_echo(&dir, cfg).map_err(CliError::io(&dir))?;
    Ok(vec![
        echo,
        run_sweep(cfg, q, Path::new(&dir), cfg.output.format)?,
    ])
}

/// Residuals of both identities on `systems` random systems. System `k` uses
/// seed `seed + k` and a dimension cycling through 2..=16; levels are drawn
/// on the scale of k_BT.
pub fn fdt_check(systems: u64, seed: u64) -> Result<Table> {
    if systems == 0 {
        return Err(CliError::Usage("--systems must be at least 1".into()));
    }
    let span = (MAX_DIMENSION - MIN_DIMENSION + 1) as u64;
    let kt = 1e-23;
    let rows = (0..systems)
        .into_par_iter()
        .map(|k| {
            let s = seed.wrapping_add(k);
            let d = MIN_DIMENSION + (k % span) as usize;
            let curve = format!("fdt system seed {s}");
            let general = ToySystem::random(d, kt, s).map_err(CliError::physics(&curve))?;
            let thermal = ToySystem::random_thermal(d, kt, s).map_err(CliError::physics(&curve))?;
            let g = verify_gfdt(&general);
            let r = verify_fdt_reduction(&thermal);
            Ok::<Vec<Cell>, CliError>(vec![
                (s as f64).into(),
                (d as f64).into(),
                g.relative.into(),
                r.relative.into(),
                (g.lines_checked as f64).into(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(
        "fdt_check",
        "fluctuation-dissipation residuals on random finite systems",
        &[
            "seed",
            "dimension",
            "gfdt_relative_residual",
            "reduction_relative_residual",
            "lines",
        ],
    );
    let max = |i: usize| {
        rows.iter()
            .map(|r| r[i].as_f64().unwrap())
            .fold(0.0, f64::max)
    };
    t.meta("systems", systems);
    t.meta("first_seed", seed);
    t.meta("kt_J", kt);
    t.meta("max_gfdt_relative_residual", max(2));
    t.meta("max_reduction_relative_residual", max(3));
    t.rows = rows;
    Ok(t)
}
