//! JSON run configuration. Every dimensional key carries its unit as a
//! suffix (`temperature_mK`, `gap_GHz`); nothing is inferred.

use qpnoise_core::circuit::{
    CpwResonator, Electrode, FluxQubit, SplitTransmon, Transmon, WireSegment,
    DEFAULT_REFRACTIVE_INDEX,
};
use qpnoise_core::constants::{BOLTZMANN, PLANCK};
use qpnoise_core::noise::TlsParameters;
use qpnoise_core::qp::{DistributionMode, Material, QpDistribution};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::f64::consts::PI;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("invalid JSON: {0}")]
    Parse(String),
    #[error("unknown preset `{0}` (expected fig2..fig6 or nbtin)")]
    UnknownPreset(String),
    #[error("key `{key}` has the wrong unit suffix; expected `{expected}`")]
    UnitMismatch { key: String, expected: String },
    #[error("{block}: missing required keys: {}", keys.join(", "))]
    MissingKeys { block: String, keys: Vec<String> },
    #[error("`{key}` {constraint} (got {value})")]
    Invalid {
        key: String,
        constraint: &'static str,
        value: f64,
    },
    #[error("schema violation: {0}")]
    Schema(String),
}

impl ConfigError {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Io { .. } => "io",
            Self::Parse(_) => "parse",
            Self::UnknownPreset(_) => "unknown_preset",
            Self::UnitMismatch { .. } => "unit_mismatch",
            Self::MissingKeys { .. } => "missing_keys",
            Self::Invalid { .. } => "invalid_value",
            Self::Schema(_) => "schema",
        }
    }
}

type Result<T> = std::result::Result<T, ConfigError>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    pub material: MaterialConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub device: Option<DeviceConfig>,
    pub distribution: DistributionConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialConfig {
    #[serde(rename = "gap_GHz")]
    pub gap_ghz: f64,
    #[serde(rename = "penetration_depth_nm")]
    pub penetration_depth_nm: f64,
    #[serde(rename = "critical_temperature_K")]
    pub critical_temperature_k: f64,
    #[serde(rename = "temperature_mK")]
    pub temperature_mk: f64,
}

impl MaterialConfig {
    pub fn aluminum() -> Self {
        Self {
            gap_ghz: 44.0,
            penetration_depth_nm: 50.0,
            critical_temperature_k: 1.2,
            temperature_mk: 30.0,
        }
    }

    pub fn build(&self) -> std::result::Result<Material, qpnoise_core::Error> {
        Material::from_lab_units(
            self.gap_ghz,
            self.penetration_depth_nm,
            self.critical_temperature_k,
            self.temperature_mk,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TlsConfig {
    pub surface_participation: f64,
    pub bulk_participation: f64,
    pub surface_tan_delta: f64,
    pub bulk_tan_delta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub effective_tan_delta: Option<f64>,
}

impl TlsConfig {
    fn table(surface_participation: f64) -> Self {
        Self {
            surface_participation,
            bulk_participation: 0.9,
            surface_tan_delta: 1e-3,
            bulk_tan_delta: 1e-6,
            effective_tan_delta: None,
        }
    }

    pub fn build(&self) -> std::result::Result<TlsParameters, qpnoise_core::Error> {
        let t = TlsParameters::new(
            self.surface_participation,
            self.bulk_participation,
            self.surface_tan_delta,
            self.bulk_tan_delta,
        )?;
        match self.effective_tan_delta {
            Some(v) => t.with_effective_total(v),
            None => Ok(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum DeviceConfig {
    Cpw(CpwConfig),
    Transmon(TransmonConfig),
    FluxQubit(FluxQubitConfig),
    SplitTransmon(SplitTransmonConfig),
    Junction(JunctionConfig),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CpwConfig {
    pub cross_section_um2: f64,
    pub impedance_ohm: f64,
    #[serde(rename = "frequency_GHz")]
    pub frequency_ghz: f64,
    pub refractive_index: f64,
    pub tls: TlsConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransmonConfig {
    pub lead_length_um: f64,
    pub lead_area_um2: f64,
    #[serde(rename = "lead_geometric_inductance_nH")]
    pub lead_geometric_inductance_nh: f64,
    #[serde(rename = "pad_geometric_inductance_nH")]
    pub pad_geometric_inductance_nh: f64,
    pub ej_over_ec: f64,
    #[serde(rename = "frequency_GHz")]
    pub frequency_ghz: f64,
    pub gap_engineered: bool,
    pub tls: TlsConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FluxQubitConfig {
    pub loop_length_mm: f64,
    pub loop_area_um2: f64,
    #[serde(rename = "loop_geometric_inductance_nH")]
    pub loop_geometric_inductance_nh: f64,
    #[serde(rename = "josephson_inductance_nH")]
    pub josephson_inductance_nh: f64,
    #[serde(rename = "capacitance_pF")]
    pub capacitance_pf: f64,
    /// Omitted: the double-well minimum from β.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase_rad: Option<f64>,
    pub gap_engineered: bool,
    pub tls: TlsConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitTransmonConfig {
    pub loop_half_length_um: f64,
    pub loop_half_area_um2: f64,
    #[serde(rename = "loop_half_geometric_inductance_nH")]
    pub loop_half_geometric_inductance_nh: f64,
    /// Per pad. Defaults to the single-junction transmon pad value.
    #[serde(rename = "pad_geometric_inductance_nH")]
    pub pad_geometric_inductance_nh: f64,
    #[serde(rename = "josephson_inductance_nH")]
    pub josephson_inductance_nh: f64,
    pub ej_over_ec: f64,
    /// Φ/Φ0.
    pub flux_bias: f64,
    pub gap_engineered: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JunctionConfig {
    #[serde(rename = "josephson_inductance_nH")]
    pub josephson_inductance_nh: f64,
    pub phase_rad: f64,
}

impl DeviceConfig {
    pub fn variant(&self) -> &'static str {
        match self {
            Self::Cpw(_) => "cpw",
            Self::Transmon(_) => "transmon",
            Self::FluxQubit(_) => "flux_qubit",
            Self::SplitTransmon(_) => "split_transmon",
            Self::Junction(_) => "junction",
        }
    }
}

impl CpwConfig {
    pub fn build(&self) -> std::result::Result<CpwResonator, qpnoise_core::Error> {
        CpwResonator::new(
            self.cross_section_um2 * 1e-12,
            self.impedance_ohm,
            2.0 * PI * self.frequency_ghz * 1e9,
            self.refractive_index,
            self.tls.build()?,
        )
    }
}

impl TransmonConfig {
    pub fn build(&self) -> std::result::Result<Transmon, qpnoise_core::Error> {
        let e = Electrode {
            lead: WireSegment::new(
                self.lead_length_um * 1e-6,
                self.lead_area_um2 * 1e-12,
                self.lead_geometric_inductance_nh * 1e-9,
            )?,
            pad_geometric_inductance_h: self.pad_geometric_inductance_nh * 1e-9,
        };
        Transmon::at_frequency(
            [e, e],
            self.ej_over_ec,
            2.0 * PI * self.frequency_ghz * 1e9,
            self.gap_engineered,
            self.tls.build()?,
        )
    }
}

impl FluxQubitConfig {
    pub fn build(&self) -> std::result::Result<FluxQubit, qpnoise_core::Error> {
        let wire = WireSegment::new(
            self.loop_length_mm * 1e-3,
            self.loop_area_um2 * 1e-12,
            self.loop_geometric_inductance_nh * 1e-9,
        )?;
        FluxQubit::new(
            wire,
            self.josephson_inductance_nh * 1e-9,
            self.gap_engineered,
            self.phase_rad,
            self.capacitance_pf * 1e-12,
            self.tls.build()?,
        )
    }
}

impl SplitTransmonConfig {
    pub fn build(&self) -> std::result::Result<SplitTransmon, qpnoise_core::Error> {
        let half = WireSegment::new(
            self.loop_half_length_um * 1e-6,
            self.loop_half_area_um2 * 1e-12,
            self.loop_half_geometric_inductance_nh * 1e-9,
        )?;
        SplitTransmon::with_ej_over_ec(
            half,
            self.pad_geometric_inductance_nh * 1e-9,
            self.josephson_inductance_nh * 1e-9,
            self.ej_over_ec,
            self.gap_engineered,
            self.flux_bias,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionConfig {
    pub x_qp_res: Vec<f64>,
    #[serde(default)]
    pub mode: DistributionMode,
}

impl DistributionConfig {
    pub fn build(&self, x: f64) -> std::result::Result<QpDistribution, qpnoise_core::Error> {
        match self.mode {
            DistributionMode::Quasithermal => QpDistribution::quasithermal(x),
            DistributionMode::ThermalEquilibrium => Ok(QpDistribution::thermal()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Conductivity,
    QualityFactor,
    T1,
    FluxNoise,
    T2star,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Conductivity => "conductivity",
            Self::QualityFactor => "quality_factor",
            Self::T1 => "t1",
            Self::FluxNoise => "flux_noise",
            Self::T2star => "t2star",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub parameter: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stop: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default)]
    pub scale: Scale,
}

impl GridSpec {
    pub fn range(parameter: &str, start: f64, stop: f64, points: usize, scale: Scale) -> Self {
        Self {
            parameter: parameter.to_string(),
            values: None,
            start: Some(start),
            stop: Some(stop),
            points: Some(points),
            scale,
        }
    }

    pub fn list(parameter: &str, values: Vec<f64>) -> Self {
        Self {
            parameter: parameter.to_string(),
            values: Some(values),
            start: None,
            stop: None,
            points: None,
            scale: Scale::Linear,
        }
    }

    /// Grid points in increasing order.
    pub fn points(&self) -> Result<Vec<f64>> {
        let key = format!("sweep.grids[{}]", self.parameter);
        let pts = match (&self.values, self.start, self.stop, self.points) {
            (Some(v), None, None, None) => v.clone(),
            (None, Some(a), Some(b), Some(n)) => {
                if n == 0 {
                    return Err(ConfigError::Invalid {
                        key,
                        constraint: "grid must not be empty",
                        value: 0.0,
                    });
                }
                if n == 1 {
                    vec![a]
                } else {
                    let f = |k: usize| k as f64 / (n - 1) as f64;
                    match self.scale {
                        Scale::Linear => (0..n)
                            .map(|k| if k == n - 1 { b } else { a + (b - a) * f(k) })
                            .collect(),
                        Scale::Log => {
                            if !(a > 0.0 && b > 0.0) {
                                return Err(ConfigError::Invalid {
                                    key,
                                    constraint: "log grid needs positive bounds",
                                    value: a.min(b),
                                });
                            }
                            (0..n)
                                .map(|k| {
                                    if k == n - 1 {
                                        b
                                    } else {
                                        a * (b / a).powf(f(k))
                                    }
                                })
                                .collect()
                        }
                    }
                }
            }
            _ => {
                return Err(ConfigError::Schema(format!(
                    "{key}: give either `values` or all of `start`, `stop`, `points`"
                )))
            }
        };
        if pts.is_empty() {
            return Err(ConfigError::Invalid {
                key,
                constraint: "grid must not be empty",
                value: 0.0,
            });
        }
        for w in pts.windows(2) {
            if !(w[1] > w[0]) {
                return Err(ConfigError::Invalid {
                    key,
                    constraint: "grid must be strictly increasing",
                    value: w[1],
                });
            }
        }
        if let Some(bad) = pts.iter().find(|v| !v.is_finite()) {
            return Err(ConfigError::Invalid {
                key,
                constraint: "grid values must be finite",
                value: *bad,
            });
        }
        Ok(pts)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub quantity: Quantity,
    pub grids: Vec<GridSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub directory: String,
    #[serde(default)]
    pub format: OutputFormat,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            directory: "out".to_string(),
            format: OutputFormat::Csv,
        }
    }
}

/// Unit-bearing keys accepted anywhere in a config.
const UNIT_KEYS: &[&str] = &[
    "gap_GHz",
    "penetration_depth_nm",
    "critical_temperature_K",
    "temperature_mK",
    "cross_section_um2",
    "impedance_ohm",
    "frequency_GHz",
    "frequency_Hz",
    "lead_length_um",
    "lead_area_um2",
    "lead_geometric_inductance_nH",
    "pad_geometric_inductance_nH",
    "loop_length_mm",
    "loop_area_um2",
    "loop_geometric_inductance_nH",
    "loop_half_length_um",
    "loop_half_area_um2",
    "loop_half_geometric_inductance_nH",
    "josephson_inductance_nH",
    "capacitance_pF",
    "phase_rad",
];

const UNIT_SUFFIXES: &[&str] = &[
    "Hz", "kHz", "MHz", "GHz", "THz", "m", "mm", "um", "nm", "pm", "m2", "mm2", "um2", "nm2", "K",
    "mK", "uK", "H", "mH", "uH", "nH", "pH", "fH", "F", "uF", "nF", "pF", "fF", "ohm", "kohm",
    "rad", "deg", "s", "ms", "us", "ns", "eV", "meV", "ueV", "J",
];

fn split_unit(key: &str) -> Option<(&str, &str)> {
    let (stem, unit) = key.rsplit_once('_')?;
    UNIT_SUFFIXES.contains(&unit).then_some((stem, unit))
}

fn check_units(v: &Value) -> Result<()> {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                if !UNIT_KEYS.contains(&k.as_str()) {
                    if let Some((stem, _)) = split_unit(k) {
                        if let Some(expected) = UNIT_KEYS
                            .iter()
                            .find(|u| split_unit(u).map(|s| s.0) == Some(stem))
                        {
                            return Err(ConfigError::UnitMismatch {
                                key: k.clone(),
                                expected: expected.to_string(),
                            });
                        }
                    }
                }
                check_units(child)?;
            }
            Ok(())
        }
        Value::Array(items) => items.iter().try_for_each(check_units),
        _ => Ok(()),
    }
}

fn required_device_keys(variant: &str) -> Option<&'static [&'static str]> {
    Some(match variant {
        "cpw" => &[
            "cross_section_um2",
            "impedance_ohm",
            "frequency_GHz",
            "refractive_index",
            "tls",
        ],
        "transmon" => &[
            "lead_length_um",
            "lead_area_um2",
            "lead_geometric_inductance_nH",
            "pad_geometric_inductance_nH",
            "ej_over_ec",
            "frequency_GHz",
            "gap_engineered",
            "tls",
        ],
        "flux_qubit" => &[
            "loop_length_mm",
            "loop_area_um2",
            "loop_geometric_inductance_nH",
            "josephson_inductance_nH",
            "capacitance_pF",
            "gap_engineered",
            "tls",
        ],
        "split_transmon" => &[
            "loop_half_length_um",
            "loop_half_area_um2",
            "loop_half_geometric_inductance_nH",
            "pad_geometric_inductance_nH",
            "josephson_inductance_nH",
            "ej_over_ec",
            "flux_bias",
            "gap_engineered",
        ],
        "junction" => &["josephson_inductance_nH", "phase_rad"],
        _ => return None,
    })
}

const VARIANTS: &str = "cpw | transmon | flux_qubit | split_transmon | junction";

fn check_required(v: &Value) -> Result<()> {
    let Some(obj) = v.as_object() else {
        return Err(ConfigError::Schema("config root must be an object".into()));
    };
    let missing = |block: &str, keys: &[&str], o: &Map<String, Value>| -> Result<()> {
        let absent: Vec<String> = keys
            .iter()
            .filter(|k| !o.contains_key(**k))
            .map(|k| k.to_string())
            .collect();
        if absent.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::MissingKeys {
                block: block.to_string(),
                keys: absent,
            })
        }
    };
    let empty = Map::new();
    let material = obj.get("material").and_then(Value::as_object);
    missing(
        "material",
        &[
            "gap_GHz",
            "penetration_depth_nm",
            "critical_temperature_K",
            "temperature_mK",
        ],
        material.unwrap_or(&empty),
    )?;
    missing(
        "distribution",
        &["x_qp_res"],
        obj.get("distribution")
            .and_then(Value::as_object)
            .unwrap_or(&empty),
    )?;
    if let Some(dev) = obj.get("device") {
        let Some(d) = dev.as_object() else {
            return Err(ConfigError::Schema("device must be an object".into()));
        };
        let Some(variant) = d.get("variant").and_then(Value::as_str) else {
            return Err(ConfigError::MissingKeys {
                block: "device".into(),
                keys: vec![format!("variant ({VARIANTS})")],
            });
        };
        let Some(keys) = required_device_keys(variant) else {
            return Err(ConfigError::Schema(format!(
                "device.variant `{variant}` is not one of {VARIANTS}"
            )));
        };
        missing("device", keys, d)?;
    }
    Ok(())
}

fn merge(base: &mut Value, over: Value) {
    match (base, over) {
        (Value::Object(b), Value::Object(o)) => {
            for (k, v) in o {
                // A different device variant replaces the preset block wholesale.
                let replace = k == "device"
                    && b.get("device").and_then(|d| d.get("variant")) != v.get("variant")
                    && v.get("variant").is_some();
                match b.get_mut(&k) {
                    Some(slot) if !replace && slot.is_object() && v.is_object() => merge(slot, v),
                    _ => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (b, o) => *b = o,
    }
}

fn positive_key(key: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(ConfigError::Invalid {
            key: key.to_string(),
            constraint: "must be positive",
            value: v,
        })
    }
}

impl RunConfig {
    /// Physical sanity beyond the schema.
    pub fn validate(&self) -> Result<()> {
        let m = &self.material;
        positive_key("material.gap_GHz", m.gap_ghz)?;
        positive_key("material.penetration_depth_nm", m.penetration_depth_nm)?;
        positive_key("material.critical_temperature_K", m.critical_temperature_k)?;
        positive_key("material.temperature_mK", m.temperature_mk)?;
        if self.distribution.x_qp_res.is_empty() {
            return Err(ConfigError::Invalid {
                key: "distribution.x_qp_res".into(),
                constraint: "must list at least one density",
                value: 0.0,
            });
        }
        for &x in &self.distribution.x_qp_res {
            if !(0.0..1.0).contains(&x) {
                return Err(ConfigError::Invalid {
                    key: "distribution.x_qp_res".into(),
                    constraint: "must lie in [0, 1)",
                    value: x,
                });
            }
        }
        match &self.device {
            Some(DeviceConfig::Cpw(c)) => {
                positive_key("device.cross_section_um2", c.cross_section_um2)?;
                positive_key("device.impedance_ohm", c.impedance_ohm)?;
                positive_key("device.frequency_GHz", c.frequency_ghz)?;
                positive_key("device.refractive_index", c.refractive_index)?;
            }
            Some(DeviceConfig::Transmon(t)) => {
                positive_key("device.lead_length_um", t.lead_length_um)?;
                positive_key("device.lead_area_um2", t.lead_area_um2)?;
                positive_key("device.ej_over_ec", t.ej_over_ec)?;
                positive_key("device.frequency_GHz", t.frequency_ghz)?;
            }
            Some(DeviceConfig::FluxQubit(f)) => {
                positive_key("device.loop_length_mm", f.loop_length_mm)?;
                positive_key("device.loop_area_um2", f.loop_area_um2)?;
                positive_key("device.josephson_inductance_nH", f.josephson_inductance_nh)?;
                positive_key("device.capacitance_pF", f.capacitance_pf)?;
            }
            Some(DeviceConfig::SplitTransmon(s)) => {
                positive_key("device.loop_half_length_um", s.loop_half_length_um)?;
                positive_key("device.loop_half_area_um2", s.loop_half_area_um2)?;
                positive_key("device.josephson_inductance_nH", s.josephson_inductance_nh)?;
                positive_key("device.ej_over_ec", s.ej_over_ec)?;
            }
            Some(DeviceConfig::Junction(j)) => {
                positive_key("device.josephson_inductance_nH", j.josephson_inductance_nh)?
            }
            None => {}
        }
        if let Some(s) = &self.sweep {
            if s.grids.is_empty() {
                return Err(ConfigError::Invalid {
                    key: "sweep.grids".into(),
                    constraint: "must declare at least one grid",
                    value: 0.0,
                });
            }
            for g in &s.grids {
                g.points()?;
            }
        }
        self.material
            .build()
            .map_err(|e| ConfigError::Schema(format!("material: {e}")))?;
        Ok(())
    }

    /// Compact canonical JSON, the input of the provenance hash.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}

/// Parses a JSON document, applying the preset named by `preset` or by the
/// document's own `preset` key for omitted fields.
pub fn parse_config(text: &str, preset: Option<&str>) -> Result<RunConfig> {
    parse_config_with(text, preset, None)
}

/// As [`parse_config`]; `fallback` applies when neither the caller nor the
/// document names a preset.
pub fn parse_config_with(
    text: &str,
    preset: Option<&str>,
    fallback: Option<&str>,
) -> Result<RunConfig> {
    let user: Value = serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    from_value(user, preset, fallback)
}

pub fn from_value(user: Value, preset: Option<&str>, fallback: Option<&str>) -> Result<RunConfig> {
    check_units(&user)?;
    // An explicitly empty device block is an error even when a preset could fill it.
    if user
        .get("device")
        .and_then(Value::as_object)
        .is_some_and(Map::is_empty)
    {
        return Err(ConfigError::MissingKeys {
            block: "device".into(),
            keys: vec![format!("variant ({VARIANTS})")],
        });
    }
    let named = user
        .get("preset")
        .and_then(Value::as_str)
        .map(str::to_string);
    let chosen = preset
        .map(str::to_string)
        .or(named)
        .or(fallback.map(str::to_string));
    let mut doc = match &chosen {
        Some(p) => serde_json::to_value(preset_config(p)?).expect("preset serializes"),
        None => Value::Object(Map::new()),
    };
    merge(&mut doc, user);
    if let (Some(p), Value::Object(o)) = (&chosen, &mut doc) {
        o.insert("preset".into(), Value::String(p.clone()));
    }
    check_required(&doc)?;
    let cfg: RunConfig =
        serde_json::from_value(doc).map_err(|e| ConfigError::Schema(e.to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<RunConfig> {
    load_config_with(path, None, None)
}

pub fn load_config_with(
    path: &Path,
    preset: Option<&str>,
    fallback: Option<&str>,
) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_config_with(&text, preset, fallback)
}

/// Temperature in mK at which k_BT equals `ratio`·Δ.
pub fn temperature_for_ratio_mk(gap_ghz: f64, ratio: f64) -> f64 {
    ratio * PLANCK * gap_ghz * 1e9 / BOLTZMANN * 1e3
}

pub const NBTIN_CRITICAL_TEMPERATURE_K: f64 = 14.0;
pub const NBTIN_PENETRATION_DEPTH_NM: f64 = 350.0;

/// Δ = 1.764·k_B·T_c, in GHz.
pub fn bcs_gap_ghz(tc_k: f64) -> f64 {
    1.764 * BOLTZMANN * tc_k / PLANCK * 1e-9
}

fn xs(v: &[f64]) -> DistributionConfig {
    DistributionConfig {
        x_qp_res: v.to_vec(),
        mode: DistributionMode::Quasithermal,
    }
}

fn out(dir: &str) -> OutputConfig {
    OutputConfig {
        directory: dir.to_string(),
        format: OutputFormat::Csv,
    }
}

/// Table-1 defaults for each figure.
pub fn preset_config(name: &str) -> Result<RunConfig> {
    let al = MaterialConfig::aluminum();
    let three = [1e-9, 1e-7, 1e-5];
    let five = [1e-9, 1e-8, 1e-7, 1e-6, 1e-5];
    let cfg = match name {
        "fig2" => RunConfig {
            preset: None,
            material: MaterialConfig {
                temperature_mk: temperature_for_ratio_mk(al.gap_ghz, 0.1),
                ..al
            },
            device: None,
            distribution: xs(&[1e-6]),
            sweep: Some(SweepConfig {
                quantity: Quantity::Conductivity,
                grids: vec![GridSpec::range("hw_over_kT", 1e-2, 10.0, 40, Scale::Log)],
            }),
            output: out("fig2"),
        },
        "fig3" => RunConfig {
            preset: None,
            material: al,
            device: Some(DeviceConfig::Cpw(CpwConfig {
                cross_section_um2: 1.0,
                impedance_ohm: 50.0,
                frequency_ghz: 6.0,
                refractive_index: DEFAULT_REFRACTIVE_INDEX,
                tls: TlsConfig {
                    effective_tan_delta: Some(1.0 / 3e5),
                    ..TlsConfig::table(23e-4)
                },
            })),
            distribution: xs(&three),
            sweep: Some(SweepConfig {
                quantity: Quantity::QualityFactor,
                grids: vec![GridSpec::range(
                    "frequency_GHz",
                    2.0,
                    10.0,
                    81,
                    Scale::Linear,
                )],
            }),
            output: out("fig3"),
        },
        "fig4" => RunConfig {
            preset: None,
            material: al,
            device: Some(DeviceConfig::Transmon(TransmonConfig {
                lead_length_um: 15.0,
                lead_area_um2: 0.1,
                lead_geometric_inductance_nh: 0.0,
                pad_geometric_inductance_nh: 2e-2,
                ej_over_ec: 70.0,
                frequency_ghz: 5.0,
                gap_engineered: false,
                tls: TlsConfig::table(2.4e-4),
            })),
            distribution: xs(&three),
            sweep: Some(SweepConfig {
                quantity: Quantity::T1,
                grids: vec![GridSpec::range(
                    "frequency_GHz",
                    4.0,
                    8.0,
                    41,
                    Scale::Linear,
                )],
            }),
            output: out("fig4"),
        },
        "fig5" => RunConfig {
            preset: None,
            material: al,
            device: Some(DeviceConfig::FluxQubit(FluxQubitConfig {
                loop_length_mm: 1.2,
                loop_area_um2: 1.0,
                loop_geometric_inductance_nh: 0.6,
                josephson_inductance_nh: 0.24,
                capacitance_pf: 0.1,
                phase_rad: Some(0.0),
                gap_engineered: false,
                tls: TlsConfig {
                    effective_tan_delta: Some(2e-4),
                    ..TlsConfig::table(23e-4)
                },
            })),
            distribution: xs(&five),
            sweep: Some(SweepConfig {
                quantity: Quantity::FluxNoise,
                grids: vec![GridSpec::range("frequency_Hz", 1.0, 1e10, 101, Scale::Log)],
            }),
            output: out("fig5"),
        },
        "fig6" => RunConfig {
            preset: None,
            material: al,
            device: Some(DeviceConfig::SplitTransmon(SplitTransmonConfig {
                loop_half_length_um: 1.0,
                loop_half_area_um2: 0.01,
                loop_half_geometric_inductance_nh: 0.0,
                pad_geometric_inductance_nh: 2e-2,
                josephson_inductance_nh: 10.0,
                ej_over_ec: 70.0,
                flux_bias: 0.25,
                gap_engineered: false,
            })),
            distribution: xs(&five),
            sweep: Some(SweepConfig {
                quantity: Quantity::T2star,
                grids: vec![GridSpec::range("flux_bias", 0.1, 0.4, 31, Scale::Linear)],
            }),
            output: out("fig6"),
        },
        "nbtin" => RunConfig {
            preset: None,
            material: MaterialConfig {
                gap_ghz: bcs_gap_ghz(NBTIN_CRITICAL_TEMPERATURE_K),
                penetration_depth_nm: NBTIN_PENETRATION_DEPTH_NM,
                critical_temperature_k: NBTIN_CRITICAL_TEMPERATURE_K,
                temperature_mk: 30.0,
            },
            device: Some(DeviceConfig::Junction(JunctionConfig {
                josephson_inductance_nh: 5.0,
                phase_rad: 0.0,
            })),
            distribution: xs(&[3e-4]),
            sweep: Some(SweepConfig {
                quantity: Quantity::FluxNoise,
                grids: vec![GridSpec::range("frequency_Hz", 1e7, 1e9, 21, Scale::Log)],
            }),
            output: out("nbtin"),
        },
        other => return Err(ConfigError::UnknownPreset(other.to_string())),
    };
    Ok(RunConfig {
        preset: Some(name.to_string()),
        ..cfg
    })
}
