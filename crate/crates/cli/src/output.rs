//! Tables and their CSV/JSON encodings. Floats are written as `{:.11e}`
//! (12 significant digits) with LF line endings so output is byte-stable.

use crate::config::{OutputFormat, RunConfig};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const TOOL: &str = concat!("qpnoise ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Num(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(v) if v.is_finite() => json!(v),
            Cell::Num(v) => json!(format_float(*v)),
            Cell::Text(s) => json!(s),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            Cell::Text(_) => None,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Text(b.to_string())
    }
}

pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:.11e}")
    }
}

fn parse_cell(s: &str) -> Cell {
    match s.parse::<f64>() {
        Ok(v) if format_float(v) == s => Cell::Num(v),
        _ => Cell::Text(s.to_string()),
    }
}

/// One curve: named columns, rows and free-form metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub curve: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub metadata: BTreeMap<String, Value>,
}

impl Table {
    pub fn new(name: impl Into<String>, curve: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            curve: curve.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &str, v: impl Into<Value>) {
        self.metadata.insert(key.to_string(), v.into());
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        self.rows.iter().map(|r| r[k].as_f64()).collect()
    }
}

/// `sha256("blob <len>\0" + content)`, the git object id under SHA-256.
pub fn git_blob_sha256(content: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(format!("blob {}\0", content.len()).as_bytes());
    h.update(content);
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub config_json: String,
    pub config_sha256: String,
    /// Hash of everything except the sweep and output blocks; rows computed
    /// under the same physics hash can be reused.
    pub physics_sha256: String,
}

impl Provenance {
    pub fn of(cfg: &RunConfig) -> Self {
        let config_json = cfg.canonical_json();
        let physics = RunConfig {
            sweep: None,
            output: Default::default(),
            ..cfg.clone()
        };
        Self {
            config_sha256: git_blob_sha256(config_json.as_bytes()),
            physics_sha256: git_blob_sha256(physics.canonical_json().as_bytes()),
            config_json,
        }
    }
}

pub fn encode_csv(t: &Table, p: &Provenance) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# tool: {TOOL}");
    let _ = writeln!(s, "# table: {}", t.name);
    let _ = writeln!(s, "# curve: {}", t.curve);
    let _ = writeln!(s, "# config_sha256: {}", p.config_sha256);
    let _ = writeln!(s, "# physics_sha256: {}", p.physics_sha256);
    let _ = writeln!(s, "# config: {}", p.config_json);
    for (k, v) in &t.metadata {
        let _ = writeln!(s, "# {k}: {v}");
    }
    s.push_str(&t.columns.join(","));
    s.push('\n');
    for r in &t.rows {
        let line: Vec<String> = r.iter().map(Cell::render).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}

pub fn encode_json(t: &Table, p: &Provenance) -> String {
    let config: Value = serde_json::from_str(&p.config_json).expect("canonical config is JSON");
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
        .collect();
    let metadata: Map<String, Value> = t.metadata.clone().into_iter().collect();
    let doc = json!({
        "tool": TOOL,
        "table": t.name,
        "curve": t.curve,
        "config_sha256": p.config_sha256,
        "physics_sha256": p.physics_sha256,
        "config": config,
        "metadata": metadata,
        "columns": t.columns,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

pub fn extension(f: OutputFormat) -> &'static str {
    match f {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    }
}

pub fn table_path(dir: &Path, name: &str, f: OutputFormat) -> PathBuf {
    dir.join(format!("{name}.{}", extension(f)))
}

pub fn write_table(
    dir: &Path,
    t: &Table,
    p: &Provenance,
    f: OutputFormat,
) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = table_path(dir, &t.name, f);
    let body = match f {
        OutputFormat::Csv => encode_csv(t, p),
        OutputFormat::Json => encode_json(t, p),
    };
    std::fs::write(&path, body)?;
    Ok(path)
}

/// Writes the resolved config so a run can be repeated from its output.
pub fn write_config_echo(dir: &Path, cfg: &RunConfig) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join("config.json");
    let mut s = serde_json::to_string_pretty(cfg).expect("config serializes");
    s.push('\n');
    std::fs::write(&path, s)?;
    Ok(path)
}

/// Rows of a previously written table, if it was produced under
/// `physics_sha256` with the same columns.
pub fn read_existing_rows(
    path: &Path,
    columns: &[String],
    physics_sha256: &str,
    f: OutputFormat,
) -> Option<Vec<Vec<Cell>>> {
    let text = std::fs::read_to_string(path).ok()?;
    match f {
        OutputFormat::Csv => {
            let mut hash_ok = false;
            let mut lines = text.lines();
            let mut header = None;
            for line in lines.by_ref() {
                if let Some(rest) = line.strip_prefix("# physics_sha256: ") {
                    hash_ok = rest == physics_sha256;
                } else if !line.starts_with('#') {
                    header = Some(line);
                    break;
                }
            }
            let cols: Vec<&str> = header?.split(',').collect();
            if !hash_ok || cols != columns.iter().map(String::as_str).collect::<Vec<_>>() {
                return None;
            }
            let rows: Vec<Vec<Cell>> = lines
                .map(|l| l.split(',').map(parse_cell).collect())
                .collect();
            rows.iter()
                .all(|r| r.len() == columns.len())
                .then_some(rows)
        }
        OutputFormat::Json => {
            let doc: Value = serde_json::from_str(&text).ok()?;
            if doc.get("physics_sha256")?.as_str()? != physics_sha256 {
                return None;
            }
            let cols: Vec<String> = serde_json::from_value(doc.get("columns")?.clone()).ok()?;
            if cols != columns {
                return None;
            }
            doc.get("rows")?
                .as_array()?
                .iter()
                .map(|r| {
                    let cells: Option<Vec<Cell>> = r
                        .as_array()?
                        .iter()
                        .map(|v| match v {
                            Value::Number(n) => n.as_f64().map(Cell::Num),
                            Value::String(s) => Some(parse_cell(s)),
                            _ => None,
                        })
                        .collect();
                    cells.filter(|c| c.len() == columns.len())
                })
                .collect()
        }
    }
}
