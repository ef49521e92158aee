use crate::config::ConfigError;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{curve}: {source}")]
    Physics {
        curve: String,
        #[source]
        source: qpnoise_core::Error,
    },
    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn physics(curve: impl Into<String>) -> impl FnOnce(qpnoise_core::Error) -> Self {
        let curve = curve.into();
        move |source| Self::Physics { curve, source }
    }

    pub fn io(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> Self + '_ {
        move |e| Self::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Config(c) => c.kind(),
            Self::Physics { .. } => "physics",
            Self::Io { .. } => "io",
            Self::Usage(_) => "usage",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Usage(_) => 2,
            Self::Physics { .. } | Self::Io { .. } => 1,
        }
    }

    /// Machine-readable form written to stderr.
    pub fn to_json(&self) -> String {
        let mut v = json!({ "error": { "kind": self.kind(), "message": self.to_string() } });
        if let Self::Physics { curve, .. } = self {
            v["error"]["curve"] = json!(curve);
        }
        v.to_string()
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
