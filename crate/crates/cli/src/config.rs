//! The resolved configuration of one invocation and the provenance block
//! written into every output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunConfig {
    pub subcommand: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub groups: Vec<String>,
    /// `first`, `all` or an element index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<String>,
    pub workers: usize,
    pub cap: u64,
    pub seed: u64,
    /// Subcommand-specific settings.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<String, Value>,
}

impl RunConfig {
    pub fn new(subcommand: &str, workers: usize, cap: u64, seed: u64) -> RunConfig {
        RunConfig { subcommand: subcommand.into(), workers, cap, seed, ..RunConfig::default() }
    }

    pub fn option(mut self, key: &str, value: impl Serialize) -> RunConfig {
        self.options.insert(key.into(), serde_json::to_value(value).expect("option serializes"));
        self
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.workers == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        if self.cap == 0 {
            return Err(CliError::Usage("--cap must be positive".into()));
        }
        if self.n == Some(0) {
            return Err(CliError::Usage("--n must be positive".into()));
        }
        if let Some(d) = self.d {
            if d == 0 {
                return Err(CliError::Usage("--d must be positive".into()));
            }
            if let Some(n) = self.n {
                if d as usize > n {
                    return Err(CliError::Usage(format!("--d {d} exceeds --n {n}")));
                }
            }
        }
        if self.l == Some(0) {
            return Err(CliError::Usage("--cf needs a block length of at least 1".into()));
        }
        Ok(())
    }

    /// `{tool, version, library, config}`.
    pub fn provenance(&self) -> Value {
        serde_json::json!({
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "library": "dnagc",
            "config": self,
        })
    }
}

/// A JSON report with the provenance block in front.
pub fn document(config: &RunConfig, report: impl Serialize) -> Value {
    serde_json::json!({ "provenance": config.provenance(), "report": report })
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Data(format!("stdout: {e}")))
        }
    }
}

pub fn emit_json(path: Option<&Path>, value: &Value) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    emit(path, &text)
}

pub fn read_input(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_above_length_is_a_usage_error() {
        let mut c = RunConfig::new("search", 1, 16, 0);
        c.n = Some(6);
        c.d = Some(7);
        assert!(matches!(c.validate(), Err(CliError::Usage(_))));
        c.d = Some(6);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn provenance_carries_config() {
        let c = RunConfig::new("groups", 2, 16, 9).option("order", 8);
        let p = c.provenance();
        assert_eq!(p["config"]["seed"], 9);
        assert_eq!(p["config"]["options"]["order"], 8);
        assert_eq!(p["tool"], "dnagc-cli");
    }
}
