//! Run configuration from an optional TOML file and command line overrides.
//!
//! ```toml
//! degree = 7
//! cache_dir = "/var/cache/kostant"
//! threads = 8
//! format = "json"
//! checkpoint = "sweep.jsonl"
//! mode = "ev"
//! ```

use std::path::{Path, PathBuf};

use kostant_core::pipeline::SweepMode;
use serde::Deserialize;

use crate::error::{Error, Result};

/// Largest accepted degree.
pub const MAX_DEGREE: usize = 8;

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Aligned columns or short summaries.
    #[default]
    Text,
    /// Pretty-printed JSON.
    Json,
    /// Comma separated values with a header row.
    Csv,
}

/// The TOML file; every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    /// Degree `n`.
    pub degree: Option<usize>,
    /// KL cache directory.
    pub cache_dir: Option<PathBuf>,
    /// Worker threads.
    pub threads: Option<usize>,
    /// Output format.
    pub format: Option<Format>,
    /// Checkpoint file for sweeps.
    pub checkpoint: Option<PathBuf>,
    /// `graded` or `ev`.
    pub mode: Option<String>,
}

impl FileConfig {
    /// Reads and parses a TOML file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    /// Parses TOML text.
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

/// The validated configuration of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Degree `n`.
    pub degree: usize,
    /// KL cache directory, if any.
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; `None` uses every core.
    pub threads: Option<usize>,
    /// Output format.
    pub format: Format,
    /// Checkpoint file for sweeps.
    pub checkpoint: Option<PathBuf>,
    /// Comparison mode for sweeps.
    pub mode: SweepMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            degree: 7,
            cache_dir: None,
            threads: None,
            format: Format::Text,
            checkpoint: None,
            mode: SweepMode::Ev,
        }
    }
}

impl RunConfig {
    /// Layers `overrides` over `file` over the defaults and validates.
    pub fn resolve(file: FileConfig, overrides: FileConfig) -> Result<Self> {
        let d = RunConfig::default();
        let mode = match overrides.mode.or(file.mode) {
            Some(m) => SweepMode::parse(&m).ok_or_else(|| Error::Config(format!("unknown mode {m:?}")))?,
            None => d.mode,
        };
        let cfg = RunConfig {
            degree: overrides.degree.or(file.degree).unwrap_or(d.degree),
            cache_dir: overrides.cache_dir.or(file.cache_dir),
            threads: overrides.threads.or(file.threads),
            format: overrides.format.or(file.format).unwrap_or(d.format),
            checkpoint: overrides.checkpoint.or(file.checkpoint),
            mode,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks ranges and paths before any computation.
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_DEGREE).contains(&self.degree) {
            return Err(Error::Config(format!("degree {} is outside 1..={MAX_DEGREE}", self.degree)));
        }
        if self.threads == Some(0) {
            return Err(Error::Config("threads must be positive".into()));
        }
        if let Some(dir) = &self.cache_dir {
            if dir.exists() && !dir.is_dir() {
                return Err(Error::Config(format!("cache path {} is not a directory", dir.display())));
            }
        }
        if let Some(cp) = &self.checkpoint {
            if cp.is_dir() {
                return Err(Error::Config(format!("checkpoint path {} is a directory", cp.display())));
            }
            let parent = cp.parent().filter(|p| !p.as_os_str().is_empty());
            if parent.is_some_and(|p| !p.is_dir()) {
                return Err(Error::Config(format!("checkpoint directory of {} does not exist", cp.display())));
            }
        }
        Ok(())
    }
}
