//! Driver for `kostant-core`: an on-disk cache of Kazhdan–Lusztig tables,
//! resumable pair sweeps with a JSON-lines checkpoint, table and report
//! output in text, CSV and JSON, TOML configuration and the `kostant`
//! command line.

#![warn(missing_docs)]

pub mod cache;
pub mod checkpoint;
pub mod cli;
pub mod config;
pub mod error;
pub mod output;
pub mod reports;
pub mod sweep;

pub use cache::{load_hecke, CacheStatus};
pub use checkpoint::Checkpoint;
pub use config::{Format, RunConfig};
pub use error::{Error, Result};
pub use sweep::{run_sweep, SweepOptions, SweepReport, SweepRun, SweepStatus};
