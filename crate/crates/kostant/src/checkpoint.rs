//! Append-only JSON-lines checkpoint of pair checks.
//!
//! The first line is a header naming the degree and the comparison mode; every
//! further line is one [`CheckpointRecord`]. Records are flushed one at a
//! time, so a killed run loses at most the line being written. On reopening,
//! an unterminated final line is cut off; any other unreadable line is an
//! error.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use kostant_core::pipeline::{PairOutcome, SweepMode};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Format tag of the header line.
pub const CHECKPOINT_FORMAT: &str = "kostant-sweep";
/// Format version of the header line.
pub const CHECKPOINT_VERSION: u32 = 1;

/// The first line of a checkpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckpointHeader {
    /// Always [`CHECKPOINT_FORMAT`].
    pub format: String,
    /// Always [`CHECKPOINT_VERSION`].
    pub version: u32,
    /// The degree.
    pub n: usize,
    /// `graded` or `ev`.
    pub mode: String,
}

impl CheckpointHeader {
    /// The header for a sweep of `S_n` in `mode`.
    pub fn new(n: usize, mode: SweepMode) -> Self {
        CheckpointHeader { format: CHECKPOINT_FORMAT.into(), version: CHECKPOINT_VERSION, n, mode: mode.name().into() }
    }
}

/// One completed pair check; permutations in compressed notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckpointRecord {
    /// The involution.
    pub d: String,
    /// First functor index.
    pub x: String,
    /// Second functor index.
    pub y: String,
    /// `distinct` or `equal`.
    pub outcome: String,
    /// Seconds since the Unix epoch when the check finished.
    pub timestamp: u64,
}

fn parse_outcome(s: &str) -> Option<PairOutcome> {
    match s {
        "distinct" => Some(PairOutcome::Distinct),
        "equal" => Some(PairOutcome::Equal),
        _ => None,
    }
}

type Key = (String, String, String);

/// An open checkpoint file.
#[derive(Debug)]
pub struct Checkpoint {
    path: PathBuf,
    writer: BufWriter<File>,
    done: BTreeMap<Key, PairOutcome>,
    recovered_bytes: usize,
}

impl Checkpoint {
    /// Opens `path`, creating it with `header` if it does not exist. An
    /// existing file must carry the same header.
    pub fn open(path: &Path, header: &CheckpointHeader) -> Result<Self> {
        let format_error = |reason: String| Error::Format { path: path.to_path_buf(), reason };
        let mut done = BTreeMap::new();
        let mut recovered_bytes = 0;
        let exists = path.exists();
        if exists {
            let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
            let complete = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
            recovered_bytes = bytes.len() - complete;
            let text = std::str::from_utf8(&bytes[..complete]).map_err(|e| format_error(e.to_string()))?;
            let mut lines = text.lines().enumerate();
            if let Some((_, first)) = lines.next() {
                let found: CheckpointHeader =
                    serde_json::from_str(first).map_err(|e| format_error(format!("header: {e}")))?;
                if &found != header {
                    return Err(format_error(format!(
                        "header {first} does not match this run ({})",
                        serde_json::to_string(header)?
                    )));
                }
            }
            for (i, line) in lines {
                let r: CheckpointRecord =
                    serde_json::from_str(line).map_err(|e| format_error(format!("line {}: {e}", i + 1)))?;
                let outcome = parse_outcome(&r.outcome)
                    .ok_or_else(|| format_error(format!("line {}: unknown outcome {}", i + 1, r.outcome)))?;
                let key = (r.d, r.x, r.y);
                if let Some(old) = done.insert(key, outcome) {
                    if old != outcome {
                        return Err(format_error(format!("line {}: conflicting outcome", i + 1)));
                    }
                }
            }
            if recovered_bytes > 0 {
                let f = OpenOptions::new().write(true).open(path).map_err(|e| Error::io(path, e))?;
                f.set_len(complete as u64).map_err(|e| Error::io(path, e))?;
            }
        }
        let f = OpenOptions::new().create(true).append(true).open(path).map_err(|e| Error::io(path, e))?;
        let mut cp = Checkpoint { path: path.to_path_buf(), writer: BufWriter::new(f), done, recovered_bytes };
        let empty = !exists || fs::metadata(path).map_err(|e| Error::io(path, e))?.len() == 0;
        if empty {
            cp.write_line(&serde_json::to_string(header)?)?;
        }
        Ok(cp)
    }

    fn write_line(&mut self, line: &str) -> Result<()> {
        let path = &self.path;
        self.writer.write_all(line.as_bytes()).map_err(|e| Error::io(path, e))?;
        self.writer.write_all(b"\n").map_err(|e| Error::io(path, e))?;
        self.writer.flush().map_err(|e| Error::io(path, e))
    }

    /// The file path.
    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Number of completed checks on record.
    pub fn len(&self) -> usize {
        self.done.len()
    }

    /// Whether no check is on record.
    pub fn is_empty(&self) -> bool {
        self.done.is_empty()
    }

    /// Bytes of an unterminated final line dropped when opening.
    pub fn recovered_bytes(&self) -> usize {
        self.recovered_bytes
    }

    /// The recorded outcome for a pair, if any.
    pub fn outcome(&self, d: &str, x: &str, y: &str) -> Option<PairOutcome> {
        self.done.get(&(d.to_string(), x.to_string(), y.to_string())).copied()
    }

    /// Appends and flushes one record.
    pub fn append(&mut self, d: &str, x: &str, y: &str, outcome: PairOutcome) -> Result<()> {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |t| t.as_secs());
        let r = CheckpointRecord {
            d: d.to_string(),
            x: x.to_string(),
            y: y.to_string(),
            outcome: outcome.name().to_string(),
            timestamp,
        };
        self.write_line(&serde_json::to_string(&r)?)?;
        self.done.insert((r.d, r.x, r.y), outcome);
        Ok(())
    }
}
