//! Checkpointed pair sweeps.
//!
//! Pairs are checked in chunks on the worker pool and recorded in plan order
//! by the calling thread, which is the only checkpoint writer. The report is
//! a function of the plan and the outcomes only, so an interrupted and resumed
//! run reports exactly what an uninterrupted run does.

use kostant_core::cato::ThetaOnSimple;
use kostant_core::pipeline::{kh_check_pair, PairOutcome, SweepMode};
use kostant_core::{Hecke, Permutation};
use rayon::prelude::*;
use serde::Serialize;

use crate::checkpoint::Checkpoint;
use crate::error::Result;

/// Options of a sweep run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Graded or ungraded comparison.
    pub mode: SweepMode,
    /// Stop after this many newly recorded checks, as if killed.
    pub stop_after: Option<usize>,
    /// Pairs handed to the worker pool at once.
    pub chunk: usize,
}

impl SweepOptions {
    /// Defaults for `mode`.
    pub fn new(mode: SweepMode) -> Self {
        SweepOptions { mode, stop_after: None, chunk: 64 }
    }
}

/// One checked pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    /// First functor index.
    pub x: String,
    /// Second functor index.
    pub y: String,
    /// `distinct` or `equal`.
    pub outcome: &'static str,
}

/// Final state of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepStatus {
    /// Every planned pair was distinguished.
    AllDistinct,
    /// Some planned pair was not distinguished.
    Violation,
    /// The run stopped before the plan was exhausted.
    Interrupted,
}

/// The sweep of one involution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    /// The involution in compressed notation.
    pub d: String,
    /// Its one-line word.
    pub one_line: String,
    /// `graded` or `ev`.
    pub mode: &'static str,
    /// Size of the plan.
    pub planned: usize,
    /// Checked pairs in plan order.
    pub pairs: Vec<PairReport>,
    /// Pairs that were not distinguished.
    pub violations: usize,
    /// The outcome.
    pub status: SweepStatus,
}

/// A report together with the number of checks made by this run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRun {
    /// The report.
    pub report: SweepReport,
    /// Checks computed by this run rather than read from the checkpoint.
    pub newly_checked: usize,
}

/// Checks every pair of `plan` for `d`, skipping pairs already recorded in
/// `checkpoint` and recording new ones there.
pub fn run_sweep(
    hecke: &Hecke,
    d: &Permutation,
    plan: &[(Permutation, Permutation)],
    options: SweepOptions,
    mut checkpoint: Option<&mut Checkpoint>,
) -> Result<SweepRun> {
    let di = hecke.index(d)?;
    let dk = d.to_compressed();
    let keys: Vec<(String, String)> = plan.iter().map(|(x, y)| (x.to_compressed(), y.to_compressed())).collect();
    let mut outcomes: Vec<Option<PairOutcome>> = match &checkpoint {
        Some(c) => keys.iter().map(|(x, y)| c.outcome(&dk, x, y)).collect(),
        None => vec![None; plan.len()],
    };
    let todo: Vec<usize> = (0..plan.len()).filter(|&i| outcomes[i].is_none()).collect();
    let mut written = 0usize;
    let mut interrupted = false;
    'chunks: for chunk in todo.chunks(options.chunk.max(1)) {
        if options.stop_after.is_some_and(|k| written >= k) {
            interrupted = true;
            break;
        }
        let results: Vec<kostant_core::Result<PairOutcome>> = chunk
            .par_iter()
            .map_init(
                || ThetaOnSimple::new(hecke, di),
                |theta, &i| {
                    let theta = theta.as_mut().map_err(|e| e.clone())?;
                    let (x, y) = &plan[i];
                    kh_check_pair(theta, hecke.index(x)?, hecke.index(y)?, options.mode)
                },
            )
            .collect();
        for (&i, r) in chunk.iter().zip(results) {
            if options.stop_after.is_some_and(|k| written >= k) {
                interrupted = true;
                break 'chunks;
            }
            let r = r?;
            if let Some(c) = checkpoint.as_deref_mut() {
                c.append(&dk, &keys[i].0, &keys[i].1, r)?;
            }
            outcomes[i] = Some(r);
            written += 1;
        }
    }
    let pairs: Vec<PairReport> = keys
        .into_iter()
        .zip(&outcomes)
        .filter_map(|((x, y), o)| o.map(|o| PairReport { x, y, outcome: o.name() }))
        .collect();
    let violations = pairs.iter().filter(|p| p.outcome == PairOutcome::Equal.name()).count();
    let status = if interrupted || pairs.len() < plan.len() {
        SweepStatus::Interrupted
    } else if violations > 0 {
        SweepStatus::Violation
    } else {
        SweepStatus::AllDistinct
    };
    let report = SweepReport {
        d: dk,
        one_line: d.to_one_line_string(),
        mode: options.mode.name(),
        planned: plan.len(),
        pairs,
        violations,
        status,
    };
    Ok(SweepRun { report, newly_checked: written })
}
