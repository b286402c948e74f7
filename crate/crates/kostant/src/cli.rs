//! The `kostant` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kostant_core::hecke::expr::{evaluate, format_value};
use kostant_core::indec::run_indec_pipeline;
use kostant_core::patterns::{all_witnesses, verify_witness};
use kostant_core::perm::Side;
use kostant_core::pipeline::{base_answers, classify_all, kh_pair_plan, Provenance, SweepMode, Verdict, VerdictRecord};
use kostant_core::tableaux::{a_function, cell_involution, cell_members, rs};
use kostant_core::{Hecke, Permutation};
use serde::Serialize;

use crate::cache::{cache_file, load_hecke, resolve_cache_dir, CacheStatus};
use crate::checkpoint::{Checkpoint, CheckpointHeader};
use crate::config::{FileConfig, Format, RunConfig};
use crate::error::{Error, Result, EXIT_CERTIFICATE, EXIT_OK, EXIT_PENDING, EXIT_USAGE};
use crate::output::{write_json, write_line, Table};
use crate::reports::{
    counts_table, km_table, table1, table2, table3, table4, table5_table, verdict_table, ClassifyReport, IndecJson,
};
use crate::sweep::{run_sweep, SweepOptions, SweepReport, SweepStatus};

/// Exact Hecke algebra computations and the Kostant problem for `sl_n`.
#[derive(Debug, Parser)]
#[command(name = "kostant", version)]
pub struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Degree n of the symmetric group.
    #[arg(long, short = 'n', global = true)]
    n: Option<usize>,
    /// Directory of the KL table cache (overrides KOSTANT_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a Hecke algebra expression such as `C: C(6,5)*C(1,2,4,3,2,5,6)`.
    Hecke {
        /// The expression.
        expr: String,
    },
    /// Robinson–Schensted tableaux, shape and descents of a permutation.
    Rs {
        /// One-line word, compressed word or comma separated Coxeter word.
        perm: String,
    },
    /// Members of the left or right cell of a permutation.
    Cells {
        /// The permutation.
        perm: String,
        /// Which cell.
        #[arg(long, value_enum, default_value = "left")]
        side: CellSide,
    },
    /// Consecutive negativity patterns of a permutation.
    Patterns {
        /// The permutation.
        perm: String,
        /// Also check each witness certificate in the Hecke algebra.
        #[arg(long)]
        verify: bool,
    },
    /// Classify every involution of S_n.
    Classify {
        /// Comparison mode for the sweeps of positive cases.
        #[arg(long)]
        mode: Option<String>,
        /// Print every record instead of the summary.
        #[arg(long)]
        records: bool,
        /// Run the graded sweeps left pending by default.
        #[arg(long)]
        force_sweep: bool,
        /// Checkpoint file for the forced sweeps.
        #[arg(long, requires = "force_sweep")]
        resume: Option<PathBuf>,
    },
    /// Emit one of the classification tables.
    Tables {
        /// `1`..`5`, `verdicts`, `counts` or `km`.
        #[arg(long)]
        which: String,
    },
    /// Run the indecomposability checks for S_7.
    Indec,
    /// Check the pair plans of involutions, with a resumable checkpoint.
    Sweep {
        /// Involutions to sweep.
        #[arg(long = "d")]
        ds: Vec<String>,
        /// Sweep every positive involution of S_n.
        #[arg(long)]
        positive: bool,
        /// `graded` or `ev`.
        #[arg(long)]
        mode: Option<String>,
        /// Checkpoint file; created if missing, resumed otherwise.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Stop after recording this many checks.
        #[arg(long, hide = true)]
        stop_after: Option<usize>,
    },
    /// Compute the KL table and write it to the cache.
    Prebuild,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CellSide {
    Left,
    Right,
}

fn config(global: &GlobalArgs, mode: Option<String>, checkpoint: Option<PathBuf>) -> Result<RunConfig> {
    let file = match &global.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let overrides = FileConfig {
        degree: global.n,
        cache_dir: global.cache_dir.clone(),
        threads: global.threads,
        format: global.format,
        checkpoint,
        mode,
    };
    let mut cfg = RunConfig::resolve(file, overrides)?;
    cfg.cache_dir = resolve_cache_dir(cfg.cache_dir.as_deref());
    cfg.validate()?;
    Ok(cfg)
}

fn hecke(cfg: &RunConfig) -> Result<Hecke> {
    Ok(load_hecke(cfg.degree, cfg.cache_dir.as_deref())?.0)
}

/// Reads a permutation; a bare one-line word fixes the degree unless `n` was
/// given explicitly.
fn parse_perm(explicit_n: Option<usize>, default_n: usize, s: &str) -> Result<Permutation> {
    let t = s.trim();
    if explicit_n.is_none() && !t.contains(['_', ',']) && t != "e" {
        if let Ok(w) = Permutation::from_one_line_str(t) {
            return Ok(w);
        }
    }
    Ok(Permutation::parse(explicit_n.unwrap_or(default_n), t)?)
}

fn rows_json(t: &kostant_core::StandardTableau) -> Vec<Vec<u8>> {
    t.rows().to_vec()
}

#[derive(Serialize)]
struct RsJson {
    w: String,
    compressed: String,
    p: Vec<Vec<u8>>,
    q: Vec<Vec<u8>>,
    shape: Vec<usize>,
    right_descents: Vec<usize>,
    left_descents: Vec<usize>,
    a: usize,
}

#[derive(Serialize)]
struct WitnessJson {
    pattern: String,
    position: usize,
    x_word: String,
    y_word: String,
    certificate_checked: Option<bool>,
}

fn emit_table(t: &Table, format: Format, out: &mut dyn Write) -> Result<()> {
    t.write(format, out)
}

fn classify(cfg: &RunConfig) -> Result<Vec<VerdictRecord>> {
    let h = hecke(cfg)?;
    with_pool(cfg, || Ok(classify_all(&h, cfg.mode)?))
}

fn with_pool<T: Send>(cfg: &RunConfig, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        b = b.num_threads(t);
    }
    let pool = b.build().map_err(|e| Error::Config(e.to_string()))?;
    pool.install(f)
}

/// Runs the graded sweep of every record left pending and clears the flag of
/// those that come out distinct. A violation marks the record unchecked.
fn force_graded_sweeps(cfg: &RunConfig, h: &Hecke, records: &mut [VerdictRecord]) -> Result<()> {
    let mut checkpoint = match &cfg.checkpoint {
        Some(p) => Some(Checkpoint::open(p, &CheckpointHeader::new(cfg.degree, SweepMode::Graded))?),
        None => None,
    };
    for r in records.iter_mut().filter(|r| r.graded_sweep_pending) {
        let plan = kh_pair_plan(h, &r.d)?;
        let options = SweepOptions::new(SweepMode::Graded);
        let run = with_pool(cfg, || run_sweep(h, &r.d, &plan, options, checkpoint.as_mut()))?;
        match run.report.status {
            SweepStatus::AllDistinct => r.graded_sweep_pending = false,
            SweepStatus::Violation => r.checked = false,
            SweepStatus::Interrupted => {}
        }
    }
    Ok(())
}

fn classify_exit(records: &[VerdictRecord]) -> i32 {
    if records.iter().any(|r| !r.checked && r.provenance != Provenance::None) {
        EXIT_CERTIFICATE
    } else if records.iter().any(|r| r.verdict == Verdict::Pending) {
        EXIT_PENDING
    } else {
        EXIT_OK
    }
}

fn cmd_sweep(
    cfg: &RunConfig,
    ds: &[String],
    positive: bool,
    explicit_n: Option<usize>,
    stop_after: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32> {
    let h = hecke(cfg)?;
    let n = cfg.degree;
    let mut targets: Vec<Permutation> = Vec::new();
    for s in ds {
        let d = parse_perm(explicit_n.or(Some(n)), n, s)?;
        if !d.is_involution() {
            return Err(Error::Config(format!("{s} is not an involution")));
        }
        targets.push(d);
    }
    if positive {
        let records: Vec<(Permutation, bool)> = if n <= 6 {
            base_answers(n)?.into_iter().collect()
        } else {
            classify(cfg)?.into_iter().map(|r| (r.d, r.verdict == Verdict::Positive)).collect()
        };
        targets.extend(records.into_iter().filter(|(_, k)| *k).map(|(d, _)| d));
    }
    if targets.is_empty() {
        return Err(Error::Config("nothing to sweep: give --d or --positive".into()));
    }
    let mut checkpoint = match &cfg.checkpoint {
        Some(p) => Some(Checkpoint::open(p, &CheckpointHeader::new(n, cfg.mode))?),
        None => None,
    };
    let mut options = SweepOptions::new(cfg.mode);
    options.stop_after = stop_after;
    let mut reports: Vec<SweepReport> = Vec::new();
    for d in &targets {
        let plan = kh_pair_plan(&h, d)?;
        let run = with_pool(cfg, || run_sweep(&h, d, &plan, options, checkpoint.as_mut()))?;
        options.stop_after = options.stop_after.map(|k| k.saturating_sub(run.newly_checked));
        let interrupted = run.report.status == SweepStatus::Interrupted;
        reports.push(run.report);
        if interrupted {
            break;
        }
    }
    match cfg.format {
        Format::Json => write_json(&reports, out)?,
        Format::Csv => {
            let mut t = Table::new(vec!["d", "x", "y", "outcome"]);
            for r in &reports {
                for p in &r.pairs {
                    t.push(vec![r.d.clone(), p.x.clone(), p.y.clone(), p.outcome.into()]);
                }
            }
            t.write(Format::Csv, out)?;
        }
        Format::Text => {
            for r in &reports {
                let status = serde_json::to_value(r.status)?;
                write_line(
                    out,
                    &format!(
                        "{} {} {}/{} pairs {}",
                        r.d,
                        r.mode,
                        r.pairs.len(),
                        r.planned,
                        status.as_str().unwrap_or_default()
                    ),
                )?;
            }
        }
    }
    Ok(if reports.iter().any(|r| r.status == SweepStatus::Violation) {
        EXIT_CERTIFICATE
    } else if reports.iter().any(|r| r.status == SweepStatus::Interrupted) || reports.len() < targets.len() {
        EXIT_PENDING
    } else {
        EXIT_OK
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    match cli.command {
        Command::Hecke { expr } => {
            let cfg = config(g, None, None)?;
            let h = hecke(&cfg)?;
            let v = evaluate(&h, &expr)?;
            write_line(out, &format_value(&h, &v))?;
            Ok(EXIT_OK)
        }
        Command::Rs { perm } => {
            let cfg = config(g, None, None)?;
            let w = parse_perm(g.n, cfg.degree, &perm)?;
            let (p, q) = rs(&w);
            let j = RsJson {
                w: w.to_one_line_string(),
                compressed: w.to_compressed(),
                p: rows_json(&p),
                q: rows_json(&q),
                shape: p.shape().parts().to_vec(),
                right_descents: w.descents(Side::Right),
                left_descents: w.descents(Side::Left),
                a: a_function(&w),
            };
            match cfg.format {
                Format::Json => write_json(&j, out)?,
                _ => {
                    let mut t = Table::new(vec!["field", "value"]);
                    t.push(vec!["w".into(), j.w.clone()]);
                    t.push(vec!["compressed".into(), j.compressed.clone()]);
                    t.push(vec!["P".into(), p.to_string()]);
                    t.push(vec!["Q".into(), q.to_string()]);
                    t.push(vec!["shape".into(), p.shape().to_string()]);
                    t.push(vec!["D_R".into(), format!("{:?}", j.right_descents)]);
                    t.push(vec!["D_L".into(), format!("{:?}", j.left_descents)]);
                    t.push(vec!["a".into(), j.a.to_string()]);
                    emit_table(&t, cfg.format, out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Cells { perm, side } => {
            let cfg = config(g, None, None)?;
            let w = parse_perm(g.n, cfg.degree, &perm)?;
            let side = match side {
                CellSide::Left => Side::Left,
                CellSide::Right => Side::Right,
            };
            let d = cell_involution(side, &w);
            let mut t = Table::new(vec!["member", "compressed", "involution"]);
            for m in cell_members(side, &w) {
                t.push(vec![m.to_one_line_string(), m.to_compressed(), (m == d).to_string()]);
            }
            emit_table(&t, cfg.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Patterns { perm, verify } => {
            let cfg = config(g, None, None)?;
            let w = parse_perm(g.n, cfg.degree, &perm)?;
            let h = if verify { Some(load_hecke(w.degree(), cfg.cache_dir.as_deref())?.0) } else { None };
            let mut all = Vec::new();
            for wit in all_witnesses(&w) {
                let checked = match &h {
                    Some(h) => Some(verify_witness(h, &w, &wit)?),
                    None => None,
                };
                all.push(WitnessJson {
                    pattern: wit.pattern.to_one_line_string(),
                    position: wit.position,
                    x_word: wit.x.to_word_string(),
                    y_word: wit.y.to_word_string(),
                    certificate_checked: checked,
                });
            }
            let failed = all.iter().any(|w| w.certificate_checked == Some(false));
            match cfg.format {
                Format::Json => write_json(&all, out)?,
                f => {
                    let mut t = Table::new(vec!["pattern", "position", "x_word", "y_word", "certificate_checked"]);
                    for w in &all {
                        let c = w.certificate_checked.map_or(String::from("-"), |b| b.to_string());
                        t.push(vec![w.pattern.clone(), w.position.to_string(), w.x_word.clone(), w.y_word.clone(), c]);
                    }
                    emit_table(&t, f, out)?;
                }
            }
            Ok(if failed { EXIT_CERTIFICATE } else { EXIT_OK })
        }
        Command::Classify { mode, records, force_sweep, resume } => {
            let cfg = config(g, mode, resume)?;
            let h = hecke(&cfg)?;
            let mut recs = with_pool(&cfg, || Ok(classify_all(&h, cfg.mode)?))?;
            if force_sweep {
                force_graded_sweeps(&cfg, &h, &mut recs)?;
            }
            let report = ClassifyReport::new(&recs);
            match (cfg.format, records) {
                (Format::Json, false) => write_json(&report, out)?,
                (Format::Text, false) => write_line(out, &report.summary_line())?,
                (f, _) => emit_table(&verdict_table(&recs), f, out)?,
            }
            Ok(classify_exit(&recs))
        }
        Command::Tables { which } => {
            let cfg = config(g, None, None)?;
            let (table, code) = match which.as_str() {
                "1" => (table1(cfg.degree)?, EXIT_OK),
                "5" => (table5_table()?, EXIT_OK),
                "km" => {
                    let r = run_indec_pipeline(&hecke(&cfg)?)?;
                    let code = if r.all_resolved() { EXIT_OK } else { EXIT_CERTIFICATE };
                    (km_table(&r), code)
                }
                "2" | "3" | "4" | "verdicts" | "counts" => {
                    let recs = classify(&cfg)?;
                    let code = classify_exit(&recs);
                    let t = match which.as_str() {
                        "2" => table2(&recs),
                        "3" => table3(&hecke(&cfg)?, &recs)?,
                        "4" => table4(&recs),
                        "verdicts" => verdict_table(&recs),
                        _ => counts_table(&recs),
                    };
                    let bad = which == "3" && t.rows.iter().any(|r| r.last().is_some_and(|c| c != "true"));
                    (t, if bad { EXIT_CERTIFICATE } else { code })
                }
                other => return Err(Error::Config(format!("unknown table {other:?}"))),
            };
            emit_table(&table, cfg.format, out)?;
            Ok(code)
        }
        Command::Indec => {
            let cfg = config(g, None, None)?;
            let report = run_indec_pipeline(&hecke(&cfg)?)?;
            let j = IndecJson::new(&report);
            match cfg.format {
                Format::Json => write_json(&j, out)?,
                Format::Csv => emit_table(&km_table(&report), Format::Csv, out)?,
                Format::Text => {
                    for line in j.text() {
                        write_line(out, &line)?;
                    }
                }
            }
            Ok(if report.all_resolved() && report.criterion_failures() == 0 { EXIT_OK } else { EXIT_CERTIFICATE })
        }
        Command::Sweep { ds, positive, mode, resume, stop_after } => {
            let cfg = config(g, mode, resume)?;
            cmd_sweep(&cfg, &ds, positive, g.n, stop_after, out)
        }
        Command::Prebuild => {
            let cfg = config(g, None, None)?;
            let dir = cfg
                .cache_dir
                .clone()
                .ok_or_else(|| Error::Config("prebuild needs --cache-dir or KOSTANT_CACHE_DIR".into()))?;
            let (_, status) = load_hecke(cfg.degree, Some(&dir))?;
            let what = match status {
                CacheStatus::Hit => "present",
                CacheStatus::Built => "built",
                CacheStatus::Uncached => "uncached",
            };
            write_line(out, &format!("{what} {}", cache_file(&dir, cfg.degree).display()))?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name), runs the command writing to
/// `out` and `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
