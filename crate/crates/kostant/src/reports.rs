//! Tables and reports assembled from the core pipeline.

use std::collections::BTreeMap;

use kostant_core::indec::{table5, CandidateOutcome, IndecReport, KmRule, Symmetry};
use kostant_core::pipeline::{
    counts_report, parabolic_lift_table, pattern_table, table3::certify_row, Provenance, Verdict, VerdictRecord,
};
use kostant_core::tableaux::shape;
use kostant_core::{Hecke, Permutation};
use serde::Serialize;

use crate::error::Result;
use crate::output::Table;

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(sep)
}

fn parts(p: &kostant_core::Partition) -> String {
    join(p.parts(), ",")
}

/// Parabolic lifts: `d`, one-line word, `I`, `w`, components of `w`, `K(d)`.
pub fn table1(n: usize) -> Result<Table> {
    let mut t = Table::new(vec!["d", "one_line", "I", "w", "components", "K"]);
    for r in parabolic_lift_table(n)? {
        t.push(vec![
            r.d.to_compressed(),
            r.d.to_one_line_string(),
            join(&r.subset, ","),
            r.w.to_compressed(),
            join(r.components.iter().map(|c| c.to_one_line_string()), " "),
            r.kostant.to_string(),
        ]);
    }
    Ok(t)
}

/// Fully commutative involutions outside the lifts: `d`, factorisation, `K(d)`.
pub fn table2(records: &[VerdictRecord]) -> Table {
    let mut t = Table::new(vec!["d", "one_line", "factors", "K"]);
    for r in records {
        if let Provenance::FullyCommutative { factors } = &r.provenance {
            let f = if factors.is_empty() { "e".to_string() } else { join(factors, " ") };
            t.push(vec![
                r.d.to_compressed(),
                r.d.to_one_line_string(),
                f,
                (r.verdict == Verdict::Positive).to_string(),
            ]);
        }
    }
    t
}

/// Pattern-negative involutions with the first witness, its pair and whether
/// every witness certificate of the row holds.
pub fn table3(hecke: &Hecke, records: &[VerdictRecord]) -> Result<Table> {
    let ds: Vec<Permutation> =
        records.iter().filter(|r| matches!(r.provenance, Provenance::Pattern(_))).map(|r| r.d.clone()).collect();
    let mut t = Table::new(vec!["d", "one_line", "pattern", "position", "x", "y", "certified"]);
    for row in pattern_table(&ds) {
        let ok = certify_row(hecke, &row)?;
        let w = &row.witness;
        t.push(vec![
            row.d.to_compressed(),
            row.d.to_one_line_string(),
            w.pattern.to_one_line_string(),
            w.position.to_string(),
            w.x.to_compressed(),
            w.y.to_compressed(),
            ok.to_string(),
        ]);
    }
    Ok(t)
}

/// The negative involutions with their evidence.
pub fn table4(records: &[VerdictRecord]) -> Table {
    let mut t = Table::new(vec!["d", "one_line", "provenance", "evidence"]);
    for r in records.iter().filter(|r| r.verdict == Verdict::Negative) {
        t.push(vec![
            r.d.to_compressed(),
            r.d.to_one_line_string(),
            r.provenance.label().into(),
            r.provenance.evidence(),
        ]);
    }
    t
}

/// Maximal-support involutions considered by the indecomposability checks.
pub fn table5_table() -> Result<Table> {
    let mut t = Table::new(vec!["x", "one_line", "shape", "D"]);
    for x in table5()? {
        t.push(vec![
            x.to_compressed(),
            x.to_one_line_string(),
            parts(&shape(&x)),
            join(x.descents(kostant_core::perm::Side::Right), ","),
        ]);
    }
    Ok(t)
}

/// Every involution with its verdict.
pub fn verdict_table(records: &[VerdictRecord]) -> Table {
    let mut t = Table::new(vec![
        "d",
        "one_line",
        "shape",
        "verdict",
        "provenance",
        "evidence",
        "checked",
        "graded_sweep_pending",
    ]);
    for r in records {
        t.push(vec![
            r.d.to_compressed(),
            r.d.to_one_line_string(),
            parts(&shape(&r.d)),
            r.verdict.name().into(),
            r.provenance.label().into(),
            r.provenance.evidence(),
            r.checked.to_string(),
            r.graded_sweep_pending.to_string(),
        ]);
    }
    t
}

/// Positive and total involutions per shape.
pub fn counts_table(records: &[VerdictRecord]) -> Table {
    let c = counts_report(records);
    let mut t = Table::new(vec!["shape", "positive", "involutions", "positive_elements"]);
    for (sh, (pos, all)) in c.per_shape.iter().rev() {
        t.push(vec![parts(sh), pos.to_string(), all.to_string(), (*pos as u64 * sh.syt_count()).to_string()]);
    }
    t.push(vec![
        "all".into(),
        c.positive_involutions.to_string(),
        records.len().to_string(),
        c.positive_elements.to_string(),
    ]);
    t
}

/// Per-shape counts in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeCount {
    /// The shape.
    pub shape: String,
    /// Positive involutions of this shape.
    pub positive: usize,
    /// All involutions of this shape.
    pub involutions: usize,
}

/// The classification in serialisable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    /// The degree.
    pub n: usize,
    /// Positive involutions.
    pub positive: usize,
    /// Negative involutions.
    pub negative: usize,
    /// Involutions without a verdict.
    pub pending: usize,
    /// Positive elements, summed over left cells.
    pub positive_elements: u64,
    /// Positive involutions whose graded pair sweep is open.
    pub graded_sweep_pending: Vec<String>,
    /// Records whose recomputed checks failed.
    pub failed_checks: Vec<String>,
    /// Counts per shape, largest shape first.
    pub per_shape: Vec<ShapeCount>,
}

impl ClassifyReport {
    /// Summarises `records`.
    pub fn new(records: &[VerdictRecord]) -> Self {
        let c = counts_report(records);
        ClassifyReport {
            n: c.n,
            positive: c.positive_involutions,
            negative: c.negative_involutions,
            pending: c.pending_involutions,
            positive_elements: c.positive_elements,
            graded_sweep_pending: records
                .iter()
                .filter(|r| r.graded_sweep_pending)
                .map(|r| r.d.to_compressed())
                .collect(),
            failed_checks: records.iter().filter(|r| !r.checked).map(|r| r.d.to_compressed()).collect(),
            per_shape: c
                .per_shape
                .iter()
                .rev()
                .map(|(sh, &(positive, involutions))| ShapeCount { shape: parts(sh), positive, involutions })
                .collect(),
        }
    }

    /// `125 positive / 107 negative`, with pending involutions appended when
    /// there are any.
    pub fn summary_line(&self) -> String {
        let mut s = format!("{} positive / {} negative", self.positive, self.negative);
        if self.pending > 0 {
            s.push_str(&format!(" / {} pending", self.pending));
        }
        s
    }
}

/// A step of a module argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    /// The statement.
    pub claim: String,
    /// Whether it was confirmed.
    pub ok: bool,
}

/// One candidate of an indecomposability case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateJson {
    /// The candidate in compressed notation.
    pub x: String,
    /// The outcome name.
    pub outcome: &'static str,
    /// `[θ_x L(d) : L(d)]` when computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    /// `a(x)` when the criterion was applied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    /// The case a reduction leads to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    /// The reduced pair and the symmetry used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub via: Option<String>,
    /// Recomputed inputs of a module argument.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckJson>,
}

impl CandidateJson {
    fn new(x: &Permutation, o: &CandidateOutcome) -> Self {
        let mut c = CandidateJson {
            x: x.to_compressed(),
            outcome: o.name(),
            polynomial: None,
            a: None,
            target: None,
            via: None,
            checks: Vec::new(),
        };
        match o {
            CandidateOutcome::Zero => {}
            CandidateOutcome::CriterionMet { polynomial, a } => {
                c.polynomial = Some(polynomial.to_string());
                c.a = Some(*a);
            }
            CandidateOutcome::SymmetryReduced { symmetry, target, x, d } => {
                let s = match symmetry {
                    Symmetry::Conjugation => "conjugation",
                    Symmetry::Duality => "duality",
                };
                c.target = Some(target.clone());
                c.via = Some(format!("{s} KM({}, {})", x.to_compressed(), d.to_compressed()));
            }
            CandidateOutcome::PaperArgued { about, checks } => {
                c.via = Some(format!("KM({}, {})", about.0.to_compressed(), about.1.to_compressed()));
                c.checks = checks.iter().map(|s| CheckJson { claim: s.claim.clone(), ok: s.ok }).collect();
            }
            CandidateOutcome::Unresolved { polynomial } => c.polynomial = Some(polynomial.to_string()),
        }
        c
    }
}

/// One indecomposability case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseJson {
    /// Case identifier.
    pub id: String,
    /// The involution.
    pub d: String,
    /// Candidates in order.
    pub candidates: Vec<CandidateJson>,
    /// `resolved` or `unresolved`.
    pub status: &'static str,
}

/// Totals of the indecomposability run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndecSummary {
    /// Number of involutions.
    pub involutions: usize,
    /// Involutions with `KM(⋆, d)` settled.
    pub resolved: usize,
    /// Candidates left unsettled.
    pub criterion_failures: usize,
    /// Involutions per rule.
    pub rules: BTreeMap<&'static str, usize>,
}

/// The indecomposability run in serialisable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndecJson {
    /// Checked cases in listing order.
    pub cases: Vec<CaseJson>,
    /// Totals.
    pub summary: IndecSummary,
}

impl IndecJson {
    /// Converts a core report.
    pub fn new(report: &IndecReport) -> Self {
        let cases = report
            .cases
            .iter()
            .map(|c| CaseJson {
                id: c.id.clone(),
                d: c.d.to_compressed(),
                candidates: c.candidates.iter().map(|(x, o)| CandidateJson::new(x, o)).collect(),
                status: if c.resolved() { "resolved" } else { "unresolved" },
            })
            .collect();
        let mut rules = BTreeMap::new();
        for r in &report.records {
            *rules.entry(r.rule.label()).or_insert(0) += 1;
        }
        let summary = IndecSummary {
            involutions: report.records.len(),
            resolved: report.records.iter().filter(|r| r.resolved).count(),
            criterion_failures: report.criterion_failures(),
            rules,
        };
        IndecJson { cases, summary }
    }

    /// One line per case and a closing total.
    pub fn text(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.cases {
            let outcomes: Vec<String> = c.candidates.iter().map(|k| format!("{}:{}", k.x, k.outcome)).collect();
            let list = if outcomes.is_empty() { "no candidates".to_string() } else { outcomes.join(" ") };
            out.push(format!("{:<4} {:<16} {:<10} {list}", c.id, c.d, c.status));
        }
        let rules: Vec<String> = self.summary.rules.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push(format!(
            "KM resolved for {} of {} involutions ({}); {} criterion failures",
            self.summary.resolved,
            self.summary.involutions,
            rules.join(", "),
            self.summary.criterion_failures
        ));
        out
    }
}

/// Records of the per-involution rules, for tables.
pub fn km_table(report: &IndecReport) -> Table {
    let mut t = Table::new(vec!["d", "one_line", "rule", "detail", "resolved"]);
    for r in &report.records {
        let detail = match &r.rule {
            KmRule::ParabolicLift { subset, w, support } => {
                format!("I={{{}}} w={} |Sup|={support}", join(subset, ","), w.to_compressed())
            }
            KmRule::KostantPositive { case } | KmRule::Checked { case } => format!("case {case}"),
            KmRule::FullyCommutative | KmRule::None => String::new(),
        };
        t.push(vec![
            r.d.to_compressed(),
            r.d.to_one_line_string(),
            r.rule.label().into(),
            detail,
            r.resolved.to_string(),
        ]);
    }
    t
}
