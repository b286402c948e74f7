//! Whether `θ_x L(d)` is zero or indecomposable (`KM(x, d)`) for `n = 7`.
//!
//! A pair is settled by one of: the class `[θ_x L(d)]` vanishes; the
//! multiplicity `[θ_x L(d) : L(d)]` has coefficient `1` at `v^{-a(x)}`; the
//! module argument recorded for two pairs, whose Hecke-level inputs are
//! recomputed; or a reduction to another pair, either through conjugation by
//! `w_0` or through `KM(x, y) = KM(y^{-1} w_0, w_0 x^{-1})` followed by the
//! cell invariance of both arguments.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cato::theta_class;
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::laurent::LaurentPoly;
use crate::perm::{enumerate_involutions, Permutation, Side};
use crate::pipeline::cases::{CaseKind, StepOutcome, CASES};
use crate::pipeline::table1::parabolic_lift_table;
use crate::tableaux::{a_function, cell_involution, shape, Partition};

/// The involutions to check, as `(case, d)`; `b` cases are `w_0`-conjugates
/// of the `a` cases.
pub const INDEC_CASES: [(&str, &str); 38] = [
    ("1a", "124_156_4"),
    ("1b", "13_1456_3"),
    ("2a", "13_145_3"),
    ("2b", "24_256_4"),
    ("3a", "14_35_36_4"),
    ("3b", "2_13_14_26"),
    ("4a", "24_25_4"),
    ("4b", "3_245_3"),
    ("5a", "23_24_2"),
    ("5b", "34_35_3"),
    ("6a", "12_145_4"),
    ("6b", "23_256_5"),
    ("7a", "123_156_5"),
    ("7b", "12_1456_4"),
    ("8a", "134_3"),
    ("8b", "34_36"),
    ("9a", "135_36_5"),
    ("9b", "2_134_26"),
    ("10a", "2_13_15_26_5"),
    ("10b", "2_14_35_26_4"),
    ("11a", "23_24_26"),
    ("11b", "134_35_3"),
    ("12a", "23_25"),
    ("12b", "245_4"),
    ("13a", "23_26"),
    ("13b", "145_4"),
    ("14a", "234_35_2"),
    ("14b", "23_245_2"),
    ("15a", "45_4"),
    ("15b", "23_2"),
    ("16a", "1345_3"),
    ("16b", "234_26"),
    ("17", "12_156_5"),
    ("18", "2_135_26_5"),
    ("19", "23_24_25_2"),
    ("20", "134_36"),
    ("21", "34_3"),
    ("22", "13_24_156_3"),
];

const N: usize = 7;

fn c7(s: &str) -> Result<Permutation> {
    Permutation::from_compressed(N, s)
}

fn descent_set(x: &Permutation) -> BTreeSet<usize> {
    x.descents(Side::Right).into_iter().collect()
}

fn max_support(x: &Permutation) -> bool {
    x.support().len() == N - 1
}

/// Involutions of maximal support with `sh(d) ≺ sh(x)` and `D(x) ⊆ D(d)`.
pub fn reduction_candidates(d: &Permutation) -> Result<Vec<Permutation>> {
    if d.degree() != N {
        return Err(Error::UnsupportedDegree(d.degree()));
    }
    let sh = shape(d);
    let dd = descent_set(d);
    Ok(enumerate_involutions(N)
        .into_iter()
        .filter(|x| max_support(x) && sh.strictly_dominated_by(&shape(x)) && descent_set(x).is_subset(&dd))
        .collect())
}

fn a_cases() -> impl Iterator<Item = (&'static str, &'static str)> {
    INDEC_CASES.iter().copied().filter(|(id, _)| !id.ends_with('b'))
}

/// The list of `x` to check: every involution of maximal support whose shape
/// strictly dominates `(3,2,2)`, together with the reduction candidates of the
/// `a` cases whose shape does not dominate `(3,2,2)`. Sorted by shape (larger
/// first in lex order of parts) and then by one-line word.
pub fn table5() -> Result<Vec<Permutation>> {
    let base = Partition::new(alloc::vec![3, 2, 2])?;
    let mut out: BTreeSet<(Vec<usize>, Permutation)> = BTreeSet::new();
    let mut add = |x: Permutation| {
        let key: Vec<usize> = shape(&x).parts().iter().map(|p| N - p).collect();
        out.insert((key, x));
    };
    for x in enumerate_involutions(N) {
        if max_support(&x) && base.strictly_dominated_by(&shape(&x)) {
            add(x);
        }
    }
    for (_, d) in a_cases() {
        let d = c7(d)?;
        if !base.dominated_by(&shape(&d)) {
            for x in reduction_candidates(&d)? {
                add(x);
            }
        }
    }
    Ok(out.into_iter().map(|(_, x)| x).collect())
}

fn case_of(d: &Permutation) -> Result<Option<&'static str>> {
    for (id, w) in INDEC_CASES {
        if &c7(w)? == d {
            return Ok(Some(id));
        }
    }
    Ok(None)
}

/// The members of `table5()` with `sh(d) ≺ sh(x)` and `D(x) ⊆ D(d)`, for `d`
/// one of the `a` cases or a case without partner.
pub fn table5_candidates(d: &Permutation) -> Result<Vec<Permutation>> {
    match case_of(d)? {
        Some(id) if !id.ends_with('b') => {}
        _ => return Err(Error::Precondition(format!("{} is not one of the listed cases", d.to_compressed()))),
    }
    let sh = shape(d);
    let dd = descent_set(d);
    Ok(table5()?.into_iter().filter(|x| sh.strictly_dominated_by(&shape(x)) && descent_set(x).is_subset(&dd)).collect())
}

/// `[θ_x L(d) : L(d)]` when it is zero or has coefficient `1` at
/// `v^{-a(x)}`; `None` otherwise.
pub fn coefficient_criterion(hecke: &Hecke, x: &Permutation, d: &Permutation) -> Result<Option<LaurentPoly>> {
    if !x.is_involution() {
        return Err(Error::Precondition(format!("{x} is not an involution")));
    }
    let di = hecke.index(d)?;
    let c = theta_class(hecke, hecke.index(x)?, di)?.multiplicity(di);
    let a = a_exponent(x)?;
    Ok((c.is_zero() || c.coeff(-a) == 1).then_some(c))
}

fn a_exponent(x: &Permutation) -> Result<i32> {
    i32::try_from(a_function(x)).map_err(|_| Error::Overflow)
}

/// `(x, y) ↦ (y^{-1} w_0, w_0 x^{-1})`.
pub fn km_symmetry_reduce(x: &Permutation, d: &Permutation) -> Result<(Permutation, Permutation)> {
    let w0 = Permutation::longest(x.degree());
    Ok((d.inverse().compose(&w0)?, w0.compose(&x.inverse())?))
}

/// How a reduction was made.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// Conjugation of both arguments by `w_0`.
    Conjugation,
    /// `KM(x, y) = KM(y^{-1} w_0, w_0 x^{-1})` and cell invariance.
    Duality,
}

/// The way `KM(x, d)` was settled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateOutcome {
    /// `[θ_x L(d)] = 0`.
    Zero,
    /// The coefficient at `v^{-a(x)}` is `1`.
    CriterionMet {
        /// `[θ_x L(d) : L(d)]`.
        polynomial: LaurentPoly,
        /// `a(x)`.
        a: usize,
    },
    /// Settled through another pair.
    SymmetryReduced {
        /// The reduction used.
        symmetry: Symmetry,
        /// The case of the other pair.
        target: String,
        /// First argument of the other pair.
        x: Permutation,
        /// Second argument of the other pair.
        d: Permutation,
    },
    /// A module-theoretic argument whose Hecke-level inputs were recomputed.
    PaperArgued {
        /// The pair the argument is about.
        about: (Permutation, Permutation),
        /// Each input and whether it holds.
        checks: Vec<StepOutcome>,
    },
    /// Nothing applies.
    Unresolved {
        /// `[θ_x L(d) : L(d)]`.
        polynomial: LaurentPoly,
    },
}

impl CandidateOutcome {
    /// `zero`, `criterion_met`, `symmetry_reduced`, `paper_argued` or
    /// `unresolved`.
    pub fn name(&self) -> &'static str {
        match self {
            CandidateOutcome::Zero => "zero",
            CandidateOutcome::CriterionMet { .. } => "criterion_met",
            CandidateOutcome::SymmetryReduced { .. } => "symmetry_reduced",
            CandidateOutcome::PaperArgued { .. } => "paper_argued",
            CandidateOutcome::Unresolved { .. } => "unresolved",
        }
    }

    /// Whether the pair is settled.
    pub fn resolved(&self) -> bool {
        match self {
            CandidateOutcome::Unresolved { .. } => false,
            CandidateOutcome::PaperArgued { checks, .. } => checks.iter().all(|c| c.ok),
            _ => true,
        }
    }
}

/// One checked involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndecCase {
    /// Case identifier.
    pub id: String,
    /// The involution.
    pub d: Permutation,
    /// Every candidate with its outcome.
    pub candidates: Vec<(Permutation, CandidateOutcome)>,
}

impl IndecCase {
    /// Whether every candidate is settled.
    pub fn resolved(&self) -> bool {
        self.candidates.iter().all(|(_, o)| o.resolved())
    }
}

fn check(claim: String, ok: bool) -> StepOutcome {
    StepOutcome { claim, ok }
}

fn degree_coeff(hecke: &Hecke, x: &Permutation, y: &Permutation, z: &Permutation, k: i32) -> Result<i64> {
    let cl = theta_class(hecke, hecke.index(x)?, hecke.index(y)?)?;
    Ok(cl.multiplicity(hecke.index(z)?).coeff(k))
}

/// Hecke-level inputs of the argument for `KM(123456_5, 123_156_5)`.
fn checks_7a(hecke: &Hecke) -> Result<Vec<StepOutcome>> {
    let d = c7("123_156_5")?;
    let u = c7("123_256_5")?;
    let x = c7("123456_5")?;
    let us = u.mul_simple_right(4);
    let ds = d.mul_simple_right(4);
    let mut out = Vec::new();
    let class = theta_class(hecke, hecke.index(&x)?, hecke.index(&d)?)?;
    let (lo, hi) = class.degree_bounds().unwrap_or((0, 0));
    out.push(check(format!("θ_{} L(d) lives in degrees -4..4", x.to_compressed()), lo >= -4 && hi <= 4));
    let low = class.constituents_in_degree(-4);
    out.push(check(format!("degree -4 holds only L({})", u.to_compressed()), low == [(hecke.index(&u)?, 1)]));
    out.push(check(String::from("L(d) occurs once in degree -3"), class.multiplicity(hecke.index(&d)?).coeff(-3) == 1));
    let ui = hecke.index(&u)?;
    let di = hecke.index(&d)?;
    out.push(check(
        format!("{} < d are Bruhat neighbours with μ = 1", u.to_compressed()),
        hecke.bruhat_leq(ui, di) && u.length() + 1 == d.length() && hecke.mu(ui, di) == 1,
    ));
    let f12 = c7("12")?;
    let f2 = c7("2")?;
    out.push(check(
        format!("[θ_12 L(d)] = [θ_2 L({})]", u.to_compressed()),
        theta_class(hecke, hecke.index(&f12)?, di)? == theta_class(hecke, hecke.index(&f2)?, ui)?,
    ));
    for (f, z, k) in [("12", &u, -1), ("12", &d, 0), ("123", &us, -1), ("123", &ds, 0)] {
        out.push(check(
            format!("L({}) occurs once in degree {k} of θ_{f} L(d)", z.to_compressed()),
            degree_coeff(hecke, &c7(f)?, &d, z, k)? == 1,
        ));
    }
    for (z, k) in [(&u, -1), (&d, 0)] {
        out.push(check(
            format!("L({}) occurs in degree {k} of θ_1234 L(d)", z.to_compressed()),
            degree_coeff(hecke, &c7("1234")?, &d, z, k)? != 0,
        ));
    }
    let usi = hecke.index(&us)?;
    let dsi = hecke.index(&ds)?;
    out.push(check(
        format!("J_4({}) = {{{}}}", us.to_compressed(), u.to_compressed()),
        us.length() == u.length() + 1 && crate::cato::jantzen_middle(hecke, usi, 4)? == [(ui, 1)],
    ));
    out.push(check(
        format!("J_4({}) = {{d}}", ds.to_compressed()),
        ds.length() == d.length() + 1 && crate::cato::jantzen_middle(hecke, dsi, 4)? == [(di, 1)],
    ));
    let linked: Vec<u32> = crate::cato::jantzen_middle(hecke, di, 3)?
        .into_iter()
        .map(|(z, _)| z)
        .filter(|&z| ext_one(hecke, z, usi))
        .collect();
    out.push(check(
        format!("in J_3(d) only L({}) extends L({})", ds.to_compressed(), us.to_compressed()),
        linked == [dsi],
    ));
    Ok(out)
}

fn ext_one(hecke: &Hecke, a: u32, b: u32) -> bool {
    if hecke.bruhat_leq(a, b) {
        hecke.mu(a, b) != 0
    } else if hecke.bruhat_leq(b, a) {
        hecke.mu(b, a) != 0
    } else {
        false
    }
}

/// Hecke-level inputs of the argument for `KM(123456_5, 12_156_5)`.
fn checks_17(hecke: &Hecke) -> Result<Vec<StepOutcome>> {
    let d = c7("12_156_5")?;
    let x = c7("123456_5")?;
    let xi = hecke.index(&x)?;
    let di = hecke.index(&d)?;
    let adj = x.inverse();
    let mut out = Vec::new();
    let class = theta_class(hecke, xi, di)?;
    let (lo, hi) = class.degree_bounds().unwrap_or((0, 0));
    out.push(check(format!("θ_{} L(d) lives in degrees -4..4", x.to_compressed()), lo >= -4 && hi <= 4));
    let low = class.constituents_in_degree(-4);
    out.push(check(String::from("degree -4 holds one simple"), low.len() == 1 && low[0].1 == 1));
    out.push(check(format!("a({}) = 3", x.to_compressed()), a_function(&x) == 3));
    let mut ok = true;
    let ai = hecke.index(&adj)?;
    let deg3 = class.constituents_in_degree(-3);
    for &(w, _) in &deg3 {
        let t = theta_class(hecke, ai, w)?;
        ok &= t.is_zero() || t.multiplicity(di).coeff(-3) == 0;
    }
    out.push(check(
        format!(
            "for all {} simples L(w) in degree -3, θ_{} L(w) = 0 or has no L(d) in degree -3",
            deg3.len(),
            adj.to_compressed()
        ),
        ok,
    ));
    Ok(out)
}

/// Pairs settled by a module argument: `(case, x)`, the argument being about
/// an element of the right cell of `x`.
const PAPER_ARGUED: [(&str, &str, &str); 2] = [("7a", "123456_1", "123456_5"), ("17", "123456_1", "123456_5")];

fn direct(hecke: &Hecke, id: &str, x: &Permutation, d: &Permutation) -> Result<CandidateOutcome> {
    let di = hecke.index(d)?;
    let class = theta_class(hecke, hecke.index(x)?, di)?;
    if class.is_zero() {
        return Ok(CandidateOutcome::Zero);
    }
    let c = class.multiplicity(di);
    if c.coeff(-a_exponent(x)?) == 1 {
        return Ok(CandidateOutcome::CriterionMet { polynomial: c, a: a_function(x) });
    }
    for (case, w, about) in PAPER_ARGUED {
        if case == id && &c7(w)? == x {
            let about = c7(about)?;
            let same = crate::tableaux::same_right_cell(x, &about);
            let mut checks = alloc::vec![check(format!("{} ∼_R {}", x.to_compressed(), about.to_compressed()), same)];
            checks.extend(if case == "7a" { checks_7a(hecke)? } else { checks_17(hecke)? });
            return Ok(CandidateOutcome::PaperArgued { about: (about, d.clone()), checks });
        }
    }
    Ok(CandidateOutcome::Unresolved { polynomial: c })
}

fn partner(id: &str) -> Option<String> {
    id.strip_suffix('b').map(|s| format!("{s}a"))
}

/// Settles `KM(x, d)` for `d` the involution of case `id`.
pub fn resolve(hecke: &Hecke, id: &str, x: &Permutation, d: &Permutation) -> Result<CandidateOutcome> {
    let out = direct(hecke, id, x, d)?;
    if out.resolved() {
        return Ok(out);
    }
    if let Some(a) = partner(id) {
        let (cx, cd) = (x.w0_conjugate(), d.w0_conjugate());
        if direct(hecke, &a, &cx, &cd)?.resolved() {
            return Ok(CandidateOutcome::SymmetryReduced { symmetry: Symmetry::Conjugation, target: a, x: cx, d: cd });
        }
    }
    let (x1, d1) = km_symmetry_reduce(x, d)?;
    let (x2, d2) = (cell_involution(Side::Right, &x1), cell_involution(Side::Left, &d1));
    if let Some(target) = case_of(&d2)? {
        let mut settled = direct(hecke, target, &x2, &d2)?.resolved();
        if !settled {
            if let Some(a) = partner(target) {
                settled = direct(hecke, &a, &x2.w0_conjugate(), &d2.w0_conjugate())?.resolved();
            }
        }
        if settled {
            return Ok(CandidateOutcome::SymmetryReduced {
                symmetry: Symmetry::Duality,
                target: String::from(target),
                x: x2,
                d: d2,
            });
        }
    }
    Ok(out)
}

/// Runs one case over its reduction candidates.
pub fn run_indec_case(hecke: &Hecke, id: &str) -> Result<IndecCase> {
    let (_, w) =
        INDEC_CASES.iter().find(|(i, _)| *i == id).ok_or_else(|| Error::Precondition(format!("unknown case {id}")))?;
    let d = c7(w)?;
    let mut candidates = Vec::new();
    for x in reduction_candidates(&d)? {
        let o = resolve(hecke, id, &x, &d)?;
        candidates.push((x, o));
    }
    Ok(IndecCase { id: String::from(id), d, candidates })
}

/// Why `KM(⋆, d)` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KmRule {
    /// `d ∼_L w w_0^I w_0` and `|Sup(w_0 w_0^I w^{-1} w_0)| <= 5`.
    ParabolicLift {
        /// The subset `I`.
        subset: Vec<usize>,
        /// The element `w`.
        w: Permutation,
        /// `|Sup(w_0 w_0^I w^{-1} w_0)|`.
        support: usize,
    },
    /// Fully commutative; quoted from the literature.
    FullyCommutative,
    /// Kostant positive, which includes `KM(⋆, d)`.
    KostantPositive {
        /// The case script.
        case: String,
    },
    /// Checked candidate by candidate.
    Checked {
        /// The case identifier.
        case: String,
    },
    /// Nothing applies.
    None,
}

impl KmRule {
    /// Short label.
    pub fn label(&self) -> &'static str {
        match self {
            KmRule::ParabolicLift { .. } => "parabolic_lift",
            KmRule::FullyCommutative => "fully_commutative",
            KmRule::KostantPositive { .. } => "kostant_positive",
            KmRule::Checked { .. } => "checked",
            KmRule::None => "none",
        }
    }
}

/// `KM(⋆, d)` for one involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmRecord {
    /// The involution.
    pub d: Permutation,
    /// The rule.
    pub rule: KmRule,
    /// Whether the rule's premise was confirmed.
    pub resolved: bool,
}

/// The outcome over all involutions of `S_7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndecReport {
    /// The checked cases in listing order.
    pub cases: Vec<IndecCase>,
    /// One record per involution, sorted by one-line word.
    pub records: Vec<KmRecord>,
}

impl IndecReport {
    /// Number of candidates that are not settled.
    pub fn criterion_failures(&self) -> usize {
        self.cases.iter().flat_map(|c| &c.candidates).filter(|(_, o)| !o.resolved()).count()
    }

    /// Whether every involution is settled.
    pub fn all_resolved(&self) -> bool {
        self.records.iter().all(|r| r.resolved)
    }
}

/// Runs every case and assigns a rule to every involution of `S_7`.
pub fn run_indec_pipeline(hecke: &Hecke) -> Result<IndecReport> {
    if hecke.degree() != N {
        return Err(Error::UnsupportedDegree(hecke.degree()));
    }
    let w0 = Permutation::longest(N);
    let mut records: alloc::collections::BTreeMap<Permutation, KmRecord> = alloc::collections::BTreeMap::new();
    for row in parabolic_lift_table(N)? {
        let ctx = crate::perm::ParabolicContext::new(N, &row.subset)?;
        let z = w0.compose(&ctx.longest_element())?.compose(&row.w.inverse())?.compose(&w0)?;
        let support = z.support().len();
        let rule = KmRule::ParabolicLift { subset: row.subset, w: row.w, support };
        records.insert(row.d.clone(), KmRecord { d: row.d, rule, resolved: support <= 5 });
    }
    for d in enumerate_involutions(N) {
        if !records.contains_key(&d) && shape(&d).parts().len() <= 2 {
            records.insert(d.clone(), KmRecord { d, rule: KmRule::FullyCommutative, resolved: true });
        }
    }
    for script in CASES {
        if let CaseKind::Positive { .. } | CaseKind::Conjugate { .. } = script.kind {
            let d = c7(script.d)?;
            let positive = match script.kind {
                CaseKind::Positive { .. } => true,
                CaseKind::Conjugate { of } => {
                    matches!(crate::pipeline::cases::case_by_id(of).map(|c| c.kind), Some(CaseKind::Positive { .. }))
                }
                CaseKind::Negative { .. } => false,
            };
            if positive {
                let rule = KmRule::KostantPositive { case: String::from(script.id) };
                records.insert(d.clone(), KmRecord { d, rule, resolved: true });
            }
        }
    }
    let mut cases = Vec::new();
    for (id, w) in INDEC_CASES {
        let c = run_indec_case(hecke, id)?;
        let d = c7(w)?;
        if records.contains_key(&d) {
            return Err(Error::Precondition(format!("case {id} overlaps an earlier rule")));
        }
        let rule = KmRule::Checked { case: String::from(id) };
        records.insert(d.clone(), KmRecord { d, rule, resolved: c.resolved() });
        cases.push(c);
    }
    for d in enumerate_involutions(N) {
        records.entry(d.clone()).or_insert(KmRecord { d, rule: KmRule::None, resolved: false });
    }
    Ok(IndecReport { cases, records: records.into_values().collect() })
}
