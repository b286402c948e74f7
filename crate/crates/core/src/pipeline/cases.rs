//! Case scripts for the involutions not settled by lifts, full commutativity
//! or patterns.
//!
//! A negative case proves `θ_x L(d) ≅ θ_y L(d) ≠ 0` at the level of classes:
//! a factorisation `H̲_z H̲_y = H̲_x + ...` whose extra summands kill `L(d)`,
//! the class of `θ_z L(d)`, and vanishing of `θ_y` on its other simples.
//! Every step is a Hecke algebra identity and is recomputed. A positive case
//! checks the involutions below `d` in the right order and sweeps the
//! planned pairs.
//!
//! Element names in scripts: `d`, `x`, `y`, `d.<word>` for `d` times a
//! compressed word on the right, or a compressed word.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cato::leq_r_involutions_below;
use crate::error::{Error, Result};
use crate::hecke::{Basis, Hecke, HeckeElement};
use crate::laurent::LaurentPoly;
use crate::perm::Permutation;
use crate::pipeline::kh::{kh_pair_plan, kh_sweep, SweepMode};

/// A single verifiable claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// `H̲_a H̲_b = Σ H̲_t`.
    KlProduct {
        /// Left factor.
        a: &'static str,
        /// Right factor.
        b: &'static str,
        /// Summands, each with coefficient one.
        terms: &'static [&'static str],
    },
    /// `Ĥ_simple H̲_by = Σ p_t Ĥ_t`.
    Class {
        /// The simple module.
        simple: &'static str,
        /// The functor.
        by: &'static str,
        /// Terms with their polynomials.
        terms: &'static [(&'static str, &'static str)],
    },
    /// `Ĥ_simple H̲_by = Ĥ_simple + Σ_{u ∈ U} p_u Ĥ_u` with every `p_u`
    /// nonzero with nonnegative coefficients.
    ClassSupport {
        /// The simple module.
        simple: &'static str,
        /// The functor.
        by: &'static str,
        /// The set `U`.
        support: &'static [&'static str],
    },
    /// `Ĥ_simple H̲_by = 0`.
    Vanish {
        /// The simple module.
        simple: &'static str,
        /// The functor.
        by: &'static str,
    },
    /// `Ĥ_u H̲_by = 0` for every listed `u`.
    VanishAll {
        /// The simple modules.
        simples: &'static [&'static str],
        /// The functor.
        by: &'static str,
    },
    /// `Ĥ_simple H̲_by ≠ 0`.
    NonZero {
        /// The simple module.
        simple: &'static str,
        /// The functor.
        by: &'static str,
    },
}

/// What a case establishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    /// `K(d)` is false via the pair `(x, y)`.
    Negative {
        /// First functor.
        x: &'static str,
        /// Second functor.
        y: &'static str,
        /// Supporting identities.
        steps: &'static [Step],
    },
    /// `K(d)` is true: the involutions below `d` are as listed and every
    /// planned pair is distinguished.
    Positive {
        /// `{x ∈ I_n | x <=_R d}`.
        below: &'static [&'static str],
        /// Size of the pair plan.
        pairs: usize,
    },
    /// The `w_0`-conjugate of another case.
    Conjugate {
        /// Identifier of the original case.
        of: &'static str,
    },
}

/// A named case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseScript {
    /// Identifier such as `1a`.
    pub id: &'static str,
    /// The involution in compressed notation.
    pub d: &'static str,
    /// The content.
    pub kind: CaseKind,
}

const U7: &[&str] = &[
    "d.3",
    "d.4",
    "12_13456_5",
    "12_135_46_5",
    "d.34",
    "d.43",
    "156_1",
    "2_156_2",
    "12_13456_4",
    "12_135_46_4",
    "12_1356_3",
    "d.432",
    "1256_1",
    "12_13456_3",
    "12_135_46_3",
    "12_1356_2",
    "12356_1",
    "12_13456_2",
    "12_135_46_2",
    "123456_1",
    "1235_46_1",
    "12345_16_2",
    "2_13_24_35_46_1",
];

const U8: &[&str] = &[
    "235_36_5",
    "2_13_25_36_5",
    "2_13_24_35_36_5",
    "2_135_26_3",
    "2_135_36_5",
    "235_36_4",
    "2_135_36_4",
    "2_13_25_36_4",
    "2_135_26_4",
    "2_13_24_35_36_4",
];

const VPV: &str = "v+v^-1";

/// The scripts for `n = 7`.
pub const CASES: &[CaseScript] = &[
    CaseScript {
        id: "1a",
        d: "124_156_4",
        kind: CaseKind::Negative {
            x: "12456_2",
            y: "124_256",
            steps: &[
                Step::KlProduct { a: "65", b: "y", terms: &["123_26", "123_256_5", "x"] },
                Step::Vanish { simple: "d", by: "123_26" },
                Step::Vanish { simple: "d", by: "123_256_5" },
                Step::Class { simple: "d", by: "65", terms: &[("d", "1"), ("d.5", VPV)] },
                Step::Vanish { simple: "d.5", by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript { id: "1b", d: "13_1456_3", kind: CaseKind::Conjugate { of: "1a" } },
    CaseScript {
        id: "2a",
        d: "13_145_3",
        kind: CaseKind::Negative {
            x: "123_245_3",
            y: "3245_3",
            steps: &[
                Step::KlProduct { a: "12", b: "y", terms: &["1245_3", "x"] },
                Step::Vanish { simple: "d", by: "1245_3" },
                Step::Class { simple: "d", by: "12", terms: &[("d", "1"), ("d.2", VPV)] },
                Step::Vanish { simple: "d.2", by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript { id: "2b", d: "24_256_4", kind: CaseKind::Conjugate { of: "2a" } },
    CaseScript {
        id: "3a",
        d: "14_35_36_4",
        kind: CaseKind::Negative {
            x: "124_35_36",
            y: "4_35_36",
            steps: &[
                Step::KlProduct { a: "12", b: "y", terms: &["x"] },
                Step::Class { simple: "d", by: "12", terms: &[("d", "1"), ("d.23", "1"), ("d.2", VPV)] },
                Step::Vanish { simple: "d.23", by: "y" },
                Step::Vanish { simple: "d.2", by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript { id: "3b", d: "2_13_14_26", kind: CaseKind::Conjugate { of: "3a" } },
    CaseScript {
        id: "4a",
        d: "24_25_4",
        kind: CaseKind::Negative {
            x: "2_14_25_46",
            y: "4_25_46",
            steps: &[
                Step::KlProduct { a: "21", b: "y", terms: &["x"] },
                Step::Class { simple: "d", by: "21", terms: &[("d", "1"), ("d.1", VPV)] },
                Step::Vanish { simple: "d.1", by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript { id: "4b", d: "3_245_3", kind: CaseKind::Conjugate { of: "4a" } },
    CaseScript {
        id: "5a",
        d: "23_24_2",
        kind: CaseKind::Negative {
            x: "2_14_15_2",
            y: "2_13_14_2",
            steps: &[
                Step::KlProduct { a: "45", b: "y", terms: &["x"] },
                Step::Class { simple: "d", by: "45", terms: &[("d", "1"), ("d.56", "1"), ("d.5", VPV)] },
                Step::Vanish { simple: "d.5", by: "y" },
                Step::Vanish { simple: "d.56", by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript { id: "5b", d: "34_35_3", kind: CaseKind::Conjugate { of: "5a" } },
    CaseScript { id: "6a", d: "234_2", kind: CaseKind::Positive { below: &["234_2", "24", "2", "4", "e"], pairs: 6 } },
    CaseScript { id: "6b", d: "345_3", kind: CaseKind::Conjugate { of: "6a" } },
    CaseScript {
        id: "7",
        d: "12_156_5",
        kind: CaseKind::Negative {
            x: "2_1346_1",
            y: "12_15",
            steps: &[
                Step::KlProduct { a: "236_3", b: "y", terms: &["x"] },
                Step::ClassSupport { simple: "d", by: "236_3", support: U7 },
                Step::VanishAll { simples: U7, by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript {
        id: "8",
        d: "2_135_26_5",
        kind: CaseKind::Negative {
            x: "2_13_245_26",
            y: "25_26",
            steps: &[
                Step::KlProduct { a: "2_134", b: "y", terms: &["x", "2_13_24_26", "12_13_26", "23_26"] },
                Step::Vanish { simple: "d", by: "2_13_24_26" },
                Step::Vanish { simple: "d", by: "12_13_26" },
                Step::Vanish { simple: "d", by: "23_26" },
                Step::ClassSupport { simple: "d", by: "2_134", support: U8 },
                Step::VanishAll { simples: U8, by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript {
        id: "9",
        d: "23_24_25_2",
        kind: CaseKind::Negative {
            x: "2_13_15_16_2",
            y: "2_13_14_15_2",
            steps: &[
                Step::KlProduct { a: "56", b: "y", terms: &["x"] },
                Step::Class { simple: "d", by: "56", terms: &[("d", "1"), ("d.6", VPV)] },
                Step::Vanish { simple: "d.6", by: "y" },
                Step::NonZero { simple: "d", by: "y" },
            ],
        },
    },
    CaseScript {
        id: "10",
        d: "2345_2",
        kind: CaseKind::Positive { below: &["2345_2", "25", "2", "5", "e"], pairs: 6 },
    },
    CaseScript {
        id: "11",
        d: "3_24_25_3",
        kind: CaseKind::Positive {
            below: &["3_24_25_3", "3_14_25_3", "4_25_36_4", "34_3", "3_24_3", "4_35_4", "3", "4", "e"],
            pairs: 34,
        },
    },
];

/// Looks up a script by identifier.
pub fn case_by_id(id: &str) -> Option<&'static CaseScript> {
    CASES.iter().find(|c| c.id == id)
}

/// Outcome of one step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    /// Human-readable statement.
    pub claim: String,
    /// Whether it was confirmed.
    pub ok: bool,
}

/// Outcome of a case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateResult {
    /// Case identifier.
    pub id: String,
    /// The involution.
    pub d: Permutation,
    /// The pair for negative cases.
    pub pair: Option<(Permutation, Permutation)>,
    /// `K(d)`.
    pub kostant: bool,
    /// Number of planned pairs for positive cases.
    pub planned_pairs: usize,
    /// Every step in order, the main claim last.
    pub steps: Vec<StepOutcome>,
}

impl CertificateResult {
    /// Whether every step was confirmed.
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
    }
}

/// The result of comparing `Ĥ_d H̲_x` with `Ĥ_d H̲_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCertificate {
    /// Whether `Ĥ_d H̲_x = Ĥ_d H̲_y ≠ 0`.
    pub holds: bool,
    /// The common class when it holds.
    pub class: HeckeElement,
    /// The first simple where the classes differ, with both multiplicities.
    pub first_difference: Option<(Permutation, LaurentPoly, LaurentPoly)>,
}

/// Checks `Ĥ_d H̲_x = Ĥ_d H̲_y ≠ 0`.
pub fn negative_pair_certificate(
    hecke: &Hecke,
    d: &Permutation,
    x: &Permutation,
    y: &Permutation,
) -> Result<PairCertificate> {
    if x == y {
        return Err(Error::Precondition(format!("x and y coincide ({x})")));
    }
    let di = hecke.index(d)?;
    let a = hecke.dual_times_kl(di, hecke.index(x)?)?;
    let b = hecke.dual_times_kl(di, hecke.index(y)?)?;
    let mut keys: BTreeSet<u32> = a.support().into_iter().collect();
    keys.extend(b.support());
    let first_difference = keys
        .into_iter()
        .find(|&w| a.coeff(w) != b.coeff(w))
        .map(|w| (hecke.element(w).clone(), a.coeff(w), b.coeff(w)));
    Ok(PairCertificate { holds: first_difference.is_none() && !a.is_zero(), class: a, first_difference })
}

struct Ctx<'a> {
    hecke: &'a Hecke,
    conjugate: bool,
    d: Permutation,
    x: Option<Permutation>,
    y: Option<Permutation>,
}

impl Ctx<'_> {
    fn raw(&self, name: &str) -> Result<Permutation> {
        let n = self.hecke.degree();
        match name {
            "x" => self.x.clone().ok_or_else(|| Error::Precondition(String::from("no x in this case"))),
            "y" => self.y.clone().ok_or_else(|| Error::Precondition(String::from("no y in this case"))),
            "d" => Ok(self.d.clone()),
            _ => match name.strip_prefix("d.") {
                Some(rest) => {
                    let tail = Permutation::from_compressed(n, rest)?;
                    let tail = if self.conjugate { tail.w0_conjugate() } else { tail };
                    self.d.compose(&tail)
                }
                None => {
                    let p = Permutation::from_compressed(n, name)?;
                    Ok(if self.conjugate { p.w0_conjugate() } else { p })
                }
            },
        }
    }

    fn idx(&self, name: &str) -> Result<u32> {
        self.hecke.index(&self.raw(name)?)
    }

    fn show(&self, name: &str) -> Result<String> {
        Ok(self.raw(name)?.to_compressed())
    }
}

fn run_step(ctx: &Ctx<'_>, step: &Step) -> Result<StepOutcome> {
    let h = ctx.hecke;
    Ok(match *step {
        Step::KlProduct { a, b, terms } => {
            let got = h.kl_product(ctx.idx(a)?, ctx.idx(b)?)?;
            let want = HeckeElement::from_terms(
                h.degree(),
                Basis::Kl,
                terms.iter().map(|t| Ok((ctx.idx(t)?, LaurentPoly::one()))).collect::<Result<Vec<_>>>()?,
            )?;
            let rhs: Vec<String> = terms.iter().map(|t| ctx.show(t)).collect::<Result<_>>()?;
            StepOutcome {
                claim: format!("C({}) C({}) = C({})", ctx.show(a)?, ctx.show(b)?, rhs.join(") + C(")),
                ok: got == want,
            }
        }
        Step::Class { simple, by, terms } => {
            let got = h.dual_times_kl(ctx.idx(simple)?, ctx.idx(by)?)?;
            let mut want = HeckeElement::zero(h.degree(), Basis::DualKl);
            let mut rhs = Vec::new();
            for (t, p) in terms {
                let p = LaurentPoly::parse(p)?;
                want.add_term(ctx.idx(t)?, &p, 1)?;
                rhs.push(format!("({}) D({})", p.to_compact_string(), ctx.show(t)?));
            }
            StepOutcome {
                claim: format!("D({}) C({}) = {}", ctx.show(simple)?, ctx.show(by)?, rhs.join(" + ")),
                ok: got == want,
            }
        }
        Step::ClassSupport { simple, by, support } => {
            let s = ctx.idx(simple)?;
            let got = h.dual_times_kl(s, ctx.idx(by)?)?;
            let mut expected: BTreeSet<u32> = support.iter().map(|u| ctx.idx(u)).collect::<Result<_>>()?;
            let unit = got.coeff(s) == LaurentPoly::one();
            expected.insert(s);
            let support_ok = got.support().into_iter().collect::<BTreeSet<u32>>() == expected;
            let positive = got.terms().all(|(_, p)| p.is_nonnegative());
            StepOutcome {
                claim: format!(
                    "D({}) C({}) = D({}) + Σ p_u D(u) over {} nonzero nonnegative p_u",
                    ctx.show(simple)?,
                    ctx.show(by)?,
                    ctx.show(simple)?,
                    support.len()
                ),
                ok: unit && support_ok && positive,
            }
        }
        Step::Vanish { simple, by } => StepOutcome {
            claim: format!("D({}) C({}) = 0", ctx.show(simple)?, ctx.show(by)?),
            ok: h.dual_times_kl(ctx.idx(simple)?, ctx.idx(by)?)?.is_zero(),
        },
        Step::VanishAll { simples, by } => {
            let b = ctx.idx(by)?;
            let mut ok = true;
            for u in simples {
                ok &= h.dual_times_kl(ctx.idx(u)?, b)?.is_zero();
            }
            StepOutcome { claim: format!("D(u) C({}) = 0 for all {} listed u", ctx.show(by)?, simples.len()), ok }
        }
        Step::NonZero { simple, by } => StepOutcome {
            claim: format!("D({}) C({}) != 0", ctx.show(simple)?, ctx.show(by)?),
            ok: !h.dual_times_kl(ctx.idx(simple)?, ctx.idx(by)?)?.is_zero(),
        },
    })
}

/// Runs a case script. Positive cases sweep in `mode`.
pub fn run_case(hecke: &Hecke, script: &CaseScript, mode: SweepMode) -> Result<CertificateResult> {
    let n = hecke.degree();
    let (kind, conjugate) = match script.kind {
        CaseKind::Conjugate { of } => {
            let base = case_by_id(of).ok_or_else(|| Error::Precondition(format!("unknown case {of}")))?;
            (base.kind, true)
        }
        k => (k, false),
    };
    let d = Permutation::from_compressed(n, script.d)?;
    let mut ctx = Ctx { hecke, conjugate: false, d: d.clone(), x: None, y: None };
    if conjugate {
        let CaseKind::Conjugate { of } = script.kind else { unreachable!() };
        let base = case_by_id(of).expect("checked");
        let base_d = Permutation::from_compressed(n, base.d)?.w0_conjugate();
        let mut steps = Vec::new();
        steps.push(StepOutcome { claim: format!("{} is the w0-conjugate of {}", script.d, base.d), ok: base_d == d });
        ctx.conjugate = true;
        return finish(&mut ctx, script.id, kind, mode, steps);
    }
    finish(&mut ctx, script.id, kind, mode, Vec::new())
}

fn finish(
    ctx: &mut Ctx<'_>,
    id: &str,
    kind: CaseKind,
    mode: SweepMode,
    mut steps: Vec<StepOutcome>,
) -> Result<CertificateResult> {
    let hecke = ctx.hecke;
    match kind {
        CaseKind::Negative { x, y, steps: script } => {
            ctx.x = Some(ctx.raw(x)?);
            ctx.y = Some(ctx.raw(y)?);
            for s in script {
                steps.push(run_step(ctx, s)?);
            }
            let (xp, yp) = (ctx.x.clone().expect("set"), ctx.y.clone().expect("set"));
            let cert = negative_pair_certificate(hecke, &ctx.d, &xp, &yp)?;
            steps.push(StepOutcome {
                claim: format!(
                    "D({d}) C({}) = D({d}) C({}) != 0",
                    xp.to_compressed(),
                    yp.to_compressed(),
                    d = ctx.d.to_compressed()
                ),
                ok: cert.holds,
            });
            Ok(CertificateResult {
                id: id.to_string(),
                d: ctx.d.clone(),
                pair: Some((xp, yp)),
                kostant: false,
                planned_pairs: 0,
                steps,
            })
        }
        CaseKind::Positive { below, pairs } => {
            let di = hecke.index(&ctx.d)?;
            let got: BTreeSet<u32> = leq_r_involutions_below(hecke, di)?.into_iter().collect();
            let want: BTreeSet<u32> = below.iter().map(|b| ctx.idx(b)).collect::<Result<_>>()?;
            steps.push(StepOutcome {
                claim: format!("{} involutions x <=_R {}", below.len(), ctx.d.to_compressed()),
                ok: got == want,
            });
            let plan = kh_pair_plan(hecke, &ctx.d)?;
            steps.push(StepOutcome { claim: format!("{pairs} planned pairs"), ok: plan.len() == pairs });
            let outcome = kh_sweep(hecke, &ctx.d, &plan, mode)?;
            steps.push(StepOutcome {
                claim: format!("all planned pairs distinguished ({})", mode.name()),
                ok: outcome.violations.is_empty() && outcome.checked == plan.len(),
            });
            Ok(CertificateResult {
                id: id.to_string(),
                d: ctx.d.clone(),
                pair: None,
                kostant: true,
                planned_pairs: plan.len(),
                steps,
            })
        }
        CaseKind::Conjugate { .. } => Err(Error::Precondition(String::from("nested conjugate case"))),
    }
}
