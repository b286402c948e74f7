//! Distinguishing `θ_x L(d)` from `θ_y L(d)`.
//!
//! For an involution `d` the plan takes every pair `d_1 ≠ d_2` of involutions
//! below `d` in the right order with the same shape, and then every pair
//! `(x, y)` with `x ∼_R d_1`, `y ∼_R d_2` and `x ∼_L y`. Each pair is checked
//! for `Ĥ_d H̲_x ≠ Ĥ_d H̲_y` (graded) or for inequality after `v = 1`.
//!
//! The images `ev(Ĥ_w)` form a basis of the group ring, so the ungraded test
//! compares dual KL coordinates evaluated at `v = 1`.

use alloc::vec::Vec;

use crate::cato::{leq_r_involutions_below, ThetaOnSimple};
use crate::error::Result;
use crate::hecke::Hecke;
use crate::perm::Permutation;
use crate::tableaux::{rs, rs_inverse, StandardTableau};

/// Graded or ungraded comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepMode {
    /// Compare `Ĥ_d H̲_x` and `Ĥ_d H̲_y`.
    Graded,
    /// Compare their images under `ev`.
    Ev,
}

impl SweepMode {
    /// `graded` or `ev`.
    pub fn name(self) -> &'static str {
        match self {
            SweepMode::Graded => "graded",
            SweepMode::Ev => "ev",
        }
    }

    /// Parses `graded` or `ev`.
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "graded" => Some(SweepMode::Graded),
            "ev" => Some(SweepMode::Ev),
            _ => None,
        }
    }
}

/// Result for one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairOutcome {
    /// The classes differ.
    Distinct,
    /// The classes agree.
    Equal,
}

impl PairOutcome {
    /// `distinct` or `equal`.
    pub fn name(self) -> &'static str {
        match self {
            PairOutcome::Distinct => "distinct",
            PairOutcome::Equal => "equal",
        }
    }
}

/// Summary of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepOutcome {
    /// Number of pairs checked.
    pub checked: usize,
    /// Pairs whose classes agree.
    pub violations: Vec<(Permutation, Permutation)>,
}

fn word_key(w: &Permutation) -> Vec<usize> {
    w.reduced_word()
}

/// The planned pairs for `d`, grouped by `(d_1, d_2)` with `d_1` before `d_2`
/// in the order of lex-minimal reduced words, and within a group by the
/// common recording tableau.
pub fn kh_pair_plan(hecke: &Hecke, d: &Permutation) -> Result<Vec<(Permutation, Permutation)>> {
    let below: Vec<Permutation> =
        leq_r_involutions_below(hecke, hecke.index(d)?)?.into_iter().map(|i| hecke.element(i).clone()).collect();
    let mut below = below;
    below.sort_by_cached_key(word_key);
    let mut out = Vec::new();
    for (a, d1) in below.iter().enumerate() {
        let (p1, _) = rs(d1);
        for d2 in &below[a + 1..] {
            let (p2, _) = rs(d2);
            if p1.shape() != p2.shape() {
                continue;
            }
            for t in StandardTableau::all_of_shape(&p1.shape()) {
                out.push((rs_inverse(&p1, &t)?, rs_inverse(&p2, &t)?));
            }
        }
    }
    Ok(out)
}

/// Compares `θ_x L(d)` and `θ_y L(d)` using a memoised multiplier for `d`.
pub fn kh_check_pair(theta: &mut ThetaOnSimple<'_>, x: u32, y: u32, mode: SweepMode) -> Result<PairOutcome> {
    let a = theta.class(x)?;
    let b = theta.class(y)?;
    let equal = match mode {
        SweepMode::Graded => a == b,
        SweepMode::Ev => a.ungraded()? == b.ungraded()?,
    };
    Ok(if equal { PairOutcome::Equal } else { PairOutcome::Distinct })
}

/// Checks every pair of `plan` in memory.
pub fn kh_sweep(
    hecke: &Hecke,
    d: &Permutation,
    plan: &[(Permutation, Permutation)],
    mode: SweepMode,
) -> Result<SweepOutcome> {
    let mut theta = ThetaOnSimple::new(hecke, hecke.index(d)?)?;
    let mut out = SweepOutcome::default();
    for (x, y) in plan {
        let r = kh_check_pair(&mut theta, hecke.index(x)?, hecke.index(y)?, mode)?;
        out.checked += 1;
        if r == PairOutcome::Equal {
            out.violations.push((x.clone(), y.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_empty_plan() {
        let h = Hecke::new(4).unwrap();
        assert!(kh_pair_plan(&h, &Permutation::identity(4)).unwrap().is_empty());
    }
}
