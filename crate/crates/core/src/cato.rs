//! Category `O` at the level of Grothendieck groups: the class of
//! `θ_x L(y)` is `Ĥ_y H̲_x` written in the dual KL basis, with `[L(w)] = Ĥ_w`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hecke::{Basis, Hecke, HeckeElement, KlMultiplier};
use crate::laurent::LaurentPoly;
use crate::perm::{enumerate_involutions, Permutation, Side};
use crate::tableaux::shape;

/// The class `[M] = Σ_w c_w [L(w)]` of a graded module, stored in dual KL
/// coordinates; `c_w` is the graded multiplicity of `L(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleClassVector(HeckeElement);

impl SimpleClassVector {
    /// Wraps an element in dual KL coordinates.
    pub fn new(x: HeckeElement) -> Result<Self> {
        if x.basis() != Basis::DualKl {
            return Err(Error::Precondition(alloc::string::String::from("dual KL coordinates expected")));
        }
        Ok(SimpleClassVector(x))
    }

    /// The underlying Hecke element.
    pub fn element(&self) -> &HeckeElement {
        &self.0
    }

    /// Graded multiplicity of `L(w)`.
    pub fn multiplicity(&self, w: u32) -> LaurentPoly {
        self.0.coeff(w)
    }

    /// Whether the module is zero.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Lowest and highest `v`-degree over all multiplicities.
    pub fn degree_bounds(&self) -> Option<(i32, i32)> {
        let lo = self.0.terms().filter_map(|(_, c)| c.min_degree()).min()?;
        let hi = self.0.terms().filter_map(|(_, c)| c.max_degree()).max()?;
        Some((lo, hi))
    }

    /// Simples `L(w)` occurring in degree `k` with their multiplicities.
    pub fn constituents_in_degree(&self, k: i32) -> Vec<(u32, i64)> {
        self.0.terms().map(|(w, c)| (w, c.coeff(k))).filter(|&(_, c)| c != 0).collect()
    }

    /// Ungraded class (`v = 1`), a vector over the basis `ev(Ĥ_w)`.
    pub fn ungraded(&self) -> Result<BTreeMap<u32, i64>> {
        let mut out = BTreeMap::new();
        for (w, c) in self.0.terms() {
            let a = c.eval_at_one()?;
            if a != 0 {
                out.insert(w, a);
            }
        }
        Ok(out)
    }
}

/// `[θ_x L(y)] = Ĥ_y H̲_x`.
pub fn theta_class(hecke: &Hecke, x: u32, y: u32) -> Result<SimpleClassVector> {
    SimpleClassVector::new(hecke.dual_times_kl(y, x)?)
}

/// Memoised classes `[θ_x L(y)]` for a fixed `y` and many `x`.
#[derive(Debug)]
pub struct ThetaOnSimple<'a> {
    y: u32,
    inner: KlMultiplier<'a>,
}

impl<'a> ThetaOnSimple<'a> {
    /// Prepares the computation of `θ_x L(y)` for varying `x`.
    pub fn new(hecke: &'a Hecke, y: u32) -> Result<Self> {
        let base = HeckeElement::basis_element(hecke.degree(), Basis::DualKl, y);
        Ok(ThetaOnSimple { y, inner: hecke.right_multiplier(base)? })
    }

    /// The fixed simple `L(y)`.
    pub fn simple(&self) -> u32 {
        self.y
    }

    /// `[θ_x L(y)]`.
    pub fn class(&mut self, x: u32) -> Result<SimpleClassVector> {
        SimpleClassVector::new(self.inner.times(x)?.as_ref().clone())
    }

    /// Whether `θ_x L(y) ≠ 0`.
    pub fn nonzero(&mut self, x: u32) -> Result<bool> {
        Ok(!self.inner.times(x)?.is_zero())
    }
}

/// `θ_x L(y) ≠ 0`, equivalently `x <=_R y^{-1}`.
pub fn theta_nonzero(hecke: &Hecke, x: u32, y: u32) -> Result<bool> {
    Ok(!theta_class(hecke, x, y)?.is_zero())
}

/// Involutions `x` with `x <=_R d`, i.e. `θ_x L(d) ≠ 0`, in lex order.
///
/// Candidates are prefiltered by the necessary conditions
/// `sh(d) ⊴ sh(x)` and `D_L(x) ⊆ D_L(d)`.
pub fn leq_r_involutions_below(hecke: &Hecke, d: u32) -> Result<Vec<u32>> {
    let dp = hecke.element(d);
    if !dp.is_involution() {
        return Err(Error::Precondition(format!("{dp} is not an involution")));
    }
    let sh_d = shape(dp);
    let desc_d = hecke.group().descent_mask(Side::Left, d);
    let mut theta = ThetaOnSimple::new(hecke, d)?;
    let mut out = Vec::new();
    for x in enumerate_involutions(hecke.degree()) {
        let xi = hecke.index(&x)?;
        if hecke.group().descent_mask(Side::Left, xi) & !desc_d != 0 {
            continue;
        }
        if !sh_d.dominated_by(&shape(&x)) {
            continue;
        }
        if theta.nonzero(xi)? {
            out.push(xi);
        }
    }
    Ok(out)
}

/// The Jantzen middle `J_s(w)`: `(ws, 1)` together with `(x, μ(w,x))` for
/// `x > w` with `xs > x`. Requires `ws < w`.
pub fn jantzen_middle(hecke: &Hecke, w: u32, s: usize) -> Result<Vec<(u32, i64)>> {
    let g = hecke.group();
    if s == 0 || s >= hecke.degree() || !g.has_descent(Side::Right, w, s) {
        return Err(Error::Precondition(format!("s_{s} is not a right descent of {}", g.element(w))));
    }
    let mut out = alloc::vec![(g.rmul(w, s), 1)];
    for &(x, m) in hecke.kl_table().mu_up(w) {
        if !g.has_descent(Side::Right, x, s) && m > 0 {
            out.push((x, m));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `[θ_x L(y) : L(z)]`, the coefficient of `Ĥ_z` in `Ĥ_y H̲_x`.
pub fn graded_multiplicity(hecke: &Hecke, x: u32, y: u32, z: u32) -> Result<LaurentPoly> {
    Ok(theta_class(hecke, x, y)?.multiplicity(z))
}

/// The same multiplicity through the KL basis:
/// `[θ_x L(y) : L(z)] = [H̲_y](H̲_z H̲_{x^{-1}})`.
pub fn graded_multiplicity_via_kl(hecke: &Hecke, x: u32, y: u32, z: u32) -> Result<LaurentPoly> {
    Ok(hecke.kl_product(z, hecke.group().inverse(x))?.coeff(y))
}

/// A strong right Bruhat walk: consecutive entries differ by one right
/// multiplication with a simple reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatWalk(Vec<Permutation>);

impl BruhatWalk {
    /// Validates and wraps a walk.
    pub fn new(steps: Vec<Permutation>) -> Result<Self> {
        for pair in steps.windows(2) {
            let n = pair[0].degree();
            if pair[1].degree() != n {
                return Err(Error::DegreeMismatch { left: n, right: pair[1].degree() });
            }
            if !(1..n).any(|s| pair[0].mul_simple_right(s) == pair[1]) {
                return Err(Error::Precondition(format!("{} and {} are not right neighbours", pair[0], pair[1])));
            }
        }
        Ok(BruhatWalk(steps))
    }

    /// The entries `w_1, ..., w_k`.
    pub fn steps(&self) -> &[Permutation] {
        &self.0
    }
}

fn walk_check(walk: &BruhatWalk, word: &[usize], strict: bool) -> Result<bool> {
    let k = walk.0.len();
    if word.len() != k {
        return Err(Error::Precondition(format!("walk has {k} entries but the word has {}", word.len())));
    }
    // The word is written (s_{i_k}, ..., s_{i_1}).
    let i = |j: usize| word[k - j];
    for j in 1..=k {
        let w = &walk.0[j - 1];
        if !w.has_descent(Side::Right, i(j)) {
            return Ok(false);
        }
        if j > 1 && w.has_descent(Side::Right, i(j - 1)) {
            return Ok(false);
        }
        if strict && j < k && w.has_descent(Side::Right, i(j + 1)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weak compatibility: `w_j s_{i_j} < w_j` and `w_j s_{i_{j-1}} > w_j`, the
/// word being written `(s_{i_k}, ..., s_{i_1})`.
pub fn walk_weakly_compatible(walk: &BruhatWalk, word: &[usize]) -> Result<bool> {
    walk_check(walk, word, false)
}

/// Compatibility: weak compatibility plus `w_j s_{i_{j+1}} > w_j`.
pub fn walk_compatible(walk: &BruhatWalk, word: &[usize]) -> Result<bool> {
    walk_check(walk, word, true)
}
