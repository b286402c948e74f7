//! Sparse Hecke algebra elements and group ring elements.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// The basis in which a [`HeckeElement`] is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Standard basis `H_w`.
    Standard,
    /// Kazhdan–Lusztig basis `H̲_w` (printed `C'`).
    Kl,
    /// Dual Kazhdan–Lusztig basis `Ĥ_w` (printed `D'`).
    DualKl,
}

/// An element of `H_n` as a sparse map from permutation indices (lex rank) to
/// nonzero Laurent polynomial coefficients, tagged with its basis.
///
/// Derived equality compares basis tag and coefficients; use
/// [`crate::Hecke::equal`] for basis-independent comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<u32, LaurentPoly>,
}

impl HeckeElement {
    /// The zero element.
    pub fn zero(degree: usize, basis: Basis) -> Self {
        HeckeElement { degree, basis, terms: BTreeMap::new() }
    }

    /// The basis element indexed by `w`.
    pub fn basis_element(degree: usize, basis: Basis, w: u32) -> Self {
        let mut e = Self::zero(degree, basis);
        e.terms.insert(w, LaurentPoly::one());
        e
    }

    /// Builds from `(index, coefficient)` pairs; repeated indices add.
    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (u32, LaurentPoly)>,
    ) -> Result<Self> {
        let mut e = Self::zero(degree, basis);
        for (w, c) in terms {
            e.add_term(w, &c, 1)?;
        }
        Ok(e)
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The basis tag.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Nonzero terms in index order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    /// Coefficient at `w` (zero if absent).
    pub fn coeff(&self, w: u32) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// Borrowed coefficient at `w`.
    pub fn coeff_ref(&self, w: u32) -> Option<&LaurentPoly> {
        self.terms.get(&w)
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Indices of the support.
    pub fn support(&self) -> Vec<u32> {
        self.terms.keys().copied().collect()
    }

    /// `self += c * p * b_w`.
    pub fn add_term(&mut self, w: u32, p: &LaurentPoly, c: i64) -> Result<()> {
        self.add_term_shifted(w, p, c, 0)
    }

    /// `self += c * v^shift * p * b_w`.
    pub fn add_term_shifted(&mut self, w: u32, p: &LaurentPoly, c: i64, shift: i32) -> Result<()> {
        if p.is_zero() || c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(w).or_default();
        entry.add_scaled(p, c, shift)?;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        if self.basis != other.basis {
            return Err(Error::Precondition(alloc::format!("basis mismatch: {:?} vs {:?}", self.basis, other.basis)));
        }
        Ok(())
    }

    /// `self += c * v^shift * other` (same basis).
    pub fn add_scaled(&mut self, other: &Self, c: i64, shift: i32) -> Result<()> {
        self.check_compatible(other)?;
        for (&w, p) in &other.terms {
            self.add_term_shifted(w, p, c, shift)?;
        }
        Ok(())
    }

    /// `self += p * other` (same basis).
    pub fn add_poly_multiple(&mut self, other: &Self, p: &LaurentPoly) -> Result<()> {
        self.check_compatible(other)?;
        for (&w, q) in &other.terms {
            let t = q.checked_mul(p)?;
            self.add_term(w, &t, 1)?;
        }
        Ok(())
    }

    /// Checked sum (same basis).
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, 1, 0)?;
        Ok(out)
    }

    /// Checked difference (same basis).
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, -1, 0)?;
        Ok(out)
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale(&self, p: &LaurentPoly) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.basis);
        for (&w, q) in &self.terms {
            out.add_term(w, &q.checked_mul(p)?, 1)?;
        }
        Ok(out)
    }

    /// Consumes into the underlying map.
    pub fn into_terms(self) -> BTreeMap<u32, LaurentPoly> {
        self.terms
    }
}

/// An element of the group ring `Z S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    degree: usize,
    terms: BTreeMap<u32, i64>,
}

impl GroupRingElement {
    /// The zero element.
    pub fn zero(degree: usize) -> Self {
        GroupRingElement { degree, terms: BTreeMap::new() }
    }

    /// `self += c * w`.
    pub fn add_term(&mut self, w: u32, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let e = self.terms.entry(w).or_insert(0);
        *e = e.checked_add(c).ok_or(Error::Overflow)?;
        if *e == 0 {
            self.terms.remove(&w);
        }
        Ok(())
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.terms.iter().map(|(&w, &c)| (w, c))
    }

    /// Coefficient of `w`.
    pub fn coeff(&self, w: u32) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
