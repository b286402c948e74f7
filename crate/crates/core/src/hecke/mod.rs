//! The Hecke algebra `H_n` over `Z[v, v^{-1}]` in Soergel's normalisation:
//! `H_w H_s = H_{ws}` if `ws > w` and `(v^{-1} - v) H_w + H_{ws}` otherwise,
//! with Kazhdan–Lusztig basis `H̲_w = H_w + Σ_{x<w} p_{x,w} H_x`,
//! `p_{x,w} ∈ vZ[v]`, and dual basis `Ĥ_w` determined by
//! `(H̲_x, Ĥ_y) = δ_{x,y^{-1}}` for the form `(X, Y) = [H_e](XY)`.

mod element;
pub mod expr;
pub mod kl;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use element::{Basis, GroupRingElement, HeckeElement};
pub use kl::KlTable;

use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::laurent::LaurentPoly;
use crate::perm::{Permutation, Side};

/// `S_n` together with its Kazhdan–Lusztig table; all Hecke operations
/// of degree `n` go through this context.
#[derive(Debug, Clone)]
pub struct Hecke {
    group: SymmetricGroup,
    kl: KlTable,
}

impl Hecke {
    /// Builds the group tables and the KL table for `S_n`, `n <= 7`.
    pub fn new(n: usize) -> Result<Self> {
        let group = SymmetricGroup::new(n)?;
        let kl = KlTable::build(&group)?;
        Ok(Hecke { group, kl })
    }

    /// Assembles a context from precomputed parts.
    pub fn from_parts(group: SymmetricGroup, kl: KlTable) -> Result<Self> {
        if kl.size() != group.order() {
            return Err(Error::Precondition(alloc::string::String::from("KL table size does not match group")));
        }
        Ok(Hecke { group, kl })
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// The group tables.
    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    /// The KL table.
    pub fn kl_table(&self) -> &KlTable {
        &self.kl
    }

    /// Index of a permutation.
    pub fn index(&self, w: &Permutation) -> Result<u32> {
        self.group.index(w)
    }

    /// Permutation with a given index.
    pub fn element(&self, w: u32) -> &Permutation {
        self.group.element(w)
    }

    /// Parses a permutation of this degree in any accepted text form.
    pub fn parse_perm(&self, s: &str) -> Result<u32> {
        self.index(&Permutation::parse(self.degree(), s)?)
    }

    /// The basis element `b_w` of the given basis.
    pub fn basis_element(&self, basis: Basis, w: &Permutation) -> Result<HeckeElement> {
        Ok(HeckeElement::basis_element(self.degree(), basis, self.index(w)?))
    }

    /// Bruhat order via the KL table.
    pub fn bruhat_leq(&self, x: u32, w: u32) -> bool {
        self.kl.leq(x, w)
    }

    /// `p_{x,w}` (zero unless `x <= w`).
    pub fn p(&self, x: u32, w: u32) -> LaurentPoly {
        if !self.kl.leq(x, w) {
            return LaurentPoly::zero();
        }
        self.kl.p_laurent(x, w, self.group.length(w) - self.group.length(x))
    }

    /// `μ(x,w) = μ(w,x)`: the coefficient of `v` in `p` of the smaller
    /// against the larger element, zero when incomparable.
    pub fn mu(&self, x: u32, w: u32) -> i64 {
        let (lo, hi) = if self.group.length(x) <= self.group.length(w) { (x, w) } else { (w, x) };
        if lo == hi || !self.kl.leq(lo, hi) {
            return 0;
        }
        self.p(lo, hi).coeff(1)
    }

    /// Standard expansion of `H̲_w`.
    pub fn kl_element(&self, w: u32) -> HeckeElement {
        let lw = self.group.length(w);
        let mut out = HeckeElement::zero(self.degree(), Basis::Standard);
        for x in self.kl.below(w) {
            let p = self.kl.p_laurent(x, w, lw - self.group.length(x));
            out.add_term(x, &p, 1).expect("small coefficients");
        }
        out
    }

    /// Standard expansion of `Ĥ_y`, read off from `H̲_{w_0 y^{-1}}`:
    /// the coefficient of `H_{z^{-1} w_0}` is `(-1)^{ℓ(z^{-1}w_0) + ℓ(y)} p_{z, w_0 y^{-1}}`.
    pub fn dual_kl_element(&self, y: u32) -> HeckeElement {
        let g = &self.group;
        let w0 = g.longest();
        let m = g.mul(w0, g.inverse(y));
        let lm = g.length(m);
        let ly = g.length(y);
        let mut out = HeckeElement::zero(self.degree(), Basis::Standard);
        for z in self.kl.below(m) {
            let u = g.mul(g.inverse(z), w0);
            let sign = if (g.length(u) + ly) % 2 == 0 { 1 } else { -1 };
            let p = self.kl.p_laurent(z, m, lm - g.length(z));
            out.add_term(u, &p, sign).expect("small coefficients");
        }
        out
    }

    fn check_degree(&self, x: &HeckeElement) -> Result<()> {
        if x.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: x.degree(), right: self.degree() });
        }
        Ok(())
    }

    /// Expansion in the standard basis.
    pub fn to_standard(&self, x: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(x)?;
        let expand: fn(&Self, u32) -> HeckeElement = match x.basis() {
            Basis::Standard => return Ok(x.clone()),
            Basis::Kl => Self::kl_element,
            Basis::DualKl => Self::dual_kl_element,
        };
        let mut out = HeckeElement::zero(self.degree(), Basis::Standard);
        for (w, c) in x.terms() {
            out.add_poly_multiple(&expand(self, w), c)?;
        }
        Ok(out)
    }

    /// Coordinates in the KL basis (triangular elimination from the top).
    pub fn to_kl_coords(&self, x: &HeckeElement) -> Result<HeckeElement> {
        match x.basis() {
            Basis::Kl => return Ok(x.clone()),
            Basis::DualKl => return self.to_kl_coords(&self.to_standard(x)?),
            Basis::Standard => {}
        }
        self.check_degree(x)?;
        let mut rest = x.clone();
        let mut out = HeckeElement::zero(self.degree(), Basis::Kl);
        while let Some(w) = rest.terms().map(|(w, _)| w).max_by_key(|&w| (self.group.length(w), w)) {
            let c = rest.coeff(w);
            out.add_term(w, &c, 1)?;
            rest.add_poly_multiple(&self.kl_element(w), &(-&c))?;
        }
        Ok(out)
    }

    /// Coordinates in the dual KL basis (triangular elimination from the
    /// bottom).
    pub fn to_dual_kl_coords(&self, x: &HeckeElement) -> Result<HeckeElement> {
        match x.basis() {
            Basis::DualKl => return Ok(x.clone()),
            Basis::Kl => return self.to_dual_kl_coords(&self.to_standard(x)?),
            Basis::Standard => {}
        }
        self.check_degree(x)?;
        let mut rest = x.clone();
        let mut out = HeckeElement::zero(self.degree(), Basis::DualKl);
        while let Some(w) = rest.terms().map(|(w, _)| w).min_by_key(|&w| (self.group.length(w), w)) {
            let c = rest.coeff(w);
            out.add_term(w, &c, 1)?;
            rest.add_poly_multiple(&self.dual_kl_element(w), &(-&c))?;
        }
        Ok(out)
    }

    /// Coordinates in the requested basis.
    pub fn convert(&self, x: &HeckeElement, basis: Basis) -> Result<HeckeElement> {
        match basis {
            Basis::Standard => self.to_standard(x),
            Basis::Kl => self.to_kl_coords(x),
            Basis::DualKl => self.to_dual_kl_coords(x),
        }
    }

    /// Basis-independent equality.
    pub fn equal(&self, x: &HeckeElement, y: &HeckeElement) -> Result<bool> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch { left: x.degree(), right: y.degree() });
        }
        if x.basis() == y.basis() {
            return Ok(x == y);
        }
        Ok(self.to_dual_kl_coords(x)? == self.to_dual_kl_coords(y)?)
    }

    /// `X H_s` in the standard basis.
    pub fn std_right_mul_s(&self, x: &HeckeElement, s: usize) -> Result<HeckeElement> {
        self.std_mul_s(Side::Right, x, s)
    }

    /// `H_s X` in the standard basis.
    pub fn std_left_mul_s(&self, s: usize, x: &HeckeElement) -> Result<HeckeElement> {
        self.std_mul_s(Side::Left, x, s)
    }

    fn check_simple(&self, s: usize) -> Result<()> {
        if s == 0 || s >= self.degree() {
            return Err(Error::Precondition(alloc::format!("s_{s} does not exist in S_{}", self.degree())));
        }
        Ok(())
    }

    fn std_mul_s(&self, side: Side, x: &HeckeElement, s: usize) -> Result<HeckeElement> {
        self.check_simple(s)?;
        let x = self.to_standard(x)?;
        let g = &self.group;
        let mut out = HeckeElement::zero(self.degree(), Basis::Standard);
        let a = LaurentPoly::vinv_minus_v();
        for (w, c) in x.terms() {
            let ws = g.mul_simple(side, w, s);
            out.add_term(ws, c, 1)?;
            if g.length(ws) < g.length(w) {
                out.add_term(w, &c.checked_mul(&a)?, 1)?;
            }
        }
        Ok(out)
    }

    /// The product `XY` computed in the standard basis from the defining
    /// relations, writing each `H_y` as a product of `H_s` along a reduced
    /// word.
    pub fn std_mul(&self, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch { left: x.degree(), right: y.degree() });
        }
        let x = self.to_standard(x)?;
        let y = self.to_standard(y)?;
        let mut out = HeckeElement::zero(self.degree(), Basis::Standard);
        for (w, c) in y.terms() {
            let mut acc = x.clone();
            for s in self.group.reduced_word(w) {
                acc = self.std_right_mul_s(&acc, s)?;
            }
            out.add_poly_multiple(&acc, c)?;
        }
        Ok(out)
    }

    /// `X H̲_s`, computed in the basis of `X`.
    pub fn right_mul_cs(&self, x: &HeckeElement, s: usize) -> Result<HeckeElement> {
        self.mul_cs(Side::Right, x, s)
    }

    /// `H̲_s X`, computed in the basis of `X`.
    pub fn left_mul_cs(&self, s: usize, x: &HeckeElement) -> Result<HeckeElement> {
        self.mul_cs(Side::Left, x, s)
    }

    /// `X H̲_s` for `X` in dual KL coordinates:
    /// `Ĥ_w H̲_s = (v+v^{-1}) Ĥ_w + Ĥ_{ws} + Σ_{x>w, xs>x} μ(x,w) Ĥ_x` if
    /// `ws < w`, and `0` otherwise.
    pub fn dual_mul_cs(&self, x: &HeckeElement, s: usize) -> Result<HeckeElement> {
        if x.basis() != Basis::DualKl {
            return Err(Error::Precondition(alloc::string::String::from("dual KL coordinates expected")));
        }
        self.right_mul_cs(x, s)
    }

    fn mul_cs(&self, side: Side, x: &HeckeElement, s: usize) -> Result<HeckeElement> {
        self.check_degree(x)?;
        self.check_simple(s)?;
        let g = &self.group;
        let vv = LaurentPoly::v_plus_vinv();
        let mut out = HeckeElement::zero(self.degree(), x.basis());
        match x.basis() {
            Basis::Standard => {
                out = self.std_mul_s(side, x, s)?;
                out.add_scaled(x, 1, 1)?;
            }
            Basis::Kl => {
                for (w, c) in x.terms() {
                    let ws = g.mul_simple(side, w, s);
                    if g.length(ws) < g.length(w) {
                        out.add_term(w, &c.checked_mul(&vv)?, 1)?;
                    } else {
                        out.add_term(ws, c, 1)?;
                        for &(z, m) in self.kl.mu_down(w) {
                            if g.has_descent(side, z, s) {
                                out.add_term(z, c, m)?;
                            }
                        }
                    }
                }
            }
            Basis::DualKl => {
                for (w, c) in x.terms() {
                    if !g.has_descent(side, w, s) {
                        continue;
                    }
                    out.add_term(w, &c.checked_mul(&vv)?, 1)?;
                    out.add_term(g.mul_simple(side, w, s), c, 1)?;
                    for &(z, m) in self.kl.mu_up(w) {
                        if !g.has_descent(side, z, s) {
                            out.add_term(z, c, m)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// A memoising multiplier computing `X H̲_b` for many `b`.
    pub fn right_multiplier(&self, x: HeckeElement) -> Result<KlMultiplier<'_>> {
        KlMultiplier::new(self, Side::Right, x)
    }

    /// A memoising multiplier computing `H̲_a Y` for many `a`.
    pub fn left_multiplier(&self, y: HeckeElement) -> Result<KlMultiplier<'_>> {
        KlMultiplier::new(self, Side::Left, y)
    }

    /// `X H̲_b` in the basis of `X`.
    pub fn right_mul_kl(&self, x: &HeckeElement, b: u32) -> Result<HeckeElement> {
        Ok(self.right_multiplier(x.clone())?.times(b)?.as_ref().clone())
    }

    /// `H̲_a H̲_b` in KL coordinates, recursing on the shorter factor.
    pub fn kl_product(&self, a: u32, b: u32) -> Result<HeckeElement> {
        let n = self.degree();
        if self.group.length(a) <= self.group.length(b) {
            let mut m = self.left_multiplier(HeckeElement::basis_element(n, Basis::Kl, b))?;
            Ok(m.times(a)?.as_ref().clone())
        } else {
            let mut m = self.right_multiplier(HeckeElement::basis_element(n, Basis::Kl, a))?;
            Ok(m.times(b)?.as_ref().clone())
        }
    }

    /// `Ĥ_y H̲_x` in dual KL coordinates: the class of `θ_x L(y)`.
    pub fn dual_times_kl(&self, y: u32, x: u32) -> Result<HeckeElement> {
        self.right_mul_kl(&HeckeElement::basis_element(self.degree(), Basis::DualKl, y), x)
    }

    /// The product `XY`, returned in the basis of `X`.
    pub fn mul(&self, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch { left: x.degree(), right: y.degree() });
        }
        let y = self.to_kl_coords(y)?;
        let mut m = self.right_multiplier(x.clone())?;
        let mut out = HeckeElement::zero(self.degree(), x.basis());
        for (b, c) in y.terms() {
            out.add_poly_multiple(m.times(b)?.as_ref(), c)?;
        }
        Ok(out)
    }

    /// The symmetrising form `(X, Y) = [H_e](XY) = Σ_x X_x Y_{x^{-1}}`.
    pub fn bilinear_form(&self, x: &HeckeElement, y: &HeckeElement) -> Result<LaurentPoly> {
        let x = self.to_standard(x)?;
        let y = self.to_standard(y)?;
        let mut out = LaurentPoly::zero();
        for (w, c) in x.terms() {
            if let Some(d) = y.coeff_ref(self.group.inverse(w)) {
                out = out.checked_add(&c.checked_mul(d)?)?;
            }
        }
        Ok(out)
    }

    /// The specialisation `ev: H_w -> w, v -> 1`.
    pub fn ev(&self, x: &HeckeElement) -> Result<GroupRingElement> {
        let x = self.to_standard(x)?;
        let mut out = GroupRingElement::zero(self.degree());
        for (w, c) in x.terms() {
            out.add_term(w, c.eval_at_one()?)?;
        }
        Ok(out)
    }
}

/// Memoised computation of `X H̲_b` (right) or `H̲_a Y` (left) through the
/// recursion `X H̲_b = (X H̲_{b'}) H̲_s - Σ_{z<b', zs<z} μ(z,b') X H̲_z` for
/// `b = b's > b'`, with `s` the smallest descent.
///
/// If `X H̲_s = 0` then `X H̲_z = 0` for every `z` with `s` a left descent,
/// which prunes most of the recursion for dual KL basis elements.
#[derive(Debug)]
pub struct KlMultiplier<'a> {
    hecke: &'a Hecke,
    side: Side,
    base: Arc<HeckeElement>,
    kill: u16,
    zero: Arc<HeckeElement>,
    memo: BTreeMap<u32, Arc<HeckeElement>>,
}

impl<'a> KlMultiplier<'a> {
    fn new(hecke: &'a Hecke, side: Side, base: HeckeElement) -> Result<Self> {
        hecke.check_degree(&base)?;
        let mut kill = 0u16;
        for s in 1..hecke.degree() {
            if hecke.mul_cs(side, &base, s)?.is_zero() {
                kill |= 1 << s;
            }
        }
        let zero = Arc::new(HeckeElement::zero(hecke.degree(), base.basis()));
        Ok(KlMultiplier { hecke, side, base: Arc::new(base), kill, zero, memo: BTreeMap::new() })
    }

    /// The fixed factor.
    pub fn base(&self) -> &HeckeElement {
        &self.base
    }

    /// Number of memoised products.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// The product of the fixed factor with `H̲_b` on the configured side.
    pub fn times(&mut self, b: u32) -> Result<Arc<HeckeElement>> {
        let g = &self.hecke.group;
        if b == g.identity() {
            return Ok(self.base.clone());
        }
        let opposite = match self.side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        if g.descent_mask(opposite, b) & self.kill != 0 {
            return Ok(self.zero.clone());
        }
        if let Some(r) = self.memo.get(&b) {
            return Ok(r.clone());
        }
        let s = g.first_descent(self.side, b).expect("b is not the identity");
        let bp = g.mul_simple(self.side, b, s);
        let prev = self.times(bp)?;
        let mut out = self.hecke.mul_cs(self.side, &prev, s)?;
        let corrections: Vec<(u32, i64)> =
            self.hecke.kl.mu_down(bp).iter().filter(|&&(z, _)| g.has_descent(self.side, z, s)).copied().collect();
        for (z, m) in corrections {
            let t = self.times(z)?;
            out.add_scaled(&t, -m, 0)?;
        }
        let out = Arc::new(out);
        self.memo.insert(b, out.clone());
        Ok(out)
    }
}
