//! Laurent polynomials in `v` with `i64` coefficients and checked arithmetic.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_k v^k`.
///
/// Stored as the exponent of the lowest term and a dense coefficient vector
/// with nonzero first and last entries; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// A constant.
    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { low: e, coeffs: alloc::vec![c] }
    }

    /// `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v + v^{-1}`.
    pub fn v_plus_vinv() -> Self {
        LaurentPoly { low: -1, coeffs: alloc::vec![1, 0, 1] }
    }

    /// `v^{-1} - v`.
    pub fn vinv_minus_v() -> Self {
        LaurentPoly { low: -1, coeffs: alloc::vec![1, 0, -1] }
    }

    /// Builds from a lowest exponent and dense coefficients (trimmed here).
    pub fn from_coeffs(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i32, i64)]) -> Result<Self> {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p = p.checked_add(&Self::monomial(c, e))?;
        }
        Ok(p)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.low += k as i32;
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with nonzero coefficient.
    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Coefficient of `v^e`.
    pub fn coeff(&self, e: i32) -> i64 {
        let k = e - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(k, &c)| (self.low + k as i32, c))
    }

    /// Checked sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let low = self.low.min(other.low);
        let high = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let mut coeffs = Vec::with_capacity((high - low + 1) as usize);
        for e in low..=high {
            coeffs.push(self.coeff(e).checked_add(other.coeff(e)).ok_or(Error::Overflow)?);
        }
        Ok(Self::from_coeffs(low, coeffs))
    }

    /// In-place checked `self += c * v^shift * other`.
    pub fn add_scaled(&mut self, other: &Self, c: i64, shift: i32) -> Result<()> {
        if other.is_zero() || c == 0 {
            return Ok(());
        }
        let olow = other.low + shift;
        let ohigh = olow + other.coeffs.len() as i32 - 1;
        if self.is_zero() {
            self.low = olow;
        }
        let low = self.low.min(olow);
        let high = (self.low + self.coeffs.len() as i32 - 1).max(ohigh);
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = alloc::vec![0; pad];
            v.extend_from_slice(&self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        self.coeffs.resize((high - self.low + 1) as usize, 0);
        for (k, &oc) in other.coeffs.iter().enumerate() {
            let idx = (olow - self.low) as usize + k;
            let t = oc.checked_mul(c).ok_or(Error::Overflow)?;
            self.coeffs[idx] = self.coeffs[idx].checked_add(t).ok_or(Error::Overflow)?;
        }
        self.trim();
        Ok(())
    }

    /// Checked difference.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, -1, 0)?;
        Ok(out)
    }

    /// Checked product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = alloc::vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(self.low + other.low, coeffs))
    }

    /// Checked scalar multiple.
    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        let coeffs: Option<Vec<i64>> = self.coeffs.iter().map(|&a| a.checked_mul(c)).collect();
        Ok(Self::from_coeffs(self.low, coeffs.ok_or(Error::Overflow)?))
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(high) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -high, coeffs }
            }
        }
    }

    /// Whether `bar(p) = p`.
    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> Result<i64> {
        self.coeffs.iter().try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Writes a bar-invariant polynomial with nonnegative coefficients as
    /// `Σ m_k (v + v^{-1})^k` with `m_k >= 0`, by repeatedly removing the
    /// leading term. Returns `None` when no such decomposition exists.
    pub fn cheb_nonneg_decompose(&self) -> Option<Vec<(u32, i64)>> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while let Some(high) = rest.max_degree() {
            let lead = rest.coeff(high);
            if high < 0 || lead < 0 {
                return None;
            }
            let mut basis = Self::one();
            for _ in 0..high {
                basis = basis.checked_mul(&Self::v_plus_vinv()).ok()?;
            }
            rest.add_scaled(&basis, -lead, 0).ok()?;
            out.push((high as u32, lead));
        }
        out.reverse();
        Some(out)
    }

    /// Parses sums of terms such as `v^3 + 3*v + 3*v^(-1) + v^(-3)`,
    /// `v+v^-1`, `-2v^-2` or `5`. A single pair of enclosing parentheses is
    /// accepted.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = strip_outer_parens(&t);
        if t.is_empty() {
            return Err(Error::Parse(String::from("empty polynomial")));
        }
        let bytes = t.as_bytes();
        let mut i = 0;
        let mut out = Self::zero();
        let err = || Error::Parse(format!("bad polynomial {s:?}"));
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(err());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i64 = if i > start { t[start..i].parse().map_err(|_| err())? } else { 1 };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0i32;
            if i < bytes.len() && bytes[i] == b'v' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let paren = i < bytes.len() && bytes[i] == b'(';
                    if paren {
                        i += 1;
                    }
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = t[es..i].parse().map_err(|_| err())?;
                    if paren {
                        if i >= bytes.len() || bytes[i] != b')' {
                            return Err(err());
                        }
                        i += 1;
                    }
                }
            } else if i == start {
                return Err(err());
            }
            out.add_scaled(&Self::monomial(coef, exp), sign, 0)?;
        }
        Ok(out)
    }

    /// Compact rendering `v+v^-1`, `2v^-2`, `-v`, used inside basis expansions.
    pub fn to_compact_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.unsigned_abs();
            match e {
                0 => out.push_str(&format!("{a}")),
                _ => {
                    if a != 1 {
                        out.push_str(&format!("{a}"));
                    }
                    out.push('v');
                    if e != 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }
}

fn strip_outer_parens(t: &str) -> &str {
    if t.starts_with('(') && t.ends_with(')') {
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return t;
                    }
                }
                _ => {}
            }
        }
        return inner;
    }
    t
}

/// GAP-style rendering with descending exponents:
/// `v^3 + 3*v + 3*v^(-1) + v^(-3)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}*")?;
            }
            match e {
                1 => f.write_str("v")?,
                e if e < 0 => write!(f, "v^({e})")?,
                e => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on overflow.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on overflow.
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("coefficient overflow")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on overflow.
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on overflow.
    fn neg(self) -> LaurentPoly {
        self.checked_scale(-1).expect("coefficient overflow")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn gap_rendering_round_trip() {
        let p = LaurentPoly::from_terms(&[(3, 1), (1, 3), (-1, 3), (-3, 1)]).unwrap();
        assert_eq!(p.to_string(), "v^3 + 3*v + 3*v^(-1) + v^(-3)");
        assert_eq!(LaurentPoly::parse(&p.to_string()).unwrap(), p);
        let q = LaurentPoly::v_plus_vinv();
        assert_eq!(&(&q * &q) * &q, p);
        assert_eq!(LaurentPoly::parse("-2v^-2+v").unwrap().to_string(), "v - 2*v^(-2)");
        assert_eq!(LaurentPoly::parse("(v+v^-1)").unwrap(), q);
        assert!(LaurentPoly::parse("v^").is_err());
    }

    #[test]
    fn bar_and_eval() {
        let p = LaurentPoly::parse("v^2 + 3*v^(-1)").unwrap();
        assert_eq!(p.bar(), LaurentPoly::parse("v^(-2) + 3*v").unwrap());
        assert_eq!(p.eval_at_one().unwrap(), 4);
        assert!(LaurentPoly::v_plus_vinv().is_bar_invariant());
        assert!(LaurentPoly::zero().is_bar_invariant());
    }

    #[test]
    fn chebyshev_decomposition() {
        let p = LaurentPoly::parse("v^2 + 3 + v^(-2)").unwrap();
        assert_eq!(p.cheb_nonneg_decompose(), Some(vec![(0, 1), (2, 1)]));
        assert_eq!(LaurentPoly::parse("v^2 + v^(-2)").unwrap().cheb_nonneg_decompose(), None);
        assert_eq!(LaurentPoly::zero().cheb_nonneg_decompose(), Some(vec![]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = LaurentPoly::constant(i64::MAX);
        assert_eq!(big.checked_add(&LaurentPoly::one()), Err(Error::Overflow));
        assert_eq!(big.checked_mul(&LaurentPoly::constant(2)), Err(Error::Overflow));
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(LaurentPoly::v_plus_vinv().to_compact_string(), "v+v^-1");
        assert_eq!(LaurentPoly::parse("-2*v^(-2)").unwrap().to_compact_string(), "-2v^-2");
    }
}
