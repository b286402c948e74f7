//! Text rendering of Hecke elements (`C'(1,2)+(v+v^-1)D'(3)`) and a small
//! expression language for products of basis elements.
//!
//! Grammar:
//!
//! ```text
//! input   := [basis ':'] sum
//! sum     := ['-'] product (('+' | '-') product)*
//! product := factor ('*' factor)*
//! factor  := name '(' word ')' | 'coeff(' sum ',' word ')' | '(' sum ')' | poly
//! name    := 'H' | 'T' | 'C' | "C'" | 'D' | "D'"
//! poly    := integer | 'v' ['^' int | '^(' int ')']
//! ```
//!
//! A product of elements is returned in the basis of its leftmost element
//! factor. `coeff(X, w)` is the coefficient of `w` in the basis of `X`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Basis, Hecke, HeckeElement};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::perm::Permutation;

/// Prefix used when printing basis elements.
pub fn basis_symbol(basis: Basis) -> &'static str {
    match basis {
        Basis::Standard => "H",
        Basis::Kl => "C'",
        Basis::DualKl => "D'",
    }
}

fn coefficient_prefix(c: &LaurentPoly) -> String {
    let terms: Vec<(i32, i64)> = c.terms().collect();
    match terms.as_slice() {
        [(0, 1)] => String::new(),
        [(0, -1)] => String::from("-"),
        [_] => c.to_compact_string(),
        _ => format!("({})", c.to_compact_string()),
    }
}

/// Renders an element with terms ordered by length and then by lex-minimal
/// reduced word, e.g. `D'(1,2)+(v+v^-1)D'(1,2,1)`.
pub fn format_element(hecke: &Hecke, x: &HeckeElement) -> String {
    if x.is_zero() {
        return String::from("0");
    }
    let g = hecke.group();
    let mut terms: Vec<(usize, Vec<usize>, &LaurentPoly)> =
        x.terms().map(|(w, c)| (g.length(w), g.reduced_word(w), c)).collect();
    terms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut out = String::new();
    for (_, word, c) in terms {
        let prefix = coefficient_prefix(c);
        if !out.is_empty() && !prefix.starts_with('-') {
            out.push('+');
        }
        out.push_str(&prefix);
        out.push_str(basis_symbol(x.basis()));
        let letters: Vec<String> = word.iter().map(|i| format!("{i}")).collect();
        out.push('(');
        out.push_str(&letters.join(","));
        out.push(')');
    }
    out
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    /// A scalar in `Z[v, v^{-1}]`.
    Scalar(LaurentPoly),
    /// A Hecke algebra element.
    Element(HeckeElement),
}

/// Renders a value: scalars in GAP style, elements via [`format_element`].
pub fn format_value(hecke: &Hecke, value: &Value) -> String {
    match value {
        Value::Scalar(p) => format!("{p}"),
        Value::Element(x) => format_element(hecke, x),
    }
}

/// Parses and evaluates an expression, converting an element result to the
/// basis named by an optional `H:`, `C:` or `D:` prefix.
pub fn evaluate(hecke: &Hecke, input: &str) -> Result<Value> {
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let (target, body) = match text.split_once(':') {
        Some((b, rest)) => (Some(parse_basis_name(b)?), rest.into()),
        None => (None, text),
    };
    let mut p = Parser { hecke, s: body.as_bytes(), pos: 0 };
    let v = p.sum()?;
    if p.pos != p.s.len() {
        return Err(p.error("trailing input"));
    }
    match (v, target) {
        (Value::Element(x), Some(b)) => Ok(Value::Element(hecke.convert(&x, b)?)),
        (Value::Scalar(c), Some(b)) => {
            let e = HeckeElement::from_terms(hecke.degree(), Basis::Standard, [(hecke.group().identity(), c)])?;
            Ok(Value::Element(hecke.convert(&e, b)?))
        }
        (v, None) => Ok(v),
    }
}

fn parse_basis_name(name: &str) -> Result<Basis> {
    match name {
        "H" | "T" => Ok(Basis::Standard),
        "C" | "C'" => Ok(Basis::Kl),
        "D" | "D'" => Ok(Basis::DualKl),
        _ => Err(Error::Parse(format!("unknown basis {name:?}"))),
    }
}

struct Parser<'a> {
    hecke: &'a Hecke,
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Value> {
        let negate = self.eat(b'-');
        let mut acc = self.product()?;
        if negate {
            acc = self.scale(acc, &LaurentPoly::constant(-1))?;
        }
        loop {
            let sign = if self.eat(b'+') {
                1
            } else if self.eat(b'-') {
                -1
            } else {
                return Ok(acc);
            };
            let rhs = self.product()?;
            let rhs = if sign < 0 { self.scale(rhs, &LaurentPoly::constant(-1))? } else { rhs };
            acc = self.add(acc, rhs)?;
        }
    }

    fn product(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let rhs = self.factor()?;
            acc = self.multiply(acc, rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value> {
        let rest = &self.s[self.pos..];
        if rest.starts_with(b"coeff(") {
            self.pos += 6;
            let inner = self.sum()?;
            self.expect(b',')?;
            let w = self.word_until_close()?;
            let Value::Element(x) = inner else {
                return Err(self.error("coeff needs an element"));
            };
            return Ok(Value::Scalar(x.coeff(w)));
        }
        for (name, basis) in [
            (&b"C'("[..], Basis::Kl),
            (b"D'(", Basis::DualKl),
            (b"C(", Basis::Kl),
            (b"D(", Basis::DualKl),
            (b"H(", Basis::Standard),
            (b"T(", Basis::Standard),
        ] {
            if rest.starts_with(name) {
                self.pos += name.len();
                let w = self.word_until_close()?;
                return Ok(Value::Element(HeckeElement::basis_element(self.hecke.degree(), basis, w)));
            }
        }
        if self.eat(b'(') {
            let v = self.sum()?;
            self.expect(b')')?;
            return Ok(v);
        }
        self.poly_atom()
    }

    fn word_until_close(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c != b')') {
            self.pos += 1;
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.error("bad utf-8"))?;
        self.expect(b')')?;
        let word = crate::perm::parse_word_list(text)?;
        self.hecke.index(&Permutation::from_word(self.hecke.degree(), &word)?)
    }

    fn poly_atom(&mut self) -> Result<Value> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let coef: i64 = if self.pos > start {
            core::str::from_utf8(&self.s[start..self.pos])
                .ok()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| self.error("bad integer"))?
        } else {
            1
        };
        if !self.eat(b'v') {
            if self.pos == start {
                return Err(self.error("expected a factor"));
            }
            return Ok(Value::Scalar(LaurentPoly::constant(coef)));
        }
        let mut exp = 1i32;
        if self.eat(b'^') {
            let paren = self.eat(b'(');
            let es = self.pos;
            self.eat(b'-');
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            exp = core::str::from_utf8(&self.s[es..self.pos])
                .ok()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| self.error("bad exponent"))?;
            if paren {
                self.expect(b')')?;
            }
        }
        Ok(Value::Scalar(LaurentPoly::monomial(coef, exp)))
    }

    fn scale(&self, v: Value, c: &LaurentPoly) -> Result<Value> {
        Ok(match v {
            Value::Scalar(p) => Value::Scalar(p.checked_mul(c)?),
            Value::Element(x) => Value::Element(x.scale(c)?),
        })
    }

    fn as_element(&self, v: Value, basis: Basis) -> Result<HeckeElement> {
        match v {
            Value::Element(x) => self.hecke.convert(&x, basis),
            Value::Scalar(c) => {
                let e = HeckeElement::from_terms(self.hecke.degree(), Basis::Standard, [(0, c)])?;
                self.hecke.convert(&e, basis)
            }
        }
    }

    fn add(&self, a: Value, b: Value) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(p.checked_add(&q)?)),
            (Value::Element(x), other) => {
                let basis = x.basis();
                Ok(Value::Element(x.checked_add(&self.as_element(other, basis)?)?))
            }
            (scalar, Value::Element(y)) => {
                let basis = y.basis();
                Ok(Value::Element(self.as_element(scalar, basis)?.checked_add(&y)?))
            }
        }
    }

    fn multiply(&self, a: Value, b: Value) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(p.checked_mul(&q)?)),
            (Value::Scalar(p), Value::Element(x)) | (Value::Element(x), Value::Scalar(p)) => {
                Ok(Value::Element(x.scale(&p)?))
            }
            (Value::Element(x), Value::Element(y)) => Ok(Value::Element(self.hecke.mul(&x, &y)?)),
        }
    }
}
