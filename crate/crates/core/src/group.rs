//! Dense indexing of `S_n` with multiplication, length and descent tables.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{enumerate_all, Permutation, Side};

/// Largest degree for which dense tables are built.
pub const MAX_DEGREE: usize = 8;

/// The symmetric group `S_n` with elements numbered by the lexicographic rank
/// of their one-line words (identity is `0`, `w_0` is `n! - 1`).
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    length: Vec<u8>,
    inverse: Vec<u32>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    left_desc: Vec<u16>,
    right_desc: Vec<u16>,
    by_length: Vec<u32>,
}

impl SymmetricGroup {
    /// Builds all tables for `S_n`, `n <= 8`.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(n));
        }
        let elements = enumerate_all(n);
        let size = elements.len();
        let gens = n.saturating_sub(1);
        let mut length = Vec::with_capacity(size);
        let mut inverse = Vec::with_capacity(size);
        let mut rmul = Vec::with_capacity(size * gens);
        let mut lmul = Vec::with_capacity(size * gens);
        let mut left_desc = Vec::with_capacity(size);
        let mut right_desc = Vec::with_capacity(size);
        for w in &elements {
            length.push(w.length() as u8);
            inverse.push(lex_rank(w.inverse().one_line()));
            for i in 1..n {
                rmul.push(lex_rank(w.mul_simple_right(i).one_line()));
                lmul.push(lex_rank(w.mul_simple_left(i).one_line()));
            }
            left_desc.push(w.descent_mask(Side::Left) as u16);
            right_desc.push(w.descent_mask(Side::Right) as u16);
        }
        let mut by_length: Vec<u32> = (0..size as u32).collect();
        by_length.sort_by_key(|&w| (length[w as usize], w));
        Ok(SymmetricGroup { n, elements, length, inverse, rmul, lmul, left_desc, right_desc, by_length })
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// `n!`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of a permutation of this degree.
    pub fn index(&self, w: &Permutation) -> Result<u32> {
        if w.degree() != self.n {
            return Err(Error::DegreeMismatch { left: w.degree(), right: self.n });
        }
        Ok(lex_rank(w.one_line()))
    }

    /// The permutation with the given index.
    pub fn element(&self, w: u32) -> &Permutation {
        &self.elements[w as usize]
    }

    /// Index of the identity.
    pub fn identity(&self) -> u32 {
        0
    }

    /// Index of the longest element.
    pub fn longest(&self) -> u32 {
        self.order() as u32 - 1
    }

    /// Coxeter length.
    pub fn length(&self, w: u32) -> usize {
        self.length[w as usize] as usize
    }

    /// Index of `w^{-1}`.
    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }

    /// Index of `w s_i`.
    pub fn rmul(&self, w: u32, i: usize) -> u32 {
        self.rmul[w as usize * (self.n - 1) + i - 1]
    }

    /// Index of `s_i w`.
    pub fn lmul(&self, w: u32, i: usize) -> u32 {
        self.lmul[w as usize * (self.n - 1) + i - 1]
    }

    /// Index of `w s_i` or `s_i w`.
    pub fn mul_simple(&self, side: Side, w: u32, i: usize) -> u32 {
        match side {
            Side::Left => self.lmul(w, i),
            Side::Right => self.rmul(w, i),
        }
    }

    /// Descent mask (bit `i` for `s_i`).
    pub fn descent_mask(&self, side: Side, w: u32) -> u16 {
        match side {
            Side::Left => self.left_desc[w as usize],
            Side::Right => self.right_desc[w as usize],
        }
    }

    /// Whether `s_i` is a descent of `w` on the given side.
    pub fn has_descent(&self, side: Side, w: u32, i: usize) -> bool {
        self.descent_mask(side, w) & (1 << i) != 0
    }

    /// Smallest descent on the given side, if any.
    pub fn first_descent(&self, side: Side, w: u32) -> Option<usize> {
        let m = self.descent_mask(side, w);
        (m != 0).then(|| m.trailing_zeros() as usize)
    }

    /// Index of the product `x y`.
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        lex_rank(self.element(x).compose(self.element(y)).expect("same degree").one_line())
    }

    /// Index of `w_0 w w_0`.
    pub fn w0_conjugate(&self, w: u32) -> u32 {
        lex_rank(self.element(w).w0_conjugate().one_line())
    }

    /// All indices sorted by length, ties by index.
    pub fn by_length(&self) -> &[u32] {
        &self.by_length
    }

    /// Lex-minimal reduced word of `w`.
    pub fn reduced_word(&self, w: u32) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while let Some(i) = self.first_descent(Side::Left, cur) {
            word.push(i);
            cur = self.lmul(cur, i);
        }
        word
    }

    /// Bruhat order on indices.
    pub fn bruhat_leq(&self, x: u32, y: u32) -> bool {
        self.length(x) <= self.length(y) && self.element(x).bruhat_leq(self.element(y)).expect("same degree")
    }
}

/// Lexicographic rank of a one-line word among all permutations of its
/// degree.
pub fn lex_rank(one_line: &[u8]) -> u32 {
    let n = one_line.len();
    let mut rank: u32 = 0;
    let mut used: u16 = 0;
    for (k, &v) in one_line.iter().enumerate() {
        let smaller_unused = (v as u32 - 1) - (used & ((1u16 << (v - 1)) - 1)).count_ones();
        rank = rank * (n - k) as u32 + smaller_unused;
        used |= 1 << (v - 1);
    }
    rank
}
