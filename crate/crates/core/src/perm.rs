//! Permutations of `[n]` in one-line notation, words, Bruhat order, descents,
//! supports and parabolic decompositions.
//!
//! A permutation `x` is stored as its one-line word `x(1) x(2) ... x(n)`.
//! Products compose as functions, `(xy)(k) = x(y(k))`, so right multiplication
//! by `s_k` swaps the entries in positions `k` and `k+1` and left
//! multiplication by `s_k` swaps the values `k` and `k+1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Side on which a simple reflection acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Multiplication `s w`.
    Left,
    /// Multiplication `w s`.
    Right,
}

/// An element of the symmetric group `S_n` in one-line notation.
///
/// Ordering is lexicographic on the one-line word, which for a fixed degree
/// agrees with the dense index used by [`crate::SymmetricGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Self {
        assert!(n < 256, "degree must fit in u8");
        Permutation { one_line: (1..=n as u8).collect() }
    }

    /// Builds a permutation from its one-line word (entries `1..=n`).
    pub fn from_one_line(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        if n >= 256 {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{:?}", one_line)));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    /// Parses a one-line string such as `"1524376"` (degree at most 9).
    pub fn from_one_line_str(s: &str) -> Result<Self> {
        let digits: Option<Vec<u8>> = s.trim().chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        match digits {
            Some(d) => Self::from_one_line(d),
            None => Err(Error::Parse(format!("one-line word expected, got {s:?}"))),
        }
    }

    /// The simple transposition `s_i = (i, i+1)` of `S_n`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Precondition(format!("s_{i} does not exist in S_{n}")));
        }
        let mut w = Self::identity(n);
        w.one_line.swap(i - 1, i);
        Ok(w)
    }

    /// The product `s_{a_1} s_{a_2} ... s_{a_k}` for a word `(a_1, ..., a_k)`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::Precondition(format!("s_{i} does not exist in S_{n}")));
            }
            w.one_line.swap(i - 1, i);
        }
        Ok(w)
    }

    /// Parses a comma separated Coxeter word such as `"1,2,1,3"`.
    pub fn from_word_str(n: usize, s: &str) -> Result<Self> {
        let word = parse_word_list(s)?;
        Self::from_word(n, &word)
    }

    /// Parses the compressed notation: every digit `i` is the simple
    /// reflection `s_i`, and a token `i_j` with `j < i` stands for
    /// `s_i s_{i-1} ... s_j`. Braces are ignored, so `2_{1}3` is accepted, and
    /// `e` is the identity.
    pub fn from_compressed(n: usize, s: &str) -> Result<Self> {
        Self::from_word(n, &compressed_to_word(s)?)
    }

    /// Parses any of the accepted text forms.
    ///
    /// A string containing a comma is a Coxeter word, `e` is the identity, a
    /// string of exactly `n` distinct digits `1..=n` is a one-line word, and
    /// anything else is read in compressed notation.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let t = s.trim();
        if t.contains(',') {
            return Self::from_word_str(n, t);
        }
        if t.len() == n && !t.contains('_') {
            if let Ok(w) = Self::from_one_line_str(t) {
                if n > 1 {
                    return Ok(w);
                }
            }
        }
        Self::from_compressed(n, t)
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    /// The one-line word.
    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    /// The value `w(k)` for `1 <= k <= n`.
    pub fn image(&self, k: usize) -> usize {
        self.one_line[k - 1] as usize
    }

    /// The product `self * y`, i.e. `k -> self(y(k))`.
    pub fn compose(&self, y: &Permutation) -> Result<Permutation> {
        if self.degree() != y.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: y.degree() });
        }
        Ok(Permutation { one_line: y.one_line.iter().map(|&k| self.one_line[k as usize - 1]).collect() })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.degree()];
        for (pos, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Permutation { one_line: inv }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w s_i` (swap positions `i`, `i+1`).
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        w.one_line.swap(i - 1, i);
        w
    }

    /// `s_i w` (swap values `i`, `i+1`).
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        for v in w.one_line.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        w
    }

    /// Whether `s_i` is a descent on the given side.
    ///
    /// Right: `w(i) > w(i+1)`. Left: the value `i+1` occurs before `i`.
    pub fn has_descent(&self, side: Side, i: usize) -> bool {
        let n = self.degree();
        if i == 0 || i >= n {
            return false;
        }
        match side {
            Side::Right => self.one_line[i - 1] > self.one_line[i],
            Side::Left => {
                let pos_i = self.one_line.iter().position(|&v| v as usize == i).unwrap();
                let pos_j = self.one_line.iter().position(|&v| v as usize == i + 1).unwrap();
                pos_j < pos_i
            }
        }
    }

    /// Sorted descent indices on the given side.
    pub fn descents(&self, side: Side) -> Vec<usize> {
        (1..self.degree()).filter(|&i| self.has_descent(side, i)).collect()
    }

    /// Descent set as a bit mask with bit `i` for `s_i`.
    pub fn descent_mask(&self, side: Side) -> u64 {
        self.descents(side).iter().fold(0, |m, &i| m | (1 << i))
    }

    /// The lexicographically least reduced word, obtained by repeatedly
    /// stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.has_descent(Side::Left, i)) {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// Length together with the lex-minimal reduced word.
    pub fn length_and_reduced_word(&self) -> (usize, Vec<usize>) {
        let word = self.reduced_word();
        (word.len(), word)
    }

    /// The compressed notation of the lex-minimal reduced word; `e` for the
    /// identity.
    pub fn to_compressed(&self) -> String {
        word_to_compressed(&self.reduced_word())
    }

    /// The one-line word as a digit string (comma separated when `n > 9`).
    pub fn to_one_line_string(&self) -> String {
        if self.degree() > 9 {
            let parts: Vec<String> = self.one_line.iter().map(|v| format!("{v}")).collect();
            return parts.join(",");
        }
        self.one_line.iter().map(|&v| char::from(b'0' + v)).collect()
    }

    /// The lex-minimal reduced word, comma separated.
    pub fn to_word_string(&self) -> String {
        let parts: Vec<String> = self.reduced_word().iter().map(|i| format!("{i}")).collect();
        parts.join(",")
    }

    /// Bruhat order test by the rank-matrix criterion: `x <= y` iff for all
    /// `i, j` the count `#{a <= i : x(a) >= j}` is at most the same count for
    /// `y`.
    pub fn bruhat_leq(&self, y: &Permutation) -> Result<bool> {
        let n = self.degree();
        if n != y.degree() {
            return Err(Error::DegreeMismatch { left: n, right: y.degree() });
        }
        let mut cx = alloc::vec![0usize; n + 2];
        let mut cy = alloc::vec![0usize; n + 2];
        for i in 0..n {
            for c in cx.iter_mut().take(self.one_line[i] as usize + 1).skip(1) {
                *c += 1;
            }
            for c in cy.iter_mut().take(y.one_line[i] as usize + 1).skip(1) {
                *c += 1;
            }
            if (1..=n).any(|j| cx[j] > cy[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The support: indices `i` such that `s_i` occurs in a reduced word,
    /// i.e. `w` does not stabilise `{1..i}`.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max = 0;
        for i in 1..self.degree() {
            max = max.max(self.one_line[i - 1] as usize);
            if max > i {
                out.push(i);
            }
        }
        out
    }

    /// Whether `w^2 = e`.
    pub fn is_involution(&self) -> bool {
        self.one_line.iter().enumerate().all(|(pos, &v)| self.one_line[v as usize - 1] as usize == pos + 1)
    }

    /// The longest element `n (n-1) ... 1` of `S_n`.
    pub fn longest(n: usize) -> Permutation {
        Permutation { one_line: (1..=n as u8).rev().collect() }
    }

    /// `w_0 w w_0`.
    pub fn w0_conjugate(&self) -> Permutation {
        let n = self.degree() as u8;
        Permutation { one_line: self.one_line.iter().rev().map(|&v| n + 1 - v).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_one_line_string())
    }
}

impl core::ops::Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] to handle it.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

/// Parses `"1,2,1"` (or `"1 2 1"`, or an empty string) into a word.
pub fn parse_word_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {t:?} in {s:?}"))))
        .collect()
}

/// Expands the compressed notation into a Coxeter word.
pub fn compressed_to_word(s: &str) -> Result<Vec<usize>> {
    let t: String = s.chars().filter(|c| !matches!(c, '{' | '}' | ' ')).collect();
    if t == "e" || t.is_empty() {
        return Ok(Vec::new());
    }
    let mut tokens: Vec<(usize, usize)> = Vec::new();
    let mut chars = t.chars().peekable();
    while let Some(c) = chars.next() {
        if let Some(d) = c.to_digit(10) {
            tokens.push((d as usize, d as usize));
        } else if c == '_' {
            let low = chars
                .next()
                .and_then(|c| c.to_digit(10))
                .ok_or_else(|| Error::Parse(format!("subscript expected in {s:?}")))?;
            let last = tokens.last_mut().ok_or_else(|| Error::Parse(format!("subscript without letter in {s:?}")))?;
            if low as usize > last.0 {
                return Err(Error::Parse(format!("subscript exceeds letter in {s:?}")));
            }
            last.1 = low as usize;
        } else {
            return Err(Error::Parse(format!("unexpected {c:?} in {s:?}")));
        }
    }
    Ok(tokens.into_iter().flat_map(|(hi, lo)| (lo..=hi).rev()).collect())
}

/// Groups a word into maximal runs `i, i-1, ..., j` written `i_j`.
pub fn word_to_compressed(word: &[usize]) -> String {
    if word.is_empty() {
        return String::from("e");
    }
    let mut out = String::new();
    let mut k = 0;
    while k < word.len() {
        let hi = word[k];
        let mut lo = hi;
        while k + 1 < word.len() && word[k + 1] + 1 == lo {
            k += 1;
            lo = word[k];
        }
        if lo == hi {
            out.push_str(&format!("{hi}"));
        } else {
            out.push_str(&format!("{hi}_{lo}"));
        }
        k += 1;
    }
    out
}

/// A standard parabolic subgroup `S_n(I)` with its decomposition into
/// maximal runs of consecutive simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicContext {
    n: usize,
    subset: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl ParabolicContext {
    /// Builds the context for `I ⊆ {1..n-1}`.
    pub fn new(n: usize, subset: &[usize]) -> Result<Self> {
        let mut s: Vec<usize> = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.iter().any(|&i| i == 0 || i >= n) {
            return Err(Error::Precondition(format!("{subset:?} is not a subset of 1..{n}")));
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &i in &s {
            match blocks.last_mut() {
                Some(b) if *b.last().unwrap() + 1 == i => b.push(i),
                _ => blocks.push(alloc::vec![i]),
            }
        }
        Ok(ParabolicContext { n, subset: s, blocks })
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// The sorted subset `I`.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Maximal consecutive runs `I_1, ..., I_k`.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The degrees `n_i = |I_i| + 1`.
    pub fn block_degrees(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len() + 1).collect()
    }

    /// Whether `w` lies in `S_n(I)`: `w` stabilises `{1..k}` for each `k ∉ I`.
    pub fn contains(&self, w: &Permutation) -> bool {
        w.degree() == self.n && w.support().iter().all(|i| self.subset.binary_search(i).is_ok())
    }

    /// The longest element `w_0^I`, reversing the positions of every block.
    pub fn longest_element(&self) -> Permutation {
        let mut w = Permutation::identity(self.n);
        for b in &self.blocks {
            let (lo, hi) = (b[0] - 1, *b.last().unwrap());
            w.one_line[lo..=hi].reverse();
        }
        w
    }

    /// Factorises `w = z y` with `z` the minimal representative of `w S_n(I)`
    /// and `y ∈ S_n(I)`.
    pub fn coset_decompose(&self, w: &Permutation) -> Result<(Permutation, Permutation)> {
        if w.degree() != self.n {
            return Err(Error::DegreeMismatch { left: w.degree(), right: self.n });
        }
        let mut z = w.clone();
        for b in &self.blocks {
            let (lo, hi) = (b[0] - 1, *b.last().unwrap());
            z.one_line[lo..=hi].sort_unstable();
        }
        let y = z.inverse().compose(w)?;
        Ok((z, y))
    }

    /// The components `φ(w) = (w_1, ..., w_k)` with `w_i ∈ S_{n_i}`.
    pub fn components(&self, w: &Permutation) -> Result<Vec<Permutation>> {
        if !self.contains(w) {
            return Err(Error::Precondition(format!("{w} is not in S_n({:?})", self.subset)));
        }
        Ok(self
            .blocks
            .iter()
            .map(|b| {
                let (lo, hi) = (b[0] - 1, *b.last().unwrap());
                let shift = lo as u8;
                Permutation { one_line: w.one_line[lo..=hi].iter().map(|&v| v - shift).collect() }
            })
            .collect())
    }

    /// Inverse of [`ParabolicContext::components`].
    pub fn from_components(&self, parts: &[Permutation]) -> Result<Permutation> {
        if parts.len() != self.blocks.len() {
            return Err(Error::Precondition(String::from("wrong number of components")));
        }
        let mut w = Permutation::identity(self.n);
        for (b, p) in self.blocks.iter().zip(parts) {
            if p.degree() != b.len() + 1 {
                return Err(Error::DegreeMismatch { left: p.degree(), right: b.len() + 1 });
            }
            let lo = b[0] - 1;
            for (k, &v) in p.one_line.iter().enumerate() {
                w.one_line[lo + k] = v + lo as u8;
            }
        }
        Ok(w)
    }
}

/// All involutions of `S_n` in lexicographic order of one-line words.
pub fn enumerate_involutions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u8; n];
    fn rec(pos: usize, cur: &mut Vec<u8>, out: &mut Vec<Permutation>) {
        let n = cur.len();
        if pos == n {
            out.push(Permutation { one_line: cur.clone() });
            return;
        }
        if cur[pos] != 0 {
            rec(pos + 1, cur, out);
            return;
        }
        cur[pos] = pos as u8 + 1;
        rec(pos + 1, cur, out);
        cur[pos] = 0;
        for j in pos + 1..n {
            if cur[j] == 0 {
                cur[pos] = j as u8 + 1;
                cur[j] = pos as u8 + 1;
                rec(pos + 1, cur, out);
                cur[pos] = 0;
                cur[j] = 0;
            }
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// All elements of `S_n` in lexicographic order.
pub fn enumerate_all(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = alloc::vec![Permutation { one_line: cur.clone() }];
    while next_permutation(&mut cur) {
        out.push(Permutation { one_line: cur.clone() });
    }
    out
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        Permutation::from_one_line_str(s).unwrap()
    }

    #[test]
    fn right_multiplication_swaps_positions() {
        let w = p("1524376");
        assert_eq!(w.compose(&Permutation::simple(7, 2).unwrap()).unwrap(), p("1254376"));
        assert_eq!(w.mul_simple_right(2), p("1254376"));
    }

    #[test]
    fn braid_relation_in_s3() {
        let a = Permutation::from_word(3, &[1, 2, 1]).unwrap();
        let b = Permutation::from_word(3, &[2, 1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, Permutation::longest(3));
    }

    #[test]
    fn descents_of_paper_example() {
        let w = p("1524376");
        assert_eq!(w.descents(Side::Right), vec![2, 4, 6]);
        assert!(Permutation::identity(5).descents(Side::Right).is_empty());
        assert_eq!(Permutation::longest(4).descents(Side::Right), vec![1, 2, 3]);
    }

    #[test]
    fn compressed_notation_round_trip() {
        let w = Permutation::from_compressed(7, "23_24_15_4").unwrap();
        assert_eq!(w.reduced_word(), vec![2, 3, 2, 4, 3, 2, 1, 5, 4]);
        assert_eq!(w.to_compressed(), "23_24_15_4");
        let d = Permutation::from_compressed(7, "134_3").unwrap();
        assert_eq!(d.to_one_line_string(), "2154367");
        assert_eq!(Permutation::from_compressed(7, "12_{1}3_{1}").unwrap().to_compressed(), "12_13_1");
        assert_eq!(Permutation::identity(4).to_compressed(), "e");
        assert!(Permutation::from_compressed(7, "1_2").is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Permutation::parse(7, "1524376").unwrap(), p("1524376"));
        assert_eq!(Permutation::parse(7, "2,3,4,3,2").unwrap(), Permutation::from_compressed(7, "234_2").unwrap());
        assert_eq!(Permutation::parse(7, "e").unwrap(), Permutation::identity(7));
    }

    #[test]
    fn longest_and_support() {
        let w0 = Permutation::longest(7);
        assert_eq!(w0.to_one_line_string(), "7654321");
        assert_eq!(w0.length(), 21);
        assert_eq!(Permutation::from_word(5, &[2, 3, 2]).unwrap().support(), vec![2, 3]);
        assert_eq!(Permutation::simple(7, 2).unwrap().w0_conjugate(), Permutation::simple(7, 5).unwrap());
    }

    #[test]
    fn parabolic_longest_and_components() {
        let ctx = ParabolicContext::new(7, &[2, 3, 4]).unwrap();
        assert_eq!(ctx.longest_element().to_one_line_string(), "1543267");
        let ctx = ParabolicContext::new(6, &[1, 2, 4, 5]).unwrap();
        let w = Permutation::from_word(6, &[1, 4]).unwrap();
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(ctx.components(&w).unwrap(), vec![s1.clone(), s1]);
        let ctx = ParabolicContext::new(7, &[2, 3, 4, 5, 6]).unwrap();
        let (z, y) = ctx.coset_decompose(&Permutation::simple(7, 1).unwrap()).unwrap();
        assert_eq!(z, Permutation::simple(7, 1).unwrap());
        assert_eq!(y, Permutation::identity(7));
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232]);
    }

    #[test]
    fn degenerate_degrees() {
        let e0 = Permutation::identity(0);
        assert_eq!(e0.length(), 0);
        assert_eq!(enumerate_all(0).len(), 1);
        assert_eq!(enumerate_involutions(0).len(), 1);
        assert!(e0.bruhat_leq(&e0).unwrap());
    }
}
