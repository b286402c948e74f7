//! Partitions, standard Young tableaux and the Robinson–Schensted
//! correspondence, together with the cell data derived from it.
//!
//! `rs(w) = (P, Q)` inserts `w(1), ..., w(n)` into `P` and records positions in
//! `Q`. Two permutations lie in the same left cell iff their `Q` tableaux
//! agree and in the same right cell iff their `P` tableaux agree.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Side};

/// A partition `λ_1 >= λ_2 >= ... > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts; the parts must be weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Parses `"4,2,1"`, `"(4,2,1)"` or `"421"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts: Option<Vec<usize>> = if t.contains(',') {
            t.split(',').map(|p| p.trim().parse::<usize>().ok()).collect()
        } else {
            t.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        Self::new(parts.ok_or_else(|| Error::Parse(format!("bad partition {s:?}")))?)
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition { parts: (0..first).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// Dominance order `self ⊴ other`: every partial sum of `self` is at most
    /// the corresponding partial sum of `other`. Sizes must agree.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Strict dominance `self ◁ other`.
    pub fn strictly_dominated_by(&self, other: &Partition) -> bool {
        self != other && self.dominated_by(other)
    }

    /// `Σ (i-1) λ_i`, the value of Lusztig's a-function on the two-sided cell.
    pub fn a_value(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Number of standard tableaux of this shape (hook length formula).
    pub fn syt_count(&self) -> u64 {
        let n = self.size() as u64;
        let conj = self.conjugate();
        let mut num: u128 = (1..=n as u128).product();
        let mut den: u128 = 1;
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                den *= (p - j - 1 + conj.part(j) - i - 1 + 1) as u128;
            }
        }
        num /= den;
        num as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| format!("{p}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// A standard Young tableau, rows listed top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    /// Validates rows: partition shape, entries `1..=n` once each, rows and
    /// columns increasing.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let rows: Vec<Vec<u8>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = alloc::vec![false; n + 1];
        for r in &rows {
            for &v in r {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return Err(Error::Precondition(format!("bad tableau entries {rows:?}")));
                }
                seen[v as usize] = true;
            }
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!("row not increasing in {rows:?}")));
            }
        }
        for i in 1..rows.len() {
            for j in 0..rows[i].len() {
                if rows[i][j] <= rows[i - 1][j] {
                    return Err(Error::Precondition(format!("column not increasing in {rows:?}")));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    /// The rows.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// The shape.
    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len()).collect() }
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Row (0-based) containing `v`.
    pub fn row_of(&self, v: u8) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&v))
    }

    /// Descents: `i` such that `i+1` lies in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.row_of(i as u8 + 1) > self.row_of(i as u8)).collect()
    }

    /// All standard tableaux of a shape, ordered by their row reading words.
    pub fn all_of_shape(shape: &Partition) -> Vec<StandardTableau> {
        let n = shape.size();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|_| Vec::new()).collect();
        fn rec(v: usize, n: usize, shape: &Partition, rows: &mut Vec<Vec<u8>>, out: &mut Vec<StandardTableau>) {
            if v > n {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            }
            for i in 0..rows.len() {
                let len = rows[i].len();
                if len < shape.part(i) && (i == 0 || rows[i - 1].len() > len) {
                    rows[i].push(v as u8);
                    rec(v + 1, n, shape, rows, out);
                    rows[i].pop();
                }
            }
        }
        rec(1, n, shape, &mut rows, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau[{self}]")
    }
}

/// Robinson–Schensted: the insertion tableau `P` and recording tableau `Q`.
pub fn rs(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (pos, &v) in w.one_line().iter().enumerate() {
        let mut x = v;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(alloc::vec![x]);
                q.push(alloc::vec![pos as u8 + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(j) => {
                    core::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(pos as u8 + 1);
                    break;
                }
            }
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Inverse Robinson–Schensted.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::Precondition(format!("shapes differ: {} vs {}", p.shape(), q.shape())));
    }
    let n = p.size();
    let mut p = p.rows.clone();
    let mut q = q.rows.clone();
    let mut one_line = alloc::vec![0u8; n];
    for pos in (1..=n).rev() {
        let row = q.iter().position(|r| r.last() == Some(&(pos as u8))).expect("valid tableau");
        q[row].pop();
        let mut x = p[row].pop().expect("same shape");
        for r in (0..row).rev() {
            let j = p[r].iter().rposition(|&y| y < x).expect("valid tableau");
            core::mem::swap(&mut p[r][j], &mut x);
        }
        one_line[pos - 1] = x;
        while q.last().is_some_and(|r| r.is_empty()) {
            q.pop();
            p.pop();
        }
    }
    Permutation::from_one_line(one_line)
}

/// The RS shape of `w`.
pub fn shape(w: &Permutation) -> Partition {
    rs(w).0.shape()
}

/// Lusztig's a-function `a(w) = Σ (i-1) λ_i` for `λ = sh(w)`.
pub fn a_function(w: &Permutation) -> usize {
    shape(w).a_value()
}

/// Same left cell: equal recording tableaux.
pub fn same_left_cell(x: &Permutation, y: &Permutation) -> bool {
    rs(x).1 == rs(y).1
}

/// Same right cell: equal insertion tableaux.
pub fn same_right_cell(x: &Permutation, y: &Permutation) -> bool {
    rs(x).0 == rs(y).0
}

/// Same two-sided cell: equal shapes.
pub fn same_two_sided_cell(x: &Permutation, y: &Permutation) -> bool {
    shape(x) == shape(y)
}

/// The unique involution in the left (or right) cell of `w`.
pub fn cell_involution(side: Side, w: &Permutation) -> Permutation {
    let (p, q) = rs(w);
    let t = match side {
        Side::Left => q,
        Side::Right => p,
    };
    rs_inverse(&t, &t).expect("same shape")
}

/// Members of the left (equal `Q`) or right (equal `P`) cell of `w`, in lex
/// order.
pub fn cell_members(side: Side, w: &Permutation) -> Vec<Permutation> {
    let (p, q) = rs(w);
    let mut out: Vec<Permutation> = StandardTableau::all_of_shape(&p.shape())
        .iter()
        .map(|t| match side {
            Side::Left => rs_inverse(t, &q),
            Side::Right => rs_inverse(&p, t),
        })
        .map(|r| r.expect("same shape"))
        .collect();
    out.sort();
    out
}

/// All involutions of `S_n` with a given shape, in lex order of one-line
/// words.
pub fn involutions_of_shape(shape: &Partition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> =
        StandardTableau::all_of_shape(shape).iter().map(|t| rs_inverse(t, t).expect("same shape")).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_all;
    use alloc::vec;

    #[test]
    fn rs_round_trip_s5() {
        for w in enumerate_all(5) {
            let (p, q) = rs(&w);
            assert_eq!(rs_inverse(&p, &q).unwrap(), w);
            assert_eq!(rs(&w.inverse()), (q.clone(), p.clone()));
            assert_eq!(q.descents(), w.descents(Side::Right));
            assert_eq!(p.descents(), w.descents(Side::Left));
        }
    }

    #[test]
    fn shapes_and_counts() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.syt_count(), 35);
        assert_eq!(p.a_value(), 4);
        assert_eq!(Partition::new(vec![3, 3, 1]).unwrap().syt_count(), 21);
        let total: u64 = Partition::all(7).iter().map(|l| l.syt_count()).sum();
        assert_eq!(total, 232);
        assert_eq!(shape(&Permutation::longest(4)), Partition::new(vec![1, 1, 1, 1]).unwrap());
        assert_eq!(Partition::parse("(3,2,2)").unwrap(), Partition::parse("322").unwrap());
    }

    #[test]
    fn dominance() {
        let a = Partition::parse("3,2,2").unwrap();
        let b = Partition::parse("3,3,1").unwrap();
        let c = Partition::parse("4,1,1,1").unwrap();
        assert!(a.strictly_dominated_by(&b));
        assert!(!b.dominated_by(&c) && !c.dominated_by(&b));
        assert_eq!(Partition::parse("4,2,1").unwrap().conjugate(), Partition::parse("3,2,1,1").unwrap());
    }

    #[test]
    fn cell_involutions() {
        for w in enumerate_all(5) {
            let d = cell_involution(Side::Left, &w);
            assert!(d.is_involution());
            assert!(same_left_cell(&d, &w));
            let d = cell_involution(Side::Right, &w);
            assert!(same_right_cell(&d, &w));
        }
    }
}
