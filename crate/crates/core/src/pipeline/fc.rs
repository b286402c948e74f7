//! Fully commutative involutions and products of special involutions.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableaux::shape;

/// The special involution `σ_{i,j} = ∏_{k=0}^{j} (i-k, i-k+j+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecialInvolution {
    /// `i`.
    pub i: usize,
    /// `j`.
    pub j: usize,
}

impl SpecialInvolution {
    /// Validates `1 <= i <= n-1` and `j <= min(i-1, n-i-1)`.
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= n || j > (i - 1).min(n - i - 1) {
            return Err(Error::Precondition(format!("σ_({i},{j}) is not defined in S_{n}")));
        }
        Ok(SpecialInvolution { i, j })
    }

    /// All special involutions of `S_n`, ordered by `(i, j)`.
    pub fn all(n: usize) -> Vec<SpecialInvolution> {
        (1..n).flat_map(|i| (0..=(i - 1).min(n - i - 1)).map(move |j| SpecialInvolution { i, j })).collect()
    }

    /// The permutation.
    pub fn to_permutation(self, n: usize) -> Permutation {
        let mut one_line: Vec<u8> = (1..=n as u8).collect();
        for k in 0..=self.j {
            let (a, b) = (self.i - k, self.i - k + self.j + 1);
            one_line.swap(a - 1, b - 1);
        }
        Permutation::from_one_line(one_line).expect("transpositions")
    }

    /// Whether the supports are separated: `i+j+2 <= i'-j'-1` or the reverse.
    pub fn distinct_from(self, other: SpecialInvolution) -> bool {
        self.i + self.j + 2 + other.j < other.i || other.i + other.j + 2 + self.j < self.i
    }

    /// Parses `s{i}{j}` or `s{i},{j}`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let t = s.trim().strip_prefix('s').ok_or_else(|| Error::Parse(format!("bad special involution {s:?}")))?;
        let (a, b) = match t.split_once(',') {
            Some(p) => p,
            None if t.len() == 2 => t.split_at(1),
            None => return Err(Error::Parse(format!("bad special involution {s:?}"))),
        };
        let parse = |x: &str| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad special involution {s:?}")));
        Self::new(n, parse(a)?, parse(b)?)
    }
}

impl fmt::Display for SpecialInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}{}", self.i, self.j)
    }
}

/// `σ_{i,j}` as a permutation of `S_n`.
pub fn special_involution(n: usize, i: usize, j: usize) -> Result<Permutation> {
    Ok(SpecialInvolution::new(n, i, j)?.to_permutation(n))
}

/// Whether the factors are pairwise distinct.
pub fn fc_distinct(factors: &[SpecialInvolution]) -> bool {
    factors.iter().enumerate().all(|(a, &f)| factors[a + 1..].iter().all(|&g| f.distinct_from(g)))
}

fn product(n: usize, factors: &[SpecialInvolution]) -> Permutation {
    factors.iter().fold(Permutation::identity(n), |acc, f| &acc * &f.to_permutation(n))
}

fn check_fc(d: &Permutation) -> Result<()> {
    if !d.is_involution() || shape(d).parts().len() > 2 {
        return Err(Error::Precondition(format!("{d} is not a fully commutative involution")));
    }
    Ok(())
}

fn distinct_decomposition(d: &Permutation) -> Option<Vec<SpecialInvolution>> {
    let n = d.degree();
    let all = SpecialInvolution::all(n);
    fn rec(
        n: usize,
        d: &Permutation,
        all: &[SpecialInvolution],
        start: usize,
        cur: &mut Vec<SpecialInvolution>,
    ) -> Option<Vec<SpecialInvolution>> {
        if &product(n, cur) == d {
            return Some(cur.clone());
        }
        for k in start..all.len() {
            if cur.iter().all(|f| f.distinct_from(all[k])) {
                cur.push(all[k]);
                if let Some(r) = rec(n, d, all, k + 1, cur) {
                    return Some(r);
                }
                cur.pop();
            }
        }
        None
    }
    rec(n, d, &all, 0, &mut Vec::new())
}

/// A factorisation of a fully commutative involution into special
/// involutions: a pairwise distinct one if it exists, otherwise a shortest
/// one (up to four factors).
pub fn fc_decompose(d: &Permutation) -> Result<Option<Vec<SpecialInvolution>>> {
    check_fc(d)?;
    if let Some(f) = distinct_decomposition(d) {
        return Ok(Some(f));
    }
    let n = d.degree();
    let all = SpecialInvolution::all(n);
    let mut frontier: Vec<(Vec<SpecialInvolution>, Permutation)> = alloc::vec![(Vec::new(), Permutation::identity(n))];
    for _ in 0..4 {
        let mut next = Vec::new();
        for (f, p) in &frontier {
            for &s in &all {
                let q = p * &s.to_permutation(n);
                let mut g = f.clone();
                g.push(s);
                if &q == d {
                    return Ok(Some(g));
                }
                next.push((g, q));
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// `K(d)` for a fully commutative involution: true iff `d` is a product of
/// pairwise distinct special involutions.
pub fn fc_kostant(d: &Permutation) -> Result<bool> {
    check_fc(d)?;
    Ok(distinct_decomposition(d).is_some())
}

/// Checks that `factors` multiply to `d`.
pub fn fc_verify(d: &Permutation, factors: &[SpecialInvolution]) -> bool {
    product(d.degree(), factors) == *d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(special_involution(7, 3, 0).unwrap(), Permutation::simple(7, 3).unwrap());
        let f: Vec<_> = ["s30", "s32", "s30"].iter().map(|s| SpecialInvolution::parse(7, s).unwrap()).collect();
        let d = Permutation::from_compressed(7, "2_14_25_4").unwrap();
        assert!(fc_verify(&d, &f));
        assert!(!fc_distinct(&f));
        assert!(!fc_kostant(&d).unwrap());
        let d = Permutation::from_compressed(7, "15_46_5").unwrap();
        assert!(fc_kostant(&d).unwrap());
        assert_eq!(
            fc_decompose(&d).unwrap().unwrap(),
            [SpecialInvolution { i: 1, j: 0 }, SpecialInvolution { i: 5, j: 1 }]
        );
        assert!(special_involution(7, 1, 1).is_err());
        assert!(fc_kostant(&Permutation::from_compressed(7, "12_1").unwrap()).is_err());
    }

    #[test]
    fn special_involutions_are_fc() {
        for s in SpecialInvolution::all(7) {
            let p = s.to_permutation(7);
            assert!(p.is_involution());
            assert!(shape(&p).parts().len() <= 2);
        }
    }
}
