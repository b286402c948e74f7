//! Known answers to Kostant's problem for `n <= 6`, given per left cell by
//! the negative involutions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{enumerate_involutions, Permutation, Side};
use crate::tableaux::cell_involution;

const NEGATIVE_4: &[&str] = &["13"];
const NEGATIVE_5: &[&str] = &["13", "24", "23_2", "12_14", "134_3"];
const NEGATIVE_6: &[&str] = &[
    "13",
    "135",
    "14_35_4",
    "123_15",
    "23_245_2",
    "24",
    "134_3",
    "2_13_25",
    "134_35_3",
    "13_145_3",
    "35",
    "12_14",
    "23_24_2",
    "2_14_25_4",
    "2_13_145_2",
    "23_2",
    "245_4",
    "1345_3",
    "12_13_15",
    "13_24_15_3",
    "34_3",
    "23_25",
    "12_145_4",
    "123_24_1",
    "12_134_35_1",
];

/// Negative involutions of `S_n` for `n <= 6`, in lex order.
pub fn negative_involutions(n: usize) -> Result<Vec<Permutation>> {
    let words: &[&str] = match n {
        0..=3 => &[],
        4 => NEGATIVE_4,
        5 => NEGATIVE_5,
        6 => NEGATIVE_6,
        _ => return Err(Error::UnsupportedDegree(n)),
    };
    let mut out = words.iter().map(|w| Permutation::from_compressed(n, w)).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `K(d)` for every involution `d ∈ S_n`, `n <= 6`.
pub fn base_answers(n: usize) -> Result<BTreeMap<Permutation, bool>> {
    let neg = negative_involutions(n)?;
    Ok(enumerate_involutions(n)
        .into_iter()
        .map(|d| {
            let k = neg.binary_search(&d).is_err();
            (d, k)
        })
        .collect())
}

/// `K(w)` for any `w ∈ S_n`, `n <= 6`, via the involution of its left cell.
pub fn base_answer(w: &Permutation) -> Result<bool> {
    let neg = negative_involutions(w.degree())?;
    Ok(neg.binary_search(&cell_involution(Side::Left, w)).is_err())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_involutions() {
        for (n, k) in [(4, 1), (5, 5), (6, 25)] {
            let neg = negative_involutions(n).unwrap();
            assert_eq!(neg.len(), k);
            assert!(neg.iter().all(|d| d.is_involution()));
            let mut dedup = neg.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), k);
        }
        let pos: Vec<usize> = (1..=6).map(|n| base_answers(n).unwrap().values().filter(|&&k| k).count()).collect();
        assert_eq!(pos, [1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn n4_negative_cell() {
        let d = Permutation::from_compressed(4, "13").unwrap();
        for w in crate::perm::enumerate_all(4) {
            assert_eq!(base_answer(&w).unwrap(), !crate::tableaux::same_left_cell(&w, &d));
        }
    }
}
