//! Classical and consecutive pattern containment and the six consecutive
//! patterns that force Kostant negativity.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::perm::{Permutation, Side};
use crate::tableaux::cell_members;

/// The negativity patterns in scan order.
pub const NEGATIVE_PATTERNS: [&str; 6] = ["2143", "3142", "14325", "15324", "25314", "24315"];

/// A consecutive occurrence of a negativity pattern together with the pair
/// `(x, y)` for which `θ_x L(w) ≅ θ_y L(w) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternWitness {
    /// The pattern.
    pub pattern: Permutation,
    /// Start position `m` (1-based).
    pub position: usize,
    /// First projective functor index.
    pub x: Permutation,
    /// Second projective functor index.
    pub y: Permutation,
}

fn order_isomorphic(values: &[u8], pattern: &[u8]) -> bool {
    values.len() == pattern.len()
        && (0..values.len()).all(|i| (0..values.len()).all(|j| (values[i] < values[j]) == (pattern[i] < pattern[j])))
}

/// All increasing position tuples (1-based) whose entries are order-isomorphic
/// to `p`.
pub fn occurrences(w: &Permutation, p: &Permutation) -> Vec<Vec<usize>> {
    let (n, k) = (w.degree(), p.degree());
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pos: Vec<usize> = (0..k).collect();
    loop {
        let vals: Vec<u8> = pos.iter().map(|&i| w.one_line()[i]).collect();
        if order_isomorphic(&vals, p.one_line()) {
            out.push(pos.iter().map(|&i| i + 1).collect());
        }
        // Next k-subset in lex order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pos[i] < n - k + i {
                break;
            }
        }
        pos[i] += 1;
        for j in i + 1..k {
            pos[j] = pos[j - 1] + 1;
        }
        if k == 0 {
            return out;
        }
    }
}

/// Start positions (1-based) of consecutive occurrences of `p` in `w`.
pub fn consecutive_occurrences(w: &Permutation, p: &Permutation) -> Vec<usize> {
    let (n, k) = (w.degree(), p.degree());
    if k > n {
        return Vec::new();
    }
    (0..=n - k).filter(|&m| order_isomorphic(&w.one_line()[m..m + k], p.one_line())).map(|m| m + 1).collect()
}

/// The pair `(x, y)` attached to a consecutive occurrence of `pattern` at
/// position `m` in `S_n`.
///
/// * `2143`: `x = s_m s_{m+1}`, `y = s_{m+2} s_{m+1}`.
/// * `3142`: `x = s_{m+2} s_{m+1} s_m`, `y = s_m`.
/// * five-letter patterns: `x = s_{m+1} s_{m+2} s_m s_{m+1}`, `y = s_{m+2} s_{m+3} x`.
pub fn witness_pair(n: usize, pattern: &Permutation, m: usize) -> Result<(Permutation, Permutation)> {
    let pat = pattern.to_one_line_string();
    let (xw, yw): (Vec<usize>, Vec<usize>) = match pat.as_str() {
        "2143" => (alloc::vec![m, m + 1], alloc::vec![m + 2, m + 1]),
        "3142" => (alloc::vec![m + 2, m + 1, m], alloc::vec![m]),
        "14325" | "15324" | "25314" | "24315" => {
            let x = alloc::vec![m + 1, m + 2, m, m + 1];
            let mut y = alloc::vec![m + 2, m + 3];
            y.extend_from_slice(&x);
            (x, y)
        }
        _ => return Err(Error::Precondition(alloc::format!("{pat} is not a negativity pattern"))),
    };
    Ok((Permutation::from_word(n, &xw)?, Permutation::from_word(n, &yw)?))
}

/// All witnesses in `w`, ordered by pattern list and then by position.
pub fn all_witnesses(w: &Permutation) -> Vec<PatternWitness> {
    let mut out = Vec::new();
    for pat in NEGATIVE_PATTERNS {
        let p = Permutation::from_one_line_str(pat).expect("valid pattern");
        for m in consecutive_occurrences(w, &p) {
            let (x, y) = witness_pair(w.degree(), &p, m).expect("pattern fits");
            out.push(PatternWitness { pattern: p.clone(), position: m, x, y });
        }
    }
    out
}

/// The first witness in scan order, if any.
pub fn negative_pattern_witness(w: &Permutation) -> Option<PatternWitness> {
    all_witnesses(w).into_iter().next()
}

/// Scans the left cell of `w` (in lex order) for a member with a witness.
pub fn left_cell_pattern_scan(w: &Permutation) -> Option<(Permutation, PatternWitness)> {
    if let Some(wit) = negative_pattern_witness(w) {
        return Some((w.clone(), wit));
    }
    cell_members(Side::Left, w).into_iter().find_map(|u| negative_pattern_witness(&u).map(|wit| (u, wit)))
}

/// Checks the class-level certificate `Ĥ_w H̲_x = Ĥ_w H̲_y ≠ 0`.
pub fn verify_witness(hecke: &Hecke, w: &Permutation, witness: &PatternWitness) -> Result<bool> {
    let wi = hecke.index(w)?;
    let a = hecke.dual_times_kl(wi, hecke.index(&witness.x)?)?;
    let b = hecke.dual_times_kl(wi, hecke.index(&witness.y)?)?;
    Ok(!a.is_zero() && a == b)
}
