//! Involutions reached by parabolic lifts: `d ∼_L w w_0^I w_0` for
//! `w ∈ S_n(I)`, with `K(d) = K(w_1) ∧ ... ∧ K(w_k)`.
//!
//! Rows are produced in the order of the reference enumeration: subsets `I`
//! by size and then lexicographically, and the elements of `S_n(I)` by the
//! one-line words of their inverses.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Result;
use crate::perm::{enumerate_all, ParabolicContext, Permutation, Side};
use crate::pipeline::base::base_answer;
use crate::tableaux::cell_involution;

/// One parabolic lift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table1Row {
    /// The involution `d`.
    pub d: Permutation,
    /// The subset `I`.
    pub subset: Vec<usize>,
    /// The element `w ∈ S_n(I)`.
    pub w: Permutation,
    /// The components of `w` in the Levi factors.
    pub components: Vec<Permutation>,
    /// `K(d)`.
    pub kostant: bool,
}

/// Sorts elements of `S_n` by the one-line words of their inverses.
pub fn chevie_order(mut elements: Vec<Permutation>) -> Vec<Permutation> {
    elements.sort_by_cached_key(|w| w.inverse());
    elements
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// First-seen parabolic lifts over subsets of sizes `1..=n-2`.
pub fn parabolic_lift_table(n: usize) -> Result<Vec<Table1Row>> {
    let w0 = Permutation::longest(n);
    let all = enumerate_all(n);
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for size in 1..=n.saturating_sub(2) {
        for subset in combinations(n - 1, size) {
            let ctx = ParabolicContext::new(n, &subset)?;
            let w0i = ctx.longest_element();
            let members: Vec<Permutation> = all.iter().filter(|w| ctx.contains(w)).cloned().collect();
            for w in chevie_order(members) {
                let d = cell_involution(Side::Left, &(&(&w * &w0i) * &w0));
                if !seen.insert(d.clone()) {
                    continue;
                }
                let components = ctx.components(&w)?;
                let mut kostant = true;
                for c in &components {
                    kostant &= base_answer(c)?;
                }
                rows.push(Table1Row { d, subset: subset.clone(), w, components, kostant });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_uses_inverses() {
        let a = Permutation::from_one_line_str("1524367").unwrap();
        let b = Permutation::from_one_line_str("1435267").unwrap();
        assert_eq!(chevie_order(alloc::vec![b.clone(), a.clone()]), [a, b]);
    }

    #[test]
    fn n4_lifts() {
        let rows = parabolic_lift_table(4).unwrap();
        let ds: BTreeSet<_> = rows.iter().map(|r| r.d.clone()).collect();
        assert_eq!(ds.len(), rows.len());
        assert!(rows.iter().all(|r| r.kostant));
    }
}
