//! Involutions that consecutively contain a negativity pattern.

use alloc::vec::Vec;

use crate::error::Result;
use crate::hecke::Hecke;
use crate::patterns::{all_witnesses, negative_pattern_witness, verify_witness, PatternWitness};
use crate::perm::Permutation;

/// A pattern-negative involution with its first witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table3Row {
    /// The involution.
    pub d: Permutation,
    /// The first witness in scan order.
    pub witness: PatternWitness,
    /// Every consecutive occurrence of a negativity pattern in `d`.
    pub all: Vec<PatternWitness>,
}

/// Rows for the members of `remaining` that contain a pattern, in the input
/// order.
pub fn pattern_table(remaining: &[Permutation]) -> Vec<Table3Row> {
    remaining
        .iter()
        .filter_map(|d| {
            negative_pattern_witness(d).map(|witness| Table3Row { d: d.clone(), witness, all: all_witnesses(d) })
        })
        .collect()
}

/// Verifies the certificate of every witness of the row.
pub fn certify_row(hecke: &Hecke, row: &Table3Row) -> Result<bool> {
    for w in &row.all {
        if !verify_witness(hecke, &row.d, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}
