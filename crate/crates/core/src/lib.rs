//! Exact computations in the symmetric group `S_n` and its Hecke algebra.
//!
//! The crate is `no_std` (it needs `alloc`) and contains every pure part of the
//! engine: permutations and Bruhat order ([`perm`]), the Robinson–Schensted
//! correspondence and cells ([`tableaux`]), Laurent polynomials ([`laurent`]),
//! Kazhdan–Lusztig tables and the three Hecke bases ([`hecke`]), the
//! decategorified category `O` calculus ([`cato`]), consecutive patterns
//! ([`patterns`]), the Kostant classification for `n <= 7` ([`pipeline`]) and
//! the indecomposability checks ([`indec`]).
//!
//! File formats, caches, checkpoints and the command line live in the `kostant`
//! companion crate.
#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cato;
pub mod error;
pub mod group;
pub mod hecke;
pub mod indec;
pub mod laurent;
pub mod patterns;
pub mod perm;
pub mod pipeline;
pub mod tableaux;

pub use error::{Error, Result};
pub use group::SymmetricGroup;
pub use hecke::{Basis, Hecke, HeckeElement};
pub use laurent::LaurentPoly;
pub use perm::Permutation;
pub use tableaux::{Partition, StandardTableau};
