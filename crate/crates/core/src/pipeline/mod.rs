//! The Kostant classification of involutions: known small cases, parabolic
//! lifts, fully commutative involutions, pattern witnesses, explicit pair
//! certificates and the pair sweep.

pub mod base;
pub mod cases;
pub mod classify;
pub mod fc;
pub mod kh;
pub mod table1;
pub mod table3;

pub use base::{base_answer, base_answers, negative_involutions};
pub use cases::{negative_pair_certificate, run_case, CaseKind, CaseScript, CertificateResult, StepOutcome, CASES};
pub use classify::{classify_all, counts_report, CountsReport, Provenance, Verdict, VerdictRecord};
pub use fc::{fc_decompose, fc_distinct, fc_kostant, special_involution, SpecialInvolution};
pub use kh::{kh_check_pair, kh_pair_plan, kh_sweep, PairOutcome, SweepMode, SweepOutcome};
pub use table1::{chevie_order, parabolic_lift_table, Table1Row};
pub use table3::{pattern_table, Table3Row};
