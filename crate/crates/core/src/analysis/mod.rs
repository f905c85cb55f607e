//! Counters, the potential-function auditor, structural checkers and the
//! reference queue used for differential testing.

mod audit;
mod checks;
mod counters;
mod differential;
mod oracle;
mod potential;

pub use audit::{audit_sequence, random_script, AuditReport, AuditRow, OpKind, ScriptOp, ScriptParams};
pub use checks::{brute_force_treap, check_lemma1, check_treap_shape, treap_from_trace, BinaryTree};
pub use counters::Counters;
pub use differential::{differential_check, DiffParams, DiffStats};
pub use oracle::OracleQueue;
pub use potential::{heap_potential, mass, potential, size, PotentialMode, PotentialSnapshot};
