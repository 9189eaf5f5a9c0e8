//! Executable checks of the theorems, with JSON-lines reports.

pub mod instances;
mod report;
mod suite;
mod theorems;

pub use report::{with_retry, CheckReport, Outcome, Summary};
pub use suite::{intro_ideal, intro_ordering, run, StatementId};
pub use theorems::{
    build_radical_witness, check_counterexample, check_counterexample_part1, check_gcd_corollary,
    check_gindl, check_ginspecstab, check_hyperplane_theorem, check_main_theorem, check_sumprinc,
    counterexample_gin, counterexample_gin_distracted, counterexample_ideal, DEGREV_BOUND,
};
