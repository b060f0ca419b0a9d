//! Experiments behind the CLI subcommands. Each returns a table of
//! serializable rows; rows carrying a `pass` field export the experiment's
//! own check.

mod adversary;
mod embed;
mod grover;
mod level2;
mod lift;
mod reductions;
mod scaling;
mod single;

pub use adversary::{adversary_report_parallel, run_adversary, AdversaryRow};
pub use embed::{run_embedding, EmbeddingRow};
pub use grover::{grover_curve, run_grover, GroverRow};
pub use level2::{line_solution_count, run_level2_solution_counts, worst_line, Level2Instance, Level2Row, SolutionCountSample, LEVEL2_LIMIT};
pub use lift::{run_lift, LiftRow};
pub use reductions::{exact_reduction_rates, run_reduction_success, ExactRates, ReductionRow};
pub use scaling::{run_scaling, ScalingRow};
pub use single::{decide_ddh, recover_secret, Algo, DdhRow, SecretRow};

use idbb_core::modmath::PrimeModulus;

use crate::error::{LabError, LabResult};

pub fn modulus(p: u64) -> LabResult<PrimeModulus> {
    PrimeModulus::new(p).map_err(LabError::from)
}

/// Rows that report a pass/fail verdict.
pub trait Verdict {
    fn passed(&self) -> bool;
}

pub fn all_passed<T: Verdict>(rows: &[T]) -> bool {
    rows.iter().all(Verdict::passed)
}
