//! Experiment harness and command-line front end for identity black-box
//! cyclic groups, built on `idbb-core`.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod output;
pub mod seeds;
pub mod stats;

pub use error::{LabError, LabResult};
