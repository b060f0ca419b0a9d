//! Identity black-box cyclic groups `G_{p,t}`.
//!
//! A group of level `t` is the quotient of `Z_p^{t+1}` by a hidden hyperplane
//! `{h : h·n = 0}`. Group operations are plain coordinate arithmetic; the only
//! access to the hyperplane is an identity oracle that answers whether an
//! element lies in it. Every algorithm in [`algorithms`] works through that
//! oracle, and every query it makes is counted.
//!
//! Knowledge of the hidden normal vector is gated behind [`blackbox::Escrow`],
//! a capability that only reference code (honest oracle simulators, test
//! oracles, the Grover simulator's phase oracle) holds.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod adversary;
pub mod algorithms;
pub mod blackbox;
mod error;
pub mod grover;
pub mod modmath;
pub mod ratio;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
