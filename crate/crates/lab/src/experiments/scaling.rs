use idbb_core::algorithms::brute_force_secret_shuffled;
use idbb_core::blackbox::IdentityOracle;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::LabResult;
use crate::output::sig12;
use crate::seeds::rng_for;

/// Tolerance on the mean, checked once trials reach [`ASSERT_TRIALS`].
pub const TOLERANCE: f64 = 0.05;
pub const ASSERT_TRIALS: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub p: u64,
    pub trials: u64,
    pub total_queries: u64,
    #[serde(serialize_with = "sig12")]
    pub mean_queries: f64,
    pub max_queries: u64,
    #[serde(serialize_with = "sig12")]
    pub expected_mean: f64,
    #[serde(serialize_with = "sig12")]
    pub relative_error: f64,
    pub asserted: bool,
    pub pass: bool,
}

impl Verdict for ScalingRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

/// Identity queries spent by random-order brute force on a uniform secret.
pub fn run_scaling(ps: &[u64], trials: u64, seed: u64) -> LabResult<Vec<ScalingRow>> {
    ps.iter()
        .map(|&p| {
            let m = modulus(p)?;
            let (total, max) = (0..trials)
                .into_par_iter()
                .map(|i| {
                    let mut rng = rng_for(seed, "scaling", p, i);
                    let s = m.residue(rng.gen_range(0..p));
                    let mut o = IdentityOracle::with_secret(s);
                    let r = brute_force_secret_shuffled(&mut o, &mut rng)?;
                    debug_assert_eq!(r.secret, s);
                    Ok((r.queries, r.queries))
                })
                .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1.max(b.1))))
                .map_err(crate::error::LabError::Core)?;
            let mean = if trials == 0 { 0.0 } else { total as f64 / trials as f64 };
            let expected = (p + 1) as f64 / 2.0;
            let relative_error = (mean - expected).abs() / expected;
            let asserted = trials >= ASSERT_TRIALS;
            Ok(ScalingRow {
                p,
                trials,
                total_queries: total,
                mean_queries: mean,
                max_queries: max,
                expected_mean: expected,
                relative_error,
                asserted,
                pass: !asserted || relative_error <= TOLERANCE,
            })
        })
        .collect()
}
