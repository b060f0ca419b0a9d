use idbb_core::blackbox::{Escrow, IdentityOracle};
use idbb_core::grover::{closed_form_success, curve_point, grover_search, CurvePoint};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};
use crate::output::sig12;
use crate::seeds::rng_for;

pub const CLOSED_FORM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroverRow {
    pub p: u64,
    pub secret: u64,
    pub iterations: u64,
    #[serde(serialize_with = "sig12")]
    pub success_probability: f64,
    #[serde(serialize_with = "sig12")]
    pub closed_form: f64,
    pub within_tolerance: bool,
    pub measured_outcome: u64,
    pub oracle_queries: u64,
    pub min_iterations_two_thirds: u64,
    pub iteration_bound: u64,
    pub pass: bool,
}

impl Verdict for GroverRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

/// One simulated search per `p` on a seeded secret, plus the smallest
/// iteration count reaching success 2/3.
pub fn run_grover(ps: &[u64], iterations: Option<u64>, seed: u64) -> LabResult<Vec<GroverRow>> {
    let esc = Escrow::unseal();
    ps.par_iter()
        .map(|&p| {
            let m = modulus(p)?;
            let mut rng = rng_for(seed, "grover", p, 0);
            let o = IdentityOracle::with_secret(m.residue(rng.gen_range(0..p)));
            let run = grover_search(&esc, &o, iterations, rng.gen())?;
            let closed = closed_form_success(p, run.iterations);
            let within = (run.success_probability - closed).abs() <= CLOSED_FORM_TOLERANCE;
            let curve = curve_point(m)?;
            Ok(GroverRow {
                p,
                secret: run.secret,
                iterations: run.iterations,
                success_probability: run.success_probability,
                closed_form: closed,
                within_tolerance: within,
                measured_outcome: run.measured_outcome,
                oracle_queries: run.oracle_queries,
                min_iterations_two_thirds: curve.k,
                iteration_bound: curve.bound,
                pass: within && run.oracle_queries == run.iterations && curve.k <= curve.bound,
            })
        })
        .collect::<Result<Vec<_>, LabError>>()
}

/// [`curve_point`] for each `p`, computed in parallel.
pub fn grover_curve(ps: &[u64]) -> LabResult<Vec<CurvePoint>> {
    ps.par_iter().map(|&p| Ok(curve_point(modulus(p)?)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::fit_through_origin;

    #[test]
    fn rows_pass() {
        let rows = run_grover(&[3, 11, 101], None, 4).unwrap();
        assert!(rows.iter().all(|r| r.pass));
        assert_eq!(rows[0].min_iterations_two_thirds, 1);
        assert_eq!(rows, run_grover(&[3, 11, 101], None, 4).unwrap());
    }

    #[test]
    fn fitted_constant() {
        // k* is the first k with (2k+1)θ ≥ asin(√(2/3)), so k*/√p tends to
        // asin(√(2/3))/2 ≈ 0.4777
        let ps: Vec<u64> = (11..=4099u64).filter(|&n| idbb_core::modmath::is_prime(n)).step_by(25).collect();
        let pts = grover_curve(&ps).unwrap();
        let c = fit_through_origin(&pts.iter().map(|c| ((c.p as f64).sqrt(), c.k as f64)).collect::<Vec<_>>());
        let limit = (2.0f64 / 3.0).sqrt().asin() / 2.0;
        assert!((c - limit).abs() < 0.02, "c = {c}");
    }
}
