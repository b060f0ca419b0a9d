//! Random level-2 instances versus the lines `1 + u_1 x + u_2 y = 0`.
//!
//! An instance `(g, h, k, ℓ)` is good when, on every such line with
//! `(u_1, u_2) ≠ (0, 0)`, the polynomial
//! `(g_0 + g_1 x + g_2 y)(ℓ_0 + ℓ_1 x + ℓ_2 y) - (h_0 + h_1 x + h_2 y)(k_0 + k_1 x + k_2 y)`
//! has at most two zeros. Zeros are counted by enumerating `Z_p²`.

use idbb_core::modmath::PrimeModulus;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};
use crate::output::sig12;
use crate::seeds::rng_for;
use crate::stats::proportion_sigma;

pub const LEVEL2_LIMIT: u64 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Level2Instance {
    pub g: [u64; 3],
    pub h: [u64; 3],
    pub k: [u64; 3],
    pub l: [u64; 3],
}

impl Level2Instance {
    fn eval(&self, m: PrimeModulus, x: u64, y: u64) -> u64 {
        let lin = |c: &[u64; 3]| m.add(c[0], m.add(m.mul(c[1], x), m.mul(c[2], y)));
        m.sub(m.mul(lin(&self.g), lin(&self.l)), m.mul(lin(&self.h), lin(&self.k)))
    }

    /// Zero table of the polynomial over `Z_p²`, indexed `x·p + y`.
    fn zeros(&self, m: PrimeModulus) -> Vec<bool> {
        let p = m.get();
        (0..p * p).map(|i| self.eval(m, i / p, i % p) == 0).collect()
    }
}

/// The line with the most solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolutionCountSample {
    pub instance: Level2Instance,
    pub u: [u64; 3],
    pub solution_count: u64,
}

fn count_on_line(m: PrimeModulus, zeros: &[bool], u1: u64, u2: u64) -> u64 {
    let p = m.get();
    if u2 == 0 {
        let x = m.neg(m.inv(u1).expect("u1 nonzero"));
        (0..p).filter(|&y| zeros[(x * p + y) as usize]).count() as u64
    } else {
        let inv = m.neg(m.inv(u2).expect("u2 nonzero"));
        (0..p)
            .filter(|&x| {
                let y = m.mul(inv, m.add(1, m.mul(u1, x)));
                zeros[(x * p + y) as usize]
            })
            .count() as u64
    }
}

/// Solutions of the system on the line `u = (1, u_1, u_2)`.
pub fn line_solution_count(m: PrimeModulus, inst: &Level2Instance, u1: u64, u2: u64) -> LabResult<u64> {
    if u1.is_multiple_of(m.get()) && u2.is_multiple_of(m.get()) {
        return Err(LabError::Input("line needs (u1, u2) != (0, 0)".into()));
    }
    Ok(count_on_line(m, &inst.zeros(m), u1 % m.get(), u2 % m.get()))
}

/// Scans all `p² - 1` lines. Ties keep the lexicographically first `u`.
pub fn worst_line(m: PrimeModulus, inst: &Level2Instance) -> SolutionCountSample {
    let p = m.get();
    let zeros = inst.zeros(m);
    let mut best = SolutionCountSample { instance: *inst, u: [1, 0, 0], solution_count: 0 };
    let mut first = true;
    for u1 in 0..p {
        for u2 in 0..p {
            if u1 == 0 && u2 == 0 {
                continue;
            }
            let c = count_on_line(m, &zeros, u1, u2);
            if first || c > best.solution_count {
                best.u = [1, u1, u2];
                best.solution_count = c;
                first = false;
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Level2Row {
    pub p: u64,
    pub trials: u64,
    pub bad_instances: u64,
    #[serde(serialize_with = "sig12")]
    pub bad_fraction: f64,
    #[serde(serialize_with = "sig12")]
    pub bound: f64,
    #[serde(serialize_with = "sig12")]
    pub sigma: f64,
    #[serde(serialize_with = "sig12")]
    pub threshold: f64,
    pub max_solution_count: u64,
    pub generator_resamples: u64,
    pub pass: bool,
}

impl Verdict for Level2Row {
    fn passed(&self) -> bool {
        self.pass
    }
}

fn draw<R: Rng>(p: u64, rng: &mut R) -> [u64; 3] {
    [rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p)]
}

/// Fraction of uniform instances admitting a line with more than two
/// solutions, checked against `7/p + 3σ` where `σ` is the binomial deviation
/// at the bound. `g = 0` is never a generator and is redrawn.
pub fn run_level2_solution_counts(p: u64, trials: u64, seed: u64, force: bool) -> LabResult<Level2Row> {
    if p > LEVEL2_LIMIT && !force {
        return Err(LabError::Core(idbb_core::Error::EnumerationLimit { p, limit: LEVEL2_LIMIT }));
    }
    let m = modulus(p)?;
    let (bad, max_count, resamples) = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, "level2", p, i);
            let mut resamples = 0;
            let g = loop {
                let g = draw(p, &mut rng);
                if g != [0, 0, 0] {
                    break g;
                }
                resamples += 1;
            };
            let inst = Level2Instance { g, h: draw(p, &mut rng), k: draw(p, &mut rng), l: draw(p, &mut rng) };
            let w = worst_line(m, &inst);
            ((w.solution_count > 2) as u64, w.solution_count, resamples)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1.max(b.1), a.2 + b.2));
    let fraction = if trials == 0 { 0.0 } else { bad as f64 / trials as f64 };
    let bound = (7.0 / p as f64).min(1.0);
    let sigma = proportion_sigma(bound, trials);
    let threshold = bound + 3.0 * sigma;
    Ok(Level2Row {
        p,
        trials,
        bad_instances: bad,
        bad_fraction: fraction,
        bound,
        sigma,
        threshold,
        max_solution_count: max_count,
        generator_resamples: resamples,
        pass: fraction <= threshold,
    })
}
