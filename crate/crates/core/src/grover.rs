//! State-vector simulation of Grover search over `Z_p`.
//!
//! The phase oracle flips the sign of the basis state `s`. Classically this is
//! the bit `Id_s(x, -1)` for each basis state `x`; one application to a
//! superposition counts as a single query. The marked index is read from the
//! hidden vector once, through the escrow, when the oracle is built.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blackbox::{Escrow, IdentityOracle, IdOracle};
use crate::modmath::PrimeModulus;
use crate::{Error, Result};

/// Largest `p` the simulator accepts.
pub const MAX_P: u64 = 1 << 22;
pub const NORM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("empty state space"));
        }
        let a = Complex64::new(1.0 / libm::sqrt(n as f64), 0.0);
        let s = Self { amplitudes: vec![a; n] };
        s.check_norm()?;
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Drift is reported, never corrected.
    pub fn check_norm(&self) -> Result<()> {
        let drift = libm::fabs(libm::sqrt(self.norm_sqr()) - 1.0);
        if drift > NORM_TOLERANCE {
            return Err(Error::NormDrift { drift });
        }
        Ok(())
    }

    pub fn flip_phase(&mut self, index: usize) -> Result<()> {
        let a = self.amplitudes.get_mut(index).ok_or(Error::InvalidInput("basis index out of range"))?;
        *a = -*a;
        self.check_norm()
    }

    pub fn invert_about_mean(&mut self) -> Result<()> {
        let n = self.amplitudes.len() as f64;
        let mean = self.amplitudes.iter().sum::<Complex64>() / n;
        for a in &mut self.amplitudes {
            *a = mean * 2.0 - *a;
        }
        self.check_norm()
    }

    /// Samples a basis state from the measurement distribution.
    pub fn measure<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (i, a) in self.amplitudes.iter().enumerate() {
            acc += a.norm_sqr();
            if u < acc {
                return i;
            }
        }
        // rounding left a sliver above the last partial sum
        self.amplitudes.iter().rposition(|a| a.norm_sqr() > 0.0).unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct PhaseOracle {
    size: usize,
    marked: usize,
    queries: u64,
}

impl PhaseOracle {
    /// Oracle for `Δ_s` where `s` is the secret of a level-1 identity oracle.
    pub fn from_identity(escrow: &Escrow, o: &IdentityOracle) -> Result<Self> {
        if o.level() != 1 {
            return Err(Error::WrongLevel { expected: 1, found: o.level() });
        }
        let p = o.modulus().get();
        if p > MAX_P {
            return Err(Error::EnumerationLimit { p, limit: MAX_P });
        }
        let s = o.reveal(escrow).secret().value();
        Ok(Self { size: p as usize, marked: s as usize, queries: 0 })
    }

    /// Plain oracle on `n` states marking `marked`, with no group behind it.
    pub fn synthetic(n: usize, marked: usize) -> Result<Self> {
        if marked >= n {
            return Err(Error::InvalidInput("marked index out of range"));
        }
        Ok(Self { size: n, marked, queries: 0 })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&mut self, state: &mut StateVector) -> Result<()> {
        if state.len() != self.size {
            return Err(Error::DimensionMismatch { expected: self.size, found: state.len() });
        }
        self.queries += 1;
        state.flip_phase(self.marked)
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }
}

/// One Grover iteration: phase flip, then inversion about the mean.
pub fn grover_step(oracle: &mut PhaseOracle, state: &mut StateVector) -> Result<()> {
    oracle.apply(state)?;
    state.invert_about_mean()
}

/// `round((π/4)·√p − 1/2)`.
pub fn default_iterations(p: u64) -> u64 {
    let k = core::f64::consts::FRAC_PI_4 * libm::sqrt(p as f64) - 0.5;
    libm::round(k).max(0.0) as u64
}

/// `ceil((π/4)·√p)`.
pub fn iteration_bound(p: u64) -> u64 {
    libm::ceil(core::f64::consts::FRAC_PI_4 * libm::sqrt(p as f64)) as u64
}

/// `sin²((2k+1)θ)` with `sin θ = 1/√n`.
pub fn closed_form_success(n: u64, k: u64) -> f64 {
    let theta = libm::asin(1.0 / libm::sqrt(n as f64));
    let s = libm::sin((2 * k + 1) as f64 * theta);
    s * s
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroverRun {
    pub p: u64,
    pub secret: u64,
    pub iterations: u64,
    pub success_probability: f64,
    pub measured_outcome: u64,
    pub oracle_queries: u64,
}

/// Runs Grover search against a level-1 identity oracle.
pub fn grover_search(escrow: &Escrow, o: &IdentityOracle, iterations: Option<u64>, seed: u64) -> Result<GroverRun> {
    let mut oracle = PhaseOracle::from_identity(escrow, o)?;
    let p = o.modulus().get();
    let k = iterations.unwrap_or_else(|| default_iterations(p));
    let mut state = StateVector::uniform(oracle.size())?;
    for _ in 0..k {
        grover_step(&mut oracle, &mut state)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(GroverRun {
        p,
        secret: oracle.marked as u64,
        iterations: k,
        success_probability: state.probability(oracle.marked),
        measured_outcome: state.measure(&mut rng) as u64,
        oracle_queries: oracle.queries(),
    })
}

/// Success probability after `0, 1, …, max_k` iterations, from one pass.
pub fn success_profile(oracle: &mut PhaseOracle, max_k: u64) -> Result<Vec<f64>> {
    let mut state = StateVector::uniform(oracle.size())?;
    let mut out = Vec::with_capacity(max_k as usize + 1);
    out.push(state.probability(oracle.marked));
    for _ in 0..max_k {
        grover_step(oracle, &mut state)?;
        out.push(state.probability(oracle.marked));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub p: u64,
    pub k: u64,
    pub success_probability: f64,
    pub bound: u64,
}

/// Smallest `k` with success at least 2/3, for a single `p`.
pub fn curve_point(m: PrimeModulus) -> Result<CurvePoint> {
    let p = m.get();
    if p > MAX_P {
        return Err(Error::EnumerationLimit { p, limit: MAX_P });
    }
    let bound = iteration_bound(p);
    let mut oracle = PhaseOracle::synthetic(p as usize, 0)?;
    let mut state = StateVector::uniform(p as usize)?;
    let mut k = 0;
    loop {
        let prob = state.probability(0);
        if 3.0 * prob >= 2.0 {
            return Ok(CurvePoint { p, k, success_probability: prob, bound });
        }
        if k >= bound {
            return Err(Error::IterationBound { p, found: k + 1, bound });
        }
        grover_step(&mut oracle, &mut state)?;
        k += 1;
    }
}

/// [`curve_point`] for each `p`. Success is the same for every marked
/// index, so index 0 is marked.
pub fn quantum_query_curve(ps: &[PrimeModulus]) -> Result<Vec<CurvePoint>> {
    ps.iter().map(|&m| curve_point(m)).collect()
}
