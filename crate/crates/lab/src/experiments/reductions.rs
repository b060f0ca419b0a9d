use idbb_core::algorithms::{
    cdh_reduction_on_draw, dlog_reduction_on_draw, secret_from_cdh_random, secret_from_dlog_random, HonestCdh, HonestDlog,
};
use idbb_core::blackbox::{phi, Escrow, GroupElement, IdentityOracle};
use idbb_core::modmath::PrimeModulus;
use idbb_core::ratio::Ratio;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};
use crate::output::sig12;
use crate::seeds::rng_for;
use crate::stats::wilson_interval;

pub const Z: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionRow {
    pub p: u64,
    pub algorithm: &'static str,
    pub trials: u64,
    pub successes: u64,
    #[serde(serialize_with = "sig12")]
    pub rate: f64,
    #[serde(serialize_with = "sig12")]
    pub wilson_low: f64,
    #[serde(serialize_with = "sig12")]
    pub wilson_high: f64,
    pub bound: String,
    #[serde(serialize_with = "sig12")]
    pub bound_value: f64,
    pub generator_resamples: u64,
    pub pass: bool,
}

impl Verdict for ReductionRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

fn row(p: u64, algorithm: &'static str, trials: u64, successes: u64, resamples: u64, bound: Ratio) -> ReductionRow {
    let (lo, hi) = wilson_interval(successes, trials, Z);
    let rate = if trials == 0 { 0.0 } else { successes as f64 / trials as f64 };
    ReductionRow {
        p,
        algorithm,
        trials,
        successes,
        rate,
        wilson_low: lo,
        wilson_high: hi,
        bound: bound.to_string(),
        bound_value: bound.to_f64(),
        generator_resamples: resamples,
        pass: bound.to_f64() <= hi,
    }
}

/// Success rates of the random-instance DLOG and CDH reductions against
/// honest oracles, against the lower bounds `(p-1)/p` and `(p-2)/p`.
pub fn run_reduction_success(p: u64, trials: u64, seed: u64) -> LabResult<Vec<ReductionRow>> {
    let m = modulus(p)?;
    let esc = Escrow::unseal();
    let tally = |tag: &'static str| -> LabResult<(u64, u64)> {
        (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut rng = rng_for(seed, tag, p, i);
                let s = m.residue(rng.gen_range(0..p));
                let mut o = IdentityOracle::with_secret(s);
                let n = o.reveal(&esc).clone();
                let rec = if tag == "dlog" {
                    secret_from_dlog_random(&mut HonestDlog::new(&esc, n), &mut o, &mut rng)?
                } else {
                    secret_from_cdh_random(&mut HonestCdh::new(&esc, n), &mut o, &mut rng, None)?
                };
                Ok(((rec.secret == Some(s)) as u64, rec.generator_resamples))
            })
            .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))
            .map_err(LabError::Core)
    };
    let (dl, dl_resamples) = tally("dlog")?;
    let (cd, cd_resamples) = tally("cdh")?;
    Ok(vec![
        row(p, "dlog", trials, dl, dl_resamples, Ratio::new(p - 1, p)),
        row(p, "cdh", trials, cd, cd_resamples, Ratio::new(p - 2, p)),
    ])
}

/// Exact success probabilities over every secret, generator and draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactRates {
    pub dlog: Ratio,
    pub cdh: Ratio,
}

/// Full enumeration of the reductions' random choices. Cost is `O(p^7)`.
pub fn exact_reduction_rates(m: PrimeModulus) -> LabResult<ExactRates> {
    let esc = Escrow::unseal();
    let p = m.get();
    let elems: Vec<GroupElement> = (0..p * p).map(|i| GroupElement::new(m, &[i / p, i % p]).expect("two coordinates")).collect();
    let (mut dl_ok, mut dl_all, mut cd_ok, mut cd_all) = (0u64, 0u64, 0u64, 0u64);
    for s in m.elements() {
        let mut o = IdentityOracle::with_secret(s);
        let n = o.reveal(&esc).clone();
        let mut dlog = HonestDlog::new(&esc, n.clone());
        let mut cdh = HonestCdh::new(&esc, n.clone());
        for g in elems.iter().filter(|g| !phi(&esc, &n, g).expect("same level").is_zero()) {
            for h in &elems {
                dl_all += 1;
                dl_ok += (dlog_reduction_on_draw(&mut dlog, g, h)? == Some(s)) as u64;
                for k in &elems {
                    cd_all += 1;
                    cd_ok += (cdh_reduction_on_draw(&mut cdh, &mut o, g, h, k, None)? == Some(s)) as u64;
                }
            }
        }
    }
    Ok(ExactRates { dlog: Ratio::new(dl_ok, dl_all), cdh: Ratio::new(cd_ok, cd_all) })
}
