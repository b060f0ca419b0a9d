use idbb_core::adversary::{AdversaryReport, LevelTwoSpace, Summary, DEFAULT_LIMIT};
use idbb_core::modmath::PrimeModulus;
use rayon::prelude::*;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};
use crate::output::sig12;

/// Same result as the sequential core computation; queries are split
/// across threads and merged with an order-independent reduction.
pub fn adversary_report_parallel(m: PrimeModulus, limit: u64) -> LabResult<AdversaryReport> {
    if m.get() > limit {
        return Err(LabError::Core(idbb_core::Error::EnumerationLimit { p: m.get(), limit }));
    }
    let space = LevelTwoSpace::new(m);
    let summary = (0..space.query_count())
        .into_par_iter()
        .map(|i| space.evaluate(i))
        .reduce(Summary::default, Summary::merge);
    Ok(space.report(&summary)?)
}

fn pair(v: [u64; 2]) -> String {
    format!("({},{})", v[0], v[1])
}

fn triple(v: [u64; 3]) -> String {
    format!("({},{},{})", v[0], v[1], v[2])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdversaryRow {
    pub p: u64,
    pub count_positive: u64,
    pub count_negative: u64,
    pub sigma_positive: u64,
    pub sigma_negative: u64,
    pub worst_ratio_randomized: String,
    #[serde(serialize_with = "sig12")]
    pub worst_ratio_randomized_value: f64,
    #[serde(serialize_with = "sig12")]
    pub randomized_over_p: f64,
    pub randomized_witness_positive: String,
    pub randomized_witness_negative: String,
    pub randomized_witness_query: String,
    pub worst_ratio_quantum_squared: String,
    #[serde(serialize_with = "sig12")]
    pub worst_ratio_quantum: f64,
    pub quantum_witness_positive: String,
    pub quantum_witness_negative: String,
    pub quantum_witness_query: String,
    pub max_case1_count: u64,
    pub max_case2_count: u64,
    pub pass: bool,
}

impl Verdict for AdversaryRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

impl From<&AdversaryReport> for AdversaryRow {
    fn from(r: &AdversaryReport) -> Self {
        let p = r.p;
        let pass = r.count_positive == p - 1
            && r.count_negative == p * p - p + 1
            && r.sigma_positive == p * p - p + 1
            && r.sigma_negative == p - 1
            && r.max_case1_count <= 2
            && r.max_case2_count <= p;
        AdversaryRow {
            p,
            count_positive: r.count_positive,
            count_negative: r.count_negative,
            sigma_positive: r.sigma_positive,
            sigma_negative: r.sigma_negative,
            worst_ratio_randomized: r.worst_ratio_randomized.to_string(),
            worst_ratio_randomized_value: r.worst_ratio_randomized.to_f64(),
            randomized_over_p: r.worst_ratio_randomized.to_f64() / p as f64,
            randomized_witness_positive: pair(r.randomized_witness.positive),
            randomized_witness_negative: pair(r.randomized_witness.negative),
            randomized_witness_query: triple(r.randomized_witness.query),
            worst_ratio_quantum_squared: r.worst_ratio_quantum_squared.to_string(),
            worst_ratio_quantum: r.worst_ratio_quantum(),
            quantum_witness_positive: pair(r.quantum_witness.positive),
            quantum_witness_negative: pair(r.quantum_witness.negative),
            quantum_witness_query: triple(r.quantum_witness.query),
            max_case1_count: r.max_case1_count,
            max_case2_count: r.max_case2_count,
            pass,
        }
    }
}

pub fn run_adversary(ps: &[u64], force: bool) -> LabResult<Vec<AdversaryRow>> {
    let limit = if force { u64::MAX } else { DEFAULT_LIMIT };
    ps.iter()
        .map(|&p| {
            let m = modulus(p)?;
            let r = adversary_report_parallel(m, limit)?;
            Ok(AdversaryRow::from(&r))
        })
        .collect()
}
