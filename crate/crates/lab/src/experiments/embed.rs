use idbb_core::algorithms::{ddh_decide_by_search, safe_prime_partner, subgroup_generator, EmbeddedGroup};
use idbb_core::blackbox::IdOracle;
use idbb_core::modmath::PrimeModulus;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};

pub const EMBED_LIMIT: u64 = 101;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingRow {
    pub p: u64,
    pub q: u64,
    pub generator: u64,
    pub triples: u64,
    pub dh_quadruples: u64,
    pub agreements: u64,
    pub identity_queries: u64,
    pub multiplications: u64,
    pub pass: bool,
}

impl Verdict for EmbeddingRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

/// For every `(a, b, c)` decides DDH for `(g, g^a, g^b, g^c)` in the order-`p`
/// subgroup mod `q = 2p + 1` through the embedded identity oracle, and
/// compares with `c = ab mod p`.
pub fn run_embedding(p: u64, force: bool) -> LabResult<EmbeddingRow> {
    if p > EMBED_LIMIT && !force {
        return Err(LabError::Core(idbb_core::Error::EnumerationLimit { p, limit: EMBED_LIMIT }));
    }
    let fp = modulus(p)?;
    let q = safe_prime_partner(p)?;
    let fq = PrimeModulus::new(q)?;
    let g = subgroup_generator(q, p)?;
    let (mut yes, mut agree, mut queries, mut mults) = (0, 0, 0, 0);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let gens = [g, fq.pow(g, a), fq.pow(g, b), fq.pow(g, c)];
                let mut emb = EmbeddedGroup::new(q, p, &gens)?;
                let inst = emb.ddh_instance()?;
                let d = ddh_decide_by_search(&mut emb, &inst)?;
                let truth = fp.mul(a, b) == c;
                yes += d.is_dh_quadruple as u64;
                agree += (d.is_dh_quadruple == truth) as u64;
                queries += emb.queries();
                mults += emb.multiplications();
            }
        }
    }
    let triples = p * p * p;
    Ok(EmbeddingRow {
        p,
        q,
        generator: g,
        triples,
        dh_quadruples: yes,
        agreements: agree,
        identity_queries: queries,
        multiplications: mults,
        pass: agree == triples && yes == p * p,
    })
}
