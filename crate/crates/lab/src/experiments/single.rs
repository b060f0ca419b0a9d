use clap::ValueEnum;
use idbb_core::algorithms::{
    brute_force_secret_shuffled, ddh_decide_level1, recover_hidden_vector, secret_from_cdh, secret_from_dlog,
    CdhOracle, DHInstance, DlogOracle, HonestCdh, HonestDlog,
};
use idbb_core::blackbox::{is_dh_quadruple, Escrow, GroupElement, IdOracle, IdentityOracle, SuitableVector};
use rand::Rng;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};
use crate::seeds::rng_for;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Dlog,
    Cdh,
    Brute,
}

fn tuple(c: &[u64]) -> String {
    let parts: Vec<String> = c.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecretRow {
    pub p: u64,
    pub t: usize,
    pub algo: Algo,
    pub hidden: String,
    pub recovered: String,
    pub dlog_calls: u64,
    pub cdh_calls: u64,
    pub identity_queries: u64,
    pub pass: bool,
}

impl Verdict for SecretRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

/// Runs one secret-recovery algorithm against a freshly generated oracle.
/// The hidden vector comes from `secret` when given, else from the seed.
/// Above level 1 only exhaustive search applies.
pub fn recover_secret(p: u64, t: usize, algo: Algo, secret: Option<u64>, seed: u64) -> LabResult<SecretRow> {
    let m = modulus(p)?;
    if t == 0 {
        return Err(LabError::Input("level t must be at least 1".into()));
    }
    if t > 1 && algo != Algo::Brute {
        return Err(LabError::Input(format!("--algo {algo:?} needs t = 1")));
    }
    let mut rng = rng_for(seed, "secret", p, t as u64);
    let mut tail: Vec<u64> = (0..t).map(|_| rng.gen_range(0..p)).collect();
    if let Some(s) = secret {
        if s >= p {
            return Err(LabError::Input(format!("secret {s} is not below p = {p}")));
        }
        tail[0] = s;
    }
    let n = SuitableVector::new(m, &tail)?;
    let esc = Escrow::unseal();
    let mut o = IdentityOracle::new(n.clone());
    let (recovered, dlog_calls, cdh_calls) = match algo {
        Algo::Dlog => {
            let mut d = HonestDlog::new(&esc, n.clone());
            let s = secret_from_dlog(&mut d, m)?;
            (vec![1, s.value()], d.calls(), 0)
        }
        Algo::Cdh => {
            let mut c = HonestCdh::new(&esc, n.clone());
            let s = secret_from_cdh(&mut c, &mut o, None)?;
            (vec![1, s.value()], 0, c.calls())
        }
        Algo::Brute if t == 1 => (vec![1, brute_force_secret_shuffled(&mut o, &mut rng)?.secret.value()], 0, 0),
        Algo::Brute => (recover_hidden_vector(&mut o)?.coords().to_vec(), 0, 0),
    };
    Ok(SecretRow {
        p,
        t,
        algo,
        hidden: tuple(n.coords()),
        recovered: tuple(&recovered),
        dlog_calls,
        cdh_calls,
        identity_queries: o.queries(),
        pass: recovered == n.coords(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DdhRow {
    pub p: u64,
    pub secret: u64,
    pub g: String,
    pub h: String,
    pub k: String,
    pub l: String,
    pub dh_quadruple: bool,
    pub identity_queries: u64,
    pub generator_check_queries: u64,
    pub escrow_reference: bool,
    pub pass: bool,
}

impl Verdict for DdhRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

fn element(m: idbb_core::modmath::PrimeModulus, name: &str, c: &[u64]) -> LabResult<GroupElement> {
    if c.len() != 2 {
        return Err(LabError::Input(format!("--{name} needs two coordinates, got {}", c.len())));
    }
    Ok(GroupElement::new(m, c)?)
}

/// Decides a level-1 instance given as coordinate pairs and checks the
/// answer against the escrow reference.
pub fn decide_ddh(p: u64, coords: [&[u64]; 4], secret: Option<u64>, seed: u64) -> LabResult<DdhRow> {
    let m = modulus(p)?;
    let s = match secret {
        Some(s) if s >= p => return Err(LabError::Input(format!("secret {s} is not below p = {p}"))),
        Some(s) => s,
        None => rng_for(seed, "ddh", p, 0).gen_range(0..p),
    };
    let [g, h, k, l] = [
        element(m, "g", coords[0])?,
        element(m, "h", coords[1])?,
        element(m, "k", coords[2])?,
        element(m, "l", coords[3])?,
    ];
    let inst = DHInstance::ddh(g.clone(), h.clone(), k.clone(), l.clone())?;
    let mut o = IdentityOracle::with_secret(m.residue(s));
    let d = ddh_decide_level1(&mut o, &inst, None)?;
    let esc = Escrow::unseal();
    let reference = is_dh_quadruple(&esc, o.reveal(&esc), &g, &h, &k, &l)?;
    Ok(DdhRow {
        p,
        secret: s,
        g: tuple(g.coords()),
        h: tuple(h.coords()),
        k: tuple(k.coords()),
        l: tuple(l.coords()),
        dh_quadruple: d.is_dh_quadruple,
        identity_queries: d.queries,
        generator_check_queries: o.queries() - d.queries,
        escrow_reference: reference,
        pass: reference == d.is_dh_quadruple,
    })
}
