use idbb_core::algorithms::{ddh_decide_by_search, ddh_decide_level1, lift_instance, project_cdh_answer, DHInstance};
use idbb_core::blackbox::{phi, Escrow, GroupElement, IdentityOracle};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{modulus, Verdict};
use crate::error::{LabError, LabResult};
use crate::seeds::rng_for;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftRow {
    pub p: u64,
    pub instances: u64,
    pub dh_quadruples: u64,
    pub answers_preserved: u64,
    pub round_trips: u64,
    pub lifted_queries: u64,
    pub pass: bool,
}

impl Verdict for LiftRow {
    fn passed(&self) -> bool {
        self.pass
    }
}

/// Samples level-1 DDH instances, decides each directly and again through
/// the lifted oracle on the lifted instance, and checks that projecting the
/// lifted elements gives the originals back.
pub fn run_lift(p: u64, samples: u64, seed: u64) -> LabResult<LiftRow> {
    let m = modulus(p)?;
    let esc = Escrow::unseal();
    let (yes, preserved, trips, queries) = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, "lift", p, i);
            let s = m.residue(rng.gen_range(0..p));
            let mut o = IdentityOracle::with_secret(s);
            let n = o.reveal(&esc).clone();
            let mut el = || GroupElement::new(m, &[rng.gen_range(0..p), rng.gen_range(0..p)]).expect("two coordinates");
            let g = loop {
                let g = el();
                if !phi(&esc, &n, &g)?.is_zero() {
                    break g;
                }
            };
            // half the instances are made DH-quadruples so both answers occur
            let (h, k) = (el(), el());
            let l = if i % 2 == 0 {
                let inst = DHInstance::cdh(g.clone(), h.clone(), k.clone())?;
                idbb_core::algorithms::cdh_given_secret(s, &inst)?
            } else {
                el()
            };
            let inst = DHInstance::ddh(g, h, k, l)?;
            let direct = ddh_decide_level1(&mut o, &inst, None)?.is_dh_quadruple;
            let up = lift_instance(&inst);
            let mut lifted = o.lifted();
            let before = idbb_core::blackbox::IdOracle::queries(&lifted);
            let via_lift = ddh_decide_by_search(&mut lifted, &up)?.is_dh_quadruple;
            let spent = idbb_core::blackbox::IdOracle::queries(&lifted) - before;
            let round_trip = [
                (up.g(), inst.g()),
                (up.h(), inst.h()),
                (up.k(), inst.k()),
                (up.l().expect("ddh instance"), inst.l().expect("ddh instance")),
            ]
            .into_iter()
            .all(|(a, b)| project_cdh_answer(a).as_ref() == Ok(b));
            Ok((direct as u64, (direct == via_lift) as u64, round_trip as u64, spent))
        })
        .try_reduce(|| (0, 0, 0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3)))
        .map_err(LabError::Core)?;
    Ok(LiftRow {
        p,
        instances: samples,
        dh_quadruples: yes,
        answers_preserved: preserved,
        round_trips: trips,
        lifted_queries: queries,
        pass: preserved == samples && trips == samples,
    })
}
