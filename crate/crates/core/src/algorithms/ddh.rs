use alloc::vec::Vec;

use super::DHInstance;
use crate::blackbox::{grover_from_id, GroupElement, IdOracle, LinearPoly, SuitableVector};
use crate::modmath::{Residue, RootSet};
use crate::{Error, Result};

/// A DDH answer with the identity queries the decision itself spent. The
/// generator check is not included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DdhDecision {
    pub is_dh_quadruple: bool,
    pub queries: u64,
}

/// Confirms `Id(g) = 0` with one query.
pub fn check_generator<O: IdOracle + ?Sized>(o: &mut O, g: &GroupElement) -> Result<()> {
    if o.query(g)? {
        Err(Error::NotGenerator)
    } else {
        Ok(())
    }
}

/// Polynomial-time DDH in `G_{p,1}`.
///
/// The instance is a DH-quadruple iff the secret `s` is a root of
/// `p_g(x)p_ℓ(x) - p_h(x)p_k(x)`. A constant polynomial decides the instance
/// without queries; otherwise each of the at most two roots `r` is tested
/// with one query on `(r, -1)`.
pub fn ddh_decide_level1<O: IdOracle + ?Sized>(
    o: &mut O,
    inst: &DHInstance,
    nonresidue: Option<Residue>,
) -> Result<DdhDecision> {
    if inst.level() != 1 {
        return Err(Error::WrongLevel { expected: 1, found: inst.level() });
    }
    inst.check_oracle(o)?;
    let l = inst.require_l()?;
    check_generator(o, inst.g())?;
    let start = o.queries();

    let lhs = LinearPoly::of(inst.g()).times(&LinearPoly::of(l))?;
    let rhs = LinearPoly::of(inst.h()).times(&LinearPoly::of(inst.k()))?;
    let is_dh_quadruple = match lhs.checked_sub(&rhs)?.solve(nonresidue)? {
        RootSet::All => true,
        RootSet::Empty => false,
        roots => {
            let mut hit = false;
            for r in roots.to_vec() {
                if grover_from_id(o, r)? {
                    hit = true;
                    break;
                }
            }
            hit
        }
    };
    Ok(DdhDecision { is_dh_quadruple, queries: o.queries() - start })
}

/// Recovers the hidden suitable vector of any level by exhaustive search.
///
/// Coordinate `n_i` is the unique `x` with `Id(x·e_0 - e_i) = 1`; candidates
/// are tried in order, so the cost is at most `t·p` queries.
pub fn recover_hidden_vector<O: IdOracle + ?Sized>(o: &mut O) -> Result<SuitableVector> {
    let m = o.modulus();
    let t = o.level();
    let mut tail = Vec::with_capacity(t);
    for i in 1..=t {
        let mut found = None;
        for x in 0..m.get() {
            let mut probe = alloc::vec![0u64; t + 1];
            probe[0] = x;
            probe[i] = m.neg(1);
            if o.query(&GroupElement::from_canonical(m, probe))? {
                found = Some(x);
                break;
            }
        }
        tail.push(found.ok_or(Error::NotSuitable)?);
    }
    SuitableVector::new(m, &tail)
}

/// DDH at any level: recover `n` by exhaustive search, then compare
/// `φ(g)φ(ℓ)` with `φ(h)φ(k)`.
pub fn ddh_decide_by_search<O: IdOracle + ?Sized>(o: &mut O, inst: &DHInstance) -> Result<DdhDecision> {
    inst.check_oracle(o)?;
    let l = inst.require_l()?;
    check_generator(o, inst.g())?;
    let start = o.queries();
    let n = recover_hidden_vector(o)?;
    let m = o.modulus();
    let v = |e: &GroupElement| m.residue(n.eval(e));
    let is_dh_quadruple = v(inst.g()) * v(l) == v(inst.h()) * v(inst.k());
    Ok(DdhDecision { is_dh_quadruple, queries: o.queries() - start })
}
