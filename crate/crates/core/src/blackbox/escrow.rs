//! Trusted access to the hidden vector.
//!
//! Everything here computes with `n` directly and therefore requires an
//! [`Escrow`] token. Nothing under [`crate::algorithms`] takes one; the only
//! consumers are the honest oracle simulators, the Grover simulator's phase
//! oracle, and test or reference code.

use super::{GroupElement, SuitableVector};
use crate::modmath::Residue;
use crate::Result;

/// Capability for reading the hidden vector of an identity oracle.
#[derive(Debug, Clone)]
pub struct Escrow {
    _sealed: (),
}

impl Escrow {
    /// Grants escrow to trusted reference code.
    pub fn unseal() -> Self {
        Escrow { _sealed: () }
    }
}

/// The isomorphism `G_{p,t} -> Z_p`, `h ↦ h·n`. Not an oracle query.
pub fn phi(_escrow: &Escrow, n: &SuitableVector, h: &GroupElement) -> Result<Residue> {
    n.check_element(h)?;
    Ok(n.modulus().residue(n.eval(h)))
}

/// Field product transported through `phi`, returned as the canonical
/// representative `(φ(h)·φ(k), 0, …, 0)`.
pub fn field_mul(escrow: &Escrow, n: &SuitableVector, h: &GroupElement, k: &GroupElement) -> Result<GroupElement> {
    let x = phi(escrow, n, h)? * phi(escrow, n, k)?;
    Ok(GroupElement::canonical(x, n.level()))
}

/// Field inverse transported through `phi`.
pub fn field_inv(escrow: &Escrow, n: &SuitableVector, h: &GroupElement) -> Result<GroupElement> {
    let x = phi(escrow, n, h)?.inv()?;
    Ok(GroupElement::canonical(x, n.level()))
}

/// Reference DDH answer: with `g` a generator, `(g, h, k, ℓ)` is a
/// DH-quadruple iff `φ(g)φ(ℓ) = φ(h)φ(k)`.
pub fn is_dh_quadruple(
    escrow: &Escrow,
    n: &SuitableVector,
    g: &GroupElement,
    h: &GroupElement,
    k: &GroupElement,
    l: &GroupElement,
) -> Result<bool> {
    let pg = phi(escrow, n, g)?;
    if pg.is_zero() {
        return Err(crate::Error::NotGenerator);
    }
    Ok(pg * phi(escrow, n, l)? == phi(escrow, n, h)? * phi(escrow, n, k)?)
}
