//! DLOG and CDH once the secret is known. No oracle access.

use super::DHInstance;
use crate::blackbox::{GroupElement, SuitableVector};
use crate::modmath::Residue;
use crate::{Error, Result};

fn phi_known(secret: Residue, h: &GroupElement) -> Result<Residue> {
    if h.level() != 1 {
        return Err(Error::WrongLevel { expected: 1, found: h.level() });
    }
    if h.modulus() != secret.modulus() {
        return Err(Error::ModulusMismatch { left: secret.modulus().get(), right: h.modulus().get() });
    }
    Ok(secret.modulus().residue(SuitableVector::level1(secret).eval(h)))
}

/// `d = φ(h)·φ(g)^{-1}` under `n = (1, s)`.
pub fn dlog_given_secret(secret: Residue, g: &GroupElement, h: &GroupElement) -> Result<Residue> {
    let pg = phi_known(secret, g)?;
    if pg.is_zero() {
        return Err(Error::NotGenerator);
    }
    Ok(phi_known(secret, h)? * pg.inv()?)
}

/// The canonical `ℓ = (φ(h)φ(k)/φ(g), 0)`.
pub fn cdh_given_secret(secret: Residue, inst: &DHInstance) -> Result<GroupElement> {
    let pg = phi_known(secret, inst.g())?;
    if pg.is_zero() {
        return Err(Error::NotGenerator);
    }
    let x = phi_known(secret, inst.h())? * phi_known(secret, inst.k())? * pg.inv()?;
    Ok(GroupElement::canonical(x, 1))
}
