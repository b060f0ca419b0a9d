//! Upper-bound algorithms and reductions.
//!
//! Nothing in this module holds an [`Escrow`](crate::blackbox::Escrow): the
//! hidden vector is reachable only through [`IdOracle`] queries and through
//! the DLOG/CDH oracle handles passed in by the caller.

mod ddh;
mod embed;
mod honest;
mod lift;
mod secret;
mod solve;

pub use ddh::{check_generator, ddh_decide_by_search, ddh_decide_level1, recover_hidden_vector, DdhDecision};
pub use embed::{safe_prime_partner, subgroup_generator, EmbeddedGroup};
pub use honest::{HonestCdh, HonestDlog};
pub use lift::{lift_instance, project_cdh_answer, LoweredCdh, LoweredDlog};
pub use secret::{
    brute_force_secret, brute_force_secret_shuffled, cdh_reduction_on_draw, dlog_reduction_on_draw, sample_generator,
    secret_from_cdh, secret_from_cdh_random, secret_from_dlog, secret_from_dlog_checked, secret_from_dlog_random,
    BruteForceResult, RandomizedRecovery,
};
pub use solve::{cdh_given_secret, dlog_given_secret};

use crate::blackbox::{GroupElement, IdOracle};
use crate::modmath::PrimeModulus;
use crate::{Error, Result};

/// Oracle solving `DLOG(G_{p,t})`: a non-negative `d` with `d·g = h`.
pub trait DlogOracle {
    fn dlog(&mut self, g: &GroupElement, h: &GroupElement) -> Result<u64>;

    fn calls(&self) -> u64;
}

/// Oracle solving `CDH(G_{p,t})`: some `ℓ` making `(g, h, k, ℓ)` a DH-quadruple.
pub trait CdhOracle {
    fn cdh(&mut self, g: &GroupElement, h: &GroupElement, k: &GroupElement) -> Result<GroupElement>;

    fn calls(&self) -> u64;
}

impl<D: DlogOracle + ?Sized> DlogOracle for &mut D {
    fn dlog(&mut self, g: &GroupElement, h: &GroupElement) -> Result<u64> {
        (**self).dlog(g, h)
    }

    fn calls(&self) -> u64 {
        (**self).calls()
    }
}

impl<C: CdhOracle + ?Sized> CdhOracle for &mut C {
    fn cdh(&mut self, g: &GroupElement, h: &GroupElement, k: &GroupElement) -> Result<GroupElement> {
        (**self).cdh(g, h, k)
    }

    fn calls(&self) -> u64 {
        (**self).calls()
    }
}

/// A DH instance `(g, h, k)` with an optional fourth element `ℓ`.
///
/// All elements share one level and modulus. `g` is promised to be a
/// generator; algorithms check the promise with one identity query that they
/// report separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DHInstance {
    g: GroupElement,
    h: GroupElement,
    k: GroupElement,
    l: Option<GroupElement>,
}

impl DHInstance {
    pub fn cdh(g: GroupElement, h: GroupElement, k: GroupElement) -> Result<Self> {
        g.check_compatible(&h)?;
        g.check_compatible(&k)?;
        Ok(Self { g, h, k, l: None })
    }

    pub fn ddh(g: GroupElement, h: GroupElement, k: GroupElement, l: GroupElement) -> Result<Self> {
        Self::cdh(g, h, k)?.with_answer(l)
    }

    pub fn with_answer(mut self, l: GroupElement) -> Result<Self> {
        self.g.check_compatible(&l)?;
        self.l = Some(l);
        Ok(self)
    }

    pub fn g(&self) -> &GroupElement {
        &self.g
    }

    pub fn h(&self) -> &GroupElement {
        &self.h
    }

    pub fn k(&self) -> &GroupElement {
        &self.k
    }

    pub fn l(&self) -> Option<&GroupElement> {
        self.l.as_ref()
    }

    pub fn level(&self) -> usize {
        self.g.level()
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.g.modulus()
    }

    pub(crate) fn require_l(&self) -> Result<&GroupElement> {
        self.l.as_ref().ok_or(Error::InvalidInput("DDH needs the fourth element"))
    }

    pub(crate) fn check_oracle<O: IdOracle + ?Sized>(&self, o: &O) -> Result<()> {
        if o.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch { left: o.modulus().get(), right: self.modulus().get() });
        }
        if o.level() != self.level() {
            return Err(Error::WrongLevel { expected: o.level(), found: self.level() });
        }
        Ok(())
    }
}
