//! Honest DLOG and CDH oracles, simulated from escrowed knowledge of `n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CdhOracle, DlogOracle};
use crate::blackbox::{phi, Escrow, GroupElement, SuitableVector};
use crate::{Error, Result};

/// Answers `d = φ(h)·φ(g)^{-1}`, optionally shifted by whole periods so that
/// callers must reduce modulo `p` themselves.
#[derive(Debug)]
pub struct HonestDlog {
    escrow: Escrow,
    n: SuitableVector,
    periods: u64,
    calls: u64,
}

impl HonestDlog {
    pub fn new(escrow: &Escrow, n: SuitableVector) -> Self {
        Self { escrow: escrow.clone(), n, periods: 0, calls: 0 }
    }

    /// Answers `d + periods·p` instead of the canonical `d`.
    pub fn unreduced(mut self, periods: u64) -> Self {
        self.periods = periods;
        self
    }
}

impl DlogOracle for HonestDlog {
    fn dlog(&mut self, g: &GroupElement, h: &GroupElement) -> Result<u64> {
        self.calls += 1;
        let pg = phi(&self.escrow, &self.n, g)?;
        if pg.is_zero() {
            return Err(Error::NotGenerator);
        }
        let d = phi(&self.escrow, &self.n, h)? * pg.inv()?;
        Ok(d.value() + self.periods * self.n.modulus().get())
    }

    fn calls(&self) -> u64 {
        self.calls
    }
}

/// Answers the canonical representative of `φ(h)φ(k)/φ(g)`, or, when
/// seeded, that representative plus a random element of the hidden
/// hyperplane.
#[derive(Debug)]
pub struct HonestCdh {
    escrow: Escrow,
    n: SuitableVector,
    scramble: Option<ChaCha8Rng>,
    calls: u64,
}

impl HonestCdh {
    pub fn new(escrow: &Escrow, n: SuitableVector) -> Self {
        Self { escrow: escrow.clone(), n, scramble: None, calls: 0 }
    }

    pub fn randomized(escrow: &Escrow, n: SuitableVector, seed: u64) -> Self {
        let mut c = Self::new(escrow, n);
        c.scramble = Some(ChaCha8Rng::seed_from_u64(seed));
        c
    }

    fn kernel_element(n: &SuitableVector, rng: &mut ChaCha8Rng) -> GroupElement {
        let m = n.modulus();
        let mut coords = alloc::vec![0u64; n.coords().len()];
        let mut acc = 0;
        for (slot, &ni) in coords.iter_mut().zip(n.coords()).skip(1) {
            *slot = rng.gen_range(0..m.get());
            acc = m.add(acc, m.mul(*slot, ni));
        }
        coords[0] = m.neg(acc);
        GroupElement::from_canonical(m, coords)
    }
}

impl CdhOracle for HonestCdh {
    fn cdh(&mut self, g: &GroupElement, h: &GroupElement, k: &GroupElement) -> Result<GroupElement> {
        self.calls += 1;
        let pg = phi(&self.escrow, &self.n, g)?;
        if pg.is_zero() {
            return Err(Error::NotGenerator);
        }
        let x = phi(&self.escrow, &self.n, h)? * phi(&self.escrow, &self.n, k)? * pg.inv()?;
        let canonical = GroupElement::canonical(x, self.n.level());
        match self.scramble.as_mut() {
            None => Ok(canonical),
            Some(rng) => canonical.checked_add(&Self::kernel_element(&self.n, rng)),
        }
    }

    fn calls(&self) -> u64 {
        self.calls
    }
}
