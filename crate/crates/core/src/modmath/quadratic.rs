use alloc::vec::Vec;

use super::{sqrt_mod, PrimeModulus, Residue};
use crate::{Error, Result};

/// `a2·x² + a1·x + a0` over `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticPoly {
    a2: Residue,
    a1: Residue,
    a0: Residue,
}

impl QuadraticPoly {
    pub fn new(a2: Residue, a1: Residue, a0: Residue) -> Result<Self> {
        for r in [a1, a0] {
            if r.modulus() != a2.modulus() {
                return Err(Error::ModulusMismatch {
                    left: a2.modulus().get(),
                    right: r.modulus().get(),
                });
            }
        }
        Ok(Self { a2, a1, a0 })
    }

    /// Builds from raw coefficients, reducing each modulo `p`.
    pub fn from_raw(m: PrimeModulus, a2: u64, a1: u64, a0: u64) -> Self {
        Self { a2: m.residue(a2), a1: m.residue(a1), a0: m.residue(a0) }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.a2.modulus()
    }

    /// Coefficients `[a2, a1, a0]`.
    pub fn coefficients(&self) -> [Residue; 3] {
        [self.a2, self.a1, self.a0]
    }

    pub fn is_zero(&self) -> bool {
        self.a2.is_zero() && self.a1.is_zero() && self.a0.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        if !self.a2.is_zero() {
            Some(2)
        } else if !self.a1.is_zero() {
            Some(1)
        } else if !self.a0.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn eval(&self, x: Residue) -> Residue {
        (self.a2 * x + self.a1) * x + self.a0
    }

    pub fn checked_sub(&self, other: &QuadraticPoly) -> Result<QuadraticPoly> {
        Ok(QuadraticPoly {
            a2: self.a2.try_sub(other.a2)?,
            a1: self.a1.try_sub(other.a1)?,
            a0: self.a0.try_sub(other.a0)?,
        })
    }

    pub fn solve(&self, nonresidue: Option<Residue>) -> Result<RootSet> {
        solve_quadratic(self, nonresidue)
    }
}

/// Roots of a polynomial of degree at most two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSet {
    Empty,
    Single(Residue),
    /// Two distinct roots, smaller first.
    Pair(Residue, Residue),
    /// The zero polynomial vanishes everywhere.
    All,
}

impl RootSet {
    fn pair(a: Residue, b: Residue) -> RootSet {
        match a.cmp(&b) {
            core::cmp::Ordering::Equal => RootSet::Single(a),
            core::cmp::Ordering::Less => RootSet::Pair(a, b),
            core::cmp::Ordering::Greater => RootSet::Pair(b, a),
        }
    }

    /// Finite roots in increasing order; empty for [`RootSet::All`].
    pub fn to_vec(&self) -> Vec<Residue> {
        match *self {
            RootSet::Empty | RootSet::All => Vec::new(),
            RootSet::Single(r) => alloc::vec![r],
            RootSet::Pair(a, b) => alloc::vec![a, b],
        }
    }

    pub fn contains(&self, x: Residue) -> bool {
        match *self {
            RootSet::Empty => false,
            RootSet::Single(r) => r == x,
            RootSet::Pair(a, b) => a == x || b == x,
            RootSet::All => true,
        }
    }
}

/// Exact root set of `q` in `F_p`.
pub fn solve_quadratic(q: &QuadraticPoly, nonresidue: Option<Residue>) -> Result<RootSet> {
    let m = q.modulus();
    match q.degree() {
        None => Ok(RootSet::All),
        Some(0) => Ok(RootSet::Empty),
        Some(1) => Ok(RootSet::Single(-q.a0 * q.a1.inv()?)),
        _ => {
            let two = m.residue(2);
            let four = m.residue(4);
            let disc = q.a1 * q.a1 - four * q.a2 * q.a0;
            let Some((r, s)) = sqrt_mod(disc, nonresidue)? else {
                return Ok(RootSet::Empty);
            };
            let denom = (two * q.a2).inv()?;
            Ok(RootSet::pair((-q.a1 + r) * denom, (-q.a1 + s) * denom))
        }
    }
}
