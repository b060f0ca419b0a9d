//! The identity black-box group `G_{p,t}`: elements of `Z_p^{t+1}`, hidden
//! suitable vectors, and the oracles that expose them.

mod escrow;
mod oracle;

use alloc::vec::Vec;
use core::fmt;

pub use escrow::{field_inv, field_mul, is_dh_quadruple, phi, Escrow};
pub use oracle::{
    equal_in_group, grover_from_id, id_from_grover, normalize_oracle, GroverOracle, IdOracle,
    IdentityOracle, NormalizedOracle, RawIdentityOracle,
};

use crate::modmath::{PrimeModulus, QuadraticPoly, Residue};
use crate::{Error, Result};

/// An element of the ambient group `Z_p^{t+1}`.
///
/// Two elements are equal in `G_{p,t}` when their difference lies in the hidden
/// hyperplane; `PartialEq` here is equality of coordinate vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    modulus: PrimeModulus,
    coords: Vec<u64>,
}

impl GroupElement {
    /// Reduces each coordinate modulo `p`. Needs at least two coordinates.
    pub fn new(modulus: PrimeModulus, coords: &[u64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput("group elements need at least two coordinates"));
        }
        let coords = coords.iter().map(|&c| c % modulus.get()).collect();
        Ok(Self { modulus, coords })
    }

    pub fn from_signed(modulus: PrimeModulus, coords: &[i64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput("group elements need at least two coordinates"));
        }
        let coords = coords.iter().map(|&c| modulus.residue_signed(c).value()).collect();
        Ok(Self { modulus, coords })
    }

    pub fn from_residues(coords: &[Residue]) -> Result<Self> {
        let first = coords
            .first()
            .ok_or(Error::InvalidInput("group elements need at least two coordinates"))?;
        let modulus = first.modulus();
        if let Some(bad) = coords.iter().find(|c| c.modulus() != modulus) {
            return Err(Error::ModulusMismatch { left: modulus.get(), right: bad.modulus().get() });
        }
        let raw: Vec<u64> = coords.iter().map(|c| c.value()).collect();
        Self::new(modulus, &raw)
    }

    pub(crate) fn from_canonical(modulus: PrimeModulus, coords: Vec<u64>) -> Self {
        debug_assert!(coords.len() >= 2 && coords.iter().all(|&c| c < modulus.get()));
        Self { modulus, coords }
    }

    pub fn zero(modulus: PrimeModulus, level: usize) -> Self {
        Self { modulus, coords: alloc::vec![0; level + 1] }
    }

    /// The unit vector `e_i` of `Z_p^{level+1}`.
    pub fn unit(modulus: PrimeModulus, level: usize, i: usize) -> Self {
        let mut e = Self::zero(modulus, level);
        e.coords[i] = 1;
        e
    }

    /// The representative `(x, 0, …, 0)`, which every suitable vector maps to `x`.
    pub fn canonical(x: Residue, level: usize) -> Self {
        let mut e = Self::zero(x.modulus(), level);
        e.coords[0] = x.value();
        e
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn level(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Residue {
        self.modulus.residue(self.coords[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub(crate) fn check_compatible(&self, other: &GroupElement) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: other.modulus.get() });
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch { expected: self.coords.len(), found: other.coords.len() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| m.add(a, b)).collect();
        Ok(Self { modulus: m, coords })
    }

    pub fn checked_sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| m.sub(a, b)).collect();
        Ok(Self { modulus: m, coords })
    }

    pub fn neg(&self) -> GroupElement {
        let m = self.modulus;
        Self { modulus: m, coords: self.coords.iter().map(|&a| m.neg(a)).collect() }
    }

    /// `d·h` in additive notation.
    pub fn scale(&self, d: Residue) -> Result<GroupElement> {
        if d.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: d.modulus().get() });
        }
        let m = self.modulus;
        Ok(Self { modulus: m, coords: self.coords.iter().map(|&a| m.mul(a, d.value())).collect() })
    }

    /// Appends a zero coordinate, moving the element up one level.
    pub fn lift(&self) -> GroupElement {
        let mut coords = self.coords.clone();
        coords.push(0);
        Self { modulus: self.modulus, coords }
    }

    /// Drops the last coordinate. Level-1 elements cannot be projected.
    pub fn project(&self) -> Result<GroupElement> {
        if self.level() < 2 {
            return Err(Error::WrongLevel { expected: 2, found: self.level() });
        }
        Ok(Self { modulus: self.modulus, coords: self.coords[..self.coords.len() - 1].to_vec() })
    }

    /// Scalar product with raw canonical coordinates of the same length.
    pub(crate) fn dot(&self, other: &[u64]) -> u64 {
        let m = self.modulus;
        self.coords.iter().zip(other).fold(0, |acc, (&a, &b)| m.add(acc, m.mul(a, b)))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {})", self.coords, self.modulus.get())
    }
}

/// A hidden normal vector of the form `(1, n_1, …, n_t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuitableVector {
    modulus: PrimeModulus,
    coords: Vec<u64>,
}

impl SuitableVector {
    /// `(1, tail…)`; the level is `tail.len()`.
    pub fn new(modulus: PrimeModulus, tail: &[u64]) -> Result<Self> {
        if tail.is_empty() {
            return Err(Error::InvalidInput("suitable vectors have level at least 1"));
        }
        let mut coords = Vec::with_capacity(tail.len() + 1);
        coords.push(1);
        coords.extend(tail.iter().map(|&c| c % modulus.get()));
        Ok(Self { modulus, coords })
    }

    /// The level-1 vector `(1, s)`.
    pub fn level1(secret: Residue) -> Self {
        Self { modulus: secret.modulus(), coords: alloc::vec![1, secret.value()] }
    }

    pub fn from_coords(modulus: PrimeModulus, coords: &[u64]) -> Result<Self> {
        match coords.split_first() {
            Some((&1, tail)) => Self::new(modulus, tail),
            Some(_) => Err(Error::NotSuitable),
            None => Err(Error::InvalidInput("empty vector")),
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn level(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// `n_1`, the secret of a level-1 group.
    pub fn secret(&self) -> Residue {
        self.modulus.residue(self.coords[1])
    }

    /// `(n, 0)`: the hidden vector of the lifted group.
    pub fn lift(&self) -> SuitableVector {
        let mut coords = self.coords.clone();
        coords.push(0);
        Self { modulus: self.modulus, coords }
    }

    pub(crate) fn check_element(&self, h: &GroupElement) -> Result<()> {
        if h.modulus != self.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: h.modulus.get() });
        }
        if h.coords.len() != self.coords.len() {
            return Err(Error::DimensionMismatch { expected: self.coords.len(), found: h.coords.len() });
        }
        Ok(())
    }

    /// `h·n`, unchecked dimensions.
    pub(crate) fn eval(&self, h: &GroupElement) -> u64 {
        h.dot(&self.coords)
    }
}

impl fmt::Debug for SuitableVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuitableVector({:?} mod {})", self.coords, self.modulus.get())
    }
}

/// The linear polynomial `p_h(x_1, …, x_t) = h_0 + Σ h_i x_i` attached to `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPoly {
    modulus: PrimeModulus,
    coeffs: Vec<u64>,
}

impl LinearPoly {
    pub fn of(h: &GroupElement) -> Self {
        Self { modulus: h.modulus, coeffs: h.coords.clone() }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// Evaluates at `(x_1, …, x_t)`.
    pub fn eval(&self, point: &[Residue]) -> Result<Residue> {
        if point.len() + 1 != self.coeffs.len() {
            return Err(Error::DimensionMismatch { expected: self.coeffs.len() - 1, found: point.len() });
        }
        let m = self.modulus;
        let mut acc = m.residue(self.coeffs[0]);
        for (&c, &x) in self.coeffs[1..].iter().zip(point) {
            acc = acc.try_add(m.residue(c).try_mul(x)?)?;
        }
        Ok(acc)
    }

    /// Product of two univariate (level-1) polynomials.
    pub fn times(&self, other: &LinearPoly) -> Result<QuadraticPoly> {
        if self.coeffs.len() != 2 || other.coeffs.len() != 2 {
            return Err(Error::WrongLevel { expected: 1, found: self.coeffs.len().max(other.coeffs.len()) - 1 });
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: other.modulus.get() });
        }
        let m = self.modulus;
        let (a0, a1) = (self.coeffs[0], self.coeffs[1]);
        let (b0, b1) = (other.coeffs[0], other.coeffs[1]);
        Ok(QuadraticPoly::from_raw(
            m,
            m.mul(a1, b1),
            m.add(m.mul(a0, b1), m.mul(a1, b0)),
            m.mul(a0, b0),
        ))
    }
}

/// A coordinate permutation of `Z_p^{t+1}`: entry `i` of the image is entry
/// `map[i]` of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinatePermutation {
    map: Vec<usize>,
}

impl CoordinatePermutation {
    pub fn identity(len: usize) -> Self {
        Self { map: (0..len).collect() }
    }

    pub fn transposition(len: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(len);
        p.map.swap(a, b);
        p
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, h: &GroupElement) -> Result<GroupElement> {
        if h.coords.len() != self.map.len() {
            return Err(Error::DimensionMismatch { expected: self.map.len(), found: h.coords.len() });
        }
        Ok(GroupElement { modulus: h.modulus, coords: self.apply_raw(&h.coords) })
    }

    pub(crate) fn apply_raw(&self, v: &[u64]) -> Vec<u64> {
        self.map.iter().map(|&j| v[j]).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }
}
