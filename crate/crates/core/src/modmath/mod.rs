//! Arithmetic in the prime field `F_p` for `p < 2^61`.
//!
//! [`PrimeModulus`] carries raw operations on canonical `u64` representatives
//! for hot loops; [`Residue`] is the checked value type that remembers its
//! modulus.

mod quadratic;
mod sqrt;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use quadratic::{solve_quadratic, QuadraticPoly, RootSet};
pub use sqrt::{find_nonresidue, find_nonresidue_random, legendre, sqrt_mod, QuadraticCharacter};

use crate::{Error, Result};

/// Witness bases making Miller-Rabin deterministic below 3.3·10^24.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// An odd prime `3 <= p < 2^61`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus {
    p: u64,
}

impl PrimeModulus {
    /// Exclusive upper bound on supported moduli.
    pub const LIMIT: u64 = 1 << 61;

    pub fn new(p: u64) -> Result<Self> {
        if !(3..Self::LIMIT).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.p
    }

    /// The residue class of `v`.
    #[inline]
    pub fn residue(self, v: u64) -> Residue {
        Residue { value: v % self.p, modulus: self }
    }

    /// The residue class of a signed integer.
    pub fn residue_signed(self, v: i64) -> Residue {
        let r = v.rem_euclid(self.p as i64) as u64;
        Residue { value: r, modulus: self }
    }

    #[inline]
    pub fn zero(self) -> Residue {
        Residue { value: 0, modulus: self }
    }

    #[inline]
    pub fn one(self) -> Residue {
        Residue { value: 1, modulus: self }
    }

    /// Iterates over `0, 1, …, p-1`.
    pub fn elements(self) -> impl Iterator<Item = Residue> {
        (0..self.p).map(move |value| Residue { value, modulus: self })
    }

    // Raw operations. Inputs must already be canonical (< p).

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        let mut b = base % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem; `a` must be nonzero.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.p - 2))
    }
}

impl fmt::Debug for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeModulus({})", self.p)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// Deterministic primality test for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &b in &MR_BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An element of `F_p`, always held in canonical form `0 <= value < p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: PrimeModulus,
}

impl Residue {
    #[inline]
    pub const fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub const fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Residue) -> Result<PrimeModulus> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.p,
                right: other.modulus.p,
            });
        }
        Ok(self.modulus)
    }

    pub fn try_add(self, other: Residue) -> Result<Residue> {
        let m = self.same_field(other)?;
        Ok(Residue { value: m.add(self.value, other.value), modulus: m })
    }

    pub fn try_sub(self, other: Residue) -> Result<Residue> {
        let m = self.same_field(other)?;
        Ok(Residue { value: m.sub(self.value, other.value), modulus: m })
    }

    pub fn try_mul(self, other: Residue) -> Result<Residue> {
        let m = self.same_field(other)?;
        Ok(Residue { value: m.mul(self.value, other.value), modulus: m })
    }

    pub fn pow(self, exp: u64) -> Residue {
        Residue { value: self.modulus.pow(self.value, exp), modulus: self.modulus }
    }

    pub fn inv(self) -> Result<Residue> {
        Ok(Residue { value: self.modulus.inv(self.value)?, modulus: self.modulus })
    }

    pub fn try_div(self, other: Residue) -> Result<Residue> {
        self.try_mul(other.inv()?)
    }
}

// The operator impls panic on mixed moduli; use the `try_*` methods when the
// moduli are not known to agree.

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.try_add(rhs).expect("residues from different fields")
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.try_sub(rhs).expect("residues from different fields")
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.try_mul(rhs).expect("residues from different fields")
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { value: self.modulus.neg(self.value), modulus: self.modulus }
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.p)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
