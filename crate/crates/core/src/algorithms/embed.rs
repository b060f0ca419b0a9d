//! Embedding a cyclic group of prime order `p` given by elements of `Z_q^*`
//! into an identity black-box group with ambient group `Z_p^k`.
//!
//! With `ψ_i(x) = g_i^x` computed by square-and-multiply, the oracle
//! `Id'(x_1, …, x_k) = [ψ_1(x_1)·…·ψ_k(x_k) = 1]` costs `O(k log p)`
//! multiplications modulo `q` and one identity test in `Z_q^*`. If
//! `g_i = g_1^{a_i}` then the hidden vector is `(1, a_2, …, a_k)`.

use alloc::vec::Vec;

use super::DHInstance;
use crate::blackbox::{GroupElement, IdOracle};
use crate::modmath::{is_prime, PrimeModulus};
use crate::{Error, Result};

/// `q = 2p + 1` when that is prime.
pub fn safe_prime_partner(p: u64) -> Result<u64> {
    let q = p.checked_mul(2).and_then(|x| x.checked_add(1)).ok_or(Error::ModulusOutOfRange(p))?;
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(q)
}

/// Smallest element of order exactly `p` in `Z_q^*`.
pub fn subgroup_generator(q: u64, p: u64) -> Result<u64> {
    let qm = PrimeModulus::new(q)?;
    if !(q - 1).is_multiple_of(p) {
        return Err(Error::OrderDoesNotDivide { p, q });
    }
    (2..q)
        .find(|&x| qm.pow(x, p) == 1)
        .ok_or(Error::OrderDoesNotDivide { p, q })
}

#[derive(Debug, Clone)]
pub struct EmbeddedGroup {
    q: PrimeModulus,
    p: PrimeModulus,
    gens: Vec<u64>,
    queries: u64,
    multiplications: u64,
}

impl EmbeddedGroup {
    /// `gens[0]` must have order exactly `p` modulo `q`; the others must have
    /// order dividing `p`. At least two elements are required.
    pub fn new(q: u64, p: u64, gens: &[u64]) -> Result<Self> {
        let qm = PrimeModulus::new(q)?;
        let pm = PrimeModulus::new(p)?;
        if !(q - 1).is_multiple_of(p) {
            return Err(Error::OrderDoesNotDivide { p, q });
        }
        if gens.len() < 2 {
            return Err(Error::InvalidInput("embedding needs at least two group elements"));
        }
        for (i, &g) in gens.iter().enumerate() {
            let g = g % q;
            let in_subgroup = g != 0 && qm.pow(g, p) == 1;
            if !in_subgroup || (i == 0 && g == 1) {
                return Err(Error::WrongOrder { element: g, p, q });
            }
        }
        Ok(Self {
            q: qm,
            p: pm,
            gens: gens.iter().map(|&g| g % q).collect(),
            queries: 0,
            multiplications: 0,
        })
    }

    pub fn q(&self) -> u64 {
        self.q.get()
    }

    /// Modular multiplications spent on exponentiations so far.
    pub fn multiplications(&self) -> u64 {
        self.multiplications
    }

    /// The unit-vector instance `(e_0, e_1, e_2, e_3)` corresponding to the
    /// quadruple `(g_1, g_2, g_3, g_4)`.
    pub fn ddh_instance(&self) -> Result<DHInstance> {
        if self.gens.len() != 4 {
            return Err(Error::InvalidInput("DDH embedding needs exactly four group elements"));
        }
        let e = |i| GroupElement::unit(self.p, 3, i);
        DHInstance::ddh(e(0), e(1), e(2), e(3))
    }

    fn psi(&mut self, base: u64, exp: u64) -> u64 {
        let q = self.q;
        let mut acc = 1;
        let mut b = base;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = q.mul(acc, b);
                self.multiplications += 1;
            }
            e >>= 1;
            if e > 0 {
                b = q.mul(b, b);
                self.multiplications += 1;
            }
        }
        acc
    }
}

impl IdOracle for EmbeddedGroup {
    fn modulus(&self) -> PrimeModulus {
        self.p
    }

    fn level(&self) -> usize {
        self.gens.len() - 1
    }

    fn query(&mut self, h: &GroupElement) -> Result<bool> {
        if h.modulus() != self.p {
            return Err(Error::ModulusMismatch { left: self.p.get(), right: h.modulus().get() });
        }
        if h.coords().len() != self.gens.len() {
            return Err(Error::DimensionMismatch { expected: self.gens.len(), found: h.coords().len() });
        }
        self.queries += 1;
        let mut prod = 1;
        for i in 0..self.gens.len() {
            let term = self.psi(self.gens[i], h.coords()[i]);
            prod = self.q.mul(prod, term);
            self.multiplications += 1;
        }
        Ok(prod == 1)
    }

    fn queries(&self) -> u64 {
        self.queries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{ddh_decide_by_search, recover_hidden_vector};

    fn pow(b: u64, e: u64, q: u64) -> u64 {
        (0..e).fold(1, |acc, _| acc * b % q)
    }

    /// Brute-force discrete log of `x` to base `g` in `Z_q^*`.
    fn brute_dlog(g: u64, x: u64, q: u64, p: u64) -> u64 {
        (0..p).find(|&e| pow(g, e, q) == x).unwrap()
    }

    #[test]
    fn safe_prime_setup() {
        assert_eq!(safe_prime_partner(11).unwrap(), 23);
        assert_eq!(safe_prime_partner(7), Err(Error::NotPrime(15)));
        assert_eq!(subgroup_generator(23, 11).unwrap(), 2);
        assert_eq!(pow(2, 11, 23), 1);
    }

    #[test]
    fn validation() {
        assert!(matches!(EmbeddedGroup::new(23, 7, &[2, 4]), Err(Error::OrderDoesNotDivide { .. })));
        // 5 has order 22 mod 23
        assert!(matches!(EmbeddedGroup::new(23, 11, &[2, 5]), Err(Error::WrongOrder { element: 5, .. })));
        assert!(matches!(EmbeddedGroup::new(23, 11, &[1, 2]), Err(Error::WrongOrder { element: 1, .. })));
        assert!(EmbeddedGroup::new(23, 11, &[2, 1, 1, 1]).is_ok());
    }

    #[test]
    fn fixture_quadruple_is_dh() {
        let (q, p, g1) = (23, 11, 2);
        let gens = [g1, pow(g1, 3, q), pow(g1, 4, q), pow(g1, 12, q)];
        assert_eq!(gens[3], g1);
        let (a, b, c) = (brute_dlog(g1, gens[1], q, p), brute_dlog(g1, gens[2], q, p), brute_dlog(g1, gens[3], q, p));
        assert_eq!((a, b, c), (3, 4, 1));
        let mut emb = EmbeddedGroup::new(q, p, &gens).unwrap();
        let inst = emb.ddh_instance().unwrap();
        assert!(ddh_decide_by_search(&mut emb, &inst).unwrap().is_dh_quadruple);
    }

    #[test]
    fn trivial_exponents_are_dh() {
        let mut emb = EmbeddedGroup::new(23, 11, &[2, 1, 1, 1]).unwrap();
        let inst = emb.ddh_instance().unwrap();
        assert!(ddh_decide_by_search(&mut emb, &inst).unwrap().is_dh_quadruple);
    }

    #[test]
    fn hidden_vector_is_exponent_vector() {
        let (q, p, g1) = (23, 11, 2);
        let mut emb = EmbeddedGroup::new(q, p, &[g1, pow(g1, 5, q), pow(g1, 9, q)]).unwrap();
        let n = recover_hidden_vector(&mut emb).unwrap();
        assert_eq!(n.coords(), &[1, 5, 9]);
    }

    #[test]
    fn query_cost_is_logarithmic() {
        let mut emb = EmbeddedGroup::new(23, 11, &[2, 4, 8, 16]).unwrap();
        let h = GroupElement::new(crate::modmath::PrimeModulus::new(11).unwrap(), &[10, 10, 10, 10]).unwrap();
        emb.query(&h).unwrap();
        // 10 = 0b1010: 3 squarings + 2 products per coordinate, plus 4 combining products
        assert_eq!(emb.multiplications(), 4 * 5 + 4);
    }
}
