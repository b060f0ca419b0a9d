use alloc::vec::Vec;

use super::{CoordinatePermutation, Escrow, GroupElement, SuitableVector};
use crate::modmath::{PrimeModulus, Residue};
use crate::{Error, Result};

/// Membership oracle for the hidden hyperplane of a group of some level.
///
/// Every call to [`IdOracle::query`] is one counted query.
pub trait IdOracle {
    fn modulus(&self) -> PrimeModulus;

    fn level(&self) -> usize;

    /// `true` iff `h` encodes the identity, i.e. `h·n = 0`.
    fn query(&mut self, h: &GroupElement) -> Result<bool>;

    /// Queries answered so far.
    fn queries(&self) -> u64;
}

impl<O: IdOracle + ?Sized> IdOracle for &mut O {
    fn modulus(&self) -> PrimeModulus {
        (**self).modulus()
    }

    fn level(&self) -> usize {
        (**self).level()
    }

    fn query(&mut self, h: &GroupElement) -> Result<bool> {
        (**self).query(h)
    }

    fn queries(&self) -> u64 {
        (**self).queries()
    }
}

/// `Id_n` for a hidden suitable vector `n`, with a query counter and an
/// optional hard budget.
#[derive(Debug, Clone)]
pub struct IdentityOracle {
    hidden: SuitableVector,
    queries: u64,
    budget: Option<u64>,
}

impl IdentityOracle {
    pub fn new(hidden: SuitableVector) -> Self {
        Self { hidden, queries: 0, budget: None }
    }

    /// Level-1 oracle `Id_s` with hidden vector `(1, s)`.
    pub fn with_secret(secret: Residue) -> Self {
        Self::new(SuitableVector::level1(secret))
    }

    /// Refuses any query past the first `budget`.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    /// Escrow-only view of the hidden vector.
    pub fn reveal(&self, _escrow: &Escrow) -> &SuitableVector {
        &self.hidden
    }

    /// The oracle `Id_{(n,0)}` of the lifted group, simulated by this oracle:
    /// `h*·(n,0)` only depends on the first `t+1` coordinates of `h*`.
    pub fn lifted(&mut self) -> LiftedOracle<'_> {
        LiftedOracle { inner: self }
    }
}

impl IdOracle for IdentityOracle {
    fn modulus(&self) -> PrimeModulus {
        self.hidden.modulus()
    }

    fn level(&self) -> usize {
        self.hidden.level()
    }

    fn query(&mut self, h: &GroupElement) -> Result<bool> {
        self.hidden.check_element(h)?;
        if let Some(budget) = self.budget {
            if self.queries >= budget {
                return Err(Error::BudgetExhausted { budget });
            }
        }
        self.queries += 1;
        Ok(self.hidden.eval(h) == 0)
    }

    fn queries(&self) -> u64 {
        self.queries
    }
}

/// Identity oracle one level up, answering through the level-`t` oracle it
/// borrows. Queries are charged to the inner oracle.
#[derive(Debug)]
pub struct LiftedOracle<'a> {
    inner: &'a mut IdentityOracle,
}

impl IdOracle for LiftedOracle<'_> {
    fn modulus(&self) -> PrimeModulus {
        self.inner.modulus()
    }

    fn level(&self) -> usize {
        self.inner.level() + 1
    }

    fn query(&mut self, h: &GroupElement) -> Result<bool> {
        let expected = self.level() + 1;
        if h.coords().len() != expected {
            return Err(Error::DimensionMismatch { expected, found: h.coords().len() });
        }
        self.inner.query(&h.project()?)
    }

    fn queries(&self) -> u64 {
        self.inner.queries()
    }
}

/// `x = y` in the group iff `Id(x - y) = 1`. One query.
pub fn equal_in_group<O: IdOracle + ?Sized>(o: &mut O, a: &GroupElement, b: &GroupElement) -> Result<bool> {
    o.query(&a.checked_sub(b)?)
}

/// `Δ_s(x)` from `Id_s` with exactly one query on `(x, -1)`.
pub fn grover_from_id<O: IdOracle + ?Sized>(o: &mut O, x: Residue) -> Result<bool> {
    if o.level() != 1 {
        return Err(Error::WrongLevel { expected: 1, found: o.level() });
    }
    let m = o.modulus();
    if x.modulus() != m {
        return Err(Error::ModulusMismatch { left: m.get(), right: x.modulus().get() });
    }
    o.query(&GroupElement::from_canonical(m, alloc::vec![x.value(), m.neg(1)]))
}

/// The point-indicator oracle `Δ_s` over `Z_p`.
#[derive(Debug, Clone)]
pub struct GroverOracle {
    hidden: Residue,
    queries: u64,
}

impl GroverOracle {
    pub fn new(secret: Residue) -> Self {
        Self { hidden: secret, queries: 0 }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.hidden.modulus()
    }

    pub fn query(&mut self, x: Residue) -> Result<bool> {
        if x.modulus() != self.hidden.modulus() {
            return Err(Error::ModulusMismatch { left: self.hidden.modulus().get(), right: x.modulus().get() });
        }
        self.queries += 1;
        Ok(x == self.hidden)
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }
}

/// `Id_s(h)` from `Δ_s` with at most one query:
/// `1` if `h = (0,0)`, `0` if `h_1 = 0 ≠ h_0`, else `Δ_s(-h_0 h_1^{-1})`.
pub fn id_from_grover(g: &mut GroverOracle, h: &GroupElement) -> Result<bool> {
    if h.level() != 1 {
        return Err(Error::WrongLevel { expected: 1, found: h.level() });
    }
    if h.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch { left: g.modulus().get(), right: h.modulus().get() });
    }
    let (h0, h1) = (h.coord(0), h.coord(1));
    match (h0.is_zero(), h1.is_zero()) {
        (true, true) => Ok(true),
        (false, true) => Ok(false),
        _ => g.query(-h0 * h1.inv()?),
    }
}

/// An identity oracle whose hidden normal vector is an arbitrary nonzero
/// vector, not yet in suitable form.
#[derive(Debug, Clone)]
pub struct RawIdentityOracle {
    modulus: PrimeModulus,
    normal: Vec<u64>,
    queries: u64,
}

impl RawIdentityOracle {
    pub fn new(modulus: PrimeModulus, normal: &[u64]) -> Result<Self> {
        if normal.len() < 2 {
            return Err(Error::InvalidInput("normal vectors need at least two coordinates"));
        }
        let normal: Vec<u64> = normal.iter().map(|&c| c % modulus.get()).collect();
        if normal.iter().all(|&c| c == 0) {
            return Err(Error::ZeroNormal);
        }
        Ok(Self { modulus, normal, queries: 0 })
    }
}

impl IdOracle for RawIdentityOracle {
    fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    fn level(&self) -> usize {
        self.normal.len() - 1
    }

    fn query(&mut self, h: &GroupElement) -> Result<bool> {
        if h.coords().len() != self.normal.len() {
            return Err(Error::DimensionMismatch { expected: self.normal.len(), found: h.coords().len() });
        }
        self.queries += 1;
        Ok(h.dot(&self.normal) == 0)
    }

    fn queries(&self) -> u64 {
        self.queries
    }
}

/// Result of [`normalize_oracle`].
#[derive(Debug, Clone)]
pub struct NormalizedOracle {
    /// Maps raw coordinates to the coordinates the new oracle expects.
    pub permutation: CoordinatePermutation,
    /// Counts continue from the raw oracle's total.
    pub oracle: IdentityOracle,
    /// Queries spent locating the first nonzero coordinate (at most `t`).
    pub queries_used: u64,
}

/// Brings a raw oracle into suitable form.
///
/// The first nonzero coordinate `j` of the normal vector is located by
/// querying `e_0, …, e_{t-1}`; if all of them lie in the hyperplane, `j = t`
/// by elimination. Swapping coordinates `0` and `j` and scaling by `n_j^{-1}`
/// yields a suitable vector; scaling leaves the oracle unchanged.
pub fn normalize_oracle(mut raw: RawIdentityOracle) -> Result<NormalizedOracle> {
    let m = raw.modulus;
    let t = raw.level();
    let start = raw.queries;
    let mut first = t;
    for i in 0..t {
        if !raw.query(&GroupElement::unit(m, t, i))? {
            first = i;
            break;
        }
    }
    let permutation = CoordinatePermutation::transposition(t + 1, 0, first);
    let permuted = permutation.apply_raw(&raw.normal);
    let scale = m.inv(permuted[0])?;
    let coords: Vec<u64> = permuted.iter().map(|&c| m.mul(c, scale)).collect();
    let hidden = SuitableVector::from_coords(m, &coords)?;
    let queries_used = raw.queries - start;
    let mut oracle = IdentityOracle::new(hidden);
    oracle.queries = raw.queries;
    Ok(NormalizedOracle { permutation, oracle, queries_used })
}
