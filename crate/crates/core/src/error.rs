use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} outside the supported range [3, 2^61)")]
    ModulusOutOfRange(u64),
    #[error("operands live in different prime fields (p = {left} and p = {right})")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} was supplied as a quadratic non-residue but is a square")]
    NotANonresidue(u64),
    #[error("expected an element with {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires level {expected}, got level {found}")]
    WrongLevel { expected: usize, found: usize },
    #[error("suitable vectors must start with coordinate 1")]
    NotSuitable,
    #[error("normal vector of the hidden hyperplane is zero")]
    ZeroNormal,
    #[error("identity oracle budget of {budget} queries exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("g is not a generator of the group")]
    NotGenerator,
    #[error("no candidate root passed the identity test; the oracle answer is not a valid solution")]
    DishonestOracle,
    #[error("{q} is not congruent to 1 modulo {p}")]
    OrderDoesNotDivide { p: u64, q: u64 },
    #[error("{element} does not have order dividing {p} modulo {q}")]
    WrongOrder { element: u64, p: u64, q: u64 },
    #[error("p = {p} is above the enumeration limit {limit}")]
    EnumerationLimit { p: u64, limit: u64 },
    #[error("state vector norm drifted by {drift:e}")]
    NormDrift { drift: f64 },
    #[error("smallest iteration count {found} for p = {p} exceeds the bound {bound}")]
    IterationBound { p: u64, found: u64, bound: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
}
