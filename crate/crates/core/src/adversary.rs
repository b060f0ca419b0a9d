//! Weighted-adversary quantities for `DDH(G_{p,2})` on the fixed instance
//! `i = ((1,0,0), (0,1,0), (0,0,1), (0,1,1))`.
//!
//! A hidden vector `n = (1, n_1, n_2)` is positive when `i` is a
//! DH-quadruple under it, i.e. `n_1 + n_2 = n_1 n_2`. The adversary matrix `Γ`
//! is the all-ones bipartite matrix between positive and negative vectors, so
//! `σ(Γ, n)` is the size of the opposite class. For a query `h`,
//! `σ(Γ_h, n)` counts opposite-class vectors `m` with `Id_m(h) ≠ Id_n(h)`.
//!
//! For each `h` only four numbers matter: how many positive and negative
//! vectors lie on the plane `h·m = 0` and how many lie off it. The minima
//! below are therefore found in `O(p^5)` time without materializing any
//! `Γ_h`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algorithms::DHInstance;
use crate::blackbox::GroupElement;
use crate::modmath::{PrimeModulus, Residue};
use crate::ratio::Ratio;
use crate::{Error, Result};

/// Default upper bound on `p` for [`adversary_bounds`].
pub const DEFAULT_LIMIT: u64 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HiddenVectorClass {
    pub n1: Residue,
    pub n2: Residue,
    pub polarity: Polarity,
}

pub fn is_positive(m: PrimeModulus, n1: u64, n2: u64) -> bool {
    m.add(n1, n2) == m.mul(n1, n2)
}

/// The instance `i` used throughout this module.
pub fn fixed_instance(m: PrimeModulus) -> DHInstance {
    let e = |c: [u64; 3]| GroupElement::new(m, &c).expect("three coordinates");
    DHInstance::ddh(e([1, 0, 0]), e([0, 1, 0]), e([0, 0, 1]), e([0, 1, 1])).expect("same level")
}

/// All `p²` hidden vectors in lexicographic order of `(n_1, n_2)`.
pub fn classify(m: PrimeModulus) -> Vec<HiddenVectorClass> {
    let p = m.get();
    (0..p * p)
        .map(|i| {
            let (n1, n2) = (i / p, i % p);
            let polarity = if is_positive(m, n1, n2) { Polarity::Positive } else { Polarity::Negative };
            HiddenVectorClass { n1: m.residue(n1), n2: m.residue(n2), polarity }
        })
        .collect()
}

/// `σ(Γ, n)`: `p² - p + 1` for positive `n`, `p - 1` for negative `n`.
pub fn sigma_gamma(m: PrimeModulus, polarity: Polarity) -> u64 {
    let p = m.get();
    match polarity {
        Polarity::Positive => p * p - p + 1,
        Polarity::Negative => p - 1,
    }
}

fn on_plane(m: PrimeModulus, h: &[u64], n1: u64, n2: u64) -> bool {
    m.add(h[0], m.add(m.mul(h[1], n1), m.mul(h[2], n2))) == 0
}

/// `σ(Γ_h, n)` by direct enumeration of the opposite class.
pub fn sigma_gamma_h(m: PrimeModulus, n: &HiddenVectorClass, h: &GroupElement) -> Result<u64> {
    if h.level() != 2 {
        return Err(Error::WrongLevel { expected: 2, found: h.level() });
    }
    if h.modulus() != m || n.n1.modulus() != m {
        return Err(Error::ModulusMismatch { left: m.get(), right: h.modulus().get() });
    }
    let hc = h.coords();
    let own = on_plane(m, hc, n.n1.value(), n.n2.value());
    let want_positive = n.polarity == Polarity::Negative;
    let p = m.get();
    let count = (0..p * p)
        .filter(|&i| {
            let (a, b) = (i / p, i % p);
            is_positive(m, a, b) == want_positive && on_plane(m, hc, a, b) != own
        })
        .count();
    Ok(count as u64)
}

/// Precomputed polarity table for `Z_p²`.
#[derive(Debug, Clone)]
pub struct LevelTwoSpace {
    m: PrimeModulus,
    positive: Vec<bool>,
    count_positive: u64,
}

impl LevelTwoSpace {
    pub fn new(m: PrimeModulus) -> Self {
        let p = m.get();
        let positive: Vec<bool> = (0..p * p).map(|i| is_positive(m, i / p, i % p)).collect();
        let count_positive = positive.iter().filter(|&&b| b).count() as u64;
        Self { m, positive, count_positive }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.m
    }

    pub fn count_positive(&self) -> u64 {
        self.count_positive
    }

    pub fn count_negative(&self) -> u64 {
        let p = self.m.get();
        p * p - self.count_positive
    }

    /// Number of query vectors `h ∈ Z_p³`.
    pub fn query_count(&self) -> u64 {
        self.m.get().pow(3)
    }

    fn query(&self, index: u64) -> [u64; 3] {
        let p = self.m.get();
        [index / (p * p), (index / p) % p, index % p]
    }

    /// On/off-plane counts of both classes for the query with the given index.
    pub fn profile(&self, index: u64) -> QueryProfile {
        let h = self.query(index);
        let p = self.m.get();
        let mut prof = QueryProfile::default();
        for (i, &pos) in self.positive.iter().enumerate() {
            let i = i as u64;
            let on = on_plane(self.m, &h, i / p, i % p);
            let (count, first) = match (pos, on) {
                (true, true) => (&mut prof.positive_on, &mut prof.first_positive_on),
                (true, false) => (&mut prof.positive_off, &mut prof.first_positive_off),
                (false, true) => (&mut prof.negative_on, &mut prof.first_negative_on),
                (false, false) => (&mut prof.negative_off, &mut prof.first_negative_off),
            };
            *count += 1;
            first.get_or_insert(i);
        }
        prof
    }

    /// Contribution of one query `h` to the report.
    pub fn evaluate(&self, index: u64) -> Summary {
        let h = self.query(index);
        let prof = self.profile(index);
        let sp = sigma_gamma(self.m, Polarity::Positive);
        let sn = sigma_gamma(self.m, Polarity::Negative);
        let mut out = Summary::default();

        // (n positive, n' negative): n off the plane and n' on it, or the reverse.
        let cases = [
            (prof.first_positive_off, prof.first_negative_on, prof.negative_on, prof.positive_off),
            (prof.first_positive_on, prof.first_negative_off, prof.negative_off, prof.positive_on),
        ];
        for (n, n_prime, hits_n, hits_n_prime) in cases {
            let (Some(n), Some(n_prime)) = (n, n_prime) else { continue };
            let randomized = Ratio::new(sp, hits_n).max(Ratio::new(sn, hits_n_prime));
            let quantum_squared = Ratio::new(sp * sn, hits_n * hits_n_prime);
            let mk = |value| Candidate { value, query: index, positive: n, negative: n_prime, hits_positive: hits_n, hits_negative: hits_n_prime };
            out.randomized = min_candidate(out.randomized, Some(mk(randomized)));
            out.quantum = min_candidate(out.quantum, Some(mk(quantum_squared)));
        }

        if (h[1], h[2]) != (0, 0) {
            if prof.negative_off > 0 {
                out.max_case1 = Some(prof.positive_on);
            }
            if prof.positive_off > 0 {
                out.max_case2 = Some(prof.negative_on);
            }
        }
        out
    }

    /// Sequential fold over every query.
    pub fn summarize(&self) -> Summary {
        (0..self.query_count()).map(|i| self.evaluate(i)).fold(Summary::default(), Summary::merge)
    }

    pub fn report(&self, summary: &Summary) -> Result<AdversaryReport> {
        let (Some(r), Some(q)) = (summary.randomized, summary.quantum) else {
            return Err(Error::InvalidInput("no admissible (n, n', h) triple"));
        };
        Ok(AdversaryReport {
            p: self.m.get(),
            count_positive: self.count_positive(),
            count_negative: self.count_negative(),
            sigma_positive: sigma_gamma(self.m, Polarity::Positive),
            sigma_negative: sigma_gamma(self.m, Polarity::Negative),
            worst_ratio_randomized: r.value,
            randomized_witness: self.witness(&r),
            worst_ratio_quantum_squared: q.value,
            quantum_witness: self.witness(&q),
            max_case1_count: summary.max_case1.unwrap_or(0),
            max_case2_count: summary.max_case2.unwrap_or(0),
        })
    }

    fn witness(&self, c: &Candidate) -> Witness {
        let p = self.m.get();
        Witness {
            positive: [c.positive / p, c.positive % p],
            negative: [c.negative / p, c.negative % p],
            query: self.query(c.query),
            sigma_gamma_h_positive: c.hits_positive,
            sigma_gamma_h_negative: c.hits_negative,
        }
    }
}

/// How many vectors of each class lie on (`Id_m(h) = 1`) or off the plane of
/// a query `h`, with the index of the first of each kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryProfile {
    pub positive_on: u64,
    pub positive_off: u64,
    pub negative_on: u64,
    pub negative_off: u64,
    pub first_positive_on: Option<u64>,
    pub first_positive_off: Option<u64>,
    pub first_negative_on: Option<u64>,
    pub first_negative_off: Option<u64>,
}

/// A ratio attained at `(n, n', h)`, identified by indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub value: Ratio,
    pub query: u64,
    pub positive: u64,
    pub negative: u64,
    pub hits_positive: u64,
    pub hits_negative: u64,
}

impl Candidate {
    fn key(&self) -> (Ratio, u64, u64, u64) {
        (self.value, self.query, self.positive, self.negative)
    }
}

fn min_candidate(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.key().cmp(&x.key()) == Ordering::Less { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Partial result over a set of queries. [`Summary::merge`] is associative
/// and commutative, so any reduction order yields the same value.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub randomized: Option<Candidate>,
    pub quantum: Option<Candidate>,
    /// Largest `σ(Γ_h, n')` over negative `n'` with `Id_{n'}(h) = 0`.
    pub max_case1: Option<u64>,
    /// Largest `σ(Γ_h, n)` over positive `n` with `Id_n(h) = 0`.
    pub max_case2: Option<u64>,
}

impl Summary {
    pub fn merge(self, other: Summary) -> Summary {
        Summary {
            randomized: min_candidate(self.randomized, other.randomized),
            quantum: min_candidate(self.quantum, other.quantum),
            max_case1: self.max_case1.max(other.max_case1),
            max_case2: self.max_case2.max(other.max_case2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub positive: [u64; 2],
    pub negative: [u64; 2],
    pub query: [u64; 3],
    pub sigma_gamma_h_positive: u64,
    pub sigma_gamma_h_negative: u64,
}

/// Every quantity of the level-2 lower-bound argument at one `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdversaryReport {
    pub p: u64,
    pub count_positive: u64,
    pub count_negative: u64,
    pub sigma_positive: u64,
    pub sigma_negative: u64,
    /// `min max{σ(Γ,n)/σ(Γ_h,n), σ(Γ,n')/σ(Γ_h,n')}` over admissible triples.
    pub worst_ratio_randomized: Ratio,
    pub randomized_witness: Witness,
    /// Square of `min sqrt(σ(Γ,n)σ(Γ,n') / (σ(Γ_h,n)σ(Γ_h,n')))`, kept exact.
    pub worst_ratio_quantum_squared: Ratio,
    pub quantum_witness: Witness,
    pub max_case1_count: u64,
    pub max_case2_count: u64,
}

impl AdversaryReport {
    pub fn worst_ratio_quantum(&self) -> f64 {
        libm::sqrt(self.worst_ratio_quantum_squared.to_f64())
    }
}

/// Exhaustive computation for `p <= limit`.
pub fn adversary_bounds(m: PrimeModulus, limit: u64) -> Result<AdversaryReport> {
    if m.get() > limit {
        return Err(Error::EnumerationLimit { p: m.get(), limit });
    }
    let space = LevelTwoSpace::new(m);
    space.report(&space.summarize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blackbox::{is_dh_quadruple, Escrow, IdOracle, IdentityOracle, SuitableVector};

    fn m(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn positives_at_p5() {
        // n_2 = n_1 (n_1 - 1)^{-1} for n_1 ≠ 1
        let f = m(5);
        let pos: Vec<(u64, u64)> = classify(f)
            .into_iter()
            .filter(|c| c.polarity == Polarity::Positive)
            .map(|c| (c.n1.value(), c.n2.value()))
            .collect();
        let expected: Vec<(u64, u64)> = (0..5)
            .filter(|&a| a != 1)
            .map(|a| (a, f.mul(a, f.inv(f.sub(a, 1)).unwrap())))
            .collect();
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(pos, sorted);
        assert_eq!(pos, [(0, 0), (2, 2), (3, 4), (4, 3)]);
    }

    #[test]
    fn counts_follow_formula() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            let cls = classify(m(p));
            let pos = cls.iter().filter(|c| c.polarity == Polarity::Positive).count() as u64;
            assert_eq!(pos, p - 1);
            assert_eq!(cls.len() as u64 - pos, p * p - p + 1);
            assert!(cls.iter().filter(|c| c.n1.value() == 1).all(|c| c.polarity == Polarity::Negative));
        }
    }

    #[test]
    fn polarity_is_ddh_answer() {
        let esc = Escrow::unseal();
        let f = m(7);
        let i = fixed_instance(f);
        for c in classify(f) {
            let n = SuitableVector::new(f, &[c.n1.value(), c.n2.value()]).unwrap();
            let mut o = IdentityOracle::new(n.clone());
            assert!(!o.query(i.g()).unwrap());
            let dh = is_dh_quadruple(&esc, &n, i.g(), i.h(), i.k(), i.l().unwrap()).unwrap();
            assert_eq!(dh, c.polarity == Polarity::Positive);
        }
    }

    #[test]
    fn sigma_gamma_values() {
        assert_eq!(sigma_gamma(m(5), Polarity::Positive), 21);
        assert_eq!(sigma_gamma(m(5), Polarity::Negative), 4);
    }

    /// Γ as an explicit p² × p² matrix.
    fn gamma(p: u64) -> Vec<Vec<u8>> {
        let cls = classify(m(p));
        cls.iter().map(|a| cls.iter().map(|b| (a.polarity != b.polarity) as u8).collect()).collect()
    }

    #[test]
    fn materialized_gamma_row_sums() {
        for p in [3u64, 5, 7] {
            let g = gamma(p);
            let cls = classify(m(p));
            for (row, c) in g.iter().zip(&cls) {
                let sum: u64 = row.iter().map(|&x| x as u64).sum();
                assert_eq!(sum, sigma_gamma(m(p), c.polarity));
            }
            for (i, row) in g.iter().enumerate() {
                assert!(row.iter().zip(&g).all(|(x, col)| *x == col[i]));
            }
        }
    }

    #[test]
    fn materialized_gamma_h_matches_profile_route() {
        for p in [3u64, 5] {
            let f = m(p);
            let g = gamma(p);
            let cls = classify(f);
            let space = LevelTwoSpace::new(f);
            for hi in 0..p * p * p {
                let h = GroupElement::new(f, &space.query(hi)).unwrap();
                let bits: Vec<bool> = cls.iter().map(|c| on_plane(f, h.coords(), c.n1.value(), c.n2.value())).collect();
                let prof = space.profile(hi);
                for (i, c) in cls.iter().enumerate() {
                    let row: u64 = (0..cls.len()).filter(|&j| g[i][j] == 1 && bits[i] != bits[j]).count() as u64;
                    assert_eq!(row, sigma_gamma_h(f, c, &h).unwrap());
                    let from_profile = match (c.polarity, bits[i]) {
                        (Polarity::Positive, true) => prof.negative_off,
                        (Polarity::Positive, false) => prof.negative_on,
                        (Polarity::Negative, true) => prof.positive_off,
                        (Polarity::Negative, false) => prof.positive_on,
                    };
                    assert_eq!(row, from_profile);
                }
            }
        }
    }

    #[test]
    fn zero_query_separates_nothing() {
        let f = m(5);
        let h = GroupElement::zero(f, 2);
        for c in classify(f) {
            assert_eq!(sigma_gamma_h(f, &c, &h).unwrap(), 0);
        }
    }

    #[test]
    fn frozen_small_reports() {
        // values from an independent brute-force enumeration over (n, n', h)
        let expected = [(3u64, (7, 6), (7, 6)), (5, (2, 1), (7, 3)), (7, (3, 1), (129, 38)), (11, (5, 1), (185, 34)), (13, (6, 1), (471, 73))];
        for (p, r, q) in expected {
            let rep = adversary_bounds(m(p), DEFAULT_LIMIT).unwrap();
            assert_eq!(rep.worst_ratio_randomized, Ratio::new(r.0, r.1), "p = {p}");
            assert_eq!(rep.worst_ratio_quantum_squared, Ratio::new(q.0, q.1), "p = {p}");
            assert_eq!(rep.randomized_witness.positive, [0, 0]);
            assert_eq!(rep.randomized_witness.negative, [0, 1]);
            assert_eq!(rep.randomized_witness.query, [0, 1, 2]);
            assert_eq!(rep.max_case1_count, 2);
            assert_eq!(rep.max_case2_count, p);
            assert_eq!((rep.count_positive, rep.count_negative), (p - 1, p * p - p + 1));
        }
    }

    #[test]
    fn p5_report_and_case_bounds() {
        let rep = adversary_bounds(m(5), DEFAULT_LIMIT).unwrap();
        assert_eq!(rep.sigma_positive, 21);
        assert_eq!(rep.sigma_negative, 4);
        // the Case 2 ratio alone is at least (p² - p + 1)/p
        assert!(Ratio::new(21, rep.max_case2_count) >= Ratio::new(21, 5));
        assert!((rep.worst_ratio_quantum() - libm::sqrt(7.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn ratios_grow_with_p() {
        let mut last = (Ratio::new(0, 1), Ratio::new(0, 1));
        for p in [3u64, 5, 7, 11, 13] {
            let rep = adversary_bounds(m(p), DEFAULT_LIMIT).unwrap();
            assert!(rep.worst_ratio_randomized > last.0);
            assert!(rep.worst_ratio_quantum_squared > last.1);
            last = (rep.worst_ratio_randomized, rep.worst_ratio_quantum_squared);
        }
    }

    #[test]
    fn limit_guard() {
        assert_eq!(adversary_bounds(m(37), DEFAULT_LIMIT), Err(Error::EnumerationLimit { p: 37, limit: 31 }));
        assert!(adversary_bounds(m(37), 37).is_ok());
    }

    #[test]
    fn merge_is_order_independent() {
        let space = LevelTwoSpace::new(m(7));
        let parts: Vec<Summary> = (0..space.query_count()).map(|i| space.evaluate(i)).collect();
        let forward = parts.iter().copied().fold(Summary::default(), Summary::merge);
        let backward = parts.iter().rev().copied().fold(Summary::default(), Summary::merge);
        let halves = parts[..100].iter().copied().fold(Summary::default(), Summary::merge)
            .merge(parts[100..].iter().copied().fold(Summary::default(), Summary::merge));
        assert_eq!(forward, backward);
        assert_eq!(forward, halves);
    }
}
