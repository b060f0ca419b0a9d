//! Recovering the secret `s` of `G_{p,1}`.

use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::Rng;

use super::ddh::check_generator;
use super::{CdhOracle, DlogOracle};
use crate::blackbox::{equal_in_group, grover_from_id, GroupElement, IdOracle, LinearPoly};
use crate::modmath::{PrimeModulus, Residue, RootSet};
use crate::{Error, Result};

fn require_level1<O: IdOracle + ?Sized>(o: &O) -> Result<()> {
    if o.level() != 1 {
        return Err(Error::WrongLevel { expected: 1, found: o.level() });
    }
    Ok(())
}

fn fixed_pair(m: PrimeModulus) -> (GroupElement, GroupElement) {
    (GroupElement::unit(m, 1, 0), GroupElement::unit(m, 1, 1))
}

/// One DLOG call on `((1,0), (0,1))`. Since `φ((1,0)) = 1` and
/// `φ((0,1)) = s`, the answer is the secret.
pub fn secret_from_dlog<D: DlogOracle + ?Sized>(d: &mut D, m: PrimeModulus) -> Result<Residue> {
    let (g, h) = fixed_pair(m);
    Ok(m.residue(d.dlog(&g, &h)?))
}

/// [`secret_from_dlog`], then one identity query confirming `d·(1,0) = (0,1)`.
pub fn secret_from_dlog_checked<D: DlogOracle + ?Sized, O: IdOracle + ?Sized>(d: &mut D, o: &mut O) -> Result<Residue> {
    require_level1(o)?;
    let m = o.modulus();
    let s = secret_from_dlog(d, m)?;
    let (g, h) = fixed_pair(m);
    if equal_in_group(o, &g.scale(s)?, &h)? {
        Ok(s)
    } else {
        Err(Error::DishonestOracle)
    }
}

/// Outcome of a random-instance reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomizedRecovery {
    /// `None` when the draw was degenerate.
    pub secret: Option<Residue>,
    /// Draws of `g` rejected because they were not generators. Each cost one
    /// identity query.
    pub generator_resamples: u64,
}

/// Draws uniform elements until one is a generator. Returns it with the
/// number of rejected draws.
pub fn sample_generator<O: IdOracle + ?Sized, R: Rng + ?Sized>(o: &mut O, rng: &mut R) -> Result<(GroupElement, u64)> {
    let m = o.modulus();
    let level = o.level();
    let mut rejected = 0;
    loop {
        let g = random_element(m, level, rng);
        match check_generator(o, &g) {
            Ok(()) => return Ok((g, rejected)),
            Err(Error::NotGenerator) => rejected += 1,
            Err(e) => return Err(e),
        }
    }
}

fn random_element<R: Rng + ?Sized>(m: PrimeModulus, level: usize, rng: &mut R) -> GroupElement {
    let coords: Vec<u64> = (0..=level).map(|_| rng.gen_range(0..m.get())).collect();
    GroupElement::from_canonical(m, coords)
}

/// Recovers `s` from one DLOG answer `d` on a given draw `(g, h)`:
/// `h - d·g` lies on the hidden line, so `s = -(h_0 - d g_0)(h_1 - d g_1)^{-1}`
/// whenever `h_1 ≠ d g_1`.
pub fn dlog_reduction_on_draw<D: DlogOracle + ?Sized>(d: &mut D, g: &GroupElement, h: &GroupElement) -> Result<Option<Residue>> {
    g.check_compatible(h)?;
    if g.level() != 1 {
        return Err(Error::WrongLevel { expected: 1, found: g.level() });
    }
    let m = g.modulus();
    let dl = m.residue(d.dlog(g, h)?);
    let diff = h.checked_sub(&g.scale(dl)?)?;
    let (d0, d1) = (diff.coord(0), diff.coord(1));
    if d1.is_zero() {
        return Ok(None);
    }
    Ok(Some(-d0 * d1.inv()?))
}

/// Random-instance variant of [`secret_from_dlog`]: succeeds with
/// probability `(p-1)/p` over the draw of `h`.
pub fn secret_from_dlog_random<D, O, R>(d: &mut D, o: &mut O, rng: &mut R) -> Result<RandomizedRecovery>
where
    D: DlogOracle + ?Sized,
    O: IdOracle + ?Sized,
    R: Rng + ?Sized,
{
    require_level1(o)?;
    let (g, generator_resamples) = sample_generator(o, rng)?;
    let h = random_element(o.modulus(), 1, rng);
    let secret = dlog_reduction_on_draw(d, &g, &h)?;
    Ok(RandomizedRecovery { secret, generator_resamples })
}

/// Given a CDH answer `ℓ` for `(g, h, k)`, the secret is a root of
/// `p_g p_ℓ - p_h p_k`. Returns `None` unless that polynomial has degree 2;
/// otherwise tests the roots with the identity oracle.
fn recover_from_cdh_answer<O: IdOracle + ?Sized>(
    o: &mut O,
    g: &GroupElement,
    h: &GroupElement,
    k: &GroupElement,
    l: &GroupElement,
    nonresidue: Option<Residue>,
) -> Result<Option<Residue>> {
    let poly = LinearPoly::of(g).times(&LinearPoly::of(l))?.checked_sub(&LinearPoly::of(h).times(&LinearPoly::of(k))?)?;
    if poly.degree() != Some(2) {
        return Ok(None);
    }
    let roots = match poly.solve(nonresidue)? {
        RootSet::Empty => return Err(Error::DishonestOracle),
        roots => roots.to_vec(),
    };
    for r in roots {
        if grover_from_id(o, r)? {
            return Ok(Some(r));
        }
    }
    Err(Error::DishonestOracle)
}

/// One CDH call on `g = (1,0), h = (0,1), k = (1,1)`, then at most two
/// identity queries. With `nonresidue` supplied the algorithm is
/// deterministic.
pub fn secret_from_cdh<C, O>(c: &mut C, o: &mut O, nonresidue: Option<Residue>) -> Result<Residue>
where
    C: CdhOracle + ?Sized,
    O: IdOracle + ?Sized,
{
    require_level1(o)?;
    let m = o.modulus();
    let (g, h) = fixed_pair(m);
    let k = GroupElement::from_canonical(m, alloc::vec![1, 1]);
    let l = c.cdh(&g, &h, &k)?;
    g.check_compatible(&l)?;
    // the leading coefficient is -1, so the polynomial always has degree 2
    recover_from_cdh_answer(o, &g, &h, &k, &l, nonresidue)?.ok_or(Error::DishonestOracle)
}

/// Reduction on a given draw `(g, h, k)`: one CDH call, then `None` when
/// `h_1 k_1 = g_1 ℓ_1` (degree below 2), else the identified root.
pub fn cdh_reduction_on_draw<C, O>(
    c: &mut C,
    o: &mut O,
    g: &GroupElement,
    h: &GroupElement,
    k: &GroupElement,
    nonresidue: Option<Residue>,
) -> Result<Option<Residue>>
where
    C: CdhOracle + ?Sized,
    O: IdOracle + ?Sized,
{
    require_level1(o)?;
    let l = c.cdh(g, h, k)?;
    g.check_compatible(&l)?;
    recover_from_cdh_answer(o, g, h, k, &l, nonresidue)
}

/// Random-instance variant of [`secret_from_cdh`]; succeeds with
/// probability at least `(p-2)/p`.
pub fn secret_from_cdh_random<C, O, R>(c: &mut C, o: &mut O, rng: &mut R, nonresidue: Option<Residue>) -> Result<RandomizedRecovery>
where
    C: CdhOracle + ?Sized,
    O: IdOracle + ?Sized,
    R: Rng + ?Sized,
{
    require_level1(o)?;
    let (g, generator_resamples) = sample_generator(o, rng)?;
    let m = o.modulus();
    let h = random_element(m, 1, rng);
    let k = random_element(m, 1, rng);
    let secret = cdh_reduction_on_draw(c, o, &g, &h, &k, nonresidue)?;
    Ok(RandomizedRecovery { secret, generator_resamples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceResult {
    pub secret: Residue,
    pub queries: u64,
}

fn search<O, I>(o: &mut O, candidates: I) -> Result<BruteForceResult>
where
    O: IdOracle + ?Sized,
    I: IntoIterator<Item = Residue>,
{
    require_level1(o)?;
    let start = o.queries();
    for x in candidates {
        if grover_from_id(o, x)? {
            return Ok(BruteForceResult { secret: x, queries: o.queries() - start });
        }
    }
    Err(Error::NotSuitable)
}

/// Exhaustive search over `0, 1, …, p-1`, one query per candidate. The last
/// candidate is tested rather than inferred, so the worst case is `p`.
pub fn brute_force_secret<O: IdOracle + ?Sized>(o: &mut O) -> Result<BruteForceResult> {
    let m = o.modulus();
    search(o, m.elements())
}

/// Exhaustive search in a uniformly random order; expected cost `(p+1)/2`.
pub fn brute_force_secret_shuffled<O: IdOracle + ?Sized, R: Rng + ?Sized>(o: &mut O, rng: &mut R) -> Result<BruteForceResult> {
    let m = o.modulus();
    let mut order: Vec<Residue> = m.elements().collect();
    order.shuffle(rng);
    search(o, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{HonestCdh, HonestDlog};
    use crate::blackbox::{Escrow, IdentityOracle};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    struct ConstCdh(GroupElement, u64);

    impl CdhOracle for ConstCdh {
        fn cdh(&mut self, _: &GroupElement, _: &GroupElement, _: &GroupElement) -> Result<GroupElement> {
            self.1 += 1;
            Ok(self.0.clone())
        }

        fn calls(&self) -> u64 {
            self.1
        }
    }

    struct ConstDlog(u64);

    impl DlogOracle for ConstDlog {
        fn dlog(&mut self, _: &GroupElement, _: &GroupElement) -> Result<u64> {
            Ok(self.0)
        }

        fn calls(&self) -> u64 {
            0
        }
    }

    #[test]
    fn dlog_returns_secret() {
        let esc = Escrow::unseal();
        for (p, s) in [(7u64, 3u64), (7, 0)] {
            let o = IdentityOracle::with_secret(m(p).residue(s));
            let mut d = HonestDlog::new(&esc, o.reveal(&esc).clone());
            assert_eq!(secret_from_dlog(&mut d, m(p)).unwrap().value(), s);
            assert_eq!(d.calls(), 1);
            assert_eq!(o.queries(), 0);
        }
        for s in m(11).elements() {
            let mut d = HonestDlog::new(&esc, crate::blackbox::SuitableVector::level1(s)).unreduced(3);
            assert_eq!(secret_from_dlog(&mut d, m(11)).unwrap(), s);
        }
    }

    #[test]
    fn checked_dlog_catches_wrong_answer() {
        let mut o = IdentityOracle::with_secret(m(7).residue(3));
        assert_eq!(secret_from_dlog_checked(&mut ConstDlog(4), &mut o), Err(Error::DishonestOracle));
        assert_eq!(secret_from_dlog_checked(&mut ConstDlog(10), &mut o).unwrap().value(), 3);
        assert_eq!(o.queries(), 2);
    }

    #[test]
    fn cdh_double_root_example() {
        // s = 3: l = (5, 0) gives x^2 + x - 5 = (x - 3)^2 mod 7
        let f = m(7);
        let mut o = IdentityOracle::with_secret(f.residue(3));
        let mut c = ConstCdh(GroupElement::new(f, &[5, 0]).unwrap(), 0);
        assert_eq!(secret_from_cdh(&mut c, &mut o, None).unwrap().value(), 3);
        assert_eq!((c.calls(), o.queries()), (1, 1));
    }

    #[test]
    fn cdh_zero_secret_example() {
        // s = 0: l = (0, 0) gives x^2 + x, roots {0, 6}; 0 is tested first
        let f = m(7);
        let mut o = IdentityOracle::with_secret(f.zero());
        let mut c = ConstCdh(GroupElement::zero(f, 1), 0);
        assert_eq!(secret_from_cdh(&mut c, &mut o, None).unwrap().value(), 0);
        assert_eq!(o.queries(), 1);
        // s = 6 shares that answer and needs the second query
        let mut o = IdentityOracle::with_secret(f.residue(6));
        let esc = Escrow::unseal();
        let mut honest = HonestCdh::new(&esc, o.reveal(&esc).clone());
        assert_eq!(secret_from_cdh(&mut honest, &mut o, None).unwrap().value(), 6);
    }

    #[test]
    fn cdh_dishonest_oracle_detected() {
        let f = m(7);
        let mut o = IdentityOracle::with_secret(f.residue(3));
        // l = (6, 0): x^2 + x - 6, roots {2, 4}, neither is 3
        let mut c = ConstCdh(GroupElement::new(f, &[6, 0]).unwrap(), 0);
        assert_eq!(secret_from_cdh(&mut c, &mut o, None), Err(Error::DishonestOracle));
        assert_eq!(o.queries(), 2);
        // l = (1, 0): discriminant 1 + 4 = 5 is a non-residue mod 7
        let mut c = ConstCdh(GroupElement::new(f, &[1, 0]).unwrap(), 0);
        assert_eq!(secret_from_cdh(&mut c, &mut o, None), Err(Error::DishonestOracle));
    }

    #[test]
    fn cdh_exhaustive_with_honest_oracle() {
        let esc = Escrow::unseal();
        let f = m(13);
        let z = crate::modmath::find_nonresidue(f);
        for s in f.elements() {
            let mut o = IdentityOracle::with_secret(s);
            let mut c = HonestCdh::randomized(&esc, o.reveal(&esc).clone(), s.value());
            assert_eq!(secret_from_cdh(&mut c, &mut o, Some(z)).unwrap(), s);
            assert_eq!(c.calls(), 1);
            assert!(o.queries() <= 2);
        }
    }

    #[test]
    fn dlog_degenerate_draw_is_absent() {
        let esc = Escrow::unseal();
        let f = m(11);
        let o = IdentityOracle::with_secret(f.residue(4));
        let mut d = HonestDlog::new(&esc, o.reveal(&esc).clone());
        let g = GroupElement::new(f, &[2, 6]).unwrap();
        // h = 3g exactly as vectors, so h - d·g = 0
        let h = g.scale(f.residue(3)).unwrap();
        assert_eq!(dlog_reduction_on_draw(&mut d, &g, &h).unwrap(), None);
        let h = GroupElement::new(f, &[7, 1]).unwrap();
        assert_eq!(dlog_reduction_on_draw(&mut d, &g, &h).unwrap(), Some(f.residue(4)));
    }

    #[test]
    fn dlog_random_recovers_secret() {
        let esc = Escrow::unseal();
        let f = m(11);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut hits = 0;
        for _ in 0..200 {
            let mut o = IdentityOracle::with_secret(f.residue(4));
            let mut d = HonestDlog::new(&esc, o.reveal(&esc).clone());
            let r = secret_from_dlog_random(&mut d, &mut o, &mut rng).unwrap();
            if let Some(s) = r.secret {
                assert_eq!(s.value(), 4);
                hits += 1;
            }
            assert_eq!(o.queries(), r.generator_resamples + 1);
        }
        assert!(hits > 150);
    }

    #[test]
    fn cdh_degenerate_draw_is_absent() {
        let esc = Escrow::unseal();
        let f = m(11);
        let mut o = IdentityOracle::with_secret(f.residue(6));
        let mut c = HonestCdh::new(&esc, o.reveal(&esc).clone());
        let g = GroupElement::new(f, &[1, 3]).unwrap();
        // canonical answers have l_1 = 0, so h_1 = 0 makes h_1 k_1 = g_1 l_1
        let h = GroupElement::new(f, &[5, 0]).unwrap();
        let k = GroupElement::new(f, &[2, 9]).unwrap();
        assert_eq!(cdh_reduction_on_draw(&mut c, &mut o, &g, &h, &k, None).unwrap(), None);
        let h = GroupElement::new(f, &[5, 1]).unwrap();
        assert_eq!(cdh_reduction_on_draw(&mut c, &mut o, &g, &h, &k, None).unwrap(), Some(f.residue(6)));
    }

    #[test]
    fn cdh_random_recovers_secret() {
        let esc = Escrow::unseal();
        let f = m(101);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for t in 0..100 {
            let s = f.residue(rng.gen_range(0..101));
            let mut o = IdentityOracle::with_secret(s);
            let mut c = HonestCdh::randomized(&esc, o.reveal(&esc).clone(), t);
            let r = secret_from_cdh_random(&mut c, &mut o, &mut rng, None).unwrap();
            if let Some(found) = r.secret {
                assert_eq!(found, s);
            }
        }
    }

    #[test]
    fn brute_force_costs() {
        let f = m(13);
        let mut o = IdentityOracle::with_secret(f.zero());
        assert_eq!(brute_force_secret(&mut o).unwrap().queries, 1);
        let mut o = IdentityOracle::with_secret(f.residue(12));
        let r = brute_force_secret(&mut o).unwrap();
        assert_eq!((r.secret.value(), r.queries), (12, 13));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for s in f.elements() {
            let mut o = IdentityOracle::with_secret(s);
            let r = brute_force_secret_shuffled(&mut o, &mut rng).unwrap();
            assert_eq!(r.secret, s);
            assert!(r.queries >= 1 && r.queries <= 13);
        }
    }

    #[test]
    fn brute_force_respects_budget() {
        let mut o = IdentityOracle::with_secret(m(13).residue(12)).with_budget(5);
        assert_eq!(brute_force_secret(&mut o), Err(Error::BudgetExhausted { budget: 5 }));
    }
}
