use rand::Rng;

use super::{PrimeModulus, Residue};
use crate::{Error, Result};

/// Value of the Legendre symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadraticCharacter {
    Zero,
    Residue,
    NonResidue,
}

impl QuadraticCharacter {
    pub fn as_i8(self) -> i8 {
        match self {
            QuadraticCharacter::Zero => 0,
            QuadraticCharacter::Residue => 1,
            QuadraticCharacter::NonResidue => -1,
        }
    }
}

/// Euler's criterion `a^((p-1)/2)`.
pub fn legendre(a: Residue) -> QuadraticCharacter {
    if a.is_zero() {
        return QuadraticCharacter::Zero;
    }
    let m = a.modulus();
    if m.pow(a.value(), (m.get() - 1) / 2) == 1 {
        QuadraticCharacter::Residue
    } else {
        QuadraticCharacter::NonResidue
    }
}

/// Smallest quadratic non-residue, scanning 2, 3, 4, …
pub fn find_nonresidue(m: PrimeModulus) -> Residue {
    m.elements()
        .skip(2)
        .find(|&r| legendre(r) == QuadraticCharacter::NonResidue)
        .expect("every odd prime field has a non-residue")
}

/// Samples nonzero residues until a non-residue turns up. Each draw succeeds
/// with probability 1/2.
pub fn find_nonresidue_random<R: Rng + ?Sized>(m: PrimeModulus, rng: &mut R) -> Residue {
    loop {
        let r = m.residue(rng.gen_range(1..m.get()));
        if legendre(r) == QuadraticCharacter::NonResidue {
            return r;
        }
    }
}

/// Square roots of `a` as `(r, p - r)` with `r <= p - r`, or `None` when `a`
/// is a non-residue. With a supplied non-residue the computation is fully
/// deterministic; without one the smallest non-residue is found by scanning.
pub fn sqrt_mod(a: Residue, nonresidue: Option<Residue>) -> Result<Option<(Residue, Residue)>> {
    let m = a.modulus();
    if let Some(z) = nonresidue {
        if z.modulus() != m {
            return Err(Error::ModulusMismatch { left: m.get(), right: z.modulus().get() });
        }
        if legendre(z) != QuadraticCharacter::NonResidue {
            return Err(Error::NotANonresidue(z.value()));
        }
    }
    match legendre(a) {
        QuadraticCharacter::Zero => Ok(Some((a, a))),
        QuadraticCharacter::NonResidue => Ok(None),
        QuadraticCharacter::Residue => {
            let z = nonresidue.unwrap_or_else(|| find_nonresidue(m));
            let r = tonelli_shanks(m, a.value(), z.value());
            let (lo, hi) = if r <= m.get() - r { (r, m.get() - r) } else { (m.get() - r, r) };
            Ok(Some((m.residue(lo), m.residue(hi))))
        }
    }
}

/// Tonelli-Shanks for a nonzero square `a`, given a non-residue `z`.
fn tonelli_shanks(m: PrimeModulus, a: u64, z: u64) -> u64 {
    let p = m.get();
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;

    let mut order_bound = s;
    let mut c = m.pow(z, q);
    let mut t = m.pow(a, q);
    let mut r = m.pow(a, q.div_ceil(2));

    while t != 1 {
        // least i with t^(2^i) = 1
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = m.mul(t2, t2);
            i += 1;
        }
        debug_assert!(i < order_bound);
        let mut b = c;
        for _ in 0..order_bound - i - 1 {
            b = m.mul(b, b);
        }
        order_bound = i;
        c = m.mul(b, b);
        t = m.mul(t, c);
        r = m.mul(r, b);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn squares(p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        v.sort();
        v.dedup();
        v
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(m(7).residue(2)).as_i8(), 1);
        assert_eq!(legendre(m(7).residue(0)).as_i8(), 0);
        assert_eq!(squares(7), [1, 2, 4]);
        assert_eq!(legendre(m(7).residue(3)).as_i8(), -1);
    }

    #[test]
    fn legendre_matches_square_table() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let sq = squares(p);
            for a in m(p).elements().skip(1) {
                let expect = if sq.contains(&a.value()) { 1 } else { -1 };
                assert_eq!(legendre(a).as_i8(), expect, "p = {p}, a = {}", a.value());
            }
        }
    }

    #[test]
    fn nonresidue_scan_examples() {
        assert_eq!(squares(5), [1, 4]);
        assert_eq!(find_nonresidue(m(7)).value(), 3);
        assert_eq!(find_nonresidue(m(5)).value(), 2);
        assert_eq!(find_nonresidue(m(3)).value(), 2);
    }

    #[test]
    fn random_nonresidue_is_nonresidue() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [3u64, 7, 13, 97, 65_537, (1 << 61) - 1] {
            for _ in 0..20 {
                let z = find_nonresidue_random(m(p), &mut rng);
                assert_eq!(legendre(z), QuadraticCharacter::NonResidue);
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        let f = m(7);
        let (a, b) = sqrt_mod(f.residue(4), None).unwrap().unwrap();
        assert_eq!((a.value(), b.value()), (2, 5));
        // 3^2 = 9 = 2 and 4^2 = 16 = 2 mod 7
        let (a, b) = sqrt_mod(f.residue(2), None).unwrap().unwrap();
        assert_eq!((a.value(), b.value()), (3, 4));
        assert_eq!(sqrt_mod(f.residue(5), None).unwrap(), None);
        let (a, b) = sqrt_mod(f.zero(), None).unwrap().unwrap();
        assert_eq!((a.value(), b.value()), (0, 0));
    }

    #[test]
    fn sqrt_rejects_square_posing_as_nonresidue() {
        let f = m(13);
        assert_eq!(sqrt_mod(f.residue(10), Some(f.residue(4))), Err(Error::NotANonresidue(4)));
        assert_eq!(sqrt_mod(f.residue(10), Some(f.zero())), Err(Error::NotANonresidue(0)));
    }

    #[test]
    fn sqrt_exhaustive_small_primes() {
        for p in (3..=97u64).filter(|&p| super::super::is_prime(p)) {
            let f = m(p);
            let z = find_nonresidue(f);
            for a in f.elements() {
                let roots = sqrt_mod(a, Some(z)).unwrap();
                match legendre(a) {
                    QuadraticCharacter::NonResidue => assert!(roots.is_none()),
                    _ => {
                        let (r1, r2) = roots.unwrap();
                        assert_eq!(r1 * r1, a);
                        assert_eq!(r2 * r2, a);
                        assert!(r1.value() <= r2.value());
                        assert_eq!((r1 + r2).value(), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn sqrt_large_two_adic_prime() {
        // p - 1 = 3 * 2^30 exercises the inner loop
        let f = m(3 * (1 << 30) + 1);
        let z = find_nonresidue(f);
        for x in [2u64, 3, 12345, 999_999_999] {
            let a = f.residue(x) * f.residue(x);
            let (r1, r2) = sqrt_mod(a, Some(z)).unwrap().unwrap();
            assert!(r1.value() == x % f.get() || r2.value() == x % f.get());
        }
    }
}
