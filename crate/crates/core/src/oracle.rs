//! Reference implementations used to check the digit-serial algorithms.
//!
//! Nothing here touches the inversion code paths: division is plain binary
//! shift-and-subtract, and the Euclid loop carries full Bézout coefficients
//! through [`Nat::mul`]. Slow on purpose.

use crate::error::{Error, Result};
use crate::mp::{Nat, SNat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XgcdResult {
    pub g: Nat,
    pub u: SNat,
    pub v: SNat,
}

/// Binary long division: `x = q·y + r`, `0 ≤ r < y`.
pub fn long_divmod(x: &Nat, y: &Nat) -> (Nat, Nat) {
    assert!(!y.is_zero(), "division by zero");
    if x < y {
        return (Nat::zero(), x.clone());
    }
    let shift = x.bits() - y.bits();
    let mut rem = x.clone();
    let mut q_bits = Vec::new();
    for s in (0..=shift).rev() {
        let d = y.shl_bits(s);
        match rem.checked_sub(&d) {
            Some(r) => {
                rem = r;
                q_bits.push(s);
            }
            None => {}
        }
    }
    let q = q_bits
        .into_iter()
        .fold(Nat::zero(), |acc, s| acc.add(&Nat::one().shl_bits(s)));
    (q, rem)
}

/// Extended Euclid: `u·x + v·y = g = gcd(x, y)`.
pub fn xgcd(x: &Nat, y: &Nat) -> Result<XgcdResult> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::Domain("gcd(0, 0) is undefined"));
    }
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut u0, mut u1) = (SNat::from_i64(1), SNat::zero());
    let (mut v0, mut v1) = (SNat::zero(), SNat::from_i64(1));
    while !r1.is_zero() {
        let (q, r) = long_divmod(&r0, &r1);
        let q = SNat::from(q);
        let u2 = u0.sub(&q.mul(&u1));
        let v2 = v0.sub(&q.mul(&v1));
        (r0, r1) = (r1, r);
        (u0, u1) = (u1, u2);
        (v0, v1) = (v1, v2);
    }
    Ok(XgcdResult { g: r0, u: u0, v: v0 })
}

/// `a^{-1} mod m` from the Bézout coefficient of `a`.
pub fn oracle_inverse(a: &Nat, m: &Nat) -> Result<Nat> {
    if m < &Nat::from_u64(2) {
        return Err(Error::InvalidModulus("oracle modulus must be at least 2".into()));
    }
    let (_, a_red) = long_divmod(a, m);
    let res = xgcd(&a_red, m)?;
    if !res.g.is_one() {
        return Err(Error::NotInvertible { gcd: res.g });
    }
    let (_, u_mag) = long_divmod(res.u.magnitude(), m);
    if res.u.is_negative() && !u_mag.is_zero() {
        Ok(m.sub(&u_mag))
    } else {
        Ok(u_mag)
    }
}

/// Linear scan for `x` with `a·x ≡ 1 (mod m)`, `m ≤ 2^20`.
pub fn brute_force_inverse(a: u64, m: u64) -> Option<u64> {
    assert!(m <= 1 << 20, "brute force limited to m ≤ 2^20");
    if m < 2 {
        return None;
    }
    let a = a % m;
    (1..m).find(|&x| a * x % m == 1)
}

/// `a·x ≡ 1 (mod m)` checked with the full product and independent division.
pub fn is_inverse(a: &Nat, x: &Nat, m: &Nat) -> bool {
    let (_, r) = long_divmod(&a.mul(x), m);
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn n(v: u64) -> Nat {
        Nat::from_u64(v)
    }

    fn bezout_holds(x: &Nat, y: &Nat, r: &XgcdResult) -> bool {
        let lhs = r.u.mul(&SNat::from(x.clone())).add(&r.v.mul(&SNat::from(y.clone())));
        lhs == SNat::from(r.g.clone())
    }

    #[test]
    fn xgcd_examples() {
        let r = xgcd(&n(12), &n(3125)).unwrap();
        assert_eq!(r.g, Nat::one());
        assert_eq!(r.u, SNat::from_i64(-1302));
        assert_eq!(r.v, SNat::from_i64(5));
        assert_eq!(xgcd(&n(77), &n(77)).unwrap().g, n(77));
        assert_eq!(xgcd(&Nat::zero(), &n(91)).unwrap().g, n(91));
        assert_eq!(xgcd(&n(91), &Nat::zero()).unwrap().g, n(91));
        assert!(xgcd(&Nat::zero(), &Nat::zero()).is_err());
    }

    #[test]
    fn oracle_inverse_examples() {
        assert_eq!(oracle_inverse(&n(12), &n(3125)).unwrap(), n(1823));
        assert_eq!(oracle_inverse(&n(1), &n(97)).unwrap(), Nat::one());
        assert_eq!(
            oracle_inverse(&n(21), &n(6)),
            Err(Error::NotInvertible { gcd: n(3) })
        );
        assert!(oracle_inverse(&n(1), &n(1)).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_inverse(3, 16), Some(11));
        assert_eq!(brute_force_inverse(1, 1000), Some(1));
        assert_eq!(brute_force_inverse(2, 16), None);
    }

    #[test]
    fn oracle_agrees_with_brute_force() {
        // exhaustive up to 1024; sampled residues above, the linear scan is quadratic per modulus
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for m in 2u64..=4096 {
            let mn = n(m);
            let residues: Vec<u64> = if m <= 1024 {
                (0..m).collect()
            } else {
                (0..16).map(|_| rng.gen_range(0..m)).collect()
            };
            for a in residues {
                let expect = brute_force_inverse(a, m);
                let got = oracle_inverse(&n(a), &mn).ok().and_then(|x| x.to_u64());
                assert_eq!(got, expect, "a={a} m={m}");
            }
        }
    }

    #[test]
    fn long_divmod_matches_native() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let x: u128 = rng.gen();
            let y: u128 = rng.gen::<u128>() >> rng.gen_range(0..127);
            let y = y.max(1);
            let (q, r) = long_divmod(&Nat::from_u128(x), &Nat::from_u128(y));
            assert_eq!(q, Nat::from_u128(x / y));
            assert_eq!(r, Nat::from_u128(x % y));
        }
    }

    #[test]
    fn bezout_random_multiprecision() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let lx = rng.gen_range(1..=16);
            let ly = rng.gen_range(1..=16);
            let x = Nat::from_limbs((0..lx).map(|_| rng.gen()).collect());
            let y = Nat::from_limbs((0..ly).map(|_| rng.gen()).collect());
            let r = xgcd(&x, &y).unwrap();
            assert!(bezout_holds(&x, &y, &r));
            assert!(long_divmod(&x, &r.g).1.is_zero());
            assert!(long_divmod(&y, &r.g).1.is_zero());
        }
    }
}
