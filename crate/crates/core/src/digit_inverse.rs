//! Single-digit inverses `a^{-1} mod n`, the seed of every digit-serial loop.

use crate::error::{Error, Result};
use crate::mp::{Limb, Radix, LIMB_BITS};

/// Bits guaranteed correct by the `(3a) ^ 2` seed.
const SEED_BITS: u32 = 5;

/// Newton steps needed to lift the seed to a full limb.
pub const NEWTON_STEPS: u32 = {
    let mut bits = SEED_BITS;
    let mut steps = 0;
    while bits < LIMB_BITS {
        bits *= 2;
        steps += 1;
    }
    steps
};

/// A seed inverse together with the radix it is valid for.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct WordInverseResult {
    pub inverse: Limb,
    pub radix: Radix,
}

/// Inverse of `a0 mod n` by the extended Euclidean algorithm on signed
/// double-width words. Works for every radix including `2^W`.
pub fn word_inverse_xgcd(a0: Limb, radix: Radix) -> Result<Limb> {
    let n = radix.value() as i128;
    let (mut r0, mut r1) = (n, radix.reduce(a0) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::not_invertible(r0 as u128));
    }
    Ok(s0.rem_euclid(n) as Limb)
}

/// Inverse of an odd `a` modulo `2^W` by Newton iteration `x ← x·(2 − a·x)`
/// from a 5-bit seed, in wrapping word arithmetic.
pub fn word_inverse_pow2_hensel(a: Limb) -> Result<Limb> {
    if a & 1 == 0 {
        return Err(Error::not_invertible(2));
    }
    Ok(hensel_unchecked(a))
}

#[inline]
pub(crate) fn hensel_unchecked(a: Limb) -> Limb {
    debug_assert!(a & 1 == 1);
    let mut x = a.wrapping_mul(3) ^ 2;
    let mut bits = SEED_BITS;
    debug_assert_eq!(a.wrapping_mul(x) & ((1 << SEED_BITS) - 1), 1);
    for _ in 0..NEWTON_STEPS {
        x = x.wrapping_mul(2u64.wrapping_sub(a.wrapping_mul(x)));
        bits = (bits * 2).min(LIMB_BITS);
        debug_assert_eq!(a.wrapping_mul(x) & low_mask(bits), 1);
    }
    x
}

#[inline]
fn low_mask(bits: u32) -> Limb {
    if bits >= LIMB_BITS {
        Limb::MAX
    } else {
        (1 << bits) - 1
    }
}

/// Seed inverse for a radix: Hensel lifting for `2^W`, Euclid otherwise.
pub fn word_inverse(a0: Limb, radix: Radix) -> Result<WordInverseResult> {
    let inverse = match radix {
        Radix::LimbBase => word_inverse_pow2_hensel(a0)?,
        Radix::Small(_) => word_inverse_xgcd(a0, radix)?,
    };
    Ok(WordInverseResult { inverse, radix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Nat;

    fn brute(a: u64, n: u64) -> Option<u64> {
        (1..n).find(|&x| (a as u128 * x as u128) % n as u128 == 1)
    }

    #[test]
    fn xgcd_examples() {
        assert_eq!(word_inverse_xgcd(2, Radix::Small(5)).unwrap(), 3);
        assert_eq!(brute(2, 5), Some(3));
        for n in [2, 3, 10, 1 << 20, u64::MAX] {
            assert_eq!(word_inverse_xgcd(1, Radix::Small(n)).unwrap(), 1);
        }
        assert_eq!(
            word_inverse_xgcd(4, Radix::Small(6)),
            Err(Error::NotInvertible { gcd: Nat::from_u64(2) })
        );
        assert_eq!(
            word_inverse_xgcd(0, Radix::Small(9)),
            Err(Error::NotInvertible { gcd: Nat::from_u64(9) })
        );
        assert_eq!(word_inverse_xgcd(u64::MAX, Radix::LimbBase).unwrap(), u64::MAX);
    }

    #[test]
    fn hensel_examples() {
        assert_eq!(NEWTON_STEPS, 4);
        assert_eq!(word_inverse_pow2_hensel(1).unwrap(), 1);
        assert_eq!(word_inverse_pow2_hensel(u64::MAX).unwrap(), u64::MAX);
        assert_eq!(word_inverse_pow2_hensel(3).unwrap(), 0xaaaa_aaaa_aaaa_aaab);
        assert_eq!(word_inverse_xgcd(3, Radix::LimbBase).unwrap(), 0xaaaa_aaaa_aaaa_aaab);
        assert_eq!(
            word_inverse_pow2_hensel(10),
            Err(Error::NotInvertible { gcd: Nat::from_u64(2) })
        );
    }

    #[test]
    fn seed_has_five_bits() {
        for a in (1u64..1 << 12).step_by(2) {
            let x = a.wrapping_mul(3) ^ 2;
            assert_eq!(a.wrapping_mul(x) & 31, 1, "a={a}");
        }
    }

    #[test]
    fn hensel_matches_xgcd_width_16() {
        let r = Radix::Small(1 << 16);
        for a in (1u64..1 << 16).step_by(2) {
            let h = word_inverse_pow2_hensel(a).unwrap() & 0xffff;
            assert_eq!(h, word_inverse_xgcd(a, r).unwrap(), "a={a}");
        }
    }

    #[test]
    fn xgcd_small_moduli_exhaustive() {
        for n in 2u64..=1 << 12 {
            let r = Radix::Small(n);
            for a in 0..n {
                match word_inverse_xgcd(a, r) {
                    Ok(c) => {
                        assert!(c < n);
                        assert_eq!((a * c) % n, 1 % n);
                    }
                    Err(Error::NotInvertible { gcd }) => {
                        let g = gcd.to_u64().unwrap();
                        assert!(g > 1 && a % g == 0 && n % g == 0);
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn dispatch() {
        let r = word_inverse(3, Radix::LimbBase).unwrap();
        assert_eq!(r.inverse, 0xaaaa_aaaa_aaaa_aaab);
        assert_eq!(word_inverse(12, Radix::Small(5)).unwrap().inverse, 3);
    }
}
