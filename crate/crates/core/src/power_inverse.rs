//! Digit-serial inversion modulo `n^k`.
//!
//! Two families live here. The Koç family keeps a signed sequence `b_i` with
//! `p·b_{i+1} = b_i − a·X_i` and reads each digit off `c·b_i mod p`. The radix
//! family follows the carries of the schoolbook product `a·x`: it keeps
//! `T_i = (a·(X_{i−1}…X_0)_n − 1)/n^i` for `i ≥ 1` (so `T_i = −b_i`), starts
//! from the first-column carry `T_0 = (c·a_0 − 1)/n`, and needs one loop
//! iteration fewer.
//!
//! In the radix loop, `T_0 + X_0·a` exceeds `n·T_1` by `T_0 + 1 ∈ [1, n)`, so
//! the first division by `n` truncates; every later division is exact.

use crate::counters;
use crate::digit_inverse::{hensel_unchecked, word_inverse};
use crate::error::{Error, Result};
use crate::mp::{
    add_assign_limbs, sar1_limbs, shr1_limbs, sub_assign_limbs, Digit, DoubleLimb, Limb, Nat,
    Radix, SNat, LIMB_BITS,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Koç's algorithm for a prime power.
    Koc,
    /// Binary Koç.
    KocPow2,
    /// Carry-recurrence inversion for an arbitrary radix.
    RadixGeneral,
    /// Carry-recurrence inversion specialized to `n = 2`.
    RadixPow2,
}

/// Inputs of one inversion: invert `a` modulo `radix^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseRequest {
    pub a: Nat,
    pub radix: Radix,
    pub k: usize,
}

impl InverseRequest {
    pub fn new(a: Nat, radix: Radix, k: usize) -> Result<Self> {
        if let Radix::Small(n) = radix {
            if n < 2 {
                return Err(Error::InvalidModulus(format!("radix must be at least 2, got {n}")));
            }
        }
        if k < 1 {
            return Err(Error::InvalidModulus("digit count k must be at least 1".into()));
        }
        Ok(InverseRequest { a, radix, k })
    }

    /// `a mod n^k`.
    pub fn reduced_a(&self) -> Nat {
        self.a.mod_pow_of_radix(self.radix, self.k)
    }
}

/// Digits and intermediate values of one run.
///
/// `intermediates` holds `b_0…b_k` for Koç runs and `T_0…T_{k−1}` for radix
/// runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseTrace {
    pub radix: Radix,
    pub k: usize,
    pub digits: Vec<Digit>,
    pub intermediates: Vec<SNat>,
    pub algorithm: Algorithm,
}

impl InverseTrace {
    fn new(radix: Radix, k: usize, algorithm: Algorithm) -> Self {
        counters::bump(|c| c.traces += 1);
        InverseTrace {
            radix,
            k,
            digits: Vec::with_capacity(k),
            intermediates: Vec::with_capacity(k + 1),
            algorithm,
        }
    }

    /// The inverse assembled from the digits.
    pub fn value(&self) -> Nat {
        Nat::from_digits(&self.digits, self.radix).expect("trace digits are valid")
    }
}

/// `gcd(a, 2^bits)` for an `a` that is known to be even (or zero).
fn pow2_gcd(a: &Nat, bits: u64) -> Error {
    let tz = (0..bits).find(|&i| a.bit(i)).unwrap_or(bits);
    Error::NotInvertible { gcd: Nat::one().shl_bits(tz) }
}

fn limb_count(bits: usize) -> usize {
    bits.div_ceil(LIMB_BITS as usize)
}

/// `−c·t mod n` for single digits.
#[inline]
fn neg_mul_mod(c: Digit, t: Digit, radix: Radix) -> Digit {
    match radix {
        Radix::LimbBase => c.wrapping_mul(t).wrapping_neg(),
        Radix::Small(n) => {
            let p = (c as DoubleLimb * t as DoubleLimb % n as DoubleLimb) as Limb;
            if p == 0 {
                0
            } else {
                n - p
            }
        }
    }
}

/// `a^{-1} mod n^k`.
///
/// Routes `n = 2` to the bitwise loop and `n = 2^W` without a trace to the
/// limb-level loop; everything else runs [`radix_inverse_general`].
pub fn radix_inverse(req: &InverseRequest, keep_trace: bool) -> Result<(Nat, Option<InverseTrace>)> {
    match req.radix {
        Radix::Small(2) => {
            let mut trace = keep_trace.then(|| InverseTrace::new(req.radix, req.k, Algorithm::RadixPow2));
            let x = pow2_bitwise_radix(&req.a, req.k, trace.as_mut())?;
            Ok((x, trace))
        }
        Radix::LimbBase if !keep_trace => Ok((radix_inverse_limb_base(&req.a, req.k)?, None)),
        _ => radix_inverse_general(req, keep_trace),
    }
}

/// The carry-recurrence loop over [`Nat`] values for any radix.
pub fn radix_inverse_general(
    req: &InverseRequest,
    keep_trace: bool,
) -> Result<(Nat, Option<InverseTrace>)> {
    let radix = req.radix;
    let k = req.k;
    let a = req.reduced_a();
    let a0 = a.divmod_radix(radix).1;
    let c = word_inverse(a0, radix)?.inverse;
    let n = radix.value();

    let t0 = (c as DoubleLimb * a0 as DoubleLimb - 1) / n;
    counters::bump(|cnt| cnt.radix_digit_mults += 1);

    let mut trace = keep_trace.then(|| InverseTrace::new(radix, k, Algorithm::RadixGeneral));
    let mut digits = Vec::with_capacity(k);
    digits.push(c);
    let mut t = Nat::from_u128(t0);
    if let Some(tr) = trace.as_mut() {
        tr.intermediates.push(SNat::from(t.clone()));
    }

    for i in 1..k {
        let sum = t.add(&a.mul_digit(digits[i - 1]));
        let (next, rem, low) = sum.divmod_radix_with_residue(radix);
        if i == 1 {
            debug_assert_eq!(rem as DoubleLimb, t0 + 1, "first carry remainder");
        } else {
            debug_assert_eq!(rem, 0, "inexact division at step {i}");
        }
        debug_assert!(next <= a, "T_{i} exceeds a");
        t = next;
        digits.push(neg_mul_mod(c, low, radix));
        if let Some(tr) = trace.as_mut() {
            tr.intermediates.push(SNat::from(t.clone()));
        }
    }
    counters::bump(|cnt| {
        cnt.radix_iterations += (k - 1) as u64;
        cnt.radix_digit_mults += 2 * (k - 1) as u64;
    });

    let x = Nat::from_digits(&digits, radix)?;
    if let Some(tr) = trace.as_mut() {
        tr.digits = digits;
    }
    Ok((x, trace))
}

/// The carry-recurrence loop for `n = 2^W`, one limb per digit.
///
/// Dividing by `n` is dropping a limb, so `T_i` lives in `t[i..]` and each
/// step multiply-accumulates `X_{i−1}·a` into the window `t[i−1..]`. Only
/// `T_i mod n^{k−i}` influences the remaining digits; carries past limb `k−1`
/// are discarded.
pub fn radix_inverse_limb_base(a: &Nat, k: usize) -> Result<Nat> {
    if k < 1 {
        return Err(Error::InvalidModulus("digit count k must be at least 1".into()));
    }
    let mut al = vec![0 as Limb; k];
    let src = &a.limbs()[..a.limbs().len().min(k)];
    al[..src.len()].copy_from_slice(src);
    if al[0] & 1 == 0 {
        return Err(pow2_gcd(a, (k as u64) * LIMB_BITS as u64));
    }
    let c = hensel_unchecked(al[0]);

    let mut x = vec![0 as Limb; k];
    let mut t = vec![0 as Limb; k];
    x[0] = c;
    t[0] = ((c as DoubleLimb * al[0] as DoubleLimb) >> LIMB_BITS) as Limb;

    for i in 1..k {
        let d = x[i - 1] as DoubleLimb;
        let mut carry: DoubleLimb = 0;
        for (tj, &aj) in t[i - 1..].iter_mut().zip(&al) {
            let acc = *tj as DoubleLimb + d * aj as DoubleLimb + carry;
            *tj = acc as Limb;
            carry = acc >> LIMB_BITS;
        }
        x[i] = c.wrapping_mul(t[i]).wrapping_neg();
    }
    counters::bump(|cnt| {
        cnt.radix_iterations += (k - 1) as u64;
        cnt.radix_digit_mults += 2 * (k - 1) as u64 + 1;
    });
    Ok(Nat::from_limbs(x))
}

/// `a^{-1} mod 2^k` by the `n = 2` carry loop: `T_0 = 0`, `X_0 = 1`,
/// `T_i = ⌊(T_{i−1} + X_{i−1}·a)/2⌋`, `X_i = T_i mod 2`.
pub fn radix_inverse_pow2_bitwise(a: &Nat, k: usize) -> Result<Nat> {
    pow2_bitwise_radix(a, k, None)
}

fn pow2_bitwise_radix(a: &Nat, k: usize, mut trace: Option<&mut InverseTrace>) -> Result<Nat> {
    if k < 1 {
        return Err(Error::InvalidModulus("digit count k must be at least 1".into()));
    }
    let a = a.low_bits(k as u64);
    if !a.is_odd() {
        return Err(pow2_gcd(&a, k as u64));
    }
    let width = limb_count(k) + 1;
    let mut t = vec![0 as Limb; width];
    let mut x = vec![0 as Limb; limb_count(k)];
    x[0] = 1;
    if let Some(tr) = trace.as_deref_mut() {
        tr.digits.push(1);
        tr.intermediates.push(SNat::zero());
    }
    let mut bit = 1;
    for i in 1..k {
        if bit == 1 {
            add_assign_limbs(&mut t, a.limbs());
        }
        shr1_limbs(&mut t);
        bit = t[0] & 1;
        x[i / LIMB_BITS as usize] |= bit << (i % LIMB_BITS as usize);
        if let Some(tr) = trace.as_deref_mut() {
            tr.digits.push(bit);
            tr.intermediates.push(SNat::from(Nat::from_limb_slice(&t)));
        }
    }
    counters::bump(|cnt| {
        cnt.radix_iterations += (k - 1) as u64;
        cnt.radix_digit_mults += 2 * (k - 1) as u64 + 1;
    });
    Ok(Nat::from_limbs(x))
}

/// Koç's algorithm: `X_i = c·b_i mod n`, `b_{i+1} = (b_i − a·X_i)/n`, for
/// `i = 0…k−1` starting at `b_0 = 1`.
///
/// Stated for a prime `n`; only `gcd(a, n) = 1` is needed for the seed, and
/// primality is not checked.
pub fn koc_inverse(req: &InverseRequest, keep_trace: bool) -> Result<(Nat, Option<InverseTrace>)> {
    let radix = req.radix;
    let k = req.k;
    let a = req.reduced_a();
    let a0 = a.divmod_radix(radix).1;
    let c = word_inverse(a0, radix)?.inverse;

    let mut trace = keep_trace.then(|| InverseTrace::new(radix, k, Algorithm::Koc));
    let mut digits = Vec::with_capacity(k);
    let mut b = SNat::from_i64(1);
    if let Some(tr) = trace.as_mut() {
        tr.intermediates.push(b.clone());
    }
    for _ in 0..k {
        let low = match radix {
            Radix::LimbBase => {
                let l = b.magnitude().low_limb();
                if b.is_negative() {
                    l.wrapping_neg()
                } else {
                    l
                }
            }
            Radix::Small(n) => b.rem_euclid_limb(n),
        };
        let xi = match radix {
            Radix::LimbBase => c.wrapping_mul(low),
            Radix::Small(n) => (c as DoubleLimb * low as DoubleLimb % n as DoubleLimb) as Digit,
        };
        let diff = b.sub(&SNat::from(a.mul_digit(xi)));
        let (q, rem) = diff.magnitude().divmod_radix(radix);
        debug_assert_eq!(rem, 0, "inexact division in Koç step");
        b = SNat::new(diff.is_negative(), q);
        digits.push(xi);
        if let Some(tr) = trace.as_mut() {
            tr.intermediates.push(b.clone());
        }
    }
    counters::bump(|cnt| {
        cnt.koc_iterations += k as u64;
        cnt.koc_digit_mults += 2 * k as u64;
    });

    let x = Nat::from_digits(&digits, radix)?;
    if let Some(tr) = trace.as_mut() {
        tr.digits = digits;
    }
    Ok((x, trace))
}

/// Binary Koç: `X_i = b_i mod 2`, `b_{i+1} = (b_i − X_i·a)/2`, with `b_i`
/// held in a fixed-width two's complement buffer.
pub fn koc_inverse_pow2_bitwise(a: &Nat, k: usize) -> Result<Nat> {
    if k < 1 {
        return Err(Error::InvalidModulus("digit count k must be at least 1".into()));
    }
    let a = a.low_bits(k as u64);
    if !a.is_odd() {
        return Err(pow2_gcd(&a, k as u64));
    }
    // |b_i| < a < 2^k, so one spare limb holds the sign
    let width = limb_count(k) + 1;
    let mut b = vec![0 as Limb; width];
    b[0] = 1;
    let mut x = vec![0 as Limb; limb_count(k)];
    for i in 0..k {
        if b[0] & 1 == 1 {
            x[i / LIMB_BITS as usize] |= 1 << (i % LIMB_BITS as usize);
            sub_assign_limbs(&mut b, a.limbs());
        }
        sar1_limbs(&mut b);
    }
    counters::bump(|cnt| {
        cnt.koc_iterations += k as u64;
        cnt.koc_digit_mults += 2 * k as u64;
    });
    Ok(Nat::from_limbs(x))
}

/// For `s = 1…k`, the number `(X_{s−1}…X_0)_n`; each is `a^{-1} mod n^s`.
pub fn prefix_inverses(trace: &InverseTrace) -> Vec<Nat> {
    (1..=trace.digits.len())
        .map(|s| Nat::from_digits(&trace.digits[..s], trace.radix).expect("trace digits are valid"))
        .collect()
}

/// `(n^s)^{-1} mod a = a + b_s`.
///
/// Koç traces carry `b_0…b_k`, so `1 ≤ s ≤ k`. Radix traces carry
/// `T_s = −b_s` for `1 ≤ s ≤ k − 1` only.
pub fn reciprocal_power_mod_a(trace: &InverseTrace, s: usize, a: &Nat) -> Result<Nat> {
    if a <= &Nat::one() {
        return Err(Error::Domain("modulus a must exceed 1"));
    }
    if s == 0 {
        return Err(Error::Domain("s must be at least 1"));
    }
    let b_s = match trace.algorithm {
        Algorithm::Koc | Algorithm::KocPow2 => trace.intermediates.get(s).cloned(),
        Algorithm::RadixGeneral | Algorithm::RadixPow2 => {
            trace.intermediates.get(s).map(SNat::neg)
        }
    }
    .ok_or(Error::Domain("s exceeds the steps recorded in the trace"))?;
    SNat::from(a.clone())
        .add(&b_s)
        .to_nat()
        .ok_or(Error::Domain("b_s below -a; trace does not belong to this a"))
}
