//! Minimal multiprecision arithmetic: natural numbers stored as little-endian
//! limbs, a signed wrapper, and the radix type the inversion routines work in.
//!
//! Only what the inversion loops and the verification paths need is here. The
//! digit-serial algorithms use `mul_digit` and `divmod_radix` exclusively;
//! [`Nat::mul`] is the full schoolbook product and is meant for verification.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Machine word used as a limb.
pub type Limb = u64;
/// Double-width word for products and carries.
pub type DoubleLimb = u128;
/// Limb width in bits.
pub const LIMB_BITS: u32 = Limb::BITS;

/// A single radix-`n` digit. Always `< n` for the governing [`Radix`].
pub type Digit = Limb;

/// Nonnegative multiprecision integer, least-significant limb first.
///
/// Canonical form: no most-significant zero limbs; zero is the empty vector.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Nat {
    limbs: Vec<Limb>,
}

impl Nat {
    pub const fn zero() -> Self {
        Nat { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Nat::from_u64(1)
    }

    pub fn from_u64(v: u64) -> Self {
        Nat::from_limbs(vec![v])
    }

    pub fn from_u128(v: u128) -> Self {
        Nat::from_limbs(vec![v as Limb, (v >> LIMB_BITS) as Limb])
    }

    /// Builds a number from little-endian limbs, trimming high zero limbs.
    pub fn from_limbs(limbs: Vec<Limb>) -> Self {
        let mut n = Nat { limbs };
        n.normalize();
        n
    }

    pub fn from_limb_slice(limbs: &[Limb]) -> Self {
        Nat::from_limbs(limbs.to_vec())
    }

    pub fn limbs(&self) -> &[Limb] {
        &self.limbs
    }

    pub fn into_limbs(self) -> Vec<Limb> {
        self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn is_odd(&self) -> bool {
        self.low_limb() & 1 == 1
    }

    /// Least significant limb, or 0 for zero.
    pub fn low_limb(&self) -> Limb {
        self.limbs.first().copied().unwrap_or(0)
    }

    /// Value as `u128` if it fits.
    pub fn to_u128(&self) -> Option<u128> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0] as u128),
            2 => Some(self.limbs[0] as u128 | (self.limbs[1] as u128) << LIMB_BITS),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    /// Number of significant bits; zero has zero bits.
    pub fn bits(&self) -> u64 {
        match self.limbs.last() {
            None => 0,
            Some(&top) => {
                (self.limbs.len() as u64) * LIMB_BITS as u64 - top.leading_zeros() as u64
            }
        }
    }

    pub fn bit(&self, i: u64) -> bool {
        let limb = (i / LIMB_BITS as u64) as usize;
        limb < self.limbs.len() && (self.limbs[limb] >> (i % LIMB_BITS as u64)) & 1 == 1
    }

    fn normalize(&mut self) {
        while let Some(&0) = self.limbs.last() {
            self.limbs.pop();
        }
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert!(self.limbs.last() != Some(&0), "non-canonical Nat");
    }

    pub fn add(&self, other: &Nat) -> Nat {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (&self.limbs, &other.limbs)
        } else {
            (&other.limbs, &self.limbs)
        };
        let mut out = Vec::with_capacity(long.len() + 1);
        let mut carry = false;
        for (i, &l) in long.iter().enumerate() {
            let s = short.get(i).copied().unwrap_or(0);
            let (t, c1) = l.overflowing_add(s);
            let (t, c2) = t.overflowing_add(carry as Limb);
            out.push(t);
            carry = c1 | c2;
        }
        if carry {
            out.push(1);
        }
        let r = Nat { limbs: out };
        r.debug_check();
        r
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Nat) -> Option<Nat> {
        if self < other {
            return None;
        }
        let mut out = Vec::with_capacity(self.limbs.len());
        let mut borrow = false;
        for (i, &l) in self.limbs.iter().enumerate() {
            let s = other.limbs.get(i).copied().unwrap_or(0);
            let (t, b1) = l.overflowing_sub(s);
            let (t, b2) = t.overflowing_sub(borrow as Limb);
            out.push(t);
            borrow = b1 | b2;
        }
        debug_assert!(!borrow);
        Some(Nat::from_limbs(out))
    }

    /// `self - other`; panics on underflow.
    pub fn sub(&self, other: &Nat) -> Nat {
        self.checked_sub(other).expect("Nat subtraction underflow")
    }

    /// Product with a single word.
    pub fn mul_digit(&self, d: Digit) -> Nat {
        if d == 0 || self.is_zero() {
            return Nat::zero();
        }
        let mut out = Vec::with_capacity(self.limbs.len() + 1);
        let mut carry: Limb = 0;
        for &l in &self.limbs {
            let p = l as DoubleLimb * d as DoubleLimb + carry as DoubleLimb;
            out.push(p as Limb);
            carry = (p >> LIMB_BITS) as Limb;
        }
        if carry != 0 {
            out.push(carry);
        }
        let r = Nat { limbs: out };
        r.debug_check();
        r
    }

    /// Full schoolbook product.
    pub fn mul(&self, other: &Nat) -> Nat {
        if self.is_zero() || other.is_zero() {
            return Nat::zero();
        }
        let mut out = vec![0 as Limb; self.limbs.len() + other.limbs.len()];
        for (i, &x) in self.limbs.iter().enumerate() {
            let mut carry: DoubleLimb = 0;
            for (j, &y) in other.limbs.iter().enumerate() {
                let t = x as DoubleLimb * y as DoubleLimb + out[i + j] as DoubleLimb + carry;
                out[i + j] = t as Limb;
                carry = t >> LIMB_BITS;
            }
            out[i + other.limbs.len()] = carry as Limb;
        }
        Nat::from_limbs(out)
    }

    /// Division by a radix: `self = q·n + r` with `0 ≤ r < n`.
    ///
    /// For the limb-base radix this is a one-limb shift.
    pub fn divmod_radix(&self, radix: Radix) -> (Nat, Digit) {
        match radix {
            Radix::LimbBase => self.shr_limbs_with_low(),
            Radix::Small(n) => {
                let (q, r, _) = self.div_small(n, false);
                (q, r)
            }
        }
    }

    /// Like [`divmod_radix`](Self::divmod_radix), additionally returning
    /// `q mod n`, accumulated during the same top-down pass.
    pub fn divmod_radix_with_residue(&self, radix: Radix) -> (Nat, Digit, Digit) {
        match radix {
            Radix::LimbBase => {
                let (q, r) = self.shr_limbs_with_low();
                let low = q.low_limb();
                (q, r, low)
            }
            Radix::Small(n) => self.div_small(n, true),
        }
    }

    fn shr_limbs_with_low(&self) -> (Nat, Digit) {
        match self.limbs.split_first() {
            None => (Nat::zero(), 0),
            Some((&low, rest)) => (Nat { limbs: rest.to_vec() }, low),
        }
    }

    /// Long division by a single word, most significant limb first. When
    /// `residue` is set, also folds the quotient limbs into `q mod n` by Horner.
    fn div_small(&self, n: Limb, residue: bool) -> (Nat, Digit, Digit) {
        debug_assert!(n >= 2);
        let mut q = vec![0 as Limb; self.limbs.len()];
        let mut rem: DoubleLimb = 0;
        let mut qres: DoubleLimb = 0;
        let base_mod_n = if residue {
            ((1 as DoubleLimb) << LIMB_BITS) % n as DoubleLimb
        } else {
            0
        };
        for i in (0..self.limbs.len()).rev() {
            let cur = (rem << LIMB_BITS) | self.limbs[i] as DoubleLimb;
            let qi = (cur / n as DoubleLimb) as Limb;
            rem = cur % n as DoubleLimb;
            q[i] = qi;
            if residue {
                qres = (qres * base_mod_n + qi as DoubleLimb % n as DoubleLimb) % n as DoubleLimb;
            }
        }
        (Nat::from_limbs(q), rem as Digit, qres as Digit)
    }

    /// Remainder modulo a single word.
    pub fn rem_limb(&self, n: Limb) -> Limb {
        debug_assert!(n != 0);
        let mut rem: DoubleLimb = 0;
        for &l in self.limbs.iter().rev() {
            rem = ((rem << LIMB_BITS) | l as DoubleLimb) % n as DoubleLimb;
        }
        rem as Limb
    }

    /// Shifts right by whole limbs.
    pub fn shr_limbs(&self, count: usize) -> Nat {
        if count >= self.limbs.len() {
            return Nat::zero();
        }
        Nat { limbs: self.limbs[count..].to_vec() }
    }

    /// Shifts left by whole limbs.
    pub fn shl_limbs(&self, count: usize) -> Nat {
        if self.is_zero() {
            return Nat::zero();
        }
        let mut limbs = vec![0; count];
        limbs.extend_from_slice(&self.limbs);
        Nat { limbs }
    }

    /// Shifts left by an arbitrary number of bits.
    pub fn shl_bits(&self, bits: u64) -> Nat {
        if self.is_zero() {
            return Nat::zero();
        }
        let whole = (bits / LIMB_BITS as u64) as usize;
        let part = (bits % LIMB_BITS as u64) as u32;
        let mut limbs = vec![0; whole];
        if part == 0 {
            limbs.extend_from_slice(&self.limbs);
        } else {
            let mut carry: Limb = 0;
            for &l in &self.limbs {
                limbs.push((l << part) | carry);
                carry = l >> (LIMB_BITS - part);
            }
            limbs.push(carry);
        }
        Nat::from_limbs(limbs)
    }

    /// Shifts right by an arbitrary number of bits.
    pub fn shr_bits(&self, bits: u64) -> Nat {
        let whole = (bits / LIMB_BITS as u64) as usize;
        let part = (bits % LIMB_BITS as u64) as u32;
        if whole >= self.limbs.len() {
            return Nat::zero();
        }
        let src = &self.limbs[whole..];
        if part == 0 {
            return Nat { limbs: src.to_vec() };
        }
        let mut limbs = Vec::with_capacity(src.len());
        for i in 0..src.len() {
            let hi = src.get(i + 1).copied().unwrap_or(0);
            limbs.push((src[i] >> part) | (hi << (LIMB_BITS - part)));
        }
        Nat::from_limbs(limbs)
    }

    /// `self mod 2^bits`.
    pub fn low_bits(&self, bits: u64) -> Nat {
        let whole = (bits / LIMB_BITS as u64) as usize;
        let part = (bits % LIMB_BITS as u64) as u32;
        if whole >= self.limbs.len() {
            return self.clone();
        }
        let mut limbs = self.limbs[..whole].to_vec();
        if part != 0 {
            limbs.push(self.limbs[whole] & ((1 << part) - 1));
        }
        Nat::from_limbs(limbs)
    }

    /// Returns exactly `k` radix-`n` digits, least significant first.
    pub fn to_digits(&self, radix: Radix, k: usize) -> Result<Vec<Digit>> {
        let mut digits = Vec::with_capacity(k);
        match radix {
            Radix::LimbBase => {
                if self.limbs.len() > k {
                    return Err(Error::OutOfRange);
                }
                digits.extend_from_slice(&self.limbs);
                digits.resize(k, 0);
            }
            Radix::Small(_) => {
                let mut cur = self.clone();
                for _ in 0..k {
                    let (q, r) = cur.divmod_radix(radix);
                    digits.push(r);
                    cur = q;
                }
                if !cur.is_zero() {
                    return Err(Error::OutOfRange);
                }
            }
        }
        Ok(digits)
    }

    /// Horner evaluation of little-endian radix-`n` digits.
    pub fn from_digits(digits: &[Digit], radix: Radix) -> Result<Nat> {
        for &d in digits {
            radix.check_digit(d)?;
        }
        Ok(match radix {
            Radix::LimbBase => Nat::from_limb_slice(digits),
            Radix::Small(n) => digits
                .iter()
                .rev()
                .fold(Nat::zero(), |acc, &d| acc.mul_digit(n).add_limb(d)),
        })
    }

    pub fn add_limb(&self, d: Limb) -> Nat {
        self.add(&Nat::from_u64(d))
    }

    /// `self mod n^k`.
    pub fn mod_pow_of_radix(&self, radix: Radix, k: usize) -> Nat {
        match radix {
            Radix::LimbBase => Nat::from_limb_slice(&self.limbs[..k.min(self.limbs.len())]),
            Radix::Small(_) => {
                let mut cur = self.clone();
                let mut digits = Vec::with_capacity(k);
                for _ in 0..k {
                    if cur.is_zero() {
                        break;
                    }
                    let (q, r) = cur.divmod_radix(radix);
                    digits.push(r);
                    cur = q;
                }
                Nat::from_digits(&digits, radix).expect("remainders are valid digits")
            }
        }
    }

    /// `n^k` as a number.
    pub fn pow_of_radix(radix: Radix, k: usize) -> Nat {
        match radix {
            Radix::LimbBase => Nat::one().shl_limbs(k),
            Radix::Small(n) => (0..k).fold(Nat::one(), |acc, _| acc.mul_digit(n)),
        }
    }

    /// Parses decimal or `0x`-prefixed hexadecimal.
    pub fn parse(s: &str) -> Result<Nat> {
        let t = s.trim().replace('_', "");
        let (digits, base) = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            Some(rest) => (rest.to_string(), 16u32),
            None => (t, 10u32),
        };
        if digits.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let mut acc = Nat::zero();
        for ch in digits.chars() {
            let d = ch.to_digit(base).ok_or_else(|| Error::Parse(s.to_string()))?;
            acc = acc.mul_digit(base as Limb).add_limb(d as Limb);
        }
        Ok(acc)
    }

    /// Lowercase hex with `0x` prefix; zero prints as `0x0`.
    pub fn to_hex(&self) -> String {
        format!("{:#x}", self)
    }
}

impl PartialOrd for Nat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Nat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat::from_u64(v)
    }
}

impl FromStr for Nat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Nat::parse(s)
    }
}

impl fmt::LowerHex for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        match self.limbs.split_last() {
            None => s.push('0'),
            Some((top, rest)) => {
                s.push_str(&format!("{:x}", top));
                for l in rest.iter().rev() {
                    s.push_str(&format!("{:016x}", l));
                }
            }
        }
        f.pad_integral(true, "0x", &s)
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const CHUNK: Limb = 10_000_000_000_000_000_000;
        let mut chunks = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.divmod_radix(Radix::Small(CHUNK));
            chunks.push(r);
            cur = q;
        }
        let mut s = match chunks.pop() {
            None => "0".to_string(),
            Some(top) => top.to_string(),
        };
        for c in chunks.iter().rev() {
            s.push_str(&format!("{:019}", c));
        }
        f.pad_integral(true, "", &s)
    }
}

impl fmt::Debug for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self)
    }
}

/// `out = x·y mod 2^(W·out.len())`. Inputs shorter than `out` are
/// treated as zero-extended.
pub(crate) fn mul_low(x: &[Limb], y: &[Limb], out: &mut [Limb]) {
    let len = out.len();
    out.fill(0);
    for (i, &xi) in x.iter().enumerate().take(len) {
        if xi == 0 {
            continue;
        }
        let mut carry: DoubleLimb = 0;
        let row = &mut out[i..];
        for (o, &yj) in row.iter_mut().zip(y) {
            let t = xi as DoubleLimb * yj as DoubleLimb + *o as DoubleLimb + carry;
            *o = t as Limb;
            carry = t >> LIMB_BITS;
        }
        if let Some(o) = row.get_mut(y.len()) {
            *o = carry as Limb;
        }
    }
}

/// `acc += x` over `acc.len()` limbs, dropping the final carry.
pub(crate) fn add_assign_limbs(acc: &mut [Limb], x: &[Limb]) {
    let mut carry = false;
    for (i, a) in acc.iter_mut().enumerate() {
        let (t, c1) = a.overflowing_add(x.get(i).copied().unwrap_or(0));
        let (t, c2) = t.overflowing_add(carry as Limb);
        *a = t;
        carry = c1 | c2;
    }
}

/// `acc -= x` over `acc.len()` limbs, two's complement wrap-around.
pub(crate) fn sub_assign_limbs(acc: &mut [Limb], x: &[Limb]) {
    let mut borrow = false;
    for (i, a) in acc.iter_mut().enumerate() {
        let (t, b1) = a.overflowing_sub(x.get(i).copied().unwrap_or(0));
        let (t, b2) = t.overflowing_sub(borrow as Limb);
        *a = t;
        borrow = b1 | b2;
    }
}

/// Logical shift right by one bit.
pub(crate) fn shr1_limbs(acc: &mut [Limb]) {
    let len = acc.len();
    for i in 0..len {
        let hi = if i + 1 < len { acc[i + 1] << (LIMB_BITS - 1) } else { 0 };
        acc[i] = (acc[i] >> 1) | hi;
    }
}

/// Arithmetic (sign-preserving) shift right by one bit of a two's complement value.
pub(crate) fn sar1_limbs(acc: &mut [Limb]) {
    let sign = acc.last().map_or(0, |&t| t & (1 << (LIMB_BITS - 1)));
    shr1_limbs(acc);
    if let Some(top) = acc.last_mut() {
        *top |= sign;
    }
}

/// Two's complement negation in place.
pub(crate) fn neg_limbs(acc: &mut [Limb]) {
    let mut carry = true;
    for a in acc.iter_mut() {
        let (t, c) = (!*a).overflowing_add(carry as Limb);
        *a = t;
        carry = c;
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Signed multiprecision integer as sign and magnitude.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SNat {
    sign: Sign,
    mag: Nat,
}

impl SNat {
    pub fn zero() -> Self {
        SNat { sign: Sign::Zero, mag: Nat::zero() }
    }

    pub fn new(negative: bool, mag: Nat) -> Self {
        let sign = if mag.is_zero() {
            Sign::Zero
        } else if negative {
            Sign::Negative
        } else {
            Sign::Positive
        };
        SNat { sign, mag }
    }

    pub fn from_i64(v: i64) -> Self {
        SNat::new(v < 0, Nat::from_u64(v.unsigned_abs()))
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> &Nat {
        &self.mag
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Negative
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn neg(&self) -> SNat {
        SNat::new(self.sign == Sign::Positive, self.mag.clone())
    }

    pub fn add(&self, other: &SNat) -> SNat {
        match (self.sign, other.sign) {
            (Sign::Zero, _) => other.clone(),
            (_, Sign::Zero) => self.clone(),
            (a, b) if a == b => SNat::new(a == Sign::Negative, self.mag.add(&other.mag)),
            _ => match self.mag.cmp(&other.mag) {
                Ordering::Equal => SNat::zero(),
                Ordering::Greater => SNat::new(self.is_negative(), self.mag.sub(&other.mag)),
                Ordering::Less => SNat::new(other.is_negative(), other.mag.sub(&self.mag)),
            },
        }
    }

    pub fn sub(&self, other: &SNat) -> SNat {
        self.add(&other.neg())
    }

    pub fn mul_digit(&self, d: Digit) -> SNat {
        SNat::new(self.is_negative(), self.mag.mul_digit(d))
    }

    pub fn mul(&self, other: &SNat) -> SNat {
        SNat::new(self.is_negative() != other.is_negative(), self.mag.mul(&other.mag))
    }

    /// Least nonnegative residue modulo a single word.
    pub fn rem_euclid_limb(&self, n: Limb) -> Limb {
        let r = self.mag.rem_limb(n);
        if self.is_negative() && r != 0 {
            n - r
        } else {
            r
        }
    }

    /// Nonnegative value, if it is one.
    pub fn to_nat(&self) -> Option<Nat> {
        (!self.is_negative()).then(|| self.mag.clone())
    }
}

impl From<Nat> for SNat {
    fn from(mag: Nat) -> Self {
        SNat::new(false, mag)
    }
}

impl fmt::LowerHex for SNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-")?;
        }
        fmt::LowerHex::fmt(&self.mag, f)
    }
}

impl fmt::Display for SNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-")?;
        }
        fmt::Display::fmt(&self.mag, f)
    }
}

impl fmt::Debug for SNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self)
    }
}

/// The base `n` of the modulus `n^k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Radix {
    /// A single-limb radix `2 ≤ n < 2^W`.
    Small(Limb),
    /// `n = 2^W`: digits are limbs.
    LimbBase,
}

impl Radix {
    pub fn small(n: Limb) -> Result<Radix> {
        if n < 2 {
            return Err(Error::InvalidModulus(format!("radix must be at least 2, got {n}")));
        }
        Ok(Radix::Small(n))
    }

    /// Accepts any `n ≥ 2` up to and including `2^W`, mapping `2^W` to
    /// [`Radix::LimbBase`].
    pub fn from_nat(n: &Nat) -> Result<Radix> {
        match n.to_u128() {
            Some(v) if v == 1u128 << LIMB_BITS => Ok(Radix::LimbBase),
            Some(v) if v <= Limb::MAX as u128 => Radix::small(v as Limb),
            _ => Err(Error::InvalidModulus(format!("radix {n} does not fit in one limb"))),
        }
    }

    /// `n` as a double-width value.
    pub fn value(self) -> DoubleLimb {
        match self {
            Radix::Small(n) => n as DoubleLimb,
            Radix::LimbBase => 1 << LIMB_BITS,
        }
    }

    pub fn to_nat(self) -> Nat {
        Nat::from_u128(self.value())
    }

    pub fn check_digit(self, d: Digit) -> Result<()> {
        match self {
            Radix::Small(n) if d >= n => Err(Error::InvalidDigit { digit: d, radix: n }),
            _ => Ok(()),
        }
    }

    /// `d mod n`.
    pub fn reduce(self, d: Limb) -> Digit {
        match self {
            Radix::Small(n) => d % n,
            Radix::LimbBase => d,
        }
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radix::Small(n) => write!(f, "{n}"),
            Radix::LimbBase => write!(f, "2^{LIMB_BITS}"),
        }
    }
}
