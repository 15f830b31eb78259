//! Modular inversion modulo `n^k` for any radix `n > 1`, producing the inverse
//! one radix-`n` digit at a time.
//!
//! The headline configuration is `n = 2^64`, where every digit is a machine
//! word and the whole loop is single-word multiply-accumulate over the limbs
//! of `a`. See [`power_inverse`] for the algorithms, [`oracle`] for the
//! reference implementations they are checked against and [`bench`] for the
//! timing harness.

pub mod bench;
pub mod counters;
pub mod digit_inverse;
pub mod error;
pub mod mp;
pub mod oracle;
pub mod power_inverse;

pub use digit_inverse::{word_inverse, word_inverse_pow2_hensel, word_inverse_xgcd, WordInverseResult};
pub use error::{Error, Result};
pub use mp::{Digit, Limb, Nat, Radix, SNat, Sign, LIMB_BITS};
pub use power_inverse::{
    koc_inverse, koc_inverse_pow2_bitwise, prefix_inverses, radix_inverse, radix_inverse_general,
    radix_inverse_limb_base, radix_inverse_pow2_bitwise, reciprocal_power_mod_a, Algorithm,
    InverseRequest, InverseTrace,
};
