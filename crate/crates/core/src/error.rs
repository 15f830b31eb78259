use thiserror::Error;

use crate::mp::{Limb, Nat};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `gcd(a, n) ≠ 1`; carries the gcd.
    #[error("not invertible: gcd={gcd:#x}")]
    NotInvertible { gcd: Nat },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("value out of range for the requested digit count")]
    OutOfRange,
    #[error("digit {digit} is not valid in radix {radix}")]
    InvalidDigit { digit: Limb, radix: Limb },
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("cannot parse number {0:?}")]
    Parse(String),
    #[error("benchmark verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn not_invertible(gcd: u128) -> Error {
        Error::NotInvertible { gcd: Nat::from_u128(gcd) }
    }
}
