//! Exact integer and rational arithmetic.
//!
//! Every invariant in this crate is a [`Rational`]; the ℚ/ℤ-valued
//! classification invariants are [`ResidueModZ`]. Integers are unbounded
//! because sequence parameters grow quadratically in the sequence modulus.

mod bezout;
mod rational;
mod residue;

pub use bezout::{bezout, BezoutPair};
pub use rational::Rational;
pub use residue::{eq_mod_z, mod_z, ResidueModZ};

pub use num_bigint::BigInt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("bezout coefficients are undefined when both arguments are zero")]
    BothZero,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

/// Shorthand for building a `BigInt` from a machine integer.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Sign of an integer as -1, 0 or 1.
pub fn sgn(v: &BigInt) -> i32 {
    use num_bigint::Sign;
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
