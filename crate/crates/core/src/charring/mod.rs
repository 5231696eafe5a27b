//! Truncated graded cohomology rings and relative characteristic numbers of
//! disc bundles.
//!
//! This is the independent route to every characteristic number that the
//! closed forms in [`crate::families`] state: classes are multiplied in
//! normal form, preimages under `H⁴(W, ∂W; ℚ) → H⁴(W; ℚ)` are found by
//! solving `v·e = u` over ℚ, and pairings read off the top coefficient.
//!
//! Orientation convention: the top monomial (`u`, `x²`, `x²y`) pairs to +1.

mod class;
mod disc;
pub mod linalg;
mod ring;

pub use class::{divide, CohClass};
pub use disc::{
    circle_disc_numbers, intersection_form, rank4_disc_numbers, relative_pairing,
    DiscBundleNumbers,
};
pub use ring::{make_ring, Monomial, Ring, RingKind, Rule};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("unknown ring {0:?} (expected S4, CP2, Nt or NtBar)")]
    UnknownSpec(String),
    #[error("ring {0} needs the parameter t")]
    MissingParameter(String),
    #[error("no generator named {0:?}")]
    UnknownGenerator(String),
    #[error("classes live in different rings ({0} and {1})")]
    RingMismatch(String, String),
    #[error("{0} is not homogeneous")]
    NotHomogeneous(&'static str),
    #[error("the euler class does not divide the class over Q")]
    NoSolution,
    #[error("division by the euler class is not unique")]
    NonUnique,
    #[error("intersection form is degenerate")]
    DegenerateForm,
    #[error("euler number must be nonzero")]
    ZeroEuler,
    #[error("operation is not defined over ring {0}")]
    WrongRing(String),
}

#[cfg(test)]
mod tests;
