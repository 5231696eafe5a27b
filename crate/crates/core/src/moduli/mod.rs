//! Diffeomorphic sequences with varying s invariant.
//!
//! Each family has an explicit sequence of parameters, indexed by an
//! integer k, whose members are all diffeomorphic to the base while s is a
//! polynomial in k. [`verify_certificate`] re-checks the algebraic facts
//! behind the diffeomorphism claim for one member, [`s_polynomial`]
//! recovers the polynomial, and [`theorem_witness`] assembles both into an
//! evidence report.
//!
//! The spin family is indexed by half-parameters: base `(a, b, t)` with a
//! Bézout pair `m·a + 2n·b = 1` stands for the manifold M̄^{2t}_{a,2b}.

mod certificate;
mod poly;
mod search;
mod sequence;
mod witness;

pub use certificate::{verify_certificate, Check, DiffeoCertificate};
pub use poly::{distinct_s_prefix, s_polynomial, DistinctOutcome, Polynomial};
pub use search::{ks_diffeomorphic, search_diffeo_pairs, DEFAULT_MAX_PAIRS};
pub use sequence::{
    sequence_cp2, sequence_milnor, sequence_nonspin, sequence_spin, DiffeoSequenceSpec,
    SequenceMember, SpinHalfParams,
};
pub use witness::{theorem_witness, CertificateSummary, ModuliWitnessReport, WitnessMember};

use serde::ser::SerializeMap;
use serde::Serializer;
use thiserror::Error;

use crate::families::{FamilyError, FamilyTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("s is not a polynomial of degree <= 4 in k: at k = {k} expected {expected}, got {actual}")]
    DegreeViolation { k: i64, expected: String, actual: String },
    #[error("box has up to {pairs} pairs, above the limit of {limit}")]
    BoxTooLarge { pairs: u128, limit: u128 },
    #[error("no diffeomorphism criterion is available for the {0} family")]
    Unsupported(FamilyTag),
    #[error("count must be positive")]
    ZeroCount,
}

pub(crate) fn ser_pairs<S: Serializer>(pairs: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(pairs.len()))?;
    for (k, v) in pairs {
        map.serialize_entry(k, v)?;
    }
    map.end()
}
