//! Exact computation of Kreck–Stolz invariants for four families of
//! 7-manifolds: S³ bundles over S⁴ and ℂP², and circle bundles over the
//! spin and non-spin S² bundles over ℂP².
//!
//! * [`exactq`]: bignum rationals, ℚ/ℤ residues, Bézout coefficients.
//! * [`charring`]: cohomology rings and disc-bundle characteristic numbers.
//! * [`families`]: closed-form invariants per family.
//! * [`moduli`]: diffeomorphic sequences, certificates and witnesses.
//! * [`crosscheck`]: ring engine against closed forms on parameter grids.

pub mod charring;
pub mod crosscheck;
pub mod exactq;
pub mod families;
pub mod moduli;

pub(crate) mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
