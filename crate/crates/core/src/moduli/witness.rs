use rayon::prelude::*;
use serde::Serialize;

use super::{distinct_s_prefix, s_polynomial, verify_certificate, DiffeoSequenceSpec, DistinctOutcome, ModuliError, Polynomial};
use crate::exactq::{BezoutPair, BigInt, Rational};
use crate::families::FamilyTag;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessMember {
    pub k: String,
    pub manifold: String,
    pub s: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub k: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<&'static str>,
}

/// Evidence that the base has infinitely many metrics in distinct
/// components: diffeomorphic members with pairwise distinct s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuliWitnessReport {
    pub family: FamilyTag,
    pub base: String,
    #[serde(serialize_with = "super::ser_pairs")]
    pub base_params: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout: Option<BezoutPair>,
    #[serde(with = "crate::serde_bigint")]
    pub lambda: BigInt,
    pub s_polynomial: Polynomial,
    pub outcome: &'static str,
    pub members: Vec<WitnessMember>,
    pub distinct: bool,
    pub certificates: Vec<CertificateSummary>,
    pub all_certificates_valid: bool,
    pub proved: bool,
}

/// Builds the sequence for `values`, finds `components` members with
/// pairwise distinct s and certifies each of them.
///
/// When s is constant along the sequence the report lists members
/// k = 0..components−1 with `outcome = "constant_polynomial"` and
/// `distinct = false`.
pub fn theorem_witness(family: FamilyTag, values: &[BigInt], components: usize) -> Result<ModuliWitnessReport, ModuliError> {
    let spec = DiffeoSequenceSpec::new(family, values, None)?;
    let poly = s_polynomial(&spec)?;
    let outcome = distinct_s_prefix(&spec, components)?;
    let (ks, distinct, label): (Vec<BigInt>, bool, &'static str) = match &outcome {
        DistinctOutcome::Distinct { members } => (
            members.iter().map(|(k, _)| k.parse().expect("decimal index")).collect(),
            true,
            "distinct",
        ),
        DistinctOutcome::ConstantPolynomial { .. } => {
            ((0..components as i64).map(BigInt::from).collect(), false, "constant_polynomial")
        }
    };
    let certs = ks
        .par_iter()
        .map(|k| verify_certificate(&spec, k))
        .collect::<Result<Vec<_>, _>>()?;
    let members = match outcome {
        DistinctOutcome::Distinct { members } => members
            .into_iter()
            .zip(&certs)
            .map(|((k, s), c)| WitnessMember { k, manifold: c.member.manifold.clone(), s })
            .collect(),
        DistinctOutcome::ConstantPolynomial { value } => certs
            .iter()
            .map(|c| WitnessMember { k: c.member.k.to_string(), manifold: c.member.manifold.clone(), s: value.clone() })
            .collect(),
    };
    let certificates: Vec<CertificateSummary> = certs
        .iter()
        .map(|c| CertificateSummary {
            k: c.member.k.to_string(),
            valid: c.valid,
            failed: c.checks.iter().filter(|x| !x.pass).map(|x| x.name).collect(),
        })
        .collect();
    let all_valid = certificates.iter().all(|c| c.valid);
    let base = spec.member(&BigInt::from(0));
    Ok(ModuliWitnessReport {
        family,
        base: base.manifold,
        base_params: base.params,
        bezout: spec.bezout().cloned(),
        lambda: spec.lambda().clone(),
        s_polynomial: poly,
        outcome: label,
        members,
        distinct,
        certificates,
        all_certificates_valid: all_valid,
        proved: all_valid && distinct,
    })
}
