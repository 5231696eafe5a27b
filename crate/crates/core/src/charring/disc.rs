use std::sync::Arc;

use serde::Serialize;

use super::class::{divide, CohClass};
use super::linalg;
use super::ring::{Ring, RingKind};
use super::RingError;
use crate::exactq::Rational;

/// Relative characteristic numbers of a disc bundle `W` over a closed base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscBundleNumbers {
    pub p1_sq: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1_e2: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e4: Option<Rational>,
    pub signature: i32,
}

impl DiscBundleNumbers {
    /// Numbers for the oppositely oriented disc bundle.
    pub fn reversed(&self) -> Self {
        DiscBundleNumbers {
            p1_sq: -&self.p1_sq,
            p1_e2: self.p1_e2.as_ref().map(|v| -v),
            e4: self.e4.as_ref().map(|v| -v),
            signature: -self.signature,
        }
    }
}

/// `⟨j⁻¹(u)·w, [W, ∂W]⟩` for classes `u, w` of degree 4 on the base, where
/// `j⁻¹` is realized as rational division by the Euler class under the
/// Thom isomorphism.
pub fn relative_pairing(u: &CohClass, w: &CohClass, e: &CohClass) -> Result<Rational, RingError> {
    Ok(divide(u, e)?.mul(w)?.pair_top())
}

/// Gram matrix `⟨bᵢ·bⱼ·e⟩` over the base basis in degree `4 − deg e`, i.e.
/// the intersection form of `W` on `H⁴(W, ∂W; ℚ)`.
pub fn intersection_form(e: &CohClass) -> Result<linalg::Matrix, RingError> {
    let ring = e.ring();
    let de = e.homogeneous_degree().ok_or(RingError::NotHomogeneous("euler class"))?;
    if de > 4 {
        return Err(RingError::NotHomogeneous("euler class"));
    }
    let basis: Vec<CohClass> = ring
        .basis(4 - de)
        .iter()
        .map(|m| CohClass::monomial(ring, m.clone(), Rational::one()))
        .collect();
    let mut form = Vec::with_capacity(basis.len());
    for bi in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for bj in &basis {
            row.push(bi.mul(bj)?.mul(e)?.pair_top());
        }
        form.push(row);
    }
    Ok(form)
}

fn nondegenerate_signature(e: &CohClass) -> Result<i32, RingError> {
    let form = intersection_form(e)?;
    if linalg::determinant(&form).is_zero() {
        return Err(RingError::DegenerateForm);
    }
    Ok(linalg::signature(&form))
}

/// Numbers of the 2-disc bundle with Euler class `e` over a 6-dimensional
/// base, given the base's own first Pontryagin class.
///
/// `p₁(TW) = p₁(base) + e²` since `p₁` of an oriented 2-plane bundle is `e²`.
pub fn circle_disc_numbers(
    ring: &Arc<Ring>,
    p1_base: &CohClass,
    e: &CohClass,
) -> Result<DiscBundleNumbers, RingError> {
    if !ring.is_circle_base() {
        return Err(RingError::WrongRing(ring.name()));
    }
    if e.is_zero() || e.homogeneous_degree() != Some(2) {
        return Err(RingError::NotHomogeneous("euler class must be nonzero in degree 2"));
    }
    let signature = nondegenerate_signature(e)?;
    let p1 = p1_base.add(&e.pow(2))?;
    Ok(DiscBundleNumbers {
        p1_sq: relative_pairing(&p1, &p1, e)?,
        p1_e2: Some(p1.mul(e)?.pair_top()),
        e4: Some(e.pow(3).pair_top()),
        signature,
    })
}

/// Numbers of the 4-disc bundle over a 4-dimensional base with
/// `p₁(TW) = p1_coeff · top` and Euler class `e_coeff · top`.
pub fn rank4_disc_numbers(
    ring: &Arc<Ring>,
    p1_coeff: &Rational,
    e_coeff: &Rational,
) -> Result<DiscBundleNumbers, RingError> {
    if !matches!(ring.kind(), RingKind::S4 | RingKind::Cp2) {
        return Err(RingError::WrongRing(ring.name()));
    }
    if e_coeff.is_zero() {
        return Err(RingError::ZeroEuler);
    }
    let p1 = CohClass::top(ring, p1_coeff.clone());
    let e = CohClass::top(ring, e_coeff.clone());
    let signature = nondegenerate_signature(&e)?;
    Ok(DiscBundleNumbers {
        p1_sq: relative_pairing(&p1, &p1, &e)?,
        p1_e2: None,
        e4: None,
        signature,
    })
}
