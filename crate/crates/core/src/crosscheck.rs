//! The ring engine as an oracle for the closed forms.
//!
//! For each family the disc-bundle numbers are recomputed from the
//! cohomology ring of the base, with the Euler and Pontryagin classes read
//! off the bundle data, and compared exactly against [`crate::families`].
//! The engine fixes an orientation of the disc bundle; [`calibrate`] picks
//! the sign ε ∈ {±1} that matches the closed forms at one reference point,
//! and every other point is then checked with that ε.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::charring::{
    circle_disc_numbers, rank4_disc_numbers, relative_pairing, CohClass, DiscBundleNumbers, Ring,
    RingError, RingKind,
};
use crate::exactq::{int, BezoutPair, BigInt, Rational};
use crate::families::{
    invariants, s_from_circle_boundary, s_from_spin_boundary, spin_s2_s3, FamilyError, FamilyParams,
    FamilyTag, ParamBox, SpinCircleBundle,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrosscheckError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("no orientation of the {0} engine matches the closed form at the reference point")]
    Calibration(FamilyTag),
}

/// One disagreement between engine and closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: String,
    pub quantity: &'static str,
    pub engine: String,
    pub closed_form: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} engine={} closed_form={}",
            self.params, self.quantity, self.engine, self.closed_form
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub family: FamilyTag,
    pub grid: String,
    pub epsilon: i32,
    pub checked: usize,
    pub skipped: usize,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

fn q(v: &BigInt) -> Rational {
    Rational::from(v)
}

fn lin(ring: &Arc<Ring>, cx: &BigInt, cy: &BigInt) -> CohClass {
    CohClass::linear(ring, &[(q(cx), "x"), (q(cy), "y")]).expect("x and y exist")
}

fn x_squared(ring: &Arc<Ring>, c: &BigInt) -> CohClass {
    CohClass::generator(ring, "x", Rational::one()).expect("x exists").pow(2).scale(&q(c))
}

/// Disc-bundle numbers of the family member, straight from the ring engine.
///
/// * Milnor: base S⁴, p₁ = 2(n+2m)u, e = nu.
/// * CP2: base ℂP², p₁ = (2a+2b+4)x², e = (a−b)x².
/// * nonspin: base N_t, p₁(N_t) = (4−4t)x², e = ax + (a+b)y.
/// * spin: base N̄_t, p₁(N̄_t) = (3+4t)x², e = (a+b)x + by.
pub fn engine_numbers(p: &FamilyParams) -> Result<DiscBundleNumbers, CrosscheckError> {
    Ok(match p {
        FamilyParams::Milnor(p) => {
            let ring = Ring::new(RingKind::S4);
            rank4_disc_numbers(&ring, &q(&(int(2) * (&p.n + int(2) * &p.m))), &q(&p.n))?
        }
        FamilyParams::Cp2(p) => {
            let ring = Ring::new(RingKind::Cp2);
            rank4_disc_numbers(&ring, &q(&(int(2) * (&p.a + &p.b) + int(4))), &q(&(&p.a - &p.b)))?
        }
        FamilyParams::NonSpin(p) => {
            let ring = Ring::new(RingKind::Nt(p.t.clone()));
            let base = x_squared(&ring, &(int(4) - int(4) * &p.t));
            circle_disc_numbers(&ring, &base, &lin(&ring, &p.a, &(&p.a + &p.b)))?
        }
        FamilyParams::Spin(p) => {
            let ring = Ring::new(RingKind::NtBar(p.t.clone()));
            let base = x_squared(&ring, &(int(3) + int(4) * &p.t));
            circle_disc_numbers(&ring, &base, &lin(&ring, &(&p.a + &p.b), &p.b))?
        }
    })
}

/// The s invariant assembled from engine numbers with the combinator that
/// fits the family: p₁e²/e⁴ corrections for the non-spin base only.
pub fn engine_s(tag: FamilyTag, n: &DiscBundleNumbers) -> Rational {
    match (tag, &n.p1_e2, &n.e4) {
        (FamilyTag::NonSpin, Some(p1e2), Some(e4)) => s_from_circle_boundary(&n.p1_sq, p1e2, e4, n.signature),
        _ => s_from_spin_boundary(&n.p1_sq, n.signature),
    }
}

/// s₂ and s₃ of M̄ᵗ_{a,b} from their definitions −z²p₁/48 + z⁴/24 and
/// −z²p₁/12 + 2z⁴/3, where z = (m−n)x + my restricts to a generator of
/// H²(M̄) and the products are relative pairings over the disc bundle.
pub fn engine_s2_s3(p: &SpinCircleBundle, bz: &BezoutPair) -> Result<(Rational, Rational), CrosscheckError> {
    let ring = Ring::new(RingKind::NtBar(p.t.clone()));
    let e = lin(&ring, &(&p.a + &p.b), &p.b);
    let p1 = x_squared(&ring, &(int(3) + int(4) * &p.t)).add(&e.pow(2))?;
    let z = lin(&ring, &(&bz.m - &bz.n), &bz.m);
    let z2 = z.pow(2);
    let z2p1 = relative_pairing(&z2, &p1, &e)?;
    let z4 = relative_pairing(&z2, &z2, &e)?;
    let s2 = z4.clone() * Rational::frac(1, 24) - z2p1.clone() * Rational::frac(1, 48);
    let s3 = z4 * Rational::frac(2, 3) - z2p1 * Rational::frac(1, 12);
    Ok((s2, s3))
}

fn reference_point(tag: FamilyTag) -> FamilyParams {
    let v: Vec<BigInt> = match tag {
        FamilyTag::Milnor => vec![int(0), int(1)],
        FamilyTag::Cp2 => vec![int(1), int(0)],
        FamilyTag::NonSpin => vec![int(1), int(1), int(0)],
        FamilyTag::Spin => vec![int(1), int(2), int(2)],
    };
    FamilyParams::from_values(tag, &v).expect("reference points are complete")
}

/// Orientation sign of the engine relative to the closed forms.
pub fn calibrate(tag: FamilyTag) -> Result<i32, CrosscheckError> {
    let p = reference_point(tag);
    let rep = invariants(&p, None)?;
    let n = engine_numbers(&p)?;
    let matches = |n: &DiscBundleNumbers| n.p1_sq == rep.p1_sq && n.signature == rep.signature;
    if matches(&n) {
        Ok(1)
    } else if matches(&n.reversed()) {
        Ok(-1)
    } else {
        Err(CrosscheckError::Calibration(tag))
    }
}

fn mismatch(p: &FamilyParams, quantity: &'static str, engine: impl ToString, closed: impl ToString) -> Counterexample {
    Counterexample {
        params: p.to_string(),
        quantity,
        engine: engine.to_string(),
        closed_form: closed.to_string(),
    }
}

/// Compares engine and closed form at one valid point. `None` means full
/// agreement.
pub fn check_point(p: &FamilyParams, epsilon: i32) -> Result<Option<Counterexample>, CrosscheckError> {
    let rep = invariants(p, None)?;
    let mut n = match engine_numbers(p) {
        Ok(n) => n,
        Err(e) => return Ok(Some(mismatch(p, "engine", e, "defined"))),
    };
    if epsilon < 0 {
        n = n.reversed();
    }
    if n.p1_sq != rep.p1_sq {
        return Ok(Some(mismatch(p, "p1_sq", &n.p1_sq, &rep.p1_sq)));
    }
    if n.signature != rep.signature {
        return Ok(Some(mismatch(p, "signature", n.signature, rep.signature)));
    }
    let s = engine_s(p.tag(), &n);
    if s != rep.s {
        return Ok(Some(mismatch(p, "s", &s, &rep.s)));
    }
    if let (FamilyParams::Spin(sp), Some(bz)) = (p, &rep.bezout_used) {
        let (e2, e3) = engine_s2_s3(sp, bz)?;
        let (c2, c3) = spin_s2_s3(sp, bz);
        if e2 != c2 {
            return Ok(Some(mismatch(p, "s2", &e2, &c2)));
        }
        if e3 != c3 {
            return Ok(Some(mismatch(p, "s3", &e3, &c3)));
        }
    }
    Ok(None)
}

/// Default grid per family: |a|,|b| ≤ 6 for CP2, |m| ≤ 6, 1 ≤ n ≤ 6 for
/// Milnor, |a| ≤ 5, |b| ≤ 4, |t| ≤ 3 for the circle families (spin: the
/// odd b and t in that box are skipped as invalid).
pub fn default_grid(tag: FamilyTag) -> ParamBox {
    let ranges = match tag {
        FamilyTag::Milnor => vec![(-6, 6), (1, 6)],
        FamilyTag::Cp2 => vec![(-6, 6), (-6, 6)],
        FamilyTag::NonSpin | FamilyTag::Spin => vec![(-5, 5), (-4, 4), (-3, 3)],
    };
    ParamBox::new(tag, ranges).expect("arity matches")
}

/// Runs [`check_point`] on every valid point of `grid` and reports the
/// first counterexample in lexicographic order. Milnor points with n < 0
/// are skipped: their closed-form signature is a convention.
pub fn crosscheck(grid: &ParamBox) -> Result<CrosscheckReport, CrosscheckError> {
    let tag = grid.tag();
    let epsilon = calibrate(tag)?;
    let points: Vec<FamilyParams> = grid
        .points()
        .into_iter()
        .filter(|p| p.validate().is_ok())
        .filter(|p| !matches!(p, FamilyParams::Milnor(m) if m.n.is_negative() || m.n.is_zero()))
        .collect();
    let total = grid.points().len();
    let results: Vec<Option<Counterexample>> = points
        .par_iter()
        .map(|p| check_point(p, epsilon))
        .collect::<Result<_, _>>()?;
    let counterexample = results.into_iter().flatten().next();
    Ok(CrosscheckReport {
        family: tag,
        grid: grid.to_string(),
        epsilon,
        checked: points.len(),
        skipped: total - points.len(),
        agree: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{NonSpinCircleBundle, SpinCircleBundle};

    #[test]
    fn every_engine_is_positively_oriented() {
        for tag in FamilyTag::ALL {
            assert_eq!(calibrate(tag), Ok(1), "{tag}");
        }
    }

    #[test]
    fn default_grids_agree() {
        for tag in FamilyTag::ALL {
            let rep = crosscheck(&default_grid(tag)).unwrap();
            assert!(rep.agree, "{:?}", rep.counterexample);
            assert!(rep.checked > 50, "{tag}: {}", rep.checked);
        }
    }

    #[test]
    fn milnor_engine_signature_is_sign_of_n() {
        let p = FamilyParams::Milnor(crate::families::MilnorBundle::new(1, -3));
        assert_eq!(engine_numbers(&p).unwrap().signature, -1);
    }

    #[test]
    fn spin_examples_through_engine() {
        let p = FamilyParams::Spin(SpinCircleBundle::new(1, 2, 0));
        let n = engine_numbers(&p).unwrap();
        assert_eq!((n.p1_sq.clone(), n.signature), (Rational::zero(), 0));
        assert_eq!(engine_s(FamilyTag::Spin, &n), Rational::zero());
        let p = SpinCircleBundle::new(1, 2, 2);
        let (s2, s3) = engine_s2_s3(&p, &BezoutPair::new(1, 0)).unwrap();
        assert_eq!((s2, s3), (Rational::frac(-1, 6), Rational::frac(-2, 21)));
    }

    #[test]
    fn nonspin_engine_value_at_w11() {
        let p = FamilyParams::NonSpin(NonSpinCircleBundle::new(1, 1, 1));
        let n = engine_numbers(&p).unwrap();
        assert_eq!(engine_s(FamilyTag::NonSpin, &n), Rational::frac(-1, 112));
    }

    #[test]
    fn engine_failure_is_reported_not_raised() {
        let rep = crosscheck(&ParamBox::parse(FamilyTag::NonSpin, "a=1,b=0,t=0").unwrap()).unwrap();
        assert_eq!((rep.checked, rep.skipped, rep.agree), (0, 1, true));
    }
}
