//! Closed-form invariants of the four manifold families.
//!
//! | family | manifold | parameters |
//! |---|---|---|
//! | `milnor` | S³ bundle over S⁴, M_{m,n} | `(m, n)`, n ≠ 0 |
//! | `cp2` | S³ bundle over ℂP², S_{a,b} | `(a, b)`, a ≠ b |
//! | `nonspin` | circle bundle Mᵗ_{a,b} over N_t | `(a, b, t)` |
//! | `spin` | circle bundle M̄ᵗ_{a,b} over N̄_t | `(a, b, t)`, b and t even |
//!
//! Only the spin circle family carries s₂ and s₃.

mod grid;
mod invariants;
mod special;

pub use invariants::{
    cp2_sphere_invariants, invariants, milnor_invariants, nonspin_invariants,
    s_from_circle_boundary, s_from_spin_boundary, spin_invariants, spin_s2_s3,
};
pub use grid::ParamBox;
pub use special::{homogeneity_check, identify_special, HomogeneityVerdict, Identification};

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactq::{BezoutPair, BigInt, Rational, ResidueModZ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("n must be nonzero")]
    ZeroN,
    #[error("a and b must differ")]
    EqualAB,
    #[error("a and b must be coprime")]
    NotCoprime,
    #[error("the order of H^4 vanishes ({0} = 0)")]
    ZeroOrder(&'static str),
    #[error("b and t must be even")]
    OddParams,
    #[error("bezout pair ({m}, {n}) does not satisfy {equation}")]
    BadBezout { m: BigInt, n: BigInt, equation: &'static str },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("parameter {0} is required for this family")]
    MissingParam(&'static str),
    #[error("bad parameter box: {0}")]
    BadBox(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Milnor,
    Cp2,
    NonSpin,
    Spin,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 4] = [FamilyTag::Milnor, FamilyTag::Cp2, FamilyTag::NonSpin, FamilyTag::Spin];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Milnor => "milnor",
            FamilyTag::Cp2 => "cp2",
            FamilyTag::NonSpin => "nonspin",
            FamilyTag::Spin => "spin",
        }
    }

    /// Names of the integer parameters, in tuple order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyTag::Milnor => &["m", "n"],
            FamilyTag::Cp2 => &["a", "b"],
            FamilyTag::NonSpin | FamilyTag::Spin => &["a", "b", "t"],
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// M_{m,n}: the S³ bundle over S⁴ classified by mμ + nν.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MilnorBundle {
    #[serde(with = "crate::serde_bigint")]
    pub m: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub n: BigInt,
}

/// S_{a,b}: p₁ = (2a+2b+1)x², e = (a−b)x² over ℂP².
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cp2SphereBundle {
    #[serde(with = "crate::serde_bigint")]
    pub a: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub b: BigInt,
}

/// Mᵗ_{a,b}: circle bundle over N_t with Euler class ax + (a+b)y.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NonSpinCircleBundle {
    #[serde(with = "crate::serde_bigint")]
    pub a: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub b: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub t: BigInt,
}

/// M̄ᵗ_{a,b}: circle bundle over N̄_t with Euler class (a+b)x + by.
/// Spin exactly when b and t are even.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpinCircleBundle {
    #[serde(with = "crate::serde_bigint")]
    pub a: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub b: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub t: BigInt,
}

impl MilnorBundle {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        MilnorBundle { m: m.into(), n: n.into() }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.n.is_zero() {
            return Err(FamilyError::ZeroN);
        }
        Ok(())
    }

    pub fn h4_order(&self) -> BigInt {
        self.n.abs()
    }
}

impl Cp2SphereBundle {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Cp2SphereBundle { a: a.into(), b: b.into() }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.a == self.b {
            return Err(FamilyError::EqualAB);
        }
        Ok(())
    }

    pub fn h4_order(&self) -> BigInt {
        (&self.a - &self.b).abs()
    }
}

impl NonSpinCircleBundle {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        NonSpinCircleBundle { a: a.into(), b: b.into(), t: t.into() }
    }

    /// r = t(a+b)² − ab, so that |H⁴| = |r|.
    pub fn order_param(&self) -> BigInt {
        let s = &self.a + &self.b;
        &self.t * &s * &s - &self.a * &self.b
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if !self.a.gcd(&self.b).is_one() {
            return Err(FamilyError::NotCoprime);
        }
        if self.order_param().is_zero() {
            return Err(FamilyError::ZeroOrder("t(a+b)^2 - ab"));
        }
        Ok(())
    }

    pub fn check_bezout(&self, bz: &BezoutPair) -> Result<(), FamilyError> {
        if bz.solves(&self.a, &self.b) {
            Ok(())
        } else {
            Err(bad_bezout_pair(bz, "m*a + n*b = 1"))
        }
    }

    pub fn h4_order(&self) -> BigInt {
        self.order_param().abs()
    }
}

impl SpinCircleBundle {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        SpinCircleBundle { a: a.into(), b: b.into(), t: t.into() }
    }

    /// q = a² − tb², so that |H⁴| = |q|.
    pub fn order_param(&self) -> BigInt {
        &self.a * &self.a - &self.t * &self.b * &self.b
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.b.is_odd() || self.t.is_odd() {
            return Err(FamilyError::OddParams);
        }
        if !self.a.gcd(&self.b).is_one() {
            return Err(FamilyError::NotCoprime);
        }
        if self.order_param().is_zero() {
            return Err(FamilyError::ZeroOrder("a^2 - t*b^2"));
        }
        Ok(())
    }

    pub fn check_bezout(&self, bz: &BezoutPair) -> Result<(), FamilyError> {
        if bz.solves(&self.a, &self.b) {
            Ok(())
        } else {
            Err(bad_bezout_pair(bz, "m*a + n*b = 1"))
        }
    }

    pub fn h4_order(&self) -> BigInt {
        self.order_param().abs()
    }
}

/// The error for a Bézout pair that fails `equation`.
pub fn bad_bezout_pair(bz: &BezoutPair, equation: &'static str) -> FamilyError {
    FamilyError::BadBezout { m: bz.m.clone(), n: bz.n.clone(), equation }
}

/// A manifold from one of the four families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum FamilyParams {
    Milnor(MilnorBundle),
    Cp2(Cp2SphereBundle),
    NonSpin(NonSpinCircleBundle),
    Spin(SpinCircleBundle),
}

impl FamilyParams {
    /// Builds parameters from values listed in [`FamilyTag::param_names`] order.
    pub fn from_values(tag: FamilyTag, values: &[BigInt]) -> Result<Self, FamilyError> {
        let names = tag.param_names();
        if values.len() < names.len() {
            return Err(FamilyError::MissingParam(names[values.len()]));
        }
        let v = |i: usize| values[i].clone();
        Ok(match tag {
            FamilyTag::Milnor => FamilyParams::Milnor(MilnorBundle::new(v(0), v(1))),
            FamilyTag::Cp2 => FamilyParams::Cp2(Cp2SphereBundle::new(v(0), v(1))),
            FamilyTag::NonSpin => FamilyParams::NonSpin(NonSpinCircleBundle::new(v(0), v(1), v(2))),
            FamilyTag::Spin => FamilyParams::Spin(SpinCircleBundle::new(v(0), v(1), v(2))),
        })
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilyParams::Milnor(_) => FamilyTag::Milnor,
            FamilyParams::Cp2(_) => FamilyTag::Cp2,
            FamilyParams::NonSpin(_) => FamilyTag::NonSpin,
            FamilyParams::Spin(_) => FamilyTag::Spin,
        }
    }

    pub fn values(&self) -> Vec<BigInt> {
        match self {
            FamilyParams::Milnor(p) => vec![p.m.clone(), p.n.clone()],
            FamilyParams::Cp2(p) => vec![p.a.clone(), p.b.clone()],
            FamilyParams::NonSpin(p) => vec![p.a.clone(), p.b.clone(), p.t.clone()],
            FamilyParams::Spin(p) => vec![p.a.clone(), p.b.clone(), p.t.clone()],
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilyParams::Milnor(p) => p.validate(),
            FamilyParams::Cp2(p) => p.validate(),
            FamilyParams::NonSpin(p) => p.validate(),
            FamilyParams::Spin(p) => p.validate(),
        }
    }

    pub fn h4_order(&self) -> BigInt {
        match self {
            FamilyParams::Milnor(p) => p.h4_order(),
            FamilyParams::Cp2(p) => p.h4_order(),
            FamilyParams::NonSpin(p) => p.h4_order(),
            FamilyParams::Spin(p) => p.h4_order(),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        write!(f, "{}({})", self.tag(), vals.join(","))
    }
}

/// Invariants of one manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub family: FamilyTag,
    pub params: FamilyParams,
    #[serde(with = "crate::serde_bigint")]
    pub h4_order: BigInt,
    pub signature: i32,
    pub p1_sq: Rational,
    pub s: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s1: Option<ResidueModZ>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2: Option<ResidueModZ>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s3: Option<ResidueModZ>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout_used: Option<BezoutPair>,
}

#[cfg(test)]
mod tests;
