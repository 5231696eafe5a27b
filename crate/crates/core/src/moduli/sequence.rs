use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{ser_pairs, ModuliError};
use crate::exactq::{bezout, int, BezoutPair, BigInt};
use crate::families::{
    bad_bezout_pair, Cp2SphereBundle, FamilyError, FamilyParams, FamilyTag, MilnorBundle,
    NonSpinCircleBundle, SpinCircleBundle,
};

/// Half-parameters `(a, b, t)` of the spin manifold M̄^{2t}_{a,2b}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinHalfParams {
    pub a: BigInt,
    pub b: BigInt,
    pub t: BigInt,
}

impl SpinHalfParams {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        SpinHalfParams { a: a.into(), b: b.into(), t: t.into() }
    }

    /// r = a² − 8tb², equal to a² − (2t)(2b)².
    pub fn order_param(&self) -> BigInt {
        &self.a * &self.a - int(8) * &self.t * &self.b * &self.b
    }

    pub fn manifold(&self) -> SpinCircleBundle {
        SpinCircleBundle::new(self.a.clone(), int(2) * &self.b, int(2) * &self.t)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if !self.a.gcd(&(int(2) * &self.b)).is_one() {
            return Err(FamilyError::NotCoprime);
        }
        if self.order_param().is_zero() {
            return Err(FamilyError::ZeroOrder("a^2 - 8*t*b^2"));
        }
        Ok(())
    }

    fn check_bezout(&self, bz: &BezoutPair) -> Result<(), FamilyError> {
        if (&bz.m * &self.a + int(2) * &bz.n * &self.b).is_one() {
            Ok(())
        } else {
            Err(bad_bezout_pair(bz, "m*a + 2*n*b = 1"))
        }
    }
}

pub fn sequence_milnor(base: &MilnorBundle, i: &BigInt) -> Result<MilnorBundle, FamilyError> {
    base.validate()?;
    Ok(MilnorBundle { m: &base.m + int(56) * &base.n * i, n: base.n.clone() })
}

pub fn sequence_cp2(base: &Cp2SphereBundle, i: &BigInt) -> Result<Cp2SphereBundle, FamilyError> {
    base.validate()?;
    let step = int(168) * base.h4_order() * i;
    Ok(Cp2SphereBundle { a: &base.a + &step, b: &base.b + &step })
}

/// With r = a² − 8tb² and λ = 2688r:
/// a_k = a + 16b²λk, b_k = b, t_k = t + 4aλk + 32b²λ²k², m_k = m,
/// n_k = n − 8bλmk.
pub fn sequence_spin(
    base: &SpinHalfParams,
    bz: &BezoutPair,
    k: &BigInt,
) -> Result<(SpinHalfParams, BezoutPair), FamilyError> {
    base.validate()?;
    base.check_bezout(bz)?;
    let (a, b, t) = (&base.a, &base.b, &base.t);
    let lk = int(2688) * base.order_param() * k;
    let b2 = b * b;
    let next = SpinHalfParams {
        a: a + int(16) * &b2 * &lk,
        b: b.clone(),
        t: t + int(4) * a * &lk + int(32) * &b2 * &lk * &lk,
    };
    let bz_k = BezoutPair { m: bz.m.clone(), n: &bz.n - int(8) * b * &lk * &bz.m };
    Ok((next, bz_k))
}

/// With r = t(a+b)² − ab and λ = 672r:
/// a_k = a + (a+b)²λk, b_k = b − (a+b)²λk, t_k = t − (a−b)λk − (a+b)²λ²k²,
/// m_k = m + (n−m)(a+b)λk, n_k = n + (n−m)(a+b)λk.
pub fn sequence_nonspin(
    base: &NonSpinCircleBundle,
    bz: &BezoutPair,
    k: &BigInt,
) -> Result<(NonSpinCircleBundle, BezoutPair), FamilyError> {
    base.validate()?;
    base.check_bezout(bz)?;
    let (a, b, t) = (&base.a, &base.b, &base.t);
    let lk = int(672) * base.order_param() * k;
    let s = a + b;
    let s2lk = &s * &s * &lk;
    let next = NonSpinCircleBundle {
        a: a + &s2lk,
        b: b - &s2lk,
        t: t - (a - b) * &lk - &s2lk * &lk,
    };
    let shift = (&bz.n - &bz.m) * &s * &lk;
    let bz_k = BezoutPair { m: &bz.m + &shift, n: &bz.n + &shift };
    Ok((next, bz_k))
}

/// A base manifold together with its diffeomorphic sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffeoSequenceSpec {
    family: FamilyTag,
    base: Vec<BigInt>,
    bezout: Option<BezoutPair>,
    lambda: BigInt,
}

/// Member k of a sequence: sequence coordinates, Bézout pair for circle
/// families, and the manifold they describe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceMember {
    #[serde(with = "crate::serde_bigint")]
    pub k: BigInt,
    #[serde(serialize_with = "ser_pairs")]
    pub params: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout: Option<BezoutPair>,
    pub manifold: String,
    #[serde(skip)]
    pub values: Vec<BigInt>,
    #[serde(skip)]
    pub family_params: FamilyParams,
}

impl DiffeoSequenceSpec {
    /// `values` are the family's parameters in [`FamilyTag::param_names`]
    /// order; for `spin` they are half-parameters. Circle families take the
    /// canonical Bézout pair when `bezout` is `None`.
    pub fn new(family: FamilyTag, values: &[BigInt], bezout_override: Option<BezoutPair>) -> Result<Self, ModuliError> {
        let names = family.param_names();
        if values.len() < names.len() {
            return Err(FamilyError::MissingParam(names[values.len()]).into());
        }
        let base = values[..names.len()].to_vec();
        let (bz, lambda) = match family {
            FamilyTag::Milnor => {
                let p = MilnorBundle::new(base[0].clone(), base[1].clone());
                p.validate()?;
                (None, int(56) * &p.n)
            }
            FamilyTag::Cp2 => {
                let p = Cp2SphereBundle::new(base[0].clone(), base[1].clone());
                p.validate()?;
                (None, int(168) * p.h4_order())
            }
            FamilyTag::NonSpin => {
                let p = NonSpinCircleBundle::new(base[0].clone(), base[1].clone(), base[2].clone());
                p.validate()?;
                let bz = match bezout_override {
                    Some(bz) => bz,
                    None => {
                        let (_, m, n) = bezout(&p.a, &p.b).expect("coprime");
                        BezoutPair { m, n }
                    }
                };
                p.check_bezout(&bz)?;
                (Some(bz), int(672) * p.order_param())
            }
            FamilyTag::Spin => {
                let p = SpinHalfParams::new(base[0].clone(), base[1].clone(), base[2].clone());
                p.validate()?;
                let bz = match bezout_override {
                    Some(bz) => bz,
                    None => {
                        let (_, m, n) = bezout(&p.a, &(int(2) * &p.b)).expect("coprime");
                        BezoutPair { m, n }
                    }
                };
                p.check_bezout(&bz)?;
                (Some(bz), int(2688) * p.order_param())
            }
        };
        Ok(DiffeoSequenceSpec { family, base, bezout: bz, lambda })
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn base(&self) -> &[BigInt] {
        &self.base
    }

    pub fn bezout(&self) -> Option<&BezoutPair> {
        self.bezout.as_ref()
    }

    /// The sequence modulus, signed; congruences are taken mod |λ|.
    pub fn lambda(&self) -> &BigInt {
        &self.lambda
    }

    pub fn member(&self, k: &BigInt) -> SequenceMember {
        let b = &self.base;
        let (values, bz, fp) = match self.family {
            FamilyTag::Milnor => {
                let p = sequence_milnor(&MilnorBundle::new(b[0].clone(), b[1].clone()), k).expect("validated");
                (vec![p.m.clone(), p.n.clone()], None, FamilyParams::Milnor(p))
            }
            FamilyTag::Cp2 => {
                let p = sequence_cp2(&Cp2SphereBundle::new(b[0].clone(), b[1].clone()), k).expect("validated");
                (vec![p.a.clone(), p.b.clone()], None, FamilyParams::Cp2(p))
            }
            FamilyTag::NonSpin => {
                let base = NonSpinCircleBundle::new(b[0].clone(), b[1].clone(), b[2].clone());
                let (p, bz) = sequence_nonspin(&base, self.bezout.as_ref().expect("set"), k).expect("validated");
                (vec![p.a.clone(), p.b.clone(), p.t.clone()], Some(bz), FamilyParams::NonSpin(p))
            }
            FamilyTag::Spin => {
                let base = SpinHalfParams::new(b[0].clone(), b[1].clone(), b[2].clone());
                let (p, bz) = sequence_spin(&base, self.bezout.as_ref().expect("set"), k).expect("validated");
                let m = p.manifold();
                (vec![p.a, p.b, p.t], Some(bz), FamilyParams::Spin(m))
            }
        };
        let params = self
            .family
            .param_names()
            .iter()
            .zip(&values)
            .map(|(n, v)| (n.to_string(), v.to_string()))
            .collect();
        SequenceMember {
            k: k.clone(),
            params,
            bezout: bz,
            manifold: fp.to_string(),
            values,
            family_params: fp,
        }
    }

    /// The manifold of member k, as family parameters.
    pub fn manifold(&self, k: &BigInt) -> FamilyParams {
        self.member(k).family_params
    }

    pub(crate) fn abs_lambda(&self) -> BigInt {
        self.lambda.abs()
    }
}
