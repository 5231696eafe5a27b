use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ExactError;

/// Coefficients `(m, n)` with `m·a + n·b = 1` for some context pair `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BezoutPair {
    #[serde(with = "crate::serde_bigint")]
    pub m: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub n: BigInt,
}

impl BezoutPair {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        BezoutPair { m: m.into(), n: n.into() }
    }

    /// True when `m·a + n·b = 1`.
    pub fn solves(&self, a: &BigInt, b: &BigInt) -> bool {
        (&self.m * a + &self.n * b).is_one()
    }

    /// The pair `(m + k·b, n − k·a)`, which solves the same equation.
    pub fn shifted(&self, a: &BigInt, b: &BigInt, k: &BigInt) -> Self {
        BezoutPair { m: &self.m + k * b, n: &self.n - k * a }
    }
}

/// Extended Euclid on `(a, b)`, returning `(g, m, n)` with `m·a + n·b = g`
/// and `g = gcd(|a|, |b|) > 0`.
///
/// The quotient at every step is the floor quotient, and the final triple is
/// negated if the last nonzero remainder is negative. This pins one solution
/// out of the family `(m + k·b/g, n − k·a/g)`; e.g. `(6, 4) ↦ (2, 1, −1)`.
pub fn bezout(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt), ExactError> {
    if a.is_zero() && b.is_zero() {
        return Err(ExactError::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        Ok((-r0, -s0, -t0))
    } else {
        Ok((r0, s0, t0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::int;
    use proptest::prelude::*;

    fn triple(a: i64, b: i64) -> (i64, i64, i64) {
        let (g, m, n) = bezout(&int(a), &int(b)).unwrap();
        (
            g.try_into().unwrap(),
            m.try_into().unwrap(),
            n.try_into().unwrap(),
        )
    }

    #[test]
    fn documented_examples() {
        assert_eq!(triple(1, 2), (1, 1, 0));
        assert_eq!(triple(0, 5), (5, 0, 1));
        assert_eq!(triple(6, 4), (2, 1, -1));
        assert_eq!(triple(-5, 0), (5, -1, 0));
        assert_eq!(triple(-6, 4), (2, 1, 2));
        assert_eq!(triple(3, -2), (1, -1, -2));
    }

    #[test]
    fn both_zero_rejected() {
        assert_eq!(bezout(&int(0), &int(0)), Err(ExactError::BothZero));
    }

    #[test]
    fn shifted_pair_still_solves() {
        let (a, b) = (int(7), int(4));
        let (_, m, n) = bezout(&a, &b).unwrap();
        let bz = BezoutPair::new(m, n);
        assert!(bz.solves(&a, &b));
        for k in -5..=5 {
            assert!(bz.shifted(&a, &b, &int(k)).solves(&a, &b));
        }
    }

    proptest! {
        #[test]
        fn bezout_identity_and_gcd(a in any::<i64>(), b in any::<i64>()) {
            prop_assume!(a != 0 || b != 0);
            let (a, b) = (int(a), int(b));
            let (g, m, n) = bezout(&a, &b).unwrap();
            prop_assert!(g.is_positive());
            prop_assert_eq!(&m * &a + &n * &b, g.clone());
            prop_assert_eq!(g, a.abs().gcd(&b.abs()));
        }
    }
}
