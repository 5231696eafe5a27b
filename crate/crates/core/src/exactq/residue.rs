use std::fmt;

use serde::{Serialize, Serializer};

use super::Rational;

/// An element of ℚ/ℤ, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueModZ(Rational);

impl ResidueModZ {
    pub fn rep(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `q − floor(q)`.
pub fn mod_z(q: &Rational) -> ResidueModZ {
    ResidueModZ(q - Rational::from_int(q.floor()))
}

/// True iff `q1 − q2` is an integer.
pub fn eq_mod_z(q1: &Rational, q2: &Rational) -> bool {
    (q1 - q2).is_integer()
}

impl fmt::Display for ResidueModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ResidueModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod Z", self.0)
    }
}

impl Serialize for ResidueModZ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn representatives() {
        assert_eq!(mod_z(&q(5, 2)).rep(), &q(1, 2));
        assert_eq!(mod_z(&q(-1, 3)).rep(), &q(2, 3));
        assert_eq!(mod_z(&q(7, 1)).rep(), &q(0, 1));
        assert_eq!(mod_z(&q(-4, 1)).rep(), &q(0, 1));
    }

    #[test]
    fn equality_mod_z() {
        let s = q(-81, 784);
        assert!(eq_mod_z(&s, &(&s + &Rational::from(3))));
        assert!(!eq_mod_z(&q(1, 2), &q(1, 3)));
        assert!(eq_mod_z(&Rational::zero(), &Rational::zero()));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1i64..=1_000_000).prop_map(|(n, d)| Rational::frac(n, d))
    }

    proptest! {
        #[test]
        fn mod_z_idempotent_and_in_range(x in rational()) {
            let r = mod_z(&x);
            prop_assert!(!r.rep().is_negative());
            prop_assert!(r.rep() < &Rational::one());
            prop_assert_eq!(mod_z(r.rep()), r);
        }

        #[test]
        fn eq_mod_z_matches_residues(x in rational(), y in rational(), k in -1000i64..1000) {
            prop_assert_eq!(eq_mod_z(&x, &y), mod_z(&x) == mod_z(&y));
            let shifted = &x + &Rational::from(k);
            prop_assert!(eq_mod_z(&x, &shifted));
            prop_assert!(eq_mod_z(&shifted, &x));
        }

        #[test]
        fn eq_mod_z_transitive(x in rational(), k1 in -50i64..50, k2 in -50i64..50) {
            let y = &x + &Rational::from(k1);
            let z = &y + &Rational::from(k2);
            prop_assert!(eq_mod_z(&x, &y) && eq_mod_z(&y, &z) && eq_mod_z(&x, &z));
        }

        #[test]
        fn string_round_trip(x in rational()) {
            let s = x.to_string();
            prop_assert_eq!(s.parse::<Rational>().unwrap(), x);
        }
    }
}
