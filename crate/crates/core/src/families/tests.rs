use super::*;
use crate::exactq::{bezout, int, mod_z, Rational};
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn res(n: i64, d: i64) -> ResidueModZ {
    mod_z(&r(n, d))
}

#[test]
fn combinators() {
    assert_eq!(s_from_spin_boundary(&r(4, 1), 1), r(0, 1));
    assert_eq!(s_from_spin_boundary(&r(0, 1), 0), r(0, 1));
    assert_eq!(s_from_spin_boundary(&r(36, 1), 1), r(-1, 28));
    let z = r(0, 1);
    assert_eq!(s_from_circle_boundary(&z, &z, &z, 0), z);
    // e⁴ = p₁e² = −6, p₁² = −6, sign 0 at (1,1,1)
    assert_eq!(s_from_circle_boundary(&r(-6, 1), &r(-6, 1), &r(-6, 1), 0), r(-1, 112));
}

#[test]
fn milnor_examples() {
    let rep = milnor_invariants(&MilnorBundle::new(0, 1)).unwrap();
    assert_eq!((rep.h4_order, rep.p1_sq, rep.signature, rep.s), (int(1), r(4, 1), 1, r(0, 1)));
    let rep = milnor_invariants(&MilnorBundle::new(1, 2)).unwrap();
    assert_eq!((rep.h4_order, rep.p1_sq, rep.s), (int(2), r(32, 1), r(-1, 32)));
    assert_eq!(milnor_invariants(&MilnorBundle::new(3, 0)), Err(FamilyError::ZeroN));
    assert_eq!(FamilyError::ZeroN.to_string(), "n must be nonzero");
}

#[test]
fn cp2_examples() {
    let rep = cp2_sphere_invariants(&Cp2SphereBundle::new(1, 0)).unwrap();
    assert_eq!((rep.h4_order, rep.signature, rep.p1_sq, rep.s), (int(1), 1, r(36, 1), r(-1, 28)));
    let rep = cp2_sphere_invariants(&Cp2SphereBundle::new(0, 1)).unwrap();
    assert_eq!((rep.h4_order, rep.signature, rep.s), (int(1), -1, r(1, 28)));
    let rep = cp2_sphere_invariants(&Cp2SphereBundle::new(3, 1)).unwrap();
    assert_eq!((rep.h4_order, rep.s), (int(2), r(-17, 224)));
    assert_eq!(cp2_sphere_invariants(&Cp2SphereBundle::new(2, 2)), Err(FamilyError::EqualAB));
}

#[test]
fn nonspin_examples() {
    let rep = nonspin_invariants(&NonSpinCircleBundle::new(1, 1, 1)).unwrap();
    assert_eq!((rep.h4_order, rep.signature, rep.s), (int(3), 0, r(-1, 112)));
    assert_eq!(rep.p1_sq, r(-6, 1));
    let rep = nonspin_invariants(&NonSpinCircleBundle::new(1, 1, 0)).unwrap();
    assert_eq!((rep.h4_order, rep.signature, rep.s), (int(1), 2, r(0, 1)));
    for ((a, b, t), (h4, sig, s)) in [
        ((2, 3, -1), (31, 2, r(1231, 3472))),
        ((1, -2, 3), (5, 0, r(1, 280))),
        ((3, -1, 0), (3, 0, r(25, 336))),
    ] {
        let rep = nonspin_invariants(&NonSpinCircleBundle::new(a, b, t)).unwrap();
        assert_eq!((rep.h4_order, rep.signature, rep.s), (int(h4), sig, s), "({a},{b},{t})");
        assert!(rep.s1.is_none() && rep.s2.is_none() && rep.s3.is_none());
    }
    assert_eq!(
        nonspin_invariants(&NonSpinCircleBundle::new(1, 0, 0)),
        Err(FamilyError::ZeroOrder("t(a+b)^2 - ab"))
    );
    assert_eq!(nonspin_invariants(&NonSpinCircleBundle::new(2, 4, 1)), Err(FamilyError::NotCoprime));
}

#[test]
fn spin_examples() {
    let bz = BezoutPair::new(1, 0);
    let rep = spin_invariants(&SpinCircleBundle::new(1, 2, 0), Some(&bz)).unwrap();
    assert_eq!((rep.h4_order.clone(), rep.signature, rep.s.clone()), (int(1), 0, r(0, 1)));
    assert!(rep.s1.as_ref().unwrap().is_zero());
    assert!(rep.s2.as_ref().unwrap().is_zero());
    assert!(rep.s3.as_ref().unwrap().is_zero());

    let rep = spin_invariants(&SpinCircleBundle::new(1, 2, 2), None).unwrap();
    assert_eq!((rep.h4_order.clone(), rep.signature, rep.s.clone()), (int(7), 2, r(-81, 784)));
    assert_eq!(rep.p1_sq, r(704, 7));
    assert_eq!(rep.bezout_used, Some(BezoutPair::new(1, 0)));
    assert_eq!(rep.s1, Some(res(-81, 784)));
    assert_eq!(rep.s2, Some(res(5, 6)));
    assert_eq!(rep.s3, Some(res(19, 21)));

    assert_eq!(spin_invariants(&SpinCircleBundle::new(1, 3, 2), None), Err(FamilyError::OddParams));
    assert_eq!(spin_invariants(&SpinCircleBundle::new(1, 2, 1), None), Err(FamilyError::OddParams));
    assert_eq!(spin_invariants(&SpinCircleBundle::new(2, 4, 0), None), Err(FamilyError::NotCoprime));
    assert!(matches!(
        spin_invariants(&SpinCircleBundle::new(1, 2, 2), Some(&BezoutPair::new(1, 1))),
        Err(FamilyError::BadBezout { .. })
    ));
}

#[test]
fn spin_second_and_third_invariants() {
    // values from an independent evaluation of −z²p₁/48 + z⁴/24 and
    // −z²p₁/12 + 2z⁴/3 in the cohomology of the disc bundle
    for ((a, b, t, m, n), (s2, s3)) in [
        ((1, 2, 2, 1, 0), (r(-1, 6), r(-2, 21))),
        ((3, 2, -4, 1, -1), (r(7, 75), r(-1, 15))),
        ((1, 0, 2, 1, 0), (r(0, 1), r(0, 1))),
        ((5, 4, 2, 1, -1), (r(-10, 21), r(-4, 3))),
    ] {
        let p = SpinCircleBundle::new(a, b, t);
        assert_eq!(spin_s2_s3(&p, &BezoutPair::new(m, n)), (s2, s3), "({a},{b},{t})");
    }
    let rep = spin_invariants(&SpinCircleBundle::new(3, 2, -4), Some(&BezoutPair::new(1, -1))).unwrap();
    assert_eq!((rep.s, rep.signature, rep.h4_order), (r(17, 350), 0, int(25)));
    let rep = spin_invariants(&SpinCircleBundle::new(5, 4, 2), None).unwrap();
    assert_eq!((rep.s, rep.signature, rep.h4_order), (r(-505, 784), 2, int(7)));
}

#[test]
fn report_json_layout() {
    let rep = milnor_invariants(&MilnorBundle::new(0, 1)).unwrap();
    assert_eq!(
        serde_json::to_string(&rep).unwrap(),
        r#"{"family":"milnor","params":{"m":"0","n":"1"},"h4_order":"1","signature":1,"p1_sq":"4","s":"0"}"#
    );
    let rep = spin_invariants(&SpinCircleBundle::new(1, 2, 2), None).unwrap();
    assert_eq!(
        serde_json::to_string(&rep).unwrap(),
        r#"{"family":"spin","params":{"a":"1","b":"2","t":"2"},"h4_order":"7","signature":2,"p1_sq":"704/7","s":"-81/784","s1":"703/784","s2":"5/6","s3":"19/21","bezout_used":{"m":"1","n":"0"}}"#
    );
}

#[test]
fn homogeneity_examples() {
    let milnor = |n| FamilyParams::Milnor(MilnorBundle::new(0, n));
    assert_eq!(
        homogeneity_check(&milnor(2)).unwrap(),
        HomogeneityVerdict::PossiblyHomogeneous(vec!["T_1S^4".into()])
    );
    assert_eq!(homogeneity_check(&milnor(7)).unwrap(), HomogeneityVerdict::NotHomogeneousCohomology);
    assert!(matches!(homogeneity_check(&milnor(-10)).unwrap(), HomogeneityVerdict::PossiblyHomogeneous(_)));
    let s = FamilyParams::Cp2(Cp2SphereBundle::new(6, 1));
    assert_eq!(homogeneity_check(&s).unwrap(), HomogeneityVerdict::NotHomogeneousCohomology);
    assert_eq!(homogeneity_check(&milnor(0)), Err(FamilyError::ZeroN));
}

#[test]
fn special_identifications() {
    let ids = identify_special(&FamilyParams::NonSpin(NonSpinCircleBundle::new(2, 3, 1)));
    assert_eq!(ids, vec![Identification::AloffWallach { k: int(2), l: int(3) }]);
    let ids = identify_special(&FamilyParams::NonSpin(NonSpinCircleBundle::new(1, 2, -1)));
    assert_eq!(ids[0].to_string(), "Eschenburg space F_{1,2}, admits sec>0");
    let ids = identify_special(&FamilyParams::NonSpin(NonSpinCircleBundle::new(1, -2, -1)));
    assert_eq!(ids[0].to_string(), "Eschenburg space F_{1,-2}");
    let ids = identify_special(&FamilyParams::Cp2(Cp2SphereBundle::new(-1, 2)));
    assert_eq!(ids, vec![Identification::AloffWallach { k: int(2), l: int(-1) }]);
    assert!(identify_special(&FamilyParams::Cp2(Cp2SphereBundle::new(-1, 3))).is_empty());
    let ids = identify_special(&FamilyParams::Spin(SpinCircleBundle::new(1, 2, 0)));
    assert_eq!(ids[0].to_string(), "homogeneous space N_{2,1}");
    let ids = identify_special(&FamilyParams::Milnor(MilnorBundle::new(5, -1)));
    assert_eq!(ids, vec![Identification::HomotopySphere]);
    assert!(identify_special(&FamilyParams::NonSpin(NonSpinCircleBundle::new(1, 1, 2))).is_empty());
}

#[test]
fn tags_and_params() {
    assert_eq!("NonSpin".parse::<FamilyTag>().unwrap(), FamilyTag::NonSpin);
    assert!("k3".parse::<FamilyTag>().is_err());
    let p = FamilyParams::from_values(FamilyTag::Spin, &[int(1), int(2), int(2)]).unwrap();
    assert_eq!(p.to_string(), "spin(1,2,2)");
    assert_eq!(
        FamilyParams::from_values(FamilyTag::NonSpin, &[int(1), int(2)]),
        Err(FamilyError::MissingParam("t"))
    );
}

fn spin_params() -> impl Strategy<Value = SpinCircleBundle> {
    (-400i64..400, -200i64..200, -200i64..200)
        .prop_map(|(a, b, t)| SpinCircleBundle::new(a, 2 * b, 2 * t))
        .prop_filter("valid spin parameters", |p| p.validate().is_ok())
}

proptest! {
    #[test]
    fn rank4_reports_match_combinator(x in -1000i64..1000, y in -1000i64..1000) {
        if y != 0 {
            let rep = milnor_invariants(&MilnorBundle::new(x, y)).unwrap();
            prop_assert_eq!(rep.s, s_from_spin_boundary(&rep.p1_sq, rep.signature));
        }
        if x != y {
            let rep = cp2_sphere_invariants(&Cp2SphereBundle::new(x, y)).unwrap();
            prop_assert_eq!(rep.s, s_from_spin_boundary(&rep.p1_sq, rep.signature));
        }
    }

    #[test]
    fn spin_s1_is_s_mod_z(p in spin_params()) {
        let rep = spin_invariants(&p, None).unwrap();
        prop_assert_eq!(rep.s1.unwrap(), mod_z(&rep.s));
        prop_assert!([-2, 0, 2].contains(&rep.signature));
    }

    #[test]
    fn bezout_choice_does_not_matter(p in spin_params(), k in -5i64..=5) {
        let base = spin_invariants(&p, None).unwrap();
        let bz = base.bezout_used.clone().unwrap().shifted(&p.a, &p.b, &int(k));
        let shifted = spin_invariants(&p, Some(&bz)).unwrap();
        prop_assert_eq!((&base.s1, &base.s2, &base.s3), (&shifted.s1, &shifted.s2, &shifted.s3));
    }

    #[test]
    fn homogeneous_orders_avoid_two_mod_three(a in -60i64..60, b in -60i64..60, t in -20i64..20, cp2 in any::<bool>()) {
        let p = if cp2 {
            FamilyParams::Cp2(Cp2SphereBundle::new(a, b))
        } else {
            FamilyParams::NonSpin(NonSpinCircleBundle::new(a, b, t))
        };
        if let Ok(HomogeneityVerdict::PossiblyHomogeneous(_)) = homogeneity_check(&p) {
            let h = p.h4_order() % 3u32;
            prop_assert!(h == int(0) || h == int(1));
        }
    }

    #[test]
    fn nonspin_signature_cases(a in -60i64..60, b in -60i64..60, t in -20i64..20) {
        let p = NonSpinCircleBundle::new(a, b, t);
        if let Ok(rep) = nonspin_invariants(&p) {
            prop_assert!([-2, 0, 2].contains(&rep.signature));
            if a + b == 0 {
                prop_assert_eq!(rep.signature, 0);
            }
        }
    }
}

#[test]
fn canonical_bezout_is_recorded() {
    let p = SpinCircleBundle::new(7, 4, 2);
    let (_, m, n) = bezout(&p.a, &p.b).unwrap();
    let rep = spin_invariants(&p, None).unwrap();
    assert_eq!(rep.bezout_used, Some(BezoutPair { m, n }));
}
