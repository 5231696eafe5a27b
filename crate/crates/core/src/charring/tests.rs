use super::*;
use crate::exactq::{int, Rational};
use proptest::prelude::*;
use std::sync::Arc;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn nt(t: i64) -> Arc<Ring> {
    Ring::new(RingKind::Nt(int(t)))
}

fn ntbar(t: i64) -> Arc<Ring> {
    Ring::new(RingKind::NtBar(int(t)))
}

fn lin(ring: &Arc<Ring>, cx: i64, cy: i64) -> CohClass {
    CohClass::linear(ring, &[(q(cx), "x"), (q(cy), "y")]).unwrap()
}

#[test]
fn ring_dumps_are_stable() {
    assert_eq!(
        make_ring("Nt", Some(int(3))).unwrap().to_string(),
        "ring Nt(t=3)\n\
         generators: x:2, y:2\n\
         relation: y^2 = -3*x^2 - x*y\n\
         relation: x^3 = 0\n\
         basis[0]: 1\n\
         basis[2]: x, y\n\
         basis[4]: x^2, x*y\n\
         basis[6]: x^2*y\n\
         top: x^2*y"
    );
    let ntbar0 = make_ring("NtBar", Some(int(0))).unwrap().to_string();
    assert!(ntbar0.contains("relation: y^2 = -x^2 - 2*x*y"), "{ntbar0}");
    let cp2 = make_ring("CP2", None).unwrap().to_string();
    assert!(cp2.contains("relation: x^3 = 0"));
    assert!(cp2.ends_with("top: x^2"));
    let s4 = make_ring("s4", None).unwrap().to_string();
    assert!(s4.contains("basis[4]: u"));
}

#[test]
fn unknown_or_incomplete_specs() {
    assert_eq!(make_ring("K3", None), Err(RingError::UnknownSpec("K3".into())));
    assert_eq!(make_ring("Nt", None), Err(RingError::MissingParameter("Nt".into())));
}

#[test]
fn relation_products_in_nt() {
    for t in [-2, 0, 1, 3] {
        let r = nt(t);
        let y = lin(&r, 0, 1);
        let yy = y.mul(&y).unwrap();
        let expected = CohClass::linear(&r, &[(q(-1), "x")])
            .unwrap()
            .mul(&y)
            .unwrap()
            .add(&lin(&r, 1, 0).pow(2).scale(&q(-t)))
            .unwrap();
        assert_eq!(yy, expected);
        // y³ = (1 − t)·x²y, pairing to 1 − t
        assert_eq!(yy.mul(&y).unwrap(), CohClass::top(&r, q(1 - t)));
        assert_eq!(y.pow(3).pair_top(), q(1 - t));
    }
    let cp2 = make_ring("CP2", None).unwrap();
    let x = CohClass::generator(&cp2, "x", q(1)).unwrap();
    assert!(x.pow(2).mul(&x).unwrap().is_zero());
}

#[test]
fn pairing_reads_top_coefficient() {
    let r = nt(4);
    assert_eq!(CohClass::top(&r, q(5)).pair_top(), q(5));
    assert_eq!(lin(&r, 1, 0).pow(2).pair_top(), q(0));
    let mixed = CohClass::top(&r, q(2)).add(&lin(&r, 7, 7)).unwrap();
    assert_eq!(mixed.pair_top(), q(2));
    assert_eq!(mixed.homogeneous_degree(), None);
    assert_eq!(mixed.component(6), CohClass::top(&r, q(2)));
}

#[test]
fn class_display() {
    let r = nt(1);
    let c = CohClass::top(&r, q(5))
        .add(&lin(&r, 1, 0).mul(&lin(&r, 0, -1)).unwrap())
        .unwrap()
        .add(&CohClass::scalar(&r, Rational::frac(1, 2)))
        .unwrap();
    assert_eq!(c.to_string(), "5*x^2*y - x*y + 1/2");
    assert_eq!(CohClass::zero(&r).to_string(), "0");
}

#[test]
fn division_examples() {
    let cp2 = make_ring("CP2", None).unwrap();
    let (a, b, c) = (5, 2, Rational::frac(-3, 7));
    let e = CohClass::top(&cp2, q(a - b));
    let u = CohClass::top(&cp2, q(a - b) * &c);
    assert_eq!(divide(&u, &e).unwrap(), CohClass::scalar(&cp2, c));

    let r = nt(1);
    let e = lin(&r, 1, 2);
    assert_eq!(divide(&e.pow(2), &e).unwrap(), e);

    let r0 = nt(0);
    let x = lin(&r0, 1, 0);
    assert_eq!(divide(&x.pow(2), &x).unwrap(), x);
}

#[test]
fn division_errors() {
    let r = nt(0);
    let x = lin(&r, 1, 0);
    // x·(c₁x + c₂y) never produces y² terms' image outside span{x², xy}; but
    // x² · v = x²y has no solution with v of degree 2 in the span of x·basis.
    let y = lin(&r, 0, 1);
    let x2 = x.pow(2);
    assert_eq!(divide(&x2.mul(&y).unwrap(), &x2), Err(RingError::NonUnique));
    let mixed = x.add(&x2).unwrap();
    assert!(matches!(divide(&mixed, &x), Err(RingError::NotHomogeneous(_))));
    let other = nt(5);
    assert!(matches!(
        divide(&lin(&other, 1, 0), &x),
        Err(RingError::RingMismatch(..))
    ));
    // Over CP2, x does not divide a degree-2 class into degree 0 uniquely
    // unless it is a multiple of x; y-type classes do not exist, so test the
    // top-degree case with e = x².
    let cp2 = make_ring("CP2", None).unwrap();
    let x2 = CohClass::top(&cp2, q(1));
    let one = CohClass::scalar(&cp2, q(1));
    assert_eq!(divide(&one, &x2), Err(RingError::NoSolution));
}

#[test]
fn degenerate_euler_class_in_nt() {
    // e = x + 2y in Nt(1) has e³ = −6·x²y and nondegenerate form; e = x in
    // Nt(0) gives the form [[0,1],[1,0]]·... check both paths.
    let r = nt(1);
    let form = intersection_form(&lin(&r, 1, 2)).unwrap();
    assert!(!linalg::determinant(&form).is_zero());
    // a = 1, b = 0, t = 0: order t(a+b)² − ab = 0, form degenerate
    let r0 = nt(0);
    let e = lin(&r0, 1, 1);
    let p1 = CohClass::top(&r0, q(0)).add(&lin(&r0, 1, 0).pow(2).scale(&q(4))).unwrap();
    assert_eq!(circle_disc_numbers(&r0, &p1, &e), Err(RingError::DegenerateForm));
}

#[test]
fn circle_numbers_spin_base_examples() {
    // (a, b, t) = (1, 2, 2): e = (a+b)x + by, p₁(N̄_t) = (3+4t)x²
    let r = ntbar(2);
    let p1 = lin(&r, 1, 0).pow(2).scale(&q(11));
    let n = circle_disc_numbers(&r, &p1, &lin(&r, 3, 2)).unwrap();
    // b(−(3+4t)²/(a²−b²t) + 6 + 8t + 3a² + tb²) = 2(121/7 + 33)
    assert_eq!(n.p1_sq, Rational::frac(704, 7));
    assert_eq!(n.signature, 2);

    let r = ntbar(0);
    let p1 = lin(&r, 1, 0).pow(2).scale(&q(3));
    let n = circle_disc_numbers(&r, &p1, &lin(&r, 3, 2)).unwrap();
    assert_eq!(n.signature, 0);
    assert_eq!(n.p1_sq, q(0));
}

#[test]
fn circle_numbers_nonspin_example() {
    // a = b = t = 1: e = x + 2y; by hand e² = −3x², e³ = −6x²y.
    let r = nt(1);
    let e = lin(&r, 1, 2);
    assert_eq!(e.pow(2), lin(&r, 1, 0).pow(2).scale(&q(-3)));
    let n = circle_disc_numbers(&r, &CohClass::zero(&r), &e).unwrap();
    assert_eq!(n.e4, Some(q(-6)));
    // P = e², so p₁e² = e⁴ and p₁² = ⟨e·e²⟩ = e⁴
    assert_eq!(n.p1_e2, Some(q(-6)));
    assert_eq!(n.p1_sq, q(-6));
    assert_eq!(n.signature, 0);
}

#[test]
fn rank4_examples() {
    let s4 = make_ring("S4", None).unwrap();
    // (m, n) = (0, 1): p₁ = 2(n+2m)u, e = n·u
    let n = rank4_disc_numbers(&s4, &q(2), &q(1)).unwrap();
    assert_eq!((n.p1_sq.clone(), n.signature), (q(4), 1));
    assert_eq!(n.p1_e2, None);

    let cp2 = make_ring("CP2", None).unwrap();
    // (a, b) = (1, 0): p₁ = (2a+2b+4)x², e = (a−b)x²
    let n = rank4_disc_numbers(&cp2, &q(6), &q(1)).unwrap();
    assert_eq!((n.p1_sq, n.signature), (q(36), 1));

    assert_eq!(rank4_disc_numbers(&s4, &q(2), &q(0)), Err(RingError::ZeroEuler));
    assert!(matches!(
        rank4_disc_numbers(&nt(0), &q(2), &q(1)),
        Err(RingError::WrongRing(_))
    ));
}

fn any_ring() -> impl Strategy<Value = Arc<Ring>> {
    prop_oneof![
        Just(Ring::new(RingKind::S4)),
        Just(Ring::new(RingKind::Cp2)),
        (-20i64..20).prop_map(nt),
        (-20i64..20).prop_map(ntbar),
    ]
}

fn class_in(ring: Arc<Ring>) -> impl Strategy<Value = CohClass> {
    let dims: Vec<(u32, usize)> = (0..=ring.top_degree())
        .step_by(2)
        .map(|d| (d, ring.basis(d).len()))
        .collect();
    let total: usize = dims.iter().map(|(_, n)| n).sum();
    proptest::collection::vec(-9i64..=9, total).prop_map(move |coords| {
        let mut acc = CohClass::zero(&ring);
        let mut it = coords.into_iter();
        for (d, n) in &dims {
            let c: Vec<Rational> = it.by_ref().take(*n).map(Rational::from).collect();
            acc = acc.add(&CohClass::from_coordinates(&ring, *d, &c)).unwrap();
        }
        acc
    })
}

fn three_classes() -> impl Strategy<Value = (CohClass, CohClass, CohClass)> {
    any_ring().prop_flat_map(|r| (class_in(r.clone()), class_in(r.clone()), class_in(r)))
}

proptest! {
    #[test]
    fn ring_laws((a, b, c) in three_classes()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn products_stay_in_normal_form((a, b, _c) in three_classes()) {
        let p = a.mul(&b).unwrap();
        let ring = p.ring().clone();
        for (m, c) in p.terms() {
            prop_assert!(!c.is_zero());
            prop_assert!(ring.basis(ring.degree(m)).contains(m));
        }
    }

    #[test]
    fn division_is_sound(t in -20i64..20, bar in any::<bool>(),
                         vx in -9i64..=9, vy in -9i64..=9, ex in -9i64..=9, ey in -9i64..=9,
                         ux in -9i64..=9, uy in -9i64..=9) {
        let r = if bar { ntbar(t) } else { nt(t) };
        let e = lin(&r, ex, ey);
        prop_assume!(!e.is_zero());
        let v = lin(&r, vx, vy);
        let u = v.mul(&e).unwrap();
        if let Ok(w) = divide(&u, &e) {
            prop_assert_eq!(w.mul(&e).unwrap(), u);
        }
        let arbitrary = lin(&r, ux, 0).mul(&lin(&r, 1, uy)).unwrap();
        if let Ok(w) = divide(&arbitrary, &e) {
            prop_assert_eq!(w.mul(&e).unwrap(), arbitrary);
        }
    }

    #[test]
    fn circle_signature_is_even(t in -6i64..6, bar in any::<bool>(), ex in -6i64..=6, ey in -6i64..=6) {
        let r = if bar { ntbar(t) } else { nt(t) };
        let e = lin(&r, ex, ey);
        prop_assume!(!e.is_zero());
        match circle_disc_numbers(&r, &CohClass::zero(&r), &e) {
            Ok(n) => prop_assert!([-2, 0, 2].contains(&n.signature)),
            Err(err) => prop_assert!(matches!(err, RingError::DegenerateForm | RingError::NonUnique | RingError::NoSolution)),
        }
    }
}
