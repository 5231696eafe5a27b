use num_traits::Signed;

use super::{
    Cp2SphereBundle, FamilyError, FamilyParams, FamilyTag, InvariantReport, MilnorBundle,
    NonSpinCircleBundle, SpinCircleBundle,
};
use crate::exactq::{bezout, int, mod_z, sgn, BezoutPair, BigInt, Rational};

fn ratio(num: BigInt, den: &BigInt) -> Rational {
    Rational::new(num, den.clone()).expect("denominator checked by validate")
}

fn q(v: &BigInt) -> Rational {
    Rational::from(v)
}

/// s = −p₁²/896 + sign/224, for a spin disc bundle bounding M.
pub fn s_from_spin_boundary(p1_sq: &Rational, signature: i32) -> Rational {
    Rational::frac(signature as i64, 224) - p1_sq * Rational::frac(1, 896)
}

/// s = −p₁²/896 + (2p₁e² − e⁴)/384 + sign/224, for a disc bundle over a
/// non-spin base whose boundary circle bundle is spin.
pub fn s_from_circle_boundary(p1_sq: &Rational, p1_e2: &Rational, e4: &Rational, signature: i32) -> Rational {
    let mixed = (Rational::from(2) * p1_e2 - e4) * Rational::frac(1, 384);
    s_from_spin_boundary(p1_sq, signature) + mixed
}

pub fn milnor_invariants(p: &MilnorBundle) -> Result<InvariantReport, FamilyError> {
    p.validate()?;
    let k = &p.n + int(2) * &p.m;
    let k2 = &k * &k;
    Ok(InvariantReport {
        family: FamilyTag::Milnor,
        params: FamilyParams::Milnor(p.clone()),
        h4_order: p.h4_order(),
        signature: 1,
        p1_sq: ratio(int(4) * &k2, &p.n),
        s: ratio(&p.n - k2, &(int(224) * &p.n)),
        s1: None,
        s2: None,
        s3: None,
        bezout_used: None,
    })
}

pub fn cp2_sphere_invariants(p: &Cp2SphereBundle) -> Result<InvariantReport, FamilyError> {
    p.validate()?;
    let d = &p.a - &p.b;
    let h = &p.a + &p.b + int(2);
    let sig = sgn(&d);
    Ok(InvariantReport {
        family: FamilyTag::Cp2,
        params: FamilyParams::Cp2(p.clone()),
        h4_order: d.abs(),
        signature: sig,
        p1_sq: ratio(int(4) * &h * &h, &d),
        s: Rational::frac(sig as i64, 224) - ratio(&h * &h, &(int(224) * &d)),
        s1: None,
        s2: None,
        s3: None,
        bezout_used: None,
    })
}

/// Invariants of Mᵗ_{a,b}.
///
/// With r = t(a+b)² − ab:
/// s = (a+b)(1−t)²/(56r) + (a+b)(−3ab + (1−t)(8+(a+b)²))/672 + sign/224,
/// and p₁² = 8(1−t)(a+b) + e⁴ − 16(1−t)²(a+b)/r with
/// e⁴ = (a+b)(a² − ab + b² − t(a+b)²).
pub fn nonspin_invariants(p: &NonSpinCircleBundle) -> Result<InvariantReport, FamilyError> {
    p.validate()?;
    let (a, b, t) = (&p.a, &p.b, &p.t);
    let r = p.order_param();
    let sum = a + b;
    let u = int(1) - t;
    let signature = if r.is_positive() { 0 } else { 2 * sgn(&sum) };
    let e4 = &sum * (a * a - a * b + b * b - t * &sum * &sum);
    let p1_sq = q(&(int(8) * &u * &sum + e4)) - ratio(int(16) * &u * &u * &sum, &r);
    let mid = int(-3) * a * b + &u * (int(8) + &sum * &sum);
    let s = ratio(&sum * &u * &u, &(int(56) * &r))
        + Rational::from(&sum * mid) * Rational::frac(1, 672)
        + Rational::frac(signature as i64, 224);
    Ok(InvariantReport {
        family: FamilyTag::NonSpin,
        params: FamilyParams::NonSpin(p.clone()),
        h4_order: r.abs(),
        signature,
        p1_sq,
        s,
        s1: None,
        s2: None,
        s3: None,
        bezout_used: None,
    })
}

/// Unreduced s₂ and s₃ of M̄ᵗ_{a,b} for a pair with ma + nb = 1.
///
/// With q = a² − tb², X = b(n²+tm²) − 2anm, Y = an² + atm² + 2tbnm and
/// Z = bn² + btm² + 2anm:
/// s₂ = −X/48 − (4nm·Y − (3+4t−2n²−2tm²)·Z)/(48q),
/// s₃ = −X/12 − (16nm·Y − (3+4t−8n²−8tm²)·Z)/(12q).
/// Preconditions are not checked here.
pub fn spin_s2_s3(p: &SpinCircleBundle, bz: &BezoutPair) -> (Rational, Rational) {
    let (a, b, t) = (&p.a, &p.b, &p.t);
    let (m, n) = (&bz.m, &bz.n);
    let qq = p.order_param();
    let n2 = n * n;
    let tm2 = t * m * m;
    let nm = n * m;
    let x = b * (&n2 + &tm2) - int(2) * a * &nm;
    let y = a * &n2 + a * &tm2 + int(2) * t * b * &nm;
    let z = b * &n2 + b * &tm2 + int(2) * a * &nm;
    let base = int(3) + int(4) * t;
    let s2 = -ratio(x.clone(), &int(48))
        - ratio(int(4) * &nm * &y - (&base - int(2) * (&n2 + &tm2)) * &z, &(int(48) * &qq));
    let s3 = -ratio(x, &int(12))
        - ratio(int(16) * &nm * &y - (&base - int(8) * (&n2 + &tm2)) * &z, &(int(12) * &qq));
    (s2, s3)
}

/// Invariants of M̄ᵗ_{a,b}, b and t even.
///
/// s = (b/896)((3+4t)²/q − 6 − 8t − 3a² − tb²) + sign/224 with q = a² − tb².
/// `bz` defaults to the canonical Bézout pair of (a, b).
pub fn spin_invariants(p: &SpinCircleBundle, bz: Option<&BezoutPair>) -> Result<InvariantReport, FamilyError> {
    p.validate()?;
    let bz = match bz {
        Some(bz) => {
            p.check_bezout(bz)?;
            bz.clone()
        }
        None => {
            let (_, m, n) = bezout(&p.a, &p.b).expect("gcd(a, b) = 1");
            BezoutPair { m, n }
        }
    };
    let (a, b, t) = (&p.a, &p.b, &p.t);
    let qq = p.order_param();
    let signature = if qq.is_positive() {
        0
    } else {
        2 * sgn(&(b * (int(1) + t)))
    };
    let c = int(3) + int(4) * t;
    let p1_sq = q(b) * (q(&(int(6) + int(8) * t + int(3) * a * a + t * b * b)) - ratio(&c * &c, &qq));
    let s = s_from_spin_boundary(&p1_sq, signature);
    let (s2, s3) = spin_s2_s3(p, &bz);
    Ok(InvariantReport {
        family: FamilyTag::Spin,
        params: FamilyParams::Spin(p.clone()),
        h4_order: qq.abs(),
        signature,
        p1_sq,
        s1: Some(mod_z(&s)),
        s,
        s2: Some(mod_z(&s2)),
        s3: Some(mod_z(&s3)),
        bezout_used: Some(bz),
    })
}

/// Dispatches on the family; `bz` is used by the spin family only.
pub fn invariants(p: &FamilyParams, bz: Option<&BezoutPair>) -> Result<InvariantReport, FamilyError> {
    match p {
        FamilyParams::Milnor(p) => milnor_invariants(p),
        FamilyParams::Cp2(p) => cp2_sphere_invariants(p),
        FamilyParams::NonSpin(p) => nonspin_invariants(p),
        FamilyParams::Spin(p) => spin_invariants(p, bz),
    }
}
