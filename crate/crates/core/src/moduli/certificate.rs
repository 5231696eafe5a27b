use num_integer::Integer;
use serde::Serialize;

use super::{ser_pairs, DiffeoSequenceSpec, ModuliError, SequenceMember};
use crate::exactq::{eq_mod_z, int, BigInt, Rational};
use crate::families::{invariants, spin_s2_s3, FamilyParams, FamilyTag};

/// One named check with the values that decide it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    #[serde(serialize_with = "ser_pairs")]
    pub witness: Vec<(String, String)>,
}

impl Check {
    fn new(name: &'static str, pass: bool, witness: Vec<(&str, String)>) -> Self {
        Check {
            name,
            pass,
            witness: witness.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Evidence that member k of a sequence is diffeomorphic to member 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffeoCertificate {
    pub family: FamilyTag,
    pub member: SequenceMember,
    pub checks: Vec<Check>,
    pub valid: bool,
}

fn congruences(spec: &DiffeoSequenceSpec, base: &SequenceMember, member: &SequenceMember) -> Check {
    let modulus = spec.abs_lambda();
    let mut pairs: Vec<(String, BigInt, BigInt)> = spec
        .family()
        .param_names()
        .iter()
        .zip(base.values.iter().zip(&member.values))
        .map(|(n, (x, y))| (n.to_string(), x.clone(), y.clone()))
        .collect();
    if let (Some(b0), Some(bk)) = (&base.bezout, &member.bezout) {
        pairs.push(("m".into(), b0.m.clone(), bk.m.clone()));
        pairs.push(("n".into(), b0.n.clone(), bk.n.clone()));
    }
    let pass = pairs.iter().all(|(_, x, y)| (y - x).is_multiple_of(&modulus));
    let mut witness = vec![("modulus".to_string(), modulus.to_string())];
    witness.extend(pairs.iter().map(|(n, x, y)| (format!("{n}_k - {n}"), (y - x).to_string())));
    Check { name: "congruent_mod_lambda", pass, witness }
}

/// Runs every applicable check on member k against the base.
///
/// Milnor and CP2 sequences are certified by the congruence conditions of
/// their classification alone (plus the invariance of n, resp. a − b).
/// Circle families are checked for preservation of the order parameter, the
/// Bézout identity, the congruences mod |λ| and constancy of the signature;
/// the spin family in addition for integrality of s_i(member) − s_i(base).
pub fn verify_certificate(spec: &DiffeoSequenceSpec, k: &BigInt) -> Result<DiffeoCertificate, ModuliError> {
    let base = spec.member(&int(0));
    let member = spec.member(k);
    let v = &member.values;
    let v0 = &base.values;
    let mut checks = Vec::new();
    match spec.family() {
        FamilyTag::Milnor => {
            let same_n = v[1] == v0[1];
            checks.push(Check::new("n_constant", same_n, vec![("n", v0[1].to_string()), ("n_k", v[1].to_string())]));
            checks.push(congruences(spec, &base, &member));
        }
        FamilyTag::Cp2 => {
            let d0 = &v0[0] - &v0[1];
            let d = &v[0] - &v[1];
            checks.push(Check::new("difference_constant", d == d0, vec![("a-b", d0.to_string()), ("a_k-b_k", d.to_string())]));
            checks.push(congruences(spec, &base, &member));
        }
        FamilyTag::NonSpin | FamilyTag::Spin => {
            let rep0 = invariants(&base.family_params, base.bezout.as_ref())?;
            let rep = invariants(&member.family_params, member.bezout.as_ref())?;
            let bz = member.bezout.as_ref().expect("circle families carry a pair");
            let (order_name, r0, r, bez_value, bez_name) = if spec.family() == FamilyTag::Spin {
                let f = |v: &[BigInt]| &v[0] * &v[0] - int(8) * &v[2] * &v[1] * &v[1];
                let bez = &bz.m * &v[0] + int(2) * &bz.n * &v[1];
                ("a_k^2 - 8*t_k*b_k^2", f(v0), f(v), bez, "m_k*a_k + 2*n_k*b_k")
            } else {
                let f = |v: &[BigInt]| {
                    let s = &v[0] + &v[1];
                    &v[2] * &s * &s - &v[0] * &v[1]
                };
                let bez = &bz.m * &v[0] + &bz.n * &v[1];
                ("t_k*(a_k+b_k)^2 - a_k*b_k", f(v0), f(v), bez, "m_k*a_k + n_k*b_k")
            };
            checks.push(Check::new(
                "order_preserved",
                r == r0 && rep.h4_order == rep0.h4_order,
                vec![("r", r0.to_string()), (order_name, r.to_string()), ("h4_order", rep.h4_order.to_string())],
            ));
            checks.push(Check::new("bezout_identity", bez_value == int(1), vec![(bez_name, bez_value.to_string())]));
            if spec.family() == FamilyTag::NonSpin {
                let s0 = &v0[0] + &v0[1];
                let s = &v[0] + &v[1];
                checks.push(Check::new("sum_preserved", s == s0, vec![("a+b", s0.to_string()), ("a_k+b_k", s.to_string())]));
            }
            checks.push(congruences(spec, &base, &member));
            checks.push(Check::new(
                "signature_constant",
                rep.signature == rep0.signature,
                vec![("signature", rep0.signature.to_string()), ("signature_k", rep.signature.to_string())],
            ));
            if let (FamilyParams::Spin(p0), FamilyParams::Spin(p)) = (&base.family_params, &member.family_params) {
                let (a2, a3) = spin_s2_s3(p0, base.bezout.as_ref().expect("set"));
                let (b2, b3) = spin_s2_s3(p, bz);
                let diffs: [(&'static str, Rational, Rational); 3] =
                    [("s1", rep0.s.clone(), rep.s.clone()), ("s2", a2, b2), ("s3", a3, b3)];
                let pass = diffs.iter().all(|(_, x, y)| eq_mod_z(x, y));
                let witness = diffs
                    .iter()
                    .map(|(n, x, y)| (format!("{n}_k - {n}"), (y - x).to_string()))
                    .collect();
                checks.push(Check { name: "s_differences_integral", pass, witness });
            }
        }
    }
    let valid = checks.iter().all(|c| c.pass);
    Ok(DiffeoCertificate { family: spec.family(), member, checks, valid })
}
