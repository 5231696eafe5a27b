use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use super::ModuliError;
use crate::exactq::{int, BigInt, ResidueModZ};
use crate::families::{spin_invariants, FamilyParams, FamilyTag, ParamBox, SpinCircleBundle};

/// Default bound on the number of unordered pairs a search box may hold.
pub const DEFAULT_MAX_PAIRS: u128 = 50_000_000;

fn spin_key(p: &SpinCircleBundle) -> Result<(BigInt, ResidueModZ, ResidueModZ, ResidueModZ), ModuliError> {
    let rep = spin_invariants(p, None)?;
    Ok((
        rep.h4_order,
        rep.s1.expect("spin reports carry s1"),
        rep.s2.expect("spin reports carry s2"),
        rep.s3.expect("spin reports carry s3"),
    ))
}

/// The classification test for spin circle bundles: equal |H⁴| and equal
/// s₁, s₂, s₃ in ℚ/ℤ.
pub fn ks_diffeomorphic(p: &SpinCircleBundle, q: &SpinCircleBundle) -> Result<bool, ModuliError> {
    Ok(spin_key(p)? == spin_key(q)?)
}

/// Grouping key such that two valid points are paired iff their keys are
/// equal. Milnor: n and m mod 56|n|. CP2: a − b and a mod 168|a − b|.
fn pair_key(p: &FamilyParams) -> Result<Vec<String>, ModuliError> {
    Ok(match p {
        FamilyParams::Milnor(p) => {
            let modulus = int(56) * p.h4_order();
            vec![p.n.to_string(), p.m.mod_floor(&modulus).to_string()]
        }
        FamilyParams::Cp2(p) => {
            let modulus = int(168) * p.h4_order();
            vec![(&p.a - &p.b).to_string(), p.a.mod_floor(&modulus).to_string()]
        }
        FamilyParams::Spin(p) => {
            let (h, s1, s2, s3) = spin_key(p)?;
            vec![h.to_string(), s1.to_string(), s2.to_string(), s3.to_string()]
        }
        FamilyParams::NonSpin(_) => return Err(ModuliError::Unsupported(FamilyTag::NonSpin)),
    })
}

/// All unordered pairs of valid points in `bx` that the family's criterion
/// declares diffeomorphic, smaller tuple first, sorted lexicographically.
///
/// Spin uses [`ks_diffeomorphic`]; Milnor and CP2 use the sufficient
/// congruence conditions of their sequences. Points are evaluated in
/// parallel; the output does not depend on scheduling.
pub fn search_diffeo_pairs(bx: &ParamBox, max_pairs: u128) -> Result<Vec<(FamilyParams, FamilyParams)>, ModuliError> {
    if bx.tag() == FamilyTag::NonSpin {
        return Err(ModuliError::Unsupported(FamilyTag::NonSpin));
    }
    let n = bx.len();
    let bound = n.saturating_mul(n.saturating_sub(1)) / 2;
    if bound > max_pairs {
        return Err(ModuliError::BoxTooLarge { pairs: bound, limit: max_pairs });
    }
    let points: Vec<FamilyParams> = bx.points().into_iter().filter(|p| p.validate().is_ok()).collect();
    let keys: Vec<Vec<String>> = points.par_iter().map(pair_key).collect::<Result<_, _>>()?;
    let mut groups: BTreeMap<Vec<String>, Vec<&FamilyParams>> = BTreeMap::new();
    for (p, key) in points.iter().zip(keys) {
        groups.entry(key).or_default().push(p);
    }
    let mut pairs = Vec::new();
    for members in groups.values() {
        for (i, p) in members.iter().enumerate() {
            for q in &members[i + 1..] {
                let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
                pairs.push(((*lo).clone(), (*hi).clone()));
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}
