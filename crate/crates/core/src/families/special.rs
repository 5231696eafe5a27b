use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::{FamilyError, FamilyParams};
use crate::exactq::{int, BigInt};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "candidates")]
pub enum HomogeneityVerdict {
    PossiblyHomogeneous(Vec<String>),
    NotHomogeneousCohomology,
}

/// Rules out homogeneous models by cohomology alone.
///
/// Milnor bundles can only be homogeneous for |n| ∈ {1, 2, 10}. Every
/// simply connected homogeneous 7-manifold with the cohomology of the
/// ℂP²-based families is some N_{k,l} or W_{k,l}, whose |H⁴| is l² or
/// k² + kl + l², never 2 mod 3.
pub fn homogeneity_check(p: &FamilyParams) -> Result<HomogeneityVerdict, FamilyError> {
    p.validate()?;
    let h4 = p.h4_order();
    let verdict = match p {
        FamilyParams::Milnor(_) => {
            let cand = if h4 == int(1) {
                Some("S^7")
            } else if h4 == int(2) {
                Some("T_1S^4")
            } else if h4 == int(10) {
                Some("SO(5)/SO(3)")
            } else {
                None
            };
            match cand {
                Some(c) => HomogeneityVerdict::PossiblyHomogeneous(vec![c.to_string()]),
                None => HomogeneityVerdict::NotHomogeneousCohomology,
            }
        }
        _ if h4 % 3u32 == int(2) => HomogeneityVerdict::NotHomogeneousCohomology,
        _ => HomogeneityVerdict::PossiblyHomogeneous(vec!["N_{k,l}".into(), "W_{k,l}".into()]),
    };
    Ok(verdict)
}

/// A known description of a family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identification {
    AloffWallach { k: BigInt, l: BigInt },
    Eschenburg { a: BigInt, b: BigInt, positive_curvature: bool },
    HomogeneousN { k: BigInt, l: BigInt },
    HomotopySphere,
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identification::AloffWallach { k, l } => write!(f, "Aloff-Wallach space W_{{{k},{l}}}"),
            Identification::Eschenburg { a, b, positive_curvature } => {
                write!(f, "Eschenburg space F_{{{a},{b}}}")?;
                if *positive_curvature {
                    f.write_str(", admits sec>0")?;
                }
                Ok(())
            }
            Identification::HomogeneousN { k, l } => write!(f, "homogeneous space N_{{{k},{l}}}"),
            Identification::HomotopySphere => f.write_str("homotopy 7-sphere"),
        }
    }
}

impl Serialize for Identification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Matches the parameters against the known identifications:
/// M¹_{a,b} = W_{a,b}, M⁻¹_{a,b} = F_{a,b}, M̄⁰_{a,b} = N_{b,a},
/// S_{−1,c(c−1)} = W_{c,1−c}, and M_{m,±1} is a homotopy sphere.
pub fn identify_special(p: &FamilyParams) -> Vec<Identification> {
    let one = int(1);
    let mut out = Vec::new();
    match p {
        FamilyParams::Milnor(p) => {
            if p.n.abs() == one {
                out.push(Identification::HomotopySphere);
            }
        }
        FamilyParams::Cp2(p) => {
            if p.a == -&one && !p.b.is_negative() {
                // b = c(c−1) iff 1 + 4b is a square, with c = (1 + √(1+4b))/2
                let disc = int(1) + int(4) * &p.b;
                let root = disc.sqrt();
                if &root * &root == disc {
                    let c = (int(1) + root) / 2;
                    out.push(Identification::AloffWallach { l: int(1) - &c, k: c });
                }
            }
        }
        FamilyParams::NonSpin(p) => {
            if p.t == one {
                out.push(Identification::AloffWallach { k: p.a.clone(), l: p.b.clone() });
            } else if p.t == -&one {
                let positive_curvature = (&p.a * &p.b).is_positive();
                out.push(Identification::Eschenburg { a: p.a.clone(), b: p.b.clone(), positive_curvature });
            }
        }
        FamilyParams::Spin(p) => {
            if p.t.is_zero() {
                out.push(Identification::HomogeneousN { k: p.b.clone(), l: p.a.clone() });
            }
        }
    }
    out
}
