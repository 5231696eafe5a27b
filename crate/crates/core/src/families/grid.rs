use std::fmt;

use super::{FamilyError, FamilyParams, FamilyTag};
use crate::exactq::BigInt;

/// A finite box of integer parameters, one inclusive range per parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamBox {
    tag: FamilyTag,
    ranges: Vec<(i64, i64)>,
}

impl ParamBox {
    pub fn new(tag: FamilyTag, ranges: Vec<(i64, i64)>) -> Result<Self, FamilyError> {
        if ranges.len() != tag.param_names().len() {
            return Err(FamilyError::BadBox(format!(
                "{} needs {} ranges",
                tag,
                tag.param_names().len()
            )));
        }
        Ok(ParamBox { tag, ranges })
    }

    /// Parses `"a=-5..5,b=-4..4,t=0"`. Every parameter of the family must
    /// appear exactly once; a bare value is a one-point range.
    pub fn parse(tag: FamilyTag, text: &str) -> Result<Self, FamilyError> {
        let names = tag.param_names();
        let mut ranges: Vec<Option<(i64, i64)>> = vec![None; names.len()];
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| FamilyError::BadBox(format!("expected key=range, got {part:?}")))?;
            let key = key.trim();
            let idx = names
                .iter()
                .position(|n| *n == key)
                .ok_or_else(|| FamilyError::BadBox(format!("unknown parameter {key:?} for {tag}")))?;
            if ranges[idx].is_some() {
                return Err(FamilyError::BadBox(format!("parameter {key} given twice")));
            }
            ranges[idx] = Some(parse_range(val.trim())?);
        }
        let ranges = ranges
            .into_iter()
            .zip(names)
            .map(|(r, n)| r.ok_or(FamilyError::MissingParam(n)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ParamBox { tag, ranges })
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    /// Number of lattice points, saturating.
    pub fn len(&self) -> u128 {
        self.ranges
            .iter()
            .map(|&(lo, hi)| if hi < lo { 0 } else { (hi as i128 - lo as i128 + 1) as u128 })
            .fold(1u128, |acc, n| acc.saturating_mul(n))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All points in lexicographic order of the parameter tuple.
    pub fn points(&self) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        if self.is_empty() {
            return out;
        }
        let mut cur: Vec<i64> = self.ranges.iter().map(|r| r.0).collect();
        loop {
            let vals: Vec<BigInt> = cur.iter().map(|&v| BigInt::from(v)).collect();
            out.push(FamilyParams::from_values(self.tag, &vals).expect("box has every parameter"));
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.ranges[i].1 {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.ranges[i].0;
            }
        }
    }
}

fn parse_range(text: &str) -> Result<(i64, i64), FamilyError> {
    let num = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| FamilyError::BadBox(format!("not an integer: {s:?}")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?, num(hi)?)),
        None => {
            let v = num(text)?;
            Ok((v, v))
        }
    }
}

impl fmt::Display for ParamBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .tag
            .param_names()
            .iter()
            .zip(&self.ranges)
            .map(|(n, (lo, hi))| format!("{n}={lo}..{hi}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_enumerate() {
        let b = ParamBox::parse(FamilyTag::Milnor, "n=1, m=0..2").unwrap();
        assert_eq!(b.ranges(), &[(0, 2), (1, 1)]);
        assert_eq!(b.len(), 3);
        let pts: Vec<String> = b.points().iter().map(|p| p.to_string()).collect();
        assert_eq!(pts, ["milnor(0,1)", "milnor(1,1)", "milnor(2,1)"]);
        assert_eq!(b.to_string(), "m=0..2,n=1..1");

        let b = ParamBox::parse(FamilyTag::Cp2, "a=0..1,b=-1..0").unwrap();
        let pts: Vec<String> = b.points().iter().map(|p| p.to_string()).collect();
        assert_eq!(pts, ["cp2(0,-1)", "cp2(0,0)", "cp2(1,-1)", "cp2(1,0)"]);
    }

    #[test]
    fn empty_and_bad_boxes() {
        let b = ParamBox::parse(FamilyTag::Cp2, "a=1..0,b=0").unwrap();
        assert!(b.is_empty());
        assert!(b.points().is_empty());
        assert!(matches!(ParamBox::parse(FamilyTag::Cp2, "a=0,b=0,z=1"), Err(FamilyError::BadBox(_))));
        assert!(matches!(ParamBox::parse(FamilyTag::Cp2, "a=0,a=1,b=0"), Err(FamilyError::BadBox(_))));
        assert_eq!(ParamBox::parse(FamilyTag::Spin, "a=0,b=0"), Err(FamilyError::MissingParam("t")));
        assert!(ParamBox::parse(FamilyTag::Cp2, "a=x..1,b=0").is_err());
    }
}
