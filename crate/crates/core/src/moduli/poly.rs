use std::collections::HashSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{DiffeoSequenceSpec, ModuliError};
use crate::exactq::{int, BigInt, Rational};
use crate::families::invariants;

/// A polynomial in k with rational coefficients, lowest degree first and
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial(Vec<Rational>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * k + c)
    }

    /// The unique polynomial of degree < n through n points with distinct
    /// abscissae.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut acc = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial ∏_{j≠i} (k − x_j)/(x_i − x_j), built up term by term
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (d, c) in basis.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] += &(-(c * xj));
                }
                basis = next;
                denom = denom * (xi - xj);
            }
            let scale = yi.checked_div(&denom).expect("distinct abscissae");
            for (d, c) in basis.iter().enumerate() {
                acc[d] += &(c * &scale);
            }
        }
        Polynomial::new(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag == Rational::one();
            match (d, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("k")?,
                (1, false) => write!(f, "{mag}*k")?,
                (_, true) => write!(f, "k^{d}")?,
                (_, false) => write!(f, "{mag}*k^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Polynomial", 3)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("coefficients", &self.0)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

pub(crate) fn s_at(spec: &DiffeoSequenceSpec, k: &BigInt) -> Result<Rational, ModuliError> {
    let m = spec.member(k);
    Ok(invariants(&m.family_params, m.bezout.as_ref())?.s)
}

/// s along the sequence as a polynomial in k, interpolated at k = 0..4 and
/// confirmed at k = 5 and 6.
pub fn s_polynomial(spec: &DiffeoSequenceSpec) -> Result<Polynomial, ModuliError> {
    let points = (0..5)
        .map(|k| Ok((Rational::from(k), s_at(spec, &int(k))?)))
        .collect::<Result<Vec<_>, ModuliError>>()?;
    let poly = Polynomial::interpolate(&points);
    for k in [5, 6] {
        let actual = s_at(spec, &int(k))?;
        let expected = poly.eval(&Rational::from(k));
        if actual != expected {
            return Err(ModuliError::DegreeViolation {
                k,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DistinctOutcome {
    /// `(k, s)` pairs with pairwise distinct s.
    Distinct { members: Vec<(String, Rational)> },
    /// s is constant along the sequence, so it separates nothing.
    ConstantPolynomial { value: Rational },
}

/// The first `count` indices k = 0, 1, … (skipping repeats) whose s values
/// are pairwise distinct.
pub fn distinct_s_prefix(spec: &DiffeoSequenceSpec, count: usize) -> Result<DistinctOutcome, ModuliError> {
    if count == 0 {
        return Err(ModuliError::ZeroCount);
    }
    let poly = s_polynomial(spec)?;
    if poly.is_constant() {
        return Ok(DistinctOutcome::ConstantPolynomial { value: poly.eval(&Rational::zero()) });
    }
    let mut seen = HashSet::new();
    let mut members = Vec::with_capacity(count);
    let mut k = 0i64;
    while members.len() < count {
        let s = s_at(spec, &int(k))?;
        if seen.insert(s.clone()) {
            members.push((k.to_string(), s));
        }
        k += 1;
    }
    Ok(DistinctOutcome::Distinct { members })
}
