use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::linalg::{self, Solve};
use super::ring::{Monomial, Ring};
use super::RingError;
use crate::exactq::Rational;

/// A ring element in normal form: only basis monomials, no zero coefficients.
#[derive(Clone)]
pub struct CohClass {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for CohClass {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for CohClass {}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl CohClass {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        CohClass { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.generators().count()), c)
    }

    /// `c · mono`, reduced to normal form.
    pub fn monomial(ring: &Arc<Ring>, mono: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        ring.reduce_into(mono, c, &mut terms);
        CohClass { ring: ring.clone(), terms }
    }

    /// `c · g` for the generator named `name`.
    pub fn generator(ring: &Arc<Ring>, name: &str, c: Rational) -> Result<Self, RingError> {
        let idx = ring
            .generator_index(name)
            .ok_or_else(|| RingError::UnknownGenerator(name.to_string()))?;
        let mut exps = vec![0; ring.generators().count()];
        exps[idx] = 1;
        Ok(Self::monomial(ring, Monomial(exps), c))
    }

    /// Σ cᵢ·gᵢ over named generators.
    pub fn linear(ring: &Arc<Ring>, parts: &[(Rational, &str)]) -> Result<Self, RingError> {
        parts.iter().try_fold(Self::zero(ring), |acc, (c, g)| {
            acc.add(&Self::generator(ring, g, c.clone())?)
        })
    }

    /// `c` times the top basis monomial.
    pub fn top(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, ring.top_monomial().clone(), c)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &CohClass) -> Result<(), RingError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch(self.ring.name(), other.ring.name()))
        }
    }

    pub fn add(&self, other: &CohClass) -> Result<CohClass, RingError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            self.ring.reduce_into(m.clone(), c.clone(), &mut terms);
        }
        Ok(CohClass { ring: self.ring.clone(), terms })
    }

    pub fn sub(&self, other: &CohClass) -> Result<CohClass, RingError> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> CohClass {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect()
        };
        CohClass { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &CohClass) -> Result<CohClass, RingError> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                self.ring.reduce_into(m1.times(m2), c1 * c2, &mut terms);
            }
        }
        Ok(CohClass { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, exp: u32) -> CohClass {
        let mut acc = CohClass::scalar(&self.ring, Rational::one());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// The degree-`d` component.
    pub fn component(&self, d: u32) -> CohClass {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.degree(m) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        CohClass { ring: self.ring.clone(), terms }
    }

    /// `Some(d)` if every term has degree `d`; `None` for mixed classes.
    /// The zero class is homogeneous of every degree and reports `None` too.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| self.ring.degree(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Evaluation on the fundamental class: the coefficient of the top
    /// basis monomial. Lower-degree components pair to zero.
    pub fn pair_top(&self) -> Rational {
        self.coeff(self.ring.top_monomial())
    }

    /// Coordinates in the degree-`d` basis.
    pub fn coordinates(&self, d: u32) -> Vec<Rational> {
        self.ring.basis(d).iter().map(|m| self.coeff(m)).collect()
    }

    pub fn from_coordinates(ring: &Arc<Ring>, d: u32, coords: &[Rational]) -> CohClass {
        let terms = ring
            .basis(d)
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        CohClass { ring: ring.clone(), terms }
    }
}

/// Solves `v · e = u` over ℚ for `v` in degree `deg u − deg e`.
pub fn divide(u: &CohClass, e: &CohClass) -> Result<CohClass, RingError> {
    u.check(e)?;
    let ring = u.ring();
    let de = e.homogeneous_degree().ok_or(RingError::NotHomogeneous("divisor"))?;
    let du = match u.homogeneous_degree() {
        Some(d) => d,
        None if u.is_zero() => return Ok(CohClass::zero(ring)),
        None => return Err(RingError::NotHomogeneous("dividend")),
    };
    if du < de {
        return Err(RingError::NoSolution);
    }
    let src = ring.basis(du - de);
    let tgt = ring.basis(du);
    if src.is_empty() {
        return Err(RingError::NoSolution);
    }
    let columns: Vec<Vec<Rational>> = src
        .iter()
        .map(|m| {
            CohClass::monomial(ring, m.clone(), Rational::one())
                .mul(e)
                .expect("same ring")
                .coordinates(du)
        })
        .collect();
    let mat: linalg::Matrix = (0..tgt.len())
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    match linalg::solve(&mat, &u.coordinates(du), src.len()) {
        Solve::Unique(x) => Ok(CohClass::from_coordinates(ring, du - de, &x)),
        Solve::NoSolution => Err(RingError::NoSolution),
        Solve::NonUnique => Err(RingError::NonUnique),
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_terms(self.terms.iter()))
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring.name())
    }
}
