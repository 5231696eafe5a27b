use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::RingError;
use crate::exactq::Rational;

/// Which presentation to build.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// ℤ[u]/(u²), |u| = 4.
    S4,
    /// ℤ[x]/(x³), |x| = 2.
    Cp2,
    /// ℤ[x,y]/(x³, y² + xy + t·x²): the non-spin S² bundle over ℂP².
    Nt(BigInt),
    /// ℤ[x,y]/(x³, y² + 2xy + (1−t)·x²): the spin S² bundle over ℂP².
    NtBar(BigInt),
}

/// Exponent vector over the ring's generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, by: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&by.0).map(|(a, b)| a - b).collect())
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// `lead ↦ Σ coeff·monomial`; an empty replacement is a truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lead: Monomial,
    pub replacement: Vec<(Monomial, Rational)>,
}

/// A truncated graded ring presented by generators and rewrite rules, with a
/// monomial basis in each degree and a designated top monomial pairing to +1
/// with the fundamental class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    kind: RingKind,
    gens: Vec<(&'static str, u32)>,
    rules: Vec<Rule>,
    top_degree: u32,
    top: Monomial,
    basis: BTreeMap<u32, Vec<Monomial>>,
}

/// Builds one of the supported rings from a selector name
/// (`S4`, `CP2`, `Nt`, `NtBar`, case-insensitive).
pub fn make_ring(selector: &str, t: Option<BigInt>) -> Result<Arc<Ring>, RingError> {
    let kind = match (selector.to_ascii_lowercase().as_str(), t) {
        ("s4", _) => RingKind::S4,
        ("cp2", _) => RingKind::Cp2,
        ("nt", Some(t)) => RingKind::Nt(t),
        ("ntbar", Some(t)) => RingKind::NtBar(t),
        ("nt" | "ntbar", None) => return Err(RingError::MissingParameter(selector.to_string())),
        _ => return Err(RingError::UnknownSpec(selector.to_string())),
    };
    Ok(Ring::new(kind))
}

impl Ring {
    pub fn new(kind: RingKind) -> Arc<Ring> {
        let m = |e: &[u32]| Monomial(e.to_vec());
        let (gens, rules, top_degree, top) = match &kind {
            RingKind::S4 => (
                vec![("u", 4)],
                vec![Rule { lead: m(&[2]), replacement: vec![] }],
                4,
                m(&[1]),
            ),
            RingKind::Cp2 => (
                vec![("x", 2)],
                vec![Rule { lead: m(&[3]), replacement: vec![] }],
                4,
                m(&[2]),
            ),
            RingKind::Nt(t) => (
                vec![("x", 2), ("y", 2)],
                vec![
                    // y² = −xy − t·x²
                    Rule {
                        lead: m(&[0, 2]),
                        replacement: vec![
                            (m(&[1, 1]), Rational::from(-1)),
                            (m(&[2, 0]), -Rational::from(t)),
                        ],
                    },
                    Rule { lead: m(&[3, 0]), replacement: vec![] },
                ],
                6,
                m(&[2, 1]),
            ),
            RingKind::NtBar(t) => (
                vec![("x", 2), ("y", 2)],
                vec![
                    // y² = −2xy − (1−t)·x²
                    Rule {
                        lead: m(&[0, 2]),
                        replacement: vec![
                            (m(&[1, 1]), Rational::from(-2)),
                            (m(&[2, 0]), Rational::from(t) - Rational::one()),
                        ],
                    },
                    Rule { lead: m(&[3, 0]), replacement: vec![] },
                ],
                6,
                m(&[2, 1]),
            ),
        };
        let mut ring = Ring {
            kind,
            gens,
            rules,
            top_degree,
            top,
            basis: BTreeMap::new(),
        };
        ring.basis = ring.enumerate_basis();
        Arc::new(ring)
    }

    fn enumerate_basis(&self) -> BTreeMap<u32, Vec<Monomial>> {
        let mut basis: BTreeMap<u32, Vec<Monomial>> =
            (0..=self.top_degree).step_by(2).map(|d| (d, Vec::new())).collect();
        let mut stack = vec![Monomial::one(self.gens.len())];
        while let Some(mono) = stack.pop() {
            let d = self.degree(&mono);
            if d > self.top_degree || self.rules.iter().any(|r| r.lead.divides(&mono)) {
                continue;
            }
            let slot = basis.entry(d).or_default();
            if slot.contains(&mono) {
                continue;
            }
            slot.push(mono.clone());
            for g in 0..self.gens.len() {
                let mut next = mono.clone();
                next.0[g] += 1;
                stack.push(next);
            }
        }
        for v in basis.values_mut() {
            v.sort_by(|a, b| b.cmp(a));
        }
        basis
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, u32)> {
        self.gens.iter().map(|(n, d)| (*n, *d))
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|(n, _)| *n == name)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn top_monomial(&self) -> &Monomial {
        &self.top
    }

    pub fn degree(&self, mono: &Monomial) -> u32 {
        mono.0.iter().zip(&self.gens).map(|(e, (_, d))| e * d).sum()
    }

    /// Basis monomials of degree `d` (empty outside `0..=top_degree`).
    pub fn basis(&self, d: u32) -> &[Monomial] {
        self.basis.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_circle_base(&self) -> bool {
        matches!(self.kind, RingKind::Nt(_) | RingKind::NtBar(_))
    }

    /// Adds `coeff · mono` to `out` in normal form.
    ///
    /// Rules are tried in order, so the y² rule fires before x-truncation;
    /// every rewrite lowers the y-exponent or kills the term.
    pub(crate) fn reduce_into(
        &self,
        mono: Monomial,
        coeff: Rational,
        out: &mut BTreeMap<Monomial, Rational>,
    ) {
        if coeff.is_zero() {
            return;
        }
        match self.rules.iter().find(|r| r.lead.divides(&mono)) {
            None => match out.entry(mono) {
                Entry::Occupied(mut slot) => {
                    *slot.get_mut() += &coeff;
                    if slot.get().is_zero() {
                        slot.remove();
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(coeff);
                }
            },
            Some(rule) => {
                let cofactor = mono.quotient(&rule.lead);
                for (rm, rc) in &rule.replacement {
                    self.reduce_into(cofactor.times(rm), &coeff * rc, out);
                }
            }
        }
    }

    pub fn format_monomial(&self, mono: &Monomial) -> String {
        let parts: Vec<String> = mono
            .0
            .iter()
            .zip(&self.gens)
            .filter(|(e, _)| **e > 0)
            .map(|(e, (n, _))| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub(crate) fn format_terms<'a>(
        &self,
        terms: impl Iterator<Item = (&'a Monomial, &'a Rational)>,
    ) -> String {
        let mut sorted: Vec<_> = terms.collect();
        sorted.sort_by(|(a, _), (b, _)| self.degree(b).cmp(&self.degree(a)).then(b.cmp(a)));
        if sorted.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mono, c)) in sorted.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let m = self.format_monomial(mono);
            if m == "1" {
                out.push_str(&mag.to_string());
            } else if mag == Rational::one() {
                out.push_str(&m);
            } else {
                out.push_str(&format!("{mag}*{m}"));
            }
        }
        out
    }

    pub fn name(&self) -> String {
        match &self.kind {
            RingKind::S4 => "S4".to_string(),
            RingKind::Cp2 => "CP2".to_string(),
            RingKind::Nt(t) => format!("Nt(t={t})"),
            RingKind::NtBar(t) => format!("NtBar(t={t})"),
        }
    }
}

/// Stable multi-line dump used by golden tests.
impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.name())?;
        let gens: Vec<String> = self.gens.iter().map(|(n, d)| format!("{n}:{d}")).collect();
        writeln!(f, "generators: {}", gens.join(", "))?;
        for rule in &self.rules {
            let rhs = self.format_terms(rule.replacement.iter().map(|(m, c)| (m, c)));
            writeln!(f, "relation: {} = {}", self.format_monomial(&rule.lead), rhs)?;
        }
        for (d, b) in &self.basis {
            let names: Vec<String> = b.iter().map(|m| self.format_monomial(m)).collect();
            writeln!(f, "basis[{d}]: {}", names.join(", "))?;
        }
        write!(f, "top: {}", self.format_monomial(&self.top))
    }
}
