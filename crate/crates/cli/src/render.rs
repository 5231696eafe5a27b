use serde::Serialize;

use ks_core::crosscheck::CrosscheckReport;
use ks_core::exactq::BigInt;
use ks_core::families::{FamilyParams, FamilyTag, HomogeneityVerdict, Identification, InvariantReport};
use ks_core::moduli::{DiffeoCertificate, ModuliWitnessReport, SequenceMember};

use crate::args::Format;

/// A command result in the three output formats.
pub trait Render: Serialize {
    fn header(&self) -> Vec<String>;
    fn rows(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;
}

pub fn render<R: Render>(value: &R, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(value.header()).map_err(|e| e.to_string())?;
            for row in value.rows() {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Text => Ok(value.text()),
    }
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn named(p: &FamilyParams) -> String {
    let vals = p.values();
    p.tag()
        .param_names()
        .iter()
        .zip(vals)
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn pairs_text(pairs: &[(String, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

impl Render for InvariantReport {
    fn header(&self) -> Vec<String> {
        strings(&[
            "family", "params", "h4_order", "signature", "p1_sq", "s", "s1", "s2", "s3", "bezout_m", "bezout_n",
        ])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.family.to_string(),
            named(&self.params),
            self.h4_order.to_string(),
            self.signature.to_string(),
            self.p1_sq.to_string(),
            self.s.to_string(),
            opt(&self.s1),
            opt(&self.s2),
            opt(&self.s3),
            opt(&self.bezout_used.as_ref().map(|b| b.m.clone())),
            opt(&self.bezout_used.as_ref().map(|b| b.n.clone())),
        ]]
    }

    fn text(&self) -> String {
        let mut out = format!(
            "family: {}\nparams: {}\nh4_order: {}\nsignature: {}\np1_sq: {}\ns: {}\n",
            self.family,
            named(&self.params),
            self.h4_order,
            self.signature,
            self.p1_sq,
            self.s
        );
        for (name, v) in [("s1", &self.s1), ("s2", &self.s2), ("s3", &self.s3)] {
            if let Some(v) = v {
                out += &format!("{name}: {v} mod Z\n");
            }
        }
        if let Some(bz) = &self.bezout_used {
            out += &format!("bezout: m={} n={}\n", bz.m, bz.n);
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SequenceOutput {
    pub family: FamilyTag,
    #[serde(serialize_with = "ser_big")]
    pub lambda: BigInt,
    pub members: Vec<SequenceMember>,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Render for SequenceOutput {
    fn header(&self) -> Vec<String> {
        let mut h = strings(&["k"]);
        h.extend(self.family.param_names().iter().map(|s| s.to_string()));
        h.extend(strings(&["bezout_m", "bezout_n", "manifold"]));
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| {
                let mut row = vec![m.k.to_string()];
                row.extend(m.params.iter().map(|(_, v)| v.clone()));
                row.push(opt(&m.bezout.as_ref().map(|b| b.m.clone())));
                row.push(opt(&m.bezout.as_ref().map(|b| b.n.clone())));
                row.push(m.manifold.clone());
                row
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut out = format!("family: {}\nlambda: {}\n", self.family, self.lambda);
        for m in &self.members {
            out += &format!("k={}: {}", m.k, pairs_text(&m.params));
            if let Some(bz) = &m.bezout {
                out += &format!(" m={} n={}", bz.m, bz.n);
            }
            out += &format!(" -> {}\n", m.manifold);
        }
        out
    }
}

impl Render for DiffeoCertificate {
    fn header(&self) -> Vec<String> {
        strings(&["check", "pass", "witness"])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.checks
            .iter()
            .map(|c| vec![c.name.to_string(), c.pass.to_string(), pairs_text(&c.witness)])
            .collect()
    }

    fn text(&self) -> String {
        let mut out = format!(
            "family: {}\nk: {}\nmember: {}\n",
            self.family, self.member.k, self.member.manifold
        );
        for c in &self.checks {
            out += &format!(
                "[{}] {}: {}\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                pairs_text(&c.witness)
            );
        }
        out += &format!("valid: {}\n", self.valid);
        out
    }
}

impl Render for ModuliWitnessReport {
    fn header(&self) -> Vec<String> {
        strings(&["k", "manifold", "s", "certificate_valid"])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .zip(&self.certificates)
            .map(|(m, c)| vec![m.k.clone(), m.manifold.clone(), m.s.to_string(), c.valid.to_string()])
            .collect()
    }

    fn text(&self) -> String {
        let mut out = format!(
            "family: {}\nbase: {} ({})\n",
            self.family,
            self.base,
            pairs_text(&self.base_params)
        );
        if let Some(bz) = &self.bezout {
            out += &format!("bezout: m={} n={}\n", bz.m, bz.n);
        }
        out += &format!("lambda: {}\ns(k) = {}\noutcome: {}\n", self.lambda, self.s_polynomial, self.outcome);
        for (m, c) in self.members.iter().zip(&self.certificates) {
            let mark = if c.valid { "certified" } else { "NOT certified" };
            out += &format!("k={}: s={} [{}] {}\n", m.k, m.s, mark, m.manifold);
            if !c.failed.is_empty() {
                out += &format!("  failed: {}\n", c.failed.join(", "));
            }
        }
        out += &format!(
            "distinct: {}\nall certificates valid: {}\nproved: {}\n",
            self.distinct, self.all_certificates_valid, self.proved
        );
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DiffeoOutput {
    pub first: InvariantReport,
    pub second: InvariantReport,
    pub diffeomorphic: bool,
}

impl Render for DiffeoOutput {
    fn header(&self) -> Vec<String> {
        strings(&["first", "second", "h4_first", "h4_second", "diffeomorphic"])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.first.params.to_string(),
            self.second.params.to_string(),
            self.first.h4_order.to_string(),
            self.second.h4_order.to_string(),
            self.diffeomorphic.to_string(),
        ]]
    }

    fn text(&self) -> String {
        let line = |r: &InvariantReport| {
            format!(
                "{}: h4={} s1={} s2={} s3={}\n",
                r.params,
                r.h4_order,
                opt(&r.s1),
                opt(&r.s2),
                opt(&r.s3)
            )
        };
        format!("{}{}diffeomorphic: {}\n", line(&self.first), line(&self.second), self.diffeomorphic)
    }
}

#[derive(Debug, Serialize)]
pub struct SearchOutput {
    pub family: FamilyTag,
    #[serde(rename = "box")]
    pub bounds: String,
    pub count: usize,
    pub pairs: Vec<(FamilyParams, FamilyParams)>,
}

impl Render for SearchOutput {
    fn header(&self) -> Vec<String> {
        strings(&["first", "second"])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.pairs.iter().map(|(p, q)| vec![p.to_string(), q.to_string()]).collect()
    }

    fn text(&self) -> String {
        let mut out = format!("family: {}\nbox: {}\npairs: {}\n", self.family, self.bounds, self.count);
        for (p, q) in &self.pairs {
            out += &format!("{p} ~ {q}\n");
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct IdentifyOutput {
    pub family: FamilyTag,
    pub params: FamilyParams,
    pub identifications: Vec<Identification>,
    pub homogeneity: HomogeneityVerdict,
}

fn verdict_text(v: &HomogeneityVerdict) -> String {
    match v {
        HomogeneityVerdict::PossiblyHomogeneous(c) => format!("possibly homogeneous ({})", c.join(", ")),
        HomogeneityVerdict::NotHomogeneousCohomology => "not homogeneous (cohomology)".to_string(),
    }
}

impl Render for IdentifyOutput {
    fn header(&self) -> Vec<String> {
        strings(&["manifold", "identification", "homogeneity"])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let h = verdict_text(&self.homogeneity);
        if self.identifications.is_empty() {
            return vec![vec![self.params.to_string(), String::new(), h]];
        }
        self.identifications
            .iter()
            .map(|i| vec![self.params.to_string(), i.to_string(), h.clone()])
            .collect()
    }

    fn text(&self) -> String {
        let mut out = format!("manifold: {}\n", self.params);
        if self.identifications.is_empty() {
            out += "identifications: none\n";
        }
        for i in &self.identifications {
            out += &format!("identification: {i}\n");
        }
        out += &format!("homogeneity: {}\n", verdict_text(&self.homogeneity));
        out
    }
}

impl Render for CrosscheckReport {
    fn header(&self) -> Vec<String> {
        strings(&["family", "grid", "epsilon", "checked", "skipped", "agree", "counterexample"])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.family.to_string(),
            self.grid.clone(),
            self.epsilon.to_string(),
            self.checked.to_string(),
            self.skipped.to_string(),
            self.agree.to_string(),
            opt(&self.counterexample),
        ]]
    }

    fn text(&self) -> String {
        let mut out = format!(
            "family: {}\ngrid: {}\norientation: {}\nchecked: {} (skipped {} invalid)\n",
            self.family,
            self.grid,
            if self.epsilon > 0 { "+1" } else { "-1" },
            self.checked,
            self.skipped
        );
        match &self.counterexample {
            None => out += "agree: true\n",
            Some(c) => out += &format!("agree: false\ncounterexample: {c}\n"),
        }
        out
    }
}
