use std::ffi::OsString;
use std::fs;

use clap::error::ErrorKind;
use clap::Parser;

use ks_core::crosscheck::{crosscheck, default_grid, CrosscheckError};
use ks_core::exactq::{BezoutPair, BigInt};
use ks_core::families::{
    homogeneity_check, identify_special, invariants, spin_invariants, FamilyError, FamilyParams, FamilyTag,
    ParamBox, SpinCircleBundle,
};
use ks_core::moduli::{
    ks_diffeomorphic, search_diffeo_pairs, theorem_witness, verify_certificate, DiffeoSequenceSpec, ModuliError,
    DEFAULT_MAX_PAIRS,
};

use crate::args::{Cli, Command, OutArgs, ParamArgs};
use crate::render::{
    render, DiffeoOutput, IdentifyOutput, Render, SearchOutput, SequenceOutput,
};

/// Exit status 1: bad input. Exit status 2: a result that must hold did not.
enum CliError {
    Usage(String),
    Internal(String),
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ModuliError> for CliError {
    fn from(e: ModuliError) -> Self {
        match e {
            ModuliError::DegreeViolation { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CrosscheckError> for CliError {
    fn from(e: CrosscheckError) -> Self {
        match e {
            CrosscheckError::Family(e) => e.into(),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    let msg = e.to_string();
                    let line = msg.lines().next().unwrap_or("invalid arguments");
                    eprintln!("ksinv: {}", line.trim_start_matches("error: "));
                    1
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("ksinv: {msg}");
            1
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("ksinv: internal consistency failure: {msg}");
            2
        }
    }
}

fn emit<R: Render>(value: &R, out: &OutArgs) -> Result<(), CliError> {
    let text = render(value, out.format).map_err(CliError::Internal)?;
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_int(name: &str, v: &str) -> Result<BigInt, CliError> {
    v.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("--{name}: not an integer: {v:?}")))
}

fn family_values(p: &ParamArgs) -> Result<Vec<BigInt>, CliError> {
    let given = [("m", &p.m), ("n", &p.n), ("a", &p.a), ("b", &p.b), ("t", &p.t)];
    let names = p.family.param_names();
    for (name, v) in &given {
        if v.is_some() && !names.contains(name) {
            return Err(CliError::Usage(format!("--{name} does not apply to family {}", p.family)));
        }
    }
    names
        .iter()
        .map(|name| {
            let v = given
                .iter()
                .find(|(n, _)| n == name)
                .and_then(|(_, v)| v.as_deref())
                .ok_or_else(|| CliError::Usage(format!("missing --{name} for family {}", p.family)))?;
            parse_int(name, v)
        })
        .collect()
}

fn bezout_arg(p: &ParamArgs) -> Result<Option<BezoutPair>, CliError> {
    let Some(text) = &p.bezout else { return Ok(None) };
    if !matches!(p.family, FamilyTag::NonSpin | FamilyTag::Spin) {
        return Err(CliError::Usage(format!("--bezout does not apply to family {}", p.family)));
    }
    let (m, n) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("--bezout: expected M,N, got {text:?}")))?;
    Ok(Some(BezoutPair { m: parse_int("bezout", m)?, n: parse_int("bezout", n)? }))
}

/// Parses `a=1,b=2,t=2` with exactly the keys a, b, t.
fn spin_assignment(text: &str) -> Result<SpinCircleBundle, CliError> {
    let mut vals: [Option<BigInt>; 3] = [None, None, None];
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--with: expected key=value, got {part:?}")))?;
        let idx = ["a", "b", "t"]
            .iter()
            .position(|n| *n == k.trim())
            .ok_or_else(|| CliError::Usage(format!("--with: unknown key {:?}", k.trim())))?;
        vals[idx] = Some(parse_int(k.trim(), v)?);
    }
    let [a, b, t] = vals;
    let missing = |n: &str| CliError::Usage(format!("--with: missing {n}"));
    Ok(SpinCircleBundle {
        a: a.ok_or_else(|| missing("a"))?,
        b: b.ok_or_else(|| missing("b"))?,
        t: t.ok_or_else(|| missing("t"))?,
    })
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Invariants { params, out } => {
            let values = family_values(&params)?;
            let bz = bezout_arg(&params)?;
            if bz.is_some() && params.family != FamilyTag::Spin {
                return Err(CliError::Usage("--bezout only affects the spin family's s2 and s3".into()));
            }
            let p = FamilyParams::from_values(params.family, &values)?;
            emit(&invariants(&p, bz.as_ref())?, &out)
        }
        Command::Sequence { params, k, count, out } => {
            let spec = DiffeoSequenceSpec::new(params.family, &family_values(&params)?, bezout_arg(&params)?)?;
            let ks: Vec<BigInt> = match count {
                Some(0) => return Err(CliError::Usage("--count must be positive".into())),
                Some(c) => (0..c as u64).map(BigInt::from).collect(),
                None => vec![parse_int("k", &k)?],
            };
            let members = ks.iter().map(|k| spec.member(k)).collect();
            emit(&SequenceOutput { family: spec.family(), lambda: spec.lambda().clone(), members }, &out)
        }
        Command::Certify { params, k, out } => {
            let spec = DiffeoSequenceSpec::new(params.family, &family_values(&params)?, bezout_arg(&params)?)?;
            let cert = verify_certificate(&spec, &parse_int("k", &k)?)?;
            emit(&cert, &out)?;
            if !cert.valid {
                return Err(CliError::Internal(format!("certificate for k = {k} failed")));
            }
            Ok(())
        }
        Command::Witness { params, components, out } => {
            if params.bezout.is_some() {
                return Err(CliError::Usage("witness uses the canonical Bezout pair; drop --bezout".into()));
            }
            if components == 0 {
                return Err(CliError::Usage("--components must be positive".into()));
            }
            let rep = theorem_witness(params.family, &family_values(&params)?, components)?;
            emit(&rep, &out)?;
            if !rep.all_certificates_valid {
                return Err(CliError::Internal("a sequence certificate failed".into()));
            }
            Ok(())
        }
        Command::Diffeo { a, b, t, other, out } => {
            let first = SpinCircleBundle { a: parse_int("a", &a)?, b: parse_int("b", &b)?, t: parse_int("t", &t)? };
            let second = spin_assignment(&other)?;
            let diffeomorphic = ks_diffeomorphic(&first, &second)?;
            let first = spin_invariants(&first, None)?;
            let second = spin_invariants(&second, None)?;
            emit(&DiffeoOutput { first, second, diffeomorphic }, &out)
        }
        Command::Search { family, bounds, max_pairs, out } => {
            let bx = ParamBox::parse(family, &bounds)?;
            let pairs = search_diffeo_pairs(&bx, max_pairs.unwrap_or(DEFAULT_MAX_PAIRS))?;
            emit(&SearchOutput { family, bounds: bx.to_string(), count: pairs.len(), pairs }, &out)
        }
        Command::Identify { params, out } => {
            let p = FamilyParams::from_values(params.family, &family_values(&params)?)?;
            let homogeneity = homogeneity_check(&p)?;
            let identifications = identify_special(&p);
            emit(&IdentifyOutput { family: p.tag(), params: p, identifications, homogeneity }, &out)
        }
        Command::Crosscheck { family, grid, out } => {
            let bx = match grid {
                Some(g) => ParamBox::parse(family, &g)?,
                None => default_grid(family),
            };
            let rep = crosscheck(&bx)?;
            emit(&rep, &out)?;
            if let Some(c) = &rep.counterexample {
                return Err(CliError::Internal(format!("engine and closed form disagree at {c}")));
            }
            Ok(())
        }
    }
}
