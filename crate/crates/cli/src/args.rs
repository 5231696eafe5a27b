use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ks_core::families::FamilyTag;

#[derive(Debug, Parser)]
#[command(
    name = "ksinv",
    version,
    about = "Kreck-Stolz invariants of S^3 bundles over S^4 and CP^2 and of circle bundles over S^2 bundles over CP^2",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// |H^4|, signature, p1^2, s and (spin family) s1, s2, s3 of one manifold
    Invariants {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Members of the diffeomorphic sequence through a base manifold
    Sequence {
        #[command(flatten)]
        params: ParamArgs,
        /// Sequence index
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        /// List members k = 0..COUNT-1 instead of a single index
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Checks that sequence member k is diffeomorphic to the base
    Certify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Diffeomorphic members with pairwise distinct s, each certified
    Witness {
        #[command(flatten)]
        params: ParamArgs,
        /// Number of distinct s values to find
        #[arg(long, default_value_t = 5)]
        components: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Decides whether two spin circle bundles are diffeomorphic
    Diffeo {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// The other manifold, as a=..,b=..,t=..
        #[arg(long = "with", value_name = "a=A,b=B,t=T")]
        other: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// All diffeomorphic pairs inside a parameter box
    Search {
        #[arg(long, value_parser = parse_family)]
        family: FamilyTag,
        /// Ranges such as m=0..56,n=1
        #[arg(long = "box", value_name = "RANGES", allow_hyphen_values = true)]
        bounds: String,
        /// Refuse boxes with more unordered point pairs than this
        #[arg(long)]
        max_pairs: Option<u128>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Known identifications and the homogeneity verdict
    Identify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compares the cohomology-ring engine with the closed forms on a grid
    Crosscheck {
        #[arg(long, value_parser = parse_family)]
        family: FamilyTag,
        /// Ranges such as a=-5..5,b=-4..4,t=-3..3 (default: the family's standard grid)
        #[arg(long, value_name = "RANGES", allow_hyphen_values = true)]
        grid: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
}

/// Family and integer parameters. Values are decimal strings of any length.
#[derive(Debug, Args)]
pub struct ParamArgs {
    /// milnor, cp2, nonspin or spin
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyTag,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Bezout pair M,N for the circle families
    #[arg(long, value_name = "M,N", allow_hyphen_values = true)]
    pub bezout: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: ks_core::families::FamilyError| e.to_string())
}
