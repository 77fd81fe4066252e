use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lensknot::{Int, Rational, RotationMode, Sign};

#[derive(Debug, Parser)]
#[command(name = "lensknot", version, about = "Exact invariants of torus knots in lens spaces L(p,q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Emit JSON (schema 1).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV where the command supports it.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write the report to PATH instead of stdout.
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl OutputArgs {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[default]
    ProofEnum,
    ClosedForm,
}

impl From<ModeArg> for RotationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::ProofEnum => RotationMode::ProofEnum,
            ModeArg::ClosedForm => RotationMode::ClosedForm,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum StructureArg {
    #[default]
    Plus,
    Minus,
}

impl From<StructureArg> for Sign {
    fn from(s: StructureArg) -> Self {
        match s {
            StructureArg::Plus => Sign::Plus,
            StructureArg::Minus => Sign::Minus,
        }
    }
}

/// Accepts ASCII or Unicode minus signs.
pub fn parse_int(s: &str) -> Result<Int, String> {
    s.replace('\u{2212}', "-").parse::<Int>().map_err(|_| format!("not an integer: {s}"))
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct KnotArgs {
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub p: Int,
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub q: Int,
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub a: Int,
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub b: Int,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub a2: Int,
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub b2: Int,
}

#[derive(Debug, Clone, Args)]
pub struct ContactArgs {
    #[arg(long, value_enum, default_value_t)]
    pub structure: StructureArg,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ModeArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, Seifert data, knot group, isotopy class and mapping class group.
    Info(KnotArgs),
    /// Maximal tb, peak rotation numbers and the realizable lattice.
    Legendrian {
        #[command(flatten)]
        knot: KnotArgs,
        #[command(flatten)]
        contact: ContactArgs,
        /// Stabilization depth of the listed lattice.
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// Whether (tb, rot) is realized by a Legendrian representative.
    Check {
        #[command(flatten)]
        knot: KnotArgs,
        #[command(flatten)]
        contact: ContactArgs,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        tb: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        rot: Rational,
    },
    /// Maximal self-linking numbers of transverse push-offs.
    Transverse {
        #[command(flatten)]
        knot: KnotArgs,
        #[command(flatten)]
        contact: ContactArgs,
    },
    /// Tight structures on the solid torus of slope -p/q and universally tight ones on L(p,q).
    TightCount {
        #[arg(value_parser = parse_int, allow_negative_numbers = true)]
        p: Int,
        #[arg(value_parser = parse_int, allow_negative_numbers = true)]
        q: Int,
    },
    /// Whether K(a,b) and K(a2,b2) are isotopic.
    Isotopic(PairArgs),
    /// Whether the complements of K(a,b) and K(a2,b2) have isomorphic groups.
    GroupIso(PairArgs),
    /// One CSV row per knot over a box of (p,q,a,b).
    Sweep {
        #[arg(long)]
        max_p: u32,
        #[arg(long, default_value_t = 5)]
        max_a: u32,
        #[arg(long, default_value_t = 5)]
        max_b: u32,
        #[command(flatten)]
        contact: ContactArgs,
    },
    /// SVG mountain-range diagram.
    Plot {
        #[command(flatten)]
        knot: KnotArgs,
        #[command(flatten)]
        contact: ContactArgs,
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
}
