use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latscale::LatticeKind;

#[derive(Debug, Parser)]
#[command(
    name = "latscale",
    version,
    about = "Exact directional scaling symmetries of square and triangular lattices"
)]
pub struct Cli {
    /// Report format for verify, family, search and check-float.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Lattice {
    Square,
    Triangular,
}

impl From<Lattice> for LatticeKind {
    fn from(l: Lattice) -> Self {
        match l {
            Lattice::Square => LatticeKind::Square,
            Lattice::Triangular => LatticeKind::Triangular,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify one transform: induced map, grid sweep and image structure.
    Verify(VerifyArgs),
    /// Tabulate the square-lattice family for k = 1..=k_max.
    Family(FamilyArgs),
    /// Search scheme parameters k for lattice-preserving transforms.
    Search(SearchArgs),
    /// Dump a lattice patch and its images as CSV.
    Points(PatchArgs),
    /// Render a lattice patch, its images and the scaling direction as SVG.
    Render(PatchArgs),
    /// Compare the floating-point transform against the exact one.
    CheckFloat(CheckFloatArgs),
}

/// Selects the square transform with parameter `k` or the triangular one.
#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(value_enum)]
    pub lattice: Lattice,

    /// Square-lattice family parameter; required for square, rejected for
    /// triangular.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub transform: TransformArgs,

    /// Half-width of the coincidence grid.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub radius: u64,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("k-form").required(true).multiple(true).args(["k_int", "k_sqrt3"])))]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub lattice: Lattice,

    /// Inclusive range `A..B` of integer k. Combined with --k-sqrt3 it
    /// ranges the rational part of k = a + b*sqrt(3).
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub k_int: Option<(i64, i64)>,

    /// Inclusive range `A..B` of b in k = b*sqrt(3).
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub k_sqrt3: Option<(i64, i64)>,

    /// Half-width of the coincidence grid run on each candidate.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub radius: u64,
}

#[derive(Debug, Args)]
pub struct PatchArgs {
    #[command(flatten)]
    pub transform: TransformArgs,

    /// Points with |m|, |n| <= radius are included.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=10_000))]
    pub radius: u64,
}

#[derive(Debug, Args)]
pub struct CheckFloatArgs {
    #[command(flatten)]
    pub transform: TransformArgs,

    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Largest acceptable deviation.
    #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
    pub tol: f64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// `A..B` (inclusive) or a single integer `A`.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("`{t}` is not an integer: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .parse()
        .map_err(|e| format!("`{s}` is not a number: {e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive and finite, got {s}"))
    }
}
