//! `flatpants`: validate, convert, draw and measure flat pairs of pants
//! with one cone point.
//!
//! Exit codes: 0 success, 1 domain or constraint failure, 2 usage or parse
//! failure.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flatpants::flat_metric::DEFAULT_PAIRS;
use flatpants::pants_params::DEFAULT_REL_EPS;

const VALUE_ORDER: &str = "Values are ordered (l1,l2,l3,r1,r2,r3) in mode \"lr\" and \
(l1,l2,l3,a1,a2,a3) in mode \"la\". Documents look like \
{\"schema_version\":\"1\",\"mode\":\"lr\",\"values\":[1,1,1,1,1,1]}.";

#[derive(Debug, Parser)]
#[command(name = "flatpants", version, about, after_help = VALUE_ORDER)]
pub struct Cli {
    /// Relative tolerance for wall and degeneracy tests.
    #[arg(long, global = true, default_value_t = DEFAULT_REL_EPS, value_parser = non_negative)]
    pub eps: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a parameter document against its admissibility constraints.
    Validate(Input),
    /// Convert between the radius (lr) and distance (la) parameters.
    Convert(Input),
    /// Build the planar development; write JSON and/or SVG.
    Build {
        #[command(flatten)]
        input: Input,
        /// Write an SVG drawing of the development here.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the JSON development dump here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Measure distances on a sampled graph and compare with the parameters.
    Measure {
        #[command(flatten)]
        input: Input,
        /// Sample spacing; defaults to the smallest length or positive radius over 20.
        #[arg(long, value_parser = positive)]
        h: Option<f64>,
        /// Seed for sampled point pairs when comparing structures.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest accepted relative error.
        #[arg(long, default_value_t = 0.05, value_parser = non_negative)]
        tol: f64,
        /// Also estimate the sup-distance between the metrics of the input
        /// and of these lr values (comma-separated).
        #[arg(long, value_parser = six_values)]
        compare: Option<[f64; 6]>,
        /// Number of sampled point pairs for --compare.
        #[arg(long, default_value_t = DEFAULT_PAIRS as u64, value_parser = clap::value_parser!(u64).range(1..))]
        pairs: u64,
    },
    /// Queries on the set of admissible (l1,l2,l3,a1,a2,a3).
    #[command(subcommand)]
    Teich(TeichCommand),
    /// Glue pants into a closed surface and audit Gauss-Bonnet.
    Glue {
        /// Gluing document path, or "-" for stdin.
        #[arg(default_value = "-")]
        path: String,
    },
    /// Counting test for cutting a closed flat surface into pants.
    Feasible {
        #[arg(long)]
        genus: u32,
        /// Number of cone points.
        #[arg(long)]
        singularities: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum TeichCommand {
    /// Interior, boundary or outside.
    Membership {
        #[arg(value_parser = six_values)]
        point: [f64; 6],
    },
    /// Walls the point lies on.
    Stratum {
        #[arg(value_parser = six_values)]
        point: [f64; 6],
    },
    /// Whether n evenly spaced points of the segment from x to y are members.
    Segment {
        #[arg(value_parser = six_values)]
        x: [f64; 6],
        #[arg(value_parser = six_values)]
        y: [f64; 6],
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// The point (1 - t) x + t base of the straight-line contraction.
    Contract {
        #[arg(value_parser = six_values)]
        x: [f64; 6],
        #[arg(long)]
        t: f64,
        #[arg(long, value_parser = six_values, default_value = "1,1,1,2,2,2")]
        base: [f64; 6],
    },
}

/// A parameter document from a file, stdin, or inline values.
#[derive(Debug, Args)]
pub struct Input {
    /// Document path, or "-" for stdin.
    #[arg(conflicts_with_all = ["lr", "la"])]
    pub path: Option<String>,
    /// Inline radius parameters l1,l2,l3,r1,r2,r3.
    #[arg(long, value_parser = six_values, conflicts_with = "la")]
    pub lr: Option<[f64; 6]>,
    /// Inline distance parameters l1,l2,l3,a1,a2,a3.
    #[arg(long, value_parser = six_values)]
    pub la: Option<[f64; 6]>,
}

fn parse_number(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s} is not finite"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v = parse_number(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be positive, got {v}"))
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    let v = parse_number(s)?;
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("must be non-negative, got {v}"))
    }
}

fn six_values(s: &str) -> Result<[f64; 6], String> {
    let v = s
        .split(',')
        .map(parse_number)
        .collect::<Result<Vec<_>, _>>()?;
    <[f64; 6]>::try_from(v.as_slice())
        .map_err(|_| format!("expected 6 comma-separated values, got {}", v.len()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::run(&cli);
    // A closed pipe is not worth a panic; the exit code still reports.
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout);
    }
    if let Some(msg) = &out.stderr {
        let _ = writeln!(std::io::stderr().lock(), "error: {msg}");
    }
    ExitCode::from(out.code)
}
