use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkform::{DEFAULT_DET_BOUND, DEFAULT_GROUP_BOUND};

/// Witt-group and linking-form analysis of integral symmetric forms.
#[derive(Debug, Parser)]
#[command(name = "linkform", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the signature theorem for an integral form.
    Analyze {
        #[command(flatten)]
        input: GramInput,
        #[arg(long, default_value_t = DEFAULT_GROUP_BOUND)]
        bound_group: u64,
    },
    /// Diagonalize a form over the rationals.
    Diag {
        #[command(flatten)]
        input: GramInput,
        #[arg(long, value_enum, default_value_t = Pivot::First)]
        pivot: Pivot,
        /// Also print floating-point approximations of the diagonal.
        #[arg(long)]
        approx: bool,
    },
    /// Residues of the rational Witt class at every relevant prime.
    Boundary {
        #[command(flatten)]
        input: GramInput,
    },
    /// Discriminant group, linking form and a metabolizer.
    Disc {
        #[command(flatten)]
        input: GramInput,
        #[arg(long, default_value_t = DEFAULT_GROUP_BOUND)]
        bound_group: u64,
    },
    /// Gauss sum over the discriminant group, compared with √|det|·e^{2πiσ/8}.
    Gauss {
        #[command(flatten)]
        input: GramInput,
        #[arg(long, default_value_t = DEFAULT_DET_BOUND)]
        bound_det: u64,
        /// Also print the sum and the comparison error as floats.
        #[arg(long)]
        approx: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Signature, determinant and boundary test of a knot.
    Knot {
        /// Seifert matrix as JSON `{"seifert": [[...]]}` or CSV; `-` reads stdin.
        #[arg(long)]
        seifert: PathBuf,
    },
    /// Closed-form invariants of the pretzel knot P(p, q, r).
    Pretzel {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Solutions of pq + pr + qr = sign·m² as CSV.
    Dioph(DiophArgs),
}

#[derive(Debug, Args)]
pub struct GramInput {
    /// Gram matrix as JSON `{"gram": [[...]]}` or CSV; `-` reads stdin.
    #[arg(long)]
    pub gram: PathBuf,
}

#[derive(Debug, Args)]
pub struct DiophArgs {
    #[arg(long, allow_negative_numbers = true, value_parser = parse_sign)]
    pub sign: i64,
    /// Bound on |p| and |q|.
    #[arg(long)]
    pub pq: i64,
    /// Bound on |r|.
    #[arg(long)]
    pub r: i64,
    /// Bound on m.
    #[arg(long)]
    pub m: u64,
    /// Print a verdict instead of the records.
    #[arg(long)]
    pub verify: bool,
    /// Keep only records with p ≤ q.
    #[arg(long)]
    pub dedup: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pivot {
    First,
    Last,
}

fn parse_sign(s: &str) -> Result<i64, String> {
    match s {
        "-1" => Ok(-1),
        "1" | "+1" => Ok(1),
        _ => Err(format!("sign must be -1 or 1, got {s}")),
    }
}
