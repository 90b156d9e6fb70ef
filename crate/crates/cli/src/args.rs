use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "invjac",
    version,
    about = "Exact checks of module structure on Jacobians of invariant polynomials"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Where the representation comes from. Exactly one is required.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct RepArgs {
    /// JSON representation file.
    #[arg(long, value_name = "FILE")]
    pub rep: Option<PathBuf>,
    /// Direct sum of sl2 irreducibles with the given highest weights.
    #[arg(long = "sl2-rep", value_name = "M1,M2,...", value_delimiter = ',')]
    pub sl2_rep: Option<Vec<u32>>,
    /// Standard representation of sl_k.
    #[arg(long, value_name = "K")]
    pub sln: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that f⊗e_i ↦ ∂f/∂x_i commutes with every generator on A_d ⊗ V.
    VerifyHom {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Basis of the invariant polynomials of degree d.
    Invariants {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Compare the highest weights of J(f) with those of A_1.
    Yau {
        #[command(flatten)]
        rep: RepArgs,
        /// Polynomial in x1..xn, or @FILE.
        #[arg(long)]
        poly: String,
    },
    /// Find an invariant g of the same degree with J(g) = J(f).
    Kempf {
        #[command(flatten)]
        rep: RepArgs,
        /// Polynomial in x1..xn, or @FILE.
        #[arg(long)]
        poly: String,
    },
    /// Split A_d or J(f) into irreducible summands.
    Decompose {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, required_unless_present = "subspace_from_jacobian")]
        degree: Option<u32>,
        /// Decompose J(f) instead of A_d. Polynomial or @FILE.
        #[arg(long, value_name = "POLY", conflicts_with = "degree")]
        subspace_from_jacobian: Option<String>,
    },
    /// Solve for the sl2 mirror map and check it on A_d ⊗ A_1.
    Mirror {
        #[command(flatten)]
        rep: RepArgs,
        /// Check degrees 0..=D.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
    },
    /// Randomized trials over direct sums of sl2 irreducibles.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        #[arg(long, default_value_t = 4)]
        max_d: u32,
        /// Use a deliberately wrong action on A ⊗ V; failures are expected.
        #[arg(long)]
        corrupt_action: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyHom { .. } => "verify-hom",
            Command::Invariants { .. } => "invariants",
            Command::Yau { .. } => "yau",
            Command::Kempf { .. } => "kempf",
            Command::Decompose { .. } => "decompose",
            Command::Mirror { .. } => "mirror",
            Command::Fuzz { .. } => "fuzz",
        }
    }
}
