use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invline_core::character::SIZE_CAP_ENV;
use invline_core::{Functor, GroupSpec, Partition, SizeCap};

#[derive(Debug, Parser)]
#[command(
    name = "invline",
    version,
    about = "Invariant lines in functors of GL_n representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Maximum number of weight entries any intermediate character may hold.
    #[arg(long, env = SIZE_CAP_ENV, default_value_t = SizeCap::DEFAULT.0, global = true)]
    pub size_cap: usize,

    /// Write the output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
}

impl GlobalOpts {
    pub fn cap(&self) -> SizeCap {
        SizeCap(self.size_cap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Littlewood-Richardson decomposition of S_lambda (x) S_mu over SL_m.
    Lr {
        /// First shape, e.g. `2,1` or `(2,1)`.
        lambda: Partition,
        /// Second shape.
        mu: Partition,
        #[arg(long)]
        rank: usize,
    },
    /// Sym^j(Sym^k C^2) as a sum of SL2 irreducibles.
    Plethysm { j: u32, k: u32 },
    /// Number of partitions of n with at most k parts, each at most j.
    Partitions { k: usize, j: usize, n: usize },
    /// Every irreducible of the given dimension, simple or two-factor.
    EnumerateDim { d: u64 },
    /// Whether a functor detects a group, i.e. fixes a line.
    Detect {
        /// Factors separated by `;`, each `A<r>:[coords]`, `A<r>:schur=(lambda)` or `B<r>:[coords]`.
        #[arg(long)]
        group: GroupSpec,
        /// One of sym1..4, ext1..4, tensor1..4.
        #[arg(long)]
        functor: Functor,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    A1,
    A2,
    Schur,
    Corollary,
    Gl9,
    Rs,
    PlethysmOracle,
    Props,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,

    /// Largest n for `a1`.
    #[arg(long, default_value_t = 13)]
    pub n_max: u32,

    /// Largest k for `a2` (default 6) and `plethysm-oracle` (default 8).
    #[arg(long)]
    pub k_max: Option<u32>,

    /// Largest l for `corollary`.
    #[arg(long, default_value_t = 300)]
    pub ell_max: usize,

    /// Largest |lambda| for `schur`.
    #[arg(long, default_value_t = 4)]
    pub size_max: u32,

    /// Ranks m checked past 3l(lambda) for `schur`.
    #[arg(long, default_value_t = 3)]
    pub window: usize,

    /// Also run `schur` below the range of the statement, reported separately.
    #[arg(long)]
    pub exploratory: bool,

    /// Ranks m for `rs`.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3])]
    pub m: Vec<usize>,

    /// Outer degrees j for `plethysm-oracle`.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3])]
    pub js: Vec<u32>,

    /// Seed for `props`.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}
