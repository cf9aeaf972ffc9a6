use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "permcode",
    version,
    about = "Success probabilities for quantum and classical color-coding under a random permutation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format (default: json for verify, table otherwise)
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Largest N for exact enumeration (default 66, or $PERMCODE_CAP)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=200))]
    pub cap: Option<u32>,

    /// RNG seed for every sampled quantity
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Estimator {
    /// Exact below the cap, otherwise the sampler suited to r = d/N
    Auto,
    Exact,
    Plancherel,
    SchurWeyl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Plancherel,
    SchurWeyl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// Plancherel tail bound in the first-column length
    Kerov,
    /// Schur–Weyl tail bound in the first-row length
    KerovRow,
    /// p(n) < exp(C·sqrt(n)) for all n up to --n
    Erdos,
    /// Short first column forces D < m
    Lemma1,
    /// Short first row forces m < D
    Lemma2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal quantum success probability for N objects and d levels
    Pmax {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, value_enum, default_value_t = Estimator::Auto)]
        method: Estimator,
        /// Monte Carlo draws when sampling
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..=100_000_000))]
        samples: u64,
    },
    /// Optimal classical success probability, optionally simulated
    Classical {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Also simulate the channel with this many trials
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=100_000_000))]
        trials: Option<u64>,
    },
    /// Sweep N at fixed r = d/N (d = floor(rN))
    Sweep {
        /// Ratio r = d/N
        #[arg(long)]
        r: f64,
        /// N values: "10,20,30" or "10..60:10"
        #[arg(long = "n")]
        n_list: String,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..=100_000_000))]
        samples: u64,
    },
    /// Draw random Young diagrams
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1_000_000))]
        n: u32,
        /// Number of levels for the Schur–Weyl measure
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, value_enum, default_value_t = Measure::Plancherel)]
        measure: Measure,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=10_000_000))]
        samples: u64,
    },
    /// Run a matrix-simulation verification suite
    Verify {
        /// n3, symmetrize, optimal or all
        #[arg(long, default_value = "n3")]
        suite: String,
    },
    /// Scan bounds and lemmas over all diagrams of N
    Bounds {
        #[arg(long, value_enum)]
        kind: BoundKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        n: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Threshold multiplier A in A·sqrt(N) (lemma scans)
        #[arg(long, default_value_t = 2.0)]
        a: f64,
        /// Constant C in exp(C·sqrt(n)); default pi·sqrt(2/3)
        #[arg(long)]
        c: Option<f64>,
    },
}
