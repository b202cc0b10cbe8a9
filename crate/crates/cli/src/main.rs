//! `nilgrade` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O or cache failure, 2 usage error,
//! 3 resource cap exceeded, 4 invariant violation.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilgrade::{Error, DEFAULT_WEYL_CAP};

#[derive(Parser, Debug)]
#[command(
    name = "nilgrade",
    version,
    about = "Graded multiplicities for nilpotent orbit closures"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Largest Weyl group that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_WEYL_CAP, value_parser = positive_usize, global = true)]
    pub weyl_cap: usize,

    /// Partition-table cache directory (default: $NILGRADE_CACHE_DIR or ~/.cache/nilgrade).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the partition-table cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Worker threads for sweeps.
    #[arg(long, value_parser = positive_usize, global = true)]
    pub jobs: Option<usize>,

    /// Re-verify the invariants behind the output; exit 4 on violation.
    #[arg(long, global = true)]
    pub check: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct TypeOpts {
    /// Root system family (A–G).
    #[arg(long)]
    pub family: String,

    /// Rank.
    #[arg(long, value_parser = positive_usize)]
    pub rank: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarietyArg {
    Nilcone,
    Subregular,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    Trivial,
    InducedWall,
    Tilting,
    Weyl,
    Simple,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Freudenthal,
    Kostant,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The constant k with 2k−1 the length of the reflection in θ.
    Kconst {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_parser = positive_usize)]
        rank: Option<usize>,
        /// Every type A_1..A_8, B_2..B_8, C_2..C_8, D_3..D_8, G_2, F_4, E_6..E_8.
        #[arg(long, conflicts_with_all = ["family", "rank"])]
        all: bool,
    },
    /// Root system data as JSON.
    Roots {
        #[command(flatten)]
        ty: TypeOpts,
    },
    /// Graded multiplicities d_n(λ) (nilcone) or t_n(λ) (subregular).
    Graded {
        #[command(flatten)]
        ty: TypeOpts,
        #[arg(long, value_enum)]
        variety: VarietyArg,
        /// Highest weight in fundamental-weight coordinates, e.g. 1,1.
        #[arg(long, conflicts_with = "sweep", allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Sweep all dominant λ ≤ N·θ.
        #[arg(long, value_parser = positive_u32)]
        sweep: Option<u32>,
        /// Only report degrees up to this one.
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Cohomology table of one of the modules attached to the affine wall.
    Cohomology {
        #[command(flatten)]
        ty: TypeOpts,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Sweep all dominant λ ≤ N·θ.
        #[arg(long, default_value_t = 2, value_parser = positive_u32)]
        sweep: u32,
        /// Largest cohomological degree.
        #[arg(long, default_value_t = 8)]
        max_i: usize,
    },
    /// Euler characteristic of the A_2 tilting module example.
    TiltingExample,
    /// Weight multiplicity m_λ(μ).
    Mult {
        #[command(flatten)]
        ty: TypeOpts,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Freudenthal)]
        method: MethodArg,
    },
    /// Dimensions of graded pieces.
    Hilbert {
        #[command(flatten)]
        ty: TypeOpts,
        #[arg(long, value_enum)]
        variety: VarietyArg,
        #[arg(long)]
        max_degree: u32,
    },
    /// Inspect or clear the partition-table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum CacheAction {
    List,
    Clear,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u32(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Engine(Error),
    Check(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 4,
            Failure::Engine(e) => match e {
                Error::CapExceeded { .. } => 3,
                Error::Violation { .. } | Error::Inconsistency(_) => 4,
                Error::InadmissibleType { .. }
                | Error::UnknownType(_)
                | Error::NonDominant(_)
                | Error::RankMismatch { .. }
                | Error::WrongType { .. } => 2,
                Error::Cache { .. } | Error::Io(_) | Error::Json(_) => 1,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        // Only fails if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                let f = Failure::Check(out.violations);
                report(&f);
                ExitCode::from(f.exit_code())
            }
        }
        Err(f) => {
            report(&f);
            ExitCode::from(f.exit_code())
        }
    }
}

fn report(f: &Failure) {
    match f {
        Failure::Usage(m) => eprintln!("error: {m}"),
        Failure::Engine(e) => eprintln!("error: {e}"),
        Failure::Check(v) => {
            for m in v {
                eprintln!("check failed: {m}");
            }
        }
    }
}
