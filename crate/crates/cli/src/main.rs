//! `semigroup-forge`: command-line front end for the minimal genus and
//! minimal Frobenius number searches.

mod commands;
mod render;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub(crate) const MAX_MULTIPLICITY: u64 = 5000;
pub(crate) const MAX_LEVELS: u64 = 12;
const THREADS_ENV: &str = "SEMIGROUP_FORGE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "semigroup-forge",
    version,
    about = "Minimal genus and Frobenius number of numerical semigroups with fixed multiplicity and embedding dimension"
)]
pub(crate) struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Cross-check the result against the brute-force oracle.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Report wall-clock time in the meta block (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Via {
    Tree,
    Packed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Show {
    G,
    F,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Command {
    /// Minimal genus g(m,e) and every semigroup attaining it.
    MinGenus {
        m: u64,
        e: u64,
        #[arg(long, value_enum, default_value_t = Via::Tree)]
        via: Via,
    },
    /// Minimal Frobenius number F(m,e) and the semigroups attaining it.
    MinFrobenius {
        m: u64,
        e: u64,
        /// With `--via packed`, extend the packed minimisers to their full classes.
        #[arg(long)]
        full_set: bool,
        #[arg(long, value_enum, default_value_t = Via::Tree)]
        via: Via,
    },
    /// Packed semigroups C(m,e) with their invariants.
    Packed {
        m: u64,
        e: u64,
        /// Only show genus (g) or Frobenius number (f).
        #[arg(long, value_enum)]
        show: Option<Show>,
    },
    /// Levels 0..=K of the tree of semigroups with multiplicity m.
    Tree {
        m: u64,
        #[arg(long)]
        levels: u64,
    },
    /// Members of the class of a packed semigroup with its Frobenius number.
    ClassMinFrob {
        #[arg(value_parser = parse_generators)]
        generators: Generators,
    },
    /// Invariants of the semigroup generated by a comma-separated list.
    Info {
        #[arg(value_parser = parse_generators)]
        generators: Generators,
    },
    /// Check Wilf's inequality over tree levels 0..=K, restricted to embedding dimension e.
    AuditWilf {
        m: u64,
        e: u64,
        #[arg(long)]
        levels: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Generators(pub Vec<u64>);

fn parse_generators(raw: &str) -> Result<Generators, String> {
    let mut out = Vec::new();
    for token in raw.split(',') {
        let t = token.trim();
        match t.parse::<u64>() {
            Ok(v) => out.push(v),
            Err(_) => return Err(format!("invalid generator `{t}` in `{raw}`")),
        }
    }
    Ok(Generators(out))
}

/// Failures that map onto distinct exit codes.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    EmptyFamily(String),
    Verification(String),
    Wilf(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::EmptyFamily(_) => 3,
            Failure::Verification(_) | Failure::Wilf(_) => 4,
        }
    }
}

fn configure_threads() {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => eprintln!("warning: ignoring {THREADS_ENV}={raw}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            if let Some(out) = out {
                print!("{out}");
            }
            match &failure {
                Failure::Usage(msg) | Failure::EmptyFamily(msg) => eprintln!("error: {msg}"),
                Failure::Verification(msg) => eprintln!("verification failed: {msg}"),
                Failure::Wilf(msg) => eprintln!("WILF VIOLATION: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
