mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Outcome;

#[derive(Parser, Debug)]
#[command(name = "sh3", version, about = "Exact computations in the 3-particle Calogero observable superalgebra")]
pub struct Cli {
    /// Largest degree accepted without --force.
    #[arg(long, env = "SH3_MAX_DEGREE", default_value_t = 6, global = true)]
    pub max_degree_guard: u32,

    /// Allow degrees above the guard.
    #[arg(long, global = true)]
    pub force: bool,

    /// Run every bulk computation on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Core,
    Sl2,
    Dunkl,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct NuArgs {
    /// Coupling constants, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0,1/3,1/2,1")]
    pub nu: Vec<String>,

    /// Polynomials of degree up to this are used as test inputs.
    #[arg(long, default_value_t = 5)]
    pub poly_degree: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check relation suites; exits 1 naming every failed relation.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        nu: NuArgs,
    },
    /// Supertrace of an expression, symbolic in (S1, S2) or at given values.
    Str {
        expr: String,
        /// "symbolic" or "S1,S2".
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        params: String,
    },
    /// Gram matrix of B(f, g) = str(fg) on the monomials of degree at most --degree.
    Gram {
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        params: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Basis of the center in degree at most --degree.
    Center {
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Dimension of the span of all superbrackets in degree at most --degree.
    Commutant {
        #[arg(long, default_value_t = 2)]
        degree: u32,
        /// Bracket factors with degrees summing to at most this; defaults to degree + 4.
        #[arg(long)]
        source: Option<u32>,
    },
    /// Build a certificate that the two-sided ideal of an element contains the unit,
    /// or replay a stored one.
    Certificate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, conflicts_with_all = ["expr", "replay"])]
        random_element_degree: Option<u32>,
        #[arg(long, conflicts_with = "replay")]
        expr: Option<String>,
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Write the certificate here instead of embedding it in the report.
        #[arg(long, conflicts_with = "replay")]
        out: Option<PathBuf>,
    },
    /// Dunkl operator relations for each coupling constant.
    DunklCheck {
        #[command(flatten)]
        nu: NuArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Outcome::Usage.code()),
            };
        }
    };
    let outcome = commands::run(&cli);
    ExitCode::from(outcome.code())
}
