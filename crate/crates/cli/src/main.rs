use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use syzygy_cli::{Format, Outcome};
use syzygy_core::{NumericalSemigroup, SuiteConfig};

/// Calculator and verifier for numerical semigroup rings.
#[derive(Parser)]
#[command(name = "syzygy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, almost-Gorenstein conditions, End(m), K and verdict.
    Analyze {
        /// Generators, e.g. 3,7,11
        gens: NumericalSemigroup,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The endomorphism chain down to N with stable dimension bounds.
    Chain {
        gens: NumericalSemigroup,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Member n of the dyadic complete-intersection family.
    Family {
        #[arg(long)]
        n: u32,
        /// Check the family claims; exit 1 if any fails.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify every semigroup up to a genus bound.
    Census {
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Ideal operations: dual, closure, minimal generators, and with
    /// --with also sum, quotient and isomorphism.
    Ideal {
        gens: NumericalSemigroup,
        /// Ideal generators, optionally prefixed by @offset:, e.g. @-2:0,3
        #[arg(allow_hyphen_values = true)]
        ideal: String,
        #[arg(long = "with", allow_hyphen_values = true)]
        other: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reproduce the worked examples or run the census equivalence suite.
    Verify {
        #[command(subcommand)]
        scope: Scope,
    },
}

#[derive(Subcommand)]
enum Scope {
    /// Worked examples, the dyadic family for n = 1..6 and a census suite.
    #[command(alias = "paper")]
    Examples {
        #[command(flatten)]
        suite: SuiteArgs,
        /// Skip the census suite.
        #[arg(long)]
        no_census: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, hide = true)]
        inject_colon_fault: bool,
    },
    /// Equivalence checks over every semigroup up to a genus bound.
    Census {
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 8)]
    genus: usize,
    /// Random ideals per semigroup.
    #[arg(long, default_value_t = 16)]
    ideals: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl From<SuiteArgs> for SuiteConfig {
    fn from(a: SuiteArgs) -> Self {
        SuiteConfig {
            g_max: a.genus,
            ideals_per_semigroup: a.ideals,
            seed: a.seed,
            workers: a.workers,
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Analyze { gens, format } => syzygy_cli::analyze(&gens, format),
        Command::Chain {
            gens,
            max_steps,
            format,
        } => syzygy_cli::chain(&gens, max_steps, format),
        Command::Family { n, verify, format } => syzygy_cli::family(n, verify, format),
        Command::Census { suite, format } => syzygy_cli::census(&suite.into(), format),
        Command::Ideal {
            gens,
            ideal,
            other,
            format,
        } => syzygy_cli::ideal(&gens, &ideal, other.as_deref(), format),
        Command::Verify { scope } => match scope {
            Scope::Examples {
                suite,
                no_census,
                format,
                inject_colon_fault,
            } => syzygy_cli::verify_examples((!no_census).then(|| suite.into()), inject_colon_fault, format),
            Scope::Census { suite, format } => syzygy_cli::verify_census(&suite.into(), format),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.output.as_bytes());
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            // Two computations of the same quantity disagreeing is a failed
            // check, not a usage problem.
            let failed_check = matches!(e.downcast_ref(), Some(syzygy_core::Error::RouteDisagreement { .. }));
            ExitCode::from(if failed_check { 1 } else { 2 })
        }
    }
}
