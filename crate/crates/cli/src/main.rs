mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cacti_core::io::Document;
use cacti_core::{with_field, Error, FieldSpec};

use output::{Outcome, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "cacti", version, about = "Cobar and Hochschild complexes with their brace operations, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Ground field (Q, F7, ...); defaults to the field declared by the input, else Q.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Algebra,
    Bialgebra,
    Action,
    Morphism,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Cobar,
    Hochschild,
}

#[derive(clap::Args, Debug, Clone)]
struct Sampling {
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    max_ext: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the axiom checker matching the input.
    Check {
        input: String,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Betti table and representatives of the cobar complex.
    CobarCohomology {
        input: String,
        #[arg(long, default_value_t = 4)]
        max_ext: usize,
        /// Restrict to one internal degree.
        #[arg(long)]
        internal: Option<i64>,
    },
    /// Betti table and representatives of the Hochschild complex.
    HochschildCohomology {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_q: usize,
        #[arg(long)]
        internal: Option<i64>,
    },
    /// Sampled check of the brace identities.
    Identities {
        input: String,
        #[arg(long, value_enum)]
        side: Option<Side>,
        /// Run a single identity.
        #[arg(long)]
        identity: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// The morphism of brace algebras induced by a module-algebra action.
    Induced {
        input: String,
        #[arg(long)]
        verify: bool,
        /// Ranks of the induced map on cohomology up to this external degree.
        #[arg(long)]
        image: Option<usize>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Dual bialgebra and the pairing action.
    Dual { input: String },
    /// Recover the bialgebra from the operations of its cobar construction.
    Extract { input: String },
    /// Lift a bialgebra morphism to the cobar constructions.
    Lift {
        input: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Cochain built from a chain of skew derivations.
    SkewCocycle { input: String },
}

impl Command {
    fn input(&self) -> &str {
        match self {
            Command::Check { input, .. }
            | Command::CobarCohomology { input, .. }
            | Command::HochschildCohomology { input, .. }
            | Command::Identities { input, .. }
            | Command::Induced { input, .. }
            | Command::Dual { input }
            | Command::Extract { input }
            | Command::Lift { input, .. }
            | Command::SkewCocycle { input } => input,
        }
    }
}

fn run(cli: &Cli) -> Result<(RunConfig, Outcome), Error> {
    let doc = Document::load(cli.command.input())?;
    let field = match &cli.field {
        Some(f) => f.parse::<FieldSpec>()?,
        None => doc.declared_field()?.unwrap_or(FieldSpec::Rational),
    };
    let config = RunConfig::new(&cli.command, field, cli.format);
    let outcome = with_field!(field, F => commands::execute::<F>(&cli.command, &doc))??;
    Ok((config, outcome))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AxiomFailure(_)
        | Error::ExtractionFailure(_)
        | Error::NotABialgebraMorphism(_)
        | Error::NotACocycle(_)
        | Error::NotGroupLike(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((config, outcome)) => {
            print!("{}", output::render(&config, &outcome, cli.format));
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
