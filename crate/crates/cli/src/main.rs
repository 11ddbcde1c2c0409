//! `formring`: build and check rings, modules and pairs of binary forms.
//!
//! Coefficients are given in the order `f_0,…,f_n`, so `1,2,3` is
//! `x^2 + 2xy + 3y^2`.

mod commands;
mod tabulate;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "formring", version, about = "Rings, modules and pairs of binary n-ic forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplication table of R_f.
    Ring(FormArgs),
    /// Action table of R_f on I_f^k.
    Ideal {
        #[command(flatten)]
        form: FormArgs,
        /// Module index, -1 ≤ k ≤ n-1.
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
    },
    /// Discriminant of the form and of its ring.
    Disc(FormArgs),
    /// Primitivity, invertibility and the Gorenstein property.
    Props {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Form → pair → form and pair reconstruction.
    Roundtrip {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "random")]
        form: Option<String>,
        /// Test random integer forms instead of --form.
        #[arg(long, conflicts_with = "form")]
        random: bool,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "FORMRING_SEED", default_value_t = 0)]
        seed: u64,
        /// Coefficient bound for random forms.
        #[arg(long, default_value_t = 20)]
        height: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a check suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "FORMRING_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        height: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write one JSON record per form with |f_i| ≤ height.
    Tabulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        height: u32,
        #[arg(long)]
        out: PathBuf,
        /// Records computed in parallel per write.
        #[arg(long, default_value_t = 256)]
        batch: usize,
    },
}

#[derive(Args)]
struct FormArgs {
    #[arg(long)]
    n: usize,
    /// Coefficients f_0,…,f_n separated by commas.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "universal")]
    form: Option<String>,
    /// Use the form with indeterminate coefficients f0,…,fn.
    #[arg(long, conflicts_with_all = ["form", "context"])]
    universal: bool,
    /// Base context: Z or Z/m.
    #[arg(long)]
    context: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Universal,
    Random,
    Oracle,
}

/// Failure categories, mapped to exit codes 1 and 2.
#[derive(Debug)]
enum CliError {
    Failed(String),
    Usage(String),
}

impl From<formring::Error> for CliError {
    fn from(e: formring::Error) -> Self {
        match e {
            formring::Error::Inconsistent(_) => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("io: {e}"))
    }
}

type CliResult = Result<(), CliError>;

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Ring(a) => commands::ring(&a),
        Command::Ideal { form, k } => commands::ideal(&form, k),
        Command::Disc(a) => commands::disc(&a),
        Command::Props { n, form, format } => commands::props(n, &form, format),
        Command::Roundtrip {
            n,
            form,
            random,
            trials,
            seed,
            height,
            format,
        } => {
            let source = if random {
                commands::Source::Random { trials, seed, height }
            } else {
                commands::Source::Literal(form.unwrap_or_default())
            };
            commands::roundtrip(n, source, seed, format)
        }
        Command::Verify {
            suite,
            n,
            trials,
            seed,
            height,
            format,
        } => verify::run(suite, n, trials, seed, height, format),
        Command::Tabulate {
            n,
            height,
            out,
            batch,
        } => tabulate::run(n, height, &out, batch),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
