mod document;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use document::InputError;

/// Exact classification of BL4 algebras.
#[derive(Parser, Debug)]
#[command(name = "bl4kit", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical label, properties and automorphism group of an algebra.
    Classify {
        /// Algebra document: a file path, inline JSON, or `-` for stdin.
        input: String,
        /// Include the matrix mapping the canonical algebra onto the input.
        #[arg(long)]
        witness: bool,
    },
    /// Decide whether two algebras are isomorphic.
    Iso {
        /// First algebra document.
        a: String,
        /// Second algebra document; the witness maps it onto the first.
        b: String,
    },
    /// Automorphism group of an algebra: sample elements or test a matrix.
    Aut {
        /// Algebra document.
        input: String,
        /// Emit this many random automorphisms.
        #[arg(long, conflicts_with = "check")]
        sample: Option<usize>,
        /// Test a 4x4 matrix (file or inline JSON of "p/q" strings).
        #[arg(long)]
        check: Option<String>,
        /// Seed for `--sample`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on numerators and denominators of sampled parameters.
        #[arg(long, default_value_t = bl4kit::random::DEFAULT_HEIGHT, value_parser = clap::value_parser!(i64).range(1..))]
        height: i64,
    },
    /// Run the property suites.
    Selftest {
        #[arg(value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Quick,
    Full,
}

/// Exit statuses: 0 success, 1 bad input, 2 not a BL4 algebra.
pub enum Failure {
    Input(InputError),
    NotBl4(bl4kit::NotBl4Reason),
    /// The self-test found failures; the report is already printed.
    Suites,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Algebra(bl4kit::Error::NotBl4(r)) => Self::NotBl4(r),
            other => Self::Input(other),
        }
    }
}

impl From<bl4kit::Error> for Failure {
    fn from(e: bl4kit::Error) -> Self {
        InputError::Algebra(e).into()
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = match cli.command {
        Command::Classify { input, witness } => report::classify(&input, witness)?,
        Command::Iso { a, b } => report::iso(&a, &b)?,
        Command::Aut { input, sample, check, seed, height } => {
            report::aut(&input, sample, check.as_deref(), seed, height)?
        }
        Command::Selftest { level, seed } => {
            let counts = match level {
                Level::Quick => bl4kit::selftest::Counts::quick(),
                Level::Full => bl4kit::selftest::Counts::full(),
            };
            let reports = bl4kit::selftest::run_all(&counts, seed);
            let ok = reports.iter().all(|r| r.ok());
            report::print_selftest(&reports, cli.format);
            return if ok { Ok(()) } else { Err(Failure::Suites) };
        }
    };
    report::print(&out, cli.format);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::NotBl4(reason)) => {
            report::print(&serde_json::json!({ "bl4": false, "reason": reason.as_str() }), format);
            eprintln!("error: not a BL4 algebra: {reason}");
            ExitCode::from(2)
        }
        Err(Failure::Suites) => ExitCode::from(1),
    }
}
