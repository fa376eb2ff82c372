mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use neglogic::algebra::DEFAULT_ENUMERATION_CAP;
use neglogic::gmatrix::DEFAULT_FULL_CAP;
use neglogic::matrix::DEFAULT_FILTER_CAP;

use commands::{Format, Premises};

/// Workbench for the negation fragment of classical propositional logic.
#[derive(Parser)]
#[command(name = "neglogic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Problem {
    /// Comma-separated premises, e.g. "x, ~~y".
    #[arg(long, conflicts_with = "premises_file", default_value = "")]
    premises: String,
    /// File with one premise per line.
    #[arg(long)]
    premises_file: Option<PathBuf>,
    /// The formula to derive.
    #[arg(long)]
    goal: String,
}

impl Problem {
    fn premises(&self) -> Premises<'_> {
        match &self.premises_file {
            Some(path) => Premises::File(path),
            None => Premises::Inline(&self.premises),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the premises derive the goal.
    Entail {
        #[command(flatten)]
        problem: Problem,
        /// Also print a proof.
        #[arg(long)]
        proof: bool,
    },
    /// Print a proof of the goal from the premises.
    Prove {
        #[command(flatten)]
        problem: Problem,
    },
    /// Check a proof file.
    CheckProof {
        #[command(flatten)]
        problem: Problem,
        #[arg(long)]
        proof_file: PathBuf,
    },
    /// Report on an algebra file: orbits, filters, class membership.
    Algebra {
        file: PathBuf,
        /// Largest carrier for subset sweeps.
        #[arg(long, default_value_t = DEFAULT_FILTER_CAP)]
        cap: usize,
    },
    /// Check a closure-system file for fullness.
    Gmatrix {
        file: PathBuf,
        /// Largest carrier for subset sweeps.
        #[arg(long, default_value_t = DEFAULT_FULL_CAP)]
        cap: usize,
    },
    /// Count algebras by class for sizes 1..=max-size.
    Census {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
        /// Largest size the enumeration may reach.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// One line per isomorphism class instead of per size.
        #[arg(long)]
        classes: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { commands::INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Entail { problem, proof } => commands::entail(problem.premises(), &problem.goal, *proof),
        Command::Prove { problem } => commands::prove(problem.premises(), &problem.goal),
        Command::CheckProof { problem, proof_file } => {
            commands::check_proof_file(problem.premises(), proof_file, &problem.goal)
        }
        Command::Algebra { file, cap } => commands::algebra(file, *cap),
        Command::Gmatrix { file, cap } => commands::gmatrix(file, *cap),
        Command::Census { max_size, format, cap, classes } => {
            let format = match format {
                FormatArg::Plain => Format::Plain,
                FormatArg::Csv => Format::Csv,
            };
            commands::census(*max_size, *cap, format, *classes)
        }
    };
    match result {
        Ok(report) => {
            let _ = std::io::stdout().write_all(report.out.as_bytes());
            ExitCode::from(report.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
