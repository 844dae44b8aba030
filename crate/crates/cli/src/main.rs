use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotcert::commands::{
    cmd_band_check, cmd_double, cmd_invariants, cmd_sum, cmd_verify_paper, CliError, VerifyInputs,
};
use knotcert::report::Payload;
use knotcert::CliReport;
use num_bigint::BigInt;

const EXIT_FAILED_VERDICT: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "knotcert", version, about = "Exact Seifert-matrix invariants and concordance bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Alexander polynomial, determinant, signature, Arf, genus and slice obstructions.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Seifert matrix [[-1, 1], [0, n]] of an n-twisted positive double.
    Double {
        #[arg(long, allow_hyphen_values = true)]
        framing: BigInt,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Block sum (connected sum) of Seifert matrices.
    Sum {
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Checks that the second matrix is the first with one band reattached.
    BandCheck {
        before: PathBuf,
        after: PathBuf,
        /// 1-based band index.
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Reproduces the slice knot with tau != s/2 and the rank-3 summand, step by step.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Replace the bundled V1 matrix.
        #[arg(long)]
        v1: Option<PathBuf>,
        /// Replace the bundled V2 matrix.
        #[arg(long)]
        v2: Option<PathBuf>,
        /// Replace the bundled axiom table (JSON).
        #[arg(long)]
        axioms: Option<PathBuf>,
    },
}

fn emit(report: &CliReport, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED_VERDICT)
    }
}

/// Text mode prints a matrix file so the output can be fed back in.
fn emit_matrix(report: &CliReport, format: Format) -> ExitCode {
    match (format, &report.result) {
        (Format::Text, Payload::Matrix(m)) => {
            print!("{}", m.to_matrix_text());
            ExitCode::SUCCESS
        }
        _ => emit(report, format),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    Ok(match cli.command {
        Command::Invariants { file, format } => emit(&cmd_invariants(&file)?, format),
        Command::Double { framing, format } => emit_matrix(&cmd_double(&framing), format),
        Command::Sum { files, format } => emit_matrix(&cmd_sum(&files)?, format),
        Command::BandCheck { before, after, index, format } => {
            emit(&cmd_band_check(&before, &after, index)?, format)
        }
        Command::VerifyPaper { format, v1, v2, axioms } => {
            let mut inputs = VerifyInputs::bundled();
            if let Some(p) = v1 {
                inputs = inputs.with_v1_file(&p)?;
            }
            if let Some(p) = v2 {
                inputs = inputs.with_v2_file(&p)?;
            }
            if let Some(p) = axioms {
                inputs = inputs.with_axioms_file(&p)?;
            }
            emit(&cmd_verify_paper(&inputs), format)
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
