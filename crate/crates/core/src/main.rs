use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mz_core::cli::{run, CliError, Command, Format};

#[derive(Parser)]
#[command(name = "mz", version, about = "Decide whether I + span(v) is a Mathieu-Zhao space")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full decision procedure.
    Decide {
        file: PathBuf,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        subset_cap: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Include stage timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Reduced Gröbner basis and quotient dimension of the ideal.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Spectrum, shift and primitive idempotents.
    Idempotents {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Brute-force verdict over all idempotents.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        subset_cap: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (cmd, file, format) = match args.command {
        Cmd::Decide { file, oracle, subset_cap, format, timings } => {
            (Command::Decide { oracle, subset_cap, timings }, file, format)
        }
        Cmd::Gb { file, format } => (Command::Gb, file, format),
        Cmd::Idempotents { file, format } => (Command::Idempotents, file, format),
        Cmd::Oracle { file, subset_cap, format } => (Command::Oracle { subset_cap }, file, format),
    };
    let format = match format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let source = match std::fs::read_to_string(&file) {
        Ok(s) => s,
        Err(source) => {
            let err = CliError::Io { path: file.display().to_string(), source };
            eprintln!("error: {err}");
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let out = run(&cmd, &source, format);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
