//! Problem-file ingestion, reports and the subcommand driver behind `mz`.

pub mod parse;
pub mod problem;
pub mod report;

use std::time::Instant;

use thiserror::Error;

use crate::error::MzError;
use crate::groebner::buchberger;
use crate::idempotents::verify_family;
use crate::mzdecide::{decide_with_system, prepare, IdealInput};
use crate::oracle::{brute_force_decide, multiplication_table};
use parse::ParseError;
use problem::{LoadedProblem, ProblemFile};
use report::{GbReport, IdempotentsReport, OracleReport, Timings, VerdictReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_MZ: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_ORACLE_DISAGREES: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed problem file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}[{index}]: {source}")]
    Parse { field: &'static str, index: usize, source: ParseError },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Mz(#[from] MzError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mz(
                MzError::NonSplitting { .. } | MzError::SubsetBudgetExceeded { .. } | MzError::SingularMatrix,
            ) => EXIT_UNSUPPORTED,
            _ => EXIT_INPUT,
        }
    }

    /// Message with polynomials printed in the problem's variable names.
    pub fn describe(&self, names: &[String]) -> String {
        match self {
            CliError::Mz(MzError::NonSplitting { variable, factor }) if !names.is_empty() => format!(
                "eliminant in {} does not split over the rationals: {}",
                names[*variable],
                factor.display_with(names)
            ),
            CliError::Mz(MzError::InfiniteCodimension { variable }) if !names.is_empty() => {
                format!("ideal has infinite codimension: no power of {} is a leading monomial", names[*variable])
            }
            CliError::Mz(MzError::InvalidShift { variable, value }) if !names.is_empty() => {
                format!("shift {value} for {} puts a root at the origin", names[*variable])
            }
            other => other.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Decide { oracle: bool, subset_cap: Option<usize>, timings: bool },
    Gb,
    Idempotents,
    Oracle { subset_cap: Option<usize> },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn render<T: serde::Serialize>(value: &T, text: impl FnOnce() -> String, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("report serializes") + "\n",
        Format::Text => text(),
    }
}

fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

fn run_decide(loaded: &LoadedProblem, oracle: bool, timings: bool, format: Format) -> Result<Outcome, CliError> {
    let names = &loaded.variables;
    let t0 = Instant::now();
    let prep = prepare(&loaded.problem, &loaded.options)?;
    let prepare_us = micros(t0);
    let t1 = Instant::now();
    let sys = prep.functional_system()?;
    let functionals_us = micros(t1);
    let t2 = Instant::now();
    let verdict = decide_with_system(&prep, &sys, loaded.options.subset_cap)?;
    let conditions_us = micros(t2);

    let mut report = VerdictReport::new(&verdict, &prep, names);
    let mut code = if verdict.is_mz { EXIT_OK } else { EXIT_NOT_MZ };
    let mut stderr = String::new();
    let mut oracle_us = None;
    if oracle || loaded.run_oracle {
        let t3 = Instant::now();
        let table = multiplication_table(&prep.quotient);
        let o = brute_force_decide(&prep.family, &prep.subspace, &prep.quotient, &table, loaded.options.subset_cap)?;
        oracle_us = Some(micros(t3));
        let mut or = OracleReport::new(&o, names);
        let agrees = o.is_mz == verdict.is_mz;
        or.agrees = Some(agrees);
        report.oracle = Some(or);
        if !agrees {
            code = EXIT_ORACLE_DISAGREES;
            stderr = format!(
                "error: oracle disagrees with decide\n{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
    }
    if timings {
        report.timings = Some(Timings { prepare_us, functionals_us, conditions_us, oracle_us });
    }
    Ok(Outcome { stdout: render(&report, || report.to_text(), format), stderr, code })
}

fn run_loaded(cmd: &Command, loaded: &mut LoadedProblem, format: Format) -> Result<Outcome, CliError> {
    let names = loaded.variables.clone();
    match cmd {
        Command::Decide { oracle, subset_cap, timings } => {
            if let Some(c) = subset_cap {
                loaded.options.subset_cap = *c;
            }
            run_decide(loaded, *oracle, *timings, format)
        }
        Command::Gb => {
            let gens = match &loaded.problem.ideal {
                IdealInput::Generators(g) | IdealInput::Eliminants(g) => g,
            };
            let gb = buchberger(loaded.problem.nvars, gens, loaded.options.order);
            let report = GbReport::new(&gb, &names);
            Ok(Outcome { stdout: render(&report, || report.to_text(), format), stderr: String::new(), code: EXIT_OK })
        }
        Command::Idempotents => {
            let prep = prepare(&loaded.problem, &loaded.options)?;
            let verified = verify_family(&prep.family, &prep.spectrum, &prep.quotient).is_ok();
            let report = IdempotentsReport::new(&prep, &prep.family, verified, &names);
            Ok(Outcome { stdout: render(&report, || report.to_text(), format), stderr: String::new(), code: EXIT_OK })
        }
        Command::Oracle { subset_cap } => {
            if let Some(c) = subset_cap {
                loaded.options.subset_cap = *c;
            }
            let prep = prepare(&loaded.problem, &loaded.options)?;
            let table = multiplication_table(&prep.quotient);
            let o =
                brute_force_decide(&prep.family, &prep.subspace, &prep.quotient, &table, loaded.options.subset_cap)?;
            let report = OracleReport::new(&o, &names);
            let code = if o.is_mz { EXIT_OK } else { EXIT_NOT_MZ };
            Ok(Outcome { stdout: render(&report, || report.to_text(), format), stderr: String::new(), code })
        }
    }
}

/// Runs `cmd` on the JSON problem `source`.
pub fn run(cmd: &Command, source: &str, format: Format) -> Outcome {
    let mut names = Vec::new();
    let result = ProblemFile::from_json(source).and_then(|f| f.load()).and_then(|mut loaded| {
        names = loaded.variables.clone();
        run_loaded(cmd, &mut loaded, format)
    });
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: {}\n", e.describe(&names)),
        code: e.exit_code(),
    })
}
