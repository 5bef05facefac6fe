//! Batch front end: parse linkage and curve inputs, dispatch to the three
//! computation paths, emit JSON or table reports, and run the
//! cross-verification suite.
//!
//! Exit codes: 0 success, 2 input validation failure, 3 hypothesis
//! violation (tangency, endpoint, origin), 4 resource refusal, 5
//! verification disagreement.

pub mod args;
pub mod exec;
pub mod report;
pub mod verify;

use std::io::Write;

use linkhom_core::curve::Tolerances;
use linkhom_core::ErrorClass;

use args::{Cli, Command, Format};
use exec::{CliError, Settings};
use report::{ErrorBody, ErrorReport, Report};

pub fn exit_code_for(class: ErrorClass) -> i32 {
    match class {
        ErrorClass::Input => 2,
        ErrorClass::Hypothesis => 3,
        ErrorClass::Resource => 4,
    }
}

fn settings_from(cli: &Cli) -> Result<Settings, CliError> {
    if cli.tol_end <= 0.0 || cli.tol_geo <= 0.0 || cli.tol_tan <= 0.0 {
        return Err(CliError::Core(linkhom_core::Error::InvalidCurve(
            "tolerances must be positive".into(),
        )));
    }
    Ok(Settings {
        tol: Tolerances { end: cli.tol_end, geo: cli.tol_geo, tan: cli.tol_tan },
        cap: cli.max_k,
        budget: exec::cell_budget_from_env(),
    })
}

fn execute(cli: &Cli) -> Result<(Report, i32), CliError> {
    let settings = settings_from(cli)?;
    match &cli.command {
        Command::Radii { lengths } => {
            Ok((Report::Radii(exec::run_radii(lengths, &settings)?), 0))
        }
        Command::Line { lengths, h } => {
            Ok((Report::Line(exec::run_line(lengths, h, &settings)?), 0))
        }
        Command::Curve { lengths, curve } => {
            Ok((Report::Curve(exec::run_curve(lengths, curve, &settings)?), 0))
        }
        Command::Oracle { lengths, h, grid_n, delta, dump_samples } => Ok((
            Report::Oracle(exec::run_oracle(
                lengths,
                h,
                *grid_n,
                delta.as_deref(),
                *dump_samples,
                &settings,
            )?),
            0,
        )),
        Command::Verify { grid_n, sweep_cases, seed, quick } => {
            let opts = verify::VerifyOptions {
                grid_n: *grid_n,
                sweep_cases: *sweep_cases,
                seed: *seed,
                quick: *quick,
                settings,
            };
            let report = verify::verify_suite(&opts);
            let code = if report.summary.failed > 0 { 5 } else { 0 };
            Ok((Report::Verify(report), code))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn class_name(class: ErrorClass) -> &'static str {
    match class {
        ErrorClass::Input => "input",
        ErrorClass::Hypothesis => "hypothesis",
        ErrorClass::Resource => "resource",
    }
}

fn report_error(err: &CliError) -> i32 {
    let body = ErrorReport {
        error: ErrorBody {
            code: err.code(),
            class: class_name(err.class()).into(),
            message: err.message(),
        },
    };
    let mut text = serde_json::to_string_pretty(&body).expect("error serialization");
    text.push('\n');
    print!("{text}");
    exit_code_for(err.class())
}

/// Runs one parsed command line to completion; returns the process exit
/// code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok((report, code)) => {
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            match emit(&cli, &text) {
                Ok(()) => code,
                Err(e) => report_error(&e),
            }
        }
        Err(e) => report_error(&e),
    }
}
