//! Command-line frontend for the `latscale` library.
//!
//! Exit codes: 0 when the command succeeded and its claim holds, 1 when a
//! claim failed, 2 on invalid arguments and 3 on I/O errors.

pub mod args;
pub mod check;
pub mod decimal;
pub mod points;
pub mod report;
pub mod svg;
pub mod table;

use std::io::Write;

use latscale::{
    analyze, image_ideal_check, induced_map, search, verify_square_family, DirectionalScaling,
    Error, KForm, LatticeKind, SearchSpec, SymmetryReport,
};

use args::{Cli, Command, Format, TransformArgs};
use report::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAIM_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSearchSpec(_) | Error::InvalidTransform(_) => EXIT_USAGE,
            _ => EXIT_CLAIM_FAILED,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Rendered command output and whether the command's claim holds.
#[derive(Debug)]
pub struct Outcome {
    pub output: Vec<u8>,
    pub passed: bool,
}

impl TransformArgs {
    fn lattice_name(&self) -> String {
        LatticeKind::from(self.lattice).to_string()
    }

    pub fn resolve(&self) -> Result<DirectionalScaling, CliError> {
        match (LatticeKind::from(self.lattice), self.k) {
            (LatticeKind::Square, Some(k)) => Ok(DirectionalScaling::square_family(k)?),
            (LatticeKind::Square, None) => Err(CliError::usage("the square lattice needs --k")),
            (LatticeKind::Triangular, None) => Ok(DirectionalScaling::triangular_known()),
            (LatticeKind::Triangular, Some(_)) => Err(CliError::usage(
                "--k selects a square-lattice transform; use `search` for triangular scheme parameters",
            )),
        }
    }
}

fn summarize(r: &SymmetryReport) -> Result<SymmetrySummary, CliError> {
    let image = r
        .induced
        .as_ref()
        .map(|im| image_ideal_check(&im.matrix, r.transform.kind()))
        .transpose()?;
    Ok(SymmetrySummary::of(r, image.as_ref()))
}

fn render<T: serde::Serialize>(format: Format, doc: &T, table: impl Fn(&T) -> String) -> Vec<u8> {
    match format {
        Format::Json => to_json(doc).into_bytes(),
        Format::Table => table(doc).into_bytes(),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify(a) => {
            let ds = a.transform.resolve()?;
            let r = analyze(ds, Some(a.radius));
            let doc = ReportDocument::new(
                "verify",
                VerifyInputs {
                    lattice: a.transform.lattice_name(),
                    k: a.transform.k,
                    radius: a.radius,
                },
                summarize(&r)?,
            );
            Ok(Outcome {
                passed: doc.results.verified,
                output: render(cli.format, &doc, table::verify),
            })
        }
        Command::Family(a) => {
            let rows = verify_square_family(a.k_max)?
                .iter()
                .map(summarize)
                .collect::<Result<Vec<_>, _>>()?;
            let passed = rows.iter().all(|r| r.verified);
            let doc = ReportDocument::new(
                "family",
                FamilyInputs { k_max: a.k_max },
                FamilyResults { rows },
            );
            Ok(Outcome {
                passed,
                output: render(cli.format, &doc, table::family),
            })
        }
        Command::Search(a) => {
            let form = match (a.k_int, a.k_sqrt3) {
                (Some((min, max)), None) => KForm::IntegerRange { min, max },
                (None, Some((min, max))) => KForm::SqrtThreeMultiples { min, max },
                (Some(a), Some(b)) => KForm::MixedQ3 { a, b },
                (None, None) => return Err(CliError::usage("give --k-int and/or --k-sqrt3")),
            };
            let spec = SearchSpec {
                kind: a.lattice.into(),
                form,
                grid_radius: a.radius,
            };
            let candidates = spec.candidates()?.len() as u64;
            let findings = search(&spec)?
                .iter()
                .map(summarize)
                .collect::<Result<Vec<_>, _>>()?;
            let doc = ReportDocument::new(
                "search",
                SearchInputs {
                    lattice: LatticeKind::from(a.lattice).to_string(),
                    k_int: a.k_int.map(|(x, y)| [x, y]),
                    k_sqrt3: a.k_sqrt3.map(|(x, y)| [x, y]),
                    radius: a.radius,
                },
                SearchResults {
                    candidates,
                    findings,
                },
            );
            Ok(Outcome {
                passed: true,
                output: render(cli.format, &doc, table::search),
            })
        }
        Command::Points(a) => {
            let ds = a.transform.resolve()?;
            let im = induced_map(&ds)?;
            Ok(Outcome {
                passed: true,
                output: points::write_csv(&ds, &im, a.radius as i64)?,
            })
        }
        Command::Render(a) => {
            let ds = a.transform.resolve()?;
            let im = induced_map(&ds)?;
            Ok(Outcome {
                passed: true,
                output: svg::render(&ds, &im, a.radius as i64)?.into_bytes(),
            })
        }
        Command::CheckFloat(a) => {
            let ds = a.transform.resolve()?;
            let r = check::check_float(&ds, a.samples, a.seed)?;
            let passed = r.max_deviation <= a.tol;
            let doc = ReportDocument::new(
                "check-float",
                CheckFloatInputs {
                    lattice: a.transform.lattice_name(),
                    k: a.transform.k,
                    samples: a.samples,
                    tol: format!("{:e}", a.tol),
                    seed: a.seed,
                },
                CheckFloatResults {
                    samples: r.samples,
                    max_deviation: decimal::report(r.max_deviation),
                    worst: PointValue::of(&r.worst),
                    passed,
                },
            );
            Ok(Outcome {
                passed,
                output: render(cli.format, &doc, table::check_float),
            })
        }
    }
}

/// Runs `cli`, writing output to `--output` or `stdout` and diagnostics to
/// `stderr`. Returns the process exit code.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            return e.code;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.output)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(&outcome.output)
            .and_then(|_| stdout.flush())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_IO;
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_CLAIM_FAILED
    }
}
