//! Command-line front end: argument parsing, input formats and JSON/CSV
//! reports for the `linkform` library.
//!
//! Exit codes: 0 on success, 1 on input or domain errors (an error report is
//! written to standard output as JSON), 2 on usage errors.

pub mod args;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use linkform::diophantine::{self, DiophantineError, SearchWindow, Sign, SolutionRecord};
use linkform::discriminant::{self, DiscriminantError};
use linkform::forms::{FormError, PivotPolicy};
use linkform::knots::KnotError;
use linkform::witt::WittError;
use linkform::{analyze_knot, DiscriminantForm, IntegerSymmetricForm, PretzelKnot, SeifertMatrix, WittClassQ};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use args::{Cli, Command, DiophArgs, Pivot};
use report::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Witt(#[from] WittError),
    #[error(transparent)]
    Discriminant(#[from] DiscriminantError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Diophantine(#[from] DiophantineError),
    #[error("restriction fails: {0}")]
    RestrictionFails(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Input(_) => "input",
            Self::Form(_) => "form",
            Self::Witt(_) => "witt",
            Self::Discriminant(_) => "discriminant",
            Self::Knot(_) => "knot",
            Self::Diophantine(_) => "diophantine",
            Self::RestrictionFails(_) => "restriction",
            Self::Output(_) => "output",
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Output(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let report = ErrorReport { error: ErrorBody { kind: e.kind().into(), message: e.to_string() } };
            let _ = emit(out, &report);
            1
        }
    }
}

/// Pretty JSON with keys sorted, followed by a newline.
pub fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    // serde_json's default map is ordered by key
    let v = serde_json::to_value(value).map_err(|e| CliError::Output(e.to_string()))?;
    let text = serde_json::to_string_pretty(&v).map_err(|e| CliError::Output(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn read_form(path: &Path) -> Result<IntegerSymmetricForm, CliError> {
    Ok(IntegerSymmetricForm::from_rows(input::read_matrix(path, "gram")?)?)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Analyze { input, bound_group } => {
            let f = read_form(&input.gram)?;
            let r = discriminant::verify_main_theorem(&f, bound_group)?;
            emit(out, &TheoremJson::new(f.rank(), &r))
        }
        Command::Diag { input, pivot, approx } => {
            let f = read_form(&input.gram)?;
            let policy = match pivot {
                Pivot::First => PivotPolicy::FirstNonzero,
                Pivot::Last => PivotPolicy::LastNonzero,
            };
            let d = f.diagonalize_with(policy);
            let w = WittClassQ::from_diagonal(&d.entries)?;
            let entries_approx = approx.then(|| {
                d.entries
                    .iter()
                    .map(|e| e.to_f64().unwrap_or(f64::NAN))
                    .collect()
            });
            emit(
                out,
                &DiagJson {
                    pivot: format!("{pivot:?}").to_lowercase(),
                    entries: d.entries.iter().map(rational).collect(),
                    transition: d.transition.iter().map(|r| r.iter().map(rational).collect()).collect(),
                    signature: d.signature(),
                    witt_class: w.values().map(ToString::to_string).collect(),
                    entries_approx,
                },
            )
        }
        Command::Boundary { input } => {
            let f = read_form(&input.gram)?;
            let w = WittClassQ::of_form(&f)?;
            let boundary: Vec<FiniteWittJson> = w.boundary_table()?.iter().map(FiniteWittJson::from).collect();
            let boundary_zero = boundary.iter().all(|b| b.zero);
            emit(
                out,
                &BoundaryJson {
                    witt_class: w.values().map(ToString::to_string).collect(),
                    signature: w.signature(),
                    witt_zero: boundary_zero && w.signature() == 0,
                    boundary,
                    boundary_zero,
                },
            )
        }
        Command::Disc { input, bound_group } => {
            let f = read_form(&input.gram)?;
            let d = DiscriminantForm::of_form(&f);
            let (m, searched) = match d.find_metabolizer(bound_group) {
                Ok(m) => (m, true),
                Err(DiscriminantError::GroupTooLarge { .. }) => (None, false),
                Err(e) => return Err(e.into()),
            };
            emit(out, &DiscJson::new(&d, m.as_ref(), searched))
        }
        Command::Gauss { input, bound_det, approx, jobs } => {
            let f = read_form(&input.gram)?;
            let value = parallel_gauss_sum(&f, bound_det, jobs)?;
            let check = discriminant::check_gauss_value(&f, value);
            emit(out, &GaussJson::new(&check, f.determinant(), approx))
        }
        Command::Knot { seifert } => {
            let s = SeifertMatrix::new(input::read_matrix(&seifert, "seifert")?)?;
            let r = analyze_knot(&s)?;
            emit(out, &KnotJson::new(s.size(), &r))
        }
        Command::Pretzel { p, q, r } => {
            let k = PretzelKnot::new(p, q, r)?;
            let witt = match k.witt_class() {
                Ok(w) => Some(w),
                Err(KnotError::DegenerateParameter(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let boundary_zero = witt.as_ref().map(WittClassQ::boundary_is_zero).transpose()?;
            let signature = match k.signature() {
                Ok(s) => Some(s),
                Err(KnotError::DegenerateParameter(_)) => None,
                Err(e) => return Err(e.into()),
            };
            emit(
                out,
                &PretzelJson {
                    p,
                    q,
                    r,
                    determinant: k.determinant().to_string(),
                    witt_class: witt.map(|w| w.values().map(ToString::to_string).collect()),
                    boundary_zero,
                    signature,
                },
            )
        }
        Command::Dioph(a) => dioph(&a, out),
    }
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))
}

fn parallel_gauss_sum(
    f: &IntegerSymmetricForm,
    bound: u64,
    jobs: usize,
) -> Result<discriminant::GaussSumValue, CliError> {
    if jobs <= 1 {
        return Ok(discriminant::gauss_sum(f, bound)?);
    }
    // validates evenness and the bound before splitting
    let mut total = discriminant::gauss_sum_range(f, bound, 0..0)?;
    let n = discriminant::coset_count(f).unwrap_or(0);
    let chunk = n.div_ceil(jobs as u64 * 4).max(1);
    let ranges: Vec<_> = (0..n).step_by(chunk as usize).map(|s| s..(s + chunk).min(n)).collect();
    let parts = thread_pool(jobs)?.install(|| {
        ranges
            .into_par_iter()
            .map(|r| discriminant::gauss_sum_range(f, bound, r))
            .collect::<Result<Vec<_>, _>>()
    })?;
    for p in &parts {
        total.merge(p);
    }
    Ok(total)
}

fn dioph(a: &DiophArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let sign = Sign::from_i64(a.sign).expect("validated by the argument parser");
    if a.pq < 0 || a.r < 0 {
        return Err(CliError::Input("bounds must be nonnegative".into()));
    }
    let window = SearchWindow::symmetric(a.pq, a.r, a.m);
    let mut records: Vec<SolutionRecord> = if a.jobs <= 1 {
        diophantine::search(&window, sign, a.dedup)
    } else {
        let parts = window.split_p(a.jobs * 4);
        thread_pool(a.jobs)?.install(|| {
            parts.par_iter().flat_map_iter(|w| diophantine::search(w, sign, a.dedup)).collect()
        })
    };
    records.sort_unstable();

    if a.verify {
        return match sign {
            Sign::Minus => {
                let bad: Vec<_> = records.iter().filter(|s| s.p_plus_q_mod_8 != 0).collect();
                if bad.is_empty() {
                    writeln!(
                        out,
                        "restriction holds: {} solutions, all with p + q ≡ 0 mod 8",
                        records.len()
                    )?;
                    Ok(())
                } else {
                    Err(CliError::RestrictionFails(format!(
                        "{} of {} solutions have p + q ≢ 0 mod 8, first {:?}",
                        bad.len(),
                        records.len(),
                        bad[0]
                    )))
                }
            }
            Sign::Plus => {
                let find = |res: u8| {
                    records
                        .iter()
                        .find(|s| s.p_plus_q_mod_8 == res)
                        .copied()
                        .ok_or(DiophantineError::NotFound(res))
                };
                let (two, six) = (find(2)?, find(6)?);
                writeln!(
                    out,
                    "both residues occur: ({}, {}, {}, m = {}) has p + q ≡ 2, ({}, {}, {}, m = {}) has p + q ≡ 6",
                    two.p, two.q, two.r, two.m, six.p, six.q, six.r, six.m
                )?;
                Ok(())
            }
        };
    }

    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "q", "r", "m", "sign", "p_plus_q_mod_8"]).map_err(csv_error)?;
    for s in &records {
        w.write_record([
            s.p.to_string(),
            s.q.to_string(),
            s.r.to_string(),
            s.m.to_string(),
            s.sign.as_i64().to_string(),
            s.p_plus_q_mod_8.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Output(e.to_string())
}
