use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use hurwitz_core::mirror::{f01_in_z, f02_closed_in_z, spectral_curve_y_of_x, w01_coefficients};
use hurwitz_core::oracle::{EnumerationLimits, OracleError};
use hurwitz_core::profiles::compositions;
use hurwitz_core::rational::to_text;
use hurwitz_core::verify;
use hurwitz_core::{HurwitzIndex, IndexError, MemoTable, VerificationReport};
use thiserror::Error;

use crate::output::{ComputeOutput, SeriesOutput, SeriesTerm, TableRow, CSV_HEADER};
use crate::{ComputeArgs, SeriesArgs, SeriesFormat, Suite, TableArgs, TableFormat, VerifyArgs, Which};

/// Largest degree `table` will enumerate.
pub const TABLE_MAX_DEGREE: u64 = 16;
/// Largest genus `table` will enumerate.
pub const TABLE_MAX_GENUS: u64 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Range(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

type Result<T> = std::result::Result<T, CliError>;

pub fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let idx = HurwitzIndex::new(args.r, args.genus, args.mu.0)?;
    let mut memo = MemoTable::new();
    let arrowed = memo.arrowed(&idx);
    let hurwitz = memo.orbifold(&idx);
    let mut out = io::stdout().lock();
    if args.json {
        let record = ComputeOutput {
            r: idx.r(),
            g: idx.genus(),
            mu: idx.mu().to_vec(),
            n: idx.n(),
            d: idx.degree(),
            m: idx.faces(),
            s: idx.edges().ok(),
            arrowed: to_text(&arrowed),
            hurwitz: to_text(&hurwitz),
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
    } else {
        let value = if args.arrowed { arrowed } else { hurwitz };
        writeln!(out, "{}", to_text(&value))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn table_rows(r: u64, genus: (u64, u64), degree_max: u64) -> Vec<TableRow> {
    let mut memo = MemoTable::new();
    let mut rows = Vec::new();
    for g in genus.0..=genus.1 {
        for d in (1..=degree_max).filter(|d| d % r == 0) {
            for mu in compositions(d) {
                let idx = HurwitzIndex::new(r, g, mu).expect("compositions are valid profiles");
                let s = idx.edges().expect("r divides d");
                rows.push(TableRow {
                    r,
                    g,
                    mu: idx.mu().to_vec(),
                    n: idx.n(),
                    d,
                    s,
                    arrowed: to_text(&memo.arrowed(&idx)),
                    hurwitz: to_text(&memo.orbifold(&idx)),
                });
            }
        }
    }
    rows
}

pub fn table(args: TableArgs) -> Result<ExitCode> {
    if args.degree_max > TABLE_MAX_DEGREE {
        return Err(CliError::Range(format!("--degree-max is limited to {TABLE_MAX_DEGREE}")));
    }
    if args.genus.max > TABLE_MAX_GENUS {
        return Err(CliError::Range(format!("genus is limited to {TABLE_MAX_GENUS}")));
    }
    let sink: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(File::create(path).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let rows = table_rows(args.r, (args.genus.min, args.genus.max), args.degree_max);
    match args.format {
        TableFormat::Csv => {
            let mut writer = csv::Writer::from_writer(sink);
            writer.write_record(CSV_HEADER)?;
            for row in &rows {
                writer.write_record(row.csv_record())?;
            }
            writer.flush()?;
        }
        TableFormat::Json => {
            let mut sink = sink;
            writeln!(sink, "{}", serde_json::to_string_pretty(&rows)?)?;
            sink.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn series_output(which: Which, r: u64, order: u64) -> SeriesOutput {
    let n = order as usize;
    let (name, variables, terms): (&str, Vec<&str>, Vec<SeriesTerm>) = match which {
        Which::Curve => {
            let y = spectral_curve_y_of_x(r, n);
            ("curve", vec!["x"], univariate_terms(y.terms()))
        }
        Which::F01 => ("f01", vec!["z"], univariate_terms(f01_in_z(r, n).terms())),
        Which::F02 => {
            let f = f02_closed_in_z(r, n);
            let terms = f
                .terms()
                .map(|((i, j), c)| SeriesTerm { exponent: vec![i, j], coefficient: to_text(c) })
                .collect();
            ("f02", vec!["z1", "z2"], terms)
        }
        Which::W01 => {
            let terms = w01_coefficients(r, n)
                .into_iter()
                .map(|(d, c)| SeriesTerm { exponent: vec![d as usize], coefficient: to_text(&c) })
                .collect();
            ("w01", vec!["x"], terms)
        }
    };
    SeriesOutput {
        which: name.to_string(),
        r,
        order,
        variables: variables.into_iter().map(String::from).collect(),
        terms,
    }
}

fn univariate_terms<'a>(terms: impl Iterator<Item = (usize, &'a hurwitz_core::Rational)>) -> Vec<SeriesTerm> {
    terms.map(|(k, c)| SeriesTerm { exponent: vec![k], coefficient: to_text(c) }).collect()
}

pub fn series(args: SeriesArgs) -> Result<ExitCode> {
    let dump = series_output(args.which, args.r, args.order);
    let mut out = io::stdout().lock();
    match args.format {
        SeriesFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&dump)?)?,
        SeriesFormat::Text => {
            for term in &dump.terms {
                let exp: Vec<String> = term.exponent.iter().map(usize::to_string).collect();
                writeln!(out, "{} {}", exp.join(","), term.coefficient)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_suite(suite: Suite, args: &VerifyArgs) -> Result<VerificationReport> {
    let rs = &args.r.0;
    let order = |default: u64| args.order.unwrap_or(default) as usize;
    let collect = |name: &str, f: &dyn Fn(u64) -> VerificationReport| {
        let mut all = VerificationReport::new(name);
        for &r in rs {
            all.absorb(f(r));
        }
        all
    };
    let report = match suite {
        Suite::Jpt => collect("jpt", &|r| verify::verify_jpt(r, args.max_degree)),
        Suite::Cayley => verify::verify_cayley(args.max),
        Suite::Oracle => verify::verify_against_oracle(rs, args.d_max, args.s_max, EnumerationLimits::default())?,
        Suite::F01 => collect("f01", &|r| verify::verify_f01(r, order(12))),
        Suite::F02 => collect("f02", &|r| verify::verify_f02(r, order(10))),
        Suite::Ode => collect("ode", &|r| verify::verify_spectral_ode(r, order(20))),
        Suite::Pde => collect("pde", &|r| verify::verify_f02_pde(r, order(10))),
        Suite::Scaling => collect("scaling", &|r| verify::verify_r_scaling(r, args.m_max)),
        Suite::All => {
            let mut all = VerificationReport::new("all");
            for s in [Suite::Jpt, Suite::Cayley, Suite::Oracle, Suite::F01, Suite::F02, Suite::Ode, Suite::Pde, Suite::Scaling] {
                all.absorb(run_suite(s, args)?);
            }
            all
        }
    };
    Ok(report)
}

pub fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let report = run_suite(args.suite, &args)?;
    let mut out = io::stdout().lock();
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(ExitCode::from(exit_status(&report)))
}

/// 0 when every case passed, 1 otherwise.
pub fn exit_status(report: &VerificationReport) -> u8 {
    if report.passed() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hurwitz_core::rational::{frac, int};

    #[test]
    fn failing_report_maps_to_exit_1() {
        let mut rep = VerificationReport::new("x");
        rep.check("ok", &int(1), &int(1));
        assert_eq!(exit_status(&rep), 0);
        rep.check("bad", &frac(1, 2), &frac(1, 3));
        assert_eq!(exit_status(&rep), 1);
    }

    #[test]
    fn table_rows_are_admissible_and_ordered() {
        let rows = table_rows(2, (0, 1), 4);
        assert!(rows.iter().all(|row| row.d % 2 == 0 && row.s >= 0));
        assert_eq!(rows.first().map(|r| (r.g, r.mu.clone())), Some((0, vec![2])));
        assert!(rows.windows(2).all(|w| (w[0].g, w[0].d) <= (w[1].g, w[1].d)));
        let anchor = rows.iter().find(|r| r.g == 0 && r.mu == [3, 1]).unwrap();
        assert_eq!((anchor.arrowed.as_str(), anchor.hurwitz.as_str(), anchor.s), ("9/2", "3/2", 2));
        assert!(table_rows(3, (0, 0), 2).is_empty());
    }

    #[test]
    fn series_output_skips_zero_terms() {
        let dump = series_output(Which::Curve, 2, 6);
        let exps: Vec<usize> = dump.terms.iter().map(|t| t.exponent[0]).collect();
        assert_eq!(exps, [2, 4, 6]);
        assert_eq!(dump.variables, ["x"]);
    }
}
