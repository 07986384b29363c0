//! The `schurpat` command line.
//!
//! Exit codes: 0 on success, 2 for infeasible or degenerate inputs (with a
//! JSON reason on stderr), 64 for usage errors, 70 when an internal check
//! fails.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::checks::{self, CheckConfig, Suite};
use crate::error::{Error, Result};
use crate::major::{self, RealSeq};
use crate::multipliers;
use crate::patterns::{self, Pattern};
use crate::schur_horn;
use crate::spectra::{parse_exponent, IdealNorm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

/// Environment variable consulted for the default seed.
pub const SEED_ENV: &str = "SCHURPAT_SEED";

#[derive(Debug, Parser)]
#[command(name = "schurpat", version, about = "Schur multipliers, majorisation and pattern decompositions")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for every stochastic step.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,

    /// Output format; defaults to csv for tables and json for matrices.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the artifact here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build V >= 0 with diag(V) = y and singular values below x.
    Witness {
        /// Target diagonal, comma separated.
        #[arg(long, value_parser = parse_seq)]
        y: RealSeq,
        /// Dominating sequence, comma separated.
        #[arg(long, value_parser = parse_seq)]
        x: RealSeq,
        /// Dimension; defaults to the length of y.
        #[arg(long)]
        n: Option<usize>,
        /// Majorisation comparison tolerance.
        #[arg(long, default_value_t = major::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Split a pattern into a row-bounded and a column-bounded part.
    Decompose {
        #[command(flatten)]
        source: PatternSource,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        c: usize,
    },
    /// Minimum set of rows and columns covering a pattern.
    Cover {
        #[command(flatten)]
        source: PatternSource,
    },
    /// Monte-Carlo lower bound on the multiplier norm of a pattern.
    Estimate {
        #[command(flatten)]
        source: PatternSource,
        /// schatten:P, schatten:inf or kyfan:K.
        #[arg(long, value_parser = parse_norm)]
        norm: IdealNorm,
        #[arg(long, default_value_t = 30)]
        trials: usize,
    },
    /// Diagonal multiplier ratios on the rank-one witness across sizes.
    Blowup {
        /// Schatten exponent in (0, 1]; fractions such as 1/3 are accepted.
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, value_parser = parse_sizes)]
        sizes: Sizes,
    },
    /// Multiplier estimates on truncated lacunary Hankel patterns.
    Hankel {
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, value_parser = parse_norm, default_value = "schatten:inf")]
        norm: IdealNorm,
        #[arg(long, value_parser = parse_sizes)]
        sizes: Sizes,
        #[arg(long, default_value_t = 30)]
        trials: usize,
    },
    /// Run the randomized property suites.
    Check {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 24)]
        max_n: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Diag,
    Toeplitz,
    Hankel,
    Lacunary,
    Random,
}

/// Either a pattern file (`-` for stdin) or a generator with parameters.
#[derive(Debug, Args)]
pub struct PatternSource {
    /// Pattern JSON file, or `-` for stdin.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    pub pattern: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub gen: Option<Generator>,
    /// Box size for generated patterns.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Toeplitz offsets j - k.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
    pub offsets: Vec<i64>,
    /// Hankel sums j + k.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub sums: Vec<usize>,
    /// Lacunary base.
    #[arg(long, default_value_t = 2.0)]
    pub q: f64,
    /// Cell probability for random patterns.
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
}

impl PatternSource {
    /// The seed, when the pattern depends on it.
    pub fn seed_used(&self, seed: u64) -> Option<u64> {
        (self.pattern.is_none() && self.gen == Some(Generator::Random)).then_some(seed)
    }

    pub fn load(&self, seed: u64) -> Result<Pattern> {
        if let Some(path) = &self.pattern {
            return if path.as_os_str() == "-" {
                Pattern::read_json(io::stdin().lock())
            } else {
                Pattern::read_json(File::open(path)?)
            };
        }
        let n = self.n;
        match self.gen.expect("clap requires --pattern or --gen") {
            Generator::Diag => Ok(Pattern::diagonal(n)),
            Generator::Toeplitz => Ok(Pattern::toeplitz(&self.offsets, n)),
            Generator::Hankel => Ok(Pattern::hankel(&self.sums, n)),
            Generator::Lacunary => Pattern::lacunary_hankel(self.q, n),
            Generator::Random => Pattern::random(n, self.density, seed),
        }
    }
}

fn parse_seq(s: &str) -> std::result::Result<RealSeq, String> {
    RealSeq::parse_list(s).map_err(|e| e.to_string())
}

fn parse_norm(s: &str) -> std::result::Result<IdealNorm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_p(s: &str) -> std::result::Result<f64, String> {
    parse_exponent(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_sizes(s: &str) -> std::result::Result<Sizes, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad size {t:?}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Sizes)
}

/// What a command produced: the artifact text, a one-line summary, and the
/// exit code it warrants.
pub struct Outcome {
    pub artifact: String,
    pub summary: String,
    pub code: i32,
}

impl Outcome {
    fn ok(artifact: String, summary: String) -> Self {
        Outcome {
            artifact,
            summary,
            code: EXIT_OK,
        }
    }
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn to_json(value: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// Executes a parsed configuration.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let seed = config.seed;
    let table = config.format.unwrap_or(Format::Csv);
    match &config.command {
        Command::Witness { y, x, n, tol } => {
            let y = RealSeq::with_tolerance(y.values().to_vec(), *tol)?;
            let x = RealSeq::with_tolerance(x.values().to_vec(), *tol)?;
            let n = n.unwrap_or(y.len().max(1));
            let v = schur_horn::kaftal_weiss_witness(&y, &x, n)?;
            let report = schur_horn::verify_witness(&v, &y, &x)?;
            let scale = x.values().iter().copied().fold(1.0, f64::max);
            let limit = 1e-8 * scale;
            if report.diag_error > limit || report.spectrum_excess > limit || report.min_eigenvalue < -limit {
                return Err(Error::Internal(format!("witness failed verification: {report:?}")));
            }
            let summary = format!(
                "witness n={} diag_error={:e} spectrum_excess={:e} submajorised={}",
                report.n, report.diag_error, report.spectrum_excess, report.submajorised
            );
            let artifact = match config.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&json!({ "matrix": v, "report": report }))?,
                Format::Csv => csv_table(
                    &["n", "diag_error", "spectrum_excess", "min_eigenvalue", "submajorised"],
                    [vec![
                        report.n.to_string(),
                        report.diag_error.to_string(),
                        report.spectrum_excess.to_string(),
                        report.min_eigenvalue.to_string(),
                        report.submajorised.to_string(),
                    ]],
                )?,
            };
            Ok(Outcome::ok(artifact, summary))
        }
        Command::Decompose { source, r, c } => {
            let pattern = source.load(seed)?;
            let result = patterns::dd_decompose(&pattern, *r, *c);
            let feasible = result.is_some();
            let artifact = match table {
                Format::Json => to_json(&json!({
                    "n": pattern.n(),
                    "cells": pattern.len(),
                    "r": r,
                    "c": c,
                    "seed": source.seed_used(seed),
                    "feasible": feasible,
                    "decomposition": result,
                }))?,
                Format::Csv => {
                    let rows: Vec<Vec<String>> = match &result {
                        Some(d) => pattern
                            .cells()
                            .map(|(i, j)| {
                                let part = match d.part((i, j)) {
                                    Some(patterns::Part::Row) => "R",
                                    _ => "C",
                                };
                                vec![i.to_string(), j.to_string(), part.to_string()]
                            })
                            .collect(),
                        None => Vec::new(),
                    };
                    csv_table(&["row", "col", "part"], rows)?
                }
            };
            let summary = format!(
                "decompose n={} cells={} r={r} c={c} {}",
                pattern.n(),
                pattern.len(),
                if feasible { "feasible" } else { "infeasible" }
            );
            Ok(Outcome {
                artifact,
                summary,
                code: if feasible { EXIT_OK } else { EXIT_DOMAIN },
            })
        }
        Command::Cover { source } => {
            let pattern = source.load(seed)?;
            let cover = patterns::minimal_cover(&pattern);
            let artifact = match table {
                Format::Json => to_json(&json!({
                    "n": pattern.n(),
                    "cells": pattern.len(),
                    "size": cover.len(),
                    "seed": source.seed_used(seed),
                    "rows": cover.rows,
                    "columns": cover.columns,
                }))?,
                Format::Csv => csv_table(
                    &["line", "index"],
                    cover
                        .rows
                        .iter()
                        .map(|r| vec!["row".to_string(), r.to_string()])
                        .chain(cover.columns.iter().map(|c| vec!["col".to_string(), c.to_string()])),
                )?,
            };
            let summary = format!("cover n={} cells={} size={}", pattern.n(), pattern.len(), cover.len());
            Ok(Outcome::ok(artifact, summary))
        }
        Command::Estimate { source, norm, trials } => {
            let pattern = source.load(seed)?;
            let estimate = multipliers::estimate_multiplier_norm(&pattern, *norm, *trials, seed)?;
            let artifact = match table {
                Format::Json => to_json(&json!({
                    "n": pattern.n(),
                    "cells": pattern.len(),
                    "norm": norm,
                    "trials": trials,
                    "seed": seed,
                    "estimate": estimate,
                }))?,
                Format::Csv => csv_table(
                    &["n", "cells", "norm", "trials", "seed", "estimate"],
                    [vec![
                        pattern.n().to_string(),
                        pattern.len().to_string(),
                        norm.to_string(),
                        trials.to_string(),
                        seed.to_string(),
                        estimate.to_string(),
                    ]],
                )?,
            };
            let summary = format!("estimate norm={norm} trials={trials} seed={seed} lower_bound={estimate}");
            Ok(Outcome::ok(artifact, summary))
        }
        Command::Blowup { p, sizes } => {
            let report = multipliers::diagonal_blowup(*p, &sizes.0)?;
            let artifact = match table {
                Format::Json => to_json(&report)?,
                Format::Csv => csv_table(
                    &["size", "ratio", "exponent"],
                    report
                        .sizes
                        .iter()
                        .zip(&report.ratios)
                        .map(|(n, r)| vec![n.to_string(), r.to_string(), fmt_opt(report.fit_exponent)]),
                )?,
            };
            let summary = format!(
                "blowup p={p} sizes={} exponent={}",
                report.sizes.len(),
                fmt_opt(report.fit_exponent)
            );
            Ok(Outcome::ok(artifact, summary))
        }
        Command::Hankel { q, norm, sizes, trials } => {
            let report = multipliers::hankel_probe(*q, *norm, &sizes.0, *trials, seed)?;
            let artifact = match table {
                Format::Json => to_json(&report)?,
                Format::Csv => {
                    let r = &report.report;
                    let rows = (0..r.sizes.len()).map(|i| {
                        vec![
                            r.sizes[i].to_string(),
                            report.cells[i].to_string(),
                            report.lis_lengths[i].to_string(),
                            r.ratios[i].to_string(),
                            fmt_opt(r.fit_exponent),
                            seed.to_string(),
                        ]
                    });
                    csv_table(&["size", "cells", "lis_length", "ratio", "exponent", "seed"], rows)?
                }
            };
            let summary = format!(
                "hankel q={q} norm={norm} seed={seed} bounded_heuristic={}",
                report.bounded_heuristic
            );
            Ok(Outcome::ok(artifact, summary))
        }
        Command::Check { suite, cases, max_n, tol } => {
            let cfg = CheckConfig {
                seed,
                cases: *cases,
                tol: *tol,
                max_n: *max_n,
            };
            let outcomes = checks::run_suite(*suite, &cfg)?;
            let failed: usize = outcomes.iter().filter(|o| !o.passed()).count();
            let artifact = match table {
                Format::Json => to_json(&json!({ "seed": seed, "suite": suite.to_string(), "checks": outcomes }))?,
                Format::Csv => csv_table(
                    &["suite", "name", "cases", "failures", "worst", "seed"],
                    outcomes.iter().map(|o| {
                        vec![
                            o.suite.clone(),
                            o.name.to_string(),
                            o.cases.to_string(),
                            o.failures.to_string(),
                            o.worst.to_string(),
                            seed.to_string(),
                        ]
                    }),
                )?,
            };
            let summary = format!(
                "check suite={suite} seed={seed} passed={} failed={failed}",
                outcomes.len() - failed
            );
            Ok(Outcome {
                artifact,
                summary,
                code: if failed == 0 { EXIT_OK } else { EXIT_INTERNAL },
            })
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_DOMAIN,
    }
}

fn reason(err: &Error) -> &'static str {
    match err {
        Error::InvalidInput(_) => "invalid-input",
        Error::InvalidParameter(_) => "invalid-parameter",
        Error::Infeasible { .. } => "infeasible",
        Error::Degenerate(_) => "degenerate",
        Error::Internal(_) => "internal",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
        Error::Csv(_) => "csv",
    }
}

/// Parses `args`, runs the command and writes to the given streams.
/// Returns the process exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match run(&config) {
        Ok(outcome) => {
            let written = match &config.output {
                Some(path) => std::fs::write(path, &outcome.artifact)
                    .map(|_| writeln!(stdout, "{}", outcome.summary).is_ok()),
                None => Ok(stdout.write_all(outcome.artifact.as_bytes()).is_ok()
                    && writeln!(stderr, "{}", outcome.summary).is_ok()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "{}", json!({ "error": "io", "message": e.to_string() }));
                return EXIT_DOMAIN;
            }
            outcome.code
        }
        Err(err) => {
            let _ = writeln!(stderr, "{}", json!({ "error": reason(&err), "message": err.to_string() }));
            exit_code(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with(std::iter::once("schurpat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_64() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["blowup", "--p", "0.5"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["cover", "--gen", "diag", "--pattern", "x.json"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn domain_errors_exit_2_with_reason() {
        let (code, _, err) = run_args(&["blowup", "--p", "1.5", "--sizes", "2,4"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("\"error\":\"invalid-parameter\""));
        let (code, _, err) = run_args(&["witness", "--y", "1,0", "--x", "0.5,0.5"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("infeasible"));
    }

    #[test]
    fn blowup_csv() {
        let (code, out, _) = run_args(&["blowup", "--p", "1/2", "--sizes", "2,4,8"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "size,ratio,exponent");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn decompose_reports_feasibility_through_the_exit_code() {
        let (code, out, _) = run_args(&["decompose", "--gen", "diag", "--n", "5", "--r", "1", "--c", "0"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().filter(|l| l.ends_with(",R")).count(), 5);
        let (code, out, _) = run_args(&[
            "--format", "json", "decompose", "--gen", "random", "--density", "1", "--n", "3", "--r", "1", "--c", "1",
        ]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(out.contains("\"feasible\": false"));
    }

    #[test]
    fn toeplitz_generator_accepts_negative_offsets() {
        let (code, out, _) = run_args(&["--format", "json", "cover", "--gen", "toeplitz", "--offsets", "-1,2", "--n", "6"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"cells\": 9"));
    }
}
