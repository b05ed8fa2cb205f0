//! Command-line front end: every evaluator, the verification suites, the
//! sequence emitters, and exact table generation.
//!
//! Exit codes are a stable contract: 0 for success/agreement, 1 for a
//! verification failure or cross-method disagreement, 2 for usage or domain
//! errors. Every JSON output follows one schema,
//! {manifest, command, results: [{id, inputs, expected?, actual, status}]},
//! with a run manifest embedded for reproducibility. b-file output is plain
//! "index value" lines and is byte-deterministic across runs.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::asymptotic;
use crate::closed_form::{self, FormulaId};
use crate::direct;
use crate::dumont_foata;
use crate::error::{Error, Result};
use crate::family::{self, FamilyId};
use crate::numeric::format_rational;
use crate::recurrence::{RecurrenceTable, SumKind};
use crate::report::{CheckResult, CheckStatus, VerificationReport};
use crate::series;

#[derive(Debug, Parser)]
#[command(
    name = "centred-sums",
    version,
    about = "Exact centred binomial sums, their polynomial families, and cross-validation",
    after_help = SEQUENCE_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (bfile is only valid for integer sequence output)
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Worker threads for verification suites (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

const SEQUENCE_HELP: &str = "\
Sequence names for `oeis` (offset = first b-file index):
  secant          offset 0   secant numbers 1, 1, 5, 61, 1385, ...
  genocchi        offset 1   constant terms of -P_r(n)/n: -1, 1, -3, 17, ...
  reduced-tangent offset 1   constant terms of (-1)^{r-1} Q_r(n)/n: 1, 1, 4, 34, ...
  pbar-at-zero    offset 0   Pbar_r(0): 1, -3, 25, -427, ...
  qbar-at-one     offset 0   Qbar_r(1) = (3^{2r}+3)/4: 1, 3, 21, 183, ...
  p-leading       offset 0   leading coefficients r!
  q-leading       offset 0   leading coefficients (2r)!/(2^r r!)
  pbar-leading    offset 0   leading coefficients 4^r r!
  qbar-leading    offset 0   leading coefficients (2r)!/r!
  p-triangle      offset 1   rows of (-1)^r P_r(-n)/n, descending powers, r >= 1
  q-triangle      offset 1   rows of (-1)^r Q_r(-n)/n, descending powers, r >= 1
  qbar-triangle   offset 1   rows of Qbar_r(-n), descending powers, r >= 1
  pbar-triangle   offset 1   rows of Pbar_r(n), descending powers, r >= 0
Triangle b-files index flattened entries from 1 in row order.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lowercase")]
enum MethodArg {
    Direct,
    Recurrence,
    Family,
    Df,
    Carlitz,
    Lagrange,
    Gz,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "P")]
    P,
    #[value(name = "Pbar")]
    Pbar,
    #[value(name = "Q")]
    Q,
    #[value(name = "Qbar")]
    Qbar,
    #[value(name = "F")]
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "kebab-case")]
enum SuiteArg {
    All,
    ClosedForms,
    Egf,
    Tables,
    Df,
    Asymptotics,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate U_r(n) by one method or by every applicable route
    Compute {
        #[arg(long)]
        r: u32,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
    },
    /// Print a family polynomial (P, Pbar, Q, Qbar) or a trivariate F_r
    Poly {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        r: u32,
    },
    /// Emit terms of a classical sequence carried by the polynomials
    Oeis {
        #[arg(long)]
        name: String,
        #[arg(long)]
        count: u32,
    },
    /// Run a verification suite; exit 0 iff every check passes
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Highest order for the cross-method matrix
        #[arg(long, default_value_t = 8)]
        r_max: u32,
        /// Highest argument for the cross-method matrix / egf suite
        #[arg(long, default_value_t = 30)]
        n_max: u64,
        /// Truncation order for the generating-function suite
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Exact value table over inclusive ranges, e.g. --r 0..8 --n 0..40
    Table {
        #[arg(long, value_parser = parse_range)]
        r: (u64, u64),
        #[arg(long, value_parser = parse_range)]
        n: (u64, u64),
    },
    /// Monte Carlo random-walk moment against the exact value
    Walk {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_range(text: &str) -> std::result::Result<(u64, u64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected an inclusive range like 0..8, got '{text}'"))?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad range start: {e}"))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Debug, Serialize)]
struct RunManifest {
    command: String,
    parameters: BTreeMap<String, String>,
    artifact_version: String,
    timestamp: String,
}

#[derive(Debug, Serialize)]
struct JsonOutput<'a> {
    manifest: &'a RunManifest,
    command: &'a str,
    results: &'a [CheckResult],
}

fn manifest(command: &str, parameters: &[(&str, String)]) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        parameters: parameters
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        artifact_version: crate::VERSION.to_string(),
        timestamp: chrono::Utc::now().to_rfc3339(),
    }
}

fn render_json(manifest: &RunManifest, results: &[CheckResult]) -> String {
    let out = JsonOutput {
        manifest,
        command: &manifest.command,
        results,
    };
    serde_json::to_string_pretty(&out).expect("report serializes")
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((code, output)) => {
            println!("{output}");
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<(i32, String)> {
    let format = cli.format;
    match cli.command {
        Command::Compute { r, n, method } => cmd_compute(r, n, method, format),
        Command::Poly { family, r } => cmd_poly(family, r, format),
        Command::Oeis { name, count } => cmd_oeis(&name, count, format),
        Command::Verify {
            suite,
            r_max,
            n_max,
            order,
        } => match cli.jobs {
            Some(threads) => rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::Usage(format!("could not build thread pool: {e}")))?
                .install(|| cmd_verify(suite, r_max, n_max, order, format)),
            None => cmd_verify(suite, r_max, n_max, order, format),
        },
        Command::Table { r, n } => cmd_table(r, n, format),
        Command::Walk {
            r,
            n,
            samples,
            seed,
        } => cmd_walk(r, n, samples, seed, format),
    }
}

fn reject_formats(format: OutputFormat, supported: &[OutputFormat], command: &str) -> Result<()> {
    if supported.contains(&format) {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "format {format:?} is not supported by `{command}`"
        )))
    }
}

// ---------------------------------------------------------------------------
// compute

fn cmd_compute(r: u32, n: i64, method: MethodArg, format: OutputFormat) -> Result<(i32, String)> {
    reject_formats(
        format,
        &[OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv],
        "compute",
    )?;
    let manifest = manifest(
        "compute",
        &[
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("method", format!("{method:?}").to_lowercase()),
        ],
    );
    let reference = direct::u_direct(r, n);
    // negative arguments are 0 by the summation convention, whatever the method
    let rows: Vec<(String, num_rational::BigRational)> = if n < 0 {
        vec![("direct".to_string(), reference.clone())]
    } else {
        let n = n as u64;
        match method {
            MethodArg::Direct => vec![("direct".to_string(), reference.clone())],
            MethodArg::Recurrence => vec![(
                "recurrence".to_string(),
                RecurrenceTable::new(SumKind::U).eval(r, n),
            )],
            MethodArg::Family => vec![("family".to_string(), family::u_from_family(r, n))],
            MethodArg::Df => vec![("df".to_string(), dumont_foata::u_from_df(r, n)?)],
            MethodArg::Carlitz => formula_rows(
                r,
                n,
                &[
                    FormulaId::EvenA2,
                    FormulaId::EvenB2,
                    FormulaId::OddEven2,
                    FormulaId::OddOdd2,
                ],
                "explicit double-sum formulas",
            )?,
            MethodArg::Lagrange => formula_rows(
                r,
                n,
                &[
                    FormulaId::LagrangeEven,
                    FormulaId::LagrangeOddEven,
                    FormulaId::LagrangeOddOdd,
                ],
                "interpolation formulas",
            )?,
            MethodArg::Gz => formula_rows(
                r,
                n,
                &[FormulaId::GZEven, FormulaId::GZOdd],
                "even-argument formulas (S-bridge; argument must be even)",
            )?,
            MethodArg::All => {
                let mut rows = vec![("direct".to_string(), reference.clone())];
                rows.extend(
                    closed_form::applicable_routes(r, n)
                        .into_iter()
                        .map(|(route, tagged)| (route, tagged.value)),
                );
                rows
            }
        }
    };
    let agree = rows.iter().all(|(_, v)| *v == reference);
    let results: Vec<CheckResult> = rows
        .iter()
        .map(|(route, value)| {
            CheckResult::compare(
                route.clone(),
                &[("r", r.to_string()), ("n", n.to_string())],
                format_rational(&reference),
                format_rational(value),
                *value == reference,
            )
        })
        .collect();
    let text = match format {
        OutputFormat::Json => render_json(&manifest, &results),
        OutputFormat::Csv => {
            let mut out = String::from("route,value\n");
            for (route, value) in &rows {
                out.push_str(&format!("{route},{}\n", format_rational(value)));
            }
            out.trim_end().to_string()
        }
        _ => {
            if rows.len() == 1 {
                format_rational(&rows[0].1)
            } else {
                let width = rows.iter().map(|(route, _)| route.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (route, value) in &rows {
                    out.push_str(&format!("{route:<width$}  {}\n", format_rational(value)));
                }
                out.push_str(if agree {
                    "verdict: AGREE"
                } else {
                    "verdict: DISAGREE"
                });
                out
            }
        }
    };
    Ok((if agree { 0 } else { 1 }, text))
}

fn formula_rows(
    r: u32,
    n: u64,
    candidates: &[FormulaId],
    description: &str,
) -> Result<Vec<(String, num_rational::BigRational)>> {
    let mut rows = Vec::new();
    for &formula in candidates {
        if let Some((fr, fn_)) = formula.target_params(r, n) {
            rows.push((
                format!("formula/{}", formula.name()),
                closed_form::u_closed(formula, fr, fn_)?,
            ));
        }
    }
    if rows.is_empty() {
        return Err(Error::OutsideValidity {
            formula: description.to_string(),
            required: "a stated display covering this (order, argument) parity and range"
                .to_string(),
            r: r as i64,
            n: n as i64,
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// poly

fn cmd_poly(which: FamilyArg, r: u32, format: OutputFormat) -> Result<(i32, String)> {
    reject_formats(format, &[OutputFormat::Text, OutputFormat::Json], "poly")?;
    let manifest = manifest(
        "poly",
        &[("family", format!("{which:?}")), ("r", r.to_string())],
    );
    let (id, rendered, coefficients) = match which {
        FamilyArg::F => {
            let poly = dumont_foata::df_poly(r)?;
            let terms: Vec<serde_json::Value> = poly
                .terms()
                .map(|(&(i, j, k), c)| serde_json::json!([i, j, k, c.to_string()]))
                .collect();
            (
                format!("poly/F_{r}"),
                poly.to_string(),
                serde_json::Value::Array(terms).to_string(),
            )
        }
        _ => {
            let family = match which {
                FamilyArg::P => FamilyId::P,
                FamilyArg::Pbar => FamilyId::Pbar,
                FamilyArg::Q => FamilyId::Q,
                FamilyArg::Qbar => FamilyId::Qbar,
                FamilyArg::F => unreachable!(),
            };
            let poly = family::family_poly(family, r);
            let coeffs: Vec<String> = poly.coeffs().iter().map(BigInt::to_string).collect();
            (
                format!("poly/{family}_{r}"),
                poly.to_factored_string("n"),
                serde_json::to_string(&coeffs).expect("strings serialize"),
            )
        }
    };
    let results = vec![CheckResult {
        id,
        inputs: BTreeMap::from([
            ("family".to_string(), format!("{which:?}")),
            ("r".to_string(), r.to_string()),
            ("rendered".to_string(), rendered.clone()),
        ]),
        expected: None,
        actual: coefficients,
        status: CheckStatus::Pass,
    }];
    let text = match format {
        OutputFormat::Json => render_json(&manifest, &results),
        _ => rendered,
    };
    Ok((0, text))
}

// ---------------------------------------------------------------------------
// oeis

/// Named sequence -> (b-file offset, terms).
fn sequence_terms(name: &str, count: u32) -> Result<(u64, Vec<BigInt>)> {
    use family::{SequenceKind, TriangleKind};
    let flatten = |kind: TriangleKind| -> Vec<BigInt> {
        let mut terms = Vec::with_capacity(count as usize);
        // every row has at least one entry, so count rows always suffice
        for row in family::triangle_rows(kind, count.max(2)) {
            for entry in row {
                if terms.len() == count as usize {
                    return terms;
                }
                terms.push(entry);
            }
        }
        terms
    };
    let terms = match name {
        "secant" => (0, family::secant_numbers(count)),
        "genocchi" => (1, family::classic_sequences(SequenceKind::Genocchi, count)),
        "reduced-tangent" => (
            1,
            family::classic_sequences(SequenceKind::ReducedTangent, count),
        ),
        "pbar-at-zero" => (
            0,
            family::classic_sequences(SequenceKind::PbarAtZero, count),
        ),
        "qbar-at-one" => (
            0,
            (0..count)
                .map(|r| family::special_values(FamilyId::Qbar, r).at_one)
                .collect(),
        ),
        "p-leading" => (0, family::leading_sequence(FamilyId::P, count)),
        "q-leading" => (0, family::leading_sequence(FamilyId::Q, count)),
        "pbar-leading" => (0, family::leading_sequence(FamilyId::Pbar, count)),
        "qbar-leading" => (0, family::leading_sequence(FamilyId::Qbar, count)),
        "p-triangle" => (1, flatten(TriangleKind::P)),
        "q-triangle" => (1, flatten(TriangleKind::Q)),
        "qbar-triangle" => (1, flatten(TriangleKind::Qbar)),
        "pbar-triangle" => (1, flatten(TriangleKind::Pbar)),
        other => {
            return Err(Error::UnknownSequence {
                name: other.to_string(),
                valid: "secant, genocchi, reduced-tangent, pbar-at-zero, qbar-at-one, \
                        p-leading, q-leading, pbar-leading, qbar-leading, \
                        p-triangle, q-triangle, qbar-triangle, pbar-triangle"
                    .to_string(),
            })
        }
    };
    Ok(terms)
}

fn cmd_oeis(name: &str, count: u32, format: OutputFormat) -> Result<(i32, String)> {
    if count == 0 {
        return Err(Error::Usage("count must be at least 1".to_string()));
    }
    let (offset, terms) = sequence_terms(name, count)?;
    let manifest = manifest(
        "oeis",
        &[("name", name.to_string()), ("count", count.to_string())],
    );
    let results: Vec<CheckResult> = terms
        .iter()
        .enumerate()
        .map(|(i, v)| CheckResult {
            id: format!("seq/{name}/{}", offset + i as u64),
            inputs: BTreeMap::from([("index".to_string(), (offset + i as u64).to_string())]),
            expected: None,
            actual: v.to_string(),
            status: CheckStatus::Pass,
        })
        .collect();
    let text = match format {
        OutputFormat::Json => render_json(&manifest, &results),
        OutputFormat::Bfile => terms
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{} {v}", offset + i as u64))
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Csv => {
            let mut out = String::from("index,value\n");
            for (i, v) in terms.iter().enumerate() {
                out.push_str(&format!("{},{v}\n", offset + i as u64));
            }
            out.trim_end().to_string()
        }
        OutputFormat::Text => terms
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    };
    Ok((0, text))
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(
    suite: SuiteArg,
    r_max: u32,
    n_max: u64,
    order: usize,
    format: OutputFormat,
) -> Result<(i32, String)> {
    reject_formats(
        format,
        &[OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv],
        "verify",
    )?;
    let manifest = manifest(
        "verify",
        &[
            ("suite", format!("{suite:?}").to_lowercase()),
            ("r_max", r_max.to_string()),
            ("n_max", n_max.to_string()),
            ("order", order.to_string()),
        ],
    );
    let mut report = VerificationReport::new();
    let suites: Vec<SuiteArg> = match suite {
        SuiteArg::All => vec![
            SuiteArg::ClosedForms,
            SuiteArg::Egf,
            SuiteArg::Tables,
            SuiteArg::Df,
            SuiteArg::Asymptotics,
        ],
        single => vec![single],
    };
    for one in suites {
        report.merge(run_suite(one, r_max, n_max, order)?);
    }
    report.sort();
    let exit = if report.passed() { 0 } else { 1 };
    let text = match format {
        OutputFormat::Json => render_json(&manifest, &report.checks),
        OutputFormat::Csv => {
            let mut out = String::from("id,status,expected,actual\n");
            for c in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    c.id,
                    if c.passed() { "pass" } else { "fail" },
                    c.expected.as_deref().unwrap_or(""),
                    c.actual
                ));
            }
            out.trim_end().to_string()
        }
        _ => {
            let mut out = String::new();
            for failure in report.failures().iter().take(50) {
                out.push_str(&format!(
                    "FAIL {} expected {} got {}\n",
                    failure.id,
                    failure.expected.as_deref().unwrap_or("(assertion)"),
                    failure.actual
                ));
            }
            out.push_str(&format!("verify: {}", report.summary()));
            out
        }
    };
    Ok((exit, text))
}

fn run_suite(suite: SuiteArg, r_max: u32, n_max: u64, order: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    match suite {
        SuiteArg::ClosedForms => {
            report.merge(closed_form::cross_validate(r_max, n_max));
        }
        SuiteArg::Egf => {
            let n_cap = n_max.min(8);
            for n in 0..=n_cap {
                report.merge(series::verify_egf_even(n, order));
                report.merge(series::verify_egf_s_even(n, order));
                report.merge(series::verify_sinh_cosh_identity(n, order));
            }
            for n in 1..=n_cap.max(1) {
                report.merge(series::verify_egf_odd_even(n, order));
                report.merge(series::verify_egf_odd_odd(n, order));
            }
            for (x, y) in [
                (crate::numeric::rat_int(1), crate::numeric::rat_int(1)),
                (crate::numeric::rat(1, 2), crate::numeric::rat_int(1)),
                (crate::numeric::rat(3, 2), crate::numeric::rat(1, 2)),
                (crate::numeric::rat(-5, 2), crate::numeric::rat(2, 3)),
            ] {
                report.merge(series::verify_carlitz_egf(&x, &y, order)?);
            }
        }
        SuiteArg::Tables => {
            report.merge(family::verify_polynomial_tables());
            report.merge(family::verify_special_values(8));
        }
        SuiteArg::Df => {
            report.merge(dumont_foata::verify_symmetry(7));
            report.merge(dumont_foata::verify_carlitz_equivalence(7, 50, 0x5eed));
            report.merge(dumont_foata::verify_special_value(8));
            report.merge(dumont_foata::verify_family_bridges(8));
            report.merge(dumont_foata::verify_sum_bridges(15, 30));
        }
        SuiteArg::Asymptotics => {
            report.merge(asymptotic::verify_error_decay(6, 5));
        }
        SuiteArg::All => unreachable!("expanded by the caller"),
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// table

fn cmd_table(
    (r_lo, r_hi): (u64, u64),
    (n_lo, n_hi): (u64, u64),
    format: OutputFormat,
) -> Result<(i32, String)> {
    reject_formats(
        format,
        &[OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv],
        "table",
    )?;
    let manifest = manifest(
        "table",
        &[
            ("r", format!("{r_lo}..{r_hi}")),
            ("n", format!("{n_lo}..{n_hi}")),
        ],
    );
    let table = RecurrenceTable::new(SumKind::U);
    let mut rows = Vec::new();
    for r in r_lo..=r_hi {
        for n in n_lo..=n_hi {
            let value = table.eval(r as u32, n);
            // dyadic: the reduced denominator is a power of two
            let den_log2 = value.denom().trailing_zeros().unwrap_or(0);
            debug_assert_eq!(value.denom(), &(BigInt::one() << den_log2));
            rows.push((r, n, value.numer().clone(), den_log2, value));
        }
    }
    let results: Vec<CheckResult> = rows
        .iter()
        .map(|(r, n, numer, den_log2, value)| CheckResult {
            id: format!("u/r={r:02}/n={n:02}"),
            inputs: BTreeMap::from([
                ("r".to_string(), r.to_string()),
                ("n".to_string(), n.to_string()),
                ("numerator".to_string(), numer.to_string()),
                ("denominator_log2".to_string(), den_log2.to_string()),
            ]),
            expected: None,
            actual: format_rational(value),
            status: CheckStatus::Pass,
        })
        .collect();
    let text = match format {
        OutputFormat::Json => render_json(&manifest, &results),
        OutputFormat::Csv => {
            let mut out = String::from("r,n,numerator,denominator_log2\n");
            for (r, n, numer, den_log2, _) in &rows {
                out.push_str(&format!("{r},{n},{numer},{den_log2}\n"));
            }
            out.trim_end().to_string()
        }
        _ => rows
            .iter()
            .map(|(r, n, _, _, value)| format!("U_{r}({n}) = {}", format_rational(value)))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((0, text))
}

// ---------------------------------------------------------------------------
// walk

fn cmd_walk(
    r: u32,
    n: u64,
    samples: u64,
    seed: u64,
    format: OutputFormat,
) -> Result<(i32, String)> {
    reject_formats(format, &[OutputFormat::Text, OutputFormat::Json], "walk")?;
    if samples == 0 {
        return Err(Error::Usage("samples must be at least 1".to_string()));
    }
    let manifest = manifest(
        "walk",
        &[
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("samples", samples.to_string()),
            ("seed", seed.to_string()),
        ],
    );
    let estimate = direct::walk_moment_mc(r, n, samples, seed);
    let exact_value = direct::u_direct(r, n as i64) * crate::numeric::pow2(-(n as i64));
    let exact = exact_value.to_f64().expect("moment fits in f64");
    let deviation = (estimate.estimate - exact).abs();
    let within = deviation <= 5.0 * estimate.std_error.max(f64::EPSILON);
    let results = vec![CheckResult::compare(
        format!("walk/r={r}/n={n}"),
        &[
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("samples", samples.to_string()),
            ("seed", seed.to_string()),
            ("std_error", format!("{:.6e}", estimate.std_error)),
        ],
        format!("{} = {exact}", format_rational(&exact_value)),
        estimate.estimate,
        within,
    )];
    let text = match format {
        OutputFormat::Json => render_json(&manifest, &results),
        _ => format!(
            "estimate   {}\nstd-error  {:.6e}\nexact      {} = {exact}\nwithin 5 standard errors: {}",
            estimate.estimate,
            estimate.std_error,
            format_rational(&exact_value),
            if within { "yes" } else { "no" }
        ),
    };
    Ok((if within { 0 } else { 1 }, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<(i32, String)> {
        let cli = Cli::try_parse_from(args).expect("arguments parse");
        execute(cli)
    }

    #[test]
    fn compute_all_methods_eight_rows() {
        let (code, text) = run_args(&[
            "centred-sums",
            "compute",
            "--r",
            "3",
            "--n",
            "4",
            "--method",
            "all",
        ])
        .unwrap();
        assert_eq!(code, 0);
        let rows: Vec<&str> = text.lines().collect();
        // direct, half-range, recurrence, family, df, odd-even, lagrange-odd-even, gz-odd
        assert_eq!(rows.len(), 9, "{text}");
        assert!(rows[..8].iter().all(|line| line.ends_with("24")), "{text}");
        assert_eq!(*rows.last().unwrap(), "verdict: AGREE");
    }

    #[test]
    fn compute_single_values() {
        let (code, text) = run_args(&["centred-sums", "compute", "--r", "2", "--n", "1"]).unwrap();
        assert_eq!((code, text.as_str()), (0, "1/2"));
        let (code, text) = run_args(&["centred-sums", "compute", "--r", "0", "--n", "-5"]).unwrap();
        assert_eq!((code, text.as_str()), (0, "0"));
    }

    #[test]
    fn compute_domain_error_names_range() {
        let err = run_args(&[
            "centred-sums",
            "compute",
            "--r",
            "0",
            "--n",
            "4",
            "--method",
            "carlitz",
        ]);
        assert!(matches!(err, Err(Error::OutsideValidity { .. })));
    }

    #[test]
    fn poly_outputs() {
        let (_, text) = run_args(&["centred-sums", "poly", "--family", "Q", "--r", "4"]).unwrap();
        assert_eq!(text, "n(105n^3 - 210n^2 + 147n - 34)");
        let (_, text) = run_args(&["centred-sums", "poly", "--family", "F", "--r", "2"]).unwrap();
        assert_eq!(text, "x*y + x*z + y*z");
        let (_, text) =
            run_args(&["centred-sums", "poly", "--family", "Pbar", "--r", "0"]).unwrap();
        assert_eq!(text, "1");
        assert!(run_args(&["centred-sums", "poly", "--family", "F", "--r", "0"]).is_err());
    }

    #[test]
    fn oeis_outputs() {
        let (_, text) = run_args(&[
            "centred-sums",
            "oeis",
            "--name",
            "reduced-tangent",
            "--count",
            "5",
        ])
        .unwrap();
        assert_eq!(text, "1 1 4 34 496");
        let (_, text) = run_args(&[
            "centred-sums",
            "oeis",
            "--name",
            "qbar-at-one",
            "--count",
            "3",
        ])
        .unwrap();
        assert_eq!(text, "1 3 21");
        let (_, text) = run_args(&[
            "centred-sums",
            "oeis",
            "--name",
            "secant",
            "--count",
            "4",
            "--format",
            "bfile",
        ])
        .unwrap();
        assert_eq!(text, "0 1\n1 1\n2 5\n3 61");
        assert!(matches!(
            run_args(&["centred-sums", "oeis", "--name", "nope", "--count", "3"]),
            Err(Error::UnknownSequence { .. })
        ));
    }

    #[test]
    fn oeis_triangles_flatten_in_row_order() {
        let (_, text) = run_args(&[
            "centred-sums",
            "oeis",
            "--name",
            "p-triangle",
            "--count",
            "10",
        ])
        .unwrap();
        assert_eq!(text, "1 2 1 6 8 3 24 60 54 17");
        let (_, text) = run_args(&[
            "centred-sums",
            "oeis",
            "--name",
            "q-triangle",
            "--count",
            "6",
        ])
        .unwrap();
        assert_eq!(text, "1 3 1 15 15 4");
    }

    #[test]
    fn table_csv() {
        let (code, text) = run_args(&[
            "centred-sums",
            "table",
            "--r",
            "0..2",
            "--n",
            "0..3",
            "--format",
            "csv",
        ])
        .unwrap();
        assert_eq!(code, 0);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "r,n,numerator,denominator_log2");
        assert_eq!(lines.len(), 13); // header + 12 rows
        assert!(lines.contains(&"2,3,6,0"));
        // U_2(1) = 1/2 encodes as numerator 1, denominator-log2 1
        assert!(lines.contains(&"2,1,1,1"));
    }

    #[test]
    fn table_text_single_cell() {
        let (_, text) = run_args(&["centred-sums", "table", "--r", "1..1", "--n", "0..0"]).unwrap();
        assert_eq!(text, "U_1(0) = 0");
        let (_, text) = run_args(&["centred-sums", "table", "--r", "0..0", "--n", "0..5"]).unwrap();
        let values: Vec<&str> = text
            .lines()
            .map(|l| l.rsplit(' ').next().unwrap())
            .collect();
        assert_eq!(values, vec!["1", "2", "4", "8", "16", "32"]);
    }

    #[test]
    fn bfile_rejected_outside_sequences() {
        assert!(matches!(
            run_args(&[
                "centred-sums",
                "compute",
                "--r",
                "1",
                "--n",
                "2",
                "--format",
                "bfile"
            ]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn json_schema_shape() {
        let (_, text) = run_args(&[
            "centred-sums",
            "compute",
            "--r",
            "3",
            "--n",
            "4",
            "--method",
            "all",
            "--format",
            "json",
        ])
        .unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["command"], "compute");
        assert!(value["manifest"]["timestamp"].is_string());
        assert_eq!(value["manifest"]["artifact_version"], crate::VERSION);
        let results = value["results"].as_array().unwrap();
        assert_eq!(results.len(), 8);
        for row in results {
            assert!(row["id"].is_string());
            assert!(row["inputs"].is_object());
            assert_eq!(row["status"], "pass");
            assert_eq!(row["actual"], "24");
        }
    }

    #[test]
    fn walk_within_bounds() {
        let (code, text) = run_args(&[
            "centred-sums",
            "walk",
            "--r",
            "2",
            "--n",
            "4",
            "--samples",
            "50000",
            "--seed",
            "1",
        ])
        .unwrap();
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("within 5 standard errors: yes"));
    }

    #[test]
    fn verify_tables_suite() {
        let (code, text) = run_args(&["centred-sums", "verify", "--suite", "tables"]).unwrap();
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("0 failed"), "{text}");
    }
}
