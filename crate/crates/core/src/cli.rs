//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure or a
//! computation error, 2 on bad usage or input.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::scalar::int;
use crate::algebra::{format_scalar, Scalar};
use crate::closedforms::{
    chu_vandermonde_sweep, default_q_order, invert_z_k, lambda_y_identity_check, lehn_inverse_check, lemma_nnd_sweep,
    marian_oprea_sweep, ogf_a001791_check, prop33_probe, secant_table, verify_thm14,
};
use crate::error::{Result, TautError};
use crate::localization::{CurveFixture, Sign};
use crate::tautseries::{
    chern_generating_series, extract_universal_coeffs, swap_identity_check, universal_series, verify_b_formulas,
    verify_conjecture12, verify_factorization, VerificationReport,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Stable check names accepted by `verify`, in output order.
pub const CHECK_NAMES: [&str; 12] = [
    "a001791",
    "b_formulas",
    "chu_vandermonde",
    "conjecture12",
    "factorization",
    "lambda_y",
    "lehn_inverse",
    "lemma_nnd",
    "marian_oprea",
    "prop33",
    "swap",
    "thm14",
];

#[derive(Parser, Debug)]
#[command(name = "tautcurve", version, about = "Exact tautological integrals on symmetric products of curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Truncation order.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u16).range(1..=20))]
    pub order: u16,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Σ z^n ∫ c(±E^[n]) for a fixture.
    Series {
        /// Fixture JSON document.
        #[arg(long, required_unless_present = "p1_degrees", conflicts_with = "p1_degrees")]
        fixture: Option<PathBuf>,
        /// Summand degrees of a split bundle on the projective line.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        p1_degrees: Option<Vec<i64>>,
        #[arg(long, default_value = "plus")]
        sign: Sign,
        #[command(flatten)]
        out: Output,
    },
    /// Universal coefficients (A, B) for plus, (C, D) for minus.
    Coeffs {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        rank: u8,
        #[arg(long, default_value = "plus")]
        sign: Sign,
        #[command(flatten)]
        out: Output,
    },
    /// Universal series evaluated at a degree and genus.
    Universal {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        rank: u8,
        #[arg(long, default_value = "plus")]
        sign: Sign,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        genus: i64,
        #[command(flatten)]
        out: Output,
    },
    /// k(z) solving z = k(1-k)^r.
    Invert {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=8))]
        r: u8,
        #[command(flatten)]
        out: Output,
    },
    /// Counts of n-secant (n-2)-planes, entries starting at n = 1.
    Secant {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        genus: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Run a named check, or `all`.
    Verify {
        #[arg(value_parser = check_name)]
        check: String,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u16).range(1..=12))]
        order: u16,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

fn check_name(s: &str) -> std::result::Result<String, String> {
    if s == "all" || CHECK_NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown check; expected all or one of {}", CHECK_NAMES.join(", ")))
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(err: &TautError) -> Self {
        Outcome {
            code: if err.is_usage() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Exact values indexed by `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<(usize, Vec<Scalar>)>,
    pub convention: Option<String>,
}

impl ValueTable {
    fn single(start: usize, values: impl IntoIterator<Item = Scalar>) -> Self {
        ValueTable {
            columns: vec!["value"],
            rows: values.into_iter().enumerate().map(|(i, v)| (start + i, vec![v])).collect(),
            convention: None,
        }
    }
}

pub fn load_fixture(path: &Path) -> Result<CurveFixture> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| TautError::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    Ok(CurveFixture::from_json(&text)?)
}

/// Runs one named check at the given order.
pub fn run_check(name: &str, order: usize) -> Result<VerificationReport> {
    let nz = order.min(8);
    match name {
        "a001791" => ogf_a001791_check(order.max(4)),
        "b_formulas" => verify_b_formulas(order),
        "chu_vandermonde" => chu_vandermonde_sweep(order.min(8), -3..=3),
        "conjecture12" => verify_conjecture12(5, order),
        "factorization" => verify_factorization(order.min(6)),
        "lambda_y" => {
            let parts = (0..=2)
                .map(|a| lambda_y_identity_check(nz, default_q_order(nz, a).min(16), a))
                .collect::<Result<Vec<_>>>()?;
            Ok(VerificationReport::merge("lambda_y", nz, parts))
        }
        "lehn_inverse" => lehn_inverse_check(order),
        "lemma_nnd" => lemma_nnd_sweep(nz, -3..=3),
        "marian_oprea" => marian_oprea_sweep(4, order),
        "prop33" => {
            let n = order.min(6);
            // d = -1 makes both candidates equal 1/(1-z), so it cannot discriminate
            let parts = [-3, -2, 0, 1, 2]
                .into_iter()
                .map(|d| prop33_probe(d, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(VerificationReport::merge("prop33", n, parts))
        }
        "swap" => {
            let parts = (1..=3).map(|r| swap_identity_check(r, order)).collect::<Result<Vec<_>>>()?;
            Ok(VerificationReport::merge("swap", order, parts))
        }
        "thm14" => verify_thm14(order, -3..=3),
        other => Err(TautError::InvalidArgument(format!("unknown check {other:?}"))),
    }
}

/// Every check in [`CHECK_NAMES`] order; checks run concurrently.
pub fn verify_all(order: usize) -> Result<Vec<VerificationReport>> {
    if !(1..=12).contains(&order) {
        return Err(TautError::InvalidArgument("verify order must lie in [1, 12]".into()));
    }
    CHECK_NAMES.par_iter().map(|name| run_check(name, order)).collect()
}

fn report_json(version: &str, command: &str, reports: &[VerificationReport]) -> Value {
    let checks: Vec<Value> = reports
        .iter()
        .map(|r| serde_json::to_value(r).expect("report serializes"))
        .collect();
    json!({
        "version": version,
        "command": command,
        "pass": reports.iter().all(|r| r.pass),
        "checks": checks,
    })
}

fn table_json(version: &str, command: &str, table: &ValueTable) -> Value {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|(n, vals)| {
            let mut row = serde_json::Map::new();
            row.insert("n".into(), json!(n));
            for (col, v) in table.columns.iter().zip(vals) {
                row.insert(col.to_string(), json!(format_scalar(v)));
            }
            Value::Object(row)
        })
        .collect();
    let mut doc = json!({
        "version": version,
        "command": command,
        "pass": true,
        "values": rows,
    });
    if let Some(c) = &table.convention {
        doc["convention"] = json!(c);
    }
    doc
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn render_table(table: &ValueTable, format: Format, command: &str) -> String {
    match format {
        Format::Json => to_json_text(&table_json(VERSION, command, table)),
        Format::Csv => {
            let mut header = vec!["n"];
            header.extend(&table.columns);
            let rows = table.rows.iter().map(|(n, vals)| {
                let mut row = vec![n.to_string()];
                row.extend(vals.iter().map(format_scalar));
                row
            });
            csv_text(&header, rows)
        }
        Format::Plain => {
            let mut out = String::new();
            if let Some(c) = &table.convention {
                out.push_str(&format!("convention: {c}\n"));
            }
            for (i, col) in table.columns.iter().enumerate() {
                let vals: Vec<String> = table.rows.iter().map(|(_, v)| format_scalar(&v[i])).collect();
                if table.columns.len() > 1 {
                    out.push_str(&format!("{col}: "));
                }
                out.push_str(&vals.join(", "));
                out.push('\n');
            }
            out
        }
    }
}

pub fn render_reports(reports: &[VerificationReport], format: Format, command: &str) -> String {
    match format {
        Format::Json => to_json_text(&report_json(VERSION, command, reports)),
        Format::Csv => {
            let rows = reports.iter().map(|r| {
                let (index, lhs, rhs) = match &r.witness {
                    Some(w) => (w.index.to_string(), w.lhs.clone(), w.rhs.clone()),
                    None => Default::default(),
                };
                vec![r.name.clone(), r.pass.to_string(), r.order.to_string(), index, lhs, rhs, r.notes.clone()]
            });
            csv_text(&["name", "pass", "order", "index", "lhs", "rhs", "notes"], rows)
        }
        Format::Plain => {
            let mut out = String::new();
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {} (order {})\n", r.name, r.order));
                if let Some(w) = &r.witness {
                    out.push_str(&format!("  witness at {}: {} vs {}\n", w.index, w.lhs, w.rhs));
                }
                for line in r.note_lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
            let all = reports.iter().all(|r| r.pass);
            out.push_str(&format!("overall: {}\n", if all { "PASS" } else { "FAIL" }));
            out
        }
    }
}

fn execute(command: &Command, echo: &str) -> Result<(String, bool)> {
    let table = |table: ValueTable, format: Format| Ok((render_table(&table, format, echo), true));
    match command {
        Command::Series { fixture, p1_degrees, sign, out } => {
            let fixture = match (fixture, p1_degrees) {
                (Some(path), _) => load_fixture(path)?,
                (None, Some(degrees)) if !degrees.is_empty() => CurveFixture::p1_degrees(degrees),
                _ => return Err(TautError::InvalidArgument("need --fixture or --p1-degrees".into())),
            };
            let s = chern_generating_series(&fixture, *sign, out.order as usize)?;
            table(ValueTable::single(0, s.into_coeffs()), out.format)
        }
        Command::Coeffs { rank, sign, out } => {
            let c = extract_universal_coeffs(*rank as usize, *sign, out.order as usize)?;
            let t = ValueTable {
                columns: vec!["first", "second"],
                rows: (1..=c.order).map(|n| (n, vec![c.at(n).0.clone(), c.at(n).1.clone()])).collect(),
                convention: Some(c.convention().to_string()),
            };
            table(t, out.format)
        }
        Command::Universal { rank, sign, degree, genus, out } => {
            let order = out.order as usize;
            let c = extract_universal_coeffs(*rank as usize, *sign, order)?;
            let s = universal_series(&c, &int(*degree), &int(2 - 2 * genus), order)?;
            let mut t = ValueTable::single(0, s.into_coeffs());
            t.convention = Some(c.convention().to_string());
            table(t, out.format)
        }
        Command::Invert { r, out } => {
            let k = invert_z_k(*r as usize, out.order as usize)?;
            table(ValueTable::single(0, k.into_coeffs()), out.format)
        }
        Command::Secant { degree, genus, out } => {
            let rows = secant_table(*degree, *genus, out.order as usize)?;
            table(ValueTable::single(1, rows.into_iter().map(|(_, v)| v)), out.format)
        }
        Command::Verify { check, order, format } => {
            let order = *order as usize;
            let reports = if check == "all" { verify_all(order)? } else { vec![run_check(check, order)?] };
            let pass = reports.iter().all(|r| r.pass);
            Ok((render_reports(&reports, *format, echo), pass))
        }
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("tautcurve".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let echo = args.join(" ");
    match execute(&cli.command, &echo) {
        Ok((stdout, true)) => Outcome::ok(stdout),
        Ok((stdout, false)) => Outcome { code: 1, stdout, stderr: String::new() },
        Err(e) => Outcome::error(&e),
    }
}

pub fn main() -> ! {
    let outcome = run(std::env::args().skip(1));
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code)
}
