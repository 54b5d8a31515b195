//! Command-line front end.
//!
//! Parsing produces a [`RunConfig`]; [`run`] executes it and returns the
//! process exit status. Status 1 means an invariant or comparison failed;
//! status 2 means the configuration was invalid or a file could not be used.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::Value;

use crate::arith::{check_q, decimal, search_catalan, CatalanKind, CatalanSolution};
use crate::characterize::characterize;
use crate::oracle::{enumerate_sp4, max_enum_from_env, order84_g, order84_h, perm_nse, OrderHistogram};
use crate::primegraph::{psp4_graph, PrimeGraphJson};
use crate::selftest::{compare_histogram, order84_checks, selftest, SelfCheck};
use crate::sympl::{class_table, class_table_csv, group_order, nse_table, spectrum, NseTable, NseTableJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Compute,
    Oracle,
    Characterize,
    Catalan,
    Selftest,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub q: Option<u64>,
    /// Group order as a decimal string.
    pub order: Option<String>,
    pub nse_path: Option<PathBuf>,
    pub format: Format,
    /// A directory for `compute`, a file for everything else.
    pub output_path: Option<PathBuf>,
    pub compare: bool,
    pub example_84: bool,
    pub bound: Option<u64>,
    pub selftest_qs: Vec<u64>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            q: None,
            order: None,
            nse_path: None,
            format: Format::Json,
            output_path: None,
            compare: false,
            example_84: false,
            bound: None,
            selftest_qs: vec![4, 8],
        }
    }

    /// Checks the command-specific requirements.
    pub fn validate(&self) -> Result<(), String> {
        if let Some(q) = self.q {
            check_q(q).map_err(|e| e.to_string())?;
        }
        for &q in &self.selftest_qs {
            check_q(q).map_err(|e| e.to_string())?;
        }
        match self.command {
            Command::Compute if self.q.is_none() => return Err("compute requires --q".into()),
            Command::Oracle if !self.example_84 && self.q.is_none() => {
                return Err("oracle requires --q or --example-84".into())
            }
            Command::Characterize => {
                let order = self.order.as_deref().ok_or("characterize requires --order")?;
                if decimal::parse(order).is_none() {
                    return Err(format!("--order must be a decimal integer, got {order:?}"));
                }
                if self.nse_path.is_none() {
                    return Err("characterize requires --nse-file".into());
                }
            }
            Command::Catalan if self.bound.is_none() => return Err("catalan requires --bound".into()),
            _ => {}
        }
        if self.format == Format::Csv && !matches!(self.command, Command::Compute | Command::Catalan) {
            return Err("--format csv applies only to compute and catalan".into());
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "psp4", version, about = "Exact invariants and recognition of PSp4(q), q = 2^f > 2")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Closed-form invariants of PSp4(q).
    Compute {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Directory receiving class_table.csv, nse.json, nse_set.json, spectrum.json, prime_graph.json.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force enumeration of Sp4(q).
    Oracle {
        #[arg(long)]
        q: Option<u64>,
        /// Exit 1 unless the histogram equals the closed-form table.
        #[arg(long)]
        compare: bool,
        /// Run the two permutation groups of order 84 instead.
        #[arg(long)]
        example_84: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether an order and nse set force PSp4(q).
    Characterize {
        #[arg(long)]
        order: String,
        /// JSON array of decimal strings, or the nse.json written by `compute`.
        #[arg(long)]
        nse_file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solutions of p^m = q^n + 1 with p^m <= bound.
    Catalan {
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The full invariant suite.
    Selftest {
        #[arg(long = "q", value_delimiter = ',', default_values_t = [4u64, 8])]
        qs: Vec<u64>,
    },
}

impl From<Sub> for RunConfig {
    fn from(sub: Sub) -> Self {
        match sub {
            Sub::Compute { q, format, output } => RunConfig {
                q: Some(q),
                format,
                output_path: output,
                ..RunConfig::new(Command::Compute)
            },
            Sub::Oracle { q, compare, example_84, output } => RunConfig {
                q,
                compare,
                example_84,
                output_path: output,
                ..RunConfig::new(Command::Oracle)
            },
            Sub::Characterize { order, nse_file, output } => RunConfig {
                order: Some(order),
                nse_path: Some(nse_file),
                output_path: output,
                ..RunConfig::new(Command::Characterize)
            },
            Sub::Catalan { bound, format, output } => RunConfig {
                bound: Some(bound),
                format,
                output_path: output,
                ..RunConfig::new(Command::Catalan)
            },
            Sub::Selftest { qs } => RunConfig { selftest_qs: qs, ..RunConfig::new(Command::Selftest) },
        }
    }
}

/// Parses arguments (including the program name) into a config.
pub fn parse_args<I, T>(args: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Ok(Cli::try_parse_from(args)?.command.into())
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_CONFIG
            } else {
                EXIT_OK
            }
        }
    }
}

/// A failure carrying its exit status.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn config_error(message: impl ToString) -> Failure {
    Failure { code: EXIT_CONFIG, message: message.to_string() }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        config_error(e)
    }
}

pub fn run(config: &RunConfig) -> i32 {
    if let Err(message) = config.validate() {
        eprintln!("error: {message}");
        return EXIT_CONFIG;
    }
    let result = match config.command {
        Command::Compute => run_compute(config),
        Command::Oracle => run_oracle(config),
        Command::Characterize => run_characterize(config),
        Command::Catalan => run_catalan(config),
        Command::Selftest => run_selftest(config),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, text).map_err(|e| config_error(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| config_error(format!("stdout: {e}"))),
    }
}

fn decimal_strings<'a>(values: impl IntoIterator<Item = &'a BigUint>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

/// Everything `compute` knows about one q, as a single document.
#[derive(Debug, Serialize)]
pub struct ComputeJson {
    pub q: u64,
    pub order: String,
    pub spectrum: Vec<u64>,
    pub nse: NseTableJson,
    pub nse_set: Vec<String>,
    pub prime_graph: PrimeGraphJson,
}

pub fn compute_json(q: u64) -> crate::Result<ComputeJson> {
    let table = nse_table(q)?;
    Ok(ComputeJson {
        q,
        order: group_order(q)?.to_string(),
        spectrum: spectrum(q)?,
        nse_set: decimal_strings(&table.nse_set()),
        nse: table.to_json(),
        prime_graph: psp4_graph(q)?.to_json(),
    })
}

fn run_compute(config: &RunConfig) -> Result<i32, Failure> {
    let q = config.q.expect("validated");
    let Some(dir) = &config.output_path else {
        let text = match config.format {
            Format::Json => to_json(&compute_json(q)?),
            Format::Csv => class_table_csv(&class_table(q)?),
        };
        emit(&text, None)?;
        return Ok(EXIT_OK);
    };
    fs::create_dir_all(dir).map_err(|e| config_error(format!("{}: {e}", dir.display())))?;
    let doc = compute_json(q)?;
    emit(&class_table_csv(&class_table(q)?), Some(&dir.join("class_table.csv")))?;
    emit(&to_json(&doc.nse), Some(&dir.join("nse.json")))?;
    emit(&to_json(&doc.nse_set), Some(&dir.join("nse_set.json")))?;
    emit(&to_json(&doc.spectrum), Some(&dir.join("spectrum.json")))?;
    emit(&to_json(&doc.prime_graph), Some(&dir.join("prime_graph.json")))?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct HistogramJson {
    size: String,
    counts: BTreeMap<u64, String>,
}

impl From<&OrderHistogram> for HistogramJson {
    fn from(h: &OrderHistogram) -> Self {
        HistogramJson {
            size: h.total().to_string(),
            counts: h.counts().iter().map(|(k, v)| (*k, v.to_string())).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct CheckJson {
    name: String,
    passed: bool,
    detail: String,
}

impl From<&SelfCheck> for CheckJson {
    fn from(c: &SelfCheck) -> Self {
        CheckJson { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() }
    }
}

#[derive(Debug, Serialize)]
struct OracleJson {
    q: u64,
    histogram: HistogramJson,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    comparison: Vec<CheckJson>,
}

#[derive(Debug, Serialize)]
struct Example84Json {
    g: HistogramJson,
    h: HistogramJson,
    checks: Vec<CheckJson>,
}

fn run_oracle(config: &RunConfig) -> Result<i32, Failure> {
    let cap = max_enum_from_env();
    if config.example_84 {
        let g = perm_nse(&order84_g()?)?;
        let h = perm_nse(&order84_h()?)?;
        let checks = order84_checks()?;
        let passed = checks.iter().all(|c| c.passed);
        let doc = Example84Json {
            g: (&g).into(),
            h: (&h).into(),
            checks: checks.iter().map(CheckJson::from).collect(),
        };
        emit(&to_json(&doc), config.output_path.as_deref())?;
        return Ok(if passed { EXIT_OK } else { EXIT_FAILED });
    }
    let q = config.q.expect("validated");
    let histogram = enumerate_sp4(q, cap)?.histogram();
    let comparison = if config.compare { compare_histogram(q, &histogram)? } else { Vec::new() };
    let passed = comparison.iter().all(|c| c.passed);
    for c in comparison.iter().filter(|c| !c.passed) {
        eprintln!("mismatch: {}: {}", c.name, c.detail);
    }
    let doc = OracleJson {
        q,
        histogram: (&histogram).into(),
        comparison: comparison.iter().map(CheckJson::from).collect(),
    };
    emit(&to_json(&doc), config.output_path.as_deref())?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

/// Reads an nse set: a JSON array of decimal strings, or an nse table object.
pub fn read_nse_file(path: &Path) -> Result<BTreeSet<BigUint>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_nse_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_nse_json(text: &str) -> Result<BTreeSet<BigUint>, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    match value {
        Value::Array(items) => items
            .iter()
            .map(|item| match item {
                Value::String(s) => decimal::parse(s).ok_or_else(|| format!("not a decimal integer: {s:?}")),
                other => Err(format!("expected a decimal string, found {other}")),
            })
            .collect(),
        Value::Object(_) => {
            let json: NseTableJson = serde_json::from_value(value).map_err(|e| e.to_string())?;
            Ok(NseTable::from_json(&json).map_err(|e| e.to_string())?.nse_set())
        }
        _ => Err("expected a JSON array of decimal strings or an nse table object".into()),
    }
}

fn run_characterize(config: &RunConfig) -> Result<i32, Failure> {
    let order = decimal::parse(config.order.as_deref().expect("validated")).expect("validated");
    let nse = read_nse_file(config.nse_path.as_deref().expect("validated")).map_err(config_error)?;
    let verdict = characterize(&order, &nse);
    emit(&to_json(&verdict.to_json()), config.output_path.as_deref())?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct CatalanRow {
    p: u64,
    q: u64,
    m: u32,
    n: u32,
    value: String,
    kind: CatalanKind,
}

impl From<&CatalanSolution> for CatalanRow {
    fn from(s: &CatalanSolution) -> Self {
        CatalanRow { p: s.p, q: s.q, m: s.m, n: s.n, value: s.value().to_string(), kind: s.kind }
    }
}

fn run_catalan(config: &RunConfig) -> Result<i32, Failure> {
    let rows: Vec<CatalanRow> = search_catalan(config.bound.expect("validated")).iter().map(Into::into).collect();
    let text = match config.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                writer.serialize(row).map_err(config_error)?;
            }
            String::from_utf8(writer.into_inner().map_err(config_error)?).expect("CSV is UTF-8")
        }
    };
    emit(&text, config.output_path.as_deref())?;
    Ok(EXIT_OK)
}

fn run_selftest(config: &RunConfig) -> Result<i32, Failure> {
    let report = selftest(&config.selftest_qs, max_enum_from_env())?;
    let mut text = String::new();
    for c in &report.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
    }
    text.push_str(&format!(
        "{} of {} checks passed\n",
        report.checks.len() - report.failures().len(),
        report.checks.len()
    ));
    emit(&text, config.output_path.as_deref())?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_compute() {
        let config = parse_args(["psp4", "compute", "--q", "8", "--format", "csv"]).unwrap();
        assert_eq!(config.command, Command::Compute);
        assert_eq!(config.q, Some(8));
        assert_eq!(config.format, Format::Csv);
        assert!(config.validate().is_ok());
    }

    #[test]
    fn rejects_bad_q() {
        let config = parse_args(["psp4", "compute", "--q", "2"]).unwrap();
        assert!(config.validate().unwrap_err().contains("q > 2"));
        assert_eq!(run(&config), EXIT_CONFIG);
        let config = parse_args(["psp4", "compute", "--q", "12"]).unwrap();
        assert_eq!(run(&config), EXIT_CONFIG);
    }

    #[test]
    fn rejects_bad_order() {
        let config = parse_args(["psp4", "characterize", "--order", "9.5e5", "--nse-file", "x"]).unwrap();
        assert!(config.validate().is_err());
    }

    #[test]
    fn missing_subcommand_is_config_error() {
        assert_eq!(main_with_args(["psp4"]), EXIT_CONFIG);
        assert_eq!(main_with_args(["psp4", "oracle"]), EXIT_CONFIG);
    }

    #[test]
    fn selftest_q_list() {
        let config = parse_args(["psp4", "selftest", "--q", "4,16"]).unwrap();
        assert_eq!(config.selftest_qs, vec![4, 16]);
    }

    #[test]
    fn nse_json_forms() {
        let set = parse_nse_json(r#"["1", "4335", "979199"]"#).unwrap();
        assert_eq!(set.len(), 3);
        assert!(parse_nse_json("[1, 2]").is_err());
        assert!(parse_nse_json(r#"["-1"]"#).is_err());
        let table = serde_json::to_string(&nse_table(4).unwrap().to_json()).unwrap();
        assert_eq!(parse_nse_json(&table).unwrap(), nse_table(4).unwrap().nse_set());
    }

    #[test]
    fn compute_document() {
        let doc = compute_json(4).unwrap();
        assert_eq!(doc.order, "979200");
        assert_eq!(doc.spectrum, vec![1, 2, 3, 4, 5, 6, 10, 15, 17]);
        assert_eq!(doc.prime_graph.order_components, vec!["57600", "17"]);
    }
}
