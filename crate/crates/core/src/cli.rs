//! Command-line front end. [`execute`] is the whole program minus process I/O,
//! so it can be driven from tests.
//!
//! Exit status: 0 certified or computed, 1 verdict false or inconclusive,
//! 2 input or usage error, 3 resource cap hit.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certify::{CertificateReport, Certifier, CertifyOptions, Outcome};
use crate::decomp::{
    epsilon_from_cols, hankel_minor_formula_with, lambda_from_rows, recombine, recombine_formula,
    skip_minor_decomposition, CoefficientCache,
};
use crate::error::{Error, Result};
use crate::exact::{format_ratio, parse_ratio, IndexTuple, Partition, Ratio};
use crate::limits::Limits;
use crate::matrix::{build_hankel, minor, ExactMatrix, PeriodicSequence, Sequence, SequenceWindow};
use crate::tableaux::{kostka, lr_coefficient};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "signcert",
    version,
    about = "Exact sign-consistency and positivity certificates for structured matrices",
    after_help = "Rationals are written as integers, p/q, or finite decimals.\n\
                  Exit status: 0 certified/computed, 1 false or inconclusive, 2 input error, 3 cap hit."
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Cap on minor evaluations and index-set enumeration.
    #[arg(long, env = "SIGNCERT_CAP", global = true)]
    pub cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify (strict) k-sign consistency of H^g(1,M,N) via H^g(1,k,M+N-k).
    CertifyHankel(HankelArgs),
    /// Certify (strict) k-sign consistency of T^g(t,M,N) via T^g(t+M-k,k,M+N-k).
    CertifyToeplitz(ToeplitzArgs),
    /// Decide k-sign consistency of a circulant from its first k rows.
    CertifyCirculant(CirculantArgs),
    /// Check H^g(1,k,N) for all N up to --n-max (operator certificate).
    CertifyOperator(OperatorArgs),
    /// (Strict) k-positivity of a matrix or of a Hankel matrix/operator.
    KPositivity(PositivityArgs),
    /// n-sign consistency of a tall m x n matrix via its Peña transform.
    Pena(PenaArgs),
    /// Expand one minor as a Kostka-weighted sum of row-consecutive minors.
    Decompose(DecomposeArgs),
    /// Expand one Hankel minor in reshaped minors with LR coefficients.
    HankelFormula(FormulaArgs),
    /// Kostka number K_{lambda,mu}.
    Kostka(KostkaArgs),
    /// Littlewood-Richardson coefficient c^gamma_{lambda,mu}.
    Lr(LrArgs),
    /// Brute-force (strict) k-sign consistency of a matrix.
    Minors(MinorsArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SequenceSource {
    /// Comma-separated sequence values.
    #[arg(long, allow_hyphen_values = true, value_name = "VALUES")]
    pub g: Option<String>,
    /// Index of the first value given with --g.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub offset: i64,
    /// JSON document ({offset, values} or {period, values}); '-' reads stdin.
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MatrixSource {
    /// Rows separated by ';', entries by ','.
    #[arg(long, allow_hyphen_values = true, value_name = "ROWS")]
    pub matrix: Option<String>,
    /// JSON document {rows, cols, entries}; '-' reads stdin.
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct HankelArgs {
    #[command(flatten)]
    pub source: SequenceSource,
    /// Number of rows
    #[arg(long = "M")]
    pub m: usize,
    /// Number of columns
    #[arg(long = "N")]
    pub n: usize,
    /// Minor order
    #[arg(long)]
    pub k: usize,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
    /// Decide the reshaped matrix through the Peña transform when possible.
    #[arg(long)]
    pub pena: bool,
    /// Brute-force the target when the reshaped matrix fails.
    #[arg(long)]
    pub confirm: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ToeplitzArgs {
    #[command(flatten)]
    pub source: SequenceSource,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
    /// Number of rows
    #[arg(long = "M")]
    pub m: usize,
    /// Number of columns
    #[arg(long = "N")]
    pub n: usize,
    /// Minor order
    #[arg(long)]
    pub k: usize,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub confirm: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CirculantArgs {
    /// One period g_0, ..., g_{T-1}.
    #[arg(long, allow_hyphen_values = true, value_name = "VALUES")]
    pub g: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
    /// Period; must match the number of values when given.
    #[arg(long = "T")]
    pub period: Option<usize>,
    /// Minor order
    #[arg(long)]
    pub k: usize,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OperatorArgs {
    #[command(flatten)]
    pub source: SequenceSource,
    /// Minor order
    #[arg(long)]
    pub k: usize,
    #[arg(long = "n-max")]
    pub n_max: usize,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PositivityMethod {
    Consecutive,
    Initial,
    BruteForce,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PositivityArgs {
    /// Hankel sequence (use with --M/--N, or --n-max for the operator).
    #[arg(long, allow_hyphen_values = true, value_name = "VALUES")]
    pub g: Option<String>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub offset: i64,
    #[arg(long, allow_hyphen_values = true, value_name = "ROWS")]
    pub matrix: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub t: i64,
    /// Number of rows
    #[arg(long = "M")]
    pub m: Option<usize>,
    /// Number of columns
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Order; defaults to the full order for matrices.
    #[arg(long)]
    pub k: Option<usize>,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
    /// Test used for explicit matrices.
    #[arg(long, value_enum, default_value_t = PositivityMethod::Consecutive)]
    pub method: PositivityMethod,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PenaArgs {
    #[command(flatten)]
    pub source: MatrixSource,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub source: MatrixSource,
    /// Row tuple, starting at 1.
    #[arg(long)]
    pub s: String,
    /// Column tuple.
    #[arg(long)]
    pub r: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FormulaArgs {
    #[command(flatten)]
    pub source: SequenceSource,
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub r: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct KostkaArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub mu: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LrArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub gamma: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MinorsArgs {
    #[command(flatten)]
    pub source: MatrixSource,
    /// Minor order
    #[arg(long)]
    pub k: usize,
    /// Require every minor to be nonzero
    #[arg(long)]
    pub strict: bool,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the program on `args` (including the program name), reading `-`
/// inputs from `stdin`.
pub fn execute<I, T>(args: I, stdin: &mut dyn Read) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Invocation {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let text = e.to_string();
                    let first = text.lines().next().unwrap_or("invalid arguments");
                    failure(EXIT_INPUT, "USAGE", first.trim_start_matches("error: "))
                }
            };
        }
    };
    let limits = cli.cap.map(Limits::uniform).unwrap_or_default();
    match dispatch(&cli.command, limits, stdin) {
        Ok(report) => Invocation {
            code: report.code,
            stdout: match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report.document).expect("reports serialize");
                    s.push('\n');
                    s
                }
                Format::Text => report.text,
            },
            stderr: String::new(),
        },
        Err(e) => {
            let code = match e {
                Error::ResourceLimit(_) => EXIT_CAP,
                _ => EXIT_INPUT,
            };
            failure(code, e.code(), &e.to_string())
        }
    }
}

/// Process entry point; returns the exit status.
pub fn run() -> i32 {
    let result = execute(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", result.stdout);
    if !result.stderr.is_empty() {
        eprint!("{}", result.stderr);
    }
    result.code
}

fn failure(code: i32, tag: &str, message: &str) -> Invocation {
    let one_line = message.replace('\n', " ");
    Invocation {
        code,
        stdout: String::new(),
        stderr: format!("error[{tag}]: {one_line}\n"),
    }
}

struct Rendered {
    code: i32,
    document: Value,
    text: String,
}

fn rendered(command: &str, parameters: impl Serialize, result: Value, code: i32, text: String) -> Rendered {
    Rendered {
        code,
        document: json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "parameters": serde_json::to_value(parameters).expect("parameters serialize"),
            "result": result,
        }),
        text,
    }
}

fn certificate(command: &str, parameters: impl Serialize, report: &CertificateReport) -> Rendered {
    let code = if report.verdict { EXIT_OK } else { EXIT_NEGATIVE };
    rendered(
        command,
        parameters,
        serde_json::to_value(report).expect("reports serialize"),
        code,
        certificate_text(report),
    )
}

fn certificate_text(r: &CertificateReport) -> String {
    let outcome = match r.outcome {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Inconclusive => "inconclusive",
    };
    let kind = if r.strict { "strict" } else { "non-strict" };
    let mut out = format!("{kind} order-{} property {outcome} (method {})\n", r.order, r.method);
    if let Some(sign) = r.common_sign {
        out += &format!("common sign: {sign}\n");
    }
    for w in &r.witnesses {
        out += &format!("  {} rows {} cols {} = {}\n", w.matrix, w.rows, w.cols, format_ratio(&w.value));
    }
    out += &format!("minors evaluated: {}\n", r.minors_evaluated);
    if let Some(n) = r.truncated_at {
        out += &format!("checked up to N = {n} only\n");
    }
    for note in &r.notes {
        out += &format!("note: {note}\n");
    }
    out
}

fn dispatch(command: &Command, limits: Limits, stdin: &mut dyn Read) -> Result<Rendered> {
    let certifier = |use_pena: bool, confirm_with_target: bool| {
        Certifier::new(CertifyOptions {
            limits,
            use_pena,
            confirm_with_target,
        })
    };
    match command {
        Command::CertifyHankel(a) => {
            let g = load_sequence(&a.source, stdin)?;
            let report = certifier(a.pena, a.confirm).certify_hankel_k_sign(g.as_dyn(), a.m, a.n, a.k, a.strict)?;
            Ok(certificate("certify-hankel", a, &report))
        }
        Command::CertifyToeplitz(a) => {
            let g = load_sequence(&a.source, stdin)?;
            let report = certifier(false, a.confirm).certify_toeplitz_k_sign(g.as_dyn(), a.t, a.m, a.n, a.k, a.strict)?;
            Ok(certificate("certify-toeplitz", a, &report))
        }
        Command::CertifyCirculant(a) => {
            let g = match (&a.g, &a.input) {
                (Some(values), None) => PeriodicSequence::new(parse_ratio_list(values)?)?,
                (None, Some(path)) => match parse_sequence_document(&read_input(path, stdin)?)? {
                    LoadedSequence::Periodic(p) => p,
                    LoadedSequence::Window(w) => PeriodicSequence::new(w.values().to_vec())?,
                },
                _ => return Err(one_source_error("--g", "--input")),
            };
            if let Some(period) = a.period {
                if period != g.period() {
                    return Err(Error::Contract(format!("--T {period} but {} values given", g.period())));
                }
            }
            let report = certifier(false, false).certify_circulant_k_sign(&g, a.k, a.strict)?;
            Ok(certificate("certify-circulant", a, &report))
        }
        Command::CertifyOperator(a) => {
            let g = load_sequence(&a.source, stdin)?;
            let report = certifier(false, false).certify_hankel_operator(g.as_dyn(), a.k, a.n_max, a.strict)?;
            Ok(certificate("certify-operator", a, &report))
        }
        Command::KPositivity(a) => positivity(a, certifier(false, false), stdin),
        Command::Pena(a) => {
            let x = load_matrix(&a.source, stdin)?;
            let transform = crate::certify::pena_transform(&x)?;
            let report = certifier(false, false).n_sign_consistency_via_pena(&x, a.strict)?;
            let mut r = certificate("pena", a, &report);
            r.document["result"]["transform"] = matrix_document(&transform);
            r.text = format!("transform:\n{transform}\n{}", r.text);
            Ok(r)
        }
        Command::Decompose(a) => {
            let x = load_matrix(&a.source, stdin)?;
            let s = parse_index_tuple(&a.s)?;
            let r = parse_index_tuple(&a.r)?;
            let terms = skip_minor_decomposition(&x, &s, &r)?;
            let sum = recombine(&terms);
            let direct = minor(&x, &s, &r)?;
            let lambda = lambda_from_rows(&s);
            let mut text = format!("lambda = {lambda}\n");
            for t in &terms {
                text += &format!("  {} x D_{} = {}\n", t.coefficient, t.weight, format_ratio(&t.value));
            }
            text += &format!("sum = {}, direct minor = {}\n", format_ratio(&sum), format_ratio(&direct));
            let code = if sum == direct { EXIT_OK } else { EXIT_NEGATIVE };
            let result = json!({
                "lambda": lambda,
                "terms": terms,
                "sum": format_ratio(&sum),
                "direct": format_ratio(&direct),
            });
            Ok(rendered("decompose", a, result, code, text))
        }
        Command::HankelFormula(a) => {
            let g = load_window(&a.source, stdin)?;
            let s = parse_index_tuple(&a.s)?;
            let r = parse_index_tuple(&a.r)?;
            let terms = hankel_minor_formula_with(&g, &s, &r, &mut CoefficientCache::new(), &limits)?;
            let sum = recombine_formula(&terms);
            let (m, n) = (s.last().unwrap_or(0), r.last().unwrap_or(0));
            let direct = minor(&build_hankel(&g, 1, m, n)?, &s, &r)?;
            let (lambda, epsilon) = (lambda_from_rows(&s), epsilon_from_cols(&r));
            let mut text = format!("lambda = {lambda}, epsilon = {epsilon}\n");
            for t in &terms {
                text += &format!("  {} x b^g_{} = {}\n", t.coefficient, t.vstar, format_ratio(&t.minor_value));
            }
            text += &format!("sum = {}, direct minor = {}\n", format_ratio(&sum), format_ratio(&direct));
            let code = if sum == direct { EXIT_OK } else { EXIT_NEGATIVE };
            let result = json!({
                "lambda": lambda,
                "epsilon": epsilon,
                "terms": terms,
                "sum": format_ratio(&sum),
                "direct": format_ratio(&direct),
            });
            Ok(rendered("hankel-formula", a, result, code, text))
        }
        Command::Kostka(a) => {
            let value = kostka(&parse_partition(&a.lambda)?, &parse_partition(&a.mu)?)?;
            Ok(rendered("kostka", a, json!({ "value": value }), EXIT_OK, format!("{value}\n")))
        }
        Command::Lr(a) => {
            let (lambda, mu, gamma) = (parse_partition(&a.lambda)?, parse_partition(&a.mu)?, parse_partition(&a.gamma)?);
            if lambda.len() != mu.len() || mu.len() != gamma.len() {
                return Err(Error::Contract("lambda, mu and gamma must have the same length".into()));
            }
            let value = lr_coefficient(&lambda, &mu, &gamma);
            Ok(rendered("lr", a, json!({ "value": value }), EXIT_OK, format!("{value}\n")))
        }
        Command::Minors(a) => {
            let x = load_matrix(&a.source, stdin)?;
            let report = certifier(false, false).sign_consistency_bruteforce(&x, a.k, a.strict)?;
            Ok(certificate("minors", a, &report))
        }
    }
}

fn positivity(a: &PositivityArgs, certifier: Certifier, stdin: &mut dyn Read) -> Result<Rendered> {
    use crate::certify::Method;

    let sequence = match (&a.g, &a.matrix, &a.input) {
        (Some(values), None, None) => Some(LoadedSequence::Window(SequenceWindow::new(a.offset, parse_ratio_list(values)?))),
        (None, Some(rows), None) => return positivity_matrix(a, certifier, parse_matrix_literal(rows)?),
        (None, None, Some(path)) => {
            let doc = parse_json(&read_input(path, stdin)?)?;
            if doc.get("entries").is_some() {
                return positivity_matrix(a, certifier, matrix_from_document(&doc)?);
            }
            Some(sequence_from_document(&doc)?)
        }
        _ => None,
    };
    let g = sequence.ok_or_else(|| one_source_error("--g, --matrix", "--input"))?;
    let report = match (a.n_max, a.m, a.n) {
        (Some(n_max), None, None) => {
            let k = a.k.ok_or_else(|| Error::Contract("--k is required for sequences".into()))?;
            certifier.hankel_operator_k_positivity(g.as_dyn(), k, n_max, a.strict)?
        }
        (None, Some(m), Some(n)) => {
            let k = a.k.unwrap_or(m.min(n));
            certifier.hankel_k_positivity(g.as_dyn(), a.t, m, n, k, a.strict)?
        }
        _ => return Err(Error::Contract("give either --M and --N, or --n-max, with --g".into())),
    };
    debug_assert_eq!(report.method, Method::ConsecutiveMinors);
    Ok(certificate("k-positivity", a, &report))
}

fn positivity_matrix(a: &PositivityArgs, certifier: Certifier, x: ExactMatrix) -> Result<Rendered> {
    let k = a.k.unwrap_or(x.rows().min(x.cols()));
    let report = match a.method {
        PositivityMethod::Consecutive => certifier.k_positivity_consecutive(&x, k, a.strict)?,
        PositivityMethod::BruteForce => certifier.k_positivity_bruteforce(&x, k, a.strict)?,
        PositivityMethod::Initial => {
            if !a.strict || k != x.rows().min(x.cols()) {
                return Err(Error::Contract("--method initial decides strict total positivity only".into()));
            }
            certifier.strict_total_positivity_initial(&x)?
        }
    };
    Ok(certificate("k-positivity", a, &report))
}

enum LoadedSequence {
    Window(SequenceWindow),
    Periodic(PeriodicSequence),
}

impl LoadedSequence {
    fn as_dyn(&self) -> &dyn Sequence {
        match self {
            LoadedSequence::Window(w) => w,
            LoadedSequence::Periodic(p) => p,
        }
    }
}

fn one_source_error(inline: &str, file: &str) -> Error {
    Error::Contract(format!("give exactly one input source: {inline} or {file}"))
}

fn load_sequence(source: &SequenceSource, stdin: &mut dyn Read) -> Result<LoadedSequence> {
    match (&source.g, &source.input) {
        (Some(values), None) => Ok(LoadedSequence::Window(SequenceWindow::new(source.offset, parse_ratio_list(values)?))),
        (None, Some(path)) => parse_sequence_document(&read_input(path, stdin)?),
        _ => Err(one_source_error("--g", "--input")),
    }
}

fn load_window(source: &SequenceSource, stdin: &mut dyn Read) -> Result<SequenceWindow> {
    match load_sequence(source, stdin)? {
        LoadedSequence::Window(w) => Ok(w),
        LoadedSequence::Periodic(_) => Err(Error::Contract("this command needs a finite window {offset, values}".into())),
    }
}

fn load_matrix(source: &MatrixSource, stdin: &mut dyn Read) -> Result<ExactMatrix> {
    match (&source.matrix, &source.input) {
        (Some(rows), None) => parse_matrix_literal(rows),
        (None, Some(path)) => matrix_from_document(&parse_json(&read_input(path, stdin)?)?),
        _ => Err(one_source_error("--matrix", "--input")),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn parse_sequence_document(text: &str) -> Result<LoadedSequence> {
    sequence_from_document(&parse_json(text)?)
}

fn sequence_from_document(doc: &Value) -> Result<LoadedSequence> {
    let values = ratio_array(doc.get("values").ok_or_else(|| Error::Parse("missing field \"values\"".into()))?)?;
    if let Some(period) = doc.get("period") {
        let period = period.as_u64().ok_or_else(|| Error::Parse("\"period\" must be a positive integer".into()))?;
        if period as usize != values.len() {
            return Err(Error::Parse(format!("period {period} but {} values", values.len())));
        }
        return Ok(LoadedSequence::Periodic(PeriodicSequence::new(values)?));
    }
    let offset = match doc.get("offset") {
        None => 1,
        Some(v) => v.as_i64().ok_or_else(|| Error::Parse("\"offset\" must be an integer".into()))?,
    };
    Ok(LoadedSequence::Window(SequenceWindow::new(offset, values)))
}

fn matrix_from_document(doc: &Value) -> Result<ExactMatrix> {
    let dim = |key: &str| {
        doc.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::Parse(format!("missing or invalid field \"{key}\"")))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let entries = doc.get("entries").ok_or_else(|| Error::Parse("missing field \"entries\"".into()))?;
    let flat: Vec<Ratio> = match entries.as_array() {
        Some(items) if items.iter().all(Value::is_array) => {
            let mut out = Vec::new();
            for row in items {
                out.extend(ratio_array(row)?);
            }
            out
        }
        _ => ratio_array(entries)?,
    };
    ExactMatrix::new(rows, cols, flat)
}

fn matrix_document(x: &ExactMatrix) -> Value {
    json!({
        "rows": x.rows(),
        "cols": x.cols(),
        "entries": x.entries().iter().map(format_ratio).collect::<Vec<_>>(),
    })
}

fn ratio_array(value: &Value) -> Result<Vec<Ratio>> {
    let items = value.as_array().ok_or_else(|| Error::Parse("expected an array of rationals".into()))?;
    items.iter().map(ratio_value).collect()
}

/// Rationals travel as strings; plain JSON integers are accepted too.
/// JSON floats are refused because their text is already rounded.
fn ratio_value(value: &Value) -> Result<Ratio> {
    match value {
        Value::String(s) => parse_ratio(s),
        Value::Number(n) if n.is_i64() => Ok(Ratio::from_integer(n.as_i64().unwrap().into())),
        Value::Number(n) if n.is_u64() => Ok(Ratio::from_integer(n.as_u64().unwrap().into())),
        other => Err(Error::Parse(format!("{other} is not an exact rational; quote it as a string"))),
    }
}

fn parse_ratio_list(text: &str) -> Result<Vec<Ratio>> {
    text.split(',').map(|item| parse_ratio(item.trim())).collect()
}

fn parse_matrix_literal(text: &str) -> Result<ExactMatrix> {
    let rows = text.split(';').map(parse_ratio_list).collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows)
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("{item:?} is not a nonnegative integer")))
        })
        .collect()
}

fn parse_partition(text: &str) -> Result<Partition> {
    Partition::new(parse_usize_list(text)?)
}

fn parse_index_tuple(text: &str) -> Result<IndexTuple> {
    IndexTuple::new(parse_usize_list(text)?)
}
