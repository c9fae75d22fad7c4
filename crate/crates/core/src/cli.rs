//! Command-line front end.
//!
//! Every verb validates its options, runs one exhaustive check or solve, and
//! renders a report as text or JSON. JSON output has sorted keys and carries
//! no timing unless `--timing` is given, so repeated runs are byte-identical.

use std::fmt;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebras::{
    direct_sum, identity_scan, make_algebra, AlgebraSpec, Params, StructureTable, ALGEBRA_NAMES,
};
use crate::basis::BasisIndex;
use crate::element::Element;
use crate::grammar::parse_element;
use crate::poisson::{
    assoc_comm_residuals, find_poisson_witness, mutation_ambient, mutation_closure_check,
    mutation_product, parse_product, random_mutation_w, right_mult_scan, tpa_scan, ProductKind,
    ProductSpec, ScanReport,
};
use crate::scalar::Scalar;
use crate::solver::{solve_delta_derivations, solve_stabilized, verify_space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    AlgebraList,
    AlgebraCheck,
    DeriveSolve,
    TpaVerify,
    TpaWitness,
    TpaNormalForm,
    ClosureCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Verify and solve transposed Poisson structures and δ-derivations.
#[derive(Debug, Parser)]
#[command(name = "halfder", version)]
pub struct Cli {
    pub verb: Verb,
    /// Built-in algebra name; `a+b` for a direct sum of finite algebras.
    #[arg(long)]
    pub algebra: Option<String>,
    /// JSON structure-constant table to use instead of `--algebra`.
    #[arg(long, conflicts_with = "algebra")]
    pub table: Option<std::path::PathBuf>,
    /// Algebra parameter `key=value`; repeatable.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, String)>,
    #[arg(long, default_value = "1/2")]
    pub delta: Scalar,
    #[arg(long, default_value_t = 8)]
    pub window: i64,
    #[arg(long, default_value_t = 2)]
    pub shift: i64,
    /// Skip stabilization and report the raw windowed nullspace.
    #[arg(long)]
    pub raw: bool,
    /// `mutation:w=<element>`, `mutation:random`, `table:thin_k:<k>` or
    /// `table:solvable:<variant>`.
    #[arg(long)]
    pub product: Option<String>,
    /// Element `q` of the further mutation `x·q·y` for `closure-check`.
    #[arg(long = "mutate-by", visible_alias = "q")]
    pub mutate_by: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for `mutation:random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exit 0 when a witness is found and 1 when none is.
    #[arg(long)]
    pub expect_witness: bool,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => Err(format!("expected key=value, got `{s}`")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    WitnessFound,
    None,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::WitnessFound => "witness-found",
            Status::None => "none",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str().to_uppercase())
    }
}

/// Result of one command: the echoed command line, a status, a JSON payload
/// and the lines of its text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub result: Value,
    pub text: Vec<String>,
    pub timing_ms: Option<u128>,
}

/// Process outcome: exit code plus what goes to stdout and stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = json!({
                "command": report.command,
                "status": report.status.as_str(),
                "result": report.result,
            });
            if let Some(ms) = report.timing_ms {
                v["timing_ms"] = json!(ms);
            }
            let mut s = serde_json::to_string_pretty(&v).expect("json value");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("command: {}\nstatus: {}\n", report.command.join(" "), report.status);
            for line in &report.text {
                s.push_str(line);
                s.push('\n');
            }
            if let Some(ms) = report.timing_ms {
                s.push_str(&format!("time: {ms} ms\n"));
            }
            s
        }
    }
}

struct UsageError(String);

impl<E: fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn build_algebra(cli: &Cli) -> Result<AlgebraSpec, UsageError> {
    let params: Params = cli.params.iter().cloned().collect();
    if let Some(path) = &cli.table {
        if !params.is_empty() {
            return Err(UsageError("--param does not apply to --table".into()));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        let table: StructureTable = serde_json::from_str(&text)?;
        let name = path.file_stem().map_or("table".into(), |s| s.to_string_lossy().into_owned());
        return Ok(table.into_algebra(&name)?);
    }
    let name = cli
        .algebra
        .as_deref()
        .ok_or_else(|| UsageError("--algebra is required".into()))?;
    match name.split_once('+') {
        None => Ok(make_algebra(name, &params)?),
        Some((l, r)) => {
            let mut left = Params::new();
            let mut right = Params::new();
            for (k, v) in &params {
                if let Some(k) = k.strip_prefix("left.") {
                    left.insert(k.into(), v.clone());
                } else if let Some(k) = k.strip_prefix("right.") {
                    right.insert(k.into(), v.clone());
                } else {
                    return Err(UsageError(format!(
                        "direct-sum params need a `left.` or `right.` prefix, got `{k}`"
                    )));
                }
            }
            let a = make_algebra(l, &left)?;
            let b = make_algebra(r, &right)?;
            Ok(direct_sum(&a, &b)?)
        }
    }
}

fn build_product(cli: &Cli, alg: &AlgebraSpec) -> Result<ProductSpec, UsageError> {
    let literal = cli
        .product
        .as_deref()
        .ok_or_else(|| UsageError("--product is required".into()))?;
    if literal == "mutation:random" {
        let ambient = mutation_ambient(alg)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        return Ok(mutation_product(&ambient, random_mutation_w(&ambient, 3, &mut rng))?);
    }
    Ok(parse_product(literal, alg)?)
}

fn product_literal(p: &ProductSpec) -> String {
    match p.kind() {
        ProductKind::Mutation { w } => format!("mutation:w={w}"),
        ProductKind::Table(nf) => nf.to_string(),
    }
}

fn strings(t: &[BasisIndex]) -> Vec<String> {
    t.iter().map(ToString::to_string).collect()
}

fn scan_failure_json(scan: &ScanReport) -> Value {
    match &scan.failure {
        None => Value::Null,
        Some((z, t, r)) => json!({"z": z.to_string(), "tuple": strings(t), "residual": r.to_string()}),
    }
}

fn scan_text(label: &str, scan: &ScanReport) -> String {
    match &scan.failure {
        None => format!("{label}: PASS ({} tuples checked)", scan.checked),
        Some((z, t, r)) => format!(
            "{label}: FAIL at z = {z}, ({}): residual {r}",
            strings(t).join(", ")
        ),
    }
}

fn algebra_json(alg: &AlgebraSpec) -> (Value, Value) {
    (json!(alg.name()), json!(alg.params()))
}

type VerbResult = Result<(Status, Value, Vec<String>), UsageError>;

fn algebra_list() -> VerbResult {
    let list: Vec<Value> = ALGEBRA_NAMES
        .iter()
        .map(|(n, d)| json!({"name": n, "description": d}))
        .collect();
    let text = ALGEBRA_NAMES.iter().map(|(n, d)| format!("{n:18} {d}")).collect();
    Ok((Status::Pass, json!({ "algebras": list }), text))
}

fn algebra_check(cli: &Cli) -> VerbResult {
    let alg = build_algebra(cli)?;
    let scan = identity_scan(&alg, cli.window);
    let (name, params) = algebra_json(&alg);
    let failure = match &scan.failure {
        None => Value::Null,
        Some((t, r)) => json!({"tuple": strings(t), "residual": r.to_string()}),
    };
    let status = if scan.failure.is_none() { Status::Pass } else { Status::Fail };
    let mut text = vec![
        format!("algebra: {}", alg.label()),
        format!("window: {}", cli.window),
        format!(
            "checked: {} antisymmetry pairs, {} identity tuples",
            scan.antisymmetry_checked, scan.identity_checked
        ),
    ];
    if let Some((t, r)) = &scan.failure {
        text.push(format!("failure: ({}) residual {r}", strings(t).join(", ")));
    }
    let result = json!({
        "algebra": name,
        "params": params,
        "window": if alg.is_finite() { Value::Null } else { json!(cli.window) },
        "antisymmetry_checked": scan.antisymmetry_checked,
        "identity_checked": scan.identity_checked,
        "failure": failure,
    });
    Ok((status, result, text))
}

fn derive_solve(cli: &Cli) -> VerbResult {
    let alg = build_algebra(cli)?;
    let space = if cli.raw {
        solve_delta_derivations(&alg, &cli.delta, cli.window, cli.shift)?
    } else {
        solve_stabilized(&alg, &cli.delta, cli.window, cli.shift)?
    };
    let (status, checked, failure) = match verify_space(&alg, &space) {
        Ok(n) => (Status::Pass, n, None),
        Err((k, t, r)) => (
            Status::Fail,
            0,
            Some(format!("basis map {k} fails at ({}): {r}", strings(&t).join(", "))),
        ),
    };
    let js = space.to_json();
    let mut result = serde_json::to_value(&js).expect("space json");
    result["soundness_checked"] = json!(checked);
    let mut text = vec![
        format!("algebra: {}", alg.label()),
        format!("delta: {}", space.delta()),
    ];
    if !alg.is_finite() {
        text.push(format!("window: {}  shift: {}", space.window(), space.shift_bound()));
    }
    text.push(format!("dimension: {}", js.dimension));
    text.push(format!("stable: {}", js.stable));
    text.push(format!("trivial_only: {}", js.trivial_only));
    text.push(format!("soundness: {checked} (map, tuple) checks"));
    if let Some(f) = &failure {
        text.push(format!("failure: {f}"));
    }
    for (k, m) in space.basis().iter().enumerate() {
        text.push(format!("basis[{k}]:"));
        text.extend(m.to_string().lines().map(|l| format!("  {l}")));
    }
    Ok((status, result, text))
}

fn tpa_verify(cli: &Cli) -> VerbResult {
    let alg = build_algebra(cli)?;
    let p = build_product(cli, &alg)?;
    let scan = tpa_scan(&alg, &p, cli.window)?;
    let (name, params) = algebra_json(&alg);
    let status = if scan.passed() { Status::Pass } else { Status::Fail };
    let result = json!({
        "algebra": name,
        "params": params,
        "product": product_literal(&p),
        "window": cli.window,
        "checked": scan.checked,
        "failure": scan_failure_json(&scan),
    });
    let text = vec![
        format!("algebra: {}", alg.label()),
        format!("product: {}", product_literal(&p)),
        scan_text("compatibility", &scan),
    ];
    Ok((status, result, text))
}

fn tpa_witness(cli: &Cli) -> VerbResult {
    let alg = build_algebra(cli)?;
    let p = build_product(cli, &alg)?;
    let found = find_poisson_witness(&alg, &p, cli.window)?;
    let (name, params) = algebra_json(&alg);
    let mut text = vec![
        format!("algebra: {}", alg.label()),
        format!("product: {}", product_literal(&p)),
    ];
    let (status, witness) = match &found {
        Some(w) => {
            text.push(format!(
                "witness: ({}) residual {}",
                strings(&w.triple).join(", "),
                w.residual
            ));
            (Status::WitnessFound, serde_json::to_value(w.to_json()).expect("witness json"))
        }
        None => {
            text.push(format!("no witness in window {}", cli.window));
            (Status::None, Value::Null)
        }
    };
    let result = json!({
        "algebra": name,
        "params": params,
        "product": product_literal(&p),
        "window": cli.window,
        "witness": witness,
    });
    Ok((status, result, text))
}

fn tpa_normal_form(cli: &Cli) -> VerbResult {
    let literal = cli
        .product
        .as_deref()
        .ok_or_else(|| UsageError("--product is required".into()))?;
    if !literal.starts_with("table:") {
        return Err(UsageError("tpa-normal-form takes a `table:` product".into()));
    }
    let alg = match (&cli.algebra, literal.starts_with("table:thin_k")) {
        (Some(_), _) => build_algebra(cli)?,
        (None, true) => make_algebra("thin", &Params::new())?,
        (None, false) => make_algebra("solvable", &Params::new())?,
    };
    let p = parse_product(literal, &alg)?;
    let basis = alg.window_basis(cli.window);
    let mut ac_checked = 0;
    let mut ac_failure = None;
    'outer: for x in &basis {
        for y in &basis {
            for z in &basis {
                let (a, c) = assoc_comm_residuals(&p, *x, *y, *z)?;
                ac_checked += 1;
                if !a.is_zero() || !c.is_zero() {
                    ac_failure = Some((vec![*x, *y, *z], a, c));
                    break 'outer;
                }
            }
        }
    }
    let tpa = tpa_scan(&alg, &p, cli.window)?;
    let rm = right_mult_scan(&alg, &p, cli.window)?;
    let pass = ac_failure.is_none() && tpa.passed() && rm.passed();
    let mut text = vec![
        format!("algebra: {}", alg.label()),
        format!("product: {}", product_literal(&p)),
    ];
    let ac_json = match &ac_failure {
        None => {
            text.push(format!("associative, commutative: PASS ({ac_checked} tuples checked)"));
            Value::Null
        }
        Some((t, a, c)) => {
            text.push(format!(
                "associative, commutative: FAIL at ({}): {a}; {c}",
                strings(t).join(", ")
            ));
            json!({"tuple": strings(t), "assoc": a.to_string(), "comm": c.to_string()})
        }
    };
    text.push(scan_text("compatibility", &tpa));
    text.push(scan_text("right multiplications are 1/2-derivations", &rm));
    let result = json!({
        "algebra": alg.name(),
        "product": product_literal(&p),
        "window": cli.window,
        "assoc_comm_checked": ac_checked,
        "assoc_comm_failure": ac_json,
        "tpa_checked": tpa.checked,
        "tpa_failure": scan_failure_json(&tpa),
        "right_mult_checked": rm.checked,
        "right_mult_failure": scan_failure_json(&rm),
    });
    Ok((if pass { Status::Pass } else { Status::Fail }, result, text))
}

fn closure_check(cli: &Cli) -> VerbResult {
    let alg = build_algebra(cli)?;
    let p = build_product(cli, &alg)?;
    let q_text = cli
        .mutate_by
        .as_deref()
        .ok_or_else(|| UsageError("--mutate-by is required".into()))?;
    let q: Element = parse_element(q_text, p.ambient())?;
    let closed = mutation_closure_check(&alg, &p, &q, cli.window)?;
    let (name, params) = algebra_json(&alg);
    let result = json!({
        "algebra": name,
        "params": params,
        "product": product_literal(&p),
        "q": q.to_string(),
        "window": cli.window,
        "closed": closed,
    });
    let text = vec![
        format!("algebra: {}", alg.label()),
        format!("product: {}", product_literal(&p)),
        format!("q: {q}"),
        format!("further mutation compatible: {}", if closed { "PASS" } else { "FAIL" }),
    ];
    Ok((if closed { Status::Pass } else { Status::Fail }, result, text))
}

fn exit_code(status: Status, expect_witness: bool) -> i32 {
    match (status, expect_witness) {
        (Status::Pass, _) => 0,
        (Status::Fail, _) => 1,
        (Status::None, false) | (Status::WitnessFound, true) => 0,
        (Status::None, true) | (Status::WitnessFound, false) => 1,
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("halfder".to_string()).chain(args.clone())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome {
                code,
                stdout,
                stderr,
                report: None,
            };
        }
    };
    if cli.window < 0 || cli.shift < 0 {
        return Outcome {
            code: 2,
            stdout: String::new(),
            stderr: "error: --window and --shift must be non-negative\n".into(),
            report: None,
        };
    }
    let start = Instant::now();
    let run = match cli.verb {
        Verb::AlgebraList => algebra_list(),
        Verb::AlgebraCheck => algebra_check(&cli),
        Verb::DeriveSolve => derive_solve(&cli),
        Verb::TpaVerify => tpa_verify(&cli),
        Verb::TpaWitness => tpa_witness(&cli),
        Verb::TpaNormalForm => tpa_normal_form(&cli),
        Verb::ClosureCheck => closure_check(&cli),
    };
    match run {
        Err(UsageError(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            report: None,
        },
        Ok((status, result, text)) => {
            let witness_verb = cli.verb == Verb::TpaWitness;
            let report = Report {
                command: args,
                status,
                result,
                text,
                timing_ms: cli.timing.then(|| start.elapsed().as_millis()),
            };
            Outcome {
                code: exit_code(status, witness_verb && cli.expect_witness),
                stdout: emit_report(&report, cli.format),
                stderr: String::new(),
                report: Some(report),
            }
        }
    }
}
