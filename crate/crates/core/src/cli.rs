//! Command-line front end. [`run`] does all the work and returns the output,
//! so the binary is a thin wrapper and tests can call it in process.
//!
//! Exit codes: 0 success (whatever the verdicts), 1 parse or validation
//! failure, 2 unmet precondition, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::classifier::{explain, extract_elementary_plus_bassian, Strictness, VerdictTable};
use crate::corpus;
use crate::dsl::{parse_group_expr, render, ParseError};
use crate::group::GroupExpr;
use crate::invariants::InvariantProfile;
use crate::oracle::{self, OracleError, SweepSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "abtaxon", version, about = "Classify abelian groups in the Bassian family")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Use published results only; disables the derived subgroup rules.
    #[arg(long, global = true)]
    pub strict_paper: bool,
    /// Seed for sampled oracle checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest group order an oracle job covers.
    #[arg(long, global = true)]
    pub max_order: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and every verdict for an expression.
    Classify {
        /// Check the bundled corpus instead of classifying EXPR.
        #[arg(long, conflicts_with = "expr")]
        corpus: bool,
        #[arg(required_unless_present = "corpus")]
        expr: Option<String>,
    },
    /// Split into an elementary group plus a Bassian group.
    Decompose { expr: String },
    /// Print the canonical form.
    Parse {
        /// Also print the term table.
        #[arg(long)]
        ast: bool,
        expr: String,
    },
    /// Exhaustive checks on explicit finite groups.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Injection G -> G/H exists iff H = 0, for every G up to the max order (default 200).
    BassianSweep,
    /// Hom-count formula against enumeration, for pairs up to the max order (default 64).
    HomCount,
    /// Injection search against the partition criterion on p-groups of order <= p^E.
    EmbeddingEquiv {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 6)]
        max_exp: u32,
    },
    /// Subgroups A of B + C meeting pC trivially are elementary (max order default 256).
    LemmaBasic {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub elementary: String,
    pub bassian: String,
}

/// Machine-readable report. Field order is part of the output format.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub input_text: String,
    pub canonical_form: String,
    pub invariants: InvariantProfile,
    pub verdicts: VerdictTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    pub tool_version: &'static str,
    pub strictness_flag: &'static str,
}

impl ReportDocument {
    pub fn new(input: &str, g: &GroupExpr, strictness: Strictness) -> Self {
        let report = explain(g, strictness);
        ReportDocument {
            input_text: input.to_string(),
            canonical_form: render(g),
            invariants: report.invariants,
            verdicts: report.verdicts,
            decomposition: None,
            tool_version: env!("CARGO_PKG_VERSION"),
            strictness_flag: match strictness {
                Strictness::Default => "default",
                Strictness::StrictPaper => "strict-paper",
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input       {}", self.input_text);
        let _ = writeln!(out, "canonical   {}", self.canonical_form);
        let _ = writeln!(out, "strictness  {}", self.strictness_flag);
        if let Some(d) = &self.decomposition {
            let _ = writeln!(out, "elementary  {}", d.elementary);
            let _ = writeln!(out, "bassian     {}", d.bassian);
        }
        let _ = writeln!(out, "\ninvariants");
        if let Ok(serde_json::Value::Object(map)) = serde_json::to_value(&self.invariants) {
            for (k, v) in map {
                let shown = match v {
                    serde_json::Value::String(s) => s,
                    v => v.to_string(),
                };
                let _ = writeln!(out, "  {k:<26}{shown}");
            }
        }
        let _ = writeln!(out, "\nverdicts");
        for (name, v) in self.verdicts.entries() {
            let _ = writeln!(out, "  {name:<26}{:<9}{:<27}{}", v.value.to_string(), v.citation.to_string(), v.detail);
        }
        out
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let strictness = if cli.strict_paper { Strictness::StrictPaper } else { Strictness::Default };
    match &cli.command {
        Command::Classify { corpus: true, .. } => classify_corpus(cli.json, strictness),
        Command::Classify { expr, .. } => {
            let expr = expr.as_deref().unwrap_or_default();
            with_parsed(expr, |g| {
                let doc = ReportDocument::new(expr, &g, strictness);
                Outcome::ok(emit(cli.json, &doc, ReportDocument::to_text))
            })
        }
        Command::Decompose { expr } => with_parsed(expr, |g| match extract_elementary_plus_bassian(&g) {
            Ok((e, h)) => {
                let mut doc = ReportDocument::new(expr, &g, strictness);
                doc.decomposition = Some(Decomposition { elementary: render(&e), bassian: render(&h) });
                Outcome::ok(emit(cli.json, &doc, ReportDocument::to_text))
            }
            Err(err) => Outcome::fail(EXIT_PRECONDITION, format!("error: precondition failed: {err}\n")),
        }),
        Command::Parse { ast, expr } => with_parsed(expr, |g| Outcome::ok(parse_output(expr, &g, *ast, cli.json))),
        Command::Oracle(cmd) => run_oracle(cmd, cli),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl Fn(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

fn with_parsed(expr: &str, f: impl FnOnce(GroupExpr) -> Outcome) -> Outcome {
    match parse_group_expr(expr) {
        Ok(g) => f(g),
        Err(e) => Outcome::fail(EXIT_INVALID, render_parse_error(expr, &e)),
    }
}

/// The error message followed by the offending line and a caret under the column.
pub fn render_parse_error(input: &str, e: &ParseError) -> String {
    let line = input.lines().nth(e.line.saturating_sub(1)).unwrap_or("");
    let pad = " ".repeat(e.column.saturating_sub(1));
    format!("error: {e}\n  {line}\n  {pad}^\n")
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ParseDocument {
    input_text: String,
    canonical_form: String,
    terms: Vec<TermRow>,
}

#[derive(Serialize)]
struct TermRow {
    atom: String,
    multiplicity: String,
}

fn parse_output(expr: &str, g: &GroupExpr, ast: bool, json: bool) -> String {
    let terms: Vec<TermRow> = g
        .terms()
        .iter()
        .map(|(a, m)| TermRow { atom: a.to_string(), multiplicity: m.to_string() })
        .collect();
    let doc = ParseDocument { input_text: expr.to_string(), canonical_form: render(g), terms };
    emit(json, &doc, |d| {
        let mut out = format!("{}\n", d.canonical_form);
        if ast {
            for t in &d.terms {
                let _ = writeln!(out, "  {:<16}{}", t.atom, t.multiplicity);
            }
        }
        out
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CorpusDocument {
    entries: Vec<ReportDocument>,
    mismatches: Vec<String>,
}

fn classify_corpus(json: bool, strictness: Strictness) -> Outcome {
    let mut entries = Vec::new();
    let mut mismatches = Vec::new();
    let mut text = String::new();
    for entry in corpus::canonical() {
        let found = corpus::check_entry(&entry, strictness);
        let status = if found.is_empty() { "ok" } else { "MISMATCH" };
        let _ = writeln!(text, "{status:<9}{:<28}{}", entry.expr, entry.note);
        for m in &found {
            let _ = writeln!(text, "         {m}");
        }
        mismatches.extend(found.iter().map(ToString::to_string));
        if let Ok(g) = parse_group_expr(&entry.expr) {
            entries.push(ReportDocument::new(&entry.expr, &g, strictness));
        }
    }
    let _ = writeln!(text, "{} entries, {} mismatches", entries.len(), mismatches.len());
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_INVALID };
    let stdout = emit(json, &CorpusDocument { entries, mismatches }, |_| text.clone());
    Outcome { code, stdout, stderr: String::new() }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OracleDocument<'a> {
    job: &'a str,
    max_order: u64,
    budget: u64,
    summary: &'a SweepSummary,
}

fn run_oracle(cmd: &OracleCommand, cli: &Cli) -> Outcome {
    let budget = oracle::default_budget();
    let (job, max_order) = match cmd {
        OracleCommand::BassianSweep => ("bassian-sweep", cli.max_order.unwrap_or(200)),
        OracleCommand::HomCount => ("hom-count", cli.max_order.unwrap_or(64)),
        OracleCommand::EmbeddingEquiv { p, max_exp } => {
            let order = p.checked_pow(*max_exp).unwrap_or(u64::MAX);
            ("embedding-equiv", cli.max_order.unwrap_or(order))
        }
        OracleCommand::LemmaBasic { .. } => ("lemma-basic", cli.max_order.unwrap_or(256)),
    };
    if max_order > budget {
        return Outcome::fail(
            EXIT_RESOURCE,
            format!(
                "error: {job} needs groups of order {max_order}, above the budget of {budget} (set {} to raise it)\n",
                oracle::MAX_ORDER_ENV
            ),
        );
    }
    let result = match cmd {
        OracleCommand::BassianSweep => oracle::bassian_sweep(max_order, budget),
        OracleCommand::HomCount => oracle::hom_count_sweep(max_order, budget),
        OracleCommand::EmbeddingEquiv { p, max_exp } => {
            if cli.max_order.is_some_and(|m| p.checked_pow(*max_exp).is_none_or(|o| o > m)) {
                return Outcome::fail(EXIT_RESOURCE, format!("error: {p}^{max_exp} exceeds --max-order {max_order}\n"));
            }
            oracle::embedding_sweep(*p, *max_exp, budget)
        }
        OracleCommand::LemmaBasic { p, trials } => oracle::lemma_basic_sweep(*p, max_order, *trials, cli.seed, budget),
    };
    let summary = match result {
        Ok(s) => s,
        Err(e @ OracleError::BudgetExceeded { .. }) => return Outcome::fail(EXIT_RESOURCE, format!("error: {e}\n")),
        Err(e @ OracleError::Precondition(_)) => return Outcome::fail(EXIT_INVALID, format!("error: {e}\n")),
    };
    let doc = OracleDocument { job, max_order, budget, summary: &summary };
    let stdout = emit(cli.json, &doc, |d| {
        let unit = match d.job {
            "bassian-sweep" => "groups",
            "lemma-basic" => "(B, C) pairs",
            _ => "pairs",
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}: {unit} checked: {} (orders <= {})", d.job, d.summary.cases, d.max_order);
        let _ = writeln!(out, "cases verified: {}", d.summary.checks);
        let _ = writeln!(out, "counterexamples: {}", d.summary.counterexamples.len());
        for c in &d.summary.counterexamples {
            let _ = writeln!(out, "  {c}");
        }
        let _ = writeln!(out, "wall time: {:.2}s", d.summary.elapsed.as_secs_f64());
        out
    });
    let code = if summary.passed() { EXIT_OK } else { EXIT_INVALID };
    Outcome { code, stdout, stderr: String::new() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("abtaxon").chain(args.iter().copied()))
    }

    #[test]
    fn classify_text_and_json() {
        let out = run_args(&["classify", "Z(5^inf)"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("nearlyBassian"));
        let out = run_args(&["classify", "--json", "Z(5^inf)"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdicts"]["nearlyGeneralizedBassian"]["citation"], "THM-CHIEF");
        assert_eq!(v["strictnessFlag"], "default");
    }

    #[test]
    fn strict_paper_changes_nearly_gb() {
        let out = run_args(&["classify", "--json", "--strict-paper", "Z(2)^w"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdicts"]["nearlyGeneralizedBassian"]["value"], "Unknown");
    }

    #[test]
    fn decompose_and_precondition() {
        let out = run_args(&["decompose", "--json", "Z(2)^w + Z(2^3)^2 + Z"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["decomposition"]["elementary"], "Z(2)^w");
        assert_eq!(v["decomposition"]["bassian"], "Z(2^3)^2 + Z");
        let out = run_args(&["decompose", "B(3)"]);
        assert_eq!(out.code, EXIT_PRECONDITION);
        assert!(out.stderr.contains("T_3 not elementary ⊕ finite"));
    }

    #[test]
    fn parse_errors_are_positioned() {
        let out = run_args(&["parse", "TF(0)"]);
        assert_eq!(out.code, EXIT_INVALID);
        assert!(out.stderr.contains("column 4"), "{}", out.stderr);
        assert!(out.stderr.ends_with("     ^\n"), "{}", out.stderr);
        assert_eq!(run_args(&["parse", "Z + Z"]).stdout, "Z^2\n");
        assert_eq!(run_args(&["parse", "Q ⊕ Z(2^∞)"]).stdout, "Q + Z(2^inf)\n");
    }

    #[test]
    fn oracle_budget_and_usage() {
        assert_eq!(run_args(&["oracle", "bassian-sweep", "--max-order", "100000"]).code, EXIT_RESOURCE);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_INVALID);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
        let out = run_args(&["oracle", "hom-count", "--max-order", "8"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("counterexamples: 0"));
    }
}
