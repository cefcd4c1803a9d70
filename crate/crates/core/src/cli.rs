//! Command-line front end.
//!
//! Every command is turned into a [`Task`], executed to a JSON value, and then
//! rendered as a table, JSON or CSV. `batch` reads tasks as JSON lines.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::castelnuovo::AmbientSpec;
use crate::error::{Error, Result};
use crate::exact_arith::{ComparisonBudget, Rational, DEFAULT_DIGIT_BUDGET};
use crate::hypotheses::{
    check_corollary_degree, check_flag_separation, check_lemma_degree, HypothesisReport, Verdict,
};
use crate::lemma::{
    compute_r_with, genus_from_lemma_input_with, main_bound, LemmaInput, LemmaOptions,
};
use crate::oracle::{lemma_chain_sides, run_verification, RowStatus, VerifyConfig};
use crate::recurrence::{corollary_comparison, evaluate_flag, speciality_bound, FlagCondition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

pub const DIGIT_BUDGET_ENV: &str = "FLAGBOUND_DIGIT_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "flagbound",
    version,
    about = "Exact genus bounds for curves under flag conditions"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Digits shown in approximate decimal renderings.
    #[arg(long, global = true, default_value_t = 20)]
    digits: usize,
    /// Largest integer (in decimal digits) built when comparing radicals exactly.
    #[arg(long, global = true)]
    digit_budget: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Castelnuovo's bound for a nondegenerate curve of degree DEG in P^N.
    Castelnuovo { n: u64, deg: u64 },
    /// Interval for G(R; S1, S2, ...).
    Flag {
        r: u64,
        #[arg(required = true)]
        degrees: Vec<u64>,
        /// Include the separation checks in the output.
        #[arg(long)]
        with_report: bool,
    },
    /// Remainder decomposition and genus for a lemma input file ("-" for stdin).
    Lemma {
        #[arg(long)]
        input: String,
        /// Skip the lemma degree hypothesis (the truncation window is still enforced).
        #[arg(long)]
        allow_small_degree: bool,
    },
    /// The quadratic bound with cubic remainder and its competing bound.
    Corollary { r: u64, d: u64, s: u64, pi: u64 },
    /// Bound on the speciality index.
    Speciality { d: u64, s: u64, pi: u64 },
    /// Evaluate a hypothesis family.
    Hypotheses {
        #[command(subcommand)]
        subject: HypothesesCommand,
    },
    /// Run every oracle over a grid and a batch of random lemma inputs.
    Verify {
        /// rMax,sMax
        #[arg(long, default_value = "10,200", value_parser = parse_grid)]
        grid: (u64, u64),
        #[arg(long, default_value_t = 1000)]
        seeds: u64,
        /// Also draw lemma inputs below the degree hypothesis; violations are reported as findings.
        #[arg(long)]
        beyond_hypotheses: bool,
    },
    /// Read tasks as JSON lines and write one result per line.
    Batch {
        /// Input file, "-" for stdin.
        #[arg(long, default_value = "-")]
        input: String,
    },
}

#[derive(Subcommand, Debug)]
enum HypothesesCommand {
    /// Separation inequalities for a flag.
    Flag {
        r: u64,
        #[arg(required = true)]
        degrees: Vec<u64>,
    },
    /// Degree conditions of the corollary.
    Corollary { r: u64, d: u64, s: u64 },
    /// Degree hypothesis of the lemma.
    Lemma { r: u64, d: u64, s: u64 },
}

fn parse_grid(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected rMax,sMax, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[derive(Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub enum HypothesisSubject {
    Flag,
    Corollary,
    Lemma,
}

/// One unit of work, as parsed from the command line or a batch record.
#[derive(Deserialize, Debug, Clone)]
#[serde(tag = "op", rename_all = "camelCase", deny_unknown_fields)]
pub enum Task {
    Castelnuovo {
        n: u64,
        deg: u64,
    },
    #[serde(rename_all = "camelCase")]
    Flag {
        r: u64,
        degrees: Vec<u64>,
        #[serde(default)]
        with_report: bool,
    },
    #[serde(rename_all = "camelCase")]
    Lemma {
        input: LemmaInput,
        #[serde(default)]
        allow_small_degree: bool,
    },
    Corollary {
        r: u64,
        d: u64,
        s: u64,
        pi: u64,
    },
    Speciality {
        d: u64,
        s: u64,
        pi: u64,
    },
    Hypotheses {
        subject: HypothesisSubject,
        r: u64,
        #[serde(default)]
        degrees: Vec<u64>,
        d: Option<u64>,
        s: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub digits: usize,
    pub budget: ComparisonBudget,
}

/// A computed value and the exit status it implies.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::IdentityViolation(_) | Error::EnvelopeViolation { .. } => EXIT_VIOLATION,
        Error::Undecided(_) => EXIT_UNDECIDED,
        _ => EXIT_VALIDATION,
    }
}

fn integer(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn report_code(report: &HypothesisReport) -> i32 {
    if report.overall() == Verdict::Undecided {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    }
}

pub fn execute(task: &Task, ctx: &Context) -> Result<Outcome> {
    match task {
        Task::Castelnuovo { n, deg } => {
            let spec = AmbientSpec::new(*n, *deg)?;
            Ok(Outcome::ok(integer(spec.genus_bound())))
        }
        Task::Flag {
            r,
            degrees,
            with_report,
        } => {
            let flag = FlagCondition::new(*r, degrees.clone())?;
            let genus = evaluate_flag(&flag, &ctx.budget)?;
            let mut value = genus.to_json();
            if *with_report {
                value["report"] = genus
                    .hypotheses
                    .as_ref()
                    .map_or(Value::Null, |h| h.to_json(ctx.digits));
            }
            let code = if genus.undecided() {
                EXIT_UNDECIDED
            } else {
                EXIT_OK
            };
            Ok(Outcome { value, code })
        }
        Task::Lemma {
            input,
            allow_small_degree,
        } => lemma(input, *allow_small_degree, ctx),
        Task::Corollary { r, d, s, pi } => {
            let (r, d, s, pi) = (*r, *d, *s, u128::from(*pi));
            let cmp = corollary_comparison(r, d, s, pi)?;
            let report = check_corollary_degree(r, d, s, &ctx.budget)?;
            let mut value = cmp.to_json();
            let obj = value.as_object_mut().expect("object");
            obj.insert(
                "corollaryBoundApprox".into(),
                cmp.corollary_bound.approx_decimal(ctx.digits).into(),
            );
            obj.insert(
                "alternativeBoundApprox".into(),
                cmp.alternative_bound.approx_decimal(ctx.digits).into(),
            );
            obj.insert("hypothesesVerified".into(), report.passed().into());
            Ok(Outcome {
                value,
                code: report_code(&report),
            })
        }
        Task::Speciality { d, s, pi } => {
            let e = speciality_bound(*d, *s, u128::from(*pi))?;
            Ok(Outcome::ok(json!({
                "bound": rational(&e),
                "boundApprox": e.approx_decimal(ctx.digits),
            })))
        }
        Task::Hypotheses {
            subject,
            r,
            degrees,
            d,
            s,
        } => {
            let need = |x: &Option<u64>, name: &str| {
                x.ok_or_else(|| Error::InvalidArgument(format!("hypotheses: missing {name}")))
            };
            let report = match subject {
                HypothesisSubject::Flag => {
                    check_flag_separation(&FlagCondition::new(*r, degrees.clone())?, &ctx.budget)?
                }
                HypothesisSubject::Corollary => {
                    check_corollary_degree(*r, need(d, "d")?, need(s, "s")?, &ctx.budget)?
                }
                HypothesisSubject::Lemma => check_lemma_degree(*r, need(d, "d")?, need(s, "s")?)?,
            };
            Ok(Outcome {
                value: report.to_json(ctx.digits),
                code: report_code(&report),
            })
        }
    }
}

fn lemma(input: &LemmaInput, allow_small_degree: bool, ctx: &Context) -> Result<Outcome> {
    let opts = LemmaOptions { allow_small_degree };
    let data = input.analyze(opts)?;
    let decomposition = compute_r_with(input, opts)?;
    let genus = genus_from_lemma_input_with(input, opts)?;
    let bound = main_bound(input.d, input.s, data.pi, &decomposition.total)?;
    let chain = lemma_chain_sides(input)?;
    let envelope = Rational::from(input.s).pow(3) / Rational::from(input.r - 2);
    let identity_holds = Rational::from(genus) == bound;
    let value = json!({
        "r": input.r,
        "d": input.d,
        "s": input.s,
        "m": data.m(),
        "epsilon": data.epsilon(),
        "w": data.w(),
        "pi": integer(data.pi),
        "epsilonTerm": rational(&decomposition.epsilon_term),
        "pointSumTerm": rational(&decomposition.point_sum_term),
        "deltaSumTerm": rational(&decomposition.delta_sum_term),
        "tailTerm": rational(&decomposition.tail_term),
        "total": rational(&decomposition.total),
        "totalApprox": decomposition.total.approx_decimal(ctx.digits),
        "genus": integer(genus),
        "mainBound": rational(&bound),
        "identityHolds": identity_holds,
        "chainHolds": chain.holds(),
        "envelope": rational(&envelope),
        "withinEnvelope": decomposition.total.abs() <= envelope,
    });
    let code = if identity_holds && chain.holds() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Outcome { value, code })
}

fn verify(grid: (u64, u64), seeds: u64, beyond_hypotheses: bool) -> Result<Outcome> {
    let rows = run_verification(VerifyConfig {
        r_max: grid.0,
        s_max: grid.1,
        seeds,
        beyond_hypotheses,
    })?;
    let passed = rows.iter().all(|r| r.status != RowStatus::Fail);
    let value = json!({
        "passed": passed,
        "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        value,
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

/// Executes each nonblank line as a task, keeping input order. Failed records
/// produce an error record; the exit status is the most severe one seen.
pub fn batch(text: &str, ctx: &Context) -> (String, i32) {
    let mut out = String::new();
    let mut worst = EXIT_OK;
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let (value, code) = match serde_json::from_str::<Task>(line) {
            Ok(task) => match execute(&task, ctx) {
                Ok(o) => (json!({ "ok": o.value, "exitCode": o.code }), o.code),
                Err(e) => error_record(&e.to_string(), exit_code(&e), line),
            },
            Err(e) => error_record(&format!("bad record: {e}"), EXIT_VALIDATION, line),
        };
        worst = worst.max(code);
        out.push_str(&value.to_string());
        out.push('\n');
    }
    (out, worst)
}

fn error_record(msg: &str, code: i32, line: &str) -> (Value, i32) {
    let input = serde_json::from_str::<Value>(line).unwrap_or_else(|_| Value::String(line.into()));
    (
        json!({ "error": msg, "exitCode": code, "input": input }),
        code,
    )
}

/// Result of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI, reading the digit budget override from the environment.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(DIGIT_BUDGET_ENV).ok();
    run_with(args, env.as_deref(), &mut std::io::stdin())
}

/// [`run`] with an explicit budget override and stdin.
pub fn run_with<I, T>(args: I, env_budget: Option<&str>, stdin: &mut dyn Read) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Invocation {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Invocation {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(cli, env_budget, stdin) {
        Ok((stdout, code)) => Invocation {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Invocation {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\ninput: {echo}\n"),
        },
    }
}

fn dispatch(cli: Cli, env_budget: Option<&str>, stdin: &mut dyn Read) -> Result<(String, i32)> {
    let digit_budget = match env_budget {
        Some(v) => v.trim().parse::<u64>().map_err(|e| {
            Error::InvalidArgument(format!(
                "{DIGIT_BUDGET_ENV}={v:?} is not a digit count: {e}"
            ))
        })?,
        None => cli.global.digit_budget.unwrap_or(DEFAULT_DIGIT_BUDGET),
    };
    let ctx = Context {
        digits: cli.global.digits,
        budget: ComparisonBudget::with_digit_budget(digit_budget),
    };
    let task = match cli.command {
        Command::Castelnuovo { n, deg } => Task::Castelnuovo { n, deg },
        Command::Flag {
            r,
            degrees,
            with_report,
        } => Task::Flag {
            r,
            degrees,
            with_report,
        },
        Command::Lemma {
            input,
            allow_small_degree,
        } => {
            let text = read_source(&input, stdin)?;
            let input: LemmaInput = serde_json::from_str(&text)
                .map_err(|e| Error::Validation(format!("lemma input: {e}")))?;
            Task::Lemma {
                input,
                allow_small_degree,
            }
        }
        Command::Corollary { r, d, s, pi } => Task::Corollary { r, d, s, pi },
        Command::Speciality { d, s, pi } => Task::Speciality { d, s, pi },
        Command::Hypotheses { subject } => match subject {
            HypothesesCommand::Flag { r, degrees } => Task::Hypotheses {
                subject: HypothesisSubject::Flag,
                r,
                degrees,
                d: None,
                s: None,
            },
            HypothesesCommand::Corollary { r, d, s } => Task::Hypotheses {
                subject: HypothesisSubject::Corollary,
                r,
                degrees: vec![],
                d: Some(d),
                s: Some(s),
            },
            HypothesesCommand::Lemma { r, d, s } => Task::Hypotheses {
                subject: HypothesisSubject::Lemma,
                r,
                degrees: vec![],
                d: Some(d),
                s: Some(s),
            },
        },
        Command::Verify {
            grid,
            seeds,
            beyond_hypotheses,
        } => {
            let o = verify(grid, seeds, beyond_hypotheses)?;
            return Ok((render(&o.value, cli.global.format), o.code));
        }
        Command::Batch { input } => {
            let text = read_source(&input, stdin)?;
            return Ok(batch(&text, &ctx));
        }
    };
    let o = execute(&task, &ctx)?;
    Ok((render(&o.value, cli.global.format), o.code))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar_text).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn is_record_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

/// Splits an object into flattened scalar fields and named lists of records.
fn flatten(
    prefix: &str,
    obj: &Map<String, Value>,
    fields: &mut Vec<(String, String)>,
    lists: &mut Vec<(String, Vec<Value>)>,
) {
    for (k, v) in obj {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten(&key, inner, fields, lists),
            Value::Array(items) if is_record_list(v) => lists.push((key, items.clone())),
            other => fields.push((key, scalar_text(other))),
        }
    }
}

fn record_rows(items: &[Value]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header: Vec<String> = Vec::new();
    let mut flat_rows = Vec::new();
    for item in items {
        let mut fields = Vec::new();
        let mut nested = Vec::new();
        flatten(
            "",
            item.as_object().expect("record"),
            &mut fields,
            &mut nested,
        );
        for (k, _) in &fields {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
        flat_rows.push(fields);
    }
    let rows = flat_rows
        .into_iter()
        .map(|fields| {
            header
                .iter()
                .map(|h| {
                    fields
                        .iter()
                        .find(|(k, _)| k == h)
                        .map_or_else(String::new, |(_, v)| v.clone())
                })
                .collect()
        })
        .collect();
    (header, rows)
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|x| x.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line = row
            .iter()
            .enumerate()
            .map(|(c, x)| format!("{x:<w$}", w = widths[c]))
            .collect::<Vec<_>>()
            .join("  ");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

fn csv_cell(x: &str) -> String {
    if x.contains([',', '"', '\n']) {
        format!("\"{}\"", x.replace('"', "\"\""))
    } else {
        x.to_string()
    }
}

fn csv_line(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| csv_cell(c))
        .collect::<Vec<_>>()
        .join(",")
        + "\n"
}

pub fn render(value: &Value, format: Format) -> String {
    if format == Format::Json {
        return value.to_string() + "\n";
    }
    let (fields, lists) = match value {
        Value::Object(obj) => {
            let (mut fields, mut lists) = (Vec::new(), Vec::new());
            flatten("", obj, &mut fields, &mut lists);
            (fields, lists)
        }
        Value::Array(items) if is_record_list(value) => {
            (Vec::new(), vec![(String::new(), items.clone())])
        }
        other => return scalar_text(other) + "\n",
    };
    let mut blocks = Vec::new();
    match format {
        Format::Table => {
            if !fields.is_empty() {
                let rows: Vec<Vec<String>> = fields.into_iter().map(|(k, v)| vec![k, v]).collect();
                blocks.push(aligned(&rows));
            }
            for (name, items) in lists {
                let (header, rows) = record_rows(&items);
                let mut all = vec![header];
                all.extend(rows);
                let title = if name.is_empty() {
                    String::new()
                } else {
                    format!("{name}:\n")
                };
                blocks.push(title + &aligned(&all));
            }
        }
        Format::Csv => {
            if !fields.is_empty() {
                let (keys, vals): (Vec<_>, Vec<_>) = fields.into_iter().unzip();
                blocks.push(csv_line(&keys) + &csv_line(&vals));
            }
            for (_, items) in lists {
                let (header, rows) = record_rows(&items);
                let mut block = csv_line(&header);
                for row in rows {
                    block += &csv_line(&row);
                }
                blocks.push(block);
            }
        }
        Format::Json => unreachable!(),
    }
    blocks.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Invocation {
        let mut argv = vec!["flagbound"];
        argv.extend_from_slice(args);
        run_with(argv, None, &mut std::io::empty())
    }

    #[test]
    fn castelnuovo_command() {
        let out = cli(&["castelnuovo", "3", "6"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "4\n");
        assert_eq!(
            cli(&["castelnuovo", "3", "6", "--format", "json"]).stdout,
            "4\n"
        );
        assert_eq!(cli(&["castelnuovo", "3", "2"]).code, EXIT_VALIDATION);
    }

    #[test]
    fn flag_json_shape() {
        let out = cli(&["flag", "5", "1000", "10", "--format", "json"]);
        assert_eq!(out.code, 0);
        assert_eq!(
            out.stdout.trim(),
            r#"{"lo":"149900/3","hi":"151900/3","hypothesesVerified":false}"#
        );
    }

    #[test]
    fn table_renders_fields() {
        let out = cli(&["flag", "5", "1000", "10"]);
        assert!(out.stdout.contains("lo                  149900/3"));
        assert!(out.stdout.contains("hypothesesVerified  false"));
    }

    #[test]
    fn errors_echo_input() {
        let out = cli(&["flag", "5", "10", "1000"]);
        assert_eq!(out.code, EXIT_VALIDATION);
        assert!(out.stderr.contains("input: flag 5 10 1000"));
    }

    #[test]
    fn env_budget_must_parse() {
        let out = run_with(
            ["flagbound", "castelnuovo", "3", "6"],
            Some("lots"),
            &mut std::io::empty(),
        );
        assert_eq!(out.code, EXIT_VALIDATION);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Validation("x".into())), EXIT_VALIDATION);
        assert_eq!(
            exit_code(&Error::HypothesisFailure("x".into())),
            EXIT_VALIDATION
        );
        assert_eq!(
            exit_code(&Error::IdentityViolation("x".into())),
            EXIT_VIOLATION
        );
        let env = Error::EnvelopeViolation {
            r: 4,
            s: 3,
            detail: "x".into(),
        };
        assert_eq!(exit_code(&env), EXIT_VIOLATION);
        assert_eq!(exit_code(&Error::Undecided("x".into())), EXIT_UNDECIDED);
    }

    #[test]
    fn grid_parser() {
        assert_eq!(parse_grid("6,100"), Ok((6, 100)));
        assert!(parse_grid("6").is_err());
    }

    #[test]
    fn csv_quotes_cells() {
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("x\"y"), "\"x\"\"y\"");
        assert_eq!(csv_cell("22/3"), "22/3");
    }
}
