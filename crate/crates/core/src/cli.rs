//! Command line front end.
//!
//! Exit codes: 0 on success, 1 when an input file cannot be read, 2 for
//! malformed input (including bad arguments), 3 when well-formed input cannot
//! be evaluated. Diagnostics are a single `error[CODE]: message` line on the
//! error stream; nothing is written to the output stream on failure.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::cardinal::CardinalConfig;
use crate::countability::{self, AlgebraicEnumerator, DigitStream};
use crate::derived::{self, SetTerm};
use crate::expr::{self, ExprError};
use crate::json::{self, Record};
use crate::omega_order::OmegaOrder;
use crate::ordinal::Ordinal;
use crate::real::{self, Rational};
use crate::real_expr::{self, RealAnswer, RealQuery};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

pub const GCH_ENV: &str = "TRANSFINITUM_GCH";

#[derive(Parser, Debug)]
#[command(name = "transfinitum", version, about = "Exact transfinite arithmetic")]
struct Cli {
    /// Assume the generalized continuum hypothesis, 2^aleph_a = aleph_(a+1).
    #[arg(long, global = true)]
    gch: bool,
    /// Emit one JSON object per result.
    #[arg(long, global = true)]
    json: bool,
    /// Precision for `real`, as p/q or a decimal.
    #[arg(long, global = true, value_name = "P/Q")]
    eps: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an ordinal or cardinal expression.
    Eval {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Show the canonical rearrangement of the naturals of a given order type.
    Order {
        alpha: String,
        /// Elements shown per omega-block.
        #[arg(long, default_value_t = 3)]
        prefix: usize,
        /// Print the element at this (ordinal) position instead.
        #[arg(long, value_name = "ORDINAL", conflicts_with = "rank")]
        at: Option<String>,
        /// Print the position of this natural number instead.
        #[arg(long, value_name = "N")]
        rank: Option<BigUint>,
    },
    /// Apply the diagonal construction to digit streams read from a file.
    Diag {
        /// One stream per line, "0.ddd..."; "-" reads standard input.
        file: PathBuf,
    },
    /// Print the chain of derived sets of a term or of the canonical set of
    /// an ordinal.
    Derive {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        /// Stop after this many (ordinal) derivation steps.
        #[arg(long, value_name = "ORDINAL")]
        steps: Option<String>,
    },
    /// Enumerate rationals or real algebraic numbers.
    Enum { which: Enumeration, n: u64 },
    /// Evaluate an expression over fundamental-sequence reals.
    Real {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Enumeration {
    Rationals,
    Algebraic,
}

#[derive(Debug)]
struct Failure {
    exit: i32,
    code: &'static str,
    message: String,
}

impl Failure {
    fn parse(code: &'static str, message: impl ToString) -> Self {
        Failure {
            exit: EXIT_PARSE,
            code,
            message: message.to_string(),
        }
    }

    fn eval(code: &'static str, message: impl ToString) -> Self {
        Failure {
            exit: EXIT_EVAL,
            code,
            message: message.to_string(),
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        let exit = match e {
            ExprError::Parse(_) => EXIT_PARSE,
            ExprError::Eval(_) => EXIT_EVAL,
        };
        Failure {
            exit,
            code: e.code(),
            message: e.to_string(),
        }
    }
}

struct Settings {
    cfg: CardinalConfig,
    json: bool,
    eps: Rational,
}

/// Runs the command line with arguments `args` (including the program name),
/// reading the GCH default from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(GCH_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// As [`run`], with the value of `TRANSFINITUM_GCH` supplied by the caller.
pub fn run_with_env<I, T>(args: I, gch_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(err, "error[USAGE]: {first}");
            return EXIT_PARSE;
        }
    };

    let result = settings(&cli, gch_env).and_then(|s| execute(&cli.command, &s));
    match result {
        Ok(lines) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            EXIT_OK
        }
        Err(f) => {
            let message = f.message.replace('\n', " ");
            let _ = writeln!(err, "error[{}]: {message}", f.code);
            f.exit
        }
    }
}

fn env_flag(value: Option<&str>) -> bool {
    matches!(
        value.map(|v| v.trim().to_ascii_lowercase()).as_deref(),
        Some("1" | "true" | "yes" | "on")
    )
}

fn settings(cli: &Cli, gch_env: Option<&str>) -> Result<Settings, Failure> {
    let eps = match &cli.eps {
        None => real_expr::default_eps(),
        Some(text) => match real_expr::parse_rational(text) {
            Some(q) if q > Rational::from_integer(0.into()) => q,
            _ => {
                return Err(Failure::parse(
                    "BAD_EPS",
                    format!("--eps must be a positive rational, got {text:?}"),
                ))
            }
        },
    };
    Ok(Settings {
        cfg: CardinalConfig::new(cli.gch || env_flag(gch_env)),
        json: cli.json,
        eps,
    })
}

fn execute(cmd: &Command, s: &Settings) -> Result<Vec<String>, Failure> {
    match cmd {
        Command::Eval { expr } => eval_cmd(&expr.join(" "), s),
        Command::Order {
            alpha,
            prefix,
            at,
            rank,
        } => order_cmd(alpha, *prefix, at.as_deref(), rank.as_ref(), s),
        Command::Diag { file } => diag_cmd(file, s),
        Command::Derive { input, steps } => derive_cmd(&input.join(" "), steps.as_deref(), s),
        Command::Enum { which, n } => enum_cmd(*which, *n, s),
        Command::Real { expr } => real_cmd(&expr.join(" "), s),
    }
}

fn emit(s: &Settings, record: Record) -> Vec<String> {
    if s.json {
        vec![record.to_line()]
    } else {
        vec![record.canonical_text]
    }
}

fn parse_ordinal(text: &str) -> Result<Ordinal, Failure> {
    Ok(text.parse::<Ordinal>()?)
}

fn eval_cmd(text: &str, s: &Settings) -> Result<Vec<String>, Failure> {
    let value = expr::eval_str(text, s.cfg)?;
    Ok(emit(s, json::value(&value)))
}

fn order_cmd(
    alpha: &str,
    prefix: usize,
    at: Option<&str>,
    rank: Option<&BigUint>,
    s: &Settings,
) -> Result<Vec<String>, Failure> {
    let alpha = parse_ordinal(alpha)?;
    let order = OmegaOrder::new(alpha).map_err(|e| Failure::eval("ORDER", e))?;
    if let Some(pos) = at {
        let pos = parse_ordinal(pos)?;
        let e = order.element_at(&pos).map_err(|e| Failure::eval("ORDER", e))?;
        return Ok(emit(s, Record::new("natural", json!(e.to_string()), e.to_string())));
    }
    if let Some(n) = rank {
        let pos = order.rank_of(n).map_err(|e| Failure::eval("ORDER", e))?;
        return Ok(emit(s, Record::new("ordinal", json::ordinal(&pos), pos.to_string())));
    }
    if prefix == 0 {
        return Err(Failure::parse("BAD_PREFIX", "--prefix must be at least 1"));
    }
    let text = order.show_prefix(prefix);
    let value = json!({ "alpha": order.alpha().to_string(), "prefix": prefix });
    Ok(emit(s, Record::new("order-prefix", value, text)))
}

fn diag_cmd(file: &PathBuf, s: &Settings) -> Result<Vec<String>, Failure> {
    let mut text = String::new();
    let read = if file.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    read.map_err(|e| Failure {
        exit: EXIT_IO,
        code: "IO",
        message: format!("{}: {e}", file.display()),
    })?;
    let mut streams = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let stream: DigitStream = line
            .parse()
            .map_err(|e| Failure::parse("BAD_STREAM", format!("line {}: {e}", line_no + 1)))?;
        streams.push(stream);
    }
    let d = countability::diagonal(&streams).map_err(|e| Failure::eval("DIAGONAL", e))?;
    let value = json!({ "streams": streams.len(), "digits": d.digits() });
    Ok(emit(s, Record::new("digit-stream", value, d.to_string())))
}

/// Stages to print for a chain of length `steps`: the first few, the last
/// few, and `...` where stages are skipped.
fn display_stages(steps: &Ordinal) -> Vec<Option<Ordinal>> {
    let mut shown: Vec<Ordinal> = (0..4u32).map(Ordinal::from).filter(|n| n <= steps).collect();
    let limit = steps.limit_part();
    let r = steps.finite_part();
    let tail_from = if r > BigUint::from(2u32) {
        r.clone() - 2u32
    } else {
        BigUint::from(0u32)
    };
    if !limit.is_zero() {
        shown.push(limit.clone());
    }
    let mut i = tail_from;
    while i <= r {
        shown.push(&limit + &Ordinal::from(i.clone()));
        i += 1u32;
    }
    shown.sort();
    shown.dedup();
    let mut out = Vec::new();
    for (k, stage) in shown.iter().enumerate() {
        if k > 0 && shown[k - 1].succ() != *stage {
            out.push(None);
        }
        out.push(Some(stage.clone()));
    }
    out
}

fn derive_cmd(input: &str, steps: Option<&str>, s: &Settings) -> Result<Vec<String>, Failure> {
    let trimmed = input.trim_start();
    let term = if trimmed.starts_with(|c: char| c.is_ascii_uppercase()) && !trimmed.starts_with("Ord") {
        trimmed.parse::<SetTerm>().map_err(|e| Failure::parse("SYNTAX", e))?
    } else {
        derived::canonical(&parse_ordinal(input)?)
    };
    let steps = match steps {
        Some(text) => parse_ordinal(text)?,
        None => derived::cb_rank(&term),
    };
    let mut lines = Vec::new();
    let mut chain = Vec::new();
    let mut last = term.clone();
    for stage in display_stages(&steps) {
        match stage {
            None => lines.push("...".to_string()),
            Some(stage) => {
                last = derived::derivative_iter(&term, &stage);
                lines.push(format!("stage {stage}: {last}"));
                chain.push(json!({ "stage": stage.to_string(), "term": last.to_string() }));
            }
        }
    }
    if s.json {
        let value = json!({ "start": term.to_string(), "chain": chain });
        return Ok(vec![Record::new("derivation", value, last.to_string()).to_line()]);
    }
    lines.push(last.to_string());
    Ok(lines)
}

fn enum_cmd(which: Enumeration, n: u64, s: &Settings) -> Result<Vec<String>, Failure> {
    match which {
        Enumeration::Rationals => {
            let q = countability::enum_rationals(n);
            let value = json!({ "index": n, "numerator": q.numer().to_string(), "denominator": q.denom().to_string() });
            Ok(emit(s, Record::new("rational", value, q.to_string())))
        }
        Enumeration::Algebraic => {
            let index = usize::try_from(n).map_err(|_| Failure::eval("TOO_LARGE", "index too large"))?;
            let d = AlgebraicEnumerator::new()
                .nth(index)
                .expect("the enumeration is infinite");
            Ok(emit(s, Record::new("algebraic", json::algebraic(&d), d.to_string())))
        }
    }
}

fn real_cmd(text: &str, s: &Settings) -> Result<Vec<String>, Failure> {
    let query = real_expr::parse_real(text).map_err(|e| Failure::parse(e.code(), e))?;
    let answer = real_expr::answer(&query, &s.eps).map_err(|e| {
        let code = match e {
            real::RealError::NegativeRadicand(_) => "NEGATIVE_RADICAND",
            real::RealError::NonPositivePrecision(_) => "BAD_EPS",
        };
        Failure::eval(code, e)
    })?;
    let record = match (&query, answer) {
        (_, RealAnswer::Approximation(r)) => {
            let text = real::to_decimal(&r, real::decimal_places(&s.eps));
            let value = json!({ "approximation": r.to_string(), "eps": s.eps.to_string() });
            Record::new("real", value, text)
        }
        (RealQuery::Compare(op, ..), RealAnswer::Apart(a)) => {
            let text = real_expr::verdict_text(*op, a);
            let value = json!({ "verdict": text, "eps": s.eps.to_string() });
            Record::new("verdict", value, text)
        }
        (RealQuery::Value(_), RealAnswer::Apart(_)) => unreachable!("values are approximated"),
    };
    Ok(emit(s, record))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["transfinitum"];
        argv.extend_from_slice(args);
        let code = run_with_env(argv, None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn stage_selection() {
        let w: Ordinal = "w".parse().unwrap();
        let shown: Vec<String> = display_stages(&w)
            .into_iter()
            .map(|s| s.map_or("...".into(), |o| o.to_string()))
            .collect();
        assert_eq!(shown, ["0", "1", "2", "3", "...", "w"]);
        let two: Ordinal = "2".parse().unwrap();
        assert_eq!(display_stages(&two).len(), 3);
        let big: Ordinal = "w*2 + 10".parse().unwrap();
        let shown: Vec<String> = display_stages(&big)
            .into_iter()
            .map(|s| s.map_or("...".into(), |o| o.to_string()))
            .collect();
        assert_eq!(
            shown,
            ["0", "1", "2", "3", "...", "w*2", "...", "w*2 + 8", "w*2 + 9", "w*2 + 10"]
        );
    }

    #[test]
    fn env_flag_values() {
        assert!(env_flag(Some("1")));
        assert!(env_flag(Some("TRUE")));
        assert!(!env_flag(Some("0")));
        assert!(!env_flag(None));
    }

    #[test]
    fn gch_from_env() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_env(
            ["transfinitum", "eval", "2^aleph_0 = aleph_1"],
            Some("1"),
            &mut out,
            &mut err,
        );
        assert_eq!(code, 0);
        assert_eq!(String::from_utf8(out).unwrap(), "true\n");
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
        assert!(err.is_empty());
    }

    #[test]
    fn usage_errors_are_single_lines() {
        let (code, out, err) = run_args(&["frobnicate"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("error[USAGE]"));
    }
}
