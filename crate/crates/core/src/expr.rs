//! The expression language shared by the command line and the web demo.
//!
//! ```text
//! expr    := sum (("<" | "=" | ">") sum)?
//! sum     := product ("+" product)*
//! product := power (("*" | "·") power)*
//! power   := atom ("^" power)?
//! atom    := NAT | "w" | "ω" | aleph index | "(" expr ")"
//! aleph   := "aleph_" | "ℵ" | "ℵ_"
//! index   := NAT | "w" | "ω" | "(" expr ")"
//! ```
//!
//! `+` and `*` associate to the left, `^` to the right. Natural numbers are
//! shared between the ordinal and cardinal worlds; anything else mixing the
//! two is a type error. `-` and `/` are recognised only to be rejected.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::cardinal::{Cardinal, CardinalConfig, CardinalError, CardinalOrdering};
use crate::ordinal::Ordinal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Less,
    Equal,
    Greater,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Nat(BigUint),
    Omega,
    Aleph(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Compare(CmpOp, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("`{op}` at {position}: ordinal {name} is not defined")]
    OpUnsupported {
        position: usize,
        op: String,
        name: &'static str,
    },
    #[error(
        "`Ord` at {position} names the class of all ordinals, which is not a set: \
         its order type would be an ordinal exceeding every ordinal (Burali-Forti)"
    )]
    ProperClass { position: usize },
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SYNTAX",
            ParseError::OpUnsupported { .. } => "OP_UNSUPPORTED",
            ParseError::ProperClass { .. } => "PROPER_CLASS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("type mismatch: cannot apply `{op}` to {left} and {right}")]
    TypeMismatch {
        op: &'static str,
        left: &'static str,
        right: &'static str,
    },
    #[error(transparent)]
    Cardinal(#[from] CardinalError),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("result too large to materialise: {0}")]
    TooLarge(String),
}

impl EvalError {
    pub fn code(&self) -> &'static str {
        match self {
            EvalError::TypeMismatch { .. } => "TYPE_MISMATCH",
            EvalError::Cardinal(CardinalError::UnresolvedPower(_)) => "UNRESOLVED_POWER",
            EvalError::Cardinal(CardinalError::FiniteOverflow(_)) => "TOO_LARGE",
            EvalError::Unsupported(_) => "UNSUPPORTED",
            EvalError::TooLarge(_) => "TOO_LARGE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl ExprError {
    pub fn code(&self) -> &'static str {
        match self {
            ExprError::Parse(e) => e.code(),
            ExprError::Eval(e) => e.code(),
        }
    }
}

/// Three-valued outcome of a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Ordinal(Ordinal),
    Cardinal(Cardinal),
    Truth(Truth),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Ordinal(_) => "ordinal",
            Value::Cardinal(_) => "cardinal",
            Value::Truth(_) => "boolean",
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Incomparable => "incomparable",
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ordinal(o) => write!(f, "{o}"),
            Value::Cardinal(c) => write!(f, "{c}"),
            Value::Truth(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(BigUint),
    Omega,
    Aleph,
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    Cmp(CmpOp),
    Minus(String),
    Slash(String),
    ProperClass,
    Unknown(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Omega => "`w`".into(),
            Tok::Aleph => "`aleph_`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Cmp(CmpOp::Less) => "`<`".into(),
            Tok::Cmp(CmpOp::Equal) => "`=`".into(),
            Tok::Cmp(CmpOp::Greater) => "`>`".into(),
            Tok::Minus(s) | Tok::Slash(s) => format!("`{s}`"),
            Tok::ProperClass => "`Ord`".into(),
            Tok::Unknown(s) => format!("`{s}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let rest = &src[pos..];
        if c.is_ascii_digit() {
            let len = rest.bytes().take_while(u8::is_ascii_digit).count();
            let n = rest[..len].parse::<BigUint>().expect("digits");
            out.push((pos, Tok::Nat(n)));
            for _ in 0..len {
                chars.next();
            }
            continue;
        }
        if rest.starts_with("aleph_") {
            out.push((pos, Tok::Aleph));
            for _ in 0.."aleph_".len() {
                chars.next();
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let word: String = rest.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
            let tok = match word.as_str() {
                "w" | "ω" => Tok::Omega,
                "Ord" => Tok::ProperClass,
                "ℵ" | "ℵ_" => Tok::Aleph,
                _ if word.starts_with('ℵ') => {
                    // ℵ0, ℵ_1: split the alias off and lex the rest normally
                    out.push((pos, Tok::Aleph));
                    let skip = if word.starts_with("ℵ_") { 2 } else { 1 };
                    for _ in 0..skip {
                        chars.next();
                    }
                    continue;
                }
                _ => Tok::Unknown(word.clone()),
            };
            out.push((pos, tok));
            for _ in 0..word.chars().count() {
                chars.next();
            }
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '*' | '·' | '⋅' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '<' => Tok::Cmp(CmpOp::Less),
            '=' => Tok::Cmp(CmpOp::Equal),
            '>' => Tok::Cmp(CmpOp::Greater),
            '-' | '−' => Tok::Minus(c.to_string()),
            '/' | '÷' => Tok::Slash(c.to_string()),
            other => Tok::Unknown(other.to_string()),
        };
        out.push((pos, tok));
        chars.next();
    }
    out.push((src.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

const OPERAND: &[&str] = &["a number", "`w`", "`aleph_`", "`(`"];
const INDEX: &[&str] = &["a number", "`w`", "`(`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail(&self, expected: &[&'static str]) -> ParseError {
        let position = self.pos();
        match self.peek() {
            Tok::Minus(op) => ParseError::OpUnsupported {
                position,
                op: op.clone(),
                name: "subtraction",
            },
            Tok::Slash(op) => ParseError::OpUnsupported {
                position,
                op: op.clone(),
                name: "division",
            },
            Tok::ProperClass => ParseError::ProperClass { position },
            other => ParseError::Syntax {
                position,
                expected: expected.to_vec(),
                found: other.describe(),
            },
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let left = self.sum()?;
        if let Tok::Cmp(op) = *self.peek() {
            self.bump();
            let right = self.sum()?;
            return Ok(Expr::Compare(op, Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.product()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let right = self.product()?;
            left = Expr::Add(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.power()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let right = self.power()?;
            left = Expr::Mul(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exponent = self.power()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Expr::Nat(n))
            }
            Tok::Omega => {
                self.bump();
                Ok(Expr::Omega)
            }
            Tok::Aleph => {
                self.bump();
                let index = self.index()?;
                Ok(Expr::Aleph(Box::new(index)))
            }
            Tok::LParen => self.parenthesised(),
            _ => Err(self.fail(OPERAND)),
        }
    }

    fn index(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Expr::Nat(n))
            }
            Tok::Omega => {
                self.bump();
                Ok(Expr::Omega)
            }
            Tok::LParen => self.parenthesised(),
            _ => Err(self.fail(INDEX)),
        }
    }

    fn parenthesised(&mut self) -> Result<Expr, ParseError> {
        self.bump();
        let inner = self.expr()?;
        if *self.peek() != Tok::RParen {
            return Err(self.fail(&["`)`"]));
        }
        self.bump();
        Ok(inner)
    }
}

/// Parses an expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src), at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.fail(&["an operator", "end of input"]));
    }
    Ok(e)
}

impl FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

// Printing: levels 0 = comparison, 1 = sum, 2 = product, 3 = power, 4 = atom.
impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Compare(..) => 0,
            Expr::Add(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            Expr::Nat(_) | Expr::Omega | Expr::Aleph(_) => 4,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Nat(n) => write!(f, "{n}"),
            Expr::Omega => f.write_str("w"),
            Expr::Aleph(index) => {
                f.write_str("aleph_")?;
                match **index {
                    Expr::Nat(ref n) => write!(f, "{n}"),
                    ref other => {
                        f.write_str("(")?;
                        other.fmt_at(f, 0)?;
                        f.write_str(")")
                    }
                }
            }
            Expr::Add(l, r) => {
                l.fmt_at(f, 1)?;
                f.write_str(" + ")?;
                r.fmt_at(f, 2)
            }
            Expr::Mul(l, r) => {
                l.fmt_at(f, 2)?;
                f.write_str("*")?;
                r.fmt_at(f, 3)
            }
            Expr::Pow(l, r) => {
                l.fmt_at(f, 4)?;
                f.write_str("^")?;
                r.fmt_at(f, 3)
            }
            Expr::Compare(op, l, r) => {
                l.fmt_at(f, 1)?;
                f.write_str(match op {
                    CmpOp::Less => " < ",
                    CmpOp::Equal => " = ",
                    CmpOp::Greater => " > ",
                })?;
                r.fmt_at(f, 1)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Largest number of CNF terms a power of a multi-term base may produce.
const MAX_POWER_TERMS: u64 = 1 << 20;
/// Largest bit length of a finite power.
const MAX_FINITE_BITS: u64 = 1 << 24;

/// Evaluates an expression under the given configuration.
pub fn eval(e: &Expr, cfg: CardinalConfig) -> Result<Value, EvalError> {
    match e {
        Expr::Nat(n) => Ok(Value::Ordinal(Ordinal::from(n.clone()))),
        Expr::Omega => Ok(Value::Ordinal(Ordinal::omega())),
        Expr::Aleph(index) => match eval(index, cfg)? {
            Value::Ordinal(o) => Ok(Value::Cardinal(Cardinal::Aleph(o))),
            other => Err(EvalError::TypeMismatch {
                op: "aleph_",
                left: "index",
                right: other.kind(),
            }),
        },
        Expr::Add(l, r) => binary("+", eval(l, cfg)?, eval(r, cfg)?, cfg),
        Expr::Mul(l, r) => binary("*", eval(l, cfg)?, eval(r, cfg)?, cfg),
        Expr::Pow(l, r) => power(eval(l, cfg)?, eval(r, cfg)?, cfg),
        Expr::Compare(op, l, r) => compare(*op, eval(l, cfg)?, eval(r, cfg)?, cfg),
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, cfg: CardinalConfig) -> Result<Value, ExprError> {
    Ok(eval(&parse(src)?, cfg)?)
}

enum Operands {
    Ordinals(Ordinal, Ordinal),
    Cardinals(Cardinal, Cardinal),
}

/// Unifies two operands; finite ordinals double as finite cardinals.
fn unify(op: &'static str, a: Value, b: Value) -> Result<Operands, EvalError> {
    let mismatch = |a: &Value, b: &Value| EvalError::TypeMismatch {
        op,
        left: a.kind(),
        right: b.kind(),
    };
    match (a, b) {
        (Value::Ordinal(x), Value::Ordinal(y)) => Ok(Operands::Ordinals(x, y)),
        (Value::Cardinal(x), Value::Cardinal(y)) => Ok(Operands::Cardinals(x, y)),
        (Value::Ordinal(x), Value::Cardinal(y)) => match x.as_finite() {
            Some(n) => Ok(Operands::Cardinals(Cardinal::Finite(n), y)),
            None => Err(mismatch(&Value::Ordinal(x), &Value::Cardinal(y))),
        },
        (Value::Cardinal(x), Value::Ordinal(y)) => match y.as_finite() {
            Some(n) => Ok(Operands::Cardinals(x, Cardinal::Finite(n))),
            None => Err(mismatch(&Value::Cardinal(x), &Value::Ordinal(y))),
        },
        (a, b) => Err(mismatch(&a, &b)),
    }
}

fn binary(op: &'static str, a: Value, b: Value, cfg: CardinalConfig) -> Result<Value, EvalError> {
    match unify(op, a, b)? {
        Operands::Ordinals(x, y) => Ok(Value::Ordinal(if op == "+" { &x + &y } else { &x * &y })),
        Operands::Cardinals(x, y) => {
            let r = if op == "+" { cfg.add(&x, &y)? } else { cfg.mul(&x, &y)? };
            Ok(Value::Cardinal(r))
        }
    }
}

fn power(base: Value, exponent: Value, cfg: CardinalConfig) -> Result<Value, EvalError> {
    match unify("^", base, exponent)? {
        Operands::Ordinals(x, y) => ordinal_power(&x, &y).map(Value::Ordinal),
        Operands::Cardinals(Cardinal::Finite(two), k) if two == BigUint::from(2u32) => {
            Ok(Value::Cardinal(cfg.pow2(&k)?))
        }
        Operands::Cardinals(Cardinal::Finite(b), Cardinal::Finite(e)) => finite_power(&b, &e).map(Value::Cardinal),
        Operands::Cardinals(k, Cardinal::Finite(e)) => {
            // κ^n = κ for infinite κ and n ≥ 1
            if e.is_zero() {
                Ok(Value::Cardinal(Cardinal::finite(1)))
            } else {
                Ok(Value::Cardinal(cfg.normalize(&k)))
            }
        }
        Operands::Cardinals(b, k) => Err(EvalError::Unsupported(format!(
            "cardinal power {b}^{k}; only 2^k and powers with finite exponents are evaluated"
        ))),
    }
}

fn finite_power(b: &BigUint, e: &BigUint) -> Result<Cardinal, EvalError> {
    let bits = b.bits().max(1);
    let e_small = e.to_u64().filter(|e| e.saturating_mul(bits) <= MAX_FINITE_BITS);
    match e_small {
        Some(e) => Ok(Cardinal::Finite(b.pow(e as u32))),
        None if b <= &BigUint::from(1u32) => Ok(Cardinal::Finite(if e.is_zero() {
            BigUint::from(1u32)
        } else {
            b.clone()
        })),
        None => Err(EvalError::TooLarge(format!("{b}^{e}"))),
    }
}

fn ordinal_power(x: &Ordinal, y: &Ordinal) -> Result<Ordinal, EvalError> {
    if let (Some(b), Some(e)) = (x.as_finite(), y.as_finite()) {
        return match finite_power(&b, &e)? {
            Cardinal::Finite(n) => Ok(Ordinal::from(n)),
            _ => unreachable!("finite powers are finite"),
        };
    }
    let k = y.finite_part();
    let too_large = || EvalError::TooLarge(format!("({x})^({y})"));
    let k = k.to_u64().ok_or_else(too_large)?;
    if x.as_finite().is_some() {
        // finite base: the finite part of the exponent lands in a coefficient
        let b = x.as_finite().unwrap();
        finite_power(&b, &BigUint::from(k))?;
    } else if x.terms().len() > 1 && k.saturating_mul(x.terms().len() as u64) > MAX_POWER_TERMS {
        return Err(too_large());
    }
    if k > u64::from(u32::MAX) {
        return Err(too_large());
    }
    Ok(x.pow(y))
}

fn compare(op: CmpOp, a: Value, b: Value, cfg: CardinalConfig) -> Result<Value, EvalError> {
    use std::cmp::Ordering;
    let ordering = match unify("comparison", a, b)? {
        Operands::Ordinals(x, y) => Some(x.cmp(&y)),
        Operands::Cardinals(x, y) => match cfg.compare(&x, &y) {
            CardinalOrdering::Less => Some(Ordering::Less),
            CardinalOrdering::Equal => Some(Ordering::Equal),
            CardinalOrdering::Greater => Some(Ordering::Greater),
            CardinalOrdering::Incomparable => None,
        },
    };
    let truth = match ordering {
        None => Truth::Incomparable,
        Some(o) => {
            let want = match op {
                CmpOp::Less => Ordering::Less,
                CmpOp::Equal => Ordering::Equal,
                CmpOp::Greater => Ordering::Greater,
            };
            if o == want {
                Truth::True
            } else {
                Truth::False
            }
        }
    };
    Ok(Value::Truth(truth))
}

impl FromStr for Ordinal {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match eval_str(s, CardinalConfig::default())? {
            Value::Ordinal(o) => Ok(o),
            other => Err(ExprError::Eval(EvalError::TypeMismatch {
                op: "ordinal literal",
                left: "ordinal",
                right: other.kind(),
            })),
        }
    }
}

impl FromStr for Cardinal {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match eval_str(s, CardinalConfig::default())? {
            Value::Cardinal(c) => Ok(c),
            Value::Ordinal(o) if o.is_finite() => Ok(Cardinal::Finite(o.as_finite().unwrap())),
            other => Err(ExprError::Eval(EvalError::TypeMismatch {
                op: "cardinal literal",
                left: "cardinal",
                right: other.kind(),
            })),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: CardinalConfig = CardinalConfig { gch: false };
    const GCH: CardinalConfig = CardinalConfig { gch: true };

    fn show(src: &str, cfg: CardinalConfig) -> String {
        eval_str(src, cfg).unwrap().to_string()
    }

    #[test]
    fn parse_examples() {
        let e = parse("w^w*3 + w*2 + 5").unwrap();
        assert_eq!(e.to_string(), "w^w*3 + w*2 + 5");
        assert_eq!(show("1 + w", PLAIN), "w");
        assert_eq!(show("1 + ω", PLAIN), "w");
        let err = parse("w - 1").unwrap_err();
        assert_eq!(err.code(), "OP_UNSUPPORTED");
        assert!(matches!(err, ParseError::OpUnsupported { position: 2, .. }));
        assert_eq!(parse("w / 2").unwrap_err().code(), "OP_UNSUPPORTED");
        assert_eq!(parse("w ÷ 2").unwrap_err().code(), "OP_UNSUPPORTED");
    }

    #[test]
    fn eval_examples() {
        assert_eq!(show("2*w", PLAIN), "w");
        assert_eq!(show("2^aleph_0 > aleph_0", PLAIN), "true");
        assert_eq!(show("2^aleph_0 = aleph_1", GCH), "true");
        assert_eq!(show("2^aleph_0 = aleph_1", PLAIN), "incomparable");
        assert_eq!(show("w*2 + w", PLAIN), "w*3");
        assert_eq!(show("w^w^w", PLAIN), "w^(w^w)");
        assert_eq!(show("(w^w)^w", PLAIN), "w^(w^2)");
    }

    #[test]
    fn cardinal_expressions() {
        assert_eq!(show("aleph_0 + 5", PLAIN), "aleph_0");
        assert_eq!(show("3 * aleph_0", PLAIN), "aleph_0");
        assert_eq!(show("aleph_(w+1)", PLAIN), "aleph_(w + 1)");
        assert_eq!(show("ℵ_0 + ℵ0", PLAIN), "aleph_0");
        assert_eq!(show("2^aleph_3", GCH), "aleph_4");
        assert_eq!(show("2^aleph_3", PLAIN), "2^aleph_3");
        assert_eq!(show("2^(2^aleph_0)", PLAIN), "2^(2^aleph_0)");
        assert_eq!(show("2^10 < aleph_0", PLAIN), "true");
        assert_eq!(show("aleph_2^3", PLAIN), "aleph_2");
        assert_eq!(show("aleph_0 * 0", PLAIN), "0");
    }

    #[test]
    fn type_and_value_errors() {
        let mismatch = eval_str("w + aleph_0", PLAIN).unwrap_err();
        assert_eq!(mismatch.code(), "TYPE_MISMATCH");
        let unresolved = eval_str("2^aleph_0 + aleph_1", PLAIN).unwrap_err();
        assert_eq!(unresolved.code(), "UNRESOLVED_POWER");
        assert_eq!(show("2^aleph_0 + aleph_1", GCH), "aleph_1");
        assert_eq!(eval_str("(1 < 2) + 1", PLAIN).unwrap_err().code(), "TYPE_MISMATCH");
        assert_eq!(eval_str("aleph_(aleph_0)", PLAIN).unwrap_err().code(), "TYPE_MISMATCH");
        assert_eq!(eval_str("3^aleph_0", PLAIN).unwrap_err().code(), "UNSUPPORTED");
        assert_eq!(eval_str("10^100000000", PLAIN).unwrap_err().code(), "TOO_LARGE");
        assert_eq!(eval_str("(w+1)^(10^9)", PLAIN).unwrap_err().code(), "TOO_LARGE");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("w + + 1").unwrap_err() {
            ParseError::Syntax { position, found, .. } => {
                assert_eq!(position, 4);
                assert_eq!(found, "`+`");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("(w + 1"), Err(ParseError::Syntax { position: 6, .. })));
        assert!(matches!(parse("w x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("w < 1 < 2"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn proper_class_is_rejected() {
        let err = parse("Ord + 1").unwrap_err();
        assert_eq!(err.code(), "PROPER_CLASS");
        assert!(err.to_string().contains("Burali-Forti"));
    }

    #[test]
    fn ordinal_and_cardinal_from_str() {
        let o: Ordinal = "w^2 + w*3 + 1".parse().unwrap();
        assert_eq!(o.to_string(), "w^2 + w*3 + 1");
        assert!("aleph_0".parse::<Ordinal>().is_err());
        let c: Cardinal = "aleph_(w*2)".parse().unwrap();
        assert_eq!(c.to_string(), "aleph_(w*2)");
        assert_eq!("7".parse::<Cardinal>().unwrap(), Cardinal::finite(7));
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        for src in ["(w + 1)*2", "w^(w + 1)", "2^aleph_(w)", "w*(w + 1) = w^2 + w"] {
            assert_eq!(parse(src).unwrap().to_string(), src);
        }
        assert_eq!(parse("((w))").unwrap().to_string(), "w");
        assert_eq!(parse("w+(1+w)").unwrap().to_string(), "w + (1 + w)");
    }
}
