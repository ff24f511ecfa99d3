//! Expressions over fundamental-sequence reals for the `real` subcommand.
//!
//! ```text
//! real    := sum ("=" | "<" | ">") sum | sum
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "·") unary)*
//! unary   := "-" unary | atom
//! atom    := RATIONAL | "sqrt" "(" "-"? RATIONAL ")" | "(" sum ")"
//! ```
//!
//! Rational literals may be written as fractions `p/q`, which is the only
//! place `/` is allowed.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::expr::{CmpOp, ParseError};
use crate::real::{self, Apartness, FundamentalSeq, Rational, RealError};

#[derive(Clone, Debug, PartialEq)]
pub enum RealExpr {
    Rational(Rational),
    Sqrt(Rational),
    Neg(Box<RealExpr>),
    Add(Box<RealExpr>, Box<RealExpr>),
    Sub(Box<RealExpr>, Box<RealExpr>),
    Mul(Box<RealExpr>, Box<RealExpr>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum RealQuery {
    Value(RealExpr),
    Compare(CmpOp, RealExpr, RealExpr),
}

/// Outcome of evaluating a [`RealQuery`] at a precision.
#[derive(Clone, Debug, PartialEq)]
pub enum RealAnswer {
    Approximation(Rational),
    Apart(Apartness),
}

/// Parses `p/q`, an integer, a decimal such as `0.001`, or `1e-6`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int}{frac}").parse().unwrap_or_default();
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        Rational::from_integer(all * ten.pow(scale as u32))
    } else {
        Rational::new(all, ten.pow((-scale) as u32))
    };
    if negative {
        q = -q;
    }
    Some(q)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Cmp(CmpOp),
    Unknown(String),
    End,
}

fn lex(src: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let mut j = i;
            while j < bytes.len() {
                let ch = bytes[j].1;
                let exp_sign = matches!(ch, '-' | '+') && j > i && matches!(bytes[j - 1].1, 'e' | 'E');
                if ch.is_ascii_digit() || ch == '.' || ch == 'e' || ch == 'E' || exp_sign {
                    j += 1;
                } else {
                    break;
                }
            }
            let end = bytes.get(j).map_or(src.len(), |b| b.0);
            out.push((pos, Tok::Num(src[pos..end].to_string())));
            i = j;
            continue;
        }
        if c.is_alphabetic() {
            let mut j = i;
            while j < bytes.len() && bytes[j].1.is_alphanumeric() {
                j += 1;
            }
            let end = bytes.get(j).map_or(src.len(), |b| b.0);
            let word = &src[pos..end];
            out.push((
                pos,
                if word == "sqrt" || word == "√" {
                    Tok::Sqrt
                } else {
                    Tok::Unknown(word.to_string())
                },
            ));
            i = j;
            continue;
        }
        let tok = match c {
            '√' => Tok::Sqrt,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' | '⋅' => Tok::Star,
            '/' | '÷' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '<' => Tok::Cmp(CmpOp::Less),
            '=' => Tok::Cmp(CmpOp::Equal),
            '>' => Tok::Cmp(CmpOp::Greater),
            other => Tok::Unknown(other.to_string()),
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

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
        match self.peek() {
            Tok::Slash => ParseError::OpUnsupported {
                position: self.pos(),
                op: "/".into(),
                name: "division",
            },
            other => ParseError::Syntax {
                position: self.pos(),
                expected: expected.to_vec(),
                found: match other {
                    Tok::End => "end of input".into(),
                    Tok::Num(s) | Tok::Unknown(s) => format!("`{s}`"),
                    t => format!("{t:?}"),
                },
            },
        }
    }

    fn query(&mut self) -> Result<RealQuery, ParseError> {
        let left = self.sum()?;
        if let Tok::Cmp(op) = *self.peek() {
            self.bump();
            let right = self.sum()?;
            return Ok(RealQuery::Compare(op, left, right));
        }
        Ok(RealQuery::Value(left))
    }

    fn sum(&mut self) -> Result<RealExpr, ParseError> {
        let mut left = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    left = RealExpr::Add(Box::new(left), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    left = RealExpr::Sub(Box::new(left), Box::new(self.product()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn product(&mut self) -> Result<RealExpr, ParseError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            left = RealExpr::Mul(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<RealExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(RealExpr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Num(text) = self.peek().clone() else {
            return Err(self.fail(&["a rational"]));
        };
        let start = self.pos();
        self.bump();
        let mut text = text;
        if *self.peek() == Tok::Slash {
            if let Tok::Num(den) = &self.toks[self.at + 1].1 {
                text = format!("{text}/{den}");
                self.bump();
                self.bump();
            }
        }
        let q = parse_rational(&text).ok_or(ParseError::Syntax {
            position: start,
            expected: vec!["a rational"],
            found: format!("`{text}`"),
        })?;
        Ok(if negative { -q } else { q })
    }

    fn atom(&mut self) -> Result<RealExpr, ParseError> {
        match self.peek() {
            Tok::Num(_) => Ok(RealExpr::Rational(self.rational()?)),
            Tok::Sqrt => {
                self.bump();
                if *self.peek() != Tok::LParen {
                    return Err(self.fail(&["`(`"]));
                }
                self.bump();
                let q = self.rational()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.fail(&["`)`"]));
                }
                self.bump();
                Ok(RealExpr::Sqrt(q))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.fail(&["`)`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.fail(&["a rational", "`sqrt(`", "`(`"])),
        }
    }
}

pub fn parse_real(src: &str) -> Result<RealQuery, ParseError> {
    let mut p = Parser { toks: lex(src), at: 0 };
    let q = p.query()?;
    if *p.peek() != Tok::End {
        return Err(p.fail(&["an operator", "end of input"]));
    }
    Ok(q)
}

pub fn build(e: &RealExpr) -> Result<FundamentalSeq, RealError> {
    Ok(match e {
        RealExpr::Rational(q) => real::from_rational(q.clone()),
        RealExpr::Sqrt(q) => real::sqrt(q)?,
        RealExpr::Neg(x) => real::neg(&build(x)?),
        RealExpr::Add(x, y) => real::add(&build(x)?, &build(y)?),
        RealExpr::Sub(x, y) => real::sub(&build(x)?, &build(y)?),
        RealExpr::Mul(x, y) => real::mul(&build(x)?, &build(y)?),
    })
}

/// Evaluates a query at precision `eps`: a value becomes a rational within
/// `eps`, a comparison becomes an apartness verdict.
pub fn answer(q: &RealQuery, eps: &Rational) -> Result<RealAnswer, RealError> {
    match q {
        RealQuery::Value(e) => Ok(RealAnswer::Approximation(real::approx_to(&build(e)?, eps)?)),
        RealQuery::Compare(_, l, r) => Ok(RealAnswer::Apart(real::apart(&build(l)?, &build(r)?, eps)?)),
    }
}

/// Reads an apartness verdict against the comparison that was asked.
pub fn verdict_text(op: CmpOp, a: Apartness) -> &'static str {
    match (op, a) {
        (_, Apartness::Indistinguishable) if op == CmpOp::Equal => "indistinguishable",
        (_, Apartness::Indistinguishable) => "undecided",
        (CmpOp::Equal, Apartness::Separated(_)) => "false",
        (CmpOp::Less, Apartness::Separated(o)) => bool_text(o == Ordering::Less),
        (CmpOp::Greater, Apartness::Separated(o)) => bool_text(o == Ordering::Greater),
    }
}

fn bool_text(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn default_eps() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1_000_000))
}
