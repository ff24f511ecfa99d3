//! Symbolic countable closed subsets of `[0, 1]` and their transfinite
//! derived sets.
//!
//! Every term denotes a closed set:
//!
//! * `Point` is `{0}`;
//! * `Omega(t)` is `{0}` together with a copy of `t` scaled into each interval
//!   `[1/(n+2), 1/(n+1))`, so the copies pile up at 0;
//! * `Fam(λ; β)` is `{0}` with the `n`-th copy holding the `β`-th derived set
//!   of the canonical set of rank `λ[n] + 1`.
//!
//! Keeping the derivative stage `β` inside `Fam` turns the intersection at a
//! limit stage into a rewrite of that one field.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ordinal::Ordinal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SetTerm {
    Empty,
    Point,
    Omega(Box<SetTerm>),
    Fam { lambda: Ordinal, beta: Ordinal },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetTermError {
    #[error("Fam index {0} is not a limit ordinal")]
    NotALimit(Ordinal),
    #[error("Fam stage {beta} exceeds its index {lambda}")]
    StageTooLarge { lambda: Ordinal, beta: Ordinal },
    #[error("cannot parse set term at byte {position}: {message}")]
    Syntax { position: usize, message: String },
}

impl SetTerm {
    pub fn omega(child: SetTerm) -> SetTerm {
        match child {
            SetTerm::Empty => SetTerm::Point,
            child => SetTerm::Omega(Box::new(child)),
        }
    }

    pub fn fam(lambda: Ordinal, beta: Ordinal) -> Result<SetTerm, SetTermError> {
        if !lambda.is_limit() {
            return Err(SetTermError::NotALimit(lambda));
        }
        if beta > lambda {
            return Err(SetTermError::StageTooLarge { lambda, beta });
        }
        if beta == lambda {
            return Ok(SetTerm::Point);
        }
        Ok(SetTerm::Fam { lambda, beta })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SetTerm::Empty)
    }
}

/// The set of Cantor–Bendixson rank `α + 1` whose `α`-th derived set is `{0}`.
pub fn canonical(alpha: &Ordinal) -> SetTerm {
    let limit = alpha.limit_part();
    let mut term = if limit.is_zero() {
        SetTerm::Point
    } else {
        SetTerm::Fam {
            lambda: limit,
            beta: Ordinal::zero(),
        }
    };
    let mut k = alpha.finite_part();
    while !k.is_zero() {
        term = SetTerm::Omega(Box::new(term));
        k -= 1u32;
    }
    term
}

/// The derived set: all accumulation points.
pub fn derivative(t: &SetTerm) -> SetTerm {
    match t {
        SetTerm::Empty | SetTerm::Point => SetTerm::Empty,
        SetTerm::Omega(child) => SetTerm::omega(derivative(child)),
        SetTerm::Fam { lambda, beta } => {
            SetTerm::fam(lambda.clone(), beta.succ()).expect("stage stays below the index")
        }
    }
}

/// The `alpha`-th derived set, taking intersections at limit stages.
pub fn derivative_iter(t: &SetTerm, alpha: &Ordinal) -> SetTerm {
    if alpha.is_zero() {
        return t.clone();
    }
    match t {
        SetTerm::Empty | SetTerm::Point => SetTerm::Empty,
        SetTerm::Omega(child) => {
            // Omega(c) keeps its shape while c survives, collapses to {0} at
            // the stage c vanishes, and is empty afterwards.
            let rank = cb_rank(child);
            if alpha < &rank {
                SetTerm::Omega(Box::new(derivative_iter(child, alpha)))
            } else if *alpha == rank {
                SetTerm::Point
            } else {
                SetTerm::Empty
            }
        }
        SetTerm::Fam { lambda, beta } => {
            let stage = beta + alpha;
            if stage > *lambda {
                SetTerm::Empty
            } else {
                SetTerm::fam(lambda.clone(), stage).expect("validated stage")
            }
        }
    }
}

/// The least `α` with `t^(α)` empty.
pub fn cb_rank(t: &SetTerm) -> Ordinal {
    match t {
        SetTerm::Empty => Ordinal::zero(),
        SetTerm::Point => Ordinal::one(),
        SetTerm::Omega(child) => cb_rank(child).succ(),
        SetTerm::Fam { lambda, beta } => left_difference(beta, lambda).succ(),
    }
}

/// The unique `δ` with `β + δ = λ`, for `β ≤ λ`, found by stripping the common
/// Cantor-normal-form prefix.
fn left_difference(beta: &Ordinal, lambda: &Ordinal) -> Ordinal {
    debug_assert!(beta <= lambda);
    let (b, l) = (beta.terms(), lambda.terms());
    let mut i = 0;
    while i < b.len() && i < l.len() && b[i] == l[i] {
        i += 1;
    }
    if i == b.len() {
        return Ordinal::from_terms(l[i..].iter().map(|t| (t.exponent().clone(), t.coefficient().clone())))
            .expect("suffix of a normal form");
    }
    let mut terms: Vec<(Ordinal, BigUint)> = Vec::new();
    if b[i].exponent() == l[i].exponent() {
        terms.push((l[i].exponent().clone(), l[i].coefficient() - b[i].coefficient()));
        i += 1;
    }
    terms.extend(l[i..].iter().map(|t| (t.exponent().clone(), t.coefficient().clone())));
    Ordinal::from_terms(terms).expect("suffix of a normal form")
}

/// Left end of the `n`-th copy interval `[1/(n+2), 1/(n+1))`.
fn copy_interval(n: usize) -> (BigRational, BigRational) {
    let lo = BigRational::new(1.into(), (n as u64 + 2).into());
    let hi = BigRational::new(1.into(), (n as u64 + 1).into());
    (lo, hi)
}

/// The points of `t` obtained by keeping only the first `depth` copies at
/// every `Omega` and `Fam` node. Always a subset of the denoted set.
///
/// `Fam` children grow in rank with the copy index, so their truncations grow
/// much faster than those of finite-rank terms; keep `depth` small for them.
pub fn realize(t: &SetTerm, depth: usize) -> BTreeSet<BigRational> {
    let mut out = BTreeSet::new();
    realize_into(t, depth, &BigRational::zero(), &BigRational::one(), &mut out);
    out
}

fn realize_into(t: &SetTerm, depth: usize, offset: &BigRational, scale: &BigRational, out: &mut BTreeSet<BigRational>) {
    match t {
        SetTerm::Empty => {}
        SetTerm::Point => {
            out.insert(offset.clone());
        }
        SetTerm::Omega(child) => {
            out.insert(offset.clone());
            for n in 0..depth {
                let (lo, hi) = copy_interval(n);
                let child_offset = offset + scale * &lo;
                let child_scale = scale * (hi - lo);
                realize_into(child, depth, &child_offset, &child_scale, out);
            }
        }
        SetTerm::Fam { lambda, beta } => {
            out.insert(offset.clone());
            for n in 0..depth {
                let step = lambda.fundamental_sequence(n as u64).expect("Fam index is a limit");
                let child = derivative_iter(&canonical(&step), beta);
                let (lo, hi) = copy_interval(n);
                let child_offset = offset + scale * &lo;
                let child_scale = scale * (hi - lo);
                realize_into(&child, depth, &child_offset, &child_scale, out);
            }
        }
    }
}

/// Number of points [`realize`] produces, computed combinatorially.
pub fn realize_count(t: &SetTerm, depth: usize) -> BigUint {
    match t {
        SetTerm::Empty => BigUint::zero(),
        SetTerm::Point => BigUint::one(),
        SetTerm::Omega(child) => realize_count(child, depth) * depth + 1u32,
        SetTerm::Fam { lambda, beta } => {
            let mut total = BigUint::one();
            for n in 0..depth {
                let step = lambda.fundamental_sequence(n as u64).expect("limit");
                total += realize_count(&derivative_iter(&canonical(&step), beta), depth);
            }
            total
        }
    }
}

impl fmt::Display for SetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetTerm::Empty => f.write_str("Empty"),
            SetTerm::Point => f.write_str("Point"),
            SetTerm::Omega(child) => write!(f, "Omega({child})"),
            SetTerm::Fam { lambda, beta } => write!(f, "Fam({lambda}; {beta})"),
        }
    }
}

impl fmt::Debug for SetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetTerm({self})")
    }
}

impl FromStr for SetTerm {
    type Err = SetTermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = TermParser { src: s, pos: 0 };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(t)
    }
}

struct TermParser<'a> {
    src: &'a str,
    pos: usize,
}

impl TermParser<'_> {
    fn error(&self, message: &str) -> SetTermError {
        SetTermError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), SetTermError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn term(&mut self) -> Result<SetTerm, SetTermError> {
        if self.eat("Empty") {
            Ok(SetTerm::Empty)
        } else if self.eat("Point") {
            Ok(SetTerm::Point)
        } else if self.eat("Omega") {
            self.expect("(")?;
            let child = self.term()?;
            self.expect(")")?;
            Ok(SetTerm::omega(child))
        } else if self.eat("Fam") {
            self.expect("(")?;
            let lambda = self.ordinal_until(';')?;
            self.expect(";")?;
            let beta = self.ordinal_until(')')?;
            self.expect(")")?;
            SetTerm::fam(lambda, beta)
        } else {
            Err(self.error("expected Empty, Point, Omega(...) or Fam(...; ...)"))
        }
    }

    /// Parses an ordinal running up to `stop` at parenthesis depth zero.
    fn ordinal_until(&mut self, stop: char) -> Result<Ordinal, SetTermError> {
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.src[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                c if c == stop && depth == 0 => {
                    let text = &self.src[start..start + i];
                    self.pos = start + i;
                    return text.parse::<Ordinal>().map_err(|e| SetTermError::Syntax {
                        position: start,
                        message: e.to_string(),
                    });
                }
                _ => {}
            }
        }
        Err(self.error(&format!("expected `{stop}`")))
    }
}
