//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite, strictly descending sum `ω^e₁·c₁ + … + ω^eₖ·cₖ`
//! whose exponents are themselves ordinals in the same form. Because every
//! value is built from finitely nested terms, nothing at or above ε₀ can be
//! constructed, and the set of representable values is closed under `+`, `·`
//! and exponentiation.
//!
//! Addition and multiplication follow the usual left-to-right ordinal
//! convention: `a·b` is `a` repeated `b` times, so `2·ω = ω` while `ω·2 = ω+ω`.
//! Subtraction and division are intentionally not provided.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::cardinal::Cardinal;

/// One `ω^exponent · coefficient` summand of a Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

/// An ordinal below ε₀, always kept in canonical Cantor normal form.
///
/// Equality is structural: two ordinals are equal iff their term lists are
/// identical, which the constructors guarantee by never producing a
/// non-canonical list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// Which of the two principles of generation produced an ordinal (zero aside).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrdinalKind {
    Zero,
    Successor,
    Limit,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrdinalError {
    #[error("{0} is not a limit ordinal")]
    NotALimit(Ordinal),
    #[error("term exponents must be strictly decreasing")]
    NotDescending,
    #[error("term coefficients must be positive")]
    ZeroCoefficient,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1u32)
    }

    /// The first infinite ordinal.
    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::monomial(exponent, BigUint::one())
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Ordinal, coefficient: BigUint) -> Self {
        if coefficient.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exponent, coefficient }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs that are already
    /// in canonical order.
    pub fn from_terms<I>(terms: I) -> Result<Self, OrdinalError>
    where
        I: IntoIterator<Item = (Ordinal, BigUint)>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (exponent, coefficient) in terms {
            if coefficient.is_zero() {
                return Err(OrdinalError::ZeroCoefficient);
            }
            if let Some(last) = out.last() {
                if last.exponent <= exponent {
                    return Err(OrdinalError::NotDescending);
                }
            }
            out.push(Term { exponent, coefficient });
        }
        Ok(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// The natural number this ordinal equals, if it is finite.
    pub fn as_finite(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_finite().and_then(|n| n.to_u64())
    }

    /// Exponent of the leading term, `None` for zero.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Coefficient of the `ω^0` term (zero when there is none).
    pub fn finite_part(&self) -> BigUint {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient.clone(),
            _ => BigUint::zero(),
        }
    }

    /// The ordinal with its finite tail removed; the largest limit (or zero)
    /// not exceeding `self`.
    pub fn limit_part(&self) -> Ordinal {
        let mut terms = self.terms.clone();
        if matches!(terms.last(), Some(t) if t.exponent.is_zero()) {
            terms.pop();
        }
        Ordinal { terms }
    }

    pub fn kind(&self) -> OrdinalKind {
        match self.terms.last() {
            None => OrdinalKind::Zero,
            Some(t) if t.exponent.is_zero() => OrdinalKind::Successor,
            Some(_) => OrdinalKind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        self.kind() == OrdinalKind::Limit
    }

    pub fn succ(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// The immediate predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        if self.kind() != OrdinalKind::Successor {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a finite term");
        if last.coefficient.is_one() {
            terms.pop();
        } else {
            last.coefficient -= 1u32;
        }
        Some(Ordinal { terms })
    }

    /// Nesting depth of the exponent tower; 0 for finite ordinals.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| {
                if t.exponent.is_zero() {
                    0
                } else {
                    1 + t.exponent.height()
                }
            })
            .max()
            .unwrap_or(0)
    }

    /// Ordinal exponentiation `self^exponent`, with `0^0 = 1`.
    ///
    /// # Panics
    ///
    /// Panics when the finite part of `exponent` does not fit in a `u32`;
    /// such powers cannot be materialised.
    pub fn pow(&self, exponent: &Ordinal) -> Ordinal {
        if exponent.is_zero() {
            return Ordinal::one();
        }
        if self.is_zero() {
            return Ordinal::zero();
        }
        if *self == Ordinal::one() {
            return Ordinal::one();
        }

        let limit = exponent.limit_part();
        let k = exponent
            .finite_part()
            .to_u32()
            .expect("finite part of exponent too large to materialise");

        match self.as_finite() {
            Some(n) => {
                // n^(ω^(1+g)·d) = ω^(ω^g·d) for n ≥ 2.
                let mut tower = Ordinal::zero();
                for t in limit.terms() {
                    let g = if t.exponent.is_finite() {
                        t.exponent.pred().expect("positive finite exponent")
                    } else {
                        t.exponent.clone()
                    };
                    tower = &tower + &Ordinal::monomial(g, t.coefficient.clone());
                }
                Ordinal::monomial(tower, n.pow(k))
            }
            None => {
                let lead = self.leading_exponent().expect("nonzero").clone();
                let head = Ordinal::omega_pow(&lead * &limit);
                &head * &self.pow_finite(k)
            }
        }
    }

    fn pow_finite(&self, mut k: u32) -> Ordinal {
        let mut acc = Ordinal::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The `n`-th element of the canonical fundamental sequence of a limit.
    ///
    /// For `λ = γ + ω^(e+1)` this is `γ + ω^e·n`; for `λ = γ + ω^e` with `e` a
    /// limit it is `γ + ω^(e[n])`.
    pub fn fundamental_sequence(&self, n: u64) -> Result<Ordinal, OrdinalError> {
        if !self.is_limit() {
            return Err(OrdinalError::NotALimit(self.clone()));
        }
        let mut terms = self.terms.clone();
        let last = terms.pop().expect("limit is nonzero");
        let exponent = last.exponent.clone();
        if last.coefficient > BigUint::one() {
            terms.push(Term {
                exponent: last.exponent,
                coefficient: last.coefficient - 1u32,
            });
        }
        let base = Ordinal { terms };
        let step = match exponent.pred() {
            Some(e) => Ordinal::monomial(e, BigUint::from(n)),
            None => Ordinal::omega_pow(exponent.fundamental_sequence(n)?),
        };
        Ok(&base + &step)
    }

    /// Cardinality of the ordinal: finite for finite ordinals, `ℵ₀` otherwise.
    pub fn to_cardinality(&self) -> Cardinal {
        match self.as_finite() {
            Some(n) => Cardinal::Finite(n),
            None => Cardinal::aleph(Ordinal::zero()),
        }
    }
}

fn add_ordinals(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Some(lead) = b.leading_exponent() else {
        return a.clone();
    };
    let kept = a.terms.iter().take_while(|t| t.exponent > *lead).count();
    let mut terms: Vec<Term> = a.terms[..kept].to_vec();
    let mut rest = b.terms.iter();
    let first = rest.next().expect("b nonzero").clone();
    match a.terms.get(kept) {
        Some(t) if t.exponent == *lead => terms.push(Term {
            exponent: first.exponent,
            coefficient: &t.coefficient + first.coefficient,
        }),
        _ => terms.push(first),
    }
    terms.extend(rest.cloned());
    Ordinal { terms }
}

fn mul_ordinals(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() || b.is_zero() {
        return Ordinal::zero();
    }
    let lead = &a.terms[0];
    let mut acc = Ordinal::zero();
    for t in &b.terms {
        let piece = if t.exponent.is_zero() {
            let mut terms = a.terms.clone();
            terms[0].coefficient = &lead.coefficient * &t.coefficient;
            Ordinal { terms }
        } else {
            Ordinal::monomial(&lead.exponent + &t.exponent, t.coefficient.clone())
        };
        acc = add_ordinals(&acc, &piece);
    }
    acc
}

impl Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        add_ordinals(self, rhs)
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        add_ordinals(&self, &rhs)
    }
}

impl Mul<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: &Ordinal) -> Ordinal {
        mul_ordinals(self, rhs)
    }
}

impl Mul for Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: Ordinal) -> Ordinal {
        mul_ordinals(&self, &rhs)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal::monomial(Ordinal::zero(), BigUint::from(n))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::monomial(Ordinal::zero(), BigUint::from(n))
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_zero() {
            return write!(f, "{}", self.coefficient);
        }
        f.write_str("w")?;
        if self.exponent == Ordinal::omega() {
            f.write_str("^w")?;
        } else if let Some(n) = self.exponent.as_finite() {
            if !n.is_one() {
                write!(f, "^{n}")?;
            }
        } else {
            write!(f, "^({})", self.exponent)?;
        }
        if !self.coefficient.is_one() {
            write!(f, "*{}", self.coefficient)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u32) -> Ordinal {
        Ordinal::from(k)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wpow(e: Ordinal) -> Ordinal {
        Ordinal::omega_pow(e)
    }

    #[test]
    fn compare_examples() {
        assert!(n(0) < w());
        assert_eq!((&w() + &n(2)).cmp(&(&w() + &n(2))), Ordering::Equal);
        assert!(wpow(w()) > &w() * &n(1000));
    }

    #[test]
    fn add_examples() {
        assert_eq!(&n(1) + &w(), w());
        assert_ne!(&w() + &n(1), w());
        assert_eq!((&w() + &n(1)).to_string(), "w + 1");
        let w2 = wpow(n(2));
        assert_eq!(&(&w2 + &w()) + &w2, &w2 * &n(2));
        assert_eq!(n(3) + n(4), n(7));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&n(2) * &w(), w());
        assert_eq!((&w() * &n(2)).to_string(), "w*2");
        assert_eq!(&w() * &n(2), &w() + &w());
        assert_eq!((&(&w() + &n(1)) * &n(2)).to_string(), "w*2 + 1");
        assert_eq!(&(&w() + &n(1)) * &w(), wpow(n(2)));
        assert_eq!(&n(0) * &w(), n(0));
        assert_eq!(&w() * &n(0), n(0));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(w().pow(&n(1)), w());
        assert_eq!(n(2).pow(&w()), w());
        assert_eq!(n(0).pow(&n(0)), n(1));
        assert_eq!(n(2).pow(&n(10)), n(1024));
        assert_eq!(n(2).pow(&(&w() + &n(3))), &w() * &n(8));
        assert_eq!(n(3).pow(&wpow(n(2))), wpow(w()));
        assert_eq!((&w() + &n(1)).pow(&w()), wpow(w()));
        assert_eq!((&w() + &n(1)).pow(&n(2)).to_string(), "w^2 + w + 1");
        assert_eq!(w().pow(&w()).pow(&w()), wpow(wpow(n(2))));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(n(0).kind(), OrdinalKind::Zero);
        assert_eq!((&w() + &n(3)).kind(), OrdinalKind::Successor);
        assert_eq!(wpow(n(2)).kind(), OrdinalKind::Limit);
    }

    #[test]
    fn fundamental_sequence_examples() {
        assert_eq!(w().fundamental_sequence(5).unwrap(), n(5));
        assert_eq!((&w() * &n(2)).fundamental_sequence(3).unwrap(), &w() + &n(3));
        assert_eq!(wpow(n(2)).fundamental_sequence(4).unwrap(), &w() * &n(4));
        assert_eq!(wpow(w()).fundamental_sequence(3).unwrap(), wpow(n(3)));
        assert!(matches!(
            (&w() + &n(1)).fundamental_sequence(0),
            Err(OrdinalError::NotALimit(_))
        ));
        assert!(n(0).fundamental_sequence(0).is_err());
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(n(7).to_cardinality(), Cardinal::Finite(BigUint::from(7u32)));
        assert_eq!(w().to_cardinality(), Cardinal::aleph(n(0)));
        assert_eq!(wpow(w()).to_cardinality(), Cardinal::aleph(n(0)));
    }

    #[test]
    fn printing() {
        let a = &(&(&wpow(w()) * &n(3)) + &(&w() * &n(2))) + &n(5);
        assert_eq!(a.to_string(), "w^w*3 + w*2 + 5");
        assert_eq!(n(0).to_string(), "0");
        assert_eq!(wpow(&w() + &n(1)).to_string(), "w^(w + 1)");
        assert_eq!(wpow(wpow(n(2))).to_string(), "w^(w^2)");
    }

    #[test]
    fn from_terms_rejects_bad_lists() {
        assert_eq!(
            Ordinal::from_terms([(n(0), BigUint::one()), (n(1), BigUint::one())]),
            Err(OrdinalError::NotDescending)
        );
        assert_eq!(
            Ordinal::from_terms([(n(1), BigUint::zero())]),
            Err(OrdinalError::ZeroCoefficient)
        );
    }

    #[test]
    fn pred_and_parts() {
        let a = &w() + &n(1);
        assert_eq!(a.pred(), Some(w()));
        assert_eq!(w().pred(), None);
        assert_eq!((&w() + &n(4)).limit_part(), w());
        assert_eq!((&w() + &n(4)).finite_part(), BigUint::from(4u32));
    }
}
