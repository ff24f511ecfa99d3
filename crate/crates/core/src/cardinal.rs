//! Cardinal numbers: the naturals together with the alephs indexed by ordinals.
//!
//! Whether `2^ℵ_α` equals `ℵ_(α+1)` cannot be settled by the usual axioms, so
//! the answer is a [`CardinalConfig`] switch. With the generalized continuum
//! hypothesis off, powers stay symbolic and some comparisons come back as
//! [`CardinalOrdering::Incomparable`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::ordinal::Ordinal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Cardinal {
    Finite(BigUint),
    Aleph(Ordinal),
    /// `2^base` for an infinite base whose value is not fixed by the
    /// configuration.
    PowerOfTwo(Box<Cardinal>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CardinalConfig {
    pub gch: bool,
}

/// Outcome of comparing two cardinals. `Incomparable` means the order is
/// independent of the configured axioms, not that something went wrong.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CardinalOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CardinalError {
    #[error("the value of {0} relative to the other operand is not determined without GCH")]
    UnresolvedPower(Cardinal),
    #[error("2^{0} is too large to write out")]
    FiniteOverflow(BigUint),
}

impl Cardinal {
    pub fn finite(n: u64) -> Self {
        Cardinal::Finite(BigUint::from(n))
    }

    pub fn aleph(index: Ordinal) -> Self {
        Cardinal::Aleph(index)
    }

    pub fn aleph_0() -> Self {
        Cardinal::Aleph(Ordinal::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cardinal::Finite(n) if n.is_zero())
    }
}

impl From<u64> for Cardinal {
    fn from(n: u64) -> Self {
        Cardinal::finite(n)
    }
}

pub fn aleph_of(index: Ordinal) -> Cardinal {
    Cardinal::Aleph(index)
}

impl CardinalOrdering {
    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => CardinalOrdering::Less,
            Ordering::Equal => CardinalOrdering::Equal,
            Ordering::Greater => CardinalOrdering::Greater,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            CardinalOrdering::Less => CardinalOrdering::Greater,
            CardinalOrdering::Greater => CardinalOrdering::Less,
            other => other,
        }
    }
}

/// Symbolic comparison. A power `2^κ` is known to exceed everything `≤ κ`;
/// against anything else it is incomparable unless the operands coincide.
pub fn card_compare(a: &Cardinal, b: &Cardinal) -> CardinalOrdering {
    use Cardinal::*;
    match (a, b) {
        (Finite(x), Finite(y)) => CardinalOrdering::from_ordering(x.cmp(y)),
        (Finite(_), _) => CardinalOrdering::Less,
        (_, Finite(_)) => CardinalOrdering::Greater,
        (Aleph(x), Aleph(y)) => CardinalOrdering::from_ordering(x.cmp(y)),
        (PowerOfTwo(x), PowerOfTwo(y)) if x == y => CardinalOrdering::Equal,
        (PowerOfTwo(base), other) => power_against(base, other),
        (other, PowerOfTwo(base)) => power_against(base, other).reverse(),
    }
}

fn power_against(base: &Cardinal, other: &Cardinal) -> CardinalOrdering {
    match card_compare(base, other) {
        CardinalOrdering::Greater | CardinalOrdering::Equal => CardinalOrdering::Greater,
        _ => CardinalOrdering::Incomparable,
    }
}

/// Picks the larger of two infinite-or-mixed operands, failing when their
/// order is not determined.
fn max_of(a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardinalError> {
    match card_compare(a, b) {
        CardinalOrdering::Less => Ok(b.clone()),
        CardinalOrdering::Equal | CardinalOrdering::Greater => Ok(a.clone()),
        CardinalOrdering::Incomparable => {
            let symbolic = if matches!(a, Cardinal::PowerOfTwo(_)) { a } else { b };
            Err(CardinalError::UnresolvedPower(symbolic.clone()))
        }
    }
}

/// Cardinal sum: exact on finite operands, the maximum otherwise.
pub fn card_add(a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardinalError> {
    match (a, b) {
        (Cardinal::Finite(x), Cardinal::Finite(y)) => Ok(Cardinal::Finite(x + y)),
        _ => max_of(a, b),
    }
}

/// Cardinal product: exact on finite operands, zero annihilates, the maximum
/// otherwise.
pub fn card_mul(a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardinalError> {
    match (a, b) {
        (Cardinal::Finite(x), Cardinal::Finite(y)) => Ok(Cardinal::Finite(x * y)),
        _ if a.is_zero() || b.is_zero() => Ok(Cardinal::Finite(BigUint::zero())),
        _ => max_of(a, b),
    }
}

/// The cardinality of the power set, `2^k`.
pub fn card_pow2(k: &Cardinal, cfg: CardinalConfig) -> Result<Cardinal, CardinalError> {
    match cfg.normalize(k) {
        Cardinal::Finite(n) => {
            let e = n
                .to_u32()
                .filter(|&e| e <= 1 << 24)
                .ok_or_else(|| CardinalError::FiniteOverflow(n.clone()))?;
            Ok(Cardinal::Finite(BigUint::from(2u32).pow(e)))
        }
        Cardinal::Aleph(index) if cfg.gch => Ok(Cardinal::Aleph(index.succ())),
        other => Ok(Cardinal::PowerOfTwo(Box::new(other))),
    }
}

impl CardinalConfig {
    pub fn new(gch: bool) -> Self {
        CardinalConfig { gch }
    }

    /// Resolves every power node the configuration can decide. Under GCH
    /// no `PowerOfTwo` survives.
    pub fn normalize(&self, k: &Cardinal) -> Cardinal {
        match k {
            Cardinal::PowerOfTwo(base) => {
                let base = self.normalize(base);
                match base {
                    Cardinal::Aleph(index) if self.gch => Cardinal::Aleph(index.succ()),
                    // Finite bases are evaluated at construction; keep the
                    // node only if the exponent is genuinely out of range.
                    Cardinal::Finite(_) => {
                        card_pow2(&base, *self).unwrap_or_else(|_| Cardinal::PowerOfTwo(Box::new(base)))
                    }
                    other => Cardinal::PowerOfTwo(Box::new(other)),
                }
            }
            other => other.clone(),
        }
    }

    pub fn add(&self, a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardinalError> {
        card_add(&self.normalize(a), &self.normalize(b))
    }

    pub fn mul(&self, a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardinalError> {
        card_mul(&self.normalize(a), &self.normalize(b))
    }

    pub fn pow2(&self, k: &Cardinal) -> Result<Cardinal, CardinalError> {
        card_pow2(k, *self)
    }

    pub fn compare(&self, a: &Cardinal, b: &Cardinal) -> CardinalOrdering {
        card_compare(&self.normalize(a), &self.normalize(b))
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Aleph(index) => match index.as_finite() {
                Some(n) => write!(f, "aleph_{n}"),
                None => write!(f, "aleph_({index})"),
            },
            Cardinal::PowerOfTwo(base) => match **base {
                Cardinal::Aleph(_) => write!(f, "2^{base}"),
                _ => write!(f, "2^({base})"),
            },
        }
    }
}

impl fmt::Debug for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cardinal({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aleph(n: u32) -> Cardinal {
        Cardinal::aleph(Ordinal::from(n))
    }

    const GCH: CardinalConfig = CardinalConfig { gch: true };
    const NO_GCH: CardinalConfig = CardinalConfig { gch: false };

    #[test]
    fn aleph_of_examples() {
        assert_eq!(aleph_of(Ordinal::zero()).to_string(), "aleph_0");
        assert_eq!(aleph_of(Ordinal::omega()).to_string(), "aleph_(w)");
        let w2 = &Ordinal::omega() * &Ordinal::from(2u32);
        assert_eq!(aleph_of(w2).to_string(), "aleph_(w*2)");
        assert_eq!(aleph_of(Ordinal::omega().succ()).to_string(), "aleph_(w + 1)");
    }

    #[test]
    fn add_examples() {
        assert_eq!(card_add(&aleph(0), &5.into()).unwrap(), aleph(0));
        assert_eq!(card_add(&0.into(), &0.into()).unwrap(), 0.into());
        assert_eq!(card_add(&aleph(1), &aleph(0)).unwrap(), aleph(1));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(card_mul(&3.into(), &aleph(0)).unwrap(), aleph(0));
        assert_eq!(card_mul(&1.into(), &5.into()).unwrap(), 5.into());
        assert_eq!(card_mul(&aleph(0), &aleph(0)).unwrap(), aleph(0));
        assert_eq!(card_mul(&0.into(), &aleph(3)).unwrap(), 0.into());
    }

    #[test]
    fn pow2_examples() {
        assert_eq!(card_pow2(&aleph(0), GCH).unwrap(), aleph(1));
        assert_eq!(card_pow2(&aleph(3), GCH).unwrap(), aleph(4));
        assert_eq!(card_pow2(&10.into(), GCH).unwrap(), 1024.into());
        assert_eq!(card_pow2(&10.into(), NO_GCH).unwrap(), 1024.into());
        let p = card_pow2(&aleph(0), NO_GCH).unwrap();
        assert_eq!(p.to_string(), "2^aleph_0");
        assert!(matches!(
            card_pow2(&Cardinal::Finite(BigUint::from(u64::MAX)), NO_GCH),
            Err(CardinalError::FiniteOverflow(_))
        ));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(card_compare(&aleph(0), &aleph(1)), CardinalOrdering::Less);
        let c = card_pow2(&aleph(0), NO_GCH).unwrap();
        assert_eq!(card_compare(&c, &aleph(0)), CardinalOrdering::Greater);
        assert_eq!(card_compare(&c, &aleph(2)), CardinalOrdering::Incomparable);
        assert_eq!(card_compare(&c, &aleph(1)), CardinalOrdering::Incomparable);
        assert_eq!(card_compare(&aleph(0), &c), CardinalOrdering::Less);
        assert_eq!(GCH.compare(&c, &aleph(1)), CardinalOrdering::Equal);
        assert_eq!(card_compare(&7.into(), &aleph(0)), CardinalOrdering::Less);
    }

    #[test]
    fn nested_powers_stay_ordered() {
        let c = card_pow2(&aleph(0), NO_GCH).unwrap();
        let cc = card_pow2(&c, NO_GCH).unwrap();
        assert_eq!(cc.to_string(), "2^(2^aleph_0)");
        assert_eq!(card_compare(&cc, &c), CardinalOrdering::Greater);
        assert_eq!(card_compare(&cc, &aleph(0)), CardinalOrdering::Greater);
        assert_eq!(GCH.normalize(&cc), aleph(2));
    }

    #[test]
    fn unresolved_power_errors_only_when_undetermined() {
        let c = card_pow2(&aleph(0), NO_GCH).unwrap();
        assert_eq!(card_add(&c, &aleph(0)).unwrap(), c);
        assert_eq!(card_add(&c, &5.into()).unwrap(), c);
        assert!(matches!(
            card_add(&c, &aleph(1)),
            Err(CardinalError::UnresolvedPower(_))
        ));
        assert!(matches!(
            card_mul(&aleph(5), &c),
            Err(CardinalError::UnresolvedPower(_))
        ));
        assert_eq!(GCH.add(&c, &aleph(1)).unwrap(), aleph(1));
    }
}
