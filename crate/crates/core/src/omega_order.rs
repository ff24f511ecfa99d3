//! Rearrangements of the positive integers with a prescribed countable order
//! type below ω^ω.
//!
//! Writing `α = ω·β + r` with `r` finite, the integers `1..=r` sit at the end
//! in their natural order and the rest fill `β` blocks of type ω. With `β = q`
//! finite, block `i` takes the residue class `i mod q`; with `β` infinite the
//! blocks are indexed through the order of type `β` itself and merged with
//! Cantor's pairing. So
//!
//! ```text
//! ω     : 1, 2, 3, ...
//! ω + 1 : 2, 3, 4, ..., 1
//! ω + 2 : 3, 4, 5, ..., 1, 2
//! ω · 2 : 1, 3, 5, ..., 2, 4, 6, ...
//! ```

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::countability::{cantor_pair, cantor_unpair};
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("order type {0} is not in the supported range 1 <= alpha < w^w")]
    UnsupportedOrderType(Ordinal),
    #[error("position {position} is not below the order type {alpha}")]
    PositionOutOfRange { position: Ordinal, alpha: Ordinal },
    #[error("{element} does not occur in the order of type {alpha}")]
    ElementNotInOrder { element: BigUint, alpha: Ordinal },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Blocks {
    None,
    Finite(BigUint),
    Indexed(Box<OmegaOrder>),
}

/// A well-ordering of (an initial segment of) the positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaOrder {
    alpha: Ordinal,
    blocks: Blocks,
    tail: BigUint,
}

/// Splits `α < ω^ω` as `ω·β + r`.
fn split_omega(alpha: &Ordinal) -> Option<(Ordinal, BigUint)> {
    let mut quotient = Vec::new();
    let mut rest = BigUint::zero();
    for t in alpha.terms() {
        let e = t.exponent().as_finite()?;
        if e.is_zero() {
            rest = t.coefficient().clone();
        } else {
            quotient.push((Ordinal::from(e - 1u32), t.coefficient().clone()));
        }
    }
    let beta = Ordinal::from_terms(quotient).expect("exponents stay descending");
    Some((beta, rest))
}

fn join_omega(beta: &Ordinal, i: BigUint) -> Ordinal {
    &(&Ordinal::omega() * beta) + &Ordinal::from(i)
}

impl OmegaOrder {
    pub fn new(alpha: Ordinal) -> Result<Self, OrderError> {
        if alpha.is_zero() {
            return Err(OrderError::UnsupportedOrderType(alpha));
        }
        let Some((beta, tail)) = split_omega(&alpha) else {
            return Err(OrderError::UnsupportedOrderType(alpha));
        };
        let blocks = if beta.is_zero() {
            Blocks::None
        } else if let Some(q) = beta.as_finite() {
            Blocks::Finite(q)
        } else {
            Blocks::Indexed(Box::new(OmegaOrder::new(beta)?))
        };
        Ok(OmegaOrder { alpha, blocks, tail })
    }

    pub fn alpha(&self) -> &Ordinal {
        &self.alpha
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.blocks, Blocks::None)
    }

    /// The integer standing at transfinite position `pos`.
    pub fn element_at(&self, pos: &Ordinal) -> Result<BigUint, OrderError> {
        if pos >= &self.alpha {
            return Err(OrderError::PositionOutOfRange {
                position: pos.clone(),
                alpha: self.alpha.clone(),
            });
        }
        let (block, i) = split_omega(pos).expect("positions below alpha are below w^w");
        let j = match &self.blocks {
            Blocks::Finite(q) if block.as_finite().is_some_and(|b| &b < q) => i * q + block.as_finite().unwrap(),
            Blocks::Indexed(index) if !block_is_tail(&block, &self.alpha) => {
                let code = index.element_at(&block)? - 1u32;
                cantor_pair(&code, &i)
            }
            // the finite tail 1..=r
            _ => return Ok(i + 1u32),
        };
        Ok(j + &self.tail + 1u32)
    }

    /// The position of `n` in the order.
    pub fn rank_of(&self, n: &BigUint) -> Result<Ordinal, OrderError> {
        let missing = || OrderError::ElementNotInOrder {
            element: n.clone(),
            alpha: self.alpha.clone(),
        };
        if n.is_zero() {
            return Err(missing());
        }
        if n <= &self.tail {
            let beta = split_omega(&self.alpha).expect("valid order type").0;
            return Ok(join_omega(&beta, n - 1u32));
        }
        let j = n - &self.tail - 1u32;
        match &self.blocks {
            Blocks::None => Err(missing()),
            Blocks::Finite(q) => {
                let (i, block) = j.div_rem(q);
                Ok(join_omega(&Ordinal::from(block), i))
            }
            Blocks::Indexed(index) => {
                let (code, i) = cantor_unpair(&j);
                let block = index.rank_of(&(code + 1u32))?;
                Ok(join_omega(&block, i))
            }
        }
    }

    pub fn compare_under(&self, m: &BigUint, n: &BigUint) -> Result<Ordering, OrderError> {
        Ok(self.rank_of(m)?.cmp(&self.rank_of(n)?))
    }

    /// The first `k` elements of each ω-block, blocks separated by `", ..., "`,
    /// followed by the finite tail. When there are infinitely many blocks only
    /// the first `k` are shown and a final `...` stands for the rest.
    pub fn show_prefix(&self, k: usize) -> String {
        let k = k.max(1);
        let mut parts: Vec<String> = Vec::new();
        let (block_count, more_blocks) = match &self.blocks {
            Blocks::None => (0, false),
            Blocks::Finite(q) => (q.to_usize().expect("block count fits in memory"), false),
            Blocks::Indexed(_) => (k, true),
        };
        for block in 0..block_count {
            let base = &Ordinal::omega() * &Ordinal::from(block as u64);
            for i in 0..k as u64 {
                let e = self
                    .element_at(&(&base + &Ordinal::from(i)))
                    .expect("block positions are in range");
                parts.push(e.to_string());
            }
            parts.push("...".to_string());
        }
        if more_blocks {
            parts.push("...".to_string());
        }
        let mut t = BigUint::one();
        while t <= self.tail {
            parts.push(t.to_string());
            t += 1u32;
        }
        parts.join(", ")
    }
}

/// Block index `β` itself addresses the tail rather than a block.
fn block_is_tail(block: &Ordinal, alpha: &Ordinal) -> bool {
    let beta = split_omega(alpha).expect("valid order type").0;
    block >= &beta
}
