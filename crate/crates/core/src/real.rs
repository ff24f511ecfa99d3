//! Real numbers as fundamental sequences of rationals carrying an explicit
//! modulus of convergence.
//!
//! A [`FundamentalSeq`] pairs `approx: ℕ → ℚ` with `modulus: ℚ⁺ → ℕ` such that
//! `|approx(m) − approx(k)| < ε` whenever `m, k ≥ modulus(ε)`. Equality of two
//! such sequences cannot be decided, so comparisons are made at a stated
//! precision through [`apart`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Rational = BigRational;
pub type Index = u64;

type ApproxFn = dyn Fn(Index) -> Rational + Send + Sync;
type ModulusFn = dyn Fn(&Rational) -> Index + Send + Sync;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealError {
    #[error("square root of negative rational {0}")]
    NegativeRadicand(Rational),
    #[error("precision must be positive, got {0}")]
    NonPositivePrecision(Rational),
}

#[derive(Clone)]
pub struct FundamentalSeq {
    approx: Arc<ApproxFn>,
    modulus: Arc<ModulusFn>,
}

/// Result of [`apart`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Apartness {
    /// `x` and `y` are certified more than `ε` apart, in this order.
    Separated(Ordering),
    Indistinguishable,
}

impl FundamentalSeq {
    /// Wraps a sequence and its modulus. The caller vouches for the Cauchy
    /// contract.
    pub fn new<A, M>(approx: A, modulus: M) -> Self
    where
        A: Fn(Index) -> Rational + Send + Sync + 'static,
        M: Fn(&Rational) -> Index + Send + Sync + 'static,
    {
        FundamentalSeq {
            approx: Arc::new(approx),
            modulus: Arc::new(modulus),
        }
    }

    pub fn approx(&self, n: Index) -> Rational {
        (self.approx)(n)
    }

    pub fn modulus(&self, eps: &Rational) -> Index {
        (self.modulus)(eps)
    }

    pub fn neg(&self) -> FundamentalSeq {
        let a = self.approx.clone();
        FundamentalSeq {
            approx: Arc::new(move |n| -a(n)),
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Debug for FundamentalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FundamentalSeq")
            .field("approx(0)", &self.approx(0).to_string())
            .finish_non_exhaustive()
    }
}

fn half(eps: &Rational) -> Rational {
    eps / Rational::from_integer(BigInt::from(2))
}

/// The constant sequence at `q`.
pub fn from_rational(q: Rational) -> FundamentalSeq {
    FundamentalSeq::new(move |_| q.clone(), |_| 0)
}

pub fn add(x: &FundamentalSeq, y: &FundamentalSeq) -> FundamentalSeq {
    let (xa, ya) = (x.approx.clone(), y.approx.clone());
    let (xm, ym) = (x.modulus.clone(), y.modulus.clone());
    FundamentalSeq::new(
        move |n| xa(n) + ya(n),
        move |eps| {
            let h = half(eps);
            xm(&h).max(ym(&h))
        },
    )
}

pub fn neg(x: &FundamentalSeq) -> FundamentalSeq {
    x.neg()
}

pub fn sub(x: &FundamentalSeq, y: &FundamentalSeq) -> FundamentalSeq {
    add(x, &y.neg())
}

/// A bound `B` with `|x(m)| ≤ B` for every `m ≥ x.modulus(1)`.
fn tail_bound(x: &FundamentalSeq) -> (Index, Rational) {
    let probe = x.modulus(&Rational::one());
    (probe, x.approx(probe).abs() + Rational::one())
}

pub fn mul(x: &FundamentalSeq, y: &FundamentalSeq) -> FundamentalSeq {
    let (xa, ya) = (x.approx.clone(), y.approx.clone());
    let (xm, ym) = (x.modulus.clone(), y.modulus.clone());
    let (px, bx) = tail_bound(x);
    let (py, by) = tail_bound(y);
    // |x_m y_m − x_k y_k| ≤ Bx·|y_m − y_k| + By·|x_m − x_k|
    FundamentalSeq::new(
        move |n| xa(n) * ya(n),
        move |eps| {
            let h = half(eps);
            let nx = xm(&(&h / &by));
            let ny = ym(&(&h / &bx));
            px.max(py).max(nx).max(ny)
        },
    )
}

/// Dyadic bisection towards `√q`: the `n`-th term is the left end of the
/// `n`-th interval, `⌊√q · 2^n / 2^k⌋ · 2^k / 2^n` for a starting interval
/// `[0, 2^k]` containing `√q`.
pub fn sqrt(q: &Rational) -> Result<FundamentalSeq, RealError> {
    if q.is_negative() {
        return Err(RealError::NegativeRadicand(q.clone()));
    }
    // smallest k ≥ 0 with 4^k > q, so that √q < 2^k
    let mut k = 0u32;
    while Rational::from_integer(BigInt::from(4).pow(k)) <= *q {
        k += 1;
    }
    let width0 = Rational::from_integer(BigInt::from(2).pow(k));
    let (num, den) = (q.numer().clone(), q.denom().clone());
    let approx = move |n: Index| {
        let shift = u32::try_from(n).expect("bisection depth fits in u32");
        // left end = ⌊√q·2^(n−k)⌋ / 2^(n−k) on the dyadic grid of the n-th step
        if shift >= k {
            let e = shift - k;
            let scaled = (&num << (2 * e as usize)) / &den;
            Rational::new(scaled.sqrt(), BigInt::one() << e as usize)
        } else {
            let e = k - shift;
            let scaled = &num / (&den << (2 * e as usize));
            Rational::from_integer(scaled.sqrt() << e as usize)
        }
    };
    let modulus = move |eps: &Rational| {
        let mut n: Index = 0;
        let mut w = width0.clone();
        while w >= *eps {
            w = half(&w);
            n += 1;
        }
        n
    };
    Ok(FundamentalSeq::new(approx, modulus))
}

/// A rational within `eps` of `x`.
pub fn approx_to(x: &FundamentalSeq, eps: &Rational) -> Result<Rational, RealError> {
    if !eps.is_positive() {
        return Err(RealError::NonPositivePrecision(eps.clone()));
    }
    Ok(x.approx(x.modulus(&half(eps))))
}

/// Certifies `|x − y| > ε` with the order of `x` and `y`, or reports that no
/// separation is visible at that precision. Never separates equal reals.
pub fn apart(x: &FundamentalSeq, y: &FundamentalSeq, eps: &Rational) -> Result<Apartness, RealError> {
    if !eps.is_positive() {
        return Err(RealError::NonPositivePrecision(eps.clone()));
    }
    let d = sub(x, y);
    let slack = half(eps);
    let r = d.approx(d.modulus(&slack));
    // the limit lies within `slack` of r
    if r.abs() > eps + &slack {
        let order = if r.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        Ok(Apartness::Separated(order))
    } else {
        Ok(Apartness::Indistinguishable)
    }
}

/// Formats `q` in decimal, rounded to `places` digits after the point.
pub fn to_decimal(q: &Rational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = (q * Rational::from_integer(scale)).round().to_integer();
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Number of decimal places needed to show a value at precision `eps`.
pub fn decimal_places(eps: &Rational) -> usize {
    let mut places = 0;
    let mut unit = Rational::one();
    while unit > *eps && places < 10_000 {
        unit /= Rational::from_integer(BigInt::from(10));
        places += 1;
    }
    places
}

/// `10^-k` as a rational.
pub fn ten_to_minus(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(BigUint::from(10u32).pow(k)))
}
