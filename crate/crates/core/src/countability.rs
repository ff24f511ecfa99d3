//! One-to-one correspondences: pairing, enumerations of ℚ and of the real
//! algebraic numbers, Galileo's squares, segment maps, digit interleaving,
//! and the diagonal construction.

// Errors carry the offending rationals; they are rare enough that their size
// does not matter.
#![allow(clippy::result_large_err)]

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountabilityError {
    #[error("stream {index} has {len} digits but position {needed} is required")]
    StreamTooShort { index: usize, len: usize, needed: usize },
    #[error("the diagonal of an empty list is undefined")]
    EmptyList,
    #[error("streams have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("a stream of odd length {0} cannot be split into two halves")]
    OddLength(usize),
    #[error("segment [{0}, {1}] is degenerate")]
    DegenerateSegment(BigRational, BigRational),
    #[error("{0} lies outside the source segment")]
    OutsideSegment(BigRational),
    #[error("invalid digit stream {0:?}: expected \"0.\" followed by at least one digit")]
    BadStream(String),
}

/// Cantor's pairing `(x, y) ↦ (x+y)(x+y+1)/2 + y`.
pub fn cantor_pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(z: &BigUint) -> (BigUint, BigUint) {
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let y = z - t;
    let x = w - &y;
    (x, y)
}

/// `k`-th term (1-based) of the Calkin–Wilf sequence as `(numerator,
/// denominator)`. Reads the binary digits of `k` after the leading one as a
/// path in the Calkin–Wilf tree.
pub fn calkin_wilf_pair(k: u64) -> (u64, u64) {
    assert!(k >= 1, "the Calkin-Wilf sequence starts at index 1");
    let (mut a, mut b) = (1u64, 1u64);
    let bits = 63 - k.leading_zeros();
    for i in (0..bits).rev() {
        if (k >> i) & 1 == 1 {
            a += b;
        } else {
            b += a;
        }
    }
    (a, b)
}

pub fn calkin_wilf(k: u64) -> BigRational {
    let (a, b) = calkin_wilf_pair(k);
    BigRational::new(a.into(), b.into())
}

/// The `n`-th rational in the enumeration `0, cw(1), −cw(1), cw(2), −cw(2), …`.
pub fn enum_rationals(n: u64) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    let k = n.div_ceil(2);
    let q = calkin_wilf(k);
    if n % 2 == 1 {
        q
    } else {
        -q
    }
}

/// Galileo's correspondence `n ↦ n²`.
pub fn galileo(n: u64) -> u128 {
    u128::from(n) * u128::from(n)
}

/// The root of a positive perfect square, `None` otherwise.
pub fn galileo_inverse(m: u128) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let r = m.sqrt();
    (r * r == m).then(|| u64::try_from(r).expect("root of a u128 fits in u64"))
}

/// The affine bijection of `[a, b]` onto `[c, d]` that preserves order.
pub fn segment_map(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    d: &BigRational,
    x: &BigRational,
) -> Result<BigRational, CountabilityError> {
    if a >= b {
        return Err(CountabilityError::DegenerateSegment(a.clone(), b.clone()));
    }
    if c >= d {
        return Err(CountabilityError::DegenerateSegment(c.clone(), d.clone()));
    }
    if x < a || x > b {
        return Err(CountabilityError::OutsideSegment(x.clone()));
    }
    Ok(c + (d - c) * (x - a) / (b - a))
}

/// A finite prefix `0.d₁d₂…d_N` of a decimal expansion.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DigitStream {
    digits: Vec<u8>,
}

impl DigitStream {
    pub fn new(digits: Vec<u8>) -> Result<Self, CountabilityError> {
        if digits.is_empty() || digits.iter().any(|&d| d > 9) {
            let shown: String = digits.iter().map(|d| d.to_string()).collect();
            return Err(CountabilityError::BadStream(format!("0.{shown}")));
        }
        Ok(DigitStream { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at 1-based position `i` after the radix point.
    pub fn digit(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|j| self.digits.get(j).copied())
    }
}

impl FromStr for DigitStream {
    type Err = CountabilityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CountabilityError::BadStream(s.to_string());
        let body = s.trim().strip_prefix("0.").ok_or_else(bad)?;
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(DigitStream {
            digits: body.bytes().map(|b| b - b'0').collect(),
        })
    }
}

impl fmt::Display for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("0.")?;
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Builds a stream that differs from `streams[i]` at position `i + 1`: the
/// digit there becomes 5, or 4 if it already was 5.
pub fn diagonal(streams: &[DigitStream]) -> Result<DigitStream, CountabilityError> {
    if streams.is_empty() {
        return Err(CountabilityError::EmptyList);
    }
    let n = streams.len();
    let mut digits = Vec::with_capacity(n);
    for (i, s) in streams.iter().enumerate() {
        if s.len() < n {
            return Err(CountabilityError::StreamTooShort {
                index: i,
                len: s.len(),
                needed: n,
            });
        }
        digits.push(if s.digits[i] == 5 { 4 } else { 5 });
    }
    Ok(DigitStream { digits })
}

/// `0.x₁x₂… , 0.y₁y₂… ↦ 0.x₁y₁x₂y₂…`, the square-to-segment witness.
pub fn interleave(x: &DigitStream, y: &DigitStream) -> Result<DigitStream, CountabilityError> {
    if x.len() != y.len() {
        return Err(CountabilityError::LengthMismatch(x.len(), y.len()));
    }
    let digits = x.digits.iter().zip(&y.digits).flat_map(|(&a, &b)| [a, b]).collect();
    Ok(DigitStream { digits })
}

pub fn deinterleave(z: &DigitStream) -> Result<(DigitStream, DigitStream), CountabilityError> {
    if !z.len().is_multiple_of(2) {
        return Err(CountabilityError::OddLength(z.len()));
    }
    let x = z.digits.iter().step_by(2).copied().collect();
    let y = z.digits.iter().skip(1).step_by(2).copied().collect();
    Ok((DigitStream { digits: x }, DigitStream { digits: y }))
}

/// A real algebraic number: the `root_index`-th real root (0-based,
/// increasing) of an integer polynomial, pinned by an isolating interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicDescriptor {
    /// Constant term first.
    pub coefficients: Vec<BigInt>,
    pub root_index: usize,
    pub interval: (BigRational, BigRational),
}

impl AlgebraicDescriptor {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `degree + Σ|coefficients|`.
    pub fn height(&self) -> BigInt {
        let sum: BigInt = self.coefficients.iter().map(|c| c.abs()).sum();
        sum + BigInt::from(self.degree())
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        poly_eval(&to_rational_poly(&self.coefficients), x)
    }
}

impl fmt::Display for AlgebraicDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "poly=[{}] root={} interval=[{}, {}]",
            coeffs.join(", "),
            self.root_index,
            self.interval.0,
            self.interval.1
        )
    }
}

/// Isolating intervals are refined to at most this width.
pub fn isolation_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 32)
}

/// Walks integer polynomials by height, then degree, then coefficients
/// (leading first, numerically ascending), emitting one descriptor per real
/// root. Only square-free polynomials with positive leading coefficient are
/// used; every real algebraic number still appears, via its minimal
/// polynomial.
pub struct AlgebraicEnumerator {
    height: usize,
    polys: std::vec::IntoIter<Vec<BigInt>>,
    pending: std::vec::IntoIter<AlgebraicDescriptor>,
}

impl AlgebraicEnumerator {
    pub fn new() -> Self {
        AlgebraicEnumerator {
            height: 1,
            polys: Vec::new().into_iter(),
            pending: Vec::new().into_iter(),
        }
    }
}

impl Default for AlgebraicEnumerator {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for AlgebraicEnumerator {
    type Item = AlgebraicDescriptor;

    fn next(&mut self) -> Option<AlgebraicDescriptor> {
        loop {
            if let Some(d) = self.pending.next() {
                return Some(d);
            }
            match self.polys.next() {
                Some(coeffs) => self.pending = describe_roots(&coeffs).into_iter(),
                None => {
                    self.height += 1;
                    self.polys = polynomials_of_height(self.height).into_iter();
                }
            }
        }
    }
}

pub fn enum_algebraic(n: usize) -> AlgebraicDescriptor {
    AlgebraicEnumerator::new().nth(n).expect("the enumeration is infinite")
}

/// All integer coefficient vectors (constant first) with positive leading
/// coefficient and `degree + Σ|c| = h`, in enumeration order.
pub fn polynomials_of_height(h: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    for degree in 1..h {
        let budget = h - degree;
        // leading coefficient 1..=budget, then the rest in ascending order
        for lead in 1..=budget as i64 {
            let mut prefix = vec![lead];
            fill_coefficients(degree, budget - lead as usize, &mut prefix, &mut out);
        }
    }
    out
}

fn fill_coefficients(degree: usize, remaining: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<BigInt>>) {
    // prefix holds coefficients from the leading one downwards
    let slots_left = degree + 1 - prefix.len();
    if slots_left == 0 {
        if remaining == 0 {
            out.push(prefix.iter().rev().map(|&c| BigInt::from(c)).collect());
        }
        return;
    }
    let r = remaining as i64;
    for c in -r..=r {
        let used = c.unsigned_abs() as usize;
        // the final slot must consume the whole budget
        if slots_left == 1 && used != remaining {
            continue;
        }
        prefix.push(c);
        fill_coefficients(degree, remaining - used, prefix, out);
        prefix.pop();
    }
}

type Poly = Vec<BigRational>;

fn to_rational_poly(coeffs: &[BigInt]) -> Poly {
    coeffs.iter().map(|c| BigRational::from(c.clone())).collect()
}

fn trim(mut p: Poly) -> Poly {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[BigRational]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
        .collect()
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    while r.len() > db && !r.is_empty() {
        let factor = r.last().unwrap() / lead;
        let shift = r.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn poly_gcd_degree(a: &[BigRational], b: &[BigRational]) -> usize {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn sturm_chain(p: &[BigRational]) -> Vec<Poly> {
    let mut chain = vec![p.to_vec(), trim(derivative(p))];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let r: Poly = poly_rem(&chain[n - 2], &chain[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| poly_eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
fn roots_between(chain: &[Poly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes(chain, lo) - sign_changes(chain, hi)
}

/// Counts distinct real roots of `coeffs` in the half-open interval
/// `(lo, hi]`; public for property tests.
pub fn count_roots(coeffs: &[BigInt], lo: &BigRational, hi: &BigRational) -> usize {
    let p = trim(to_rational_poly(coeffs));
    roots_between(&sturm_chain(&p), lo, hi)
}

pub fn is_square_free(coeffs: &[BigInt]) -> bool {
    let p = trim(to_rational_poly(coeffs));
    poly_gcd_degree(&p, &derivative(&p)) == 0
}

/// Descriptors for every real root of a square-free polynomial, in
/// increasing order; empty for polynomials with repeated factors.
pub fn describe_roots(coeffs: &[BigInt]) -> Vec<AlgebraicDescriptor> {
    if !is_square_free(coeffs) {
        return Vec::new();
    }
    let p = trim(to_rational_poly(coeffs));
    let chain = sturm_chain(&p);
    let lead = p.last().unwrap().abs();
    let max = p.iter().map(|c| c.abs()).max().unwrap();
    let bound = (max / lead).ceil() + BigRational::one();

    let mut stack = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match roots_between(&chain, &lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
                // push right half first so the left half is processed first
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    isolated.sort();

    isolated
        .into_iter()
        .enumerate()
        .map(|(root_index, (lo, hi))| AlgebraicDescriptor {
            coefficients: coeffs.to_vec(),
            root_index,
            interval: refine(&p, &chain, lo, hi),
        })
        .collect()
}

/// Shrinks `(lo, hi]` (holding exactly one simple root) to a closed interval
/// of width at most 2⁻³² with a strict sign change at its endpoints.
fn refine(p: &[BigRational], chain: &[Poly], mut lo: BigRational, mut hi: BigRational) -> (BigRational, BigRational) {
    let two = BigRational::from(BigInt::from(2));
    let width = isolation_width();
    while &hi - &lo > width {
        let mid = (&lo + &hi) / &two;
        if roots_between(chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if poly_eval(p, &hi).is_zero() {
        // exact rational root: centre a small interval on it
        let mut delta = (&hi - &lo) / &two;
        loop {
            let a = &hi - &delta;
            let b = &hi + &delta;
            if !poly_eval(p, &a).is_zero() && !poly_eval(p, &b).is_zero() && roots_between(chain, &a, &b) == 1 {
                return (a, b);
            }
            delta /= &two;
        }
    }
    if poly_eval(p, &lo).is_zero() {
        // lo is a neighbouring root; step inside without passing ours
        let mut delta = (&hi - &lo) / &two;
        loop {
            let candidate = &lo + &delta;
            if !poly_eval(p, &candidate).is_zero() && roots_between(chain, &candidate, &hi) == 1 {
                lo = candidate;
                break;
            }
            delta /= &two;
        }
    }
    (lo, hi)
}
