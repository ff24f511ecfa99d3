//! Helpers shared by the integration tests: seeded generators, proptest
//! strategies and two oracles that share no code with the library arithmetic.

#![allow(dead_code)]

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;
use transfinitum::Ordinal;

pub fn nat(n: u64) -> Ordinal {
    Ordinal::from(n)
}

pub fn w() -> Ordinal {
    Ordinal::omega()
}

/// Builds `Σ ω^e · c` from `(e, c)` pairs with natural exponents, merging
/// and sorting as needed. Zero coefficients are dropped.
pub fn cnf(pairs: &[(u64, u64)]) -> Ordinal {
    let mut v: Vec<(u64, u64)> = Vec::new();
    for &(e, c) in pairs {
        if c == 0 {
            continue;
        }
        match v.iter_mut().find(|(e2, _)| *e2 == e) {
            Some(slot) => slot.1 += c,
            None => v.push((e, c)),
        }
    }
    v.sort_by_key(|&(e, _)| std::cmp::Reverse(e));
    Ordinal::from_terms(v.into_iter().map(|(e, c)| (nat(e), BigUint::from(c)))).unwrap()
}

/// Coefficients of an ordinal below ω^ω, indexed by exponent.
pub fn coefficients(o: &Ordinal) -> Vec<u64> {
    let mut out = Vec::new();
    for t in o.terms() {
        let e = t.exponent().as_u64().expect("finite exponent") as usize;
        if out.len() <= e {
            out.resize(e + 1, 0);
        }
        out[e] = u64::try_from(t.coefficient()).expect("small coefficient");
    }
    out
}

/// A random ordinal below `ω^(max_exp+1)` with at most `max_terms` terms and
/// coefficients in `1..=max_coef`.
pub fn random_below_omega_pow<R: Rng>(rng: &mut R, max_exp: u64, max_coef: u64, max_terms: usize) -> Ordinal {
    let n = rng.gen_range(0..=max_terms);
    let mut exps: Vec<u64> = (0..=max_exp).collect();
    let mut pairs = Vec::new();
    for _ in 0..n.min(exps.len()) {
        let i = rng.gen_range(0..exps.len());
        let e = exps.swap_remove(i);
        pairs.push((e, rng.gen_range(1..=max_coef)));
    }
    cnf(&pairs)
}

/// A random ordinal below ε₀ whose exponents nest to at most `depth` levels.
pub fn random_nested<R: Rng>(rng: &mut R, depth: u32, max_coef: u64, max_terms: usize) -> Ordinal {
    if depth == 0 {
        return nat(rng.gen_range(0..=max_coef));
    }
    let n = rng.gen_range(0..=max_terms);
    let mut exps: Vec<Ordinal> = (0..n)
        .map(|_| random_nested(rng, depth - 1, max_coef, max_terms))
        .collect();
    exps.sort();
    exps.dedup();
    exps.reverse();
    Ordinal::from_terms(
        exps.into_iter()
            .map(|e| (e, BigUint::from(rng.gen_range(1..=max_coef)))),
    )
    .unwrap()
}

/// Proptest strategy for ordinals below ω^ω.
pub fn below_omega_omega(max_exp: u64, max_coef: u64, max_terms: usize) -> impl Strategy<Value = Ordinal> {
    proptest::collection::btree_map(0..=max_exp, 1..=max_coef, 0..=max_terms).prop_map(|m| {
        let pairs: Vec<(u64, u64)> = m.into_iter().collect();
        cnf(&pairs)
    })
}

/// Proptest strategy for ordinals below ε₀ with nested exponents.
pub fn nested_ordinal(max_coef: u64) -> impl Strategy<Value = Ordinal> {
    let leaf = (0..=max_coef).prop_map(nat).boxed();
    leaf.prop_recursive(3, 24, 4, move |inner| {
        proptest::collection::vec((inner, 1..=max_coef), 0..4).prop_map(|mut v| {
            v.sort_by(|a, b| b.0.cmp(&a.0));
            v.dedup_by(|a, b| a.0 == b.0);
            Ordinal::from_terms(v.into_iter().map(|(e, c)| (e, BigUint::from(c)))).unwrap()
        })
    })
}

/// Order-type oracle built from point sets in `[0, 1)`.
///
/// An ordinal is drawn as a well-ordered set of dyadic rationals, stored as
/// fixed-point integers over `2^SCALE_BITS`. Addition places the two sets side
/// by side, multiplication substitutes a scaled copy of the left factor into
/// the gap after every point of the right factor, and ω is a geometric run
/// of `OMEGA_POINTS` points whose limit is where the next block begins.
///
/// The order type is read back by ranking points from left to right: a point
/// is a limit of the points of rank `r` when, for some dyadic width `W`, the
/// windows `[p - W/2^k, p - W/2^(k+1))` each start at a point of the set
/// and their rank `r` points are rescaled copies of one another. Walking the
/// points and their ranks then yields the coefficients of the type, with the
/// sentinel point 1 marking the end of the set.
///
/// A right-nested sum of four or more single points, `1 + (1 + (1 + 1))`,
/// draws exactly like a truncated ω and would be misread. Finite runs are
/// therefore always built left-nested.
pub mod qembed {
    pub const SCALE_BITS: u32 = 120;
    pub const ONE: u128 = 1 << SCALE_BITS;
    pub const OMEGA_POINTS: u32 = 7;
    const WINDOWS: u32 = 4;
    const MAX_RANK: usize = 16;

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct WellOrder {
        pub points: Vec<u128>,
    }

    impl WellOrder {
        pub fn empty() -> Self {
            WellOrder { points: Vec::new() }
        }

        pub fn one() -> Self {
            WellOrder { points: vec![0] }
        }

        pub fn omega() -> Self {
            let points = (0..OMEGA_POINTS).map(|n| ONE - (ONE >> n)).collect();
            WellOrder { points }
        }

        pub fn finite(n: u64) -> Self {
            (0..n).fold(WellOrder::empty(), |acc, _| acc.concat(&WellOrder::one()))
        }

        pub fn len(&self) -> usize {
            self.points.len()
        }

        /// `self` followed by `other`.
        pub fn concat(&self, other: &WellOrder) -> WellOrder {
            if self.points.is_empty() {
                return other.clone();
            }
            if other.points.is_empty() {
                return self.clone();
            }
            let half = ONE / 2;
            let mut points: Vec<u128> = self.points.iter().map(|p| exact_half(*p)).collect();
            points.extend(other.points.iter().map(|p| half + exact_half(*p)));
            WellOrder { points }
        }

        /// A copy of `self` for every point of `other`, in the order of `other`.
        pub fn substitute(&self, other: &WellOrder) -> WellOrder {
            let mut points = Vec::with_capacity(self.len() * other.len());
            for (i, &start) in other.points.iter().enumerate() {
                let end = other.points.get(i + 1).copied().unwrap_or(ONE);
                let gap = end - start;
                assert!(gap.is_power_of_two(), "gaps stay dyadic");
                let shift = gap.trailing_zeros();
                for &p in &self.points {
                    let down = SCALE_BITS - shift;
                    assert_eq!(p & ((1u128 << down) - 1), 0, "resolution exhausted");
                    points.push(start + (p >> down));
                }
            }
            WellOrder { points }
        }

        /// Ranks of the points followed by the rank of the sentinel at 1.
        pub fn ranks(&self) -> Vec<u32> {
            let mut all = self.points.clone();
            all.push(ONE);
            let mut ranks: Vec<u32> = Vec::with_capacity(all.len());
            // counts[i][r]: points of rank at least r among the first i
            let mut counts: Vec<[u32; MAX_RANK]> = vec![[0; MAX_RANK]];
            let mut max_rank = 0;
            for (idx, &p) in all.iter().enumerate() {
                let left = Level {
                    points: &all[..idx],
                    ranks: &ranks,
                    counts: &counts,
                };
                let widths = candidate_widths(left.points, p);
                let rank = (0..=max_rank)
                    .rev()
                    .find(|&r| widths.iter().any(|&wd| left.similar_windows(p, wd, r)))
                    .map_or(0, |r| r + 1);
                max_rank = max_rank.max(rank);
                let mut next = counts[idx];
                for c in next.iter_mut().take(rank as usize + 1) {
                    *c += 1;
                }
                counts.push(next);
                ranks.push(rank);
            }
            ranks
        }

        /// Coefficients of the order type, indexed by exponent, trailing
        /// zeros removed.
        pub fn order_type(&self) -> Vec<u64> {
            let ranks = self.ranks();
            let mut position: Vec<u64> = Vec::new();
            for (i, &r) in ranks.iter().enumerate() {
                if i == 0 {
                    continue;
                }
                let r = r as usize;
                if position.len() <= r {
                    position.resize(r + 1, 0);
                }
                for c in position.iter_mut().take(r) {
                    *c = 0;
                }
                position[r] += 1;
            }
            while position.last() == Some(&0) {
                position.pop();
            }
            position
        }
    }

    fn exact_half(p: u128) -> u128 {
        assert_eq!(p & 1, 0, "resolution exhausted");
        p / 2
    }

    /// Dyadic widths `W` for which every window `[p - W/2^k, ...)` starts at
    /// a point left of `p`.
    fn candidate_widths(left: &[u128], p: u128) -> Vec<u128> {
        let Some(&nearest) = left.last() else {
            return Vec::new();
        };
        let gap = p - nearest;
        let lowest = gap.next_power_of_two().trailing_zeros() + WINDOWS - 1;
        let highest = 127 - p.leading_zeros();
        let is_point = |x: u128| left.binary_search(&x).is_ok();
        (lowest..=highest)
            .map(|s| 1u128 << s)
            .filter(|&wd| (0..WINDOWS).all(|k| is_point(p - (wd >> k))))
            .collect()
    }

    struct Level<'a> {
        points: &'a [u128],
        ranks: &'a [u32],
        counts: &'a [[u32; MAX_RANK]],
    }

    impl Level<'_> {
        fn similar_windows(&self, p: u128, width: u128, r: u32) -> bool {
            let bounds: Vec<(usize, usize)> = (0..WINDOWS)
                .map(|k| {
                    let lo = p - (width >> k);
                    let hi = p - (width >> (k + 1));
                    (
                        self.points.partition_point(|&x| x < lo),
                        self.points.partition_point(|&x| x < hi),
                    )
                })
                .collect();
            let count = |(a, b): (usize, usize)| self.counts[b][r as usize] - self.counts[a][r as usize];
            let first = count(bounds[0]);
            if first == 0 || bounds.iter().any(|&bd| count(bd) != first) {
                return false;
            }
            let window = |(a, b): (usize, usize)| -> Vec<u128> {
                (a..b).filter(|&i| self.ranks[i] >= r).map(|i| self.points[i]).collect()
            };
            let mut previous = window(bounds[0]);
            for &bd in &bounds[1..] {
                let current = window(bd);
                let shrunk: Option<Vec<u128>> = previous
                    .iter()
                    .map(|&x| {
                        let d = p - x;
                        (d & 1 == 0).then(|| p - d / 2)
                    })
                    .collect();
                if shrunk.as_ref() != Some(&current) {
                    return false;
                }
                previous = current;
            }
            true
        }
    }

    /// The canonical drawing of `Σ ω^e · c` for coefficient vector `coef`
    /// (index = exponent), built only from the primitives above.
    pub fn from_coefficients(coef: &[u64]) -> WellOrder {
        let mut out = WellOrder::empty();
        for (e, &c) in coef.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mut block = WellOrder::one();
            for _ in 0..e {
                block = block.substitute(&WellOrder::omega());
            }
            out = out.concat(&block.substitute(&WellOrder::finite(c)));
        }
        out
    }
}

/// Accumulation-point oracle for realized derived sets.
///
/// Given a large truncation `A` of a set and a smaller window `W` of the same
/// set, a point `p` of `W` counts as an accumulation point when `A` has
/// another point closer to `p` than half of `p`'s isolation radius in `W`.
pub mod isolation {
    use num_rational::BigRational;
    use num_traits::Signed;
    use std::collections::BTreeSet;

    pub fn accumulation_points(window: &BTreeSet<BigRational>, full: &BTreeSet<BigRational>) -> BTreeSet<BigRational> {
        let mut out = BTreeSet::new();
        for p in window {
            let nearest_in_window = nearest_gap(window, p);
            let eps = match nearest_in_window {
                Some(g) => g / BigRational::from_integer(2.into()),
                None => continue,
            };
            if let Some(g) = nearest_gap(full, p) {
                if g < eps {
                    out.insert(p.clone());
                }
            }
        }
        out
    }

    fn nearest_gap(set: &BTreeSet<BigRational>, p: &BigRational) -> Option<BigRational> {
        let below = set.range(..p.clone()).next_back();
        let above = set
            .range((std::ops::Bound::Excluded(p.clone()), std::ops::Bound::Unbounded))
            .next();
        [below, above].into_iter().flatten().map(|q| (q - p).abs()).min()
    }
}
