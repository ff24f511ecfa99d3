//! Browser bindings for the transfinitum demo page.
//!
//! Every export takes plain strings and returns one JSON document, either a
//! result or `{"error": {"code", "message"}}`, so the page never has to catch
//! exceptions thrown across the wasm boundary.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value as Json};
use transfinitum::derived::{self, SetTerm};
use transfinitum::{eval_str, json as records, CardinalConfig, OmegaOrder, Ordinal};
use wasm_bindgen::prelude::wasm_bindgen;

/// Point sets bigger than this are not sent to the page.
pub const MAX_POINTS: u32 = 20_000;

fn error(code: &str, message: impl ToString) -> String {
    json!({"error": {"code": code, "message": message.to_string()}}).to_string()
}

fn parse_ordinal(text: &str) -> Result<Ordinal, String> {
    text.parse::<Ordinal>().map_err(|e| error(e.code(), e))
}

/// Evaluates an expression such as `w*2 + 1` or `2^aleph_0 > aleph_0`.
#[wasm_bindgen]
pub fn evaluate(expr: &str, gch: bool) -> String {
    match eval_str(expr, CardinalConfig::new(gch)) {
        Ok(v) => records::value(&v).to_line(),
        Err(e) => error(e.code(), e),
    }
}

/// Lists the rearrangement of the naturals of type `alpha`, showing `k`
/// elements of each ω-block, together with the first `k` positions of each
/// element below `probe`.
#[wasm_bindgen]
pub fn order_prefix(alpha: &str, k: u32, probe: u32) -> String {
    if k == 0 {
        return error("BAD_PREFIX", "the prefix must be at least 1");
    }
    let alpha = match parse_ordinal(alpha) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let order = match OmegaOrder::new(alpha.clone()) {
        Ok(o) => o,
        Err(e) => return error("ORDER", e),
    };
    let ranks: Vec<Json> = (1..=probe.min(1000))
        .filter_map(|n| {
            let n = BigUint::from(n);
            let rank = order.rank_of(&n).ok()?;
            Some(json!({"element": n.to_string(), "position": rank.to_string()}))
        })
        .collect();
    json!({
        "alpha": alpha.to_string(),
        "listing": order.show_prefix(k as usize),
        "ranks": ranks,
    })
    .to_string()
}

/// The stages worth drawing for a chain of length `rank`: the first four,
/// then the last three once the chain passes a limit.
fn stages(rank: &Ordinal) -> Vec<Ordinal> {
    let mut out: Vec<Ordinal> = (0..4u32).map(Ordinal::from).filter(|s| s < rank).collect();
    let limit = rank.limit_part();
    if !limit.is_zero() {
        let last = rank.finite_part().to_u32().unwrap_or(u32::MAX);
        for i in last.saturating_sub(3)..last {
            out.push(&limit + &Ordinal::from(i));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Realizes each derived set of `input` (a set term, or an ordinal α meaning
/// the canonical set of rank α+1) as points of `[0, 1]` for plotting.
#[wasm_bindgen]
pub fn derived_chain(input: &str, depth: u32) -> String {
    let trimmed = input.trim();
    let term = if trimmed.starts_with(|c: char| c.is_ascii_uppercase()) {
        match trimmed.parse::<SetTerm>() {
            Ok(t) => t,
            Err(e) => return error("SYNTAX", e),
        }
    } else {
        match parse_ordinal(trimmed) {
            Ok(a) => derived::canonical(&a),
            Err(e) => return e,
        }
    };
    let depth = depth.clamp(1, 64) as usize;
    if derived::realize_count(&term, depth) > BigUint::from(MAX_POINTS) {
        return error("TOO_LARGE", format!("more than {MAX_POINTS} points at depth {depth}"));
    }
    let rank = derived::cb_rank(&term);
    let chain: Vec<Json> = stages(&rank)
        .into_iter()
        .map(|stage| {
            let set = derived::derivative_iter(&term, &stage);
            let points: Vec<f64> = derived::realize(&set, depth)
                .iter()
                .map(|q| q.to_f64().unwrap_or(f64::NAN))
                .collect();
            json!({"stage": stage.to_string(), "term": set.to_string(), "points": points})
        })
        .collect();
    json!({"term": term.to_string(), "rank": rank.to_string(), "chain": chain}).to_string()
}
