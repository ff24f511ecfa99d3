//! JSON renderings used by `--json` output and the web demo.
//!
//! Every result is one object `{"kind", "value", "canonical-text"}`. Natural
//! numbers are written as decimal strings so that no precision is lost.

use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::cardinal::Cardinal;
use crate::countability::AlgebraicDescriptor;
use crate::derived::SetTerm;
use crate::expr::Value;
use crate::ordinal::Ordinal;

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Record {
    pub kind: &'static str,
    pub value: Json,
    #[serde(rename = "canonical-text")]
    pub canonical_text: String,
}

impl Record {
    pub fn new(kind: &'static str, value: Json, canonical_text: impl Into<String>) -> Self {
        Record {
            kind,
            value,
            canonical_text: canonical_text.into(),
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialise")
    }
}

pub fn ordinal(o: &Ordinal) -> Json {
    let terms: Vec<Json> = o
        .terms()
        .iter()
        .map(|t| {
            json!({
                "exponent": ordinal(t.exponent()),
                "coefficient": t.coefficient().to_string(),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn cardinal(c: &Cardinal) -> Json {
    match c {
        Cardinal::Finite(n) => json!({ "finite": n.to_string() }),
        Cardinal::Aleph(i) => json!({ "aleph": ordinal(i) }),
        Cardinal::PowerOfTwo(b) => json!({ "power_of_two": cardinal(b) }),
    }
}

pub fn set_term(t: &SetTerm) -> Json {
    match t {
        SetTerm::Empty => json!("Empty"),
        SetTerm::Point => json!("Point"),
        SetTerm::Omega(child) => json!({ "omega": set_term(child) }),
        SetTerm::Fam { lambda, beta } => json!({
            "fam": { "lambda": lambda.to_string(), "beta": beta.to_string() }
        }),
    }
}

pub fn algebraic(d: &AlgebraicDescriptor) -> Json {
    json!({
        "coefficients": d.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "root_index": d.root_index,
        "interval": [d.interval.0.to_string(), d.interval.1.to_string()],
    })
}

pub fn value(v: &Value) -> Record {
    let payload = match v {
        Value::Ordinal(o) => ordinal(o),
        Value::Cardinal(c) => cardinal(c),
        Value::Truth(crate::expr::Truth::True) => json!(true),
        Value::Truth(crate::expr::Truth::False) => json!(false),
        Value::Truth(crate::expr::Truth::Incomparable) => json!("incomparable"),
    };
    Record::new(v.kind(), payload, v.to_string())
}
