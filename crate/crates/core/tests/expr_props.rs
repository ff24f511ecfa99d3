mod common;

use common::nested_ordinal;
use num_bigint::BigUint;
use proptest::prelude::*;
use transfinitum::expr::{CmpOp, ExprError};
use transfinitum::{eval, eval_str, parse, CardinalConfig, Expr, Ordinal, Truth, Value};

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn term() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(|n| Expr::Nat(BigUint::from(n))),
        Just(Expr::Omega),
        (0u64..5).prop_map(|n| Expr::Aleph(b(Expr::Nat(BigUint::from(n))))),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Add(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Mul(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Pow(b(l), b(r))),
            inner.prop_map(|i| Expr::Aleph(b(i))),
        ]
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let op = prop_oneof![Just(CmpOp::Less), Just(CmpOp::Equal), Just(CmpOp::Greater)];
    prop_oneof![
        3 => term(),
        1 => (op, term(), term()).prop_map(|(o, l, r)| Expr::Compare(o, b(l), b(r))),
    ]
}

fn cfg() -> CardinalConfig {
    CardinalConfig::new(false)
}

fn ordinal_of(text: &str) -> Ordinal {
    match eval_str(text, cfg()).unwrap() {
        Value::Ordinal(o) => o,
        other => panic!("{text} gave {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ast_print_parse_round_trip(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn canonical_ordinal_text_round_trip(o in nested_ordinal(1_000_000)) {
        let text = o.to_string();
        prop_assert_eq!(ordinal_of(&text), o.clone());
        prop_assert_eq!(parse(&text).unwrap().to_string(), text);
    }

    #[test]
    fn arithmetic_matches_library(a in nested_ordinal(20), c in nested_ordinal(20)) {
        let (ta, tc) = (a.to_string(), c.to_string());
        prop_assert_eq!(ordinal_of(&format!("({ta}) + ({tc})")), &a + &c);
        prop_assert_eq!(ordinal_of(&format!("({ta}) * ({tc})")), &a * &c);
        let cmp = eval_str(&format!("({ta}) < ({tc})"), cfg()).unwrap();
        let expected = if a < c { Truth::True } else { Truth::False };
        prop_assert_eq!(cmp, Value::Truth(expected));
    }

    #[test]
    fn evaluation_never_panics(e in expr()) {
        let _ = eval(&e, cfg());
        let _ = eval(&e, CardinalConfig::new(true));
    }
}

fn code(text: &str) -> &'static str {
    eval_str(text, cfg()).unwrap_err().code()
}

#[test]
fn subtraction_and_division_are_not_introduced() {
    for text in ["w - 1", "w / 2", "3 − 1", "w ÷ w", "aleph_0 - 1"] {
        let err = eval_str(text, cfg()).unwrap_err();
        assert!(matches!(err, ExprError::Parse(_)), "{text}");
        assert_eq!(err.code(), "OP_UNSUPPORTED", "{text}");
    }
}

#[test]
fn proper_class_is_rejected() {
    assert_eq!(code("Ord"), "PROPER_CLASS");
    assert_eq!(code("Ord + 1"), "PROPER_CLASS");
    assert!(eval_str("Ord", cfg()).unwrap_err().to_string().contains("Burali-Forti"));
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse("w + * 2").unwrap_err();
    assert_eq!(e.code(), "SYNTAX");
    assert!(e.to_string().contains("at 4"), "{e}");
    for bad in ["", "(", "w +", "aleph_", "1 2", "w ^", "x"] {
        assert_eq!(code(bad), "SYNTAX", "{bad:?}");
    }
}

#[test]
fn spelled_identities() {
    let t = |text: &str, gch: bool| eval_str(text, CardinalConfig::new(gch)).unwrap().to_string();
    assert_eq!(t("1 + w", false), "w");
    assert_eq!(t("1 + ω", false), "w");
    assert_eq!(t("2*w", false), "w");
    assert_eq!(t("2·ω", false), "w");
    assert_eq!(t("w*2 + w", false), "w*3");
    assert_eq!(t("w^w*3 + w*2 + 5", false), "w^w*3 + w*2 + 5");
    assert_eq!(t("2^aleph_0 > aleph_0", false), "true");
    assert_eq!(t("2^ℵ_0 > ℵ_0", false), "true");
    assert_eq!(t("2^aleph_0 = aleph_1", true), "true");
    assert_eq!(t("2^aleph_0 = aleph_1", false), "incomparable");
    assert_eq!(t("aleph_(w+1)", false), "aleph_(w + 1)");
    assert_eq!(code("w + aleph_0"), "TYPE_MISMATCH");
    assert_eq!(code("2^aleph_0 + aleph_1"), "UNRESOLVED_POWER");
}
