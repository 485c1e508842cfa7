use cherednik::serial::{poly_from_json, poly_from_str, poly_to_json, poly_to_string};
use cherednik::{FieldContext, MultiPoly, Scalar};
use proptest::prelude::*;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..5, nvars), -20i64..20, 1i64..9), 0..8)
}

fn build(n: usize, terms: &[(Vec<u32>, i64, i64)], w: &Scalar) -> MultiPoly {
    MultiPoly::from_terms(
        n,
        terms
            .iter()
            .enumerate()
            .map(|(k, (e, a, b))| {
                let c = Scalar::frac(*a, *b);
                (e.clone(), if k % 2 == 0 { &c * w } else { c })
            }),
    )
}

proptest! {
    #[test]
    fn rational_round_trip(terms in poly_strategy(3)) {
        let p = build(3, &terms, &Scalar::one());
        prop_assert_eq!(poly_from_str(&poly_to_string(&p)).unwrap(), p);
    }

    #[test]
    fn cyclotomic_round_trip(terms in poly_strategy(2), ell in 3u32..8) {
        let ctx = FieldContext::cyclotomic(ell).unwrap();
        let p = build(2, &terms, &ctx.generator());
        let back = poly_from_json(&poly_to_json(&p)).unwrap();
        prop_assert_eq!(back.field(), p.field());
        prop_assert_eq!(back, p);
    }

    #[test]
    fn quadratic_round_trip(terms in poly_strategy(2), d in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        let ctx = FieldContext::quadratic(d).unwrap();
        let p = build(2, &terms, &ctx.generator());
        prop_assert_eq!(poly_from_str(&poly_to_string(&p)).unwrap(), p);
    }
}

#[test]
fn schema_paths() {
    let cases = [
        (r#"[]"#, "$"),
        (r#"{"field": {"kind": "Q", "param": 0}, "terms": []}"#, "$"),
        (r#"{"vars": -1, "field": {"kind": "Q", "param": 0}, "terms": []}"#, "$.vars"),
        (r#"{"vars": 1, "field": {"kind": "Q"}, "terms": []}"#, "$.field"),
        (r#"{"vars": 1, "field": {"kind": "cyclotomic", "param": 0}, "terms": []}"#, "$.field"),
        (r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1]}]}"#, "$.terms[0]"),
        (r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": ["a"], "coef": "1"}]}"#, "$.terms[0].exp[0]"),
        (r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1], "coef": "x"}]}"#, "$.terms[0].coef"),
        (r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1], "coef": "0"}]}"#, "$.terms[0].coef"),
        (
            r#"{"vars": 1, "field": {"kind": "cyclotomic", "param": 3}, "terms": [{"exp": [1], "coef": ["1", "1/0"]}]}"#,
            "$.terms[0].coef[1]",
        ),
        (
            r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1], "coef": "1"}, {"exp": [1], "coef": "2"}]}"#,
            "$.terms[1].exp",
        ),
    ];
    for (text, want) in cases {
        match poly_from_str(text) {
            Err(cherednik::Error::Schema { path, .. }) => assert_eq!(path, want, "{text}"),
            other => panic!("{text}: expected schema error at {want}, got {other:?}"),
        }
    }
}
