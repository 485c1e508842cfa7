use cherednik::coxeter::{build_root_system, GroupElementAction, GroupType};
use cherednik::field::{Field, FieldContext, Scalar};
use cherednik::poly::MultiPoly;
use proptest::prelude::*;

fn terms(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), -9i64..=9, 1i64..=5), 0..6)
}

fn poly(n: usize, t: &[(Vec<u32>, i64, i64)], w: Option<&Scalar>) -> MultiPoly {
    MultiPoly::from_terms(
        n,
        t.iter().enumerate().map(|(k, (e, a, b))| {
            let c = Scalar::frac(*a, *b);
            match w {
                Some(w) if k % 2 == 1 => (e.clone(), &c * w),
                _ => (e.clone(), c),
            }
        }),
    )
}

fn scalar() -> impl Strategy<Value = (i64, i64, i64)> {
    (-9i64..=9, -9i64..=9, 1i64..=7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in terms(3), b in terms(3), c in terms(3)) {
        let (a, b, c) = (poly(3, &a, None), poly(3, &b, None), poly(3, &c, None));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &MultiPoly::one(3), a.clone());
    }

    #[test]
    fn ring_laws_over_cyclotomic(a in terms(2), b in terms(2), c in terms(2), ell in 3u32..=7) {
        let ctx = FieldContext::cyclotomic(ell).unwrap();
        let w = ctx.generator();
        let (a, b, c) = (poly(2, &a, Some(&w)), poly(2, &b, Some(&w)), poly(2, &c, Some(&w)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), d in prop::sample::select(vec![-3i64, -1, 2, 3, 5])) {
        let ctx = FieldContext::quadratic(d).unwrap();
        let s = ctx.generator();
        let u = &Scalar::frac(x.0, x.2) + &(&Scalar::frac(x.1, x.2) * &s);
        let v = &Scalar::frac(y.0, y.2) + &(&Scalar::frac(y.1, y.2) * &s);
        prop_assert_eq!(&(&u * &v) - &(&v * &u), Scalar::zero());
        if let Some(ui) = u.inv() {
            prop_assert!((&u * &ui).is_one());
        } else {
            prop_assert!(u.is_zero());
        }
        prop_assert_eq!(&s * &s, Scalar::int(d));
    }

    #[test]
    fn root_of_unity_powers(ell in 2u32..=9, k in 0i64..40) {
        let ctx = FieldContext::cyclotomic(ell).unwrap();
        let w = ctx.generator();
        prop_assert!(w.pow(ell).is_one());
        prop_assert_eq!(ctx.root_power(k), ctx.root_power(k + ell as i64));
        if k % ell as i64 != 0 {
            prop_assert!(!ctx.root_power(k).is_one());
        }
    }

    #[test]
    fn derivative_is_a_derivation(a in terms(3), b in terms(3), i in 0usize..3) {
        let (a, b) = (poly(3, &a, None), poly(3, &b, None));
        prop_assert_eq!((&a * &b).diff(i), &(&a.diff(i) * &b) + &(&a * &b.diff(i)));
    }

    #[test]
    fn group_action_is_a_ring_map(a in terms(3), b in terms(3), word in prop::collection::vec(0usize..3, 0..6)) {
        let rs = build_root_system(GroupType::B, 3).unwrap();
        let w = GroupElementAction::from_simple_word(&rs, &word);
        let (a, b) = (poly(3, &a, None), poly(3, &b, None));
        prop_assert_eq!(w.act(&(&a * &b)).unwrap(), &w.act(&a).unwrap() * &w.act(&b).unwrap());
        prop_assert!(w.is_orthogonal());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in terms(3), k in 0usize..9) {
        let rs = build_root_system(GroupType::B, 3).unwrap();
        let gamma = &rs.roots()[k].vector;
        let a = poly(3, &a, None);
        let prod = &a * &MultiPoly::linear_form(gamma);
        prop_assert_eq!(prod.exact_divide_by_linear_form(gamma).unwrap(), a);
    }
}

#[test]
fn incompatible_fields_are_rejected() {
    let a = MultiPoly::constant(1, FieldContext::quadratic(2).unwrap().generator());
    let b = MultiPoly::constant(1, FieldContext::cyclotomic(3).unwrap().generator());
    assert!(cherednik::poly_arith(&a, &b, cherednik::PolyOp::Mul).is_err());
    assert_eq!(a.field(), &Field::Extension(FieldContext::quadratic(2).unwrap()));
}
