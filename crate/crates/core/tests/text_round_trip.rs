use proptest::prelude::*;
use ringop::category::{enumerate_hom, HomClass};
use ringop::poly::enumerate_r;
use ringop::term::{plus, times, Term};
use ringop::text::{parse_intpoly, parse_morphism, parse_poly, parse_term};

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::Zero), Just(Term::One), (1usize..12).prop_map(Term::Var)];
    leaf.prop_recursive(6, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| plus(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| times(a, b)),
        ]
    })
}

#[test]
fn polys_of_arity_three() {
    for f in enumerate_r(3).unwrap() {
        let s = f.to_string();
        assert_eq!(parse_poly(&s).unwrap().to_string(), s);
        assert_eq!(parse_intpoly(&s).unwrap().to_string(), s);
    }
}

#[test]
fn morphisms_between_small_polys() {
    let objs: Vec<_> = (0..=2).flat_map(|n| enumerate_r(n).unwrap()).collect();
    for f in &objs {
        for g in &objs {
            for m in enumerate_hom(f, g, HomClass::All).unwrap() {
                let s = m.to_string();
                assert_eq!(parse_morphism(&s).unwrap(), m, "{s}");
                assert_eq!(parse_morphism(&s).unwrap().to_string(), s);
            }
        }
    }
}

#[test]
fn whitespace_is_not_significant() {
    let a = parse_term("( x1 +(x2*1))").unwrap();
    assert_eq!(a.to_string(), "(x1 + (x2 * 1))");
    let p = parse_poly("R(3):x3*x1+x2").unwrap();
    assert_eq!(p.to_string(), "R(3): x2 + x1*x3");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn terms_round_trip(t in arb_term()) {
        let s = t.to_string();
        let back = parse_term(&s).unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back, t);
    }
}
