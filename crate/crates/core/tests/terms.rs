use std::collections::BTreeSet;

use proptest::prelude::*;
use ringop::map::{ExtMap, Point};
use ringop::poly::{enumerate_r, substitute};
use ringop::term::{
    act_map, biperm_rewrites, enumerate_fiber, fiber_member, normalize_biperm, plus, project, reduce_a, section_s,
    times, Mode, Term,
};

/// Every term with exactly `k` leaves drawn from `leaves`.
fn terms_with(k: usize, leaves: &[Term]) -> Vec<Term> {
    if k == 1 {
        return leaves.to_vec();
    }
    let mut out = Vec::new();
    for left in 1..k {
        let ls = terms_with(left, leaves);
        let rs = terms_with(k - left, leaves);
        for a in &ls {
            for b in &rs {
                out.push(plus(a.clone(), b.clone()));
                out.push(times(a.clone(), b.clone()));
            }
        }
    }
    out
}

fn alphabet(n: usize) -> Vec<Term> {
    let mut v = vec![Term::Zero, Term::One];
    v.extend((1..=n).map(Term::Var));
    v
}

fn arb_term(n: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        1 => Just(Term::Zero),
        2 => Just(Term::One),
        6 => (1..=n).prop_map(Term::Var),
    ];
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| plus(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| times(a, b)),
        ]
    })
}

#[test]
fn reduce_is_canonical_and_preserves_projection_small() {
    for k in 1..=4 {
        for t in terms_with(k, &alphabet(3)) {
            let r = reduce_a(&t);
            assert!(r.is_canonical(), "{t} -> {r}");
            assert_eq!(reduce_a(&r), r);
            assert_eq!(project(&r, 3), project(&t, 3), "{t}");
            let b = normalize_biperm(&t);
            assert!(b.is_reduced(), "{t} -> {b}");
            assert_eq!(normalize_biperm(&b), b);
            assert_eq!(project(&b, 3), project(&t, 3), "{t}");
        }
    }
}

#[test]
fn confluence_small() {
    for k in 1..=4 {
        for t in terms_with(k, &alphabet(2)) {
            let direct = normalize_biperm(&t);
            for u in biperm_rewrites(&t) {
                assert_eq!(normalize_biperm(&u), direct, "{t} => {u}");
            }
        }
    }
}

#[test]
fn fiber_matches_brute_force() {
    for n in 0..=2 {
        let mut all = Vec::new();
        for k in 1..=5 {
            all.extend(terms_with(k, &alphabet(n)));
        }
        for f in enumerate_r(n).unwrap() {
            for mode in [Mode::Sym, Mode::Biperm] {
                let brute: BTreeSet<Term> = all.iter().filter(|t| fiber_member(t, &f, mode)).cloned().collect();
                let fiber = enumerate_fiber(&f, mode, 5);
                let fast: BTreeSet<Term> = fiber.terms.into_iter().collect();
                assert_eq!(brute, fast, "{f} {mode:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn normal_forms_are_idempotent(t in arb_term(3)) {
        let r = reduce_a(&t);
        prop_assert_eq!(reduce_a(&r), r.clone());
        prop_assert_eq!(project(&r, 3), project(&t, 3));
        let b = normalize_biperm(&t);
        prop_assert!(b.is_reduced());
        prop_assert_eq!(normalize_biperm(&b), b.clone());
        prop_assert_eq!(project(&b, 3), project(&t, 3));
    }

    #[test]
    fn section_is_split(t in arb_term(3)) {
        let r = normalize_biperm(&t);
        prop_assert_eq!(normalize_biperm(&section_s(&r).unwrap()), r);
    }

    #[test]
    fn single_rewrites_do_not_change_the_normal_form(t in arb_term(3)) {
        let direct = normalize_biperm(&t);
        for u in biperm_rewrites(&t) {
            prop_assert_eq!(normalize_biperm(&u), direct.clone());
        }
    }

    #[test]
    fn projection_commutes_with_maps(t in arb_term(3), images in proptest::collection::vec(0usize..4, 3)) {
        let points = images.iter().map(|&i| [Point::Zero, Point::E, Point::At(1), Point::At(2)][i]).collect();
        let phi = ExtMap::new(2, points).unwrap();
        let canonical = reduce_a(&t);
        if let Ok(f) = project(&canonical, 3).to_rpoly() {
            let lhs = project(&act_map(&phi, &canonical), 2);
            prop_assert_eq!(lhs, substitute(&phi, &f).unwrap());
        }
    }
}
