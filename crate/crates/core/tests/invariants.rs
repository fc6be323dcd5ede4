use proptest::prelude::*;

use sh3_core::algebra::{reorder_oracle, superbracket, t, Element};
use sh3_core::cyclotomic::CycNum;
use sh3_core::expr::parse_element;
use sh3_core::par::Exec;
use sh3_core::random::{random_element, rng};
use sh3_core::sl2::{is_singlet, singlet_project};
use sh3_core::structure::{casimir_singlet, project_to_commutant};
use sh3_core::supertrace::str_eval;

fn element(seed: u64, degree: u32, terms: usize) -> Element {
    random_element(&mut rng(seed), degree, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_rewriting(s in any::<u64>(), da in 0u32..=6, db in 0u32..=6) {
        let (a, b) = (element(s, da, 3), element(s ^ 0xabc, db, 3));
        prop_assert_eq!(a.mul(&b), reorder_oracle(&a, &b));
    }

    #[test]
    fn associativity(s in any::<u64>(), d in 0u32..=4) {
        let (a, b, c) = (element(s, d, 2), element(s + 1, d, 2), element(s + 2, d, 2));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributivity(s in any::<u64>(), d in 0u32..=4) {
        let (a, b, c) = (element(s, d, 2), element(s + 1, d, 2), element(s + 2, d, 2));
        prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
    }

    #[test]
    fn unit_is_neutral(s in any::<u64>(), d in 0u32..=5) {
        let a = element(s, d, 3);
        prop_assert_eq!(Element::unit().mul(&a), a.clone());
        prop_assert_eq!(a.mul(&Element::unit()), a);
    }

    #[test]
    fn brackets_have_no_supertrace(s in any::<u64>(), d in 0u32..=3) {
        let (a, b) = (element(s, d, 2), element(s + 7, d, 2));
        prop_assert!(str_eval(&superbracket(&a, &b)).unwrap().is_zero());
    }

    #[test]
    fn singlet_projection_is_idempotent_and_invariant(s in any::<u64>(), d in 0u32..=4) {
        let p = singlet_project(&element(s, d, 3));
        prop_assert!(is_singlet(&p));
        prop_assert_eq!(singlet_project(&p), p.clone());
        for (a, b) in [(0, 0), (0, 1), (1, 1)] {
            prop_assert!(superbracket(&t(a, b), &p).is_zero());
        }
    }

    #[test]
    fn both_singlet_routes_agree(s in any::<u64>(), d in 0u32..=4) {
        let f = element(s, d, 3);
        prop_assert_eq!(casimir_singlet(&f), singlet_project(&f));
    }

    #[test]
    fn printed_elements_parse_back(s in any::<u64>(), d in 0u32..=5) {
        let f = element(s, d, 4);
        prop_assert_eq!(parse_element(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn commutant_projection_kills_supertraces(s in any::<u64>(), d in 0u32..=3) {
        let f = project_to_commutant(&element(s, d, 3)).unwrap();
        prop_assert!(str_eval(&f).unwrap().is_zero());
    }

    #[test]
    fn parallel_and_sequential_agree(s in any::<u64>()) {
        let items: Vec<Element> = (0..8).map(|k| element(s + k, 3, 2)).collect();
        let sq = |e: &Element| e.mul(e);
        prop_assert_eq!(Exec::Parallel.map(&items, sq), Exec::Sequential.map(&items, sq));
    }
}

#[test]
fn parser_examples() {
    assert_eq!(parse_element("x*yp - yp*x").unwrap(), Element::scalar(CycNum::from_int(3)));
    assert_eq!(parse_element("1/2*(xp*y - yp*x)").unwrap(), sh3_core::algebra::m());
    assert!(parse_element("Q1*Q2").unwrap().is_zero());
    assert_eq!(parse_element("w^3").unwrap(), Element::unit());
    let err = parse_element("x +* y").unwrap_err().to_string();
    assert!(err.contains("column 4"), "{err}");
}
