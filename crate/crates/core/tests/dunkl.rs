use sh3_core::algebra::Element;
use sh3_core::cyclotomic::CycNum;
use sh3_core::dunkl::{
    abstract_embedding_check, apply_dunkl, division_exactness, exchange_relations, hamiltonian_check, operator_equal,
    realize, Poly, PolyOperator, TruncPolySpace,
};
use sh3_core::par::Exec;
use sh3_core::rational::Rational;

fn nus() -> [Rational; 4] {
    [Rational::from_int(0), Rational::new(1, 3), Rational::new(1, 2), Rational::from_int(1)]
}

#[test]
fn exchange_relations_for_each_coupling() {
    for nu in nus() {
        let r = exchange_relations(&nu, 4, Exec::default()).unwrap();
        assert!(r.passed, "nu = {nu}: {:?}", r.relations.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    }
}

#[test]
fn hamiltonian_for_each_coupling() {
    for nu in nus() {
        let r = hamiltonian_check(&nu, 4, Exec::default()).unwrap();
        assert_eq!(r.h_of_one.as_deref(), Some("1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2"));
    }
}

#[test]
fn divisions_are_exact() {
    assert!(division_exactness(&TruncPolySpace::new(5)));
}

#[test]
fn dunkl_operators_commute() {
    let nu = Rational::new(1, 3);
    let p = Poly::var(1).mul_var(2).mul_var(2).add(&Poly::var(3).mul_var(3).mul_var(1));
    let d01 = apply_dunkl(1, &nu, &apply_dunkl(2, &nu, &p).unwrap()).unwrap();
    let d10 = apply_dunkl(2, &nu, &apply_dunkl(1, &nu, &p).unwrap()).unwrap();
    assert_eq!(d01, d10);
}

#[test]
fn embedding_holds_at_zero_coupling() {
    abstract_embedding_check(3, Exec::default()).unwrap();
}

#[test]
fn embedding_separates_distinct_elements() {
    let space = TruncPolySpace::new(3);
    let a = realize(&Element::x().mul(&Element::yp()), 2);
    let b = realize(&Element::yp().mul(&Element::x()), 2);
    assert!(!operator_equal(&a, &b, &space, Exec::default()).unwrap());
    let wrong = realize(&Element::unit().scale(&CycNum::from_int(2)), 2);
    let bracket = realize(&Element::x(), 1).commutator(&realize(&Element::yp(), 1));
    assert!(!operator_equal(&bracket, &wrong, &space, Exec::default()).unwrap());
    assert!(!operator_equal(&bracket, &PolyOperator::zero(), &space, Exec::default()).unwrap());
}
