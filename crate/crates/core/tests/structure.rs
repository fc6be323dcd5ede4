use sh3_core::algebra::{m, Element};
use sh3_core::cyclotomic::CycNum;
use sh3_core::group::GroupBasisElem;
use sh3_core::par::Exec;
use sh3_core::random::{random_element, rng};
use sh3_core::structure::{
    center_basis, commutant_slice, lie_ideal_experiment, replay_certificate, simplicity_certificate, StepOp,
    SimplicityCertificate,
};
use sh3_core::supertrace::{gram, gram_up_to_degree, GramParams};

#[test]
fn center_is_scalar_in_low_degree() {
    for cap in [2, 4] {
        assert_eq!(center_basis(cap, Exec::default()), vec![Element::unit()]);
    }
}

#[test]
fn sequential_and_parallel_commutant_agree() {
    let a = commutant_slice(3, 7, Exec::Sequential);
    let b = commutant_slice(3, 7, Exec::Parallel);
    assert_eq!(a, b);
    assert_eq!(a.codimension, 2);
}

#[test]
fn raising_the_source_cap_never_loses_dimension() {
    let s = commutant_slice(2, 2, Exec::default());
    assert!(s.dimension <= s.dimension_next);
}

#[test]
fn gram_on_unit_and_q1_is_nondegenerate() {
    let basis = [Element::unit(), Element::group(GroupBasisElem::q(1))];
    let r = gram(&basis, &GramParams::Symbolic, Exec::default()).unwrap();
    assert_eq!(r.rank, 2);
}

#[test]
fn gram_is_degenerate_at_zero_parameters() {
    let r = gram_up_to_degree(1, &GramParams::Numeric(CycNum::ZERO, CycNum::ZERO), Exec::default()).unwrap();
    assert_eq!(r.rank, 0);
}

#[test]
fn certificates_round_trip_through_json() {
    let seed = random_element(&mut rng(5), 2, 3);
    let cert = simplicity_certificate(&seed, 9).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    let back: SimplicityCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    assert!(replay_certificate(&back).unwrap().final_is_unit);
}

#[test]
fn certificates_are_deterministic() {
    let seed = m().mul(&Element::group(GroupBasisElem::q(0)));
    assert_eq!(simplicity_certificate(&seed, 3).unwrap(), simplicity_certificate(&seed, 3).unwrap());
}

#[test]
fn tampered_step_fails_replay() {
    let mut cert = simplicity_certificate(&Element::x(), 0).unwrap();
    let k = cert.steps.iter().position(|s| matches!(s.op, StepOp::Singlet { .. })).unwrap();
    cert.steps[k].output = cert.steps[k].output.scale(&CycNum::from_int(2));
    assert!(replay_certificate(&cert).is_err());
}

#[test]
fn zero_has_no_certificate() {
    assert!(simplicity_certificate(&Element::zero(), 0).is_err());
}

#[test]
fn lie_closure_of_a_degree_one_element() {
    let r = lie_ideal_experiment(&Element::y(), 2, 4, Exec::default()).unwrap();
    assert!(r.contains_degree_one);
    assert_eq!(r.filtered_dims.len(), 3);
}
