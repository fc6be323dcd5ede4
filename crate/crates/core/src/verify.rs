//! Named relation suites, each check an exact identity between elements.

use serde::Serialize;

use crate::algebra::{commutator, epsilon, m, reorder_oracle, superbracket, t, Element};
use crate::cyclotomic::CycNum;
use crate::dunkl::{abstract_embedding_report, exchange_relations, hamiltonian_report, DunklReport, RelationCheck};
use crate::error::Result;
use crate::group::{perm_to_lq, GroupBasisElem, Perm};
use crate::par::Exec;
use crate::random::{random_element, rng};
use crate::rational::Rational;
use crate::sl2::{is_singlet, SlGenerator};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<RelationCheck>,
    pub passed: bool,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<RelationCheck>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport { suite: suite.into(), checks, passed }
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.relation.as_str()).collect()
    }
}

fn rel(name: impl Into<String>, lhs: &Element, rhs: &Element) -> RelationCheck {
    RelationCheck { relation: name.into(), passed: lhs == rhs }
}

fn delta(i: i64) -> bool {
    i.rem_euclid(3) == 0
}

fn scalar(c: CycNum) -> Element {
    Element::scalar(c)
}

/// Group-algebra products, transport through letters, the oscillator
/// commutators, the brackets with m, and random normal-ordering cross-checks
/// on elements of degree ≤ `max_degree`.
pub fn core_suite(max_degree: u32, exec: Exec) -> SuiteReport {
    let q = |i: i64| Element::group(GroupBasisElem::q(i));
    let l = |i: i64| Element::group(GroupBasisElem::l(i));
    let pick = |ok: bool, e: Element| if ok { e } else { Element::zero() };
    let mut checks = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            checks.push(rel(format!("L{i}*L{j}"), &l(i).mul(&l(j)), &pick(delta(i + j), q(j))));
            checks.push(rel(format!("L{i}*Q{j}"), &l(i).mul(&q(j)), &pick(delta(i - j), l(j))));
            checks.push(rel(format!("Q{i}*L{j}"), &q(i).mul(&l(j)), &pick(delta(i + j), l(j))));
            checks.push(rel(format!("Q{i}*Q{j}"), &q(i).mul(&q(j)), &pick(delta(i - j), q(j))));
        }
    }
    let mm = m();
    for i in 0..3 {
        for a in 0..2u8 {
            let (x, y) = (Element::x_alpha(a), Element::y_alpha(a));
            checks.push(rel(format!("L{i}*x^{a} = y^{a}*L{}", i + 1), &l(i).mul(&x), &y.mul(&l(i + 1))));
            checks.push(rel(format!("L{i}*y^{a} = x^{a}*L{}", i - 1), &l(i).mul(&y), &x.mul(&l(i - 1))));
            checks.push(rel(format!("Q{i}*x^{a} = x^{a}*Q{}", i + 1), &q(i).mul(&x), &x.mul(&q(i + 1))));
            checks.push(rel(format!("Q{i}*y^{a} = y^{a}*Q{}", i - 1), &q(i).mul(&y), &y.mul(&q(i - 1))));
        }
        checks.push(rel(format!("L{i}*m = -m*L{i}"), &l(i).mul(&mm), &(-mm.mul(&l(i)))));
        checks.push(rel(format!("Q{i}*m = m*Q{i}"), &q(i).mul(&mm), &mm.mul(&q(i))));
    }
    let (x, y, xp, yp) = (Element::x(), Element::y(), Element::xp(), Element::yp());
    let three = scalar(CycNum::from_int(3));
    let zero = Element::zero();
    checks.push(rel("[x, xp] = 0", &commutator(&x, &xp), &zero));
    checks.push(rel("[y, yp] = 0", &commutator(&y, &yp), &zero));
    checks.push(rel("[y, xp] = 3", &commutator(&y, &xp), &three));
    checks.push(rel("[x, yp] = 3", &commutator(&x, &yp), &three));
    checks.push(rel("[x, y] = 0", &commutator(&x, &y), &zero));
    checks.push(rel("[xp, yp] = 0", &commutator(&xp, &yp), &zero));
    for a in 0..2u8 {
        let (xa, ya) = (Element::x_alpha(a), Element::y_alpha(a));
        checks.push(rel(format!("[m, x^{a}] = 3/2 x^{a}"), &commutator(&mm, &xa), &xa.scale(&CycNum::frac(3, 2))));
        checks.push(rel(format!("[m, y^{a}] = -3/2 y^{a}"), &commutator(&mm, &ya), &ya.scale(&CycNum::frac(-3, 2))));
    }
    // m = ½(x^α y_α + 3) = ½(y_α x^α − 3) with y_0 = −y⁺, y_1 = y
    let contracted = |first_x: bool| {
        let lowered = [(-(yp.clone()), x.clone()), (y.clone(), xp.clone())];
        lowered.iter().fold(Element::zero(), |acc, (yl, xu)| {
            acc + if first_x { xu.mul(yl) } else { yl.mul(xu) }
        })
    };
    let half = CycNum::frac(1, 2);
    checks.push(rel("m = (x^a y_a + 3)/2", &mm, &(contracted(true) + three.clone()).scale(&half)));
    checks.push(rel("m = (y_a x^a - 3)/2", &mm, &(contracted(false) - three).scale(&half)));

    let mut g = rng(0x5eed);
    let pairs: Vec<(Element, Element, Element)> = (0..40)
        .map(|_| {
            let d = max_degree.max(1);
            (random_element(&mut g, d, 3), random_element(&mut g, d, 3), random_element(&mut g, d.min(3), 2))
        })
        .collect();
    let results = exec.map(&pairs, |(a, b, c)| {
        (a.mul(b) == reorder_oracle(a, b), a.mul(b).mul(c) == a.mul(&b.mul(c)))
    });
    for (k, (ordered, assoc)) in results.into_iter().enumerate() {
        checks.push(RelationCheck { relation: format!("normal ordering vs rewriting, pair {k}"), passed: ordered });
        checks.push(RelationCheck { relation: format!("associativity, triple {k}"), passed: assoc });
    }
    SuiteReport::new("core", checks)
}

/// The sl₂ commutation relations, the action on the letters, and invariance
/// of m and the group algebra.
pub fn sl2_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let e = |a: u8, b: u8| CycNum::from_int(epsilon(a, b));
    for a in 0..2u8 {
        for b in 0..2u8 {
            let tab = t(a, b);
            for c in 0..2u8 {
                for d in 0..2u8 {
                    let rhs = t(b, d).scale(&e(a, c)) + t(b, c).scale(&e(a, d)) + t(a, d).scale(&e(b, c))
                        + t(a, c).scale(&e(b, d));
                    checks.push(rel(format!("[T{a}{b}, T{c}{d}]"), &commutator(&tab, &t(c, d)), &rhs));
                }
                let (xc, yc) = (Element::x_alpha(c), Element::y_alpha(c));
                let rx = Element::x_alpha(b).scale(&e(a, c)) + Element::x_alpha(a).scale(&e(b, c));
                let ry = Element::y_alpha(b).scale(&e(a, c)) + Element::y_alpha(a).scale(&e(b, c));
                checks.push(rel(format!("[T{a}{b}, x^{c}]"), &commutator(&tab, &xc), &rx));
                checks.push(rel(format!("[T{a}{b}, y^{c}]"), &commutator(&tab, &yc), &ry));
            }
        }
    }
    for g in SlGenerator::ALL {
        for p in [Perm::K12, Perm::K13, Perm::K23] {
            let k = Element::from_group_algebra(&perm_to_lq(p));
            checks.push(rel(format!("[{}, {}] = 0", g.name(), p.name()), &superbracket(&g.element(), &k), &Element::zero()));
        }
    }
    checks.push(RelationCheck { relation: "m is a singlet".into(), passed: is_singlet(&m()) });
    SuiteReport::new("sl2", checks)
}

/// Exchange relations and Hamiltonian brackets for each ν, and the ν = 0
/// embedding of the abstract algebra.
pub fn dunkl_suite(nus: &[Rational], input_cap: u32, exec: Exec) -> Result<Vec<DunklReport>> {
    let mut out = Vec::new();
    for nu in nus {
        out.push(exchange_relations(nu, input_cap, exec)?);
        out.push(hamiltonian_report(nu, input_cap.max(2), exec)?);
    }
    out.push(abstract_embedding_report(input_cap.max(3), exec)?);
    Ok(out)
}

/// Flattens Dunkl reports into a suite report.
pub fn dunkl_suite_report(reports: &[DunklReport]) -> SuiteReport {
    let checks = reports
        .iter()
        .flat_map(|r| {
            r.relations.iter().map(move |c| RelationCheck {
                relation: format!("{} (nu = {}): {}", r.check, r.nu, c.relation),
                passed: c.passed,
            })
        })
        .collect();
    SuiteReport::new("dunkl", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebraic_suites_pass() {
        let core = core_suite(4, Exec::default());
        assert!(core.passed, "{:?}", core.failures());
        let sl2 = sl2_suite();
        assert!(sl2.passed, "{:?}", sl2.failures());
    }
}
