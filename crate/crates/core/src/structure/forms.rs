use serde::Serialize;

use crate::algebra::Element;
use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::group::GroupBasisElem;
use crate::rational::Rational;
use crate::supertrace::{str_eval, StrValue};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormIndependenceReport {
    /// B(x, y⁺) − B(y⁺, x).
    pub first: StrValue,
    /// B(x, y⁺Q₁) − B(y⁺, xQ₁).
    pub second: StrValue,
    pub determinant: CycNum,
    /// Both values vanishing forces S₁ = S₂ = 0.
    pub only_trivial_solution: bool,
}

fn b(f: &Element, g: &Element) -> Result<StrValue> {
    str_eval(&f.mul(g))
}

/// Two values of B(f, g) = str(fg) on brackets, as linear forms in (S₁, S₂);
/// a nonzero determinant means distinct parameters give distinct forms on the commutant.
pub fn form_independence_on_commutant() -> Result<FormIndependenceReport> {
    let (x, yp) = (Element::x(), Element::yp());
    let q1 = Element::group(GroupBasisElem::q(1));
    let first = b(&x, &yp)? - b(&yp, &x)?;
    let second = b(&x, &yp.mul(&q1))? - b(&yp, &x.mul(&q1))?;
    let determinant = &(&first.s1_coef * &second.s2_coef) - &(&first.s2_coef * &second.s1_coef);
    if determinant.is_zero() {
        return Err(Sh3Error::IdentityViolated(format!(
            "the forms {first} and {second} are linearly dependent on the commutant"
        )));
    }
    Ok(FormIndependenceReport { first, second, determinant, only_trivial_solution: true })
}

/// f − α·1 − β·Q₁ with α, β chosen so that every supertrace vanishes.
///
/// Uses str(1) = −S₁/6 + S₂/4 and str(Q₁) = S₁/6 + S₂/4.
pub fn project_to_commutant(f: &Element) -> Result<Element> {
    let v = str_eval(f)?;
    let (u, w) = (&v.s1_coef, &v.s2_coef);
    let three_u = u.scale(&Rational::from_int(3));
    let two_w = w.scale(&Rational::from_int(2));
    let alpha = &two_w - &three_u;
    let beta = &two_w + &three_u;
    let q1 = Element::group(GroupBasisElem::q(1));
    Ok(f - &(&Element::scalar(alpha) + &q1.scale(&beta)))
}
