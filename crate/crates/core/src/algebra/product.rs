//! Normal-ordered multiplication.
//!
//! A product of basis words is computed in three stages: the left group
//! element is transported through the right word, the two group elements are
//! merged, and the oscillator letters are reordered with the closed
//! contraction formula
//!
//! ```text
//! x^a y^c (x⁺)^b (y⁺)^d = Σ_{k,l} 3^(k+l) k! l! C(a,k) C(d,k) C(c,l) C(b,l)
//!                             (x⁺)^(b−l) (y⁺)^(d−k) x^(a−k) y^(c−l)
//! ```
//!
//! which is exact because [x, y⁺] = [y, x⁺] = 3 are the only nonzero
//! commutators among the four letters.

use crate::group::{mul_basis, GroupBasisElem, GroupKind};
use crate::rational::Rational;

use super::monomial::{Monomial, Osc};

/// Coefficients k!·C(a,k)·C(d,k)·3^k for k = 0..=min(a,d).
fn contraction_weights(a: u32, d: u32) -> Vec<Rational> {
    let top = a.min(d);
    let mut out = Vec::with_capacity(top as usize + 1);
    let mut c = Rational::ONE;
    out.push(c.clone());
    for k in 0..top {
        let num = (a - k) as i64 * (d - k) as i64 * 3;
        c = &c * &Rational::new(num, (k + 1) as i64);
        out.push(c.clone());
    }
    out
}

/// Product of two normal-ordered oscillator words (no group elements).
pub fn weyl_product(left: Osc, right: Osc) -> Vec<(Osc, Rational)> {
    // x^left.x against (y⁺)^right.yp, y^left.y against (x⁺)^right.xp.
    let wk = contraction_weights(left.x, right.yp);
    let wl = contraction_weights(left.y, right.xp);
    let mut out = Vec::with_capacity(wk.len() * wl.len());
    for (k, ck) in wk.iter().enumerate() {
        let k = k as u32;
        for (l, cl) in wl.iter().enumerate() {
            let l = l as u32;
            let osc = Osc {
                xp: left.xp + right.xp - l,
                yp: left.yp + right.yp - k,
                x: left.x - k + right.x,
                y: left.y - l + right.y,
            };
            out.push((osc, ck * cl));
        }
    }
    out
}

/// Moves a group element rightwards through a word: `E · w = w' · E'`.
///
/// Q_i keeps the letters and shifts its index by +1 per x-type letter and −1
/// per y-type letter; L_i does the same to its index and also swaps x ↔ y.
pub fn transport(group: GroupBasisElem, osc: Osc) -> (Osc, GroupBasisElem) {
    let shifted = group.shifted(osc.xy_balance());
    match group.kind {
        GroupKind::Q => (osc, shifted),
        GroupKind::L => (osc.swapped(), shifted),
    }
}

/// Product of two basis monomials as a list of terms with rational weights.
pub fn mul_monomials(left: &Monomial, right: &Monomial) -> Vec<(Monomial, Rational)> {
    let (moved, passed) = transport(left.group, right.osc);
    let Some(group) = mul_basis(passed, right.group) else {
        return Vec::new();
    };
    weyl_product(left.osc, moved)
        .into_iter()
        .map(|(osc, c)| (Monomial::new(osc, group), c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_contraction() {
        // x · y⁺ = y⁺ x + 3
        let terms = weyl_product(Osc::new(0, 0, 1, 0), Osc::new(0, 1, 0, 0));
        assert_eq!(
            terms,
            vec![(Osc::new(0, 1, 1, 0), Rational::ONE), (Osc::ONE, Rational::from_int(3))]
        );
    }

    #[test]
    fn double_contraction_weights() {
        // x² (y⁺)² = (y⁺)² x² + 12 y⁺ x + 18
        let terms = weyl_product(Osc::new(0, 0, 2, 0), Osc::new(0, 2, 0, 0));
        let weights: Vec<_> = terms.iter().map(|(_, c)| c.clone()).collect();
        assert_eq!(weights, vec![Rational::ONE, Rational::from_int(12), Rational::from_int(18)]);
    }

    #[test]
    fn l_transport_swaps_letters() {
        let (w, g) = transport(GroupBasisElem::l(0), Osc::new(0, 0, 1, 0));
        assert_eq!((w, g), (Osc::new(0, 0, 0, 1), GroupBasisElem::l(1)));
        let (w, g) = transport(GroupBasisElem::q(2), Osc::new(0, 1, 0, 0));
        assert_eq!((w, g), (Osc::new(0, 1, 0, 0), GroupBasisElem::q(1)));
    }
}
