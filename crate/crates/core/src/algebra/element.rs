use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::CycNum;
use crate::group::{GroupAlgebraElem, GroupBasisElem};
use crate::rational::Rational;

use super::monomial::{Monomial, Osc};
use super::product::mul_monomials;

/// Finite linear combination of basis monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, CycNum>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, CycNum::ONE)
    }

    pub fn term(m: Monomial, c: CycNum) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    /// A scalar multiple of the unit Q₀ + Q₁ + Q₂.
    pub fn scalar(c: CycNum) -> Self {
        Self::osc_times_unit(Osc::ONE, c)
    }

    pub fn unit() -> Self {
        Self::scalar(CycNum::ONE)
    }

    pub fn group(e: GroupBasisElem) -> Self {
        Self::monomial(Monomial::new(Osc::ONE, e))
    }

    pub fn from_group_algebra(g: &GroupAlgebraElem) -> Self {
        let mut e = Self::zero();
        for (b, c) in g.terms() {
            e.add_term(Monomial::new(Osc::ONE, b), c.clone());
        }
        e
    }

    /// `c · w · (Q₀ + Q₁ + Q₂)`.
    pub fn osc_times_unit(osc: Osc, c: CycNum) -> Self {
        let mut e = Self::zero();
        for i in 0..3 {
            e.add_term(Monomial::new(osc, GroupBasisElem::q(i)), c.clone());
        }
        e
    }

    pub fn x() -> Self {
        Self::osc_times_unit(Osc::new(0, 0, 1, 0), CycNum::ONE)
    }

    pub fn y() -> Self {
        Self::osc_times_unit(Osc::new(0, 0, 0, 1), CycNum::ONE)
    }

    pub fn xp() -> Self {
        Self::osc_times_unit(Osc::new(1, 0, 0, 0), CycNum::ONE)
    }

    pub fn yp() -> Self {
        Self::osc_times_unit(Osc::new(0, 1, 0, 0), CycNum::ONE)
    }

    /// x^α for α ∈ {0, 1} (x⁰ = x, x¹ = x⁺).
    pub fn x_alpha(alpha: u8) -> Self {
        if alpha == 0 {
            Self::x()
        } else {
            Self::xp()
        }
    }

    /// y^α for α ∈ {0, 1}.
    pub fn y_alpha(alpha: u8) -> Self {
        if alpha == 0 {
            Self::y()
        } else {
            Self::yp()
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNum)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, CycNum)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> CycNum {
        self.terms.get(m).cloned().unwrap_or(CycNum::ZERO)
    }

    /// Maximal total degree over the terms (0 for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CycNum::from_rational(r.clone()))
    }

    /// Keeps only the terms accepted by the predicate.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        Element { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Even and odd parts.
    pub fn split_parity(&self) -> (Element, Element) {
        (self.filter(|m| m.parity() == 0), self.filter(|m| m.parity() == 1))
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let cab = ca * cb;
                for (m, w) in mul_monomials(ma, mb) {
                    out.add_term(m, cab.scale(&w));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::unit();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Right factor restricted to one group element: the part of `self`
    /// whose group element is `e`.
    pub fn group_part(&self, e: GroupBasisElem) -> Element {
        self.filter(|m| m.group == e)
    }
}

impl FromIterator<(Monomial, CycNum)> for Element {
    fn from_iter<I: IntoIterator<Item = (Monomial, CycNum)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        Element::mul(self, rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Element> for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &'a Element) -> Element { (&self).$m(rhs) }
        }
        impl<'a> $tr<Element> for &'a Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Sorted sum in degree-lexicographic order, e.g. `3*Q0 + y*Q1 - 1/2*xp*y*L2`.
/// Coefficients with an ω part are parenthesised: `(1 + 2*w)*x*Q0`, `(1*w)*y*L1`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let first = i == 0;
            if c.is_rational() {
                let r = &c.one;
                let neg = r.is_negative();
                let abs = r.abs();
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                if abs.is_one() {
                    write!(f, "{m}")?;
                } else {
                    write!(f, "{abs}*{m}")?;
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_times_yp_contracts_to_unit() {
        let lhs = Element::x().mul(&Element::yp());
        let rhs = &Element::yp().mul(&Element::x()) + &Element::scalar(CycNum::from_int(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn l0_times_x() {
        let lhs = Element::group(GroupBasisElem::l(0)).mul(&Element::x());
        let rhs = Element::y().mul(&Element::group(GroupBasisElem::l(1)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "y*L1");
    }

    #[test]
    fn display_signs_and_omega() {
        let mut e = Element::zero();
        e.add_term(Monomial::new(Osc::new(0, 0, 1, 0), GroupBasisElem::q(0)), CycNum::frac(-3, 2));
        e.add_term(Monomial::new(Osc::ONE, GroupBasisElem::l(2)), CycNum::ONE);
        e.add_term(Monomial::new(Osc::new(1, 0, 0, 1), GroupBasisElem::q(1)), CycNum::omega());
        assert_eq!(e.to_string(), "L2 - 3/2*x*Q0 + (1*w)*xp*y*Q1");
        assert_eq!(Element::zero().to_string(), "0");
    }

    #[test]
    fn unit_is_neutral() {
        let e = Element::x().mul(&Element::group(GroupBasisElem::l(2)));
        assert_eq!(Element::unit().mul(&e), e);
        assert_eq!(e.mul(&Element::unit()), e);
    }
}
