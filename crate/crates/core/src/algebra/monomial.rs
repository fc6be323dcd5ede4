use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::{GroupBasisElem, GroupKind};

/// Exponents of the normal-ordered oscillator word (x⁺)^xp (y⁺)^yp x^x y^y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Osc {
    pub xp: u32,
    pub yp: u32,
    pub x: u32,
    pub y: u32,
}

impl Osc {
    pub const ONE: Osc = Osc { xp: 0, yp: 0, x: 0, y: 0 };

    pub fn new(xp: u32, yp: u32, x: u32, y: u32) -> Self {
        Osc { xp, yp, x, y }
    }

    pub fn degree(self) -> u32 {
        self.xp + self.yp + self.x + self.y
    }

    /// Number of x-type letters minus number of y-type letters.
    pub fn xy_balance(self) -> i64 {
        (self.x + self.xp) as i64 - (self.y + self.yp) as i64
    }

    /// Weight under ad T⁰¹: creations minus annihilations.
    pub fn sl2_weight(self) -> i64 {
        (self.xp + self.yp) as i64 - (self.x + self.y) as i64
    }

    /// x ↔ y and x⁺ ↔ y⁺ (the effect of moving an L through the word).
    pub fn swapped(self) -> Osc {
        Osc { xp: self.yp, yp: self.xp, x: self.y, y: self.x }
    }

    fn key(self) -> (u32, u32, u32, u32, u32) {
        (self.degree(), self.xp, self.yp, self.x, self.y)
    }

    /// All exponent tuples of total degree exactly `n`, in canonical order.
    pub fn of_degree(n: u32) -> Vec<Osc> {
        let mut out = Vec::new();
        for xp in (0..=n).rev() {
            for yp in (0..=n - xp).rev() {
                for x in (0..=n - xp - yp).rev() {
                    out.push(Osc::new(xp, yp, x, n - xp - yp - x));
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for Osc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Osc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Basis word (x⁺)^xp (y⁺)^yp x^x y^y · E with the group element rightmost.
///
/// Ordered degree-lexicographically: total degree, then the exponents of
/// x⁺, y⁺, x, y, then the group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub osc: Osc,
    pub group: GroupBasisElem,
}

impl Monomial {
    pub fn new(osc: Osc, group: GroupBasisElem) -> Self {
        Monomial { osc, group }
    }

    pub fn degree(&self) -> u32 {
        self.osc.degree()
    }

    /// ℤ₂ parity: 1 for odd words.
    pub fn parity(&self) -> u8 {
        (self.degree() % 2) as u8
    }

    /// ℤ₃ grade: (#x-type − #y-type + grade of the group element) mod 3.
    pub fn rho(&self) -> u8 {
        (self.osc.xy_balance() + self.group.rho() as i64).rem_euclid(3) as u8
    }

    /// All basis monomials with total degree `n`.
    pub fn of_degree(n: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for osc in Osc::of_degree(n) {
            for g in GroupBasisElem::ALL {
                out.push(Monomial::new(osc, g));
            }
        }
        out
    }

    /// All basis monomials with total degree ≤ `n`, in canonical order.
    pub fn up_to_degree(n: u32) -> Vec<Monomial> {
        (0..=n).flat_map(Monomial::of_degree).collect()
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, sym: &str, e: u32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{sym}")
    } else {
        write!(f, "{sym}^{e}")
    }
}

/// Canonical text `xp^b*yp^d*x^a*y^c*E`; zero exponents omitted, `^1` dropped.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_power(f, "xp", self.osc.xp, &mut first)?;
        write_power(f, "yp", self.osc.yp, &mut first)?;
        write_power(f, "x", self.osc.x, &mut first)?;
        write_power(f, "y", self.osc.y, &mut first)?;
        if !first {
            write!(f, "*")?;
        }
        let k = match self.group.kind {
            GroupKind::Q => 'Q',
            GroupKind::L => 'L',
        };
        write!(f, "{k}{}", self.group.index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slice_sizes() {
        assert_eq!(Osc::of_degree(0).len(), 1);
        assert_eq!(Osc::of_degree(1).len(), 4);
        assert_eq!(Osc::of_degree(2).len(), 10);
        assert_eq!(Monomial::of_degree(1).len(), 24);
        assert_eq!(Monomial::up_to_degree(2).len(), 90);
    }

    #[test]
    fn canonical_text() {
        let m = Monomial::new(Osc::new(2, 0, 1, 3), GroupBasisElem::l(1));
        assert_eq!(m.to_string(), "xp^2*x*y^3*L1");
        assert_eq!(Monomial::new(Osc::ONE, GroupBasisElem::q(0)).to_string(), "Q0");
    }

    #[test]
    fn gradings_of_letters() {
        let x = Monomial::new(Osc::new(0, 0, 1, 0), GroupBasisElem::q(0));
        assert_eq!((x.parity(), x.rho()), (1, 1));
        let l1 = Monomial::new(Osc::ONE, GroupBasisElem::l(1));
        assert_eq!(l1.rho(), 2);
    }

    #[test]
    fn order_is_degree_first() {
        let lo = Monomial::new(Osc::new(0, 0, 0, 2), GroupBasisElem::l(2));
        let hi = Monomial::new(Osc::new(0, 0, 0, 3), GroupBasisElem::q(0));
        assert!(lo < hi);
    }
}
