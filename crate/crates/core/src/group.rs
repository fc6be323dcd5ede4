//! The group algebra ℂ[S₃] in the idempotent basis {Q₀,Q₁,Q₂,L₀,L₁,L₂}.
//!
//! With ω = exp(2πi/3):
//!
//! ```text
//! L_k = (ω^k K12 + K23 + ω^-k K13) / 3
//! Q_k = (1 + ω^k K12K13 + ω^-k K12K23) / 3
//! ```
//!
//! Products of basis elements are again basis elements or zero, which is why
//! the Q/L basis is the working representation. The permutation basis exists
//! for input/output and for cross-checking the product table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::error::Sh3Error;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    Q,
    L,
}

/// One of Q₀, Q₁, Q₂, L₀, L₁, L₂; ordered Q before L, then by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupBasisElem {
    pub kind: GroupKind,
    index: u8,
}

fn m3(i: i64) -> u8 {
    i.rem_euclid(3) as u8
}

impl GroupBasisElem {
    pub const ALL: [GroupBasisElem; 6] = [
        GroupBasisElem { kind: GroupKind::Q, index: 0 },
        GroupBasisElem { kind: GroupKind::Q, index: 1 },
        GroupBasisElem { kind: GroupKind::Q, index: 2 },
        GroupBasisElem { kind: GroupKind::L, index: 0 },
        GroupBasisElem { kind: GroupKind::L, index: 1 },
        GroupBasisElem { kind: GroupKind::L, index: 2 },
    ];

    pub fn q(i: i64) -> Self {
        GroupBasisElem { kind: GroupKind::Q, index: m3(i) }
    }

    pub fn l(i: i64) -> Self {
        GroupBasisElem { kind: GroupKind::L, index: m3(i) }
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn is_q(self) -> bool {
        self.kind == GroupKind::Q
    }

    /// Position in [`GroupBasisElem::ALL`].
    pub fn slot(self) -> usize {
        match self.kind {
            GroupKind::Q => self.index as usize,
            GroupKind::L => 3 + self.index as usize,
        }
    }

    /// Same kind, index shifted by `by` (mod 3).
    pub fn shifted(self, by: i64) -> Self {
        GroupBasisElem { kind: self.kind, index: m3(self.index as i64 + by) }
    }

    /// ℤ₃ grade: 0 for Q's, −i for L_i.
    pub fn rho(self) -> u8 {
        match self.kind {
            GroupKind::Q => 0,
            GroupKind::L => m3(-(self.index as i64)),
        }
    }
}

impl fmt::Display for GroupBasisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GroupKind::Q => 'Q',
            GroupKind::L => 'L',
        };
        write!(f, "{k}{}", self.index)
    }
}

impl FromStr for GroupBasisElem {
    type Err = Sh3Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupBasisElem::ALL
            .into_iter()
            .find(|e| e.to_string() == s)
            .ok_or_else(|| Sh3Error::InvalidInput(format!("unknown group basis element {s:?}")))
    }
}

fn delta(i: i64) -> bool {
    i.rem_euclid(3) == 0
}

/// Product of two basis elements: a basis element with coefficient 1, or zero.
pub fn mul_basis(a: GroupBasisElem, b: GroupBasisElem) -> Option<GroupBasisElem> {
    let (i, j) = (a.index as i64, b.index as i64);
    use GroupKind::*;
    let keep = match (a.kind, b.kind) {
        (L, L) => delta(i + j),
        (L, Q) => delta(i - j),
        (Q, L) => delta(i + j),
        (Q, Q) => delta(i - j),
    };
    if !keep {
        return None;
    }
    Some(match (a.kind, b.kind) {
        (L, L) => GroupBasisElem::q(j),
        (L, Q) | (Q, L) => GroupBasisElem::l(j),
        (Q, Q) => GroupBasisElem::q(j),
    })
}

/// The group part of the antiautomorphism: L_i ↦ L_{−i}, Q_i ↦ Q_i.
pub fn tau_group(e: GroupBasisElem) -> GroupBasisElem {
    match e.kind {
        GroupKind::Q => e,
        GroupKind::L => GroupBasisElem::l(-(e.index as i64)),
    }
}

/// A general element of ℂ[S₃] in the Q/L basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupAlgebraElem {
    pub coeffs: [CycNum; 6],
}

impl GroupAlgebraElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(e: GroupBasisElem) -> Self {
        let mut g = Self::zero();
        g.coeffs[e.slot()] = CycNum::ONE;
        g
    }

    pub fn unit() -> Self {
        let mut g = Self::zero();
        for i in 0..3 {
            g.coeffs[i] = CycNum::ONE;
        }
        g
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for (a, b) in g.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        g
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        GroupAlgebraElem { coeffs: std::array::from_fn(|i| &self.coeffs[i] * s) }
    }

    pub fn terms(&self) -> impl Iterator<Item = (GroupBasisElem, &CycNum)> {
        GroupBasisElem::ALL.into_iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }

    /// Bilinear extension of [`mul_basis`].
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some(e) = mul_basis(a, b) {
                    out.coeffs[e.slot()] += &(ca * cb);
                }
            }
        }
        out
    }

    /// Linear extension of [`tau_group`].
    pub fn tau(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.coeffs[tau_group(e).slot()] += c;
        }
        out
    }
}

/// Permutation basis labels, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Perm {
    Id,
    K12,
    K13,
    K23,
    K12K13,
    K12K23,
}

impl Perm {
    pub const ALL: [Perm; 6] = [Perm::Id, Perm::K12, Perm::K13, Perm::K23, Perm::K12K13, Perm::K12K23];

    pub fn name(self) -> &'static str {
        match self {
            Perm::Id => "id",
            Perm::K12 => "K12",
            Perm::K13 => "K13",
            Perm::K23 => "K23",
            Perm::K12K13 => "K12K13",
            Perm::K12K23 => "K12K23",
        }
    }

    /// The permutation as an index map `i ↦ g(i)` on {0,1,2}. Products are
    /// composition of operators: `(gh)(i) = g(h(i))`, so `K12K13` means K13 first.
    pub fn as_map(self) -> [usize; 3] {
        const K12: [usize; 3] = [1, 0, 2];
        const K13: [usize; 3] = [2, 1, 0];
        const K23: [usize; 3] = [0, 2, 1];
        match self {
            Perm::Id => [0, 1, 2],
            Perm::K12 => K12,
            Perm::K13 => K13,
            Perm::K23 => K23,
            Perm::K12K13 => compose(K12, K13),
            Perm::K12K23 => compose(K12, K23),
        }
    }

    pub fn from_map(map: [usize; 3]) -> Perm {
        Perm::ALL.into_iter().find(|p| p.as_map() == map).expect("S3 is closed")
    }
}

pub fn compose(g: [usize; 3], h: [usize; 3]) -> [usize; 3] {
    [g[h[0]], g[h[1]], g[h[2]]]
}

/// An element of ℂ[S₃] in the permutation basis (see [`Perm::ALL`] for order).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PermAlgebraElem {
    pub coeffs: [CycNum; 6],
}

impl PermAlgebraElem {
    pub fn basis(p: Perm) -> Self {
        let mut e = Self::default();
        e.coeffs[Perm::ALL.iter().position(|q| *q == p).unwrap()] = CycNum::ONE;
        e
    }

    /// Product by composing permutations.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = Perm::from_map(compose(Perm::ALL[i].as_map(), Perm::ALL[j].as_map()));
                let slot = Perm::ALL.iter().position(|q| *q == p).unwrap();
                out.coeffs[slot] += &(a * b);
            }
        }
        out
    }
}

fn third() -> Rational {
    Rational::new(1, 3)
}

/// Permutation basis → Q/L basis.
pub fn lq_from_k(p: &PermAlgebraElem) -> GroupAlgebraElem {
    let mut out = GroupAlgebraElem::zero();
    for (perm, c) in Perm::ALL.iter().zip(&p.coeffs) {
        if c.is_zero() {
            continue;
        }
        for k in 0..3i64 {
            let (e, w) = match perm {
                Perm::Id => (GroupBasisElem::q(k), CycNum::ONE),
                Perm::K12K13 => (GroupBasisElem::q(k), CycNum::omega_pow(-k)),
                Perm::K12K23 => (GroupBasisElem::q(k), CycNum::omega_pow(k)),
                Perm::K12 => (GroupBasisElem::l(k), CycNum::omega_pow(-k)),
                Perm::K23 => (GroupBasisElem::l(k), CycNum::ONE),
                Perm::K13 => (GroupBasisElem::l(k), CycNum::omega_pow(k)),
            };
            out.coeffs[e.slot()] += &(c * &w);
        }
    }
    out
}

/// Q/L basis → permutation basis (the defining formulas).
pub fn k_from_lq(g: &GroupAlgebraElem) -> PermAlgebraElem {
    let mut out = PermAlgebraElem::default();
    let slot = |p: Perm| Perm::ALL.iter().position(|q| *q == p).unwrap();
    for (e, c) in g.terms() {
        let k = e.index() as i64;
        let c3 = c.scale(&third());
        let parts: [(Perm, CycNum); 3] = match e.kind {
            GroupKind::L => [
                (Perm::K12, CycNum::omega_pow(k)),
                (Perm::K23, CycNum::ONE),
                (Perm::K13, CycNum::omega_pow(-k)),
            ],
            GroupKind::Q => [
                (Perm::Id, CycNum::ONE),
                (Perm::K12K13, CycNum::omega_pow(k)),
                (Perm::K12K23, CycNum::omega_pow(-k)),
            ],
        };
        for (p, w) in parts {
            out.coeffs[slot(p)] += &(&c3 * &w);
        }
    }
    out
}

/// Group-algebra element for a permutation-basis label.
pub fn perm_to_lq(p: Perm) -> GroupAlgebraElem {
    lq_from_k(&PermAlgebraElem::basis(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(i: i64) -> GroupBasisElem {
        GroupBasisElem::q(i)
    }
    fn l(i: i64) -> GroupBasisElem {
        GroupBasisElem::l(i)
    }

    #[test]
    fn product_table_examples() {
        assert_eq!(mul_basis(l(1), l(2)), Some(q(2)));
        assert_eq!(mul_basis(q(1), q(2)), None);
        assert_eq!(mul_basis(q(1), l(2)), Some(l(2)));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_group(l(1)), l(2));
        assert_eq!(tau_group(q(2)), q(2));
        assert_eq!(tau_group(l(0)), l(0));
    }

    #[test]
    fn table_agrees_with_permutation_products() {
        for a in GroupBasisElem::ALL {
            for b in GroupBasisElem::ALL {
                let via_table = GroupAlgebraElem::basis(a).mul(&GroupAlgebraElem::basis(b));
                let via_perms = lq_from_k(
                    &k_from_lq(&GroupAlgebraElem::basis(a)).mul(&k_from_lq(&GroupAlgebraElem::basis(b))),
                );
                assert_eq!(via_table, via_perms, "{a} * {b}");
            }
        }
    }

    #[test]
    fn associativity_on_all_triples() {
        for a in GroupBasisElem::ALL {
            for b in GroupBasisElem::ALL {
                for c in GroupBasisElem::ALL {
                    let (a, b, c) =
                        (GroupAlgebraElem::basis(a), GroupAlgebraElem::basis(b), GroupAlgebraElem::basis(c));
                    assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                }
            }
        }
    }

    #[test]
    fn unit_is_two_sided() {
        let one = GroupAlgebraElem::unit();
        for e in GroupBasisElem::ALL {
            let g = GroupAlgebraElem::basis(e);
            assert_eq!(one.mul(&g), g);
            assert_eq!(g.mul(&one), g);
        }
        assert_eq!(k_from_lq(&one), PermAlgebraElem::basis(Perm::Id));
    }

    #[test]
    fn conversions_are_mutually_inverse() {
        for p in Perm::ALL {
            let e = PermAlgebraElem::basis(p);
            assert_eq!(k_from_lq(&lq_from_k(&e)), e, "{}", p.name());
        }
        for e in GroupBasisElem::ALL {
            let g = GroupAlgebraElem::basis(e);
            assert_eq!(lq_from_k(&k_from_lq(&g)), g);
        }
    }

    #[test]
    fn transpositions_square_to_one() {
        for p in [Perm::K12, Perm::K13, Perm::K23] {
            let k = perm_to_lq(p);
            assert_eq!(k.mul(&k), GroupAlgebraElem::unit());
        }
    }

    #[test]
    fn k12_is_a_combination_of_ls() {
        let k12 = perm_to_lq(Perm::K12);
        assert!(k12.coeffs[..3].iter().all(CycNum::is_zero));
        assert_eq!(k12.coeffs[3], CycNum::ONE);
        assert_eq!(k12.coeffs[4], CycNum::omega_pow(2));
        assert_eq!(k12.coeffs[5], CycNum::omega());
    }

    #[test]
    fn tau_is_an_antiautomorphism() {
        for a in GroupBasisElem::ALL {
            for b in GroupBasisElem::ALL {
                let (ga, gb) = (GroupAlgebraElem::basis(a), GroupAlgebraElem::basis(b));
                assert_eq!(ga.mul(&gb).tau(), gb.tau().mul(&ga.tau()));
            }
        }
    }
}
