//! Independent product by one-swap-at-a-time word rewriting.
//!
//! Words are sequences of letters; a word is reduced by repeatedly fixing the
//! leftmost out-of-order adjacent pair. Used to cross-check the closed
//! contraction formula in [`super::product`].

use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::cyclotomic::CycNum;
use crate::group::{mul_basis, GroupBasisElem, GroupKind};

use super::element::Element;
use super::monomial::{Monomial, Osc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Letter {
    XP,
    YP,
    X,
    Y,
    G(GroupBasisElem),
}

impl Letter {
    fn rank(self) -> u8 {
        match self {
            Letter::XP => 0,
            Letter::YP => 1,
            Letter::X => 2,
            Letter::Y => 3,
            Letter::G(_) => 4,
        }
    }

    fn is_x_type(self) -> bool {
        matches!(self, Letter::X | Letter::XP)
    }

    fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
            Letter::XP => Letter::YP,
            Letter::YP => Letter::XP,
            g => g,
        }
    }
}

fn word_of(m: &Monomial) -> Vec<Letter> {
    let mut w = Vec::with_capacity(m.degree() as usize + 1);
    w.extend(std::iter::repeat_n(Letter::XP, m.osc.xp as usize));
    w.extend(std::iter::repeat_n(Letter::YP, m.osc.yp as usize));
    w.extend(std::iter::repeat_n(Letter::X, m.osc.x as usize));
    w.extend(std::iter::repeat_n(Letter::Y, m.osc.y as usize));
    w.push(Letter::G(m.group));
    w
}

/// Reads a fully ordered word back as a monomial.
fn monomial_of(word: &[Letter]) -> Monomial {
    let mut osc = Osc::ONE;
    let mut group = None;
    for l in word {
        match l {
            Letter::XP => osc.xp += 1,
            Letter::YP => osc.yp += 1,
            Letter::X => osc.x += 1,
            Letter::Y => osc.y += 1,
            Letter::G(g) => group = Some(*g),
        }
    }
    Monomial::new(osc, group.expect("every word carries a group element"))
}

/// Rewrites of the first out-of-order pair, or `None` if the word is ordered.
fn rewrite_step(word: &[Letter]) -> Option<Vec<(Vec<Letter>, CycNum)>> {
    let pos = word.windows(2).position(|p| {
        let (a, b) = (p[0], p[1]);
        a.rank() > b.rank() || (a.rank() == 4 && b.rank() == 4)
    })?;
    let (a, b) = (word[pos], word[pos + 1]);
    let splice = |mid: &[Letter]| {
        let mut w = word[..pos].to_vec();
        w.extend_from_slice(mid);
        w.extend_from_slice(&word[pos + 2..]);
        w
    };
    let out = match (a, b) {
        (Letter::G(e), Letter::G(f)) => match mul_basis(e, f) {
            Some(g) => vec![(splice(&[Letter::G(g)]), CycNum::ONE)],
            None => Vec::new(),
        },
        (Letter::G(e), l) => {
            let shift = if l.is_x_type() { 1 } else { -1 };
            let moved = match e.kind {
                GroupKind::Q => l,
                GroupKind::L => l.swapped(),
            };
            vec![(splice(&[moved, Letter::G(e.shifted(shift))]), CycNum::ONE)]
        }
        (Letter::X, Letter::YP) | (Letter::Y, Letter::XP) => vec![
            (splice(&[b, a]), CycNum::ONE),
            (splice(&[]), CycNum::from_int(3)),
        ],
        _ => vec![(splice(&[b, a]), CycNum::ONE)],
    };
    Some(out)
}

/// The product `f·g` computed by iterated single rewrites.
pub fn reorder_oracle(f: &Element, g: &Element) -> Element {
    let mut pending: BTreeMap<(Reverse<usize>, Vec<Letter>), CycNum> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<_, CycNum>, w: Vec<Letter>, c: CycNum| {
        let e = pending.entry((Reverse(w.len()), w)).or_insert(CycNum::ZERO);
        *e += &c;
    };
    for (ma, ca) in f.terms() {
        for (mb, cb) in g.terms() {
            let mut w = word_of(ma);
            w.extend(word_of(mb));
            push(&mut pending, w, ca * cb);
        }
    }
    let mut out = Element::zero();
    while let Some(((_, word), c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        match rewrite_step(&word) {
            None => out.add_term(monomial_of(&word), c),
            Some(next) => {
                for (w, k) in next {
                    push(&mut pending, w, &c * &k);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_on_single_swap() {
        let (x, yp) = (Element::x(), Element::yp());
        assert_eq!(reorder_oracle(&x, &yp), x.mul(&yp));
    }

    #[test]
    fn agrees_on_double_contraction() {
        let x2 = Element::x().pow(2);
        let yp2 = Element::yp().pow(2);
        let got = reorder_oracle(&x2, &yp2);
        assert_eq!(got, x2.mul(&yp2));
        // contraction terms of order 0, 1, 2 all appear
        let degrees: std::collections::BTreeSet<u32> = got.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(degrees.into_iter().collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn group_letters_are_transported() {
        let l0 = Element::group(GroupBasisElem::l(0));
        let x = Element::x();
        assert_eq!(reorder_oracle(&l0, &x), l0.mul(&x));
    }
}
