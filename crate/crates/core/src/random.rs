//! Deterministic random elements for property runs and certificate seeds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, Monomial, Osc};
use crate::cyclotomic::CycNum;
use crate::group::GroupBasisElem;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero coefficient, sometimes with an ω part.
pub fn random_coefficient<R: Rng>(rng: &mut R) -> CycNum {
    loop {
        let a = CycNum::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let b = if rng.gen_bool(0.25) { CycNum::frac(rng.gen_range(-2..=2), 1) } else { CycNum::ZERO };
        let c = &a + &(&b * &CycNum::omega());
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_osc<R: Rng>(rng: &mut R, degree: u32) -> Osc {
    let mut e = [0u32; 4];
    for _ in 0..degree {
        e[rng.gen_range(0..4)] += 1;
    }
    Osc::new(e[0], e[1], e[2], e[3])
}

pub fn random_group<R: Rng>(rng: &mut R) -> GroupBasisElem {
    GroupBasisElem::ALL[rng.gen_range(0..6)]
}

pub fn random_monomial<R: Rng>(rng: &mut R, max_degree: u32) -> Monomial {
    let d = rng.gen_range(0..=max_degree);
    Monomial::new(random_osc(rng, d), random_group(rng))
}

/// Nonzero element with up to `terms` terms of degree ≤ `max_degree`,
/// at least one of which has degree exactly `max_degree`.
pub fn random_element<R: Rng>(rng: &mut R, max_degree: u32, terms: usize) -> Element {
    loop {
        let mut e = Element::zero();
        let top = Monomial::new(random_osc(rng, max_degree), random_group(rng));
        e.add_term(top, random_coefficient(rng));
        for _ in 1..terms.max(1) {
            e.add_term(random_monomial(rng, max_degree), random_coefficient(rng));
        }
        if !e.is_zero() {
            return e;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = random_element(&mut rng(7), 3, 4);
        let b = random_element(&mut rng(7), 3, 4);
        assert_eq!(a, b);
        assert_eq!(a.degree(), 3);
    }
}
