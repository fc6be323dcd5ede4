use std::collections::HashMap;

use rand::seq::SliceRandom;
use serde::Serialize;

use super::CommutantSpan;
use crate::algebra::{superbracket, Element, Monomial};
use crate::error::{Result, Sh3Error};
use crate::matrix::RowReducer;
use crate::par::Exec;
use crate::random;

#[derive(Clone, Debug, Serialize)]
pub struct LieIdealReport {
    pub seed: Element,
    pub degree_cap: u32,
    pub rng_seed: u64,
    pub closure_dim: usize,
    /// Dimension of the closure intersected with degree ≤ d, for d = 0..=cap.
    pub filtered_dims: Vec<usize>,
    /// Number of basis monomials of degree ≤ d.
    pub full_dims: Vec<usize>,
    pub contains_degree_one: bool,
    pub stabilized: bool,
    pub brackets_evaluated: usize,
}

const MAX_QUEUE: usize = 100_000;

/// Closes {seed} under superbrackets with basis monomials of degree ≤ cap,
/// dropping any bracket whose degree exceeds the cap.
pub fn lie_ideal_experiment(seed: &Element, degree_cap: u32, rng_seed: u64, exec: Exec) -> Result<LieIdealReport> {
    if seed.is_zero() {
        return Err(Sh3Error::InvalidInput("the seed must be nonzero".into()));
    }
    if seed.degree() > degree_cap {
        return Err(Sh3Error::InvalidInput(format!("seed degree {} exceeds the cap {degree_cap}", seed.degree())));
    }
    let membership = CommutantSpan::build(seed.degree() + 4, exec);
    if !membership.contains(seed) {
        return Err(Sh3Error::InvalidInput(format!("{seed} is not in the commutant")));
    }

    let mut cols = Monomial::up_to_degree(degree_cap);
    cols.sort_by(|a, b| b.cmp(a));
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let row = |f: &Element| -> Vec<_> {
        let mut r: Vec<_> = f.terms().map(|(m, c)| (index[m], c.clone())).collect();
        r.sort_by_key(|(j, _)| *j);
        r
    };
    let mut partners: Vec<Element> = cols.iter().map(|m| Element::monomial(*m)).collect();
    partners.shuffle(&mut random::rng(rng_seed));

    let mut reducer = RowReducer::new(cols.len());
    reducer.insert(&row(seed));
    let mut queue = vec![seed.clone()];
    let mut brackets = 0;
    let mut head = 0;
    while head < queue.len() && head < MAX_QUEUE && !reducer.is_full() {
        let current = queue[head].clone();
        head += 1;
        let results = exec.map(&partners, |p| superbracket(p, &current));
        brackets += results.len();
        for r in results {
            if r.is_zero() || r.degree() > degree_cap {
                continue;
            }
            if reducer.insert(&row(&r)).is_some() {
                queue.push(r);
            }
        }
    }
    let stabilized = head == queue.len() || reducer.is_full();
    let pivots = reducer.pivot_columns();
    let filtered_dims = (0..=degree_cap).map(|d| pivots.iter().filter(|&&c| cols[c].degree() <= d).count()).collect();
    let full_dims = (0..=degree_cap).map(|d| Monomial::up_to_degree(d).len()).collect();
    let contains_degree_one =
        degree_cap >= 1 && Monomial::of_degree(1).iter().all(|m| reducer.contains(&row(&Element::monomial(*m))));
    Ok(LieIdealReport {
        seed: seed.clone(),
        degree_cap,
        rng_seed,
        closure_dim: reducer.rank(),
        filtered_dims,
        full_dims,
        contains_degree_one,
        stabilized,
        brackets_evaluated: brackets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_seed_is_rejected() {
        assert!(lie_ideal_experiment(&Element::zero(), 2, 0, Exec::Sequential).is_err());
    }

    #[test]
    fn unit_is_not_in_the_commutant() {
        assert!(lie_ideal_experiment(&Element::unit(), 2, 0, Exec::Sequential).is_err());
    }

    #[test]
    fn x_reaches_the_degree_one_slice() {
        let r = lie_ideal_experiment(&Element::x(), 2, 1, Exec::default()).unwrap();
        assert!(r.contains_degree_one);
        assert!(r.stabilized);
    }
}
