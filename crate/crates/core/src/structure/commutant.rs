use std::collections::BTreeMap;

use serde::Serialize;

use super::{BlockKey, BlockedSpace};
use crate::algebra::{superbracket, Element, Monomial};
use crate::cyclotomic::CycNum;
use crate::group::GroupBasisElem;
use crate::par::Exec;

/// Span of the superbrackets [a, b} of basis monomials with deg a + deg b ≤ source_cap.
///
/// Writing a = g·h with g its first letter (or its group element),
/// [gh, b} = [g, hb} ± [h, bg}, so by induction on deg a the span is already
/// produced by brackets [g, b} with g a single letter and deg b ≤ source_cap − 1,
/// or g a group basis element and deg b ≤ source_cap.
pub struct CommutantSpan {
    space: BlockedSpace,
    source_cap: Option<u32>,
}

fn letters() -> [Element; 4] {
    [Element::x(), Element::y(), Element::xp(), Element::yp()]
}

impl CommutantSpan {
    /// Empty span able to hold brackets up to `max_source` factor degrees.
    pub fn new(max_source: u32) -> Self {
        CommutantSpan { space: BlockedSpace::new(max_source), source_cap: None }
    }

    pub fn build(source_cap: u32, exec: Exec) -> Self {
        let mut span = Self::new(source_cap);
        span.extend_to(source_cap, exec);
        span
    }

    pub fn source_cap(&self) -> Option<u32> {
        self.source_cap
    }

    /// Adds the brackets needed to raise the source cap to `source_cap`.
    pub fn extend_to(&mut self, source_cap: u32, exec: Exec) {
        assert!(source_cap <= self.space.max_degree, "source cap beyond the allocated columns");
        let (letter_from, group_from) = match self.source_cap {
            None => (0, 0),
            Some(s) if s >= source_cap => return,
            Some(s) => (s, s + 1),
        };
        let mut jobs: Vec<(Element, Monomial)> = Vec::new();
        for g in letters() {
            for d in letter_from..source_cap {
                jobs.extend(Monomial::of_degree(d).into_iter().map(|b| (g.clone(), b)));
            }
        }
        for e in GroupBasisElem::ALL {
            for d in group_from..=source_cap {
                jobs.extend(Monomial::of_degree(d).into_iter().map(|b| (Element::group(e), b)));
            }
        }
        let space = &self.space;
        let rows = exec.map(&jobs, |(g, b)| {
            let r = superbracket(g, &Element::monomial(*b));
            let parts = space.split(&r).expect("brackets stay within the allocated degree");
            assert!(parts.len() <= 1, "bracket of homogeneous elements is homogeneous");
            parts.into_iter().next()
        });
        let mut per_block: BTreeMap<BlockKey, Vec<Vec<(Monomial, CycNum)>>> = BTreeMap::new();
        for (k, terms) in rows.into_iter().flatten() {
            per_block.entry(k).or_default().push(terms);
        }
        let mut work: Vec<(&mut super::Block, Vec<Vec<(Monomial, CycNum)>>)> = self
            .space
            .blocks
            .iter_mut()
            .filter_map(|(k, b)| per_block.remove(k).map(|rows| (b, rows)))
            .collect();
        exec.for_each_mut(&mut work, |(block, rows)| {
            for terms in rows.iter() {
                if block.reducer.is_full() {
                    break;
                }
                let row = block.row(terms);
                block.reducer.insert(&row);
            }
        });
        self.source_cap = Some(source_cap);
    }

    pub fn contains(&self, f: &Element) -> bool {
        self.space.contains(f)
    }

    /// Dimension of the span intersected with degree ≤ `degree`.
    pub fn dim_up_to(&self, degree: u32) -> usize {
        self.space.dim_up_to(degree)
    }

    /// Per-block (weight, ℤ₃ grade) deficiency of the degree ≤ `degree` piece.
    pub fn missing_blocks(&self, degree: u32) -> Vec<((i64, u8), usize)> {
        self.space
            .blocks
            .iter()
            .map(|(k, b)| (*k, b.cols.iter().filter(|m| m.degree() <= degree).count() - b.dim_up_to(degree)))
            .filter(|(_, d)| *d > 0)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutantSlice {
    pub degree_cap: u32,
    pub source_cap: u32,
    /// Number of basis monomials of degree ≤ degree_cap.
    pub full_dimension: usize,
    pub dimension: usize,
    pub codimension: usize,
    /// Dimension when the source cap is raised by 2.
    pub dimension_next: usize,
    pub stabilized: bool,
    pub unit_in_span: bool,
    pub degree_one_in_span: bool,
}

/// The commutant intersected with degree ≤ `degree_cap`, computed from
/// brackets with factor degrees summing to at most `source_cap`.
pub fn commutant_slice(degree_cap: u32, source_cap: u32, exec: Exec) -> CommutantSlice {
    assert!(source_cap >= degree_cap, "source_cap must be at least degree_cap");
    let mut span = CommutantSpan::new(source_cap + 2);
    span.extend_to(source_cap, exec);
    let dimension = span.dim_up_to(degree_cap);
    let unit_in_span = span.contains(&Element::unit());
    let degree_one_in_span =
        degree_cap >= 1 && Monomial::of_degree(1).iter().all(|m| span.contains(&Element::monomial(*m)));
    span.extend_to(source_cap + 2, exec);
    let dimension_next = span.dim_up_to(degree_cap);
    let full_dimension = Monomial::up_to_degree(degree_cap).len();
    CommutantSlice {
        degree_cap,
        source_cap,
        full_dimension,
        dimension,
        codimension: full_dimension - dimension,
        dimension_next,
        stabilized: dimension == dimension_next,
        unit_in_span,
        degree_one_in_span,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codimension_two_at_degree_two() {
        let s = commutant_slice(2, 6, Exec::default());
        assert_eq!(s.codimension, 2);
        assert!(s.stabilized);
        assert!(!s.unit_in_span);
        assert!(s.degree_one_in_span);
    }
}
