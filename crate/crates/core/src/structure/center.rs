use std::collections::HashMap;

use super::BlockedSpace;
use crate::algebra::{commutator, Element, Monomial};
use crate::cyclotomic::CycNum;
use crate::group::GroupBasisElem;
use crate::matrix::RowReducer;
use crate::par::Exec;

/// Basis of the elements of degree ≤ `degree_cap` commuting (plain
/// commutator) with x, y, x⁺, y⁺ and every Qᵢ, Lᵢ.
///
/// The conditions are homogeneous, so the kernel is computed block by block.
pub fn center_basis(degree_cap: u32, exec: Exec) -> Vec<Element> {
    let space = BlockedSpace::new(degree_cap);
    let mut generators = vec![Element::x(), Element::y(), Element::xp(), Element::yp()];
    generators.extend(GroupBasisElem::ALL.iter().map(|e| Element::group(*e)));
    let blocks: Vec<&Vec<Monomial>> = space.blocks.values().map(|b| &b.cols).collect();
    let per_block = exec.map(&blocks, |cols| {
        let mut rows: HashMap<(usize, Monomial), Vec<(usize, CycNum)>> = HashMap::new();
        for (j, b) in cols.iter().enumerate() {
            let fb = Element::monomial(*b);
            for (g, gen) in generators.iter().enumerate() {
                for (m, c) in commutator(&fb, gen).into_terms() {
                    rows.entry((g, m)).or_default().push((j, c));
                }
            }
        }
        let mut reducer = RowReducer::new(cols.len());
        let mut keys: Vec<_> = rows.keys().cloned().collect();
        keys.sort();
        for k in keys {
            if reducer.is_full() {
                break;
            }
            reducer.insert(&rows[&k]);
        }
        reducer
            .kernel()
            .into_iter()
            .map(|v| cols.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c)).collect::<Element>())
            .collect::<Vec<_>>()
    });
    per_block.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_the_unit_at_low_degree() {
        assert_eq!(center_basis(0, Exec::Sequential), vec![Element::unit()]);
        assert_eq!(center_basis(2, Exec::default()), vec![Element::unit()]);
    }
}
