//! Center, commutant, simplicity certificates and invariant-form checks.

mod center;
mod certificate;
mod commutant;
mod forms;
mod lie;

use std::collections::{BTreeMap, HashMap};

pub use center::center_basis;
pub use certificate::{
    casimir_singlet, cube_contraction, phi_parity_check, replay_certificate, shift_polynomial, simplicity_certificate,
    CertificateStep, CombineTerm, ParityReport, PhiSnapshot, ReplayReport, Rule, SimplicityCertificate, StepOp,
    CERTIFICATE_FORMAT, MAX_RETRIES, SHIFT_CONSTANT,
};
pub use commutant::{commutant_slice, CommutantSlice, CommutantSpan};
pub use forms::{form_independence_on_commutant, project_to_commutant, FormIndependenceReport};
pub use lie::{lie_ideal_experiment, LieIdealReport};

use crate::algebra::{Element, Monomial};
use crate::cyclotomic::CycNum;
use crate::matrix::{RowReducer, SparseRow};

/// (ad T⁰¹ weight, ℤ₃ grade). Products of homogeneous elements are
/// homogeneous, and the weight also fixes the parity.
type BlockKey = (i64, u8);

fn block_key(m: &Monomial) -> BlockKey {
    (m.osc.sl2_weight(), m.rho())
}

/// Monomials of degree ≤ `max_degree` grouped by [`BlockKey`], each block
/// ordered by decreasing degree so that echelon pivots read off the
/// intersection with every lower-degree filtration piece.
struct Block {
    cols: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    reducer: RowReducer,
}

impl Block {
    fn row(&self, terms: &[(Monomial, CycNum)]) -> SparseRow {
        let mut row: SparseRow = terms.iter().map(|(m, c)| (self.index[m], c.clone())).collect();
        row.sort_by_key(|(j, _)| *j);
        row
    }

    fn dim_up_to(&self, degree: u32) -> usize {
        self.reducer.pivot_columns().iter().filter(|&&c| self.cols[c].degree() <= degree).count()
    }
}

struct BlockedSpace {
    max_degree: u32,
    blocks: BTreeMap<BlockKey, Block>,
}

impl BlockedSpace {
    fn new(max_degree: u32) -> Self {
        let mut grouped: BTreeMap<BlockKey, Vec<Monomial>> = BTreeMap::new();
        for m in Monomial::up_to_degree(max_degree) {
            grouped.entry(block_key(&m)).or_default().push(m);
        }
        let blocks = grouped
            .into_iter()
            .map(|(k, mut cols)| {
                cols.sort_by(|a, b| b.cmp(a));
                let index = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
                let reducer = RowReducer::new(cols.len());
                (k, Block { cols, index, reducer })
            })
            .collect();
        BlockedSpace { max_degree, blocks }
    }

    /// Splits `f` into its homogeneous parts; `None` if some term is above the cap.
    fn split(&self, f: &Element) -> Option<BTreeMap<BlockKey, Vec<(Monomial, CycNum)>>> {
        let mut parts: BTreeMap<BlockKey, Vec<(Monomial, CycNum)>> = BTreeMap::new();
        for (m, c) in f.terms() {
            if m.degree() > self.max_degree {
                return None;
            }
            parts.entry(block_key(m)).or_default().push((*m, c.clone()));
        }
        Some(parts)
    }

    fn contains(&self, f: &Element) -> bool {
        match self.split(f) {
            None => false,
            Some(parts) => parts.iter().all(|(k, terms)| {
                let b = &self.blocks[k];
                b.reducer.contains(&b.row(terms))
            }),
        }
    }

    fn dim_up_to(&self, degree: u32) -> usize {
        self.blocks.values().map(|b| b.dim_up_to(degree)).sum()
    }
}
