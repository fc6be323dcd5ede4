//! Dense exact matrices over ℚ(ω).
//!
//! Rank and kernel use fraction-free (Bareiss) elimination on rows scaled into
//! ℤ[ω]; pivots are the first nonzero entry scanning top-left. [`RowReducer`]
//! is an incremental echelon basis for span computations with many redundant
//! rows.

use std::fmt;

use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl CycMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CycMatrix { rows, cols, data: vec![CycNum::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycNum::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CycMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<CycNum>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = CycMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &CycNum) -> CycMatrix {
        CycMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut t = CycMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        CycMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = CycMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Row echelon form via fraction-free elimination. Returns the reduced rows
    /// (over ℤ[ω] up to the per-row scaling) and the pivot column of each.
    fn bareiss_echelon(&self) -> (CycMatrix, Vec<usize>) {
        let mut m = self.clone();
        // Clear denominators row by row so every entry lies in ℤ[ω].
        for i in 0..m.rows {
            let lcm = m
                .row(i)
                .iter()
                .filter(|v| !v.is_zero())
                .fold(num_bigint::BigInt::from(1), |acc, v| num_integer::Integer::lcm(&acc, &v.denominator_lcm()));
            if lcm != num_bigint::BigInt::from(1) {
                let s = Rational::from(lcm);
                for j in 0..m.cols {
                    let v = m[(i, j)].scale(&s);
                    m[(i, j)] = v;
                }
            }
        }
        let mut pivots = Vec::new();
        let mut prev = CycNum::ONE;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
            }
            let pivot = m[(r, c)].clone();
            for i in r + 1..m.rows {
                let lead = m[(i, c)].clone();
                for j in c + 1..m.cols {
                    let a = &pivot * &m[(i, j)];
                    let b = if lead.is_zero() { CycNum::ZERO } else { &lead * &m[(r, j)] };
                    let num = &a - &b;
                    m[(i, j)] = if num.is_zero() { num } else { &num / &prev };
                }
                m[(i, c)] = CycNum::ZERO;
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact rank over ℚ(ω).
    pub fn rank(&self) -> usize {
        self.bareiss_echelon().1.len()
    }

    /// Basis of the right kernel; each vector's first nonzero entry is 1.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let (ech, pivots) = self.bareiss_echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut x = vec![CycNum::ZERO; self.cols];
            x[free] = CycNum::ONE;
            for (r, &p) in pivots.iter().enumerate().rev() {
                let mut acc = CycNum::ZERO;
                for j in p + 1..self.cols {
                    if !x[j].is_zero() && !ech[(r, j)].is_zero() {
                        acc += &(&ech[(r, j)] * &x[j]);
                    }
                }
                x[p] = if acc.is_zero() { acc } else { -(&acc / &ech[(r, p)]) };
            }
            normalize_leading(&mut x);
            basis.push(x);
        }
        basis
    }

    /// Inverse via Gauss–Jordan; `None` when singular or non-square.
    pub fn inverse(&self) -> Option<CycMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.hstack(&CycMatrix::identity(n));
        for c in 0..n {
            let p = (c..n).find(|&i| !a[(i, c)].is_zero())?;
            a.swap_rows(p, c);
            let inv = a[(c, c)].inverse().ok()?;
            for j in 0..2 * n {
                let v = &a[(c, j)] * &inv;
                a[(c, j)] = v;
            }
            for i in 0..n {
                if i == c || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..2 * n {
                    if !a[(c, j)].is_zero() {
                        let v = &a[(i, j)] - &(&f * &a[(c, j)]);
                        a[(i, j)] = v;
                    }
                }
            }
        }
        let mut inv = CycMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = a[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// One solution of `self · x = b`, or an error when inconsistent.
    pub fn solve(&self, b: &[CycNum]) -> Result<Vec<CycNum>> {
        assert_eq!(b.len(), self.rows);
        let col = CycMatrix::from_columns(self.rows, &[b.to_vec()]);
        let aug = self.hstack(&col);
        let mut reducer = RowReducer::new(self.cols + 1);
        for i in 0..aug.rows {
            reducer.insert_dense(aug.row(i).to_vec());
        }
        if reducer.pivot_columns().contains(&self.cols) {
            return Err(Sh3Error::Inconsistent("right-hand side outside the column space".into()));
        }
        Ok(reducer.back_substitute(self.cols))
    }
}

fn normalize_leading(x: &mut [CycNum]) {
    if let Some(lead) = x.iter().find(|v| !v.is_zero()).cloned() {
        if !lead.is_one() {
            let inv = lead.inverse().expect("nonzero lead");
            for v in x.iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for CycMatrix {
    type Output = CycNum;
    fn index(&self, (i, j): (usize, usize)) -> &CycNum {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CycMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse row: sorted `(column, value)` pairs with no zero values.
pub type SparseRow = Vec<(usize, CycNum)>;

/// Incremental echelon basis: rows are reduced against earlier pivots in
/// increasing column order, so lower column indices are eliminated first.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    pivot_of: Vec<Option<usize>>,
    rows: Vec<SparseRow>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, pivot_of: vec![None; cols], rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_of[c].is_some()).collect()
    }

    pub fn basis(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Reduces a dense row; returns the residual with a non-pivot leading column
    /// (all zero when the row is in the span).
    fn reduce(&self, mut v: Vec<CycNum>) -> Vec<CycNum> {
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            match self.pivot_of[c] {
                Some(r) => {
                    let f = v[c].clone();
                    for (j, val) in &self.rows[r] {
                        let d = &f * val;
                        v[*j] -= &d;
                    }
                }
                None => return v,
            }
        }
        v
    }

    /// True when the dense vector lies in the current span.
    pub fn contains_dense(&self, v: Vec<CycNum>) -> bool {
        self.reduce(v).iter().all(CycNum::is_zero)
    }

    pub fn contains(&self, row: &[(usize, CycNum)]) -> bool {
        self.contains_dense(self.densify(row))
    }

    fn densify(&self, row: &[(usize, CycNum)]) -> Vec<CycNum> {
        let mut v = vec![CycNum::ZERO; self.cols];
        for (j, val) in row {
            v[*j] += val;
        }
        v
    }

    /// Adds a row; returns its new pivot column if it enlarged the span.
    pub fn insert(&mut self, row: &[(usize, CycNum)]) -> Option<usize> {
        if self.is_full() || row.is_empty() {
            return None;
        }
        let v = self.densify(row);
        self.insert_dense(v)
    }

    pub fn insert_dense(&mut self, v: Vec<CycNum>) -> Option<usize> {
        assert_eq!(v.len(), self.cols);
        let v = self.reduce(v);
        let lead = v.iter().position(|x| !x.is_zero())?;
        let inv = v[lead].inverse().expect("nonzero");
        let row: SparseRow = v
            .into_iter()
            .enumerate()
            .skip(lead)
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, &x * &inv))
            .collect();
        self.pivot_of[lead] = Some(self.rows.len());
        self.rows.push(row);
        Some(lead)
    }

    /// Basis of the vectors annihilated by every row, one per non-pivot
    /// column, each normalized so its first nonzero entry is 1.
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| self.pivot_of[c].is_none()) {
            let mut x = vec![CycNum::ZERO; self.cols];
            x[free] = CycNum::ONE;
            for c in (0..free).rev() {
                if let Some(r) = self.pivot_of[c] {
                    let mut acc = CycNum::ZERO;
                    for (j, val) in &self.rows[r] {
                        if *j > c && !x[*j].is_zero() {
                            acc -= &(val * &x[*j]);
                        }
                    }
                    x[c] = acc;
                }
            }
            let lead = x.iter().find(|v| !v.is_zero()).unwrap().inverse().expect("nonzero");
            out.push(x.iter().map(|v| v * &lead).collect());
        }
        out
    }

    /// Solution of the system whose augmented matrix is the current basis with
    /// the right-hand side in column `n` (free variables set to zero).
    fn back_substitute(&self, n: usize) -> Vec<CycNum> {
        let mut x = vec![CycNum::ZERO; n];
        let mut pivots: Vec<(usize, usize)> =
            (0..n).filter_map(|c| self.pivot_of[c].map(|r| (c, r))).collect();
        pivots.reverse();
        for (c, r) in pivots {
            let mut acc = CycNum::ZERO;
            for (j, val) in &self.rows[r] {
                if *j == n {
                    acc += val;
                } else if *j > c && !x[*j].is_zero() {
                    acc -= &(val * &x[*j]);
                }
            }
            x[c] = acc;
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w() -> CycNum {
        CycNum::omega()
    }

    fn int(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn ranks_of_small_matrices() {
        assert_eq!(CycMatrix::identity(2).rank(), 2);
        let m = CycMatrix::from_rows(vec![vec![int(1), w()], vec![w(), int(-1) - w()]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(CycMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn nullspaces_of_small_matrices() {
        assert!(CycMatrix::identity(3).nullspace().is_empty());
        let k = CycMatrix::from_rows(vec![vec![int(1), int(1)]]).nullspace();
        assert_eq!(k, vec![vec![int(1), int(-1)]]);
        let k = CycMatrix::zeros(2, 2).nullspace();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn nullspace_with_fractional_entries() {
        let half = CycNum::frac(1, 2);
        let m = CycMatrix::from_rows(vec![
            vec![half.clone(), w(), int(0)],
            vec![int(1), &w() * &int(2), int(0)],
        ]);
        let k = m.nullspace();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(CycNum::is_zero));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let m = CycMatrix::from_rows(vec![vec![int(2), w()], vec![int(1), int(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), CycMatrix::identity(2));
        let b = vec![int(3), w()];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let singular = CycMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[int(1), int(0)]).is_err());
    }

    #[test]
    fn row_reducer_tracks_span() {
        let mut r = RowReducer::new(3);
        assert_eq!(r.insert(&[(0, int(1)), (1, int(1))]), Some(0));
        assert_eq!(r.insert(&[(0, int(2)), (1, int(2))]), None);
        assert_eq!(r.insert(&[(1, w())]), Some(1));
        assert!(r.contains(&[(0, int(5))]));
        assert!(!r.contains(&[(2, int(1))]));
        assert_eq!(r.rank(), 2);
    }

    fn arb_matrix() -> impl Strategy<Value = CycMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(((-3i64..4), (-2i64..3), (1i64..3)), r * c).prop_map(move |cells| {
                let rows = cells
                    .chunks(c)
                    .map(|ch| {
                        ch.iter()
                            .map(|&(a, b, d)| CycNum::new(Rational::new(a, d), Rational::from_int(b)))
                            .collect()
                    })
                    .collect();
                CycMatrix::from_rows(rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.nullspace();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(CycNum::is_zero));
                let lead = v.iter().find(|x| !x.is_zero()).unwrap();
                prop_assert!(lead.is_one());
            }
            let mut red = RowReducer::new(m.cols());
            for i in 0..m.rows() { red.insert_dense(m.row(i).to_vec()); }
            prop_assert_eq!(red.rank(), m.rank());
            prop_assert_eq!(m.transpose().rank(), m.rank());
        }
    }
}
