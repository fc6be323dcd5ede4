//! The two-parameter supertrace, its constraint-solver cross-check, and Gram matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{as_m_polynomial, superbracket, Element, Monomial};
use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::group::{GroupBasisElem, GroupKind};
use crate::matrix::{CycMatrix, RowReducer};
use crate::par::Exec;
use crate::rational::{factorial, Rational};
use crate::sl2::{singlet_project, SlGenerator};

/// A value u·S₁ + v·S₂, linear in the two supertrace parameters.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct StrValue {
    pub s1_coef: CycNum,
    pub s2_coef: CycNum,
}

impl StrValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(s1_coef: CycNum, s2_coef: CycNum) -> Self {
        StrValue { s1_coef, s2_coef }
    }

    pub fn rational(u: Rational, v: Rational) -> Self {
        Self::new(CycNum::from_rational(u), CycNum::from_rational(v))
    }

    /// u/ud·S₁ + v/vd·S₂ from small integers.
    pub fn frac(u: (i64, i64), v: (i64, i64)) -> Self {
        Self::new(CycNum::frac(u.0, u.1), CycNum::frac(v.0, v.1))
    }

    pub fn is_zero(&self) -> bool {
        self.s1_coef.is_zero() && self.s2_coef.is_zero()
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::new(&self.s1_coef * c, &self.s2_coef * c)
    }

    /// Value at concrete parameters.
    pub fn eval(&self, s1: &CycNum, s2: &CycNum) -> CycNum {
        &(&self.s1_coef * s1) + &(&self.s2_coef * s2)
    }
}

impl Add for &StrValue {
    type Output = StrValue;
    fn add(self, rhs: &StrValue) -> StrValue {
        StrValue::new(&self.s1_coef + &rhs.s1_coef, &self.s2_coef + &rhs.s2_coef)
    }
}

impl Sub for &StrValue {
    type Output = StrValue;
    fn sub(self, rhs: &StrValue) -> StrValue {
        StrValue::new(&self.s1_coef - &rhs.s1_coef, &self.s2_coef - &rhs.s2_coef)
    }
}

impl Add for StrValue {
    type Output = StrValue;
    fn add(self, rhs: StrValue) -> StrValue {
        &self + &rhs
    }
}

impl Sub for StrValue {
    type Output = StrValue;
    fn sub(self, rhs: StrValue) -> StrValue {
        &self - &rhs
    }
}

impl Neg for &StrValue {
    type Output = StrValue;
    fn neg(self) -> StrValue {
        StrValue::new(-&self.s1_coef, -&self.s2_coef)
    }
}

impl std::iter::Sum for StrValue {
    fn sum<I: Iterator<Item = StrValue>>(iter: I) -> StrValue {
        iter.fold(StrValue::zero(), |a, b| a + b)
    }
}

/// `-1/6*S1 + 1/4*S2`, `S1`, `0`, `(1*w)*S2`.
impl fmt::Display for StrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, name) in [(&self.s1_coef, "S1"), (&self.s2_coef, "S2")] {
            if c.is_zero() {
                continue;
            }
            if c.is_rational() {
                let neg = c.one.is_negative();
                let abs = c.one.abs();
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                if abs.is_one() {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{abs}*{name}")?;
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({c})*{name}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for StrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrValue({self})")
    }
}

/// Truncated Taylor series in ξ with coefficients linear in (S₁, S₂).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesQ {
    pub order: usize,
    pub coeffs: Vec<StrValue>,
}

/// Coefficients of e^{kξ} up to ξ^order.
fn exp_series(k: i64, order: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut c = Rational::ONE;
    for n in 0..=order {
        out.push(c.clone());
        c = &c * &Rational::new(k, n as i64 + 1);
    }
    out
}

/// Σ weight·e^{kξ} for (k, weight) pairs.
fn exp_combination(terms: &[(i64, Rational)], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; order + 1];
    for (k, w) in terms {
        for (o, e) in out.iter_mut().zip(exp_series(*k, order)) {
            *o += &(w * &e);
        }
    }
    out
}

/// 1/Δ with Δ = e^{3ξ} + 2 + e^{−3ξ}; Δ(0) = 4.
fn inverse_delta(order: usize) -> Vec<Rational> {
    let two = Rational::from_int(2);
    let delta = exp_combination(&[(3, Rational::ONE), (0, two), (-3, Rational::ONE)], order);
    let inv0 = delta[0].recip().expect("Δ(0) = 4");
    let mut inv = vec![Rational::ZERO; order + 1];
    inv[0] = inv0.clone();
    for n in 1..=order {
        let mut acc = Rational::ZERO;
        for k in 1..=n {
            acc += &(&delta[k] * &inv[n - k]);
        }
        inv[n] = -(&acc * &inv0);
    }
    inv
}

/// Numerator of the generating function for Q_i, as (S₁ part, S₂ part).
///
/// Index 1 carries the numerator with constant term (2/3)S₁ + S₂ whose
/// e^{−ξ} weight is positive in the S₁ part; index 2 the mirror one.
fn numerator(i: u8, order: usize) -> (Vec<Rational>, Vec<Rational>) {
    let r = Rational::new;
    let half = r(1, 2);
    let two_thirds = r(2, 3);
    let scaled = |terms: &[(i64, i64)], w: &Rational| -> Vec<(i64, Rational)> {
        terms.iter().map(|(k, c)| (*k, w * &Rational::from_int(*c))).collect()
    };
    match i {
        0 => (
            exp_combination(&[(0, Rational::from_int(-2))], order),
            exp_combination(&scaled(&[(2, 1), (-2, 1), (1, -2), (-1, -2)], &half), order),
        ),
        1 => (
            exp_combination(&scaled(&[(2, -1), (-1, 2)], &two_thirds), order),
            exp_combination(&scaled(&[(-2, 1), (1, -2), (0, 3)], &half), order),
        ),
        _ => (
            exp_combination(&scaled(&[(-2, -1), (1, 2)], &two_thirds), order),
            exp_combination(&scaled(&[(2, 1), (-1, -2), (0, 3)], &half), order),
        ),
    }
}

fn series_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|n| (0..=n).fold(Rational::ZERO, |acc, k| &acc + &(&a[k] * &b[n - k])))
        .collect()
}

/// Taylor coefficients of str(e^{(2/3)ξm}·E) up to ξ^order; zero for L-type E.
pub fn series_ql(e: GroupBasisElem, order: usize) -> SeriesQ {
    if e.kind == GroupKind::L {
        return SeriesQ { order, coeffs: vec![StrValue::zero(); order + 1] };
    }
    let inv = inverse_delta(order);
    let (p1, p2) = numerator(e.index(), order);
    let c1 = series_product(&p1, &inv);
    let c2 = series_product(&p2, &inv);
    let coeffs = c1.into_iter().zip(c2).map(|(u, v)| StrValue::rational(u, v)).collect();
    SeriesQ { order, coeffs }
}

/// str(mⁿ·E) = n!·(3/2)ⁿ·[ξⁿ] of the generating function.
pub fn str_m_power(n: usize, e: GroupBasisElem) -> StrValue {
    if e.kind == GroupKind::L {
        return StrValue::zero();
    }
    static CACHE: OnceLock<Mutex<HashMap<(usize, u8), StrValue>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, e.index());
    if let Some(v) = cache.lock().unwrap_or_else(|p| p.into_inner()).get(&key) {
        return v.clone();
    }
    let series = series_ql(e, n);
    let w = &factorial(n as u32) * &Rational::new(3, 2).pow(n as u32);
    let v = series.coeffs[n].scale(&CycNum::from_rational(w));
    cache.lock().unwrap_or_else(|p| p.into_inner()).insert(key, v.clone());
    v
}

/// str(f) through the singlet part of `f` written as Σ φ_E(m)·E.
pub fn str_eval(f: &Element) -> Result<StrValue> {
    let singlet = singlet_project(f);
    let parts = as_m_polynomial(&singlet)
        .ok_or_else(|| Sh3Error::Inconsistent(format!("singlet part {singlet} is not a polynomial in m")))?;
    let mut out = StrValue::zero();
    for (phi, e) in parts {
        for (n, c) in phi.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out + str_m_power(n, e).scale(c);
            }
        }
    }
    Ok(out)
}

/// Result of solving the supertrace conditions directly on low-degree monomials.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub degree_cap: u32,
    pub unknowns: usize,
    pub constraints: usize,
    pub kernel_dim: usize,
    /// Solution pinned by str(1) and str(Q₁); present only when the kernel is two-dimensional.
    #[serde(skip)]
    pub functional: Option<BTreeMap<Monomial, StrValue>>,
    /// Monomials where the pinned solution differs from [`str_eval`].
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.functional.is_some() && self.mismatches.is_empty()
    }
}

fn sparse_row(f: &Element, index: &HashMap<Monomial, usize>) -> Vec<(usize, CycNum)> {
    let mut row: Vec<(usize, CycNum)> = f.terms().map(|(m, c)| (index[m], c.clone())).collect();
    row.sort_by_key(|(j, _)| *j);
    row
}

/// Solves for all functionals on monomials of degree ≤ cap satisfying
/// str(fg) = (−1)^{π(f)π(g)} str(gf) for basis pairs with deg f + deg g ≤ cap and
/// str([T, b]) = 0 for every basis b, optionally with str(1) = str(Q₁) = 0 added.
pub fn str_constraint_oracle(degree_cap: u32, force_zero_anchors: bool, exec: Exec) -> Result<OracleReport> {
    if degree_cap < 2 {
        return Err(Sh3Error::InvalidInput("the supertrace oracle needs degree_cap >= 2".into()));
    }
    let basis = Monomial::up_to_degree(degree_cap);
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let n = basis.len();

    let pairs: Vec<(Monomial, Monomial)> = basis
        .iter()
        .flat_map(|a| {
            basis
                .iter()
                .filter(move |b| a.degree() + b.degree() <= degree_cap && a <= *b)
                .map(move |b| (*a, *b))
        })
        .collect();
    let mut rows: Vec<Vec<(usize, CycNum)>> = exec.map(&pairs, |(a, b)| {
        let (fa, fb) = (Element::monomial(*a), Element::monomial(*b));
        let ab = fa.mul(&fb);
        let ba = fb.mul(&fa);
        let diff = if a.parity() * b.parity() == 1 { ab + ba } else { ab - ba };
        sparse_row(&diff, &index)
    });
    let generators: Vec<Element> = SlGenerator::ALL.iter().map(|g| g.element()).collect();
    let bracket_rows: Vec<Vec<Vec<(usize, CycNum)>>> = exec.map(&basis, |b| {
        let fb = Element::monomial(*b);
        generators.iter().map(|t| sparse_row(&superbracket(t, &fb), &index)).collect()
    });
    rows.extend(bracket_rows.into_iter().flatten());
    let unit = Element::unit();
    let q1 = Element::group(GroupBasisElem::q(1));
    if force_zero_anchors {
        rows.push(sparse_row(&unit, &index));
        rows.push(sparse_row(&q1, &index));
    }
    rows.retain(|r| !r.is_empty());
    let constraints = rows.len();

    let mut reducer = RowReducer::new(n);
    for r in &rows {
        reducer.insert(r);
    }
    let kernel = reducer.kernel();
    let mut report = OracleReport {
        degree_cap,
        unknowns: n,
        constraints,
        kernel_dim: kernel.len(),
        functional: None,
        mismatches: Vec::new(),
    };
    if kernel.len() != 2 {
        return Ok(report);
    }

    // Pin the solution: find a, b (linear in S1, S2) with
    // (a·k1 + b·k2)(1) = str(1) and (a·k1 + b·k2)(Q1) = str(Q1).
    let apply = |v: &[CycNum], f: &Element| -> CycNum { f.terms().map(|(m, c)| &v[index[m]] * c).sum() };
    let mat = CycMatrix::from_rows(vec![
        vec![apply(&kernel[0], &unit), apply(&kernel[1], &unit)],
        vec![apply(&kernel[0], &q1), apply(&kernel[1], &q1)],
    ]);
    let targets = [StrValue::frac((-1, 6), (1, 4)), StrValue::frac((1, 6), (1, 4))];
    let solve_for = |pick: fn(&StrValue) -> CycNum| -> Result<Vec<CycNum>> {
        mat.solve(&[pick(&targets[0]), pick(&targets[1])])
    };
    let ab1 = solve_for(|s| s.s1_coef.clone())?;
    let ab2 = solve_for(|s| s.s2_coef.clone())?;
    let mut functional = BTreeMap::new();
    for (i, m) in basis.iter().enumerate() {
        let s1 = &(&ab1[0] * &kernel[0][i]) + &(&ab1[1] * &kernel[1][i]);
        let s2 = &(&ab2[0] * &kernel[0][i]) + &(&ab2[1] * &kernel[1][i]);
        functional.insert(*m, StrValue::new(s1, s2));
    }
    let checks: Vec<(Monomial, StrValue)> = functional.iter().map(|(m, v)| (*m, v.clone())).collect();
    let mismatches: Vec<Option<String>> = exec.map(&checks, |(m, v)| match str_eval(&Element::monomial(*m)) {
        Ok(e) if e == *v => None,
        Ok(e) => Some(format!("{m}: oracle {v}, evaluator {e}")),
        Err(err) => Some(format!("{m}: {err}")),
    });
    report.mismatches = mismatches.into_iter().flatten().collect();
    report.functional = Some(functional);
    Ok(report)
}

/// Parameter choice for a Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramParams {
    Numeric(CycNum, CycNum),
    Symbolic,
}

impl fmt::Display for GramParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramParams::Numeric(a, b) => write!(f, "{a},{b}"),
            GramParams::Symbolic => write!(f, "symbolic"),
        }
    }
}

/// Gram matrix of B(f, g) = str(fg) on a list of elements.
#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub degree_cap: Option<u32>,
    pub params: String,
    pub size: usize,
    pub rank: usize,
    pub nullity: usize,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<StrValue>>,
    /// Exact kernel basis for numeric parameters (empty for symbolic ones).
    pub nullspace: Vec<Vec<CycNum>>,
}

/// Generic rational points used for the symbolic rank.
const GENERIC_POINTS: [((i64, i64), (i64, i64)); 3] = [((3, 7), (11, 5)), ((-5, 13), (2, 9)), ((17, 3), (-19, 11))];

pub fn gram(basis: &[Element], params: &GramParams, exec: Exec) -> Result<GramReport> {
    let n = basis.len();
    let cells = exec.map_range(n * n, |k| str_eval(&basis[k / n].mul(&basis[k % n])));
    let mut entries = vec![Vec::with_capacity(n); n];
    for (k, v) in cells.into_iter().enumerate() {
        entries[k / n].push(v?);
    }
    let numeric = |s1: &CycNum, s2: &CycNum| {
        CycMatrix::from_rows(entries.iter().map(|row| row.iter().map(|v| v.eval(s1, s2)).collect()).collect())
    };
    let (rank, nullspace) = match params {
        GramParams::Numeric(s1, s2) => {
            let m = numeric(s1, s2);
            (m.rank(), m.nullspace())
        }
        GramParams::Symbolic => {
            let r1 = numeric(&CycNum::frac(GENERIC_POINTS[0].0 .0, GENERIC_POINTS[0].0 .1), &CycNum::frac(GENERIC_POINTS[0].1 .0, GENERIC_POINTS[0].1 .1)).rank();
            let r2 = numeric(&CycNum::frac(GENERIC_POINTS[1].0 .0, GENERIC_POINTS[1].0 .1), &CycNum::frac(GENERIC_POINTS[1].1 .0, GENERIC_POINTS[1].1 .1)).rank();
            let mut r = r1.max(r2);
            if r1 != r2 {
                let r3 = numeric(&CycNum::frac(GENERIC_POINTS[2].0 .0, GENERIC_POINTS[2].0 .1), &CycNum::frac(GENERIC_POINTS[2].1 .0, GENERIC_POINTS[2].1 .1)).rank();
                r = r.max(r3);
            }
            (r, Vec::new())
        }
    };
    Ok(GramReport {
        degree_cap: None,
        params: params.to_string(),
        size: n,
        rank,
        nullity: n - rank,
        labels: basis.iter().map(|b| b.to_string()).collect(),
        entries,
        nullspace,
    })
}

/// Gram report on all basis monomials of degree ≤ cap.
pub fn gram_up_to_degree(cap: u32, params: &GramParams, exec: Exec) -> Result<GramReport> {
    let basis: Vec<Element> = Monomial::up_to_degree(cap).into_iter().map(Element::monomial).collect();
    let mut report = gram(&basis, params, exec)?;
    report.degree_cap = Some(cap);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::m;

    #[test]
    fn anchors() {
        assert_eq!(str_eval(&Element::unit()).unwrap(), StrValue::frac((-1, 6), (1, 4)));
        assert_eq!(str_eval(&Element::group(GroupBasisElem::q(1))).unwrap(), StrValue::frac((1, 6), (1, 4)));
        assert_eq!(str_m_power(0, GroupBasisElem::q(0)), StrValue::frac((-1, 2), (-1, 4)));
        assert!(str_m_power(1, GroupBasisElem::q(0)).is_zero());
        assert!(str_m_power(3, GroupBasisElem::l(1)).is_zero());
        assert_eq!(str_eval(&Element::unit()).unwrap().to_string(), "-1/6*S1 + 1/4*S2");
    }

    #[test]
    fn series_constant_terms() {
        let s = series_ql(GroupBasisElem::q(1), 2);
        assert_eq!(s.coeffs[0], StrValue::frac((1, 6), (1, 4)));
        let total: StrValue = (0..3).map(|i| series_ql(GroupBasisElem::q(i), 0).coeffs[0].clone()).sum();
        assert_eq!(total, StrValue::frac((-1, 6), (1, 4)));
        assert!(series_ql(GroupBasisElem::q(0), 1).coeffs[1].is_zero());
    }

    #[test]
    fn x_yp_is_three_halves_of_unit() {
        let v = str_eval(&Element::x().mul(&Element::yp())).unwrap();
        assert_eq!(v, StrValue::frac((-1, 4), (3, 8)));
    }

    #[test]
    fn odd_and_l_vanish() {
        assert!(str_eval(&Element::x()).unwrap().is_zero());
        assert!(str_eval(&m().mul(&Element::group(GroupBasisElem::l(0)))).unwrap().is_zero());
    }

    #[test]
    fn oracle_cap_two() {
        let r = str_constraint_oracle(2, false, Exec::Sequential).unwrap();
        assert_eq!(r.kernel_dim, 2);
        assert!(r.agrees(), "{:?}", r.mismatches);
        let z = str_constraint_oracle(2, true, Exec::Sequential).unwrap();
        assert_eq!(z.kernel_dim, 0);
    }
}
