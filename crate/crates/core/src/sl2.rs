//! The adjoint sl₂ action of T⁰⁰, T⁰¹, T¹¹.
//!
//! The normal-ordered degree is not preserved by ad T (for instance
//! [T⁰⁰, x⁺y⁺] = 2x⁺y + 2y⁺x + 6), so slices are taken in the Weyl-symmetrized
//! basis: the slice of degree n is spanned by Sym(w)·E for commutative words
//! w of degree n and the six group elements E. The T's are quadratic and
//! commute with the group algebra, so on this basis ad T acts as a first-order
//! derivation of the oscillator word and preserves the degree exactly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Serialize, Serializer};

use crate::algebra::{superbracket, t, Element, Monomial, Osc};
use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::group::GroupBasisElem;
use crate::matrix::CycMatrix;
use crate::rational::{binomial, factorial, Rational};

/// The three sl₂ generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlGenerator {
    T00,
    T01,
    T11,
}

impl SlGenerator {
    pub const ALL: [SlGenerator; 3] = [SlGenerator::T00, SlGenerator::T01, SlGenerator::T11];

    pub fn element(self) -> Element {
        match self {
            SlGenerator::T00 => t(0, 0),
            SlGenerator::T01 => t(0, 1),
            SlGenerator::T11 => t(1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SlGenerator::T00 => "T00",
            SlGenerator::T01 => "T01",
            SlGenerator::T11 => "T11",
        }
    }
}

fn pair_weights(a: u32, d: u32, half_step: &Rational) -> Vec<Rational> {
    (0..=a.min(d))
        .map(|k| {
            let c = Rational::from_bigints(binomial(a, k) * binomial(d, k), 1.into()).unwrap();
            &(&c * &factorial(k)) * &half_step.pow(k)
        })
        .collect()
}

fn reorder(osc: Osc, step: Rational) -> Vec<(Osc, Rational)> {
    // pairs (x, y⁺) with exponents (a, d) and (y, x⁺) with exponents (c, b)
    let wk = pair_weights(osc.x, osc.yp, &step);
    let wl = pair_weights(osc.y, osc.xp, &step);
    let mut out = Vec::with_capacity(wk.len() * wl.len());
    for (k, ck) in wk.iter().enumerate() {
        for (l, cl) in wl.iter().enumerate() {
            let (k, l) = (k as u32, l as u32);
            out.push((Osc::new(osc.xp - l, osc.yp - k, osc.x - k, osc.y - l), ck * cl));
        }
    }
    out
}

/// Normal-ordered form of the Weyl-symmetrized commutative word.
pub fn sym_to_normal(osc: Osc) -> Vec<(Osc, Rational)> {
    reorder(osc, Rational::new(3, 2))
}

/// Expansion of a normal-ordered word in symmetrized words.
pub fn normal_to_sym(osc: Osc) -> Vec<(Osc, Rational)> {
    reorder(osc, Rational::new(-3, 2))
}

/// Sym(w)·E as an element.
pub fn symmetrized(m: Monomial) -> Element {
    sym_to_normal(m.osc)
        .into_iter()
        .map(|(o, c)| (Monomial::new(o, m.group), CycNum::from_rational(c)))
        .collect()
}

/// Coordinates of `f` in the symmetrized basis (labelled by the commutative word and group element).
pub fn symmetric_coords(f: &Element) -> BTreeMap<Monomial, CycNum> {
    let mut out: BTreeMap<Monomial, CycNum> = BTreeMap::new();
    for (m, c) in f.terms() {
        for (o, w) in normal_to_sym(m.osc) {
            let e = out.entry(Monomial::new(o, m.group)).or_insert(CycNum::ZERO);
            *e += &c.scale(&w);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Element with the given symmetric coordinates.
pub fn from_symmetric_coords(coords: &BTreeMap<Monomial, CycNum>) -> Element {
    let mut out = Element::zero();
    for (m, c) in coords {
        for (o, w) in sym_to_normal(m.osc) {
            out.add_term(Monomial::new(o, m.group), c.scale(&w));
        }
    }
    out
}

/// ad T acting on a commutative word, as a derivation:
/// T⁰⁰: x⁺ ↦ 2x, y⁺ ↦ 2y; T¹¹: x ↦ −2x⁺, y ↦ −2y⁺; T⁰¹: weight (creations − annihilations).
pub fn derivation(gen: SlGenerator, osc: Osc) -> Vec<(Osc, Rational)> {
    let mut out = Vec::new();
    match gen {
        SlGenerator::T01 => {
            let w = osc.sl2_weight();
            if w != 0 {
                out.push((osc, Rational::from_int(w)));
            }
        }
        SlGenerator::T00 => {
            if osc.xp > 0 {
                out.push((Osc { xp: osc.xp - 1, x: osc.x + 1, ..osc }, Rational::from_int(2 * osc.xp as i64)));
            }
            if osc.yp > 0 {
                out.push((Osc { yp: osc.yp - 1, y: osc.y + 1, ..osc }, Rational::from_int(2 * osc.yp as i64)));
            }
        }
        SlGenerator::T11 => {
            if osc.x > 0 {
                out.push((Osc { x: osc.x - 1, xp: osc.xp + 1, ..osc }, Rational::from_int(-2 * osc.x as i64)));
            }
            if osc.y > 0 {
                out.push((Osc { y: osc.y - 1, yp: osc.yp + 1, ..osc }, Rational::from_int(-2 * osc.y as i64)));
            }
        }
    }
    out
}

/// Degree-n slice: symmetrized words of degree n times all six group elements.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    pub degree: u32,
    pub basis: Vec<Monomial>,
}

impl GradedSlice {
    pub fn new(degree: u32) -> Self {
        GradedSlice { degree, basis: Monomial::of_degree(degree) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.binary_search(m).ok()
    }

    /// Element for a coordinate vector.
    pub fn element(&self, v: &[CycNum]) -> Element {
        let coords = self.basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c.clone())).collect();
        from_symmetric_coords(&coords)
    }

    /// Coordinate vector of `f`, or an error if `f` has components outside the slice.
    pub fn coords(&self, f: &Element) -> Result<Vec<CycNum>> {
        let mut v = vec![CycNum::ZERO; self.dim()];
        for (m, c) in symmetric_coords(f) {
            let i = self
                .index_of(&m)
                .ok_or_else(|| Sh3Error::InvalidInput(format!("component {m} is outside the degree-{} slice", self.degree)))?;
            v[i] = c;
        }
        Ok(v)
    }
}

/// Exact matrix of f ↦ [T, f] on the slice (columns are images of basis vectors).
pub fn ad_matrix(gen: SlGenerator, slice: &GradedSlice) -> CycMatrix {
    let n = slice.dim();
    let mut mat = CycMatrix::zeros(n, n);
    for (j, b) in slice.basis.iter().enumerate() {
        for (o, c) in derivation(gen, b.osc) {
            let i = slice.index_of(&Monomial::new(o, b.group)).expect("derivations preserve the slice");
            mat[(i, j)] = &mat[(i, j)] + &CycNum::from_rational(c);
        }
    }
    mat
}

/// Spin multiplicities of one slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicReport {
    pub degree: u32,
    /// Keyed by twice the spin.
    #[serde(serialize_with = "serialize_spins")]
    pub multiplicities: BTreeMap<u32, usize>,
}

/// "0", "1/2", "1", ... for twice-the-spin values.
pub fn spin_label(two_s: u32) -> String {
    if two_s.is_multiple_of(2) {
        (two_s / 2).to_string()
    } else {
        format!("{two_s}/2")
    }
}

fn serialize_spins<S: Serializer>(m: &BTreeMap<u32, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&spin_label(*k), v)?;
    }
    map.end()
}

impl IsotypicReport {
    pub fn multiplicity(&self, two_s: u32) -> usize {
        self.multiplicities.get(&two_s).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.multiplicities.iter().map(|(s, k)| k * (*s as usize + 1)).sum()
    }
}

impl fmt::Display for IsotypicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}:", self.degree)?;
        for (s, k) in &self.multiplicities {
            write!(f, " {k} x spin {}", spin_label(*s))?;
        }
        Ok(())
    }
}

/// Commutative words with `nx` x-type and `ny` y-type letters.
fn block_basis(nx: u32, ny: u32) -> Vec<Osc> {
    let mut out = Vec::new();
    for xp in 0..=nx {
        for yp in 0..=ny {
            out.push(Osc::new(xp, yp, nx - xp, ny - yp));
        }
    }
    out.sort();
    out
}

fn block_ad(gen: SlGenerator, basis: &[Osc]) -> CycMatrix {
    let n = basis.len();
    let mut mat = CycMatrix::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        for (o, c) in derivation(gen, *b) {
            let i = basis.binary_search(&o).expect("derivations preserve letter types");
            mat[(i, j)] = &mat[(i, j)] + &CycNum::from_rational(c);
        }
    }
    mat
}

/// Casimir ef + fe + h²/2 with e = ad T¹¹/2, f = −ad T⁰⁰/2, h = ad T⁰¹;
/// it acts as 2s(s+1) on spin s.
pub fn casimir(e_big: &CycMatrix, f_big: &CycMatrix, h: &CycMatrix) -> CycMatrix {
    let e = e_big.scale(&CycNum::frac(1, 2));
    let f = f_big.scale(&CycNum::frac(-1, 2));
    e.mul(&f).add(&f.mul(&e)).add(&h.mul(h).scale(&CycNum::frac(1, 2)))
}

/// Spin multiplicities of the degree-n slice from the Casimir kernels.
///
/// ad T preserves the numbers of x-type and y-type letters and ignores the
/// group element, so the Casimir is diagonalised block by block and the
/// counts are multiplied by six.
pub fn isotypic_decompose(slice: &GradedSlice) -> IsotypicReport {
    let n = slice.degree;
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    for nx in 0..=n {
        let ny = n - nx;
        let basis = block_basis(nx, ny);
        let dim = basis.len();
        let c = casimir(
            &block_ad(SlGenerator::T11, &basis),
            &block_ad(SlGenerator::T00, &basis),
            &block_ad(SlGenerator::T01, &basis),
        );
        let mut seen = 0;
        for two_s in 0..=n {
            // 2s(s+1) = two_s·(two_s + 2)/2
            let lambda = CycNum::frac((two_s * (two_s + 2)) as i64, 2);
            let shifted = c.add(&CycMatrix::identity(dim).scale(&-lambda));
            let kernel = dim - shifted.rank();
            if kernel > 0 {
                let copies = kernel / (two_s as usize + 1);
                *mult.entry(two_s).or_insert(0) += 6 * copies;
                seen += kernel;
            }
        }
        debug_assert_eq!(seen, dim);
    }
    IsotypicReport { degree: n, multiplicities: mult }
}

/// Cached data for projecting the (k, k) block onto its invariant line.
struct SingletBlock {
    basis: Vec<Osc>,
    /// Functional vanishing on the ad-image, normalized to 1 on the invariant.
    functional: Vec<CycNum>,
    /// Normal-ordered form of the invariant Sym((x⁺y − y⁺x)^k).
    invariant: Vec<(Osc, Rational)>,
}

fn invariant_coords(k: u32, basis: &[Osc]) -> Vec<CycNum> {
    // (x⁺y − y⁺x)^k = Σ_j C(k,j) (x⁺y)^j (−y⁺x)^(k−j), commutatively
    let mut v = vec![CycNum::ZERO; basis.len()];
    for j in 0..=k {
        let o = Osc::new(j, k - j, k - j, j);
        let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
        let c = Rational::from_bigints(binomial(k, j) * sign, 1.into()).unwrap();
        let i = basis.binary_search(&o).unwrap();
        v[i] = CycNum::from_rational(c);
    }
    v
}

fn singlet_block(k: u32) -> Arc<SingletBlock> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<SingletBlock>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&k) {
        return b.clone();
    }
    let basis = block_basis(k, k);
    let images = SlGenerator::ALL
        .iter()
        .map(|g| block_ad(*g, &basis))
        .reduce(|a, b| a.hstack(&b))
        .unwrap();
    let left_kernel = images.transpose().nullspace();
    assert_eq!(left_kernel.len(), 1, "exactly one invariant in the balanced block");
    let inv = invariant_coords(k, &basis);
    let mut functional = left_kernel.into_iter().next().unwrap();
    let at_inv: CycNum = functional.iter().zip(&inv).map(|(a, b)| a * b).sum();
    let scale = at_inv.inverse().expect("invariant is not in the ad-image");
    for c in functional.iter_mut() {
        *c = &*c * &scale;
    }
    let mut invariant = BTreeMap::<Osc, Rational>::new();
    for (o, c) in basis.iter().zip(&inv) {
        if c.is_zero() {
            continue;
        }
        for (r, w) in sym_to_normal(*o) {
            *invariant.entry(r).or_insert(Rational::ZERO) += &(&c.one * &w);
        }
    }
    let invariant = invariant.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let block = Arc::new(SingletBlock { basis, functional, invariant });
    cache.lock().unwrap_or_else(|e| e.into_inner()).insert(k, block.clone());
    block
}

/// Component of `f` in the sl₂-invariant subspace.
///
/// Per slice the space splits as (invariants) ⊕ (span of the ad images);
/// invariants only occur in the blocks with equally many x-type and y-type
/// letters, where they are spanned by Sym((x⁺y − y⁺x)^k).
pub fn singlet_project(f: &Element) -> Element {
    let coords = symmetric_coords(f);
    // (k, group) -> block coordinate vector
    let mut blocks: BTreeMap<(u32, GroupBasisElem), Vec<(Osc, CycNum)>> = BTreeMap::new();
    for (m, c) in coords {
        let nx = m.osc.x + m.osc.xp;
        let ny = m.osc.y + m.osc.yp;
        if nx == ny {
            blocks.entry((nx, m.group)).or_default().push((m.osc, c));
        }
    }
    let mut out = Element::zero();
    for ((k, g), entries) in blocks {
        let block = singlet_block(k);
        let mut value = CycNum::ZERO;
        for (o, c) in entries {
            let i = block.basis.binary_search(&o).unwrap();
            value += &(&block.functional[i] * &c);
        }
        if value.is_zero() {
            continue;
        }
        for (o, w) in &block.invariant {
            out.add_term(Monomial::new(*o, g), value.scale(w));
        }
    }
    out
}

/// True iff all three ad T annihilate `f`.
pub fn is_singlet(f: &Element) -> bool {
    SlGenerator::ALL.iter().all(|g| superbracket(&g.element(), f).is_zero())
}

/// Iterates h ↦ [T⁰⁰, h] and returns the last nonzero iterate.
pub fn highest_vector_ascend(h: &Element) -> Result<Element> {
    if h.is_zero() {
        return Err(Sh3Error::InvalidInput("highest_vector_ascend needs a nonzero element".into()));
    }
    let t00 = t(0, 0);
    let bound = 2 * h.degree() + 2;
    let mut cur = h.clone();
    for _ in 0..=bound {
        let next = superbracket(&t00, &cur);
        if next.is_zero() {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Sh3Error::Inconsistent(format!("ad T00 did not terminate within {bound} steps")))
}

/// Largest |creations − annihilations| over the terms of `f`.
pub fn max_abs_weight(f: &Element) -> u32 {
    f.terms().map(|(m, _)| m.osc.sl2_weight().unsigned_abs() as u32).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator, m};

    #[test]
    fn symmetrization_round_trip() {
        for osc in Osc::of_degree(4) {
            let mut back: BTreeMap<Osc, Rational> = BTreeMap::new();
            for (o, c) in sym_to_normal(osc) {
                for (r, w) in normal_to_sym(o) {
                    *back.entry(r).or_insert(Rational::ZERO) += &(&c * &w);
                }
            }
            back.retain(|_, c| !c.is_zero());
            assert_eq!(back.into_iter().collect::<Vec<_>>(), vec![(osc, Rational::ONE)]);
        }
    }

    #[test]
    fn half_of_antisymmetric_invariant_is_m() {
        let half = CycNum::frac(1, 2);
        let mut coords = BTreeMap::new();
        for q in 0..3 {
            coords.insert(Monomial::new(Osc::new(1, 0, 0, 1), GroupBasisElem::q(q)), half.clone());
            coords.insert(Monomial::new(Osc::new(0, 1, 1, 0), GroupBasisElem::q(q)), -&half);
        }
        assert_eq!(from_symmetric_coords(&coords), m());
    }

    #[test]
    fn degree_one_ad_matrices() {
        let s = GradedSlice::new(1);
        let f = ad_matrix(SlGenerator::T00, &s);
        let xp = s.index_of(&Monomial::new(Osc::new(1, 0, 0, 0), GroupBasisElem::q(0))).unwrap();
        let x = s.index_of(&Monomial::new(Osc::new(0, 0, 1, 0), GroupBasisElem::q(0))).unwrap();
        assert_eq!(f[(x, xp)], CycNum::from_int(2));
        assert!((0..s.dim()).all(|i| f[(i, x)].is_zero()));
        let zero = GradedSlice::new(0);
        assert!(ad_matrix(SlGenerator::T11, &zero).is_zero());
    }

    #[test]
    fn casimir_multiplicities_low_degrees() {
        let r0 = isotypic_decompose(&GradedSlice::new(0));
        assert_eq!(r0.multiplicity(0), 6);
        let r1 = isotypic_decompose(&GradedSlice::new(1));
        assert_eq!(r1.multiplicities, BTreeMap::from([(1, 12)]));
        let r2 = isotypic_decompose(&GradedSlice::new(2));
        assert_eq!(r2.multiplicity(0), 6);
        assert_eq!(r2.total_dim(), 60);
    }

    #[test]
    fn derivation_matches_algebra_bracket() {
        for gen in SlGenerator::ALL {
            let tg = gen.element();
            for n in 0..=3 {
                for b in Monomial::of_degree(n) {
                    let lhs = commutator(&tg, &symmetrized(b));
                    let rhs = derivation(gen, b.osc)
                        .into_iter()
                        .map(|(o, c)| symmetrized(Monomial::new(o, b.group)).scale_rational(&c))
                        .fold(Element::zero(), |a, e| a + e);
                    assert_eq!(lhs, rhs, "{} on {b}", gen.name());
                }
            }
        }
    }

    #[test]
    fn singlet_projection_examples() {
        assert_eq!(singlet_project(&m()), m());
        assert!(singlet_project(&Element::x()).is_zero());
        let xpy = Element::xp().mul(&Element::y());
        let p = singlet_project(&xpy);
        assert!(is_singlet(&p));
        assert_eq!(singlet_project(&p), p);
    }

    #[test]
    fn ascend_examples() {
        assert_eq!(highest_vector_ascend(&Element::xp()).unwrap(), Element::x().scale(&CycNum::from_int(2)));
        assert_eq!(highest_vector_ascend(&Element::x()).unwrap(), Element::x());
        assert_eq!(highest_vector_ascend(&m()).unwrap(), m());
        assert!(highest_vector_ascend(&Element::zero()).is_err());
    }
}
