//! Dunkl operators on polynomials in x₁, x₂, x₃.
//!
//! Generators are used in the scaled form ãᵅᵢ = xᵢ + (−1)ᵅDᵢ, so that
//! commutators pick up a factor 2 and everything stays in ℚ(ω).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{m, Element};
use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::group::{k_from_lq, GroupAlgebraElem, GroupBasisElem, Perm, PermAlgebraElem};
use crate::par::Exec;
use crate::rational::Rational;

/// Exponents of x₁, x₂, x₃.
pub type Exps = [u32; 3];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exps, CycNum>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0])
    }

    pub fn monomial(e: Exps) -> Self {
        Self::term(e, CycNum::ONE)
    }

    pub fn term(e: Exps, c: CycNum) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// xᵢ for i ∈ {1, 2, 3}.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i - 1] = 1;
        Self::monomial(e)
    }

    pub fn add_term(&mut self, e: Exps, c: CycNum) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert(CycNum::ZERO);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &CycNum)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&CycNum::from_int(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// xᵢ·p.
    pub fn mul_var(&self, i: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i - 1] += 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// ∂p/∂xᵢ.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let k = e[i - 1];
            if k > 0 {
                let mut f = *e;
                f[i - 1] -= 1;
                out.add_term(f, c.scale(&Rational::from_int(k as i64)));
            }
        }
        out
    }

    /// Exact quotient and remainder of p by (xᵢ − xₗ), dividing as a polynomial in xᵢ.
    pub fn div_difference(&self, i: usize, l: usize) -> (Poly, Poly) {
        // group by the power of x_i: p = Σ c_k x_i^k with c_k free of x_i
        let mut by_power: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = *e;
            let k = std::mem::replace(&mut f[i - 1], 0);
            by_power.entry(k).or_default().add_term(f, c.clone());
        }
        let top = match by_power.keys().next_back() {
            Some(&k) => k,
            None => return (Poly::zero(), Poly::zero()),
        };
        // synthetic division at x_i = x_l: b_{k-1} = c_k + x_l·b_k
        let mut quotient = Poly::zero();
        let mut carry = Poly::zero();
        for k in (1..=top).rev() {
            let c = by_power.remove(&k).unwrap_or_default();
            carry = c.add(&carry.mul_var(l));
            for (e, v) in &carry.terms {
                let mut f = *e;
                f[i - 1] += k - 1;
                quotient.add_term(f, v.clone());
            }
        }
        let c0 = by_power.remove(&0).unwrap_or_default();
        let remainder = c0.add(&carry.mul_var(l));
        (quotient, remainder)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut word = Vec::new();
            for (v, &n) in e.iter().enumerate() {
                match n {
                    0 => {}
                    1 => word.push(format!("x{}", v + 1)),
                    _ => word.push(format!("x{}^{n}", v + 1)),
                }
            }
            let coef = c.to_string();
            let (neg, body) = match coef.strip_prefix('-') {
                Some(rest) if c.is_rational() => (true, rest.to_string()),
                _ => (false, coef),
            };
            let body = if c.is_rational() { body } else { format!("({body})") };
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            match (word.is_empty(), body == "1") {
                (true, _) => write!(f, "{body}")?,
                (false, true) => write!(f, "{}", word.join("*"))?,
                (false, false) => write!(f, "{body}*{}", word.join("*"))?,
            }
        }
        Ok(())
    }
}

/// All monomials of degree ≤ cap in three variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPolySpace {
    pub cap: u32,
    basis: Vec<Exps>,
}

impl TruncPolySpace {
    pub fn new(cap: u32) -> Self {
        let mut basis = Vec::new();
        for d in 0..=cap {
            for a in (0..=d).rev() {
                for b in (0..=d - a).rev() {
                    basis.push([a, b, d - a - b]);
                }
            }
        }
        TruncPolySpace { cap, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Exps] {
        &self.basis
    }
}

/// K_{ij}: swaps xᵢ and xⱼ.
pub fn apply_k(i: usize, j: usize, p: &Poly) -> Poly {
    assert!(i != j && (1..=3).contains(&i) && (1..=3).contains(&j), "K needs two distinct indices in 1..=3");
    Poly {
        terms: p
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = *e;
                f.swap(i - 1, j - 1);
                (f, c.clone())
            })
            .collect(),
    }
}

/// Dᵢ = ∂ᵢ + ν Σ_{l≠i} (xᵢ − xₗ)⁻¹(1 − K_{il}); the divisions are exact.
pub fn apply_dunkl(i: usize, nu: &Rational, p: &Poly) -> Result<Poly> {
    let mut out = p.derivative(i);
    if nu.is_zero() {
        return Ok(out);
    }
    let nu = CycNum::from_rational(nu.clone());
    for l in (1..=3).filter(|&l| l != i) {
        let diff = p.sub(&apply_k(i, l, p));
        let (q, r) = diff.div_difference(i, l);
        if !r.is_zero() {
            return Err(Sh3Error::IdentityViolated(format!("(1 - K{i}{l})({p}) leaves remainder {r}")));
        }
        out = out.add(&q.scale(&nu));
    }
    Ok(out)
}

/// ãᵅᵢ p = xᵢp + (−1)ᵅDᵢp.
pub fn apply_osc(i: usize, alpha: u8, nu: &Rational, p: &Poly) -> Result<Poly> {
    let d = apply_dunkl(i, nu, p)?;
    Ok(if alpha == 0 { p.mul_var(i).add(&d) } else { p.mul_var(i).sub(&d) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prim {
    MulVar(usize),
    Dunkl(usize, Rational),
    Swap(usize, usize),
}

impl Prim {
    fn shift(&self) -> i32 {
        match self {
            Prim::MulVar(_) => 1,
            Prim::Dunkl(..) => -1,
            Prim::Swap(..) => 0,
        }
    }

    fn apply(&self, p: &Poly) -> Result<Poly> {
        match self {
            Prim::MulVar(i) => Ok(p.mul_var(*i)),
            Prim::Dunkl(i, nu) => apply_dunkl(*i, nu, p),
            Prim::Swap(i, j) => Ok(apply_k(*i, *j, p)),
        }
    }
}

/// Linear combination of words in the primitive operators; a word
/// [A, B, C] means A∘B∘C, so C acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyOperator {
    words: Vec<(CycNum, Vec<Prim>)>,
}

impl PolyOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(CycNum::ONE)
    }

    pub fn scalar(c: CycNum) -> Self {
        PolyOperator { words: vec![(c, Vec::new())] }
    }

    fn prim(p: Prim) -> Self {
        PolyOperator { words: vec![(CycNum::ONE, vec![p])] }
    }

    pub fn mul_var(i: usize) -> Self {
        Self::prim(Prim::MulVar(i))
    }

    pub fn dunkl(i: usize, nu: &Rational) -> Self {
        Self::prim(Prim::Dunkl(i, nu.clone()))
    }

    pub fn k(i: usize, j: usize) -> Self {
        Self::prim(Prim::Swap(i, j))
    }

    /// ãᵅᵢ.
    pub fn osc(i: usize, alpha: u8, nu: &Rational) -> Self {
        let d = Self::dunkl(i, nu);
        let d = if alpha == 0 { d } else { d.scale(&CycNum::from_int(-1)) };
        Self::mul_var(i).add(&d)
    }

    pub fn perm(p: Perm) -> Self {
        match p {
            Perm::Id => Self::identity(),
            Perm::K12 => Self::k(1, 2),
            Perm::K13 => Self::k(1, 3),
            Perm::K23 => Self::k(2, 3),
            Perm::K12K13 => Self::k(1, 2).compose(&Self::k(1, 3)),
            Perm::K12K23 => Self::k(1, 2).compose(&Self::k(2, 3)),
        }
    }

    pub fn perm_algebra(e: &PermAlgebraElem) -> Self {
        Perm::ALL
            .iter()
            .zip(&e.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Self::zero(), |acc, (p, c)| acc.add(&Self::perm(*p).scale(c)))
    }

    /// Qᵢ or Lᵢ through its expansion in the K's.
    pub fn group(e: GroupBasisElem) -> Self {
        Self::perm_algebra(&k_from_lq(&GroupAlgebraElem::basis(e)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        words.extend(other.words.iter().cloned());
        PolyOperator { words }.simplified()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycNum::from_int(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        PolyOperator { words: self.words.iter().map(|(c, w)| (c * s, w.clone())).collect() }.simplified()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Self) -> Self {
        let mut words = Vec::with_capacity(self.words.len() * other.words.len());
        for (a, wa) in &self.words {
            for (b, wb) in &other.words {
                let mut w = wa.clone();
                w.extend(wb.iter().cloned());
                words.push((a * b, w));
            }
        }
        PolyOperator { words }.simplified()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).add(&other.compose(self))
    }

    fn simplified(self) -> Self {
        let mut merged: Vec<(CycNum, Vec<Prim>)> = Vec::new();
        for (c, w) in self.words {
            match merged.iter_mut().find(|(_, v)| *v == w) {
                Some((d, _)) => *d += &c,
                None => merged.push((c, w)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        PolyOperator { words: merged }
    }

    /// Largest intermediate degree increase over all words.
    pub fn raise(&self) -> u32 {
        self.words
            .iter()
            .map(|(_, w)| {
                let (mut run, mut best) = (0i32, 0i32);
                for p in w.iter().rev() {
                    run += p.shift();
                    best = best.max(run);
                }
                best as u32
            })
            .max()
            .unwrap_or(0)
    }

    /// Applies the operator inside `space`; inputs that could leave it are rejected.
    pub fn apply(&self, p: &Poly, space: &TruncPolySpace) -> Result<Poly> {
        if p.degree() + self.raise() > space.cap {
            return Err(Sh3Error::Domain(format!(
                "degree {} input with raise {} exceeds the cap {}",
                p.degree(),
                self.raise(),
                space.cap
            )));
        }
        let mut out = Poly::zero();
        for (c, w) in &self.words {
            let mut v = p.clone();
            for prim in w.iter().rev() {
                if v.is_zero() {
                    break;
                }
                v = prim.apply(&v)?;
            }
            out = out.add(&v.scale(c));
        }
        Ok(out)
    }
}

/// True iff A(p) = B(p) for every basis monomial p of `space` on which both
/// operators stay inside the space.
pub fn operator_equal(a: &PolyOperator, b: &PolyOperator, space: &TruncPolySpace, exec: Exec) -> Result<bool> {
    let raise = a.raise().max(b.raise());
    if raise > space.cap {
        return Err(Sh3Error::InvalidInput(format!("operators raise degree by {raise}, beyond the cap {}", space.cap)));
    }
    let domain: Vec<Exps> = space.basis().iter().filter(|e| e.iter().sum::<u32>() + raise <= space.cap).copied().collect();
    let results = exec.map(&domain, |e| {
        let p = Poly::monomial(*e);
        Ok::<bool, Sh3Error>(a.apply(&p, space)? == b.apply(&p, space)?)
    });
    let mut all = true;
    for r in results {
        all &= r?;
    }
    Ok(all)
}

/// (1 − K_{il})p is divisible by xᵢ − xₗ for every basis p and every i ≠ l.
pub fn division_exactness(space: &TruncPolySpace) -> bool {
    space.basis().iter().all(|e| {
        let p = Poly::monomial(*e);
        (1..=3).all(|i| {
            (1..=3).filter(|&l| l != i).all(|l| p.sub(&apply_k(i, l, &p)).div_difference(i, l).1.is_zero())
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DunklReport {
    pub check: String,
    pub nu: String,
    /// Inputs of degree ≤ input_cap are tested.
    pub input_cap: u32,
    pub relations: Vec<RelationCheck>,
    pub passed: bool,
    /// H applied to the constant polynomial (Hamiltonian check only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_of_one: Option<String>,
}

impl DunklReport {
    fn new(check: &str, nu: &Rational, input_cap: u32, relations: Vec<RelationCheck>) -> Self {
        let passed = relations.iter().all(|r| r.passed);
        DunklReport { check: check.into(), nu: nu.to_string(), input_cap, relations, passed, h_of_one: None }
    }

    /// Fails on the first violated relation.
    pub fn require(self) -> Result<Self> {
        match self.relations.iter().find(|r| !r.passed) {
            Some(r) => Err(Sh3Error::IdentityViolated(format!("{}: {}", self.check, r.relation))),
            None => Ok(self),
        }
    }
}

fn check(name: String, a: &PolyOperator, b: &PolyOperator, input_cap: u32, exec: Exec) -> Result<RelationCheck> {
    let space = TruncPolySpace::new(input_cap + a.raise().max(b.raise()));
    Ok(RelationCheck { relation: name, passed: operator_equal(a, b, &space, exec)? })
}

/// [ãᵅᵢ, ãᵝⱼ] = 2εᵅᵝ(δᵢⱼ(1 + ν Σ_{l≠i} K_{il}) − ν(1 − δᵢⱼ)K_{ij}) for all i, j, α, β.
pub fn exchange_relations(nu: &Rational, input_cap: u32, exec: Exec) -> Result<DunklReport> {
    let nu_c = CycNum::from_rational(nu.clone());
    let mut relations = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let mut rhs = if i == j {
                (1..=3)
                    .filter(|&l| l != i)
                    .fold(PolyOperator::identity(), |acc, l| acc.add(&PolyOperator::k(i, l).scale(&nu_c)))
            } else {
                PolyOperator::k(i, j).scale(&-nu_c.clone())
            };
            rhs = rhs.scale(&CycNum::from_int(2));
            for alpha in 0..2u8 {
                for beta in 0..2u8 {
                    let lhs = PolyOperator::osc(i, alpha, nu).commutator(&PolyOperator::osc(j, beta, nu));
                    let eps = crate::algebra::epsilon(alpha, beta);
                    let expected = rhs.scale(&CycNum::from_int(eps));
                    relations.push(check(format!("[a{alpha}_{i}, a{beta}_{j}]"), &lhs, &expected, input_cap, exec)?);
                }
            }
        }
    }
    Ok(DunklReport::new("exchange", nu, input_cap, relations))
}

/// H = ¼ Σᵢ {ã⁰ᵢ, ã¹ᵢ}.
pub fn hamiltonian(nu: &Rational) -> PolyOperator {
    (1..=3)
        .fold(PolyOperator::zero(), |acc, i| {
            acc.add(&PolyOperator::osc(i, 0, nu).anticommutator(&PolyOperator::osc(i, 1, nu)))
        })
        .scale(&CycNum::frac(1, 4))
}

/// [H, ãᵅᵢ] = −(−1)ᵅ ãᵅᵢ, and H applied to 1.
pub fn hamiltonian_report(nu: &Rational, input_cap: u32, exec: Exec) -> Result<DunklReport> {
    if input_cap < 2 {
        return Err(Sh3Error::InvalidInput("the Hamiltonian check needs cap >= 2".into()));
    }
    let h = hamiltonian(nu);
    let mut relations = Vec::new();
    for i in 1..=3 {
        for alpha in 0..2u8 {
            let a = PolyOperator::osc(i, alpha, nu);
            let sign = if alpha == 0 { -1 } else { 1 };
            relations.push(check(
                format!("[H, a{alpha}_{i}] = {}a{alpha}_{i}", if sign < 0 { "-" } else { "" }),
                &h.commutator(&a),
                &a.scale(&CycNum::from_int(sign)),
                input_cap,
                exec,
            )?);
        }
    }
    let mut report = DunklReport::new("hamiltonian", nu, input_cap, relations);
    let one = h.apply(&Poly::one(), &TruncPolySpace::new(h.raise()))?;
    report.h_of_one = Some(one.to_string());
    Ok(report)
}

pub fn hamiltonian_check(nu: &Rational, input_cap: u32, exec: Exec) -> Result<DunklReport> {
    hamiltonian_report(nu, input_cap, exec)?.require()
}

/// x̃ᵅ = ãᵅ₁ + ωãᵅ₂ + ω²ãᵅ₃ and ỹᵅ = ãᵅ₁ + ω²ãᵅ₂ + ωãᵅ₃ at ν = 0.
fn embedded_letter(x_type: bool, alpha: u8) -> PolyOperator {
    let nu = Rational::ZERO;
    (0..3).fold(PolyOperator::zero(), |acc, k| {
        let w = CycNum::omega_pow(if x_type { k } else { -k });
        acc.add(&PolyOperator::osc(k as usize + 1, alpha, &nu).scale(&w))
    })
}

/// Realizes an element f with all term degrees ≡ D mod 2 as 2^{D/2}·ρ(f),
/// where ρ sends each letter to its unscaled operator; a degree-d word then
/// contributes 2^{(D−d)/2} times its scaled image.
pub fn realize(f: &Element, top: u32) -> PolyOperator {
    let letter = |xp: bool, x_type: bool| embedded_letter(x_type, u8::from(xp));
    let mut out = PolyOperator::zero();
    for (mono, c) in f.terms() {
        let d = mono.degree();
        assert!(d <= top && (top - d).is_multiple_of(2), "term degree {d} does not match the realization degree {top}");
        let o = mono.osc;
        let mut word = PolyOperator::identity();
        for (n, xp, x_type) in [(o.xp, true, true), (o.yp, true, false), (o.x, false, true), (o.y, false, false)] {
            for _ in 0..n {
                word = word.compose(&letter(xp, x_type));
            }
        }
        word = word.compose(&PolyOperator::group(mono.group));
        let factor = Rational::from_int(2).pow((top - d) / 2);
        out = out.add(&word.scale(&c.scale(&factor)));
    }
    out
}

/// Every product of two generators of the abstract algebra, realized at ν = 0,
/// matches the realization of its normal form; plus the named commutators.
pub fn abstract_embedding_report(input_cap: u32, exec: Exec) -> Result<DunklReport> {
    if input_cap < 3 {
        return Err(Sh3Error::InvalidInput("the embedding check needs cap >= 3".into()));
    }
    let mut gens: Vec<(String, Element, u32)> = vec![
        ("x".into(), Element::x(), 1),
        ("y".into(), Element::y(), 1),
        ("xp".into(), Element::xp(), 1),
        ("yp".into(), Element::yp(), 1),
    ];
    for e in GroupBasisElem::ALL {
        gens.push((e.to_string(), Element::group(e), 0));
    }
    let mut relations = Vec::new();
    let named = [
        ("[x, yp] = 3", "x", "yp", Element::unit().scale(&CycNum::from_int(3))),
        ("[y, xp] = 3", "y", "xp", Element::unit().scale(&CycNum::from_int(3))),
        ("[x, xp] = 0", "x", "xp", Element::zero()),
        ("[y, yp] = 0", "y", "yp", Element::zero()),
        ("[x, y] = 0", "x", "y", Element::zero()),
        ("[xp, yp] = 0", "xp", "yp", Element::zero()),
    ];
    let find = |n: &str| gens.iter().find(|g| g.0 == n).unwrap().1.clone();
    for (name, a, b, value) in named {
        let lhs = realize(&find(a), 1).commutator(&realize(&find(b), 1));
        relations.push(check(name.to_string(), &lhs, &realize(&value, 2), input_cap, exec)?);
    }
    for (na, a, da) in &gens {
        for (nb, b, db) in &gens {
            let lhs = realize(a, *da).compose(&realize(b, *db));
            let rhs = realize(&a.mul(b), da + db);
            relations.push(check(format!("{na}*{nb} = {}", a.mul(b)), &lhs, &rhs, input_cap, exec)?);
        }
    }
    let mm = m();
    for e in GroupBasisElem::ALL {
        let g = Element::group(e);
        let lhs = realize(&g, 0).compose(&realize(&mm, 2));
        relations.push(check(format!("{e}*m = {}", g.mul(&mm)), &lhs, &realize(&g.mul(&mm), 2), input_cap, exec)?);
    }
    Ok(DunklReport::new("embedding", &Rational::ZERO, input_cap, relations))
}

pub fn abstract_embedding_check(input_cap: u32, exec: Exec) -> Result<DunklReport> {
    abstract_embedding_report(input_cap, exec)?.require()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn swaps() {
        let x1sq = Poly::monomial([2, 0, 0]);
        assert_eq!(apply_k(1, 2, &x1sq), Poly::monomial([0, 2, 0]));
        assert_eq!(apply_k(1, 2, &x(3)), x(3));
        let p = Poly::monomial([3, 1, 2]).add(&x(2));
        assert_eq!(apply_k(1, 2, &apply_k(1, 2, &p)), p);
    }

    #[test]
    fn dunkl_on_square() {
        let nu = Rational::new(1, 3);
        let got = apply_dunkl(1, &nu, &Poly::monomial([2, 0, 0])).unwrap();
        let n = CycNum::from_rational(nu.clone());
        let expected = x(1)
            .scale(&CycNum::from_int(2))
            .add(&x(1).add(&x(2)).scale(&n))
            .add(&x(1).add(&x(3)).scale(&n));
        assert_eq!(got, expected);
        assert_eq!(apply_dunkl(1, &Rational::ZERO, &x(1)).unwrap(), Poly::one());
        assert!(apply_dunkl(1, &nu, &Poly::one()).unwrap().is_zero());
    }

    #[test]
    fn division_is_exact_on_basis() {
        assert!(division_exactness(&TruncPolySpace::new(5)));
        let (_, r) = x(1).div_difference(1, 2);
        assert_eq!(r, x(2));
    }

    #[test]
    fn space_dimension() {
        assert_eq!(TruncPolySpace::new(4).dim(), 35);
    }

    #[test]
    fn operator_equality() {
        let space = TruncPolySpace::new(5);
        let k2 = PolyOperator::k(1, 2).compose(&PolyOperator::k(1, 2));
        assert!(operator_equal(&k2, &PolyOperator::identity(), &space, Exec::Sequential).unwrap());
        let nu = Rational::new(1, 2);
        let d12 = PolyOperator::dunkl(1, &nu).compose(&PolyOperator::dunkl(2, &nu));
        let d21 = PolyOperator::dunkl(2, &nu).compose(&PolyOperator::dunkl(1, &nu));
        assert!(operator_equal(&d12, &d21, &space, Exec::default()).unwrap());
        assert!(!operator_equal(&PolyOperator::mul_var(1), &PolyOperator::dunkl(1, &nu), &space, Exec::default()).unwrap());
    }

    #[test]
    fn raise_guard() {
        let a = PolyOperator::osc(1, 0, &Rational::ZERO);
        assert_eq!(a.raise(), 1);
        assert!(a.apply(&Poly::monomial([2, 0, 0]), &TruncPolySpace::new(2)).is_err());
        assert_eq!(a.apply(&Poly::one(), &TruncPolySpace::new(1)).unwrap(), x(1));
    }

    #[test]
    fn hamiltonian_of_constant() {
        let r = hamiltonian_check(&Rational::new(1, 2), 2, Exec::default()).unwrap();
        assert_eq!(r.h_of_one.as_deref(), Some("1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2"));
    }

    #[test]
    fn embedding_relations() {
        abstract_embedding_check(3, Exec::default()).unwrap();
    }

    #[test]
    fn exchange_at_half() {
        exchange_relations(&Rational::new(1, 2), 3, Exec::default()).unwrap().require().unwrap();
    }
}
