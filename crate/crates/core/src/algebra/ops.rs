use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::cyclotomic::CycNum;
use crate::group::{tau_group, GroupBasisElem};
use crate::mpoly::MPolynomial;
use crate::rational::Rational;

use super::element::Element;
use super::monomial::{Monomial, Osc};
use super::product::{transport, weyl_product};

/// ε^{αβ}: ε⁰¹ = 1 = −ε¹⁰, zero on the diagonal.
pub fn epsilon(alpha: u8, beta: u8) -> i64 {
    match (alpha, beta) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// m = ½(x⁺y − y⁺x).
pub fn m() -> Element {
    let xpy = Element::xp().mul(&Element::y());
    let ypx = Element::yp().mul(&Element::x());
    (xpy - ypx).scale(&CycNum::frac(1, 2))
}

/// T^{αβ} = ⅓(x^α y^β + x^β y^α).
pub fn t(alpha: u8, beta: u8) -> Element {
    let a = Element::x_alpha(alpha).mul(&Element::y_alpha(beta));
    let b = Element::x_alpha(beta).mul(&Element::y_alpha(alpha));
    (a + b).scale(&CycNum::frac(1, 3))
}

/// Plain commutator fg − gf.
pub fn commutator(f: &Element, g: &Element) -> Element {
    f.mul(g) - g.mul(f)
}

/// Graded bracket fg − (−1)^{π(f)π(g)} gf, extended bilinearly over the parity split.
pub fn superbracket(f: &Element, g: &Element) -> Element {
    let (f0, f1) = f.split_parity();
    let (g0, g1) = g.split_parity();
    let mut out = Element::zero();
    for (fp, p) in [(&f0, 0), (&f1, 1)] {
        if fp.is_zero() {
            continue;
        }
        for (gq, q) in [(&g0, 0), (&g1, 1)] {
            if gq.is_zero() {
                continue;
            }
            let fg = fp.mul(gq);
            let gf = gq.mul(fp);
            out = if p * q == 1 { out + fg + gf } else { out + fg - gf };
        }
    }
    out
}

/// τ of a single basis word: τ((x⁺)^b(y⁺)^d x^a y^c E) = τ(E)(x⁺)^c(y⁺)^a x^d y^b,
/// with τ(E) then transported to the right.
pub fn tau_monomial(mono: &Monomial) -> Monomial {
    let o = mono.osc;
    let word = Osc::new(o.y, o.x, o.yp, o.xp);
    let (osc, group) = transport(tau_group(mono.group), word);
    Monomial::new(osc, group)
}

/// The antiautomorphism τ: x ↦ y⁺, x⁺ ↦ y, y ↦ x⁺, y⁺ ↦ x, L_i ↦ L_{−i}.
pub fn tau(f: &Element) -> Element {
    f.terms().map(|(m, c)| (tau_monomial(m), c.clone())).collect()
}

/// Gradings of an element; `None` entries mean the element is not homogeneous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gradings {
    pub parity: Option<u8>,
    pub rho: Option<u8>,
    pub m_weight: Option<Rational>,
}

impl fmt::Display for Gradings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |o: Option<String>| o.unwrap_or_else(|| "mixed".to_string());
        let parity = self.parity.map(|p| if p == 0 { "even".to_string() } else { "odd".to_string() });
        write!(
            f,
            "({}, {}, {})",
            show(parity),
            show(self.rho.map(|r| r.to_string())),
            show(self.m_weight.as_ref().map(|w| w.to_string()))
        )
    }
}

fn common<T: PartialEq + Clone>(mut it: impl Iterator<Item = Option<T>>) -> Option<T> {
    let first = it.next()??;
    for v in it {
        if v.as_ref() != Some(&first) {
            return None;
        }
    }
    Some(first)
}

/// Parity, ρ-grade, and ad m weight (defined when every term carries a Q).
pub fn gradings(f: &Element) -> Gradings {
    if f.is_zero() {
        return Gradings { parity: Some(0), rho: Some(0), m_weight: Some(Rational::ZERO) };
    }
    Gradings {
        parity: common(f.terms().map(|(m, _)| Some(m.parity()))),
        rho: common(f.terms().map(|(m, _)| Some(m.rho()))),
        m_weight: common(f.terms().map(|(m, _)| {
            m.group.is_q().then(|| Rational::new(3 * m.osc.xy_balance(), 2))
        })),
    }
}

/// Oscillator part of m^n, cached (m^n itself is this times the unit).
fn m_power_osc(n: usize) -> Vec<(Osc, Rational)> {
    static CACHE: OnceLock<Mutex<Vec<Vec<(Osc, Rational)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![vec![(Osc::ONE, Rational::ONE)]]));
    let mut powers = cache.lock().unwrap_or_else(|e| e.into_inner());
    let half = Rational::new(1, 2);
    let m_osc = [(Osc::new(1, 0, 0, 1), half.clone()), (Osc::new(0, 1, 1, 0), -half)];
    while powers.len() <= n {
        let last = powers.last().unwrap();
        let mut acc: std::collections::BTreeMap<Osc, Rational> = Default::default();
        for (o, c) in last {
            for (mo, mc) in &m_osc {
                for (r, w) in weyl_product(*o, *mo) {
                    let e = acc.entry(r).or_insert(Rational::ZERO);
                    *e += &(&(c * mc) * &w);
                }
            }
        }
        let next = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        powers.push(next);
    }
    powers[n].clone()
}

/// m^n · E.
pub fn m_power_times(n: usize, e: GroupBasisElem) -> Element {
    m_power_osc(n)
        .into_iter()
        .map(|(o, c)| (Monomial::new(o, e), CycNum::from_rational(c)))
        .collect()
}

/// m^n as an element.
pub fn m_power(n: usize) -> Element {
    GroupBasisElem::ALL[..3].iter().fold(Element::zero(), |acc, &q| acc + m_power_times(n, q))
}

/// φ(m) · E.
pub fn mpoly_times(phi: &MPolynomial, e: GroupBasisElem) -> Element {
    let mut out = Element::zero();
    for (n, c) in phi.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, w) in m_power_osc(n) {
            out.add_term(Monomial::new(o, e), c.scale(&w));
        }
    }
    out
}

/// Σᵢ φᵢ(m)·Eᵢ.
pub fn from_m_polynomials(parts: &[(MPolynomial, GroupBasisElem)]) -> Element {
    parts.iter().fold(Element::zero(), |acc, (p, e)| acc + mpoly_times(p, *e))
}

/// Writes `f` as Σ φ_E(m)·E over all six group elements, or `None` when `f`
/// is not in the span of {mⁿ·E}. Entries with φ_E = 0 are omitted.
///
/// The top-degree part of mⁿE is (½)ⁿ(x⁺y − y⁺x)ⁿE, whose (x⁺)ⁿyⁿ coefficient
/// is 2⁻ⁿ, so coefficients are peeled off from the top degree downwards.
pub fn as_m_polynomial(f: &Element) -> Option<Vec<(MPolynomial, GroupBasisElem)>> {
    let mut out = Vec::new();
    for e in GroupBasisElem::ALL {
        let mut rest = f.group_part(e);
        if rest.is_zero() {
            continue;
        }
        let mut coeffs: Vec<CycNum> = Vec::new();
        while !rest.is_zero() {
            let d = rest.degree();
            if d % 2 == 1 {
                return None;
            }
            let n = (d / 2) as usize;
            let lead = rest.coeff(&Monomial::new(Osc::new(n as u32, 0, 0, n as u32), e));
            if lead.is_zero() {
                return None;
            }
            let c = lead.scale(&Rational::from_int(2).pow(n as u32));
            if coeffs.len() <= n {
                coeffs.resize(n + 1, CycNum::ZERO);
            }
            coeffs[n] = c.clone();
            rest = rest - m_power_times(n, e).scale(&c);
            if rest.degree() >= d && !rest.is_zero() {
                return None;
            }
        }
        out.push((MPolynomial::from_coeffs(coeffs), e));
    }
    Some(out)
}
