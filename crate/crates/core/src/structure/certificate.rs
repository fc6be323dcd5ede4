//! Constructive simplicity certificates.
//!
//! Every step records how its output is obtained from earlier outputs by
//! explicit multiplications, brackets, singlet projections and linear
//! combinations, so each output lies in the two-sided ideal generated by the
//! seed. The singlet projection qualifies because on every finite-dimensional
//! ad-invariant subspace it is a polynomial in the Casimir, hence a
//! combination of iterated brackets with the T's.

use serde::{Deserialize, Serialize};

use crate::algebra::{as_m_polynomial, m, mpoly_times, superbracket, t, Element};
use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::group::GroupBasisElem;
use crate::mpoly::MPolynomial;
use crate::random::{random_monomial, rng};
use crate::rational::Rational;
use crate::sl2::singlet_project;

pub const CERTIFICATE_FORMAT: u32 = 1;

/// Bound on the randomized retries of the first phase.
pub const MAX_RETRIES: usize = 100;

/// Constant c in singlet_project(y³·φ(m)Qᵢ·(x⁺)³) = c(m+3/2)(m+3)(m+9/2)·φ(m+9/2)·Qᵢ.
pub const SHIFT_CONSTANT: i64 = 2;

const MAX_ROUNDS: usize = 64;

/// c(m+3/2)(m+3)(m+9/2).
pub fn shift_polynomial() -> MPolynomial {
    [Rational::new(3, 2), Rational::from_int(3), Rational::new(9, 2)]
        .into_iter()
        .fold(MPolynomial::constant(CycNum::from_int(SHIFT_CONSTANT)), |p, r| p.mul(&MPolynomial::linear(r)))
}

/// singlet_project(y³·f·(x⁺)³).
pub fn cube_contraction(f: &Element) -> Element {
    singlet_project(&Element::y().pow(3).mul(f).mul(&Element::xp().pow(3)))
}

/// The singlet projection computed as Π_{s>0} (C − 2s(s+1)) / (−2s(s+1))
/// with the Casimir C applied through iterated brackets.
pub fn casimir_singlet(f: &Element) -> Element {
    let (t00, t01, t11) = (t(0, 0), t(0, 1), t(1, 1));
    let ad = |g: &Element, v: &Element| superbracket(g, v);
    let casimir = |v: &Element| -> Element {
        let ef_fe = ad(&t11, &ad(&t00, v)) + ad(&t00, &ad(&t11, v));
        let hh = ad(&t01, &ad(&t01, v));
        ef_fe.scale(&CycNum::frac(-1, 4)) + hh.scale(&CycNum::frac(1, 2))
    };
    let mut v = f.clone();
    for two_s in 1..=f.degree() as i64 {
        if v.is_zero() {
            break;
        }
        let lambda = CycNum::frac(two_s * (two_s + 2), 2);
        let shifted = casimir(&v) - v.scale(&lambda);
        v = shifted.scale(&(-lambda).inverse().expect("nonzero eigenvalue"));
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Seed,
    Ascend,
    Descend,
    Symmetrize,
    Transport,
    ShiftReduce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombineTerm {
    pub left: Element,
    pub input: usize,
    pub right: Element,
}

/// How a step's output is computed from earlier outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StepOp {
    Seed,
    RightMul { input: usize, factor: Element },
    LeftMul { input: usize, factor: Element },
    Sandwich { input: usize, left: Element, right: Element },
    /// [with, input}.
    Bracket { input: usize, with: Element },
    Singlet { input: usize },
    /// ½(m·F + F·m).
    Symmetrize { input: usize },
    /// Σ left·output[input]·right.
    Combine { terms: Vec<CombineTerm> },
}

impl StepOp {
    fn inputs(&self) -> Vec<usize> {
        match self {
            StepOp::Seed => Vec::new(),
            StepOp::RightMul { input, .. }
            | StepOp::LeftMul { input, .. }
            | StepOp::Sandwich { input, .. }
            | StepOp::Bracket { input, .. }
            | StepOp::Singlet { input }
            | StepOp::Symmetrize { input } => vec![*input],
            StepOp::Combine { terms } => terms.iter().map(|t| t.input).collect(),
        }
    }

    fn evaluate(&self, seed: &Element, outputs: &[Element], singlet: impl Fn(&Element) -> Element) -> Element {
        match self {
            StepOp::Seed => seed.clone(),
            StepOp::RightMul { input, factor } => outputs[*input].mul(factor),
            StepOp::LeftMul { input, factor } => factor.mul(&outputs[*input]),
            StepOp::Sandwich { input, left, right } => left.mul(&outputs[*input]).mul(right),
            StepOp::Bracket { input, with } => superbracket(with, &outputs[*input]),
            StepOp::Singlet { input } => singlet(&outputs[*input]),
            StepOp::Symmetrize { input } => {
                let (f, m) = (&outputs[*input], m());
                (m.mul(f) + f.mul(&m)).scale(&CycNum::frac(1, 2))
            }
            StepOp::Combine { terms } => {
                terms.iter().fold(Element::zero(), |acc, t| acc + t.left.mul(&outputs[t.input]).mul(&t.right))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateStep {
    pub index: usize,
    pub rule: Rule,
    pub op: StepOp,
    pub output: Element,
    pub justification: String,
}

/// Monic φᵢ with φᵢ(m)Qᵢ known to lie in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiSnapshot {
    pub round: usize,
    pub stage: String,
    pub phi: Vec<MPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityCertificate {
    pub format_version: u32,
    pub seed: Element,
    pub rng_seed: u64,
    /// Number of randomized restarts before the pipeline went through.
    pub retries: usize,
    pub steps: Vec<CertificateStep>,
    pub phi_trail: Vec<PhiSnapshot>,
    pub final_element: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    /// s with φ₀(m) = s·φ₀(−m).
    pub phi0_sign: i8,
    /// s with φ₁(m) = s·φ₂(−m).
    pub phi12_sign: i8,
}

fn sign_relating(a: &MPolynomial, b: &MPolynomial) -> Option<i8> {
    if a == b {
        Some(1)
    } else if *a == b.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Checks φ₀(m) = ±φ₀(−m) and φ₁(m) = ±φ₂(−m).
pub fn phi_parity_check(phi0: &MPolynomial, phi1: &MPolynomial, phi2: &MPolynomial) -> Result<ParityReport> {
    if phi0.is_zero() || phi1.is_zero() || phi2.is_zero() {
        return Err(Sh3Error::InvalidInput("generators must be nonzero".into()));
    }
    let phi0_sign = sign_relating(phi0, &phi0.reflect())
        .ok_or_else(|| Sh3Error::IdentityViolated(format!("φ0 = {phi0} is neither even nor odd")))?;
    let phi12_sign = sign_relating(phi1, &phi2.reflect())
        .ok_or_else(|| Sh3Error::IdentityViolated(format!("φ1 = {phi1} is not ±φ2(−m) for φ2 = {phi2}")))?;
    Ok(ParityReport { phi0_sign, phi12_sign })
}

fn q(i: i64) -> GroupBasisElem {
    GroupBasisElem::q(i)
}

fn l(i: i64) -> GroupBasisElem {
    GroupBasisElem::l(i)
}

/// `f` as Σ φ_E(m)·E restricted to the listed group elements, or `None`.
fn m_parts(f: &Element, allowed: &[GroupBasisElem]) -> Option<Vec<MPolynomial>> {
    let parts = as_m_polynomial(f)?;
    let mut out = vec![MPolynomial::zero(); allowed.len()];
    for (p, e) in parts {
        let k = allowed.iter().position(|a| *a == e)?;
        out[k] = p;
    }
    Some(out)
}

enum Failure {
    /// Try the next multiplier or restart.
    Retry(String),
    Hard(Sh3Error),
}

impl From<Sh3Error> for Failure {
    fn from(e: Sh3Error) -> Self {
        Failure::Hard(e)
    }
}

fn hard(msg: String) -> Failure {
    Failure::Hard(Sh3Error::Certificate(msg))
}

struct Builder {
    seed: Element,
    steps: Vec<CertificateStep>,
    outputs: Vec<Element>,
    trail: Vec<PhiSnapshot>,
}

impl Builder {
    fn new(seed: &Element) -> Self {
        let mut b = Builder { seed: seed.clone(), steps: Vec::new(), outputs: Vec::new(), trail: Vec::new() };
        b.push(Rule::Seed, StepOp::Seed, "generator of the ideal");
        b
    }

    fn push(&mut self, rule: Rule, op: StepOp, justification: &str) -> usize {
        let output = op.evaluate(&self.seed, &self.outputs, singlet_project);
        let index = self.steps.len();
        self.outputs.push(output.clone());
        self.steps.push(CertificateStep { index, rule, op, output, justification: justification.to_string() });
        index
    }

    fn truncate(&mut self, len: usize) {
        self.steps.truncate(len);
        self.outputs.truncate(len);
    }

    fn out(&self, i: usize) -> &Element {
        &self.outputs[i]
    }

    fn snapshot(&mut self, round: usize, stage: &str, phi: &[MPolynomial; 3]) {
        self.trail.push(PhiSnapshot { round, stage: stage.to_string(), phi: phi.to_vec() });
    }

    /// Phase 1: right multiplication onto the Q₀/L₀ column with a nonzero Q₀ part.
    fn column(&mut self, start: usize) -> Result<usize, Failure> {
        let (x, y) = (Element::x(), Element::y());
        let (q0, l0) = (Element::group(q(0)), Element::group(l(0)));
        let candidates = [q0.clone(), l0.clone(), x.mul(&q0), x.mul(&l0), y.mul(&q0), y.mul(&l0)];
        for factor in candidates {
            if self.out(start).mul(&factor).group_part(q(0)).is_zero() {
                continue;
            }
            let len = self.steps.len();
            let idx = self.push(
                Rule::Descend,
                StepOp::RightMul { input: start, factor },
                "right multiplication leaves only Q0 and L0 columns",
            );
            match self.singlet_column(idx) {
                Ok(found) => return Ok(found),
                Err(Failure::Retry(_)) => self.truncate(len),
                Err(e) => return Err(e),
            }
        }
        Err(Failure::Retry("no right multiplier gives a usable Q0 column".into()))
    }

    /// Phase 2: ascend with ad T⁰⁰, then multiply by (y⁺)ⁿ(x⁺)ᵏ⁻ⁿ and
    /// project to the singlet part f₀(m)Q₀ + g₀(m)L₀ with f₀ ≠ 0.
    fn singlet_column(&mut self, start: usize) -> Result<usize, Failure> {
        let t00 = t(0, 0);
        let mut h = start;
        for _ in 0..=2 * self.out(start).degree() + 2 {
            if superbracket(&t00, self.out(h)).group_part(q(0)).is_zero() {
                break;
            }
            h = self.push(
                Rule::Ascend,
                StepOp::Bracket { input: h, with: t00.clone() },
                "ad T00 keeps the Q0 and L0 columns",
            );
        }
        let top = self.out(h).degree();
        let (xp, yp) = (Element::xp(), Element::yp());
        for k in 0..=top + 2 {
            for n in 0..=k {
                let u = yp.pow(n).mul(&xp.pow(k - n));
                let lifted = u.mul(self.out(h));
                if singlet_project(&lifted.group_part(q(0))).is_zero() {
                    continue;
                }
                let idx = self.push(
                    Rule::Ascend,
                    StepOp::LeftMul { input: h, factor: u },
                    "creation monomial pairing with the extremal vector",
                );
                let idx = self.push(
                    Rule::Ascend,
                    StepOp::Singlet { input: idx },
                    "singlet projection is a polynomial in the Casimir",
                );
                if m_parts(self.out(idx), &[q(0), l(0)]).is_none() {
                    return Err(hard(format!("singlet {} is not f(m)Q0 + g(m)L0", self.out(idx))));
                }
                return Ok(idx);
            }
        }
        Err(Failure::Retry("no creation monomial produced a singlet in the Q0 column".into()))
    }

    /// Phase 3: remove the L₀ part.
    fn kill_l0(&mut self, idx: usize) -> Result<(usize, MPolynomial), Failure> {
        let parts = m_parts(self.out(idx), &[q(0), l(0)]).expect("checked in phase 2");
        if parts[1].is_zero() {
            return Ok((idx, parts[0].clone()));
        }
        let s = self.push(
            Rule::Symmetrize,
            StepOp::Symmetrize { input: idx },
            "m commutes with Q0 and anticommutes with L0",
        );
        let parts = m_parts(self.out(s), &[q(0)]).ok_or_else(|| hard(format!("{} is not f(m)Q0", self.out(s))))?;
        Ok((s, parts[0].clone()))
    }

    fn monic(&mut self, idx: usize, phi: &MPolynomial) -> (usize, MPolynomial) {
        let lead = phi.leading();
        if lead.is_one() {
            return (idx, phi.clone());
        }
        let inv = lead.inverse().expect("nonzero");
        let unit = Element::unit();
        let out = self.push(
            Rule::ShiftReduce,
            StepOp::Combine { terms: vec![CombineTerm { left: unit.scale(&inv), input: idx, right: unit }] },
            "normalize to a monic generator",
        );
        (out, phi.monic())
    }

    /// Phase 4: move f₀(m)Q₀ to the Q₁ and Q₂ columns.
    fn transport(&mut self, idx0: usize) -> Result<[usize; 2], Failure> {
        let mut out = [0; 2];
        for (k, (left, right, i)) in
            [(Element::yp(), Element::x(), 1), (Element::xp(), Element::y(), 2)].into_iter().enumerate()
        {
            let s = self.push(
                Rule::Transport,
                StepOp::Sandwich { input: idx0, left, right },
                "Q0 x = x Q1 and Q0 y = y Q2",
            );
            let p = self.push(
                Rule::Transport,
                StepOp::Singlet { input: s },
                "singlet projection is a polynomial in the Casimir",
            );
            let parts = m_parts(self.out(p), &[q(i)]).ok_or_else(|| hard(format!("{} is not f(m)Q{i}", self.out(p))))?;
            if parts[0].is_zero() {
                return Err(hard(format!("transport to Q{i} vanished")));
            }
            out[k] = p;
        }
        Ok(out)
    }

    /// Replaces φ (at `a`) by gcd(φ, ψ) using ψ(m)Qᵢ at `b`.
    fn gcd_into(&mut self, a: usize, phi: &MPolynomial, b: usize, psi: &MPolynomial, i: i64) -> (usize, MPolynomial) {
        let (g, s, tt) = phi.ext_gcd(psi);
        if g == *phi {
            return (a, g);
        }
        let unit = Element::unit();
        let idx = self.push(
            Rule::ShiftReduce,
            StepOp::Combine {
                terms: vec![
                    CombineTerm { left: mpoly_times(&s, q(i)), input: a, right: unit.clone() },
                    CombineTerm { left: mpoly_times(&tt, q(i)), input: b, right: unit },
                ],
            },
            "Bezout combination gives the gcd",
        );
        (idx, g)
    }

    fn expect_poly(&self, idx: usize, i: i64, expected: &MPolynomial) -> Result<(), Failure> {
        match m_parts(self.out(idx), &[q(i)]) {
            Some(p) if p[0] == *expected => Ok(()),
            _ => Err(hard(format!("step {idx}: expected ({expected})*Q{i}, got {}", self.out(idx)))),
        }
    }

    /// The gcd loop in the three ℂ[m]-ideals, then the unit.
    fn reduce(&mut self, mut idx: [usize; 3], mut phi: [MPolynomial; 3]) -> Result<usize, Failure> {
        let p = shift_polynomial();
        let shift = Rational::new(9, 2);
        self.snapshot(0, "start", &phi);
        let mut round = 0;
        while phi.iter().any(|f| !f.is_one()) {
            round += 1;
            if round > MAX_ROUNDS {
                return Err(hard(format!("no convergence after {MAX_ROUNDS} rounds")));
            }
            let before: usize = phi.iter().map(|f| f.degree().unwrap_or(0)).sum();

            if !phi[0].is_one() {
                let l0 = Element::group(l(0));
                let r = self.push(
                    Rule::Transport,
                    StepOp::Sandwich { input: idx[0], left: l0.clone(), right: l0 },
                    "L0 f(m) Q0 L0 = f(-m) Q0",
                );
                let refl = phi[0].reflect();
                self.expect_poly(r, 0, &refl)?;
                (idx[0], phi[0]) = self.gcd_into(idx[0], &phi[0].clone(), r, &refl, 0);
            }
            if !phi[1].is_one() || !phi[2].is_one() {
                let (l1, l2) = (Element::group(l(1)), Element::group(l(2)));
                let r12 = self.push(
                    Rule::Transport,
                    StepOp::Sandwich { input: idx[1], left: l1.clone(), right: l2.clone() },
                    "L1 f(m) Q1 L2 = f(-m) Q2",
                );
                let r21 = self.push(
                    Rule::Transport,
                    StepOp::Sandwich { input: idx[2], left: l2, right: l1 },
                    "L2 f(m) Q2 L1 = f(-m) Q1",
                );
                let (refl1, refl2) = (phi[1].reflect(), phi[2].reflect());
                self.expect_poly(r12, 2, &refl1)?;
                self.expect_poly(r21, 1, &refl2)?;
                (idx[1], phi[1]) = self.gcd_into(idx[1], &phi[1].clone(), r21, &refl2, 1);
                (idx[2], phi[2]) = self.gcd_into(idx[2], &phi[2].clone(), r12, &refl1, 2);
            }
            phi_parity_check(&phi[0], &phi[1], &phi[2]).map_err(Failure::Hard)?;
            self.snapshot(round, "reflect", &phi);

            for i in 0..3 {
                if phi[i].is_one() {
                    continue;
                }
                let s = self.push(
                    Rule::ShiftReduce,
                    StepOp::Sandwich { input: idx[i], left: Element::y().pow(3), right: Element::xp().pow(3) },
                    "cube contraction",
                );
                let c = self.push(
                    Rule::ShiftReduce,
                    StepOp::Singlet { input: s },
                    "singlet projection is a polynomial in the Casimir",
                );
                let shifted = p.mul(&phi[i].shift(&shift));
                self.expect_poly(c, i as i64, &shifted)?;
                (idx[i], phi[i]) = self.gcd_into(idx[i], &phi[i].clone(), c, &shifted, i as i64);
            }
            self.snapshot(round, "shift", &phi);

            let after: usize = phi.iter().map(|f| f.degree().unwrap_or(0)).sum();
            if after >= before {
                return Err(hard(format!("round {round} did not lower the generator degrees")));
            }
        }
        let unit = Element::unit();
        let fin = self.push(
            Rule::ShiftReduce,
            StepOp::Combine {
                terms: idx.iter().map(|&k| CombineTerm { left: unit.clone(), input: k, right: unit.clone() }).collect(),
            },
            "Q0 + Q1 + Q2 is the unit",
        );
        if *self.out(fin) != unit {
            return Err(hard(format!("final combination gave {}", self.out(fin))));
        }
        Ok(fin)
    }

    fn run(&mut self, start: usize) -> Result<(), Failure> {
        let col = self.column(start)?;
        let (f0, phi0) = self.kill_l0(col)?;
        let [t1, t2] = self.transport(f0)?;
        let phi1 = m_parts(self.out(t1), &[q(1)]).unwrap().remove(0);
        let phi2 = m_parts(self.out(t2), &[q(2)]).unwrap().remove(0);
        let (i0, p0) = self.monic(f0, &phi0);
        let (i1, p1) = self.monic(t1, &phi1);
        let (i2, p2) = self.monic(t2, &phi2);
        self.reduce([i0, i1, i2], [p0, p1, p2])?;
        Ok(())
    }
}

/// Builds a certificate that the two-sided ideal generated by `seed` contains the unit.
pub fn simplicity_certificate(seed: &Element, rng_seed: u64) -> Result<SimplicityCertificate> {
    if seed.is_zero() {
        return Err(Sh3Error::InvalidInput("the seed must be nonzero".into()));
    }
    let mut rng = rng(rng_seed);
    let mut last = String::new();
    for attempt in 0..=MAX_RETRIES {
        let mut b = Builder::new(seed);
        let start = if attempt == 0 {
            0
        } else {
            let left = Element::monomial(random_monomial(&mut rng, 2));
            let right = Element::monomial(random_monomial(&mut rng, 2));
            let idx = b.push(
                Rule::Descend,
                StepOp::Sandwich { input: 0, left, right },
                "randomized two-sided multiplier",
            );
            if b.out(idx).is_zero() {
                continue;
            }
            idx
        };
        match b.run(start) {
            Ok(()) => {
                let final_element = b.outputs.last().unwrap().clone();
                return Ok(SimplicityCertificate {
                    format_version: CERTIFICATE_FORMAT,
                    seed: seed.clone(),
                    rng_seed,
                    retries: attempt,
                    steps: b.steps,
                    phi_trail: b.trail,
                    final_element,
                });
            }
            Err(Failure::Retry(msg)) => last = msg,
            Err(Failure::Hard(e)) => {
                let trail = b.trail.last().map(|s| {
                    let phis: Vec<String> = s.phi.iter().map(|p| p.to_string()).collect();
                    format!(" (last φ: {})", phis.join(", "))
                });
                return Err(Sh3Error::Certificate(format!("{e}{}", trail.unwrap_or_default())));
            }
        }
    }
    Err(Sh3Error::Certificate(format!("pipeline failed after {MAX_RETRIES} randomized retries: {last}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub steps: usize,
    pub singlet_steps: usize,
    pub final_is_unit: bool,
}

/// Re-executes every step, with singlet projections recomputed through the
/// Casimir, and checks that the last output is the unit.
pub fn replay_certificate(cert: &SimplicityCertificate) -> Result<ReplayReport> {
    let fail = |msg: String| Err(Sh3Error::Certificate(msg));
    if cert.format_version != CERTIFICATE_FORMAT {
        return fail(format!("unsupported certificate format {}", cert.format_version));
    }
    let mut outputs: Vec<Element> = Vec::with_capacity(cert.steps.len());
    let mut singlet_steps = 0;
    for (k, step) in cert.steps.iter().enumerate() {
        if step.index != k {
            return fail(format!("step {k} carries index {}", step.index));
        }
        if (k == 0) != (step.op == StepOp::Seed) {
            return fail(format!("step {k}: the seed must be exactly the first step"));
        }
        if let Some(bad) = step.op.inputs().into_iter().find(|&i| i >= k) {
            return fail(format!("step {k} refers to step {bad}"));
        }
        if matches!(step.op, StepOp::Singlet { .. }) {
            singlet_steps += 1;
        }
        let value = step.op.evaluate(&cert.seed, &outputs, casimir_singlet);
        if value != step.output {
            return fail(format!("step {k}: recomputed {value}, recorded {}", step.output));
        }
        outputs.push(value);
    }
    let unit = Element::unit();
    let last = outputs.last().cloned().unwrap_or_default();
    if last != cert.final_element {
        return fail("the final element differs from the last step".into());
    }
    if last != unit {
        return fail(format!("the certificate ends in {last}, not the unit"));
    }
    Ok(ReplayReport { steps: outputs.len(), singlet_steps, final_is_unit: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_element;

    #[test]
    fn shift_polynomial_roots() {
        let p = shift_polynomial();
        for r in [Rational::new(-3, 2), Rational::from_int(-3), Rational::new(-9, 2)] {
            assert!(p.eval(&CycNum::from_rational(r)).is_zero());
        }
        assert_eq!(p.leading(), CycNum::from_int(2));
    }

    #[test]
    fn casimir_route_matches_projection() {
        for text in ["xp*y", "yp*x*Q1", "x^2*yp^2*L2", "y^3*m*Q0*xp^3"] {
            let f = parse_element(text).unwrap();
            assert_eq!(casimir_singlet(&f), singlet_project(&f), "{text}");
        }
    }

    #[test]
    fn parity_examples() {
        let m2 = MPolynomial::power(2);
        let one = MPolynomial::one();
        assert!(phi_parity_check(&m2, &one, &one).is_ok());
        let p1 = MPolynomial::linear(Rational::from_int(1));
        let p2 = MPolynomial::linear(Rational::from_int(-1));
        assert_eq!(phi_parity_check(&one, &p1, &p2).unwrap().phi12_sign, -1);
        assert!(phi_parity_check(&p1, &one, &one).is_err());
    }

    #[test]
    fn idempotent_seed() {
        let c = simplicity_certificate(&Element::group(q(0)), 0).unwrap();
        assert_eq!(c.final_element, Element::unit());
        // Q0 is already its own generator; moving it to Q1, Q2 costs a factor (m + 3/2)
        assert!(c.phi_trail[0].phi[0].is_one());
        assert_eq!(c.phi_trail[0].phi[1], MPolynomial::linear(Rational::new(3, 2)));
        assert!(c.phi_trail.last().unwrap().phi.iter().all(MPolynomial::is_one));
        replay_certificate(&c).unwrap();
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let mut c = simplicity_certificate(&parse_element("m*Q0").unwrap(), 0).unwrap();
        replay_certificate(&c).unwrap();
        let k = c.steps.len() / 2;
        c.steps[k].output = c.steps[k].output.scale(&CycNum::from_int(2));
        assert!(replay_certificate(&c).is_err());
    }
}
