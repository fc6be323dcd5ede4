use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::error::{Result, Sh3Error};
use crate::rational::{binomial, Rational};

/// Univariate polynomial in m over ℚ(ω), coefficients stored from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MPolynomial {
    coeffs: Vec<CycNum>,
}

impl MPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycNum::ONE)
    }

    pub fn constant(c: CycNum) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// m^n.
    pub fn power(n: usize) -> Self {
        let mut c = vec![CycNum::ZERO; n + 1];
        c[n] = CycNum::ONE;
        Self::from_coeffs(c)
    }

    /// m + c.
    pub fn linear(c: Rational) -> Self {
        Self::from_coeffs(vec![CycNum::from_rational(c), CycNum::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        MPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> CycNum {
        self.coeffs.get(n).cloned().unwrap_or(CycNum::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> CycNum {
        self.coeffs.last().cloned().unwrap_or(CycNum::ZERO)
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycNum::from_int(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![CycNum::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| Sh3Error::Domain("polynomial division by zero".into()))?;
        let inv = d.leading().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNum::ZERO; self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() * &inv;
            for (i, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k + i] -= &t;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(CycNum::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Same polynomial scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().inverse().expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        self.ext_gcd(other).0
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("divisor is nonzero");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().inverse().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// p(m + c).
    pub fn shift(&self, c: &Rational) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![CycNum::ZERO; n];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a·(m + c)^k = a·Σ_j C(k,j) c^(k−j) m^j
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let w = Rational::from_bigints(binomial(k as u32, j as u32), 1.into()).unwrap() * c.pow((k - j) as u32);
                *slot += &a.scale(&w);
            }
        }
        Self::from_coeffs(out)
    }

    /// p(−m).
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval(&self, at: &CycNum) -> CycNum {
        let mut acc = CycNum::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }
}

impl fmt::Display for MPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "m".to_string(),
                _ => format!("m^{k}"),
            };
            if c.is_rational() {
                let neg = c.one.is_negative();
                let abs = c.one.abs();
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                if var.is_empty() {
                    write!(f, "{abs}")?;
                } else if abs.is_one() {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{abs}*{var}")?;
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                if var.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{var}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for MPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> MPolynomial {
        MPolynomial::from_coeffs(cs.iter().map(|&c| CycNum::from_int(c)).collect())
    }

    #[test]
    fn gcd_of_coprime_linear_factors_is_one() {
        let a = MPolynomial::power(1);
        let b = MPolynomial::linear(Rational::new(9, 2));
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let a = poly(&[-1, 0, 1]); // m² − 1
        let b = poly(&[1, 1]); // m + 1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, poly(&[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn shift_and_reflect() {
        let p = poly(&[0, 0, 1]); // m²
        assert_eq!(p.shift(&Rational::ONE), poly(&[1, 2, 1]));
        assert_eq!(poly(&[1, 1]).reflect(), poly(&[1, -1]));
    }

    #[test]
    fn display() {
        let p = MPolynomial::from_coeffs(vec![CycNum::frac(-3, 2), CycNum::ZERO, CycNum::ONE]);
        assert_eq!(p.to_string(), "m^2 - 3/2");
        assert_eq!(MPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[3, 0, 2, 5]);
        let b = poly(&[1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }
}
