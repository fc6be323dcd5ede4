//! The cyclotomic field ℚ(ω), ω = exp(2πi/3), as pairs `a + bω` with ω² = −1 − ω.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::ArithmeticError;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycNum {
    /// Coefficient of 1.
    pub one: Rational,
    /// Coefficient of ω.
    pub omega: Rational,
}

impl CycNum {
    pub const ZERO: CycNum = CycNum { one: Rational::ZERO, omega: Rational::ZERO };
    pub const ONE: CycNum = CycNum { one: Rational::ONE, omega: Rational::ZERO };

    pub fn new(one: Rational, omega: Rational) -> Self {
        CycNum { one, omega }
    }

    pub fn omega() -> Self {
        CycNum { one: Rational::ZERO, omega: Rational::ONE }
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycNum::ONE,
            1 => CycNum::omega(),
            _ => CycNum::new(Rational::from_int(-1), Rational::from_int(-1)),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum { one: r, omega: Rational::ZERO }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.omega.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.one.is_one() && self.omega.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.omega.is_zero()
    }

    /// Complex conjugation: ω ↦ ω² = −1 − ω.
    pub fn conj(&self) -> Self {
        CycNum { one: &self.one - &self.omega, omega: -&self.omega }
    }

    /// Field norm a² − ab + b².
    pub fn norm(&self) -> Rational {
        let (a, b) = (&self.one, &self.omega);
        &(&(a * a) - &(a * b)) + &(b * b)
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let inv = n.recip()?;
        let c = self.conj();
        Ok(CycNum { one: &c.one * &inv, omega: &c.omega * &inv })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        if rhs.omega.is_zero() {
            let inv = rhs.one.recip()?;
            return Ok(self.scale(&inv));
        }
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNum { one: &self.one * r, omega: &self.omega * r }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = CycNum::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Least common multiple of the two denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.one.denom().lcm(&self.omega.denom())
    }
}

impl From<Rational> for CycNum {
    fn from(r: Rational) -> Self {
        CycNum::from_rational(r)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        CycNum { one: &self.one + &rhs.one, omega: &self.omega + &rhs.omega }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        CycNum { one: &self.one - &rhs.one, omega: &self.omega - &rhs.omega }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        if self.omega.is_zero() {
            return rhs.scale(&self.one);
        }
        if rhs.omega.is_zero() {
            return self.scale(&rhs.one);
        }
        let (a, b, c, d) = (&self.one, &self.omega, &rhs.one, &rhs.omega);
        let bd = b * d;
        CycNum { one: &(a * c) - &bd, omega: &(&(a * d) + &(b * c)) - &bd }
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    /// Panics on a zero divisor; see [`CycNum::checked_div`].
    fn div(self, rhs: &'a CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero in Q(w)")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { one: -&self.one, omega: -&self.omega }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'a CycNum) -> CycNum { (&self).$m(rhs) }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        self.one += &rhs.one;
        self.omega += &rhs.omega;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        self.one -= &rhs.one;
        self.omega -= &rhs.omega;
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::ZERO
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::ONE
    }
}

impl Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> Self {
        iter.fold(CycNum::ZERO, |a, b| a + b)
    }
}

fn write_rational_term(f: &mut fmt::Formatter<'_>, r: &Rational, first: bool, suffix: &str) -> fmt::Result {
    if first {
        if suffix.is_empty() {
            return write!(f, "{r}");
        }
        return write!(f, "{r}*{suffix}");
    }
    let sign = if r.is_negative() { " - " } else { " + " };
    let abs = r.abs();
    if suffix.is_empty() {
        write!(f, "{sign}{abs}")
    } else {
        write!(f, "{sign}{abs}*{suffix}")
    }
}

/// Prints as `a/b + c/d*w`, omitting zero parts (`0` when both vanish).
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.one.is_zero(), self.omega.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write_rational_term(f, &self.one, true, ""),
            (true, false) => write_rational_term(f, &self.omega, true, "w"),
            (false, false) => {
                write_rational_term(f, &self.one, true, "")?;
                write_rational_term(f, &self.omega, false, "w")
            }
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycNum {
    type Err = ArithmeticError;

    /// Parses the printed form `a/b + c/d*w` (either part optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithmeticError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = CycNum::ZERO;
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1.min(body.len())..]
                .find(['+', '-'])
                .map(|i| i + 1)
                .unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let (coef, is_w) = if term == "w" {
                (Rational::ONE, true)
            } else if let Some(c) = term.strip_suffix("*w") {
                (c.parse::<Rational>().map_err(|_| bad())?, true)
            } else {
                (term.parse::<Rational>().map_err(|_| bad())?, false)
            };
            let coef = if sign < 0 { -coef } else { coef };
            if is_w {
                out.omega += &coef;
            } else {
                out.one += &coef;
            }
        }
        Ok(out)
    }
}

impl serde::Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w() -> CycNum {
        CycNum::omega()
    }

    #[test]
    fn omega_squared_reduces() {
        assert_eq!(&w() * &w(), CycNum::from_int(-1) - w());
    }

    #[test]
    fn one_plus_omega_times_omega_squared_conjugate() {
        // 1 + ω = −ω², so (1 + ω)(−ω) = ω³ = 1.
        let lhs = &(CycNum::ONE + w()) * &(-w());
        assert_eq!(lhs, CycNum::ONE);
    }

    #[test]
    fn inverse_of_omega() {
        assert_eq!(w().inverse().unwrap(), CycNum::from_int(-1) - w());
        assert_eq!(CycNum::ZERO.inverse(), Err(ArithmeticError::DivisionByZero));
        assert!(CycNum::ONE.checked_div(&CycNum::ZERO).is_err());
    }

    #[test]
    fn omega_powers_cycle() {
        assert_eq!(CycNum::omega_pow(3), CycNum::ONE);
        assert_eq!(CycNum::omega_pow(-1), CycNum::omega_pow(2));
        assert_eq!(CycNum::omega_pow(2), &w() * &w());
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (CycNum::new(Rational::new(1, 2), Rational::new(-3, 4)), "1/2 - 3/4*w"),
            (CycNum::new(Rational::ZERO, Rational::new(5, 3)), "5/3*w"),
            (CycNum::new(Rational::new(-2, 1), Rational::ZERO), "-2"),
            (CycNum::ZERO, "0"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<CycNum>().unwrap(), value);
        }
        assert_eq!("w".parse::<CycNum>().unwrap(), w());
        assert_eq!("-1/2*w + 3".parse::<CycNum>().unwrap(), CycNum::new(Rational::from_int(3), Rational::new(-1, 2)));
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        ((-30i64..30), (1i64..12), (-30i64..30), (1i64..12))
            .prop_map(|(a, b, c, d)| CycNum::new(Rational::new(a, b), Rational::new(c, d)))
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), CycNum::ONE);
            }
            if !a.is_zero() && !b.is_zero() {
                prop_assert!(!(&a * &b).is_zero());
            }
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(a in arb_cyc(), b in arb_cyc()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn printed_form_parses_back(a in arb_cyc()) {
            prop_assert_eq!(a.to_string().parse::<CycNum>().unwrap(), a);
        }
    }
}
