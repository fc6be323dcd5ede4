//! Text input for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := rational | 'w' | symbol | '(' expr ')'
//! ```
//!
//! Symbols: x, xp, y, yp, m, Q0–Q2, L0–L2, K12, K13, K23, T00, T01, T11, id.
//! Products keep their order; nothing is assumed to commute.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{m, t, Element};
use crate::cyclotomic::CycNum;
use crate::error::Sh3Error;
use crate::group::{perm_to_lq, GroupBasisElem, Perm};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symbol {
    X,
    Xp,
    Y,
    Yp,
    M,
    Omega,
    Id,
    Group(GroupBasisElem),
    Perm(Perm),
    T(u8, u8),
}

impl Symbol {
    fn lookup(name: &str) -> Option<Symbol> {
        Some(match name {
            "x" => Symbol::X,
            "xp" => Symbol::Xp,
            "y" => Symbol::Y,
            "yp" => Symbol::Yp,
            "m" => Symbol::M,
            "w" => Symbol::Omega,
            "id" => Symbol::Id,
            "K12" => Symbol::Perm(Perm::K12),
            "K13" => Symbol::Perm(Perm::K13),
            "K23" => Symbol::Perm(Perm::K23),
            "T00" => Symbol::T(0, 0),
            "T01" => Symbol::T(0, 1),
            "T11" => Symbol::T(1, 1),
            _ => Symbol::Group(name.parse().ok()?),
        })
    }

    fn element(&self) -> Element {
        match self {
            Symbol::X => Element::x(),
            Symbol::Xp => Element::xp(),
            Symbol::Y => Element::y(),
            Symbol::Yp => Element::yp(),
            Symbol::M => m(),
            Symbol::Omega => Element::scalar(CycNum::omega()),
            Symbol::Id => Element::unit(),
            Symbol::Group(g) => Element::group(*g),
            Symbol::Perm(p) => Element::from_group_algebra(&perm_to_lq(*p)),
            Symbol::T(a, b) => t(*a, *b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// Terms with their signs (true = subtracted).
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Scalar(Rational),
    Symbol(Symbol),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl Expr {
    pub fn eval(&self) -> Element {
        match &self.kind {
            ExprKind::Sum(terms) => terms.iter().fold(Element::zero(), |acc, (neg, e)| {
                let v = e.eval();
                if *neg {
                    acc - v
                } else {
                    acc + v
                }
            }),
            ExprKind::Product(fs) => {
                let mut it = fs.iter();
                let first = it.next().map(Expr::eval).unwrap_or_else(Element::unit);
                it.fold(first, |acc, f| acc.mul(&f.eval()))
            }
            ExprKind::Power(base, n) => base.eval().pow(*n),
            ExprKind::Scalar(r) => Element::scalar(CycNum::from_rational(r.clone())),
            ExprKind::Symbol(s) => s.element(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected one of {}, found {}", self.pos, self.expected.join(" "), self.found)
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for Sh3Error {
    fn from(e: ParseError) -> Self {
        Sh3Error::InvalidInput(format!("syntax error at {e}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt, Option<BigInt>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n, None) => write!(f, "'{n}'"),
            Tok::Num(n, Some(d)) => write!(f, "'{n}/{d}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let digits = |i: &mut usize, col: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
            *col += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, pos));
            i += 1;
            col += 1;
        } else if c.is_ascii_digit() {
            let n: BigInt = digits(&mut i, &mut col).parse().unwrap();
            let mut den = None;
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                col += 1;
                den = Some(digits(&mut i, &mut col).parse().unwrap());
            }
            out.push((Tok::Num(n, den), pos));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
                col += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else {
            return Err(ParseError {
                pos,
                expected: vec!["number".into(), "symbol".into(), "operator".into()],
                found: format!("'{c}'"),
            });
        }
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

const ATOM_START: [&str; 4] = ["number", "symbol", "'w'", "'('"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let mut terms = Vec::new();
        let mut neg = false;
        if *self.peek() == Tok::Minus {
            neg = true;
            self.at += 1;
        }
        loop {
            terms.push((neg, self.term()?));
            match self.peek() {
                Tok::Plus => neg = false,
                Tok::Minus => neg = true,
                _ => break,
            }
            self.at += 1;
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Expr { kind: ExprKind::Sum(terms), pos })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let mut fs = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.at += 1;
            fs.push(self.factor()?);
        }
        if fs.len() == 1 {
            return Ok(fs.pop().unwrap());
        }
        Ok(Expr { kind: ExprKind::Product(fs), pos })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.at += 1;
        match self.peek().clone() {
            Tok::Num(n, None) => {
                let e: u32 = n.try_into().map_err(|_| self.error(&["exponent below 2^32"]))?;
                self.at += 1;
                Ok(Expr { kind: ExprKind::Power(Box::new(base), e), pos })
            }
            _ => Err(self.error(&["natural number"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(n, d) => {
                let d = d.unwrap_or_else(|| 1.into());
                let r = Rational::from_bigints(n, d).map_err(|_| ParseError {
                    pos,
                    expected: vec!["nonzero denominator".into()],
                    found: self.peek().to_string(),
                })?;
                self.at += 1;
                Ok(Expr { kind: ExprKind::Scalar(r), pos })
            }
            Tok::Ident(name) => {
                let sym = Symbol::lookup(&name).ok_or_else(|| {
                    self.error(&[
                        "x", "xp", "y", "yp", "m", "w", "id", "Q0", "Q1", "Q2", "L0", "L1", "L2", "K12", "K13", "K23",
                        "T00", "T01", "T11",
                    ])
                })?;
                self.at += 1;
                Ok(Expr { kind: ExprKind::Symbol(sym), pos })
            }
            Tok::LParen => {
                self.at += 1;
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["'+'", "'-'", "'*'", "'^'", "')'"]));
                }
                self.at += 1;
                Ok(inner)
            }
            _ => Err(self.error(&ATOM_START)),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}

/// Parses and evaluates to a normal-ordered element.
pub fn parse_element(text: &str) -> Result<Element, Sh3Error> {
    Ok(parse(text)?.eval())
}

impl FromStr for Element {
    type Err = Sh3Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_text() {
        let e = parse_element("x*yp - yp*x").unwrap();
        assert_eq!(e, Element::scalar(CycNum::from_int(3)));
    }

    #[test]
    fn m_text() {
        assert_eq!(parse_element("1/2*(xp*y - yp*x)").unwrap(), m());
        assert_eq!(parse_element("m").unwrap(), m());
    }

    #[test]
    fn idempotents_annihilate() {
        assert!(parse_element("Q1*Q2").unwrap().is_zero());
    }

    #[test]
    fn printed_elements_reparse() {
        let e = parse_element("(1 + 2*w)*x*L1 - 3/2*xp^2*y*Q0 + K12").unwrap();
        assert_eq!(parse_element(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse("x +\n  * y").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 3 });
        assert!(err.expected.contains(&"symbol".to_string()));
        let err = parse("(x + y").unwrap_err();
        assert!(err.expected.contains(&"')'".to_string()));
        assert!(parse("q7").is_err());
        assert!(parse("1/0").is_err());
    }
}
