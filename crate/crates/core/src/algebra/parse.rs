//! Recursive-descent parser shared by every text form: sums and products of
//! integers, variables, indexed symbols `b[1,2]`, parentheses and integer
//! powers.

use super::poly::QTPoly;
use super::rat::QTRat;
use super::series::AuxSeries;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Values that can be built by the expression parser.
pub trait ParseTarget: Sized {
    fn from_int(n: &BigInt) -> Self;
    fn variable(name: &str, pos: usize) -> Result<Self>;
    fn indexed(name: &str, idx: &[u32], pos: usize) -> Result<Self> {
        let _ = idx;
        Err(perr(pos, format!("unexpected indexed symbol `{name}[...]`")))
    }
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn div(self, o: Self, pos: usize) -> Result<Self>;
    fn pow(self, e: i64, pos: usize) -> Result<Self>;
}

pub(crate) fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(s[st..i].parse().unwrap()), st));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[st..i].to_string()), st));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(perr(i, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.at) {
            Some((Tok::Sym(c), _)) => Some(*c),
            _ => None,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek_sym() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(self.pos(), format!("expected `{c}`")))
        }
    }

    fn expr<T: ParseTarget>(&mut self) -> Result<T> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term::<T>()?;
        if neg {
            acc = T::from_int(&BigInt::zero()).sub(acc);
        }
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: ParseTarget>(&mut self) -> Result<T> {
        let mut acc = self.factor::<T>()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(self.factor()?);
            } else if self.peek_sym() == Some('/') {
                let p = self.pos();
                self.at += 1;
                acc = acc.div(self.factor()?, p)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<T: ParseTarget>(&mut self) -> Result<T> {
        let base = self.atom::<T>()?;
        if self.peek_sym() == Some('^') {
            let p = self.pos();
            self.at += 1;
            let paren = self.eat('(');
            let neg = self.eat('-');
            let e = match self.toks.get(self.at) {
                Some((Tok::Num(n), _)) => n.to_i64().ok_or_else(|| perr(p, "exponent too large"))?,
                _ => return Err(perr(self.pos(), "expected integer exponent")),
            };
            self.at += 1;
            if paren {
                self.expect(')')?;
            }
            return base.pow(if neg { -e } else { e }, p);
        }
        Ok(base)
    }

    fn atom<T: ParseTarget>(&mut self) -> Result<T> {
        let p = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((Tok::Num(n), _)) => {
                self.at += 1;
                Ok(T::from_int(&n))
            }
            Some((Tok::Ident(name), _)) => {
                self.at += 1;
                if self.eat('[') {
                    let mut idx = Vec::new();
                    if !self.eat(']') {
                        loop {
                            match self.toks.get(self.at) {
                                Some((Tok::Num(n), _)) => {
                                    idx.push(n.to_u32().ok_or_else(|| perr(self.pos(), "index too large"))?);
                                    self.at += 1;
                                }
                                _ => return Err(perr(self.pos(), "expected index")),
                            }
                            if self.eat(']') {
                                break;
                            }
                            self.expect(',')?;
                        }
                    }
                    T::indexed(&name, &idx, p)
                } else {
                    T::variable(&name, p)
                }
            }
            Some((Tok::Sym('('), _)) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some((Tok::Sym('-'), _)) => {
                self.at += 1;
                let v: T = self.factor()?;
                Ok(T::from_int(&BigInt::zero()).sub(v))
            }
            _ => Err(perr(p, "expected a term")),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr<T: ParseTarget>(s: &str) -> Result<T> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(perr(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end: s.len() };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(perr(p.pos(), "trailing input"));
    }
    Ok(v)
}

impl ParseTarget for QTRat {
    fn from_int(n: &BigInt) -> Self {
        QTRat::from(BigRational::from_integer(n.clone()))
    }
    fn variable(name: &str, pos: usize) -> Result<Self> {
        match name {
            "q" => Ok(QTRat::q()),
            "t" => Ok(QTRat::t()),
            _ => Err(perr(pos, format!("unknown variable `{name}`"))),
        }
    }
    fn add(self, o: Self) -> Self {
        &self + &o
    }
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
    fn div(self, o: Self, pos: usize) -> Result<Self> {
        self.checked_div(&o).map_err(|_| perr(pos, "division by zero"))
    }
    fn pow(self, e: i64, pos: usize) -> Result<Self> {
        let e = i32::try_from(e).map_err(|_| perr(pos, "exponent too large"))?;
        QTRat::pow(&self, e).map_err(|_| perr(pos, "zero to a negative power"))
    }
}

impl std::str::FromStr for QTRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

impl std::str::FromStr for QTPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let r: QTRat = parse_expr(s)?;
        r.as_poly().cloned().ok_or_else(|| perr(0, "not a polynomial"))
    }
}

impl ParseTarget for AuxSeries<QTRat> {
    fn from_int(n: &BigInt) -> Self {
        AuxSeries::monomial(0, 0, 0, QTRat::from_int(n))
    }
    fn variable(name: &str, pos: usize) -> Result<Self> {
        match name {
            "u" => Ok(AuxSeries::monomial(1, 1, 1, QTRat::one())),
            _ => Ok(AuxSeries::monomial(0, 0, 0, QTRat::variable(name, pos)?)),
        }
    }
    fn add(self, o: Self) -> Self {
        AuxSeries::add(&self, &o)
    }
    fn sub(self, o: Self) -> Self {
        AuxSeries::add(&self, &o.map(|c| -c))
    }
    fn mul(self, o: Self) -> Self {
        AuxSeries::mul(&self, &o)
    }
    fn div(self, o: Self, pos: usize) -> Result<Self> {
        let (lo, hi) = o.window();
        let mut it = o.terms();
        match (it.next(), it.next()) {
            (Some((e, c)), None) => {
                let inv = c.recip().map_err(|_| perr(pos, "division by zero"))?;
                let m = AuxSeries::monomial(-e, -e, -e, inv);
                let _ = (lo, hi);
                Ok(AuxSeries::mul(&self, &m))
            }
            _ => Err(perr(pos, "division by a non-monomial series")),
        }
    }
    fn pow(self, e: i64, pos: usize) -> Result<Self> {
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (Some((x, c)), None) => {
                let c = ParseTarget::pow(c.clone(), e, pos)?;
                let ex = (*x as i64 * e) as i32;
                Ok(AuxSeries::monomial(ex, ex, ex, c))
            }
            _ if e >= 0 => {
                let mut acc = Self::from_int(&BigInt::from(1));
                for _ in 0..e {
                    acc = AuxSeries::mul(&acc, &self);
                }
                Ok(acc)
            }
            _ => Err(perr(pos, "negative power of a non-monomial series")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_polynomial_text() {
        let p: QTRat = "3*q^2*t - q + 1".parse().unwrap();
        assert_eq!(p.to_string(), "3*q^2*t - q + 1");
        let r: QTRat = "  (1 - q*t) / (1-q) ".parse().unwrap();
        assert_eq!(r.to_string(), "(q*t - 1)/(q - 1)");
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = "q + * t".parse::<QTRat>().unwrap_err();
        assert_eq!(e, Error::Parse { pos: 4, msg: "expected a term".into() });
        assert!(matches!("q $".parse::<QTRat>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("x".parse::<QTRat>(), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn laurent_series_text() {
        let s: AuxSeries<QTRat> = parse_expr("q*u^-2 + 3 - t*u^(3)").unwrap();
        assert_eq!(s.coeff(-2), QTRat::q());
        assert_eq!(s.coeff(0), QTRat::from(3));
        assert_eq!(s.coeff(3), -QTRat::t());
    }
}
