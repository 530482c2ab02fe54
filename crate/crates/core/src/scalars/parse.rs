//! Parser for scalar expressions in `s`, `q`, `i` with + - * / ^ and parens.
//! Accepts the canonical serialization as well as the q-notation.

use super::{GaussRat, LaurentPoly, RatFunc, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{} at offset {}", msg, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ScalarError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    /// Exponent as a multiple of 1/2.
    fn exponent_halves(&mut self) -> Result<i64, ScalarError> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let n: i64 = self.int()?.try_into().map_err(|_| self.err("exponent too large"))?;
        let mut halves = 2 * n;
        if paren && self.eat(b'/') {
            let d = self.int()?;
            if d == BigInt::from(2) {
                halves = n;
            } else if d == BigInt::from(1) {
                halves = 2 * n;
            } else {
                return Err(self.err("only half-integer exponents are supported"));
            }
        }
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -halves } else { halves })
    }

    fn power(&mut self) -> Result<RatFunc, ScalarError> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        match c {
            b's' | b'q' => {
                self.pos += 1;
                let per = if c == b's' { 1 } else { 2 };
                if self.eat(b'^') {
                    let h = self.exponent_halves()?;
                    let k = if c == b's' {
                        if h % 2 != 0 {
                            return Err(self.err("fractional power of s"));
                        }
                        h / 2
                    } else {
                        h
                    };
                    Ok(RatFunc::s_pow(k as i32))
                } else {
                    Ok(RatFunc::s_pow(per))
                }
            }
            _ => {
                let base = self.atom()?;
                if self.eat(b'^') {
                    let h = self.exponent_halves()?;
                    if h % 2 != 0 {
                        return Err(self.err("fractional power of a compound expression"));
                    }
                    base.pow((h / 2) as i32)
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<RatFunc, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(RatFunc::i())
            }
            Some(d) if d.is_ascii_digit() => {
                let n = self.int()?;
                Ok(RatFunc::from_gauss(GaussRat::real(BigRational::from_integer(n))))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub fn parse_ratfunc(s: &str) -> Result<RatFunc, ScalarError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

pub fn parse_gauss(s: &str) -> Result<GaussRat, ScalarError> {
    let r = parse_ratfunc(s)?;
    r.as_gauss().ok_or_else(|| ScalarError::Parse(format!("not a constant: {}", s)))
}

pub fn parse_laurent(s: &str) -> Result<LaurentPoly, ScalarError> {
    let r = parse_ratfunc(s)?;
    if r.is_laurent() {
        Ok(r.num().clone())
    } else {
        Err(ScalarError::Parse(format!("not a Laurent polynomial: {}", s)))
    }
}
