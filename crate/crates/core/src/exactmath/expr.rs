//! Evaluation of small arithmetic expressions such as
//! `l2^2+2*l2*x*(1+x)` in any commutative ring.
//!
//! Used to embed formula tables verbatim instead of hand-expanding them.

use super::Rat;
use crate::error::{Error, Result};
use num_bigint::BigInt;

pub trait Ring: Clone {
    fn from_rat(r: &Rat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `None` when division is unavailable or the divisor is not invertible.
    fn div(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Self {
        Self::from_rat(&Rat::from_integer(0.into())).sub(self)
    }
}

impl Ring for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        (!num_traits::Zero::is_zero(o)).then(|| self / o)
    }
}

impl Ring for super::UniPoly {
    fn from_rat(r: &Rat) -> Self {
        super::UniPoly::constant(r.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.exact_div(o).ok()
    }
}

struct Parser<'a, R, F: Fn(&str) -> Option<R>> {
    s: &'a [u8],
    pos: usize,
    vars: &'a F,
}

impl<'a, R: Ring, F: Fn(&str) -> Option<R>> Parser<'a, R, F> {
    fn err(&self, what: &str) -> Error {
        Error::InvalidInput(format!("{what} at byte {} of {:?}", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos] == b' ' {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<R> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<R> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let t = self.unary()?;
            acc = if c == b'*' { acc.mul(&t) } else { acc.div(&t).ok_or_else(|| self.err("division failed"))? };
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<R> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.number()?;
            let n: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
            let mut acc = R::from_rat(&Rat::from_integer(1.into()));
            for _ in 0..n {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<R> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn atom(&mut self) -> Result<R> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(R::from_rat(&Rat::from_integer(self.number()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                (self.vars)(name).ok_or_else(|| self.err(&format!("unknown variable {name}")))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Evaluates `s` with `+ - * / ^` (integer exponents), parentheses, integer
/// literals and alphanumeric variable names resolved by `vars`.
pub fn eval_expr<R: Ring>(s: &str, vars: &impl Fn(&str) -> Option<R>) -> Result<R> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, vars };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}
