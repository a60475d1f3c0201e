//! Exact rational arithmetic, univariate polynomials over Q and small
//! integer/rational matrices.
//!
//! Nothing in this crate ever touches a float.

pub mod expr;
mod matrix;
mod poly;
mod roots;

pub use expr::{eval_expr, Ring};
pub use matrix::{IntMatrix, RatMatrix};
pub use poly::{cubic_discriminant, gcd, resultant, SquarefreeDecomposition, UniPoly};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical `"p/q"` text form (denominator always written, `q > 0`).
pub fn fmt_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Representative of `r` modulo `m` in `[0, m)`, for `m > 0`.
pub fn rat_mod(r: &Rat, m: &Rat) -> Rat {
    let q = (r / m).floor();
    r - q * m
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Integer square root of a perfect square, if it is one.
pub fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Square root of a rational perfect square.
pub fn exact_sqrt(r: &Rat) -> Option<Rat> {
    Some(Rat::new(exact_sqrt_int(r.numer())?, exact_sqrt_int(r.denom())?))
}
