//! Dense univariate polynomials over Q.

use super::{common_denominator, Rat, RatMatrix};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with coefficients stored lowest degree first.
///
/// The representation is normalized: no trailing zero coefficients, so the
/// zero polynomial has an empty coefficient vector and `degree() == None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut v = vec![Rat::zero(); n + 1];
        v[n] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| Rat::from_integer(v.into())).collect())
    }

    /// `x - c`.
    pub fn linear_root(c: &Rat) -> Self {
        Self::from_coeffs(vec![-c.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or_else(|| Error::InvalidInput("division by the zero polynomial".into()))?;
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::from_coeffs(q), UniPoly::from_coeffs(r)))
    }

    /// Division that must be exact.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InvalidInput(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// `f(x + c)`, by Horner in the shifted variable.
    pub fn shift(&self, c: &Rat) -> UniPoly {
        let lin = UniPoly::from_coeffs(vec![c.clone(), Rat::one()]);
        self.compose(&lin)
    }

    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| &(&acc * g) + &UniPoly::constant(c.clone()))
    }

    /// `x^n f(1/x)`; fails when `deg f > n`.
    pub fn reverse(&self, n: usize) -> Result<UniPoly> {
        if self.degree().is_some_and(|d| d > n) {
            return Err(Error::InvalidInput(format!(
                "degree {} exceeds the reversal weight {n}",
                self.degree().unwrap()
            )));
        }
        let mut v = self.coeffs.clone();
        v.resize(n + 1, Rat::zero());
        v.reverse();
        Ok(UniPoly::from_coeffs(v))
    }

    /// Exponent of the lowest nonzero coefficient; `None` for zero.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Order of vanishing at `x = c`; `None` for the zero polynomial.
    pub fn order_at(&self, c: &Rat) -> Option<usize> {
        self.shift(c).low_order()
    }

    /// Largest `e` with `p^e | self`; `None` when `self` is zero.
    pub fn multiplicity_of(&self, p: &UniPoly) -> Result<Option<usize>> {
        if self.is_zero() {
            return Ok(None);
        }
        if p.is_constant() {
            return Err(Error::InvalidInput("multiplicity of a constant factor".into()));
        }
        let mut e = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(p)?;
            if !r.is_zero() {
                return Ok(Some(e));
            }
            cur = q;
            e += 1;
        }
    }

    /// `self = content * primitive`, with integer primitive part of positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let d = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(d.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rat::new(g, d), prim)
    }

    fn from_int_coeffs(v: &[BigInt]) -> UniPoly {
        UniPoly::from_coeffs(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Yun's algorithm. Every factor is monic and squarefree, factors are
    /// pairwise coprime, and `self = unit * prod f_i^{m_i}`.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition> {
        let unit =
            self.leading().cloned().ok_or_else(|| Error::InvalidInput("squarefree decomposition of zero".into()))?;
        let f = self.monic();
        let mut factors = Vec::new();
        if !f.is_constant() {
            let fp = f.derivative();
            let a0 = gcd(&f, &fp);
            let mut b = f.exact_div(&a0)?;
            let c = fp.exact_div(&a0)?;
            let mut d = &c - &b.derivative();
            let mut i = 1;
            while !b.is_constant() {
                let a = gcd(&b, &d);
                let nb = b.exact_div(&a)?;
                let nc = d.exact_div(&a)?;
                d = &nc - &nb.derivative();
                if !a.is_constant() {
                    factors.push((a, i));
                }
                b = nb;
                i += 1;
            }
        }
        Ok(SquarefreeDecomposition { unit, factors })
    }

    /// All roots in Q, without repetition, in increasing order.
    pub fn rational_roots(&self) -> Vec<Rat> {
        super::roots::rational_roots(self)
    }
}

/// Output of [`UniPoly::squarefree_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rat,
    /// `(factor, multiplicity)`, multiplicities strictly increasing.
    pub factors: Vec<(UniPoly, usize)>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> UniPoly {
        self.factors.iter().fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }
}

// Integer polynomial helpers for the subresultant sequence.

fn zpoly_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn zpoly_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = (a.len() - b.len() + 1) as u32;
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let c = r[top].clone();
        for x in r.iter_mut() {
            *x *= lc;
        }
        let shift = top - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &c * bc;
        }
        r = zpoly_trim(r);
        steps -= 1;
    }
    let f = num_traits::pow(lc.clone(), steps as usize);
    r.into_iter().map(|x| x * &f).collect()
}

/// Monic gcd over Q, computed by the subresultant PRS on primitive integer
/// parts. `gcd(0, 0) = 0`.
pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (_, mut p) = a.primitive_part();
    let (_, mut q) = b.primitive_part();
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (p.len() - q.len()) as u32;
        let r = zpoly_prem(&p, &q);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return UniPoly::one();
        }
        p = q;
        let div = &g * num_traits::pow(h.clone(), delta as usize);
        q = r.into_iter().map(|c| c / &div).collect();
        g = p.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h.clone(), delta as usize - 1)
        };
    }
    UniPoly::from_int_coeffs(&q).monic()
}

/// Resultant via the determinant of the Sylvester matrix.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rat> {
    let (m, n) = match (a.degree(), b.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Ok(Rat::zero()),
    };
    let size = m + n;
    if size == 0 {
        return Ok(Rat::one());
    }
    let mut s = RatMatrix::zeros(size, size);
    for i in 0..n {
        for j in 0..=m {
            s.set(i, i + j, a.coeff(m - j));
        }
    }
    for i in 0..m {
        for j in 0..=n {
            s.set(n + i, i + j, b.coeff(n - j));
        }
    }
    Ok(s.determinant())
}

/// Classical discriminant `18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2` of
/// `a y^3 + b y^2 + c y + d`, with polynomial coefficients.
pub fn cubic_discriminant(a: &UniPoly, b: &UniPoly, c: &UniPoly, d: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() {
        return Err(Error::Degenerate("cubic with vanishing leading coefficient".into()));
    }
    let k = |n: i64| UniPoly::constant(Rat::from_integer(n.into()));
    let t1 = &(&(&(&k(18) * a) * b) * c) * d;
    let t2 = &(&k(4) * &b.pow(3)) * d;
    let t3 = &b.pow(2) * &c.pow(2);
    let t4 = &(&k(4) * a) * &c.pow(3);
    let t5 = &(&k(27) * &a.pow(2)) * &d.pow(2);
    Ok(&(&(&(&t1 - &t2) + &t3) - &t4) - &t5)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly { (&self).$m(&o) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: &UniPoly) -> UniPoly { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}
