//! Group law on the generic fiber `Y^2 = 4X^3 - g2 X - g3` over `Q(x1)`.

use super::WeierstrassModel;
use crate::error::{Error, Result};
use crate::exactmath::{exact_sqrt, gcd, int, Rat, Ring, UniPoly};
use num_traits::Zero;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Element of `Q(x1)` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::from_poly(UniPoly::zero()));
        }
        let g = gcd(&num, &den);
        let (n, d) = (num.exact_div(&g)?, den.exact_div(&g)?);
        let lc = d.leading().unwrap().recip();
        Ok(RatFunc { num: n.scale(&lc), den: d.scale(&lc) })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial itself, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.den.is_constant().then_some(&self.num)
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()).unwrap())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Div for &RatFunc {
    type Output = Option<RatFunc>;
    fn div(self, o: &RatFunc) -> Option<RatFunc> {
        o.recip().map(|r| self * &r)
    }
}

/// Point of the generic fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Zero,
    Affine(RatFunc, RatFunc),
}

impl CurvePoint {
    pub fn neg(&self) -> Self {
        match self {
            CurvePoint::Zero => CurvePoint::Zero,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), -y),
        }
    }

    pub fn on_curve(&self, w: &WeierstrassModel) -> bool {
        match self {
            CurvePoint::Zero => true,
            CurvePoint::Affine(x, y) => {
                let c = |p: &UniPoly| RatFunc::from_poly(p.clone());
                let four = RatFunc::constant(int(4));
                let rhs = &(&(&four * &(&(x * x) * x)) - &(&c(&w.g2) * x)) - &c(&w.g3);
                &(y * y) == &rhs
            }
        }
    }

    pub fn add(&self, o: &Self, w: &WeierstrassModel) -> Self {
        let (x1, y1, x2, y2) = match (self, o) {
            (CurvePoint::Zero, p) | (p, CurvePoint::Zero) => return p.clone(),
            (CurvePoint::Affine(a, b), CurvePoint::Affine(c, d)) => (a, b, c, d),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Zero;
            }
            let twelve = RatFunc::constant(int(12));
            let num = &(&twelve * &(x1 * x1)) - &RatFunc::from_poly(w.g2.clone());
            (&num / &(&RatFunc::constant(int(2)) * y1)).expect("y1 is nonzero")
        } else {
            (&(y2 - y1) / &(x2 - x1)).expect("x1 != x2")
        };
        let quarter = RatFunc::constant(crate::exactmath::rat(1, 4));
        let x3 = &(&(&quarter * &(&slope * &slope)) - x1) - x2;
        let y3 = -&(y1 + &(&slope * &(&x3 - x1)));
        CurvePoint::Affine(x3, y3)
    }

    pub fn multiple(&self, n: usize, w: &WeierstrassModel) -> Self {
        let mut acc = CurvePoint::Zero;
        for _ in 0..n {
            acc = acc.add(self, w);
        }
        acc
    }
}

/// Point of a specialized fiber, a Weierstrass curve over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum RatPoint {
    Zero,
    Affine(Rat, Rat),
}

fn add_rational(p: &RatPoint, q: &RatPoint, g2: &Rat) -> RatPoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (RatPoint::Zero, r) | (r, RatPoint::Zero) => return r.clone(),
        (RatPoint::Affine(a, b), RatPoint::Affine(c, d)) => (a, b, c, d),
    };
    let slope = if x1 == x2 {
        if (y1 + y2).is_zero() {
            return RatPoint::Zero;
        }
        (int(12) * x1 * x1 - g2) / (int(2) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &slope * &slope / int(4) - x1 - x2;
    let y3 = -(y1 + &slope * (&x3 - x1));
    RatPoint::Affine(x3, y3)
}

/// Points of a curve over `Q` have order at most 12 when finite.
const MAZUR_BOUND: usize = 12;

/// Order of `P` in the Mordell-Weil group, or `None` if `P` has infinite
/// order.
///
/// The order is read off at a smooth fiber over a rational point, where
/// specialization is injective on torsion, and any finite candidate is then
/// confirmed over `Q(x1)`. `max` caps the candidate orders tried generically.
pub fn torsion_order(w: &WeierstrassModel, p: &CurvePoint, max: usize) -> Result<Option<usize>> {
    if !p.on_curve(w) {
        return Err(Error::InvalidInput("point is not on the curve".into()));
    }
    let (x, y) = match p {
        CurvePoint::Zero => return Ok(Some(1)),
        CurvePoint::Affine(x, y) => (x, y),
    };
    let c = (0i64..)
        .map(int)
        .find(|c| {
            !w.delta.eval(c).is_zero() && !x.denominator().eval(c).is_zero() && !y.denominator().eval(c).is_zero()
        })
        .expect("Δ has finitely many roots");
    let at = |f: &RatFunc| f.numerator().eval(&c) / f.denominator().eval(&c);
    let g2 = w.g2.eval(&c);
    let base = RatPoint::Affine(at(x), at(y));
    let mut acc = base.clone();
    let mut candidate = None;
    for n in 1..=MAZUR_BOUND.max(max) {
        if acc == RatPoint::Zero {
            candidate = Some(n);
            break;
        }
        acc = add_rational(&acc, &base, &g2);
    }
    match candidate {
        Some(n) if n <= max && p.multiple(n, w) == CurvePoint::Zero => Ok(Some(n)),
        Some(n) if n > max => Err(Error::BoundExceeded(format!("torsion order {n} above {max}"))),
        _ => Ok(None),
    }
}

/// `a + b sqrt(r)` for a fixed rational `r`; `r` is carried by elements that
/// involve the square root and unset for plain rationals.
#[derive(Clone, Debug)]
pub(crate) struct Quad {
    a: Rat,
    b: Rat,
    r: Option<Rat>,
}

impl Quad {
    pub fn new(a: Rat, b: Rat, r: Rat) -> Self {
        Quad { a, b, r: Some(r) }
    }

    fn radicand(&self, o: &Self) -> Rat {
        self.r.clone().or_else(|| o.r.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        match self.r.as_ref().and_then(exact_sqrt) {
            Some(s) => (&self.a + &self.b * s).is_zero(),
            None => self.a.is_zero() && self.b.is_zero(),
        }
    }
}

impl Ring for Quad {
    fn from_rat(r: &Rat) -> Self {
        Quad { a: r.clone(), b: Rat::zero(), r: None }
    }
    fn add(&self, o: &Self) -> Self {
        Quad { a: &self.a + &o.a, b: &self.b + &o.b, r: Some(self.radicand(o)) }
    }
    fn sub(&self, o: &Self) -> Self {
        Quad { a: &self.a - &o.a, b: &self.b - &o.b, r: Some(self.radicand(o)) }
    }
    fn mul(&self, o: &Self) -> Self {
        let r = self.radicand(o);
        Quad { a: &self.a * &o.a + &self.b * &o.b * &r, b: &self.a * &o.b + &self.b * &o.a, r: Some(r) }
    }
    fn div(&self, o: &Self) -> Option<Self> {
        let r = self.radicand(o);
        let norm = &o.a * &o.a - &o.b * &o.b * &r;
        if norm.is_zero() {
            return None;
        }
        let inv = Quad { a: &o.a / &norm, b: -(&o.b / &norm), r: Some(r) };
        Some(self.mul(&inv))
    }
}
