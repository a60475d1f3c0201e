//! Finite quadratic forms `q: A -> Q/2Z` on finite abelian groups, and
//! isometry search between them.

use crate::error::{Error, Result};
use crate::exactmath::{rat_mod, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// Group element as coefficients on the generators, `0 <= a_i < d_i`.
pub type Element = Vec<u64>;

/// Default cap on `|A|` for the exhaustive isometry search.
pub const DEFAULT_SEARCH_BOUND: u64 = 10_000;

/// `A = Z/d_1 + ... + Z/d_r` with values of `q` on generators and of the
/// bilinear form `b` on pairs of generators (`b(x, x) = q(x) mod 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    orders: Vec<u64>,
    q: Vec<Rat>,
    b: Vec<Vec<Rat>>,
}

fn two() -> Rat {
    Rat::from_integer(BigInt::from(2))
}

fn m2(r: &Rat) -> Rat {
    rat_mod(r, &two())
}

fn m1(r: &Rat) -> Rat {
    rat_mod(r, &Rat::one())
}

fn ratu(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl FiniteQuadraticForm {
    /// Generators of order 1 are dropped. `b[i][i]` is ignored and replaced by
    /// `q_i mod 1`.
    pub fn new(orders: Vec<u64>, q: Vec<Rat>, b: Vec<Vec<Rat>>) -> Result<Self> {
        let r = orders.len();
        if q.len() != r || b.len() != r || b.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidInput("form data has inconsistent sizes".into()));
        }
        if orders.contains(&0) {
            return Err(Error::InvalidInput("generator of infinite order".into()));
        }
        for i in 0..r {
            for j in 0..r {
                if i != j && m1(&b[i][j]) != m1(&b[j][i]) {
                    return Err(Error::InvalidInput("bilinear form is not symmetric".into()));
                }
                if i != j && !m1(&(ratu(orders[i]) * &b[i][j])).is_zero() {
                    return Err(Error::InvalidInput("bilinear form is incompatible with the orders".into()));
                }
            }
            let d = ratu(orders[i]);
            if !m2(&(&d * &d * &q[i])).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "q(g_{i}) = {} is incompatible with order {}",
                    q[i], orders[i]
                )));
            }
        }
        let keep: Vec<usize> = (0..r).filter(|&i| orders[i] > 1).collect();
        Ok(FiniteQuadraticForm {
            orders: keep.iter().map(|&i| orders[i]).collect(),
            q: keep.iter().map(|&i| m2(&q[i])).collect(),
            b: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| if i == j { m1(&q[i]) } else { m1(&b[i][j]) }).collect())
                .collect(),
        })
    }

    /// Cyclic form `Z/n` with `q(1) = value`.
    pub fn cyclic(n: u64, value: Rat) -> Result<Self> {
        Self::new(vec![n], vec![value], vec![vec![Rat::zero()]])
    }

    pub fn trivial() -> Self {
        FiniteQuadraticForm { orders: Vec::new(), q: Vec::new(), b: Vec::new() }
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Prime-power orders of a primary decomposition, sorted.
    pub fn elementary_divisors(&self) -> Vec<(u64, u64)> {
        let mut v: Vec<(u64, u64)> =
            self.orders.iter().flat_map(|&d| factor(d).into_iter().map(|(p, e)| (p, p.pow(e)))).collect();
        v.sort();
        v
    }

    /// Canonical invariant factors, largest first (`d_1` divisible by `d_2`, ...).
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut by_p: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (p, pe) in self.elementary_divisors() {
            by_p.entry(p).or_default().push(pe);
        }
        let len = by_p.values().map(|v| v.len()).max().unwrap_or(0);
        let mut out = vec![1u64; len];
        for v in by_p.values_mut() {
            v.sort_unstable_by(|a, b| b.cmp(a));
            for (i, pe) in v.iter().enumerate() {
                out[i] *= pe;
            }
        }
        out
    }

    /// Minimal number of generators `l(A)`.
    pub fn length(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Human-readable group, e.g. `Z/4+Z/2+Z/2`; the trivial group is `0`.
    pub fn group_string(&self) -> String {
        group_string(&self.invariant_factors())
    }

    pub fn q_of(&self, a: &[u64]) -> Rat {
        let mut s = Rat::zero();
        for i in 0..self.orders.len() {
            if a[i] == 0 {
                continue;
            }
            let ai = ratu(a[i]);
            s += &ai * &ai * &self.q[i];
            for j in i + 1..self.orders.len() {
                if a[j] != 0 {
                    s += two() * &ai * ratu(a[j]) * &self.b[i][j];
                }
            }
        }
        m2(&s)
    }

    pub fn b_of(&self, a: &[u64], c: &[u64]) -> Rat {
        let mut s = Rat::zero();
        for i in 0..self.orders.len() {
            for j in 0..self.orders.len() {
                if a[i] != 0 && c[j] != 0 {
                    s += ratu(a[i]) * ratu(c[j]) * &self.b[i][j];
                }
            }
        }
        m1(&s)
    }

    pub fn add(&self, a: &[u64], c: &[u64]) -> Element {
        (0..self.orders.len()).map(|i| (a[i] + c[i]) % self.orders[i]).collect()
    }

    pub fn scale(&self, a: &[u64], k: u64) -> Element {
        (0..self.orders.len()).map(|i| ((a[i] as u128 * k as u128) % self.orders[i] as u128) as u64).collect()
    }

    pub fn is_zero_element(a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        (0..self.orders.len()).fold(1u64, |acc, i| {
            let d = self.orders[i];
            acc.lcm(&(d / d.gcd(&a[i])))
        })
    }

    /// All elements, in lexicographic order of coefficients.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = vec![Vec::new()];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |x| {
                        let mut e2 = e.clone();
                        e2.push(x);
                        e2
                    })
                })
                .collect();
        }
        out
    }

    pub fn negate(&self) -> Self {
        FiniteQuadraticForm {
            orders: self.orders.clone(),
            q: self.q.iter().map(|v| m2(&-v)).collect(),
            b: self.b.iter().map(|r| r.iter().map(|v| m1(&-v)).collect()).collect(),
        }
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let (r, s) = (self.orders.len(), o.orders.len());
        let mut b = vec![vec![Rat::zero(); r + s]; r + s];
        for i in 0..r {
            for j in 0..r {
                b[i][j] = self.b[i][j].clone();
            }
        }
        for i in 0..s {
            for j in 0..s {
                b[r + i][r + j] = o.b[i][j].clone();
            }
        }
        FiniteQuadraticForm {
            orders: self.orders.iter().chain(&o.orders).copied().collect(),
            q: self.q.iter().chain(&o.q).cloned().collect(),
            b,
        }
    }

    /// Elements of the given order whose `q` equals `value` mod 2.
    pub fn elements_with(&self, order: u64, value: &Rat) -> Vec<Element> {
        let v = m2(value);
        self.elements().into_iter().filter(|e| self.element_order(e) == order && self.q_of(e) == v).collect()
    }
}

pub fn group_string(inv: &[u64]) -> String {
    if inv.is_empty() {
        return "0".into();
    }
    inv.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join("+")
}

impl fmt::Display for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with q = [", self.group_string())?;
        let qs: Vec<String> = self.q.iter().map(|v| v.to_string()).collect();
        write!(f, "{}]", qs.join(", "))
    }
}

/// Group isomorphism `A -> B` preserving `q`, given by the images of the
/// generators of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isometry {
    pub images: Vec<Element>,
}

impl Isometry {
    pub fn apply(&self, target: &FiniteQuadraticForm, a: &[u64]) -> Element {
        let mut out = vec![0u64; target.orders.len()];
        for (i, &k) in a.iter().enumerate() {
            if k != 0 {
                out = target.add(&out, &target.scale(&self.images[i], k));
            }
        }
        out
    }

    pub fn identity(f: &FiniteQuadraticForm) -> Self {
        let r = f.orders.len();
        Isometry { images: (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect() }
    }

    /// `other ∘ self`, for `self: A -> B` and `other: B -> C`.
    pub fn then(&self, other: &Isometry, c: &FiniteQuadraticForm) -> Isometry {
        Isometry { images: self.images.iter().map(|e| other.apply(c, e)).collect() }
    }

    /// Inverse of `self: A -> B`.
    pub fn inverse(&self, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Result<Isometry> {
        let table: Vec<(Element, Element)> = a.elements().into_iter().map(|x| (self.apply(b, &x), x)).collect();
        let r = b.orders.len();
        let images = (0..r)
            .map(|i| {
                let gi: Element = (0..r).map(|j| u64::from(i == j)).collect();
                table
                    .iter()
                    .find(|(img, _)| *img == gi)
                    .map(|(_, x)| x.clone())
                    .ok_or_else(|| Error::Verification("map is not surjective".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Isometry { images })
    }

    /// Full check: homomorphism, bijective, preserves `q`.
    pub fn verify(&self, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> bool {
        if self.images.len() != a.orders.len()
            || self.images.iter().any(|e| e.len() != b.orders.len())
            || a.order() != b.order()
        {
            return false;
        }
        for (i, img) in self.images.iter().enumerate() {
            if !FiniteQuadraticForm::is_zero_element(&b.scale(img, a.orders[i])) {
                return false;
            }
        }
        let mut seen = HashSet::new();
        for x in a.elements() {
            let y = self.apply(b, &x);
            if a.q_of(&x) != b.q_of(&y) || !seen.insert(y) {
                return false;
            }
        }
        true
    }
}

/// Searches for an isometry `f -> g`, one primary component at a time.
/// Returns `Ok(None)` when the forms are not isometric, and an error when
/// either group is larger than `bound`.
pub fn forms_isomorphic(f: &FiniteQuadraticForm, g: &FiniteQuadraticForm, bound: u64) -> Result<Option<Isometry>> {
    if f.order() > bound || g.order() > bound {
        return Err(Error::BoundExceeded(format!(
            "discriminant groups of order {} and {} exceed the bound {bound}",
            f.order(),
            g.order()
        )));
    }
    if f.elementary_divisors() != g.elementary_divisors() {
        return Ok(None);
    }
    let g_elems: Vec<(Element, u64, Rat)> = g
        .elements()
        .into_iter()
        .map(|e| {
            let o = g.element_order(&e);
            let q = g.q_of(&e);
            (e, o, q)
        })
        .collect();
    let r = f.orders.len();
    let mut images = vec![vec![0u64; g.orders.len()]; r];
    for (p, _) in factor(f.order()) {
        // Generators h_i of the p-part of A, with the index of the A-generator
        // they come from and the CRT multiplier recovering that part.
        let mut hs: Vec<(usize, Element, u64, u64)> = Vec::new();
        for i in 0..r {
            let d = f.orders[i];
            let mut pe = 1;
            while d % (pe * p) == 0 {
                pe *= p;
            }
            if pe == 1 {
                continue;
            }
            let cof = d / pe;
            let mut unit = vec![0u64; r];
            unit[i] = cof;
            // t * cof ≡ 1 (mod pe)
            let t = (1..=pe).find(|t| (t * cof) % pe == 1 % pe).unwrap();
            hs.push((i, unit, pe, t));
        }
        let cands: Vec<Vec<&Element>> = hs
            .iter()
            .map(|(_, h, pe, _)| {
                let qh = f.q_of(h);
                g_elems.iter().filter(|(_, o, q)| o == pe && *q == qh).map(|(e, _, _)| e).collect()
            })
            .collect();
        let p_order: u64 = hs.iter().map(|h| h.2).product();
        let mut chosen: Vec<&Element> = Vec::new();
        if !search(f, g, &hs, &cands, &mut chosen, p_order) {
            return Ok(None);
        }
        for ((i, _, _, t), y) in hs.iter().zip(chosen) {
            images[*i] = g.add(&images[*i], &g.scale(y, *t));
        }
    }
    let iso = Isometry { images };
    if !iso.verify(f, g) {
        return Err(Error::Verification("isometry search produced an invalid map".into()));
    }
    Ok(Some(iso))
}

fn search<'a>(
    f: &FiniteQuadraticForm,
    g: &FiniteQuadraticForm,
    hs: &[(usize, Element, u64, u64)],
    cands: &[Vec<&'a Element>],
    chosen: &mut Vec<&'a Element>,
    p_order: u64,
) -> bool {
    let j = chosen.len();
    if j == hs.len() {
        return span_size(g, chosen) == p_order;
    }
    for &y in &cands[j] {
        let ok = (0..j).all(|i| g.b_of(chosen[i], y) == f.b_of(&hs[i].1, &hs[j].1));
        if ok {
            chosen.push(y);
            if search(f, g, hs, cands, chosen, p_order) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn span_size(g: &FiniteQuadraticForm, gens: &[&Element]) -> u64 {
    let mut seen: HashSet<Element> = HashSet::new();
    let zero = vec![0u64; g.orders.len()];
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for h in gens {
            let y = g.add(&x, h);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64
}
