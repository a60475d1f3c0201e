//! Lattice polytopes in R^3: facets, polar duality, the reflexive and Fano
//! tests, Gale transforms and the anticanonical Laurent equation.

mod data;

use crate::error::{Error, Result};
use crate::exactmath::{is_integer, Rat, RatMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Convex hull of finitely many lattice points spanning R^3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    vertices: Vec<[i64; 3]>,
}

/// Supporting plane `<normal, v> = level` with `<normal, v> >= level` on the
/// whole polytope. `normal` is primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: [i64; 3],
    pub level: Rat,
}

/// Polytope whose vertices are rational, e.g. the polar of a lattice polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    vertices: Vec<[Rat; 3]>,
}

fn to_rat3(v: &[i64; 3]) -> [Rat; 3] {
    v.map(|c| Rat::from_integer(c.into()))
}

fn sub3(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn dot_q(n: &[i64; 3], v: &[Rat; 3]) -> Rat {
    (0..3).fold(Rat::zero(), |acc, i| acc + Rat::from_integer(n[i].into()) * &v[i])
}

/// Primitive integer vector on the same ray.
fn primitive(v: &[Rat; 3]) -> [i64; 3] {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    [0, 1, 2].map(|i| (&ints[i] / &g).to_i64().expect("normal vector fits in i64"))
}

fn facets_of(pts: &[[Rat; 3]]) -> Vec<Facet> {
    let n = pts.len();
    let mut found: BTreeMap<[i64; 3], Facet> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = cross(&sub3(&pts[j], &pts[i]), &sub3(&pts[k], &pts[i]));
                if c.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let mut nrm = primitive(&c);
                let mut level = dot_q(&nrm, &pts[i]);
                let vals: Vec<Rat> = pts.iter().map(|p| dot_q(&nrm, p)).collect();
                let above = vals.iter().all(|v| v >= &level);
                let below = vals.iter().all(|v| v <= &level);
                if !above && !below {
                    continue;
                }
                if !above {
                    nrm = nrm.map(|x| -x);
                    level = -level;
                }
                if found.contains_key(&nrm) {
                    continue;
                }
                let on: Vec<usize> = (0..n).filter(|&m| dot_q(&nrm, &pts[m]) == level).collect();
                found.insert(nrm, Facet { vertices: on, normal: nrm, level });
            }
        }
    }
    found.into_values().collect()
}

fn full_dimensional(pts: &[[Rat; 3]]) -> bool {
    if pts.len() < 4 {
        return false;
    }
    let mut m = RatMatrix::zeros(pts.len() - 1, 3);
    for (r, p) in pts[1..].iter().enumerate() {
        let d = sub3(p, &pts[0]);
        for (c, x) in d.into_iter().enumerate() {
            m.set(r, c, x);
        }
    }
    m.rank() == 3
}

/// Points lying on three facets with independent normals.
fn vertex_indices(pts: &[[Rat; 3]], facets: &[Facet]) -> Vec<usize> {
    (0..pts.len())
        .filter(|&i| {
            let normals: Vec<&[i64; 3]> =
                facets.iter().filter(|f| f.vertices.contains(&i)).map(|f| &f.normal).collect();
            let mut m = RatMatrix::zeros(normals.len(), 3);
            for (r, nv) in normals.iter().enumerate() {
                for c in 0..3 {
                    m.set(r, c, Rat::from_integer(nv[c].into()));
                }
            }
            m.rank() == 3
        })
        .collect()
}

impl Polytope {
    /// Fails unless the points are distinct, span R^3 and are all vertices.
    pub fn new(vertices: Vec<[i64; 3]>) -> Result<Self> {
        for i in 0..vertices.len() {
            if vertices[..i].contains(&vertices[i]) {
                return Err(Error::InvalidInput(format!("repeated vertex {:?}", vertices[i])));
            }
        }
        let pts: Vec<[Rat; 3]> = vertices.iter().map(to_rat3).collect();
        if !full_dimensional(&pts) {
            return Err(Error::InvalidInput("points do not span R^3".into()));
        }
        if vertex_indices(&pts, &facets_of(&pts)).len() != pts.len() {
            return Err(Error::InvalidInput("some points are not vertices".into()));
        }
        Ok(Polytope { vertices })
    }

    /// One of the eighteen polytopes `P_1..P_18`.
    pub fn fano(k: u8) -> Result<Self> {
        if !(1..=18).contains(&k) {
            return Err(Error::UnknownIndex(k, "1..=18"));
        }
        Self::new(data::vertices(k))
    }

    pub fn vertices(&self) -> &[[i64; 3]] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn facets(&self) -> Vec<Facet> {
        facets_of(&self.rational_vertices())
    }

    fn rational_vertices(&self) -> Vec<[Rat; 3]> {
        self.vertices.iter().map(to_rat3).collect()
    }

    pub fn to_rational(&self) -> RationalPolytope {
        RationalPolytope { vertices: self.rational_vertices() }
    }

    pub fn contains_origin_in_interior(&self) -> bool {
        self.facets().iter().all(|f| f.level.is_negative())
    }

    /// `P° = { m : <m, v> >= -1 for v in P }`.
    pub fn polar_dual(&self) -> Result<RationalPolytope> {
        self.to_rational().polar_dual()
    }

    /// Origin in the interior and the polar is a lattice polytope.
    pub fn is_reflexive(&self) -> bool {
        match self.polar_dual() {
            Ok(d) => d.vertices.iter().all(|v| v.iter().all(is_integer)),
            Err(_) => false,
        }
    }

    /// Origin in the interior and every facet a unimodular triangle.
    pub fn is_fano(&self) -> bool {
        if !self.contains_origin_in_interior() {
            return false;
        }
        self.facets().iter().all(|f| {
            if f.vertices.len() != 3 {
                return false;
            }
            let [a, b, c] = [0, 1, 2].map(|i| self.vertices[f.vertices[i]]);
            let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]);
            det.abs() == 1
        })
    }

    /// Integral kernel of the extended vertex matrix, normalized to the
    /// identity on rows `4..=ℓ`. Needs the first three vertices to be the
    /// standard basis.
    pub fn gale_transform(&self) -> Result<GaleTransform> {
        let l = self.vertices.len();
        if self.vertices[..3] != [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            return Err(Error::InvalidInput("Gale normalization needs e1, e2, e3 as the first three vertices".into()));
        }
        let columns = (3..l)
            .map(|j| {
                let v = self.vertices[j];
                let mut col = vec![0i64; l + 1];
                col[0] = v[0] + v[1] + v[2] - 1;
                col[1] = -v[0];
                col[2] = -v[1];
                col[3] = -v[2];
                col[j + 1] = 1;
                col
            })
            .collect();
        Ok(GaleTransform { columns })
    }

    /// `1 + x + y + z + sum_i λ_i x^{v_{i+3}} = 0` with `λ_i` numbered by
    /// vertex order. Needs `e1, e2, e3` as the first three vertices.
    pub fn anticanonical_equation(&self) -> Result<LaurentEquation> {
        if self.vertices[..3] != [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            return Err(Error::InvalidInput(
                "anticanonical normalization needs e1, e2, e3 as the first three vertices".into(),
            ));
        }
        let mut terms = vec![LaurentTerm { coefficient: Coefficient::One, exponent: [0, 0, 0] }];
        for v in &self.vertices[..3] {
            terms.push(LaurentTerm { coefficient: Coefficient::One, exponent: *v });
        }
        for (i, v) in self.vertices[3..].iter().enumerate() {
            terms.push(LaurentTerm { coefficient: Coefficient::Lambda(i + 1), exponent: *v });
        }
        Ok(LaurentEquation { terms })
    }
}

impl RationalPolytope {
    pub fn new(vertices: Vec<[Rat; 3]>) -> Result<Self> {
        if !full_dimensional(&vertices) {
            return Err(Error::InvalidInput("points do not span R^3".into()));
        }
        Ok(RationalPolytope { vertices })
    }

    pub fn vertices(&self) -> &[[Rat; 3]] {
        &self.vertices
    }

    pub fn facets(&self) -> Vec<Facet> {
        facets_of(&self.vertices)
    }

    /// Fails when the origin is not an interior point.
    pub fn polar_dual(&self) -> Result<RationalPolytope> {
        let fs = self.facets();
        if fs.iter().any(|f| !f.level.is_negative()) {
            return Err(Error::InvalidInput("origin is not an interior point".into()));
        }
        let vertices = fs
            .iter()
            .map(|f| {
                let s = -f.level.recip();
                f.normal.map(|c| Rat::from_integer(c.into()) * &s)
            })
            .collect();
        Ok(RationalPolytope { vertices })
    }

    pub fn to_lattice(&self) -> Option<Polytope> {
        let v: Option<Vec<[i64; 3]>> = self
            .vertices
            .iter()
            .map(|p| {
                let arr: Option<Vec<i64>> =
                    p.iter().map(|c| is_integer(c).then(|| c.to_integer().to_i64()).flatten()).collect();
                arr.map(|a| [a[0], a[1], a[2]])
            })
            .collect();
        Polytope::new(v?).ok()
    }

    /// Same vertex set, ignoring order.
    pub fn same_vertices(&self, o: &RationalPolytope) -> bool {
        let mut a = self.vertices.clone();
        let mut b = o.vertices.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Kernel columns `κ_1..κ_{ℓ-3}`, each of length `ℓ + 1` (row 0 belongs to the
/// origin). `λ_i = prod_h c_h^{κ_i[h]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaleTransform {
    pub columns: Vec<Vec<i64>>,
}

impl GaleTransform {
    /// Checks `P̃ κ = 0` for every column against the polytope.
    pub fn annihilates(&self, p: &Polytope) -> bool {
        self.columns.iter().all(|col| {
            let mut acc = [col[0], 0, 0, 0];
            for (j, v) in p.vertices().iter().enumerate() {
                let c = col[j + 1];
                acc[0] += c;
                for t in 0..3 {
                    acc[t + 1] += c * v[t];
                }
            }
            acc == [0, 0, 0, 0]
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Coefficient {
    One,
    Lambda(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTerm {
    pub coefficient: Coefficient,
    pub exponent: [i64; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentEquation {
    pub terms: Vec<LaurentTerm>,
}

/// Polynomial form after clearing denominators: `monomial * (1+x+y+z) +
/// sum λ_i m_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedEquation {
    pub base: [u32; 3],
    pub lambda_terms: Vec<(usize, [u32; 3])>,
}

impl LaurentEquation {
    /// Multiplies by the smallest monomial making every exponent nonnegative.
    pub fn cleared(&self) -> ClearedEquation {
        let mut shift = [0i64; 3];
        for t in &self.terms {
            for i in 0..3 {
                shift[i] = shift[i].max(-t.exponent[i]);
            }
        }
        let lift = |e: &[i64; 3]| [0, 1, 2].map(|i| (e[i] + shift[i]) as u32);
        let mut lambda_terms: Vec<(usize, [u32; 3])> = self
            .terms
            .iter()
            .filter_map(|t| match t.coefficient {
                Coefficient::Lambda(i) => Some((i, lift(&t.exponent))),
                Coefficient::One => None,
            })
            .collect();
        lambda_terms.sort();
        ClearedEquation { base: lift(&[0, 0, 0]), lambda_terms }
    }
}

fn sup(n: u32) -> String {
    const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

fn monomial(e: &[u32; 3]) -> String {
    let parts: Vec<String> = ["x", "y", "z"]
        .iter()
        .zip(e)
        .filter(|(_, &p)| p > 0)
        .map(|(v, &p)| if p == 1 { v.to_string() } else { format!("{v}{}", sup(p)) })
        .collect();
    parts.join(" ")
}

impl ClearedEquation {
    /// Is `self` the same polynomial as `other` up to a monomial factor and
    /// a renumbering of the λ's? Returns the renumbering `i -> π(i)`.
    pub fn matches_up_to_relabeling(&self, other: &ClearedEquation) -> Option<BTreeMap<usize, usize>> {
        let norm = |c: &ClearedEquation| {
            let mut m = c.base;
            for (_, e) in &c.lambda_terms {
                for i in 0..3 {
                    m[i] = m[i].min(e[i]);
                }
            }
            let d = |e: &[u32; 3]| [0, 1, 2].map(|i| e[i] - m[i]);
            (d(&c.base), c.lambda_terms.iter().map(|(i, e)| (*i, d(e))).collect::<Vec<_>>())
        };
        let (b1, t1) = norm(self);
        let (b2, t2) = norm(other);
        if b1 != b2 || t1.len() != t2.len() {
            return None;
        }
        let mut perm = BTreeMap::new();
        for (i, e) in &t1 {
            let (j, _) = t2.iter().find(|(_, f)| f == e)?;
            if perm.values().any(|v| v == j) {
                return None;
            }
            perm.insert(*i, *j);
        }
        Some(perm)
    }

    pub fn relabeled(&self, perm: &BTreeMap<usize, usize>) -> ClearedEquation {
        let mut lambda_terms: Vec<(usize, [u32; 3])> =
            self.lambda_terms.iter().map(|(i, e)| (*perm.get(i).unwrap_or(i), *e)).collect();
        lambda_terms.sort();
        ClearedEquation { base: self.base, lambda_terms }
    }

    /// Reference equation for `k = 6..=18`.
    pub fn reference(k: u8) -> Option<ClearedEquation> {
        Some(ClearedEquation { base: [1, 1, 1], lambda_terms: data::reference_terms(k)? })
    }
}

impl fmt::Display for ClearedEquation {
    /// `x y z (x+y+z+1)+λ1 x y+λ2 x y²+λ3 = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = monomial(&self.base);
        if b.is_empty() {
            write!(f, "(x+y+z+1)")?;
        } else {
            write!(f, "{b} (x+y+z+1)")?;
        }
        for (i, e) in &self.lambda_terms {
            let m = monomial(e);
            if m.is_empty() {
                write!(f, "+λ{i}")?;
            } else {
                write!(f, "+λ{i} {m}")?;
            }
        }
        write!(f, " = 0")
    }
}

/// Anticanonical equation of `P_k` with the λ's numbered as in the reference
/// table (which swaps λ2 and λ3 relative to vertex order for k = 17, 18).
pub fn reference_labeling(k: u8) -> Result<(ClearedEquation, BTreeMap<usize, usize>)> {
    let eq = Polytope::fano(k)?.anticanonical_equation()?.cleared();
    let reference = ClearedEquation::reference(k).ok_or_else(|| Error::UnknownIndex(k, "6..=18"))?;
    let perm = eq.matches_up_to_relabeling(&reference).ok_or_else(|| {
        Error::Verification(format!("anticanonical equation of P_{k} does not match the reference form"))
    })?;
    Ok((eq.relabeled(&perm), perm))
}
