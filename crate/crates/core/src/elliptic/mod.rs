//! Elliptic fibrations `z1^2 = 4 y1^3 + a1 y1^2 + a2 y1 + a3` over the
//! `x1`-line: Weierstrass reduction, singular fibers, sections and where they
//! meet the fiber components.

mod data;
mod group;
mod kodaira;
mod local;
mod specialize;

pub use group::{CurvePoint, RatFunc};
pub use kodaira::KodairaType;
pub use local::{resolve_components, LocalHit};
pub use specialize::{
    generic_specializations, is_generic, reference_place_count, seed_from_env, LambdaSampler, DEFAULT_SEED,
    PILOT_DRAWS, SEED_ENV,
};

use crate::error::{Error, Result};
use crate::exactmath::{cubic_discriminant, eval_expr, fmt_rat, gcd, int, Rat, UniPoly};
use num_traits::{One, Zero};
use std::fmt;

/// Arity of λ for the fibration of `P_k`, `k = 6..=18`.
pub fn lambda_arity(k: u8) -> Result<usize> {
    Ok(row(k)?.arity)
}

fn row(k: u8) -> Result<data::FibrationRow> {
    data::row(k).ok_or(Error::UnknownIndex(k, "6..=18"))
}

fn check_lambda(k: u8, lambda: &[Rat]) -> Result<()> {
    let n = lambda_arity(k)?;
    if lambda.len() != n {
        return Err(Error::Arity { expected: n, got: lambda.len() });
    }
    if let Some(i) = lambda.iter().position(|l| l.is_zero()) {
        return Err(Error::Degenerate(format!("λ{} = 0", i + 1)));
    }
    Ok(())
}

fn poly_in_x(s: &str, lambda: &[Rat]) -> Result<UniPoly> {
    eval_expr(s, &|v: &str| -> Option<UniPoly> {
        if v == "x" {
            return Some(UniPoly::x());
        }
        let i: usize = v.strip_prefix('l')?.parse().ok()?;
        lambda.get(i.checked_sub(1)?).cloned().map(UniPoly::constant)
    })
}

/// `z1^2 = 4 y1^3 + a1 y1^2 + a2 y1 + a3` with `a_i in Q[x1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationEquation {
    pub k: u8,
    pub lambda: Vec<Rat>,
    pub a1: UniPoly,
    pub a2: UniPoly,
    pub a3: UniPoly,
}

/// The fibration of the mirror K3 surface of `P_k` at the given λ.
///
/// λ is numbered as in the reference anticanonical equations (see
/// [`crate::polytope::reference_labeling`]).
pub fn build_fibration(k: u8, lambda: &[Rat]) -> Result<FibrationEquation> {
    check_lambda(k, lambda)?;
    let r = row(k)?;
    let [a1, a2, a3] = [0, 1, 2].map(|i| poly_in_x(r.a[i], lambda));
    Ok(FibrationEquation { k, lambda: lambda.to_vec(), a1: a1?, a2: a2?, a3: a3? })
}

impl FibrationEquation {
    /// Right-hand side evaluated at `y1 = y`.
    pub fn rhs(&self, y: &UniPoly) -> UniPoly {
        let four = UniPoly::constant(int(4));
        &(&(&(&four * &y.pow(3)) + &(&self.a1 * &y.pow(2))) + &(&self.a2 * y)) + &self.a3
    }

    /// Classical discriminant in `y1` of the right-hand side; equals `16 Δ`.
    pub fn discriminant_in_y(&self) -> Result<UniPoly> {
        cubic_discriminant(&UniPoly::constant(int(4)), &self.a1, &self.a2, &self.a3)
    }

    /// Sections listed for this fibration, the zero section first.
    pub fn known_sections(&self) -> Result<Vec<Section>> {
        let mut out = vec![Section { name: "O".into(), point: SectionPoint::Zero }];
        for (name, y, z) in row(self.k)?.sections {
            out.push(Section {
                name: name.to_string(),
                point: SectionPoint::Affine { y1: poly_in_x(y, &self.lambda)?, z1: poly_in_x(z, &self.lambda)? },
            });
        }
        Ok(out)
    }

    /// Reducible fiber types in the reference order and the `I_1` count.
    pub fn expected_fibers(&self) -> Result<(Vec<KodairaType>, usize)> {
        expected_fibers(self.k)
    }
}

/// Reference singular fibers of the fibration of `P_k`: reducible types in
/// listed order, and the number of `I_1` fibers.
pub fn expected_fibers(k: u8) -> Result<(Vec<KodairaType>, usize)> {
    let r = row(k)?;
    Ok((r.reducible.to_vec(), r.nodal))
}

/// `(X, Y, Z)` expressions of the birational map onto the anticanonical
/// surface, in `x1, y1, z1` and `l1..l5`.
pub fn birational_map(k: u8) -> Result<[&'static str; 3]> {
    Ok(row(k)?.map)
}

/// `Y^2 = 4 X^3 - g2 X - g3` with `X = y1 + a1/12`, `Y = z1`, and
/// `Δ = g2^3 - 27 g3^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    pub g2: UniPoly,
    pub g3: UniPoly,
    pub delta: UniPoly,
    /// `a1 / 12`, so that `X = y1 + shift`.
    pub shift: UniPoly,
}

pub fn to_weierstrass(eq: &FibrationEquation) -> WeierstrassModel {
    let c = |n: i64, d: i64| UniPoly::constant(crate::exactmath::rat(n, d));
    let a1 = &eq.a1;
    let a2 = &eq.a2;
    let g2 = &(&c(1, 12) * &a1.pow(2)) - a2;
    let g3 = &(&(&c(-1, 216) * &a1.pow(3)) + &(&(&c(1, 12) * a1) * a2)) - &eq.a3;
    let shift = a1.scale(&crate::exactmath::rat(1, 12));
    WeierstrassModel::new(g2, g3, shift)
}

impl WeierstrassModel {
    pub fn new(g2: UniPoly, g3: UniPoly, shift: UniPoly) -> Self {
        let delta = &g2.pow(3) - &g3.pow(2).scale(&int(27));
        WeierstrassModel { g2, g3, delta, shift }
    }

    /// `4 X^3 - g2 X - g3`.
    pub fn rhs(&self, x: &UniPoly) -> UniPoly {
        &(&x.pow(3).scale(&int(4)) - &(&self.g2 * x)) - &self.g3
    }

    /// Checks the substitution identity
    /// `4(y + a1/12)^3 - g2 (y + a1/12) - g3 = 4y^3 + a1 y^2 + a2 y + a3`
    /// coefficient by coefficient in `y`.
    pub fn reduces(&self, eq: &FibrationEquation) -> bool {
        // Coefficients in y of the left side.
        let s = &self.shift;
        let four = int(4);
        let l3 = UniPoly::constant(four.clone());
        let l2 = s.scale(&int(12));
        let l1 = &s.pow(2).scale(&int(12)) - &self.g2;
        let l0 = &(&s.pow(3).scale(&four) - &(&self.g2 * s)) - &self.g3;
        l3 == UniPoly::constant(four) && l2 == eq.a1 && l1 == eq.a2 && l0 == eq.a3
    }

    /// `j = g2^3 / Δ` in lowest terms with monic denominator.
    pub fn j_invariant(&self) -> Result<JInvariant> {
        if self.delta.is_zero() {
            return Err(Error::Degenerate("Δ vanishes identically".into()));
        }
        let num = self.g2.pow(3);
        let g = gcd(&num, &self.delta);
        let mut numerator = num.exact_div(&g)?;
        let mut denominator = self.delta.exact_div(&g)?;
        let lc = denominator.leading().unwrap().clone();
        numerator = numerator.scale(&lc.recip());
        denominator = denominator.monic();
        Ok(JInvariant { numerator, denominator })
    }
}

/// `j`-invariant as a reduced rational function of `x1`, normalized so that
/// `j = 1` is the `g3 = 0` locus (no factor 1728).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JInvariant {
    pub numerator: UniPoly,
    pub denominator: UniPoly,
}

/// Point of the base `P^1`, or a Galois orbit of points given by a
/// squarefree polynomial without rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Finite(Rat),
    Infinity,
    Orbit(UniPoly),
}

impl Place {
    pub fn count(&self) -> usize {
        match self {
            Place::Orbit(f) => f.degree().unwrap_or(0),
            _ => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(c) => write!(f, "{}", fmt_rat(c)),
            Place::Infinity => write!(f, "inf"),
            Place::Orbit(p) => write!(f, "roots of {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularFiber {
    pub place: Place,
    pub kind: KodairaType,
    pub ord_g2: Option<usize>,
    pub ord_g3: Option<usize>,
    pub ord_delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberConfiguration {
    pub fibers: Vec<SingularFiber>,
}

impl FiberConfiguration {
    /// `sum e(F_v)`, counting every point of an orbit.
    pub fn euler_sum(&self) -> usize {
        self.fibers.iter().map(|f| f.kind.euler_number() * f.place.count()).sum()
    }

    /// Number of distinct singular points of the base.
    pub fn place_count(&self) -> usize {
        self.fibers.iter().map(|f| f.place.count()).sum()
    }

    /// `sum (m_v - 1)` over all singular fibers.
    pub fn component_excess(&self) -> usize {
        self.fibers.iter().map(|f| (f.kind.component_count() - 1) * f.place.count()).sum()
    }

    pub fn reducible(&self) -> Vec<&SingularFiber> {
        self.fibers.iter().filter(|f| f.kind.is_reducible()).collect()
    }

    /// Every fiber type with multiplicity, sorted.
    pub fn type_multiset(&self) -> Vec<KodairaType> {
        let mut v: Vec<KodairaType> =
            self.fibers.iter().flat_map(|f| std::iter::repeat_n(f.kind, f.place.count())).collect();
        v.sort();
        v
    }
}

/// `I_8 + I_8 + 8 I_1` style summary: reducible types in the given order,
/// then irreducible ones grouped with counts.
pub fn fiber_summary(reducible: &[KodairaType], irreducible: &[(KodairaType, usize)]) -> String {
    let mut parts: Vec<String> = reducible.iter().map(|t| t.to_string()).collect();
    for (t, n) in irreducible {
        parts.push(if *n == 1 { t.to_string() } else { format!("{n} {t}") });
    }
    parts.join(" + ")
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let red: Vec<KodairaType> = self.reducible().iter().map(|x| x.kind).collect();
        let mut irr: Vec<(KodairaType, usize)> = Vec::new();
        for x in self.fibers.iter().filter(|x| !x.kind.is_reducible()) {
            match irr.iter_mut().find(|(t, _)| *t == x.kind) {
                Some(e) => e.1 += x.place.count(),
                None => irr.push((x.kind, x.place.count())),
            }
        }
        irr.sort();
        write!(f, "{}", fiber_summary(&red, &irr))
    }
}

/// Splits a squarefree `f` by the order of vanishing of `g` at its roots.
fn split_by_order(f: &UniPoly, g: &UniPoly) -> Result<Vec<(UniPoly, Option<usize>)>> {
    if g.is_zero() {
        return Ok(vec![(f.clone(), None)]);
    }
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut cur_g = g.clone();
    let mut e = 0;
    while !rest.is_constant() {
        let s = gcd(&rest, &cur_g);
        let exact = rest.exact_div(&s)?;
        if !exact.is_constant() {
            out.push((exact.monic(), Some(e)));
        }
        if s.is_constant() {
            break;
        }
        cur_g = cur_g.exact_div(&s)?;
        rest = s;
        e += 1;
    }
    Ok(out)
}

/// Removes `u^4, u^6, u^12` from the local orders while both `g2` and `g3`
/// allow it.
fn minimalize(mut a: Option<usize>, mut b: Option<usize>, mut d: usize) -> (Option<usize>, Option<usize>, usize) {
    while a.map_or(true, |a| a >= 4) && b.map_or(true, |b| b >= 6) && d >= 12 {
        a = a.map(|a| a - 4);
        b = b.map(|b| b - 6);
        d -= 12;
    }
    (a, b, d)
}

fn typed(o2: Option<usize>, o3: Option<usize>, od: usize, place: &Place) -> Result<Option<SingularFiber>> {
    let (a, b, d) = minimalize(o2, o3, od);
    Ok(KodairaType::from_orders(a, b, d).map_err(|e| at_place(e, place))?.map(|kind| SingularFiber {
        place: place.clone(),
        kind,
        ord_g2: a,
        ord_g3: b,
        ord_delta: d,
    }))
}

fn order_at_infinity(p: &UniPoly, weight: usize) -> Result<Option<usize>> {
    match p.degree() {
        None => Ok(None),
        Some(d) if d > weight => {
            Err(Error::NotK3(format!("degree {d} exceeds the weight {weight} of a K3 Weierstrass coefficient")))
        }
        Some(d) => Ok(Some(weight - d)),
    }
}

/// Singular fibers from the orders of `g2`, `g3`, `Δ` at every place of
/// `P^1`, including the point at infinity.
pub fn classify_fibers(w: &WeierstrassModel) -> Result<FiberConfiguration> {
    if w.delta.is_zero() {
        return Err(Error::Degenerate("Δ vanishes identically".into()));
    }
    let mut fibers = Vec::new();
    let sqf = w.delta.squarefree_decomposition()?;
    for (f, m) in &sqf.factors {
        let roots = f.rational_roots();
        let mut residual = f.clone();
        for c in &roots {
            residual = residual.exact_div(&UniPoly::linear_root(c))?;
            fibers.extend(typed(w.g2.order_at(c), w.g3.order_at(c), *m, &Place::Finite(c.clone()))?);
        }
        if residual.is_constant() {
            continue;
        }
        for (part, o2) in split_by_order(&residual, &w.g2)? {
            for (orbit, o3) in split_by_order(&part, &w.g3)? {
                fibers.extend(typed(o2, o3, *m, &Place::Orbit(orbit))?);
            }
        }
    }
    let o2 = order_at_infinity(&w.g2, 8)?;
    let o3 = order_at_infinity(&w.g3, 12)?;
    let od = order_at_infinity(&w.delta, 24)?.expect("Δ is nonzero");
    fibers.extend(typed(o2, o3, od, &Place::Infinity)?);
    fibers.sort_by(|a, b| place_key(&a.place).cmp(&place_key(&b.place)));
    Ok(FiberConfiguration { fibers })
}

fn place_key(p: &Place) -> (u8, Option<Rat>, usize) {
    match p {
        Place::Finite(c) => (0, Some(c.clone()), 0),
        Place::Infinity => (1, None, 0),
        Place::Orbit(f) => (2, None, f.degree().unwrap_or(0)),
    }
}

fn at_place(e: Error, p: &Place) -> Error {
    match e {
        Error::NonMinimal(m) => Error::NonMinimal(format!("{m} at x1 = {p}")),
        Error::NotK3(m) => Error::NotK3(format!("{m} at x1 = {p}")),
        other => other,
    }
}

/// Section of the fibration in the original coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionPoint {
    /// The zero section at infinity of every fiber.
    Zero,
    Affine {
        y1: UniPoly,
        z1: UniPoly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub point: SectionPoint,
}

impl Section {
    /// `(X, Y)` on the Weierstrass model, `None` for the zero section.
    pub fn weierstrass(&self, w: &WeierstrassModel) -> Option<(UniPoly, UniPoly)> {
        match &self.point {
            SectionPoint::Zero => None,
            SectionPoint::Affine { y1, z1 } => Some((y1 + &w.shift, z1.clone())),
        }
    }

    pub fn curve_point(&self, w: &WeierstrassModel) -> CurvePoint {
        match self.weierstrass(w) {
            None => CurvePoint::Zero,
            Some((x, y)) => CurvePoint::Affine(RatFunc::from_poly(x), RatFunc::from_poly(y)),
        }
    }
}

/// Does the section satisfy the fibration equation identically in `x1`?
pub fn verify_section(eq: &FibrationEquation, s: &Section) -> bool {
    match &s.point {
        SectionPoint::Zero => true,
        SectionPoint::Affine { y1, z1 } => z1.pow(2) == eq.rhs(y1),
    }
}

/// Order of the section in the Mordell-Weil group, if at most `max`.
pub fn torsion_order(w: &WeierstrassModel, s: &Section, max: usize) -> Result<Option<usize>> {
    group::torsion_order(w, &s.curve_point(w), max)
}

/// Intersection number `(P . O)`: the pole order of `X_P` at infinity beyond
/// weight 4, halved.
pub fn intersection_with_zero(w: &WeierstrassModel, s: &Section) -> Result<usize> {
    let Some((x, _)) = s.weierstrass(w) else {
        return Err(Error::InvalidInput("(O . O) is a self-intersection".into()));
    };
    match x.degree() {
        Some(d) if d > 4 => {
            if (d - 4) % 2 != 0 {
                return Err(Error::NotK3(format!("section X-coordinate of odd pole order {}", d - 4)));
            }
            Ok((d - 4) / 2)
        }
        _ => Ok(0),
    }
}

/// Local incidence of a section at each reducible fiber, before orientation
/// normalization (see [`resolve_components`]).
pub fn section_incidence(w: &WeierstrassModel, fiber: &SingularFiber, s: &Section) -> Result<LocalHit> {
    local::incidence(w, fiber, s)
}

/// Evaluates the birational map and the anticanonical equation at a point
/// of the K3 given as `(x1, y1, z1)` in the quadratic ring `Q[z1]/(z1^2 - r)`.
/// Returns whether the equation vanishes there. Used as an exact self-check
/// of the map data.
pub fn map_lands_on_surface(eq: &FibrationEquation, x1: &Rat, y1: &Rat) -> Result<bool> {
    use crate::exactmath::Ring;
    let rv = eq.rhs(&UniPoly::constant(y1.clone())).eval(x1);
    let q = |a: Rat, b: Rat| group::Quad::new(a, b, rv.clone());
    let lam: Vec<group::Quad> = eq.lambda.iter().map(|l| q(l.clone(), Rat::zero())).collect();
    let vars = |v: &str| -> Option<group::Quad> {
        match v {
            "x1" => Some(q(x1.clone(), Rat::zero())),
            "y1" => Some(q(y1.clone(), Rat::zero())),
            "z1" => Some(q(Rat::zero(), Rat::one())),
            _ => {
                let i: usize = v.strip_prefix('l')?.parse().ok()?;
                lam.get(i.checked_sub(1)?).cloned()
            }
        }
    };
    let m = birational_map(eq.k)?;
    let xyz: Vec<group::Quad> = m.iter().map(|s| eval_expr(s, &vars)).collect::<Result<Vec<_>>>()?;
    let (px, py, pz) = (&xyz[0], &xyz[1], &xyz[2]);
    let one = q(Rat::one(), Rat::zero());
    let base = px.mul(py).mul(pz).mul(&px.add(py).add(pz).add(&one));
    let reference = crate::polytope::ClearedEquation::reference(eq.k).ok_or(Error::UnknownIndex(eq.k, "6..=18"))?;
    let mut total = base;
    for (i, e) in &reference.lambda_terms {
        let mut t = lam[i - 1].clone();
        for (v, p) in [px, py, pz].iter().zip(e) {
            for _ in 0..*p {
                t = t.mul(v);
            }
        }
        total = total.add(&t);
    }
    Ok(total.is_zero())
}
