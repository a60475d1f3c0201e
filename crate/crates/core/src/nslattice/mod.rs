//! Lattices spanned by curves on the fibered K3: the ambient span of the
//! fiber, the sections and all fiber components; the trivial lattice; the
//! evident lattice `E_k`; Mordell-Weil rank and torsion.

mod search;

pub use search::{
    build_evident, fiber_automorphisms, reference_rank, EvidentLattice, EvidentReport, Fingerprints, Labeling,
};

use crate::elliptic::{
    build_fibration, classify_fibers, expected_fibers, intersection_with_zero, resolve_components, section_incidence,
    to_weierstrass, torsion_order, FiberConfiguration, Place, Section, SectionPoint, SingularFiber, WeierstrassModel,
};
use crate::error::{Error, Result};
use crate::exactmath::{gcd, int, is_integer, IntMatrix, Rat};
use crate::lattice::{smith_normal_form, GramLattice};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Letters naming the reducible fibers in reference order.
pub const FIBER_LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

/// Everything the lattice side needs from one specialization of the
/// fibration.
#[derive(Clone, Debug)]
pub struct FibrationData {
    pub k: u8,
    pub lambda: Vec<Rat>,
    pub weierstrass: WeierstrassModel,
    pub fibers: FiberConfiguration,
    /// Reducible fibers, matched to the reference order.
    pub reducible: Vec<SingularFiber>,
    /// Sections, `O` first.
    pub sections: Vec<Section>,
    pub torsion: Vec<Option<usize>>,
    /// `components[v][s]`: component of fiber `v` met by section `s`.
    pub components: Vec<Vec<usize>>,
}

/// Largest torsion order tried when confirming a torsion section.
const TORSION_CAP: usize = 12;

pub fn analyze_fibration(k: u8, lambda: &[Rat]) -> Result<FibrationData> {
    let eq = build_fibration(k, lambda)?;
    let w = to_weierstrass(&eq);
    let fibers = classify_fibers(&w)?;
    let (expected, _) = expected_fibers(k)?;
    let mut found: Vec<Option<&SingularFiber>> = fibers.reducible().into_iter().map(Some).collect();
    if found.len() != expected.len() {
        return Err(Error::Verification(format!(
            "k = {k}: {} reducible fibers, expected {}",
            found.len(),
            expected.len()
        )));
    }
    let mut reducible = Vec::new();
    for t in &expected {
        let slot = found
            .iter_mut()
            .find(|f| f.is_some_and(|f| f.kind == *t))
            .ok_or_else(|| Error::Verification(format!("k = {k}: no fiber of type {t}")))?;
        let fib = slot.take().unwrap();
        if matches!(fib.place, Place::Orbit(_)) {
            return Err(Error::Unsupported(format!("k = {k}: reducible {t} over irrational points")));
        }
        reducible.push(fib.clone());
    }
    let sections = eq.known_sections()?;
    for s in &sections {
        if !crate::elliptic::verify_section(&eq, s) {
            return Err(Error::Verification(format!("k = {k}: section {} is not on the surface", s.name)));
        }
    }
    let torsion = sections.iter().map(|s| torsion_order(&w, s, TORSION_CAP)).collect::<Result<Vec<_>>>()?;
    let mut components = Vec::new();
    for fib in &reducible {
        let hits = sections.iter().map(|s| section_incidence(&w, fib, s)).collect::<Result<Vec<_>>>()?;
        components.push(resolve_components(fib.kind, &hits)?);
    }
    Ok(FibrationData { k, lambda: lambda.to_vec(), weierstrass: w, fibers, reducible, sections, torsion, components })
}

impl FibrationData {
    /// `sum_v contr_v(P, P')` over the reducible fibers.
    pub fn correction_sum(&self, p: usize, q: usize) -> Rat {
        self.reducible
            .iter()
            .zip(&self.components)
            .map(|(f, c)| f.kind.correction(c[p], c[q]))
            .fold(Rat::zero(), |a, b| a + b)
    }

    fn with_zero(&self, p: usize) -> Result<i64> {
        if p == 0 {
            return Ok(-2);
        }
        Ok(intersection_with_zero(&self.weierstrass, &self.sections[p])? as i64)
    }

    /// Height `<P, P>` from the local corrections.
    pub fn height(&self, p: usize) -> Result<Rat> {
        Ok(int(4) + int(2 * self.with_zero(p)?) - self.correction_sum(p, p))
    }
}

/// Common zeros of `(y_P - y_P', z_P - z_P')` over smooth fibers at finite
/// places, counted with multiplicity. A lower bound for `(P . P')`.
pub fn smooth_common_zeros(w: &WeierstrassModel, p: &Section, q: &Section) -> Result<usize> {
    let (SectionPoint::Affine { y1: y, z1: z }, SectionPoint::Affine { y1: y2, z1: z2 }) = (&p.point, &q.point) else {
        return Err(Error::InvalidInput("common zeros need two affine sections".into()));
    };
    let (dy, dz) = (y - y2, z - z2);
    if dy.is_zero() && dz.is_zero() {
        return Err(Error::InvalidInput(format!("sections {} and {} coincide", p.name, q.name)));
    }
    let mut h = if dy.is_zero() {
        dz
    } else if dz.is_zero() {
        dy
    } else {
        gcd(&dy, &dz)
    };
    loop {
        let g = gcd(&h, &w.delta);
        if g.is_constant() {
            break;
        }
        h = h.exact_div(&g)?;
    }
    Ok(h.degree().unwrap_or(0))
}

/// Symmetric table of intersection numbers of the sections, `O` first.
///
/// `(P . O)` is the pole order at infinity. For a pair of sections one of
/// which is torsion, `(P . P')` follows from the vanishing of its height
/// pairing: `<P, P'> = 2 + (P.O) + (P'.O) - (P.P') - sum contr_v(P, P') = 0`.
pub fn pairwise_section_intersections(d: &FibrationData) -> Result<Vec<Vec<i64>>> {
    let n = d.sections.len();
    let mut m = vec![vec![0i64; n]; n];
    for p in 0..n {
        m[p][p] = -2;
        if p > 0 {
            let o = d.with_zero(p)?;
            m[p][0] = o;
            m[0][p] = o;
        }
        if d.torsion[p].is_some() && !d.height(p)?.is_zero() {
            return Err(Error::Verification(format!(
                "torsion section {} has nonzero height {}",
                d.sections[p].name,
                d.height(p)?
            )));
        }
    }
    for p in 1..n {
        for q in p + 1..n {
            if d.torsion[p].is_none() && d.torsion[q].is_none() {
                return Err(Error::Unsupported(format!(
                    "intersection of two sections of infinite order ({}, {})",
                    d.sections[p].name, d.sections[q].name
                )));
            }
            let v = int(2 + d.with_zero(p)? + d.with_zero(q)?) - d.correction_sum(p, q);
            if !is_integer(&v) || v.is_negative() {
                return Err(Error::Verification(format!(
                    "({} . {}) = {v} is not a nonnegative integer",
                    d.sections[p].name, d.sections[q].name
                )));
            }
            let v = v.to_integer().to_i64().unwrap();
            let naive = smooth_common_zeros(&d.weierstrass, &d.sections[p], &d.sections[q])?;
            if (naive as i64) > v {
                return Err(Error::Verification(format!(
                    "({} . {}) = {v} below the {naive} meetings over smooth fibers",
                    d.sections[p].name, d.sections[q].name
                )));
            }
            m[p][q] = v;
            m[q][p] = v;
        }
    }
    Ok(m)
}

/// Gram lattice with a name for every basis vector.
#[derive(Clone, Debug)]
pub struct LabeledLattice {
    pub labels: Vec<String>,
    pub lattice: GramLattice,
}

impl LabeledLattice {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Class of a basis vector of the ambient span.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    Fiber,
    Section(usize),
    /// `(fiber, component)` with `component >= 1`.
    Component(usize, usize),
}

/// Span of `F`, all sections and all non-identity components, with its
/// possibly degenerate Gram matrix.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub curves: Vec<Curve>,
    pub span: LabeledLattice,
}

impl Ambient {
    pub fn position(&self, c: Curve) -> Option<usize> {
        self.curves.iter().position(|x| *x == c)
    }
}

pub fn component_label(fiber: usize, j: usize) -> String {
    format!("{}{j}", FIBER_LETTERS[fiber])
}

pub fn ambient_lattice(d: &FibrationData) -> Result<Ambient> {
    let mut curves = vec![Curve::Fiber];
    let mut labels = vec!["F".to_string()];
    for (i, s) in d.sections.iter().enumerate() {
        curves.push(Curve::Section(i));
        labels.push(s.name.clone());
    }
    for (v, f) in d.reducible.iter().enumerate() {
        for j in 1..f.kind.component_count() {
            curves.push(Curve::Component(v, j));
            labels.push(component_label(v, j));
        }
    }
    let secs = pairwise_section_intersections(d)?;
    let mats: Vec<Vec<Vec<i64>>> = d.reducible.iter().map(|f| f.kind.intersection_matrix()).collect();
    let dot = |a: Curve, b: Curve| -> i64 {
        use Curve::*;
        match (a, b) {
            (Fiber, Fiber) => 0,
            (Fiber, Section(_)) | (Section(_), Fiber) => 1,
            (Fiber, Component(..)) | (Component(..), Fiber) => 0,
            (Section(p), Section(q)) => secs[p][q],
            (Section(p), Component(v, j)) | (Component(v, j), Section(p)) => (d.components[v][p] == j) as i64,
            (Component(v, i), Component(u, j)) => {
                if u == v {
                    mats[v][i][j]
                } else {
                    0
                }
            }
        }
    };
    let rows: Vec<Vec<i64>> = curves.iter().map(|&a| curves.iter().map(|&b| dot(a, b)).collect()).collect();
    Ok(Ambient { curves, span: LabeledLattice { labels, lattice: GramLattice::from_rows(&rows)? } })
}

/// `Z^n / radical` of a symmetric integer Gram matrix: the lattice and the
/// projection of `Z^n` onto it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub lattice: GramLattice,
    /// `rank x n`; column `i` is the image of the `i`-th basis vector.
    pub projection: IntMatrix,
}

impl Quotient {
    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        (0..self.projection.rows())
            .map(|i| (0..x.len()).fold(BigInt::zero(), |a, j| a + self.projection.get(i, j) * &x[j]))
            .collect()
    }
}

pub fn quotient_by_radical(g: &IntMatrix) -> Result<Quotient> {
    let n = g.rows();
    let snf = smith_normal_form(g);
    let r = snf.rank();
    // Columns r.. of v span the integral radical, so the first r rows of
    // v^{-1} give coordinates on the quotient.
    let vr = snf.v.to_rat();
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        let e: Vec<Rat> = (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
        let col = vr.solve(&e)?;
        for i in 0..n {
            if !col[i].is_integer() {
                return Err(Error::Verification("non-unimodular Smith transform".into()));
            }
            inv[i][j] = col[i].to_integer();
        }
    }
    let projection = IntMatrix::from_big_rows(inv[..r].to_vec())?;
    let vtg = snf.v.transpose().mul(g)?.mul(&snf.v)?;
    let idx: Vec<usize> = (0..r).collect();
    Ok(Quotient { lattice: GramLattice::new(vtg.select(&idx, &idx))?, projection })
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}

/// The trivial lattice: `F`, `O` and every non-identity fiber component.
pub fn trivial_lattice(amb: &Ambient) -> LabeledLattice {
    let idx: Vec<usize> = amb
        .curves
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, Curve::Fiber | Curve::Section(0) | Curve::Component(..)))
        .map(|(i, _)| i)
        .collect();
    LabeledLattice {
        labels: idx.iter().map(|&i| amb.span.labels[i].clone()).collect(),
        lattice: GramLattice::new(amb.span.lattice.gram().select(&idx, &idx)).expect("principal minor is symmetric"),
    }
}

/// `rank NS - 2 - sum (m_v - 1)`.
pub fn shioda_tate_rank(ns_rank: usize, fibers: &FiberConfiguration) -> Result<usize> {
    let excess = fibers.component_excess();
    ns_rank.checked_sub(2 + excess).ok_or_else(|| Error::Verification(format!("rank {ns_rank} is below 2 + {excess}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MordellWeilReport {
    pub rank: usize,
    /// Invariant factors of the torsion subgroup, empty when trivial.
    pub torsion: Vec<u64>,
    /// A section whose class generates the free part, if one of the known
    /// sections does (rank one only).
    pub free_generator: Option<String>,
    /// A section whose class generates the (cyclic) torsion part.
    pub torsion_generator: Option<String>,
    /// `|det T| = |det T^| [T^ : T]^2` for the saturation `T^` of `T`.
    pub index_identity: bool,
}

impl MordellWeilReport {
    pub fn torsion_string(&self) -> String {
        crate::lattice::group_string(&self.torsion)
    }
}

/// Mordell-Weil group as `NS / T`, with `NS` the quotient of the ambient
/// span by its radical: torsion `T^/T` and free rank from the Smith form of
/// the inclusion `T -> NS`.
pub fn mordell_weil(d: &FibrationData, amb: &Ambient, ns: &Quotient) -> Result<MordellWeilReport> {
    let n = amb.curves.len();
    let t_idx: Vec<usize> = amb
        .curves
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, Curve::Fiber | Curve::Section(0) | Curve::Component(..)))
        .map(|(i, _)| i)
        .collect();
    let r = ns.lattice.rank();
    let cols: Vec<Vec<BigInt>> = t_idx.iter().map(|&i| ns.project(&unit(n, i))).collect();
    let m = IntMatrix::from_big_rows((0..r).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())?;
    let snf = smith_normal_form(&m);
    let factors = snf.invariant_factors();
    let rank_t = factors.len();
    let torsion: Vec<u64> = factors.iter().filter(|f| !f.is_one()).map(|f| f.to_u64().unwrap()).rev().collect();
    let tors_order: u64 = torsion.iter().product();

    // Class of a section in NS / T: torsion coordinates then free ones.
    let class = |s: usize| -> (Vec<BigInt>, Vec<BigInt>) {
        let p = amb.position(Curve::Section(s)).unwrap();
        let x = ns.project(&unit(n, p));
        let y: Vec<BigInt> = (0..r).map(|i| (0..r).fold(BigInt::zero(), |a, j| a + snf.u.get(i, j) * &x[j])).collect();
        let tors = (0..rank_t).map(|i| num_integer::Integer::mod_floor(&y[i], &factors[i])).collect();
        (tors, y[rank_t..].to_vec())
    };
    let mut free_generator = None;
    let mut torsion_generator = None;
    for s in 1..d.sections.len() {
        let (t, f) = class(s);
        if r - rank_t == 1 && f.len() == 1 && f[0].abs().is_one() && free_generator.is_none() {
            free_generator = Some(d.sections[s].name.clone());
        }
        if f.iter().all(|x| x.is_zero()) && torsion.len() == 1 && torsion_generator.is_none() {
            let order = t
                .iter()
                .zip(&factors)
                .map(|(c, fct)| {
                    let g = num_integer::Integer::gcd(c, fct);
                    (fct / g).to_u64().unwrap()
                })
                .fold(1u64, num_integer::lcm);
            if order == tors_order {
                torsion_generator = Some(d.sections[s].name.clone());
            }
        }
    }

    // Saturation of T: the first rank_t columns of u^{-1}.
    let u_inv = {
        let ur = snf.u.to_rat();
        let mut out = vec![vec![BigInt::zero(); r]; r];
        for j in 0..r {
            let e: Vec<Rat> = (0..r).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
            let col = ur.solve(&e)?;
            for i in 0..r {
                out[i][j] = col[i].to_integer();
            }
        }
        IntMatrix::from_big_rows(out)?
    };
    let idx: Vec<usize> = (0..rank_t).collect();
    let rows: Vec<usize> = (0..r).collect();
    let basis = u_inv.select(&rows, &idx);
    let sat = basis.transpose().mul(ns.lattice.gram())?.mul(&basis)?;
    let t_gram = amb.span.lattice.gram().select(&t_idx, &t_idx);
    let det_t = t_gram.determinant()?.abs();
    let det_sat = sat.determinant()?.abs();
    let index_identity = det_t == det_sat * BigInt::from(tors_order).pow(2);
    Ok(MordellWeilReport { rank: r - rank_t, torsion, free_generator, torsion_generator, index_identity })
}

/// One-line description of the types met by a section, for diagnostics.
pub fn incidence_summary(d: &FibrationData, s: usize) -> String {
    d.reducible.iter().zip(&d.components).map(|(f, c)| format!("{}:{}", f.kind, c[s])).collect::<Vec<_>>().join(" ")
}
