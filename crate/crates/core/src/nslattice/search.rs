//! Choice of the generators of `E_k` among the fiber components.
//!
//! Component names `a_i, b_i, ..` refer to the reference fiber order and a
//! labeling of each fiber that is only defined up to the automorphisms of
//! its dual graph fixing `Θ_0`, and up to exchanging fibers of equal type.
//! Every such labeling is tried; a labeling is accepted when the resulting
//! lattice has the reference rank, determinant and discriminant group, spans
//! all curve classes, and carries elements `β` with the reference orders and
//! values of `q`.

use super::{Ambient, Curve, FibrationData, Quotient, FIBER_LETTERS};
use crate::elliptic::KodairaType;
use crate::error::{Error, Result};
use crate::exactmath::{rat, rat_mod, Rat};
use crate::lattice::{fano_lattice, GramLattice};
use crate::reference::{self, CyclicSummand};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Permutations of `Θ_0 .. Θ_{m-1}` preserving the intersection matrix and
/// fixing `Θ_0`.
pub fn fiber_automorphisms(kind: KodairaType) -> Vec<Vec<usize>> {
    let m = kind.component_count();
    let id: Vec<usize> = (0..m).collect();
    let swap = |pairs: &[(usize, usize)]| {
        let mut p = id.clone();
        for &(a, b) in pairs {
            p.swap(a, b);
        }
        p
    };
    match kind {
        KodairaType::I(n) if n >= 3 => vec![id.clone(), (0..n).map(|i| (n - i) % n).collect()],
        KodairaType::IStar(0) => vec![
            id.clone(),
            swap(&[(1, 2)]),
            swap(&[(1, 3)]),
            swap(&[(2, 3)]),
            vec![0, 2, 3, 1, 4],
            vec![0, 3, 1, 2, 4],
        ],
        KodairaType::IStar(_) => vec![id.clone(), swap(&[(2, 3)])],
        KodairaType::IV => vec![id.clone(), swap(&[(1, 2)])],
        KodairaType::IVStar => vec![id.clone(), swap(&[(3, 5), (4, 6)])],
        _ => vec![id],
    }
}

/// How the names of [`reference::evident_generators`] were realized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    /// `assignment[p]`: the fiber (index into `FibrationData::reducible`)
    /// playing reference position `p`.
    pub assignment: Vec<usize>,
    /// Graph automorphism applied to the component indices of each position.
    pub automorphisms: Vec<Vec<usize>>,
    /// Component indices used at each position, after the automorphism.
    pub chosen: Vec<Vec<usize>>,
    /// `false` when the listed index ranges were kept, `true` when only
    /// their sizes were (a different component was left out).
    pub by_count: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprints {
    pub rank: usize,
    pub det: u64,
    pub group: String,
    /// `E` contains every curve class of the ambient span.
    pub equals_span: bool,
    /// Per cyclic summand: an element of the reference order with the
    /// reference value of `q`, if one exists.
    pub q_beta: Vec<Option<Rat>>,
    /// Per cyclic summand: `q_L(α) + q_E(β) = 0 mod 2`.
    pub lemma_sum: Vec<bool>,
    /// Per cyclic summand: the reference coefficient vector itself lies in
    /// `E^v`, has the reference order and the reference value.
    pub beta_literal: Vec<bool>,
}

impl Fingerprints {
    pub fn rank_ok(&self, k: u8) -> bool {
        reference_rank(k).is_some_and(|r| r == self.rank)
    }

    pub fn det_ok(&self, k: u8) -> bool {
        reference::evident_det(k) == Some(self.det)
    }

    pub fn group_ok(&self, k: u8) -> bool {
        reference::discriminant_group(k) == Some(self.group.as_str())
    }

    pub fn beta_ok(&self) -> bool {
        self.q_beta.iter().all(Option::is_some) && self.lemma_sum.iter().all(|&b| b)
    }

    /// Everything except the literal coefficient vectors.
    pub fn matched(&self, k: u8) -> bool {
        self.rank_ok(k) && self.det_ok(k) && self.group_ok(k) && self.equals_span && self.beta_ok()
    }

    pub fn literal(&self) -> bool {
        self.beta_literal.iter().all(|&b| b)
    }
}

/// `23 - ℓ_k`.
pub fn reference_rank(k: u8) -> Option<usize> {
    let n = crate::polytope::Polytope::fano(k).ok()?.len();
    Some(23 - n)
}

#[derive(Clone, Debug)]
pub struct EvidentLattice {
    pub k: u8,
    pub labels: Vec<String>,
    pub lattice: GramLattice,
    /// Position in the ambient span of each generator.
    pub ambient: Vec<usize>,
    pub labeling: Labeling,
}

#[derive(Clone, Debug)]
pub struct EvidentReport {
    pub evident: EvidentLattice,
    pub fingerprints: Fingerprints,
    /// Labelings examined before the result was fixed.
    pub candidates: usize,
}

impl EvidentReport {
    pub fn matched(&self) -> bool {
        self.fingerprints.matched(self.evident.k)
    }
}

fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![vec![]];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|pre| {
                c.iter().map(move |x| {
                    let mut v = pre.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// All ways of assigning the found fibers to reference positions, keeping
/// types.
fn assignments(kinds: &[KodairaType]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, k) in kinds.iter().enumerate() {
        match groups.iter_mut().find(|g| kinds[g[0]] == *k) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let per_group: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g)).collect();
    product(&per_group)
        .into_iter()
        .map(|choice| {
            let mut a = vec![0; kinds.len()];
            for (g, perm) in groups.iter().zip(choice) {
                for (&pos, fib) in g.iter().zip(perm) {
                    a[pos] = fib;
                }
            }
            a
        })
        .collect()
}

/// Subsets of `1..m` of size `size`, for `size >= m - 2`.
fn near_complete_subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (1..m).collect();
    if size == all.len() {
        return vec![all];
    }
    if size + 1 == all.len() {
        return all.iter().map(|&d| all.iter().copied().filter(|&x| x != d).collect()).collect();
    }
    vec![]
}

fn q_alpha(k: u8, s: &CyclicSummand) -> Result<Rat> {
    let l = fano_lattice(k)?;
    let c: Vec<Rat> = s.coefficients.iter().map(|&(n, d)| rat(n, d)).collect();
    l.q_dual(&c)
}

fn fingerprints(k: u8, e: &GramLattice, span_det: &num_bigint::BigInt, span_rank: usize) -> Result<Fingerprints> {
    let rank = e.rank();
    let det_big = e.determinant();
    let det = det_big.abs().to_u64().unwrap_or(u64::MAX);
    let nondeg = !det_big.is_zero();
    let equals_span = nondeg && rank == span_rank && det_big.abs() == span_det.abs();
    let two = Rat::from_integer(2.into());
    let (group, q_beta, beta_literal) = if nondeg && e.is_even() {
        let df = e.discriminant_form()?;
        let rows = reference::beta_summands(k).unwrap_or(&[]);
        let mut found = Vec::new();
        let mut literal = Vec::new();
        for row in rows {
            let target = rat(row.q.0, row.q.1);
            let hit = !df.form.elements_with(row.order, &target).is_empty();
            found.push(hit.then_some(target.clone()));
            let d: Vec<Rat> = row.coefficients.iter().map(|&(n, m)| rat(n, m)).collect();
            let ok = d.len() == rank && e.in_dual(&d) && {
                let order = d.iter().fold(num_bigint::BigInt::from(1), |a, x| a.lcm(x.denom()));
                order == row.order.into() && rat_mod(&e.inner(&d, &d), &two) == rat_mod(&target, &two)
            };
            literal.push(ok);
        }
        (df.form.group_string(), found, literal)
    } else {
        (String::new(), vec![], vec![])
    };
    let mut lemma_sum = Vec::new();
    let alphas = reference::alpha_summands(k).unwrap_or(&[]);
    for (i, b) in reference::beta_summands(k).unwrap_or(&[]).iter().enumerate() {
        let ok = match (alphas.get(i), q_beta.get(i).cloned().flatten()) {
            (Some(a), Some(qb)) => rat_mod(&(q_alpha(k, a)? + qb), &two).is_zero() && a.order == b.order,
            _ => false,
        };
        lemma_sum.push(ok);
    }
    Ok(Fingerprints { rank, det, group, equals_span, q_beta, lemma_sum, beta_literal })
}

/// Builds `E_k` from the reference generator list, searching the labeling
/// symmetries for one that reproduces all reference fingerprints.
///
/// If no labeling does, the identity labeling is reported with its failing
/// fingerprints.
pub fn build_evident(d: &FibrationData, amb: &Ambient, ns: &Quotient) -> Result<EvidentReport> {
    let k = d.k;
    let gens = reference::evident_generators(k).ok_or(Error::UnknownIndex(k, "6..=18"))?;
    let kinds: Vec<KodairaType> = d.reducible.iter().map(|f| f.kind).collect();
    let span_det = ns.lattice.determinant();
    let span_rank = ns.lattice.rank();
    let gram = amb.span.lattice.gram();

    let mut head = vec![amb.position(Curve::Fiber).unwrap(), amb.position(Curve::Section(0)).unwrap()];
    let mut head_labels = vec!["F".to_string(), "O".to_string()];
    for name in gens.sections {
        let s = d
            .sections
            .iter()
            .position(|s| s.name == *name)
            .ok_or_else(|| Error::Verification(format!("k = {k}: no section {name}")))?;
        head.push(amb.position(Curve::Section(s)).unwrap());
        head_labels.push(name.to_string());
    }
    for r in gens.components {
        if r.fiber >= kinds.len() || r.last >= kinds[r.fiber].component_count() || r.first == 0 {
            return Err(Error::InvalidInput(format!(
                "k = {k}: components {}..={} do not fit fiber {}",
                r.first, r.last, r.fiber
            )));
        }
    }

    let evaluate = |labeling: Labeling| -> Result<(EvidentLattice, Fingerprints)> {
        let mut idx = head.clone();
        let mut labels = head_labels.clone();
        for (r, chosen) in gens.components.iter().zip(&labeling.chosen) {
            let fib = labeling.assignment[r.fiber];
            for (t, &j) in chosen.iter().enumerate() {
                idx.push(amb.position(Curve::Component(fib, j)).unwrap());
                let name = if labeling.by_count { j } else { r.first + t };
                labels.push(format!("{}{name}", FIBER_LETTERS[r.fiber]));
            }
        }
        let lattice = GramLattice::new(gram.select(&idx, &idx))?;
        let fp = fingerprints(k, &lattice, &span_det, span_rank)?;
        Ok((EvidentLattice { k, labels, lattice, ambient: idx, labeling }, fp))
    };

    let assigns = assignments(&kinds);
    let autos: Vec<Vec<Vec<usize>>> = kinds.iter().map(|&t| fiber_automorphisms(t)).collect();
    let mut candidates = 0;
    let mut first_match: Option<(EvidentLattice, Fingerprints)> = None;
    let mut fallback: Option<(EvidentLattice, Fingerprints)> = None;

    for by_count in [false, true] {
        for a in &assigns {
            let per_pos: Vec<Vec<Vec<usize>>> = (0..kinds.len()).map(|p| autos[a[p]].clone()).collect();
            for phi in product(&per_pos) {
                let chosen_sets: Vec<Vec<Vec<usize>>> = gens
                    .components
                    .iter()
                    .map(|r| {
                        let m = kinds[a[r.fiber]].component_count();
                        if by_count {
                            near_complete_subsets(m, r.last - r.first + 1)
                                .into_iter()
                                .map(|s| s.into_iter().map(|j| phi[r.fiber][j]).collect())
                                .collect()
                        } else {
                            vec![(r.first..=r.last).map(|j| phi[r.fiber][j]).collect()]
                        }
                    })
                    .collect();
                for chosen in product(&chosen_sets) {
                    candidates += 1;
                    let labeling = Labeling { assignment: a.clone(), automorphisms: phi.clone(), chosen, by_count };
                    let (e, fp) = evaluate(labeling)?;
                    if fp.matched(k) {
                        if fp.literal() {
                            return Ok(EvidentReport { evident: e, fingerprints: fp, candidates });
                        }
                        if first_match.is_none() {
                            first_match = Some((e, fp));
                        }
                    } else if fallback.is_none() {
                        fallback = Some((e, fp));
                    }
                }
            }
        }
        if first_match.is_some() {
            break;
        }
    }
    let (evident, fingerprints) = first_match.or(fallback).expect("at least one labeling");
    Ok(EvidentReport { evident, fingerprints, candidates })
}
