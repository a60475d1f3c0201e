//! The mirror statement `Tr(S_k) = U + L_k`, checked through invariants:
//! `E_k` and `U + L_k` have matching signatures and anti-isometric
//! discriminant forms, and `U + L_k` is unique in its genus.

use crate::elliptic::{generic_specializations, KodairaType};
use crate::error::{Error, Result};
use crate::exactmath::Rat;
use crate::lattice::{
    fano_lattice, forms_isomorphic, hyperbolic_plane, unique_by_invariant, GramLattice, DEFAULT_SEARCH_BOUND,
};
use crate::nslattice::{
    ambient_lattice, analyze_fibration, build_evident, mordell_weil, quotient_by_radical, shioda_tate_rank, Ambient,
    EvidentReport, FibrationData, MordellWeilReport, Quotient,
};
use crate::polytope::Polytope;
use crate::reference;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Everything computed for one `k` at one parameter value.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub data: FibrationData,
    pub ambient: Ambient,
    pub ns: Quotient,
    pub evident: EvidentReport,
    pub mordell_weil: MordellWeilReport,
}

pub fn run_pipeline(k: u8, lambda: &[Rat]) -> Result<Pipeline> {
    let stage = |s: &'static str| move |e: Error| Error::Verification(format!("k = {k}, {s}: {e}"));
    let data = analyze_fibration(k, lambda).map_err(stage("fibration"))?;
    let ambient = ambient_lattice(&data).map_err(stage("section pairings"))?;
    let ns = quotient_by_radical(ambient.span.lattice.gram()).map_err(stage("span"))?;
    let evident = build_evident(&data, &ambient, &ns).map_err(stage("evident lattice"))?;
    let mordell_weil = mordell_weil(&data, &ambient, &ns).map_err(stage("Mordell-Weil"))?;
    Ok(Pipeline { data, ambient, ns, evident, mordell_weil })
}

/// `"p/q"`, with the denominator written out even when it is 1.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub signature: bool,
    pub form_isomorphism: bool,
    pub uniqueness: bool,
    pub determinant: bool,
    pub group: bool,
    pub mordell_weil_rank: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.signature
            && self.form_isomorphism
            && self.uniqueness
            && self.determinant
            && self.group
            && self.mordell_weil_rank
    }

    /// Name of the first failing check.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            ("signature", self.signature),
            ("form_isomorphism", self.form_isomorphism),
            ("uniqueness", self.uniqueness),
            ("determinant", self.determinant),
            ("group", self.group),
            ("mordell_weil_rank", self.mordell_weil_rank),
        ]
        .into_iter()
        .find(|(_, ok)| !ok)
        .map(|(n, _)| n)
    }
}

/// The six mirror checks for an arbitrary Fano-side lattice `l` against
/// the evident lattice `e`.
pub fn lattice_checks(k: u8, l: &GramLattice, e: &GramLattice, mw_rank: usize) -> Result<Checks> {
    let ell = Polytope::fano(k)?.len();
    if ell > 22 {
        return Err(Error::InvalidInput(format!("{ell} vertices")));
    }
    let signature = e.signature().ok() == Some((1, 22 - ell)) && l.signature().ok() == Some((1, ell.saturating_sub(4)));
    let (qe, ql) = (e.discriminant_form().ok(), l.discriminant_form().ok());
    let form_isomorphism = match (&qe, &ql) {
        (Some(a), Some(b)) => matches!(forms_isomorphic(&a.form, &b.form.negate(), DEFAULT_SEARCH_BOUND), Ok(Some(_))),
        _ => false,
    };
    let uniqueness = unique_by_invariant(&hyperbolic_plane().direct_sum(l)).unwrap_or(false);
    let (de, dl) = (e.determinant(), l.determinant());
    let determinant = !de.is_zero() && de.magnitude() == dl.magnitude();
    let group = match (&qe, &ql, reference::discriminant_group(k)) {
        (Some(a), Some(b), Some(g)) => a.form.group_string() == g && b.form.group_string() == g,
        _ => false,
    };
    Ok(Checks { signature, form_isomorphism, uniqueness, determinant, group, mordell_weil_rank: mw_rank == 1 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub place: String,
    #[serde(rename = "type")]
    pub kind: String,
    /// Number of fibers: more than 1 for a Galois orbit of places.
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidentSummary {
    pub rank: usize,
    pub det: u64,
    pub group: String,
    /// Reference values of `q(β)` that some element of the right order
    /// attains, `null` where none does.
    pub q_beta: Vec<Option<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MordellWeilSummary {
    pub rank: usize,
    pub torsion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorVerdict {
    pub k: u8,
    pub lambda_used: Vec<String>,
    pub fibers: Vec<FiberEntry>,
    pub evident: EvidentSummary,
    pub mordell_weil: MordellWeilSummary,
    pub checks: Checks,
    pub overall: bool,
}

impl MirrorVerdict {
    fn from_pipeline(p: &Pipeline) -> Result<Self> {
        let k = p.data.k;
        let l = fano_lattice(k)?;
        let e = &p.evident.evident.lattice;
        let st = shioda_tate_rank(e.rank(), &p.data.fibers)?;
        let checks = lattice_checks(k, &l, e, st)?;
        let fp = &p.evident.fingerprints;
        Ok(MirrorVerdict {
            k,
            lambda_used: p.data.lambda.iter().map(rat_string).collect(),
            fibers: p
                .data
                .fibers
                .fibers
                .iter()
                .map(|f| FiberEntry { place: f.place.to_string(), kind: f.kind.to_string(), count: f.place.count() })
                .collect(),
            evident: EvidentSummary {
                rank: fp.rank,
                det: fp.det,
                group: fp.group.clone(),
                q_beta: fp.q_beta.iter().map(|q| q.as_ref().map(rat_string)).collect(),
            },
            mordell_weil: MordellWeilSummary { rank: p.mordell_weil.rank, torsion: p.mordell_weil.torsion_string() },
            overall: checks.all(),
            checks,
        })
    }

    /// The verdict with the parameter-dependent data left out.
    fn invariant_part(&self) -> (u8, &EvidentSummary, &MordellWeilSummary, &Checks, Vec<&str>) {
        let mut types: Vec<&str> =
            self.fibers.iter().flat_map(|f| std::iter::repeat(f.kind.as_str()).take(f.count)).collect();
        types.sort();
        (self.k, &self.evident, &self.mordell_weil, &self.checks, types)
    }
}

/// Full verdict for `k = 6..=18` at `specializations` generic parameter
/// values drawn from `seed`. The first one is reported; the others must give
/// the same verdict.
pub fn verify_mirror(k: u8, seed: u64, specializations: usize) -> Result<MirrorVerdict> {
    if !(6..=18).contains(&k) {
        return Err(Error::UnknownIndex(k, "6..=18"));
    }
    if specializations == 0 {
        return Err(Error::InvalidInput("at least one specialization is needed".into()));
    }
    let lambdas = generic_specializations(k, seed, specializations)?;
    let verdicts = lambdas
        .iter()
        .map(|l| run_pipeline(k, l).and_then(|p| MirrorVerdict::from_pipeline(&p)))
        .collect::<Result<Vec<_>>>()?;
    let first = &verdicts[0];
    if let Some((i, _)) = verdicts.iter().enumerate().find(|(_, v)| v.invariant_part() != first.invariant_part()) {
        return Err(Error::Verification(format!(
            "k = {k}: the verdict at {:?} differs from the one at {:?}",
            verdicts[i].lambda_used, first.lambda_used
        )));
    }
    Ok(verdicts.into_iter().next().unwrap())
}

/// Lattice facts about `L_k` alone, for any `k = 1..=18`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub k: u8,
    pub rank: usize,
    pub det: String,
    /// `None` for a degenerate lattice.
    pub signature: Option<(usize, usize)>,
    pub group: Option<String>,
    /// Uniqueness criterion for `U + L_k`.
    pub unique: Option<bool>,
}

pub fn lattice_summary(k: u8) -> Result<LatticeSummary> {
    let l = fano_lattice(k)?;
    let nondeg = l.is_nondegenerate();
    Ok(LatticeSummary {
        k,
        rank: l.rank(),
        det: l.determinant().to_string(),
        signature: l.signature().ok(),
        group: nondeg.then(|| l.discriminant_form().map(|d| d.form.group_string())).transpose()?,
        unique: nondeg.then(|| unique_by_invariant(&hyperbolic_plane().direct_sum(&l))).transpose()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub specializations: usize,
    pub verdicts: Vec<MirrorVerdict>,
    pub lattice_only: Vec<LatticeSummary>,
    pub overall: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("seed {}, {} specializations\n\n", self.seed, self.specializations);
        if !self.verdicts.is_empty() {
            s += "| k | λ | fibers | rank E | det | group | MW | sig | form | unique | det | group | MW rank | overall |\n";
            s += "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
            let b = |x: bool| if x { "ok" } else { "FAIL" };
            for v in &self.verdicts {
                let types: Vec<&str> =
                    v.fibers.iter().flat_map(|f| std::iter::repeat(f.kind.as_str()).take(f.count)).collect();
                let c = &v.checks;
                s += &format!(
                    "| {} | {} | {} | {} | {} | {} | rank {}, {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    v.k,
                    v.lambda_used.join(", "),
                    fiber_types_string(&types),
                    v.evident.rank,
                    v.evident.det,
                    v.evident.group,
                    v.mordell_weil.rank,
                    v.mordell_weil.torsion,
                    b(c.signature),
                    b(c.form_isomorphism),
                    b(c.uniqueness),
                    b(c.determinant),
                    b(c.group),
                    b(c.mordell_weil_rank),
                    b(v.overall)
                );
            }
        }
        if !self.lattice_only.is_empty() {
            s += "\n| k | rank L | det L | signature | group | U + L unique |\n|---|---|---|---|---|---|\n";
            for l in &self.lattice_only {
                let sig = l.signature.map_or("degenerate".to_string(), |(a, b)| format!("({a}, {b})"));
                s += &format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    l.k,
                    l.rank,
                    l.det,
                    sig,
                    l.group.as_deref().unwrap_or("-"),
                    l.unique.map_or("-".to_string(), |u| u.to_string())
                );
            }
        }
        s += &format!("\noverall: {}\n", self.overall);
        s
    }
}

/// Verdicts for the chosen `k` (all of `1..=18` when `None`), full for
/// `k >= 6` and lattice-only below.
pub fn report(ks: Option<&[u8]>, seed: u64, specializations: usize) -> Result<Report> {
    let all: Vec<u8> = (1..=18).collect();
    let ks = ks.unwrap_or(&all);
    if let Some(&bad) = ks.iter().find(|k| !(1..=18).contains(*k)) {
        return Err(Error::UnknownIndex(bad, "1..=18"));
    }
    let full: Vec<u8> = ks.iter().copied().filter(|&k| k >= 6).collect();
    let verdicts = full.par_iter().map(|&k| verify_mirror(k, seed, specializations)).collect::<Result<Vec<_>>>()?;
    let lattice_only = ks.iter().filter(|&&k| k < 6).map(|&k| lattice_summary(k)).collect::<Result<Vec<_>>>()?;
    let overall = verdicts.iter().all(|v| v.overall);
    Ok(Report { seed, specializations, verdicts, lattice_only, overall })
}

pub fn report_all(seed: u64, specializations: usize) -> Result<Report> {
    report(None, seed, specializations)
}

/// `"I_8 + I_8 + 8 I_1"` from a list of type names.
pub fn fiber_types_string(types: &[&str]) -> String {
    let mut reducible = Vec::new();
    let mut ones: Vec<(String, usize)> = Vec::new();
    for t in types {
        let kind: KodairaType = t.parse().unwrap_or(KodairaType::I(1));
        if kind.component_count() > 1 {
            reducible.push(kind);
        } else {
            match ones.iter_mut().find(|(n, _)| n == t) {
                Some(e) => e.1 += 1,
                None => ones.push((t.to_string(), 1)),
            }
        }
    }
    let mut parts: Vec<String> = reducible.iter().map(|t| t.to_string()).collect();
    for (t, n) in ones {
        parts.push(if n == 1 { t } else { format!("{n} {t}") });
    }
    parts.join(" + ")
}
