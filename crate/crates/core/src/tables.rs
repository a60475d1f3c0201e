//! Computed reproductions of the reference tables, each cell compared
//! against the embedded reference value.

use crate::elliptic::{
    expected_fibers, fiber_summary, generic_specializations, is_generic, reference_place_count, KodairaType,
};
use crate::error::Result;
use crate::exactmath::{rat, rat_mod, Rat};
use crate::lattice::fano_lattice;
use crate::mirror::{rat_string, run_pipeline, Pipeline};
use crate::nslattice::reference_rank;
use crate::polytope::{reference_labeling, ClearedEquation, Polytope};
use crate::reference;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Per row: does the computed value equal the reference one.
    pub matches: Vec<bool>,
}

impl Table {
    fn new(title: &str, header: &[&str]) -> Self {
        Table {
            title: title.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: vec![],
            matches: vec![],
        }
    }

    fn push(&mut self, row: Vec<String>, ok: bool) {
        self.rows.push(row);
        self.matches.push(ok);
    }

    pub fn all_match(&self) -> bool {
        self.matches.iter().all(|&m| m)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("### {}\n\n| {} | match |\n", self.title, self.header.join(" | "));
        s += &format!("|{}\n", "---|".repeat(self.header.len() + 1));
        for (r, ok) in self.rows.iter().zip(&self.matches) {
            s += &format!("| {} | {} |\n", r.join(" | "), if *ok { "yes" } else { "**no**" });
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub seed: u64,
    pub specializations: usize,
    pub tables: Vec<Table>,
}

impl Tables {
    pub fn all_match(&self) -> bool {
        self.tables.iter().all(Table::all_match)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("seed {}, {} specializations\n\n", self.seed, self.specializations);
        for t in &self.tables {
            s += &t.to_markdown();
            s += "\n";
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }
}

fn yes(b: bool) -> String {
    b.to_string()
}

pub fn polytope_table() -> Result<Table> {
    let mut t = Table::new(
        "Fano polytopes and their lattices",
        &["k", "vertices", "Fano", "reflexive", "polar involution", "rank L", "det L"],
    );
    for k in 1..=18 {
        let p = Polytope::fano(k)?;
        let dd = p.polar_dual()?.polar_dual()?;
        let inv = dd.same_vertices(&p.to_rational());
        let l = fano_lattice(k)?;
        let ok = p.is_fano() && p.is_reflexive() && inv && l.rank() + 3 == p.len();
        t.push(
            vec![
                k.to_string(),
                p.len().to_string(),
                yes(p.is_fano()),
                yes(p.is_reflexive()),
                yes(inv),
                l.rank().to_string(),
                l.determinant().to_string(),
            ],
            ok,
        );
    }
    Ok(t)
}

pub fn equation_table() -> Result<Table> {
    let mut t = Table::new("Defining equations", &["k", "equation", "λ renumbering"]);
    for k in 6..=18 {
        let (eq, perm) = reference_labeling(k)?;
        let moved: Vec<String> = perm.iter().filter(|(a, b)| a != b).map(|(a, b)| format!("λ{a}→λ{b}")).collect();
        let ok = Some(&eq) == ClearedEquation::reference(k).as_ref();
        t.push(vec![k.to_string(), eq.to_string(), if moved.is_empty() { "-".into() } else { moved.join(" ") }], ok);
    }
    Ok(t)
}

pub fn fiber_table(seed: u64, specializations: usize) -> Result<Table> {
    let mut t = Table::new("Singular fibers", &["k", "computed", "reference", "Σ e", "λ values"]);
    let rows = (6..=18u8)
        .into_par_iter()
        .map(|k| -> Result<(Vec<String>, bool)> {
            let reference_count = reference_place_count(k, seed)?;
            let (red, nodal) = expected_fibers(k)?;
            let expected = fiber_summary(&red, &[(KodairaType::I(1), nodal)]);
            let mut expected_multiset: Vec<KodairaType> = red.clone();
            expected_multiset.extend(std::iter::repeat(KodairaType::I(1)).take(nodal));
            expected_multiset.sort();
            let mut ok = true;
            let mut computed = Vec::new();
            let mut euler = Vec::new();
            let mut lambdas = Vec::new();
            for l in generic_specializations(k, seed, specializations)? {
                let f = is_generic(k, &l, reference_count)?;
                ok &= f.type_multiset() == expected_multiset && f.euler_sum() == 24;
                computed.push(f.to_string());
                euler.push(f.euler_sum().to_string());
                lambdas.push(format!("({})", l.iter().map(rat_string).collect::<Vec<_>>().join(", ")));
            }
            computed.dedup();
            euler.dedup();
            Ok((vec![k.to_string(), computed.join("; "), expected, euler.join("; "), lambdas.join(" ")], ok))
        })
        .collect::<Result<Vec<_>>>()?;
    for (r, ok) in rows {
        t.push(r, ok);
    }
    Ok(t)
}

pub fn evident_table(p: &[Pipeline]) -> Table {
    let mut t =
        Table::new("Evident lattices", &["k", "generators", "rank", "|det|", "reference rank", "reference |det|"]);
    for x in p {
        let k = x.data.k;
        let fp = &x.evident.fingerprints;
        t.push(
            vec![
                k.to_string(),
                x.evident.evident.labels.join(" "),
                fp.rank.to_string(),
                fp.det.to_string(),
                reference_rank(k).map_or("-".into(), |r| r.to_string()),
                reference::evident_det(k).map_or("-".into(), |d| d.to_string()),
            ],
            fp.rank_ok(k) && fp.det_ok(k),
        );
    }
    t
}

pub fn group_table(p: &[Pipeline]) -> Result<Table> {
    let mut t = Table::new("Discriminant groups", &["k", "A_L", "A_E", "reference"]);
    for x in p {
        let k = x.data.k;
        let al = fano_lattice(k)?.discriminant_form()?.form.group_string();
        let ae = x.evident.fingerprints.group.clone();
        let g = reference::discriminant_group(k).unwrap_or("-");
        t.push(vec![k.to_string(), al.clone(), ae.clone(), g.to_string()], al == g && ae == g);
    }
    Ok(t)
}

fn frac(f: (i64, i64)) -> Rat {
    rat(f.0, f.1)
}

fn vector(c: &[(i64, i64)]) -> String {
    c.iter().map(|&f| rat_string(&frac(f))).collect::<Vec<_>>().join(", ")
}

pub fn alpha_table() -> Result<Table> {
    let mut t = Table::new("Generators α of the discriminant group of L", &["k", "order", "α", "q(α)", "reference q"]);
    let two = rat(2, 1);
    for k in 6..=18 {
        let l = fano_lattice(k)?;
        let df = l.discriminant_form()?;
        for s in reference::alpha_summands(k).unwrap_or(&[]) {
            let a: Vec<Rat> = s.coefficients.iter().map(|&f| frac(f)).collect();
            let q = l.q_dual(&a)?;
            let order = df.form.element_order(&df.coordinates(&l, &a)?);
            let ok = order == s.order && rat_mod(&(&q - frac(s.q)), &two) == Rat::from_integer(0.into());
            t.push(
                vec![k.to_string(), order.to_string(), vector(s.coefficients), rat_string(&q), rat_string(&frac(s.q))],
                ok,
            );
        }
    }
    Ok(t)
}

pub fn beta_table(p: &[Pipeline]) -> Table {
    let mut t = Table::new(
        "Generators β of the discriminant group of E",
        &["k", "order", "reference q", "attained", "listed β", "q(α) + q(β) ≡ 0"],
    );
    for x in p {
        let k = x.data.k;
        let fp = &x.evident.fingerprints;
        for (i, s) in reference::beta_summands(k).unwrap_or(&[]).iter().enumerate() {
            let attained = fp.q_beta.get(i).cloned().flatten().is_some();
            let lemma = fp.lemma_sum.get(i).copied().unwrap_or(false);
            let literal = fp.beta_literal.get(i).copied().unwrap_or(false);
            t.push(
                vec![
                    k.to_string(),
                    s.order.to_string(),
                    rat_string(&frac(s.q)),
                    yes(attained),
                    if literal { "valid".into() } else { "not in this basis".into() },
                    yes(lemma),
                ],
                attained && lemma,
            );
        }
    }
    t
}

/// The pipeline at the first generic parameter value, for `k = 6..=18`.
pub fn pipelines(seed: u64) -> Result<Vec<Pipeline>> {
    (6..=18u8)
        .into_par_iter()
        .map(|k| {
            let l = generic_specializations(k, seed, 1)?.remove(0);
            run_pipeline(k, &l)
        })
        .collect()
}

pub fn emit_tables(seed: u64, specializations: usize) -> Result<Tables> {
    let p = pipelines(seed)?;
    let tables = vec![
        polytope_table()?,
        equation_table()?,
        fiber_table(seed, specializations)?,
        evident_table(&p),
        group_table(&p)?,
        alpha_table()?,
        beta_table(&p),
    ];
    Ok(Tables { seed, specializations, tables })
}
