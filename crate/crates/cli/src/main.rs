use clap::{Args, Parser, Subcommand, ValueEnum};
use fano_k3::elliptic::{
    build_fibration, expected_fibers, fiber_summary, generic_specializations, is_generic, reference_place_count,
    to_weierstrass, torsion_order, verify_section, KodairaType, DEFAULT_SEED, SEED_ENV,
};
use fano_k3::mirror::{rat_string, report, run_pipeline};
use fano_k3::polytope::{reference_labeling, Polytope};
use fano_k3::tables::{emit_tables, polytope_table};
use fano_k3::Error;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "fano-k3",
    version,
    about = "Exact checks of lattice mirror symmetry for the toric K3 surfaces of the 18 Fano 3-polytopes"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Seed for the generic parameter draws.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Generic parameter values tried per k.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    specializations: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fano and reflexivity checks for the 18 polytopes.
    Polytopes,
    /// Anticanonical equation of P_k.
    Equation { k: u8 },
    /// Singular fibers and sections of the elliptic fibration, k = 6..18.
    Fibration { k: u8 },
    /// Fingerprints of the evident lattice, k = 6..18.
    Evident { k: u8 },
    /// Mirror verdicts.
    Mirror {
        #[arg(long, conflicts_with = "k")]
        all: bool,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=18))]
        k: Option<u8>,
    },
    /// Reproductions of the reference tables.
    Tables,
}

/// Output of a subcommand: the document to print and whether every check
/// it ran passed.
struct Outcome {
    json: String,
    markdown: String,
    pass: bool,
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).unwrap()
}

fn check_k(k: u8, range: std::ops::RangeInclusive<u8>) -> Result<(), Error> {
    if range.contains(&k) {
        Ok(())
    } else {
        Err(Error::UnknownIndex(k, if *range.start() == 1 { "1..=18" } else { "6..=18" }))
    }
}

fn polytopes() -> Result<Outcome, Error> {
    let t = polytope_table()?;
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "k": r[0].parse::<u8>().unwrap(),
                "vertices": r[1].parse::<usize>().unwrap(),
                "fano": r[2] == "true",
                "reflexive": r[3] == "true",
                "polar_involution": r[4] == "true",
                "lattice_rank": r[5].parse::<usize>().unwrap(),
                "lattice_det": r[6],
            })
        })
        .collect();
    Ok(Outcome { json: pretty(json!({ "polytopes": rows })), markdown: t.to_markdown(), pass: t.all_match() })
}

fn equation(k: u8) -> Result<Outcome, Error> {
    check_k(k, 1..=18)?;
    if k < 6 {
        let eq = Polytope::fano(k)?.anticanonical_equation()?.cleared();
        let text = eq.to_string();
        return Ok(Outcome {
            json: pretty(json!({ "k": k, "equation": text, "reference": Value::Null })),
            markdown: format!("{text}\n"),
            pass: true,
        });
    }
    let (eq, perm) = reference_labeling(k)?;
    let text = eq.to_string();
    let renumbered: Vec<Value> = perm.iter().filter(|(a, b)| a != b).map(|(a, b)| json!([a, b])).collect();
    Ok(Outcome {
        json: pretty(json!({ "k": k, "equation": text, "reference": true, "renumbered": renumbered })),
        markdown: format!("{text}\n"),
        pass: true,
    })
}

fn fibration(k: u8, g: &Global) -> Result<Outcome, Error> {
    check_k(k, 6..=18)?;
    let reference = reference_place_count(k, g.seed)?;
    let (red, nodal) = expected_fibers(k)?;
    let expected_text = fiber_summary(&red, &[(KodairaType::I(1), nodal)]);
    let mut expected: Vec<KodairaType> = red.clone();
    expected.extend(std::iter::repeat(KodairaType::I(1)).take(nodal));
    expected.sort();

    let mut pass = true;
    let mut runs = Vec::new();
    let mut md = format!("k = {k}, reference {expected_text}\n\n");
    for l in generic_specializations(k, g.seed, g.specializations as usize)? {
        let f = is_generic(k, &l, reference)?;
        let matches = f.type_multiset() == expected && f.euler_sum() == 24;
        pass &= matches;
        let eq = build_fibration(k, &l)?;
        let w = to_weierstrass(&eq);
        let mut sections = Vec::new();
        for s in eq.known_sections()? {
            let on = verify_section(&eq, &s);
            pass &= on;
            let order = torsion_order(&w, &s, 12)?;
            sections.push(json!({ "name": s.name, "on_surface": on, "torsion_order": order }));
        }
        let lambda: Vec<String> = l.iter().map(rat_string).collect();
        md += &format!(
            "λ = ({}): {} (Σe = {}) {}\n",
            lambda.join(", "),
            f,
            f.euler_sum(),
            if matches { "ok" } else { "MISMATCH" }
        );
        for s in &sections {
            md += &format!(
                "  section {}: on surface {}, order {}\n",
                s["name"].as_str().unwrap(),
                s["on_surface"],
                s["torsion_order"].as_u64().map_or("infinite".to_string(), |n| n.to_string())
            );
        }
        let fibers: Vec<Value> =
            f.fibers.iter().map(|x| json!({ "place": x.place.to_string(), "type": x.kind.to_string() })).collect();
        runs.push(json!({
            "lambda": lambda,
            "fibers": fibers,
            "summary": f.to_string(),
            "euler_sum": f.euler_sum(),
            "matches": matches,
            "sections": sections,
        }));
    }
    Ok(Outcome {
        json: pretty(
            json!({ "k": k, "seed": g.seed, "specializations": g.specializations, "reference": expected_text, "runs": runs }),
        ),
        markdown: md,
        pass,
    })
}

fn evident(k: u8, g: &Global) -> Result<Outcome, Error> {
    check_k(k, 6..=18)?;
    let l = generic_specializations(k, g.seed, 1)?.remove(0);
    let p = run_pipeline(k, &l)?;
    let fp = &p.evident.fingerprints;
    let ev = &p.evident.evident;
    let mw = &p.mordell_weil;
    let q_beta: Vec<Value> = fp.q_beta.iter().map(|q| q.as_ref().map(rat_string).into()).collect();
    let pass = fp.matched(k) && fp.rank_ok(k);
    let json = json!({
        "k": k,
        "seed": g.seed,
        "lambda_used": l.iter().map(rat_string).collect::<Vec<_>>(),
        "generators": ev.labels,
        "rank": fp.rank,
        "det": fp.det,
        "group": fp.group,
        "equals_span": fp.equals_span,
        "q_beta": q_beta,
        "lemma_sum": fp.lemma_sum,
        "beta_listed_vector_valid": fp.beta_literal,
        "labeling": {
            "assignment": ev.labeling.assignment,
            "automorphisms": ev.labeling.automorphisms,
            "components": ev.labeling.chosen,
            "by_count": ev.labeling.by_count,
        },
        "mordell_weil": {
            "rank": mw.rank,
            "torsion": mw.torsion_string(),
            "free_generator": mw.free_generator,
            "torsion_generator": mw.torsion_generator,
        },
        "matched": pass,
    });
    let md = format!(
        "k = {k}\ngenerators: {}\nrank {}, |det| {}, group {}, spans NS: {}\nq(β): {}\nlemma sums: {:?}\nMordell-Weil: rank {}, torsion {}\nfingerprints matched: {pass}\n",
        ev.labels.join(" "),
        fp.rank,
        fp.det,
        fp.group,
        fp.equals_span,
        fp.q_beta.iter().map(|q| q.as_ref().map_or("none".into(), rat_string)).collect::<Vec<_>>().join(", "),
        fp.lemma_sum,
        mw.rank,
        mw.torsion_string(),
    );
    Ok(Outcome { json: pretty(json), markdown: md, pass })
}

fn mirror(all: bool, k: Option<u8>, g: &Global) -> Result<Outcome, Error> {
    let ks: Option<Vec<u8>> = match (all, k) {
        (_, Some(k)) => Some(vec![k]),
        _ => None,
    };
    let r = report(ks.as_deref(), g.seed, g.specializations as usize)?;
    Ok(Outcome { json: r.to_json(), markdown: r.to_markdown(), pass: r.overall })
}

fn tables(g: &Global) -> Result<Outcome, Error> {
    let t = emit_tables(g.seed, g.specializations as usize)?;
    Ok(Outcome { json: t.to_json(), markdown: t.to_markdown(), pass: t.all_match() })
}

fn emit(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn wants_json(args: &[String]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if wants_json(&args) {
                let v = json!({ "error": { "kind": "arguments", "message": e.kind().to_string(), "detail": e.to_string() } });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let g = &cli.global;
    let result = match &cli.command {
        Command::Polytopes => polytopes(),
        Command::Equation { k } => equation(*k),
        Command::Fibration { k } => fibration(*k, g),
        Command::Evident { k } => evident(*k, g),
        Command::Mirror { all, k } => mirror(*all, *k, g),
        Command::Tables => tables(g),
    };
    let (text, code) = match result {
        Ok(o) => {
            let text = match g.format {
                Format::Json => o.json + "\n",
                Format::Markdown => o.markdown,
            };
            (text, if o.pass { 0 } else { 1 })
        }
        Err(e) => {
            // Unknown indices are argument errors; everything else is a
            // failed verification.
            let code = if matches!(e, Error::UnknownIndex(..)) { 2 } else { 1 };
            match g.format {
                Format::Json => {
                    let v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
                    (serde_json::to_string_pretty(&v).unwrap() + "\n", code)
                }
                Format::Markdown => {
                    eprintln!("error: {e}");
                    (String::new(), code)
                }
            }
        }
    };
    if !text.is_empty() {
        if let Err(e) = emit(&text, g.out.as_deref()) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}
