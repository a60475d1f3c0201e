use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano-k3")).args(args).env_remove("FANO_K3_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn equation_line() {
    let o = run(&["equation", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x y z (x+y+z+1)+λ1 x y+λ2 x y²+λ3 = 0");
}

#[test]
fn fibration_with_seed() {
    let o = run(&["fibration", "6", "--seed", "42", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["specializations"], 3);
    for r in v["runs"].as_array().unwrap() {
        assert_eq!(r["summary"], "I_8 + I_8 + 8 I_1");
        assert_eq!(r["matches"], true);
    }
}

#[test]
fn mirror_all_json() {
    let o = run(&["mirror", "--all", "--format", "json", "--specializations", "1"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 13);
    let passing: Vec<u64> =
        verdicts.iter().filter(|x| x["overall"] == true).map(|x| x["k"].as_u64().unwrap()).collect();
    // All but k = 12, whose Mordell-Weil group is finite.
    assert_eq!(passing, (6..=18).filter(|&k| k != 12).collect::<Vec<u64>>());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(v["seed"], 1729);
    assert_eq!(v["specializations"], 1);
}

#[test]
fn mirror_single_k_passes() {
    let o = run(&["mirror", "--k", "9", "--format", "json", "--specializations", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdicts"][0]["mordell_weil"]["torsion"], "Z/2");
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fano-k3"))
        .args(["fibration", "7", "--format", "json", "--specializations", "1"])
        .env("FANO_K3_SEED", "99")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 99);
}

#[test]
fn evident_fingerprints() {
    let o = run(&["evident", "13", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], 16);
    assert_eq!(v["det"], 28);
    assert_eq!(v["group"], "Z/14+Z/2");
}

#[test]
fn polytopes_and_tables() {
    let o = run(&["polytopes", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["polytopes"].as_array().unwrap().len(), 18);

    let dir = std::env::temp_dir().join(format!("fano-k3-tables-{}", std::process::id()));
    let o = run(&["tables", "--specializations", "1", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let md = std::fs::read_to_string(&dir).unwrap();
    std::fs::remove_file(&dir).unwrap();
    assert!(md.contains("### Evident lattices"));
    assert!(!md.contains("**no**"));
}

#[test]
fn argument_errors_exit_2() {
    assert_eq!(run(&["fibration"]).status.code(), Some(2));
    assert_eq!(run(&["mirror", "--k", "19"]).status.code(), Some(2));
    assert_eq!(run(&["--specializations", "0", "polytopes"]).status.code(), Some(2));
    let o = run(&["fibration", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "unknown_index");
    let o = run(&["mirror", "--k", "x", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "arguments");
}

#[test]
fn json_output_round_trips() {
    let o = run(&["mirror", "--k", "6", "--format", "json", "--specializations", "1"]);
    let text = stdout(&o);
    let v: fano_k3::mirror::Report = serde_json::from_str(&text).unwrap();
    assert_eq!(v.to_json() + "\n", text);
}
