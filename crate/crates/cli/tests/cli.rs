use std::process::Command;

use billey_cli::json::{class_from_json, poly_from_json, ClassEntryJson, PolyJson};
use billey_core::{Family, Polynomial, RootSystem};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("billey").chain(args.iter().copied());
    let code = billey_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{:?} failed: {}", args, err);
    out
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&ok(&a)).unwrap()
}

#[test]
fn billey_latex_example() {
    let out = ok(&["billey", "--type", "A", "--rank", "2", "--v", "1", "--w", "2,1,2", "--format", "latex"]);
    assert_eq!(out.trim(), "\\alpha_1+\\alpha_2");
    let out = ok(&["billey", "--type", "A", "--rank", "2", "--v", "", "--w", "2,1,2"]);
    assert_eq!(out.trim(), "1");
    // not below w
    let out = ok(&["billey", "--type", "A", "--rank", "2", "--v", "1,2,1", "--w", "1,2"]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn billey_json_round_trip() {
    let j = json(&["billey", "--type", "A", "--rank", "2", "--v", "1,2", "--w", "1,2,1"]);
    let p = poly_from_json(&serde_json::from_value::<PolyJson>(j).unwrap()).unwrap();
    let want = &Polynomial::var(2, 1) * &Polynomial::linear(&[1, 1]);
    assert_eq!(p, want);
}

#[test]
fn specializations() {
    let line = ok(&["billey", "--type", "A", "--rank", "2", "--v", "1", "--w", "1,2,1", "--specialize", "line"]);
    assert_eq!(line.trim(), "2t");
    let tv = ok(&["billey", "--type", "A", "--rank", "2", "--v", "1", "--w", "1,2,1", "--specialize", "tvars"]);
    assert_eq!(tv.trim(), "t1-t3");
    let (code, _, _) = run(&["billey", "--type", "B", "--rank", "2", "--v", "1", "--w", "1", "--specialize", "tvars"]);
    assert_eq!(code, 1);
}

#[test]
fn eyd_example_has_three_diagrams() {
    let j = json(&["eyd", "--lambda", "2", "--mu", "4,3"]);
    assert_eq!(j["diagrams"].as_array().unwrap().len(), 3);
    let v = json(&["eyd-verify", "--lambda", "2,1", "--mu", "3,2", "--k", "2", "--n", "5"]);
    assert_eq!(v["equal"], Value::Bool(true));
}

#[test]
fn class_table_latex_golden() {
    let out = ok(&["class-table", "--type", "A", "--rank", "2", "--format", "latex"]);
    let golden = include_str!("golden/a2_class_table.tex");
    assert_eq!(out, golden);
}

#[test]
fn class_table_json_feeds_gkm_check() {
    let j = json(&["class-table", "--type", "A", "--rank", "2", "--v", "2"]);
    let entries: Vec<ClassEntryJson> = serde_json::from_value(j.clone()).unwrap();
    let rs = RootSystem::of_family(Family::A, 2).unwrap();
    let class = class_from_json(&rs, &entries).unwrap();
    assert_eq!(class.value(&rs.element_from_letters(&[2]).unwrap()), Polynomial::var(2, 2));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, serde_json::to_string(&j).unwrap()).unwrap();
    let r = json(&["gkm-check", "--type", "A", "--rank", "2", "--class", good.to_str().unwrap()]);
    assert_eq!(r["ok"], Value::Bool(true));

    // break the value at s2 and the edges out of it must fail
    let mut broken = entries.clone();
    let at = broken.iter().position(|e| e.element == vec![2]).unwrap();
    broken[at].value.terms[0].coeff = Value::from(3);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&broken).unwrap()).unwrap();
    let r = json(&["gkm-check", "--type", "A", "--rank", "2", "--class", bad.to_str().unwrap()]);
    assert_eq!(r["ok"], Value::Bool(false));
    assert!(!r["classes"][0]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn cartan_file_matches_family() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("g2.json");
    std::fs::write(&f, r#"{"matrix": [[2, -1], [-3, 2]]}"#).unwrap();
    let from_file = json(&["roots", "--cartan", f.to_str().unwrap()]);
    assert_eq!(from_file["positive_roots"].as_array().unwrap().len(), 6);
    let fam = json(&["group", "--type", "G", "--rank", "2"]);
    assert_eq!(fam.as_array().unwrap().len(), 12);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("roots.txt");
    let out = ok(&["roots", "--type", "A", "--rank", "2", "--out", f.to_str().unwrap()]);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&f).unwrap();
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn word_and_bruhat() {
    let j = json(&["word", "--type", "A", "--rank", "3", "--w", "1,2,1", "--all"]);
    assert_eq!(j["length"], 3);
    assert_eq!(j["reduced_words"].as_array().unwrap().len(), 2);
    let j = json(&["word", "--type", "A", "--rank", "2", "--w", "1,1,2"]);
    assert_eq!(j["reduced"], Value::Bool(false));
    assert_eq!(j["length"], 1);
    let j = json(&["bruhat", "--type", "A", "--rank", "2", "--v", "1", "--w", "2,1"]);
    assert_eq!(j["leq"], Value::Bool(true));
    let j = json(&["bruhat", "--type", "A", "--rank", "2"]);
    assert_eq!(j["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn kumar_smoothness() {
    let j = json(&["kumar", "--type", "A", "--rank", "2", "--v", "1", "--w", "1,2,1"]);
    assert_eq!(j["smooth"], Value::Bool(true));
    // the singular Schubert variety in A3 is X_{s2 s1 s3 s2} at w = s2
    let j = json(&["kumar", "--type", "A", "--rank", "3", "--v", "2", "--w", "2,1,3,2"]);
    assert_eq!(j["smooth"], Value::Bool(false));
    let (code, _, _) = run(&["kumar", "--type", "A", "--rank", "2", "--v", "1,2", "--w", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn fixed_points_and_pinball() {
    let j = json(&["fixed-points", "--variety", "springer", "--jordan", "2,1"]);
    assert_eq!(j["members"].as_array().unwrap().len(), 3);
    let j = json(&["fixed-points", "--variety", "hessenberg", "--h", "2,3,3"]);
    assert_eq!(j["members"].as_array().unwrap().len(), 4);
    let j = json(&["fixed-points", "--variety", "peterson", "--type", "A", "--rank", "3"]);
    assert_eq!(j["members"].as_array().unwrap().len(), 8);

    let j = json(&["pinball", "--variety", "springer", "--jordan", "2,1", "--mode", "all"]);
    assert_eq!(j["count"], 2);
    for a in j["assignments"].as_array().unwrap() {
        assert_eq!(a["valid"], Value::Bool(true));
    }
    let j = json(&["pinball", "--variety", "springer", "--jordan", "3,1"]);
    assert_eq!(j["count"], 1);
    assert_eq!(j["assignments"][0]["order"].as_array().unwrap().len(), 4);
}

#[test]
fn peterson_checks() {
    let j = json(&["peterson"]);
    let det = &j["determinant"]["terms"][0];
    assert_eq!(det["coeff"], 2);
    assert_eq!(det["exp"][0], 4);
    let j = json(&["peterson", "--type", "A", "--rank", "3", "--check", "giambelli"]);
    let cs: Vec<i64> = j.as_array().unwrap().iter().map(|r| r["c"].as_i64().unwrap()).collect();
    assert_eq!(cs, vec![1, 1, 1, 2, 1, 2, 6]);
    let j = json(&["peterson", "--check", "cm", "--i", "1", "--A", "2"]);
    assert_eq!(j["terms"][0]["B"], serde_json::json!([1, 2]));
    let (code, _, err) = run(&["peterson", "--check", "cm"]);
    assert_eq!(code, 2);
    assert!(err.contains("--i"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["roots", "--type", "A"]).0, 2);
    assert_eq!(run(&["roots", "--type", "Q", "--rank", "2"]).0, 2);
    assert_eq!(run(&["billey", "--type", "A", "--rank", "2", "--v", "1", "--w", "3"]).0, 1);
    assert_eq!(run(&["group", "--type", "B", "--rank", "4", "--max-group-size", "100"]).0, 1);
    assert_eq!(run(&["eyd", "--lambda", "3,4", "--mu", "4"]).0, 2);
    assert_eq!(run(&["eyd", "--lambda", "5", "--mu", "4"]).0, 1);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("hyp.json");
    std::fs::write(&f, r#"{"matrix": [[2, -3], [-3, 2]]}"#).unwrap();
    assert_eq!(run(&["roots", "--cartan", f.to_str().unwrap()]).0, 1);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_billey");
    let out = Command::new(bin)
        .args(["billey", "--type", "A", "--rank", "2", "--v", "1", "--w", "2,1,2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "a1+a2");
    let out = Command::new(bin).args(["roots", "--rank", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
