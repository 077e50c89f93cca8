//! End-to-end runs of the `hopfcyc` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value as Json;
use tempfile::TempDir;

fn hopfcyc(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcyc")).args(args).current_dir(dir).output().expect("binary runs")
}

fn corpus(dir: &TempDir, file: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(file);
    let mut all = vec!["corpus"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = hopfcyc(&all, dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn run_json(dir: &TempDir, args: &[&str]) -> (i32, Json) {
    let out = hopfcyc(args, dir.path());
    let code = out.status.code().unwrap();
    assert!(code != 2, "{}", String::from_utf8_lossy(&out.stderr));
    (code, serde_json::from_slice(&out.stdout).expect("report is JSON"))
}

fn stage<'a>(report: &'a Json, name: &str) -> &'a Json {
    report["stages"].as_array().unwrap().iter().find(|s| s["name"] == name).unwrap_or_else(|| panic!("no stage {name}"))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn corpus_sweedler_validates() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    let (code, r) = run_json(&dir, &["validate", p(&h)]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "pass");
    assert!(stage(&r, "validate")["checks"].as_array().unwrap().len() > 5);
}

#[test]
fn zero_denominator_names_the_entry() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    let text = std::fs::read_to_string(&h).unwrap();
    let mut spec: Json = serde_json::from_str(&text).unwrap();
    spec["mult"][2][3] = Json::from("1/0");
    std::fs::write(&h, serde_json::to_string(&spec).unwrap()).unwrap();
    let out = hopfcyc(&["validate", p(&h)], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("mult[2]") && err.contains("\"1/0\""), "{err}");
}

#[test]
fn taft_spec_is_cyclotomic() {
    let dir = TempDir::new().unwrap();
    let t = corpus(&dir, "t3.json", &["taft", "--degree", "3"]);
    let spec: Json = serde_json::from_str(&std::fs::read_to_string(t).unwrap()).unwrap();
    assert_eq!(spec["kind"], "hopf");
    assert_eq!(spec["field"], serde_json::json!({"type": "cyclotomic", "order": 3}));
    assert_eq!(spec["dim"], 9);
}

#[test]
fn sweedler_radford_passes() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    let (code, r) = run_json(&dir, &["verify", p(&h), "radford"]);
    assert_eq!(code, 0);
    assert_eq!(stage(&r, "radford")["verdict"], "pass");
    // S² is conjugation by the grouplike, so S⁴ = id on H₄
    assert_eq!(stage(&r, "radford")["values"]["s4_is_identity"], true);
}

#[test]
fn taft_forms_suite_passes() {
    let dir = TempDir::new().unwrap();
    let t = corpus(&dir, "t3.json", &["taft", "--degree", "3"]);
    let (code, r) = run_json(&dir, &["verify", p(&t), "forms", "--degree", "3"]);
    assert_eq!(code, 0);
    let forms = stage(&r, "forms");
    assert_eq!(forms["verdict"], "pass");
    let names: Vec<&str> = forms["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for n in 0..=3 {
        assert!(names.contains(&format!("f) B b + b B = id - T [n={n}]").as_str()), "{names:?}");
    }
}

#[test]
fn s3_takesaki_takai_passes() {
    let dir = TempDir::new().unwrap();
    let g = corpus(&dir, "s3.json", &["group:S3"]);
    let (code, r) = run_json(&dir, &["verify", p(&g), "taktak", "--coefficients", "trivial"]);
    assert_eq!(code, 0);
    let t = stage(&r, "taktak");
    assert_eq!(t["verdict"], "pass");
    assert_eq!(t["values"]["domain_dim"], 36);
}

#[test]
fn large_takesaki_takai_needs_slow() {
    let dir = TempDir::new().unwrap();
    let t = corpus(&dir, "t3.json", &["taft", "--degree", "3"]);
    let out = hopfcyc(&["verify", p(&t), "taktak", "--coefficients", "dual-regular"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--slow"));
}

#[test]
fn hp_of_the_ground_field() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "k.json", &["trivial"]);
    let c = corpus(&dir, "c.json", &["scalars"]);
    let (code, r) = run_json(&dir, &["hp", p(&c), p(&c), p(&h), "--level", "3"]);
    assert_eq!(code, 0);
    let table = stage(&r, "hp")["values"]["table"].as_array().unwrap().clone();
    assert_eq!(table.len(), 3);
    for row in table {
        assert_eq!(row["ranks"], serde_json::json!([1, 0]));
    }
}

#[test]
fn semisimple_and_full_agree_on_c2() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "c2.json", &["group:C2"]);
    let c = corpus(&dir, "c.json", &["scalars", "--over", "group:C2"]);
    let ranks = |mode: &str| {
        let (code, r) = run_json(&dir, &["hp", p(&c), p(&c), p(&h), "--mode", mode, "--level", "1"]);
        assert_eq!(code, 0, "{mode}");
        stage(&r, "hp")["values"]["ranks"].clone()
    };
    let full = ranks("full");
    assert_eq!(full, ranks("semisimple"));
    // HP⁰_{C₂}(ℂ, ℂ) is the representation ring of C₂ tensored with ℂ
    assert_eq!(full, serde_json::json!([2, 0]));
}

#[test]
fn cap_aborts_with_forecast() {
    let dir = TempDir::new().unwrap();
    let t = corpus(&dir, "t3.json", &["taft", "--degree", "3"]);
    let c = corpus(&dir, "c.json", &["scalars", "--over", "taft", "--degree", "3"]);
    let out = hopfcyc(&["hp", p(&c), p(&c), p(&t), "--mode", "full", "--level", "3", "--cap", "2000"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("forecast") && err.contains("2000"), "{err}");
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    let a = hopfcyc(&["verify", p(&h), "all"], dir.path());
    let b = hopfcyc(&["verify", p(&h), "all"], dir.path());
    let t = corpus(&dir, "t3.json", &["taft", "--degree", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let md1 = dir.path().join("1.md");
    let md2 = dir.path().join("2.md");
    hopfcyc(&["verify", p(&t), "haar", "--out", p(&md1)], dir.path());
    hopfcyc(&["verify", p(&t), "haar", "--out", p(&md2)], dir.path());
    let text = std::fs::read_to_string(&md1).unwrap();
    assert!(text.starts_with("# verify T3: pass"));
    assert_eq!(text, std::fs::read_to_string(&md2).unwrap());
}

#[test]
fn corrupted_structure_exits_one_with_witness() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    let mut spec: Json = serde_json::from_str(&std::fs::read_to_string(&h).unwrap()).unwrap();
    // S(e_0) = 2 e_0 breaks the antipode axioms
    let antipode = spec["antipode"].as_array_mut().unwrap();
    let entry = antipode.iter_mut().find(|e| e[0] == 0 && e[1] == 0).unwrap();
    entry[2] = Json::from("2");
    std::fs::write(&h, serde_json::to_string(&spec).unwrap()).unwrap();
    let (code, r) = run_json(&dir, &["verify", p(&h), "radford"]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "fail");
    let v = stage(&r, "validate");
    assert_eq!(v["verdict"], "fail");
    let failed: Vec<&Json> = v["checks"].as_array().unwrap().iter().filter(|c| c["verdict"] == "fail").collect();
    assert!(!failed.is_empty());
    for c in failed {
        assert!(c["witness"]["lhs"].is_string() && c["witness"]["rhs"].is_string(), "{c}");
    }
    // the pipeline stops at the failing stage
    assert_eq!(r["stages"].as_array().unwrap().len(), 1);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = hopfcyc(&["validate", "nope.json"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"kind\": \"hopf\",\n \"name\": }").unwrap();
    let out = hopfcyc(&["validate", p(&bad)], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    let mut spec: Json = serde_json::from_str(&std::fs::read_to_string(&h).unwrap()).unwrap();
    spec["comult"][5][1] = Json::from("x");
    std::fs::write(&h, serde_json::to_string(&spec).unwrap()).unwrap();
    let out = hopfcyc(&["validate", p(&h)], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("comult[5][1]"), "{}", String::from_utf8_lossy(&out.stderr));
    let c = corpus(&dir, "c.json", &["scalars"]);
    let needs_hopf = hopfcyc(&["validate", p(&c)], dir.path());
    assert_eq!(needs_hopf.status.code(), Some(2));
}

#[test]
fn algebra_module_and_pairing_validate() {
    let dir = TempDir::new().unwrap();
    let h = corpus(&dir, "h4.json", &["sweedler"]);
    for (file, args) in [
        ("a.json", vec!["dual-regular", "--over", "sweedler"]),
        ("m.json", vec!["regular-module", "--over", "sweedler"]),
        ("p.json", vec!["beta", "--over", "sweedler"]),
    ] {
        let f = corpus(&dir, file, &args);
        let (code, r) = run_json(&dir, &["validate", p(&f), "--hopf", p(&h)]);
        assert_eq!(code, 0, "{file}: {r}");
    }
}
