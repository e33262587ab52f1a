use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn freepairs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freepairs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn list_prints_every_scenario() {
    let o = freepairs(&["list"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 18);
    assert!(s.contains("heis/uni/I/even-or-mixed"));
    assert!(s.lines().any(|l| l.starts_with("weyl/2") && l.contains("CERTIFIED")));
}

#[test]
fn run_heis_reports_the_verdict() {
    let o = freepairs(&["run", "heis", "--type", "III", "--m", "3", "--mode", "symmetric"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("scenario heis/sym/III/odd:"));
    assert!(s.contains("verdict: CERTIFIED (expected CERTIFIED)"));
    assert!(s.contains("independent recheck: agrees"));
}

#[test]
fn open_case_exits_zero() {
    let o = freepairs(&["run", "heis", "--type", "I", "--m", "2", "--n", "1", "--mode", "unitary"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: OPEN (expected OPEN)"));
}

#[test]
fn run_weyl_writes_json() {
    let path = scratch("weyl2.json");
    let _ = fs::remove_file(&path);
    let o = freepairs(&["run", "weyl", "--case", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["id"], "weyl/2");
    assert_eq!(v["verdict"], "CERTIFIED");
    assert_eq!(v["certificate"]["strength"], "EXACT_PAIR");
}

#[test]
fn json_format_goes_to_stdout_and_is_stable() {
    let a = freepairs(&["run", "id", "heis/sym/II", "--format", "json"]);
    let b = freepairs(&["run", "id", "heis/sym/II", "--format", "json", "--seed", "0xF4EE"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "PARTIAL");
    assert_eq!(v["word_sample"]["seed"], 0xF4EE);
}

#[test]
fn undefined_cases_exit_two() {
    let o = freepairs(&["run", "heis", "--type", "II", "--m", "1", "--mode", "symmetric"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(freepairs(&["run", "weyl", "--case", "3"]).status.code(), Some(2));
    assert_eq!(freepairs(&["run", "id", "heis/sym/V"]).status.code(), Some(2));
}

#[test]
fn classify_prints_class_and_lift() {
    let o = freepairs(&["classify", "--matrix", "1,0,1,-1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("class: S"));
    assert!(s.contains("automorphism: x -> X, y -> L^-1 Y^-1 X"));
    let o = freepairs(&["classify", "--matrix", "1,1,0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

const PLACE: &str = r#"{
  "name": "P(1+i)",
  "field": "Q",
  "generator": "i",
  "minpoly": "i^2-a",
  "base_var": "a",
  "base_prime": "1-a",
  "gen_image": "-1",
  "uniformizer": "1+i"
}"#;

#[test]
fn certify_reads_pair_and_place() {
    let place = scratch("place.json");
    fs::write(&place, PLACE).unwrap();

    // diag(1+i, 1-i) against a rotation with unit entries.
    let good = scratch("good.json");
    fs::write(&good, r#"{"A": [["1+i", "0"], ["0", "1-i"]], "B": [["1", "1"], ["-1", "1"]]}"#).unwrap();
    let o = freepairs(&["certify", "--input", good.to_str().unwrap(), "--place", place.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "CERTIFIED");

    // B has an entry of positive valuation.
    let bad = scratch("bad.json");
    fs::write(&bad, r#"{"A": [["1+i", "0"], ["0", "1-i"]], "B": [["1", "1+i"], ["-1", "1"]]}"#).unwrap();
    let o = freepairs(&["certify", "--input", bad.to_str().unwrap(), "--place", place.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "FAILED");
}
