use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn nassoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nassoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn nassoc_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nassoc"))
        .args(args)
        .env(key, val)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

fn construct_to(dir: &Path, file: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(file);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", path.to_str().unwrap()]);
    let o = nassoc(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn golden_tables() {
    let dir = tempfile::tempdir().unwrap();
    for (args, gold) in [
        (&["vidinli", "--n", "1"][..], "vidinli1.table.txt"),
        (&["jspin", "--n", "2"][..], "jspin2.table.txt"),
        (&["mixed-j"][..], "mixed_j.table.txt"),
    ] {
        let f = construct_to(dir.path(), "a.json", args);
        let o = nassoc(&["table", f.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(gold), "{gold}");
    }
}

#[test]
fn untwisted_v3_is_byte_identical() {
    let a = nassoc(&[
        "construct",
        "twisted-v3",
        "--t",
        "1",
        "--u",
        "0",
        "--v",
        "0",
    ]);
    let b = nassoc(&["construct", "vidinli", "--n", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn construct_counts() {
    let v: Value =
        serde_json::from_slice(&nassoc(&["construct", "vidinli", "--n", "2"]).stdout).unwrap();
    assert_eq!(v["dim"], 5);
    // nine unit-row entries, four squares, four skew pairs
    assert_eq!(v["constants"].as_array().unwrap().len(), 17);
    let j: Value =
        serde_json::from_slice(&nassoc(&["construct", "jspin", "--n", "1"]).stdout).unwrap();
    assert_eq!(j["dim"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(nassoc(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(nassoc(&["construct", "vidinli"]).status.code(), Some(2));
    assert_eq!(
        nassoc(&["table", "/definitely/missing.json"]).status.code(),
        Some(2)
    );
    assert_eq!(nassoc(&["construct", "bogus"]).status.code(), Some(2));
    assert_eq!(
        nassoc_env(
            &["verify", "core", "--max-n", "1"],
            "NASSOC_THREADS",
            "zero"
        )
        .status
        .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"dim\": 2,\n  \"oops\"\n}").unwrap();
    let o = nassoc(&["table", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 1: unknown field `oops`"));

    // a non-unit declared as unit is a parse-level rejection
    let notunit = dir.path().join("u.json");
    std::fs::write(
        &notunit,
        r#"{"label": "x", "dim": 1, "unit": 1, "constants": []}"#,
    )
    .unwrap();
    assert_eq!(
        nassoc(&["classify", notunit.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_geometry_reports_planes() {
    let o = nassoc(&["verify", "geometry", "--k", "4", "--max-n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("15 planes"));
    assert!(!text.contains("wall_clock_ms"));
    let timed = nassoc(&["verify", "geometry", "--k", "3", "--timing"]);
    assert!(stdout(&timed).contains("wall_clock_ms"));
}

#[test]
fn verify_characterization_with_twisted_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = construct_to(
        dir.path(),
        "twisted.json",
        &["twisted-v3", "--t", "1", "--u", "1", "--v", "0"],
    );
    let o = nassoc(&[
        "verify",
        "characterization",
        "--input",
        f.to_str().unwrap(),
        "--max-n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "characterization.08.input")
        .unwrap();
    assert_eq!(c["status"], "pass");
    assert_eq!(c["witness"]["verdict"], "FailsVb");
    assert_eq!(c["witness"]["pair"], serde_json::json!([2, 3]));
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let serial = nassoc(&["verify", "pushout"]);
    let parallel = nassoc_env(&["verify", "pushout"], "NASSOC_THREADS", "4");
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn verify_all_passes() {
    let o = nassoc(&["verify", "all", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn pushout_command_glues_v3() {
    let dir = tempfile::tempdir().unwrap();
    let v3 = construct_to(dir.path(), "v3.json", &["vidinli", "--n", "1"]);
    let v3s = v3.to_str().unwrap();
    let o = nassoc(&[
        "pushout",
        "--input",
        v3s,
        "--input",
        v3s,
        "--z-indices",
        "1|1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let glued = nassoc::json::algebra_from_str(&stdout(&o)).unwrap();
    assert!(glued.same_table(&nassoc::constructors::vidinli(2).unwrap()));
    assert_eq!(
        nassoc(&[
            "pushout",
            "--input",
            v3s,
            "--input",
            v3s,
            "--z-indices",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        nassoc(&[
            "pushout",
            "--input",
            v3s,
            "--input",
            v3s,
            "--z-indices",
            "2|1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn other_commands() {
    let dir = tempfile::tempdir().unwrap();
    let v3 = construct_to(dir.path(), "v3.json", &["vidinli", "--n", "1"]);
    let v3s = v3.to_str().unwrap();
    let m = nassoc(&["multiply", v3s, "--a", "0,1,0", "--b", "0,0,1"]);
    assert_eq!(stdout(&m), "1,0,0\ne1\n");

    let s: Value =
        serde_json::from_slice(&nassoc(&["spectral", "--n", "1", "--a", "1,1,0"]).stdout).unwrap();
    assert_eq!(s["determinant"], "2/1");
    assert_eq!(s["closed_form_matches"], true);

    let a: Value = serde_json::from_slice(&nassoc(&["analyze", v3s]).stdout).unwrap();
    assert_eq!(a["multiplication_algebra_dim"], 9);
    assert_eq!(a["simplicity"]["result"], "Simple");

    let p: Value = serde_json::from_slice(&nassoc(&["pg", "--k", "3"]).stdout).unwrap();
    assert_eq!(p["lines"], 7);
    assert_eq!(p["anti_chains"].as_array().unwrap().len(), 3);

    let r = nassoc(&["reconstruct", "--k", "3"]);
    assert_eq!(r.status.code(), Some(0));
    let v7 = nassoc::json::algebra_from_str(&stdout(&r)).unwrap();
    assert!(v7.same_table(&nassoc::constructors::vidinli(3).unwrap()));

    let c: Value = serde_json::from_slice(&nassoc(&["classify", v3s]).stdout).unwrap();
    assert_eq!(c["verdict"], "IsVidinli");
    assert_eq!(c["reverified"], true);
}
