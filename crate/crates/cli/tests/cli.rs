use std::path::PathBuf;
use std::process::{Command, Output};

use leibniz_cli::formats::parse_algebra;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--json", "-", "--quiet"]);
    let out = leibniz(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().expect("object").remove("timing");
    v
}

fn dims(v: &Value) -> Vec<u64> {
    v["results"]["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim"].as_u64().unwrap())
        .collect()
}

#[test]
fn check_reports_the_quotient() {
    let out = leibniz(&["check", &data("a2.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout)
        .contains("valid left Leibniz algebra, dim 2, g_ann 1, g_Lie 1"));
}

#[test]
fn homology_tables() {
    assert_eq!(
        dims(&report(&[
            "homology",
            "--max-degree",
            "3",
            &data("a2.json")
        ])),
        vec![1, 1, 1, 1]
    );
    assert_eq!(
        dims(&report(&[
            "cohomology",
            "--max-degree",
            "3",
            &data("a2.json")
        ])),
        vec![1, 1, 1, 1]
    );
    assert_eq!(
        dims(&report(&[
            "ce-homology",
            "--max-degree",
            "2",
            &data("a2.json")
        ])),
        vec![1, 1, 0]
    );
    let lie = format!("lie:{}", data("a2_module.json"));
    assert!(report(&[
        "compare",
        "--coefficients",
        &lie,
        "--max-degree",
        "2",
        &data("a2.json")
    ])["passed"]
        .as_bool()
        .unwrap());
    let rep = format!("rep:{}", data("a2_adjoint.json"));
    assert_eq!(
        report(&[
            "homology",
            "--coefficients",
            &rep,
            "--max-degree",
            "2",
            &data("a2.json")
        ])["results"]["coefficients"],
        "representation"
    );
    assert_eq!(
        dims(&report(&["fg", "--max-degree", "2", &data("a2.json")]))[0],
        1
    );
}

#[test]
fn algebra_echo_round_trips() {
    for file in ["a2.json", "r2_right.json", "hemisemidirect.json"] {
        let first = report(&["check", &data(file)]);
        let echo = first["results"]["algebra"].to_string();
        let original = parse_algebra(&std::fs::read_to_string(data(file)).unwrap())
            .unwrap()
            .value;
        assert_eq!(parse_algebra(&echo).unwrap().value, original, "{file}");
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("echo.json");
        std::fs::write(&path, &echo).unwrap();
        let second = report(&["check", path.to_str().unwrap()]);
        assert_eq!(
            second["results"]["algebra"], first["results"]["algebra"],
            "{file}"
        );
    }
}

#[test]
fn right_convention_is_noted() {
    let r = report(&["quotient", &data("r2_right.json")]);
    assert_eq!(r["notices"].as_array().unwrap().len(), 1);
    assert_eq!(r["results"]["algebra"]["convention"], "left");
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "homology",
        "--max-degree",
        "3",
        &data("hemisemidirect.json"),
    ];
    let a = without_timing(report(&args));
    let b = without_timing(report(&args));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    let c = without_timing(report(&[
        "homology",
        "--max-degree",
        "3",
        "--threads",
        "1",
        &data("hemisemidirect.json"),
    ]));
    assert_eq!(a, c);
}

#[test]
fn hash_follows_contents_not_paths() {
    let dir = tempfile::tempdir().unwrap();
    let copy = dir.path().join("copy.json");
    std::fs::copy(data("a2.json"), &copy).unwrap();
    let a = report(&["homology", &data("a2.json")]);
    let b = report(&["homology", copy.to_str().unwrap()]);
    assert_eq!(a["input_hash"], b["input_hash"]);
    assert_ne!(
        a["input_hash"],
        report(&["homology", "--max-degree", "2", &data("a2.json")])["input_hash"]
    );
}

#[test]
fn json_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = leibniz(&[
        "free-conjecture",
        "--generators",
        "1",
        "--max-weight",
        "3",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: PASS"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["command"], "free-conjecture");
}

#[test]
fn exit_codes() {
    let bad = leibniz(&["check", &data("not_leibniz.json")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("(x, x, x)"));
    assert_eq!(
        leibniz(&["check", &data("missing.json")]).status.code(),
        Some(2)
    );
    assert_eq!(
        leibniz(&["homology", "--coefficients", "adjoint", &data("a2.json")])
            .status
            .code(),
        Some(2)
    );
    let rep = format!("rep:{}", data("a2_adjoint.json"));
    assert_eq!(
        leibniz(&["ce-homology", "--coefficients", &rep, &data("a2.json")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        leibniz(&["free-conjecture", "--generators", "4", "--max-weight", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(leibniz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        leibniz(&["check", &data("a2.json"), "--quiet"])
            .status
            .code(),
        Some(0)
    );
    assert!(leibniz(&["check", &data("a2.json"), "--quiet"])
        .stdout
        .is_empty());
}

#[test]
fn free_conjecture_tables() {
    for (d, w, h1) in [
        ("1", "6", vec![1, 0, 0, 0, 0, 0]),
        ("2", "5", vec![2, 1, 2, 3, 6]),
    ] {
        let r = report(&["free-conjecture", "--generators", d, "--max-weight", w]);
        let rows = r["results"]["rows"].as_array().unwrap();
        assert_eq!(
            rows.iter()
                .map(|x| x["h1"].as_u64().unwrap())
                .collect::<Vec<_>>(),
            h1
        );
        assert!(rows
            .iter()
            .all(|x| x["nonvanishing"].as_array().unwrap().is_empty()));
        assert_eq!(r["results"]["verdict"], "PASS");
    }
}

#[test]
fn version_flag() {
    let out = leibniz(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("report format 1"));
}
