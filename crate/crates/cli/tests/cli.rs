use std::process::{Command, Output};

use serde_json::Value;

fn diagalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagalg"))
        .args(args)
        .env_remove("DIAGALG_RING")
        .env_remove("DIAGALG_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = diagalg(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        json(&["enumerate", "--family", "motzkin", "--n", "2"])["count"],
        9
    );
    assert_eq!(
        json(&["enumerate", "--family", "tl", "--n", "3"])["count"],
        5
    );
    assert_eq!(
        json(&["enumerate", "--family", "brauer", "--n", "0"])["count"],
        1
    );
    assert_eq!(
        json(&["enumerate", "--family", "walled", "--r", "1", "--s", "1"])["count"],
        2
    );
    let states = json(&["enumerate", "--family", "tl", "--n", "2", "--link-states"]);
    assert_eq!(states["kind"], "link-states");
    assert_eq!(states["count"], 2);
}

#[test]
fn homology_examples() {
    let tl = json(&[
        "homology", "--family", "tl", "--n", "3", "--delta", "1", "--ring", "q", "--D", "3",
    ]);
    let ranks: Vec<u64> = tl["tor"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["free_rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, vec![1, 0, 0, 0]);

    let s3 = json(&["homology", "--group", "s3", "--D", "3"]);
    let torsion: Vec<Value> = s3["tor"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["torsion"].clone())
        .collect();
    assert_eq!(
        torsion,
        vec![
            serde_json::json!([]),
            serde_json::json!([2]),
            serde_json::json!([]),
            serde_json::json!([6])
        ]
    );

    let k = json(&["homology", "--group", "trivial", "--D", "0"]);
    assert_eq!(
        k["tor"],
        serde_json::json!([{ "free_rank": 1, "torsion": [] }])
    );
}

#[test]
fn homology_csv_and_quotient() {
    let out = diagalg(&[
        "homology",
        "--family",
        "rb",
        "--n",
        "2",
        "--delta",
        "1",
        "--epsilon",
        "1",
        "--quotient",
        "1",
        "--D",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "degree,free_rank_tor,torsion_tor,free_rank_ext,torsion_ext\n0,1,,1,\n1,0,2,0,\n2,0,,0,2\n"
    );
}

#[test]
fn verify_examples_pass() {
    for args in [
        vec![
            "verify",
            "thm-walled-odd",
            "--r",
            "1",
            "--s",
            "2",
            "--delta",
            "0",
            "--ring",
            "z",
            "--D",
            "3",
        ],
        vec![
            "verify", "blob-odd", "--n", "3", "--gamma", "1", "--delta", "0", "--ring", "z2",
            "--D", "3",
        ],
        vec!["verify", "rb-remark"],
    ] {
        let v = json(&args);
        assert_eq!(v["pass"], true, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        diagalg(&["verify", "tl-odd", "--n", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(diagalg(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(
        diagalg(&["verify", "tl-odd", "--family", "brauer"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        diagalg(&["verify", "tl-odd", "--family", "temperley-lieb"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        diagalg(&["enumerate", "--family", "nope", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        diagalg(&["homology", "--family", "tl", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(diagalg(&["frobnicate"]).status.code(), Some(2));
    let out = diagalg(&[
        "verify",
        "tl-invertible",
        "--n",
        "2",
        "--delta",
        "2",
        "--ring",
        "z",
    ]);
    assert_eq!(out.status.code(), Some(2), "2 is not a unit in Z");
    let out = diagalg(&[
        "verify",
        "tl-quotient",
        "--n",
        "2",
        "--delta",
        "0",
        "--ring",
        "z",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn failing_check_exits_one() {
    // TL_2 at delta = 0 is the dual numbers, with Tor nonzero in every degree.
    let out = diagalg(&["verify", "tl-odd", "--n", "2", "--delta", "0", "--force"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["hypothesis_violation"], "n = 2 must be odd");
    let out = diagalg(&[
        "tate", "--family", "tl", "--n", "2", "--delta", "0", "--group", "trivial",
    ]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "refusing a non-centred algebra is a usage error"
    );
    let out = diagalg(&["idempotents", "--family", "tl", "--n", "2", "--delta", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deterministic_output() {
    let args = [
        "homology", "--family", "brauer", "--n", "2", "--delta", "1", "--D", "3",
    ];
    let a = diagalg(&args).stdout;
    let b = diagalg(&args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let t1 = diagalg(&["table", "--format", "json"]);
    let t2 = diagalg(&["table", "--format", "json", "--threads", "1"]);
    assert_eq!(t1.status.code(), Some(0));
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn env_overrides_and_out_file() {
    let dir = std::env::temp_dir().join(format!("diagalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tate.json");
    let out = Command::new(env!("CARGO_BIN_EXE_diagalg"))
        .args(["tate", "--group", "s2", "--out", path.to_str().unwrap()])
        .env("DIAGALG_D", "1")
        .env("DIAGALG_RING", "z")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["range"], serde_json::json!([-2, 1]));
    assert_eq!(v["groups"]["0"]["torsion"], serde_json::json!([2]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn multiply_rook_brauer() {
    let v = json(&[
        "multiply",
        "--family",
        "rb",
        "--n",
        "2",
        "--delta",
        "2",
        "--epsilon",
        "3",
        "--left",
        "1-2 1'-2'",
        "--right",
        "1-2 1'-2'",
    ]);
    assert_eq!(v["product"], serde_json::json!([["2", "[1-2 1'-2']"]]));
}

#[test]
fn verify_list() {
    let v = json(&["verify", "list"]);
    assert!(v.as_array().unwrap().len() >= 19);
}
