use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_bbw-ulrich"));
    c.env_remove("BBW_ULRICH_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, String, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}\n{text}"));
    (v, text, out.status.code().unwrap())
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut()
        .unwrap()
        .insert("timing".into(), Value::from(0));
    v
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares the document (timing zeroed) against `tests/golden/<name>.json`.
/// Set `BBW_ULRICH_BLESS=1` to rewrite the files.
fn check_golden(name: &str, args: &[&str]) {
    let (v, _, code) = run_json(args);
    assert_eq!(code, 0, "{args:?}");
    let rendered = format!(
        "{}\n",
        serde_json::to_string_pretty(&without_timing(v)).unwrap()
    );
    let path = golden_dir().join(format!("{name}.json"));
    if std::env::var_os("BBW_ULRICH_BLESS").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, &rendered).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(rendered, expected, "golden mismatch for {name}");
}

#[test]
fn golden_documents() {
    check_golden("invariants_1_3", &["invariants", "--k", "1", "--n", "3"]);
    check_golden("invariants_5_17", &["invariants", "--k", "5", "--n", "17"]);
    check_golden(
        "cohom_1_3_q",
        &[
            "cohom", "--k", "1", "--n", "3", "--beta", "1,0", "--gamma", "0,0", "--twist", "0",
        ],
    );
    check_golden(
        "table_1_3",
        &["table", "--k", "1", "--n", "3", "--from", "-4", "--to", "0"],
    );
    check_golden(
        "ulrich_list_1_21",
        &["ulrich", "list", "--k", "1", "--n", "21"],
    );
    check_golden(
        "ulrich_construct_5_17",
        &[
            "ulrich",
            "construct",
            "--k",
            "5",
            "--n",
            "17",
            "--ks",
            "2,3",
            "--ns",
            "3,4",
        ],
    );
    check_golden(
        "ulrich_verify_1_4",
        &[
            "ulrich", "verify", "--k", "1", "--n", "4", "--beta", "3,0", "--gamma", "0,0,0",
        ],
    );
    check_golden(
        "ulrich_classify_1_4",
        &[
            "ulrich",
            "classify",
            "--k",
            "1",
            "--n",
            "4",
            "--brute-force",
        ],
    );
    check_golden(
        "ulrich_minrank_2_7",
        &["ulrich", "minrank", "--k", "2", "--n", "7"],
    );
}

#[test]
fn json_round_trips_byte_for_byte() {
    let cases: &[&[&str]] = &[
        &["invariants", "--k", "2", "--n", "9"],
        &[
            "table", "--k", "2", "--n", "5", "--beta", "3,1", "--from", "-8", "--to", "2",
        ],
        &["ulrich", "list", "--k", "2", "--n", "8"],
        &[
            "ulrich",
            "classify",
            "--k",
            "1",
            "--n",
            "5",
            "--brute-force",
        ],
    ];
    for args in cases {
        let (v, text, _) = run_json(args);
        let again = format!("{}\n", serde_json::to_string_pretty(&v).unwrap());
        assert_eq!(again, text, "{args:?}");
        assert!(!text.contains('.'), "no floats in {args:?}");
        assert_eq!(v["schema_version"], "1");
    }
}

#[test]
fn invariants_examples() {
    let (v, _, _) = run_json(&["invariants", "--k", "1", "--n", "3"]);
    let r = &v["results"];
    assert_eq!(r["dimension"], 4);
    assert_eq!(r["degree"], "2");
    assert_eq!(r["ulrich_slope"]["num"], "1");
    assert_eq!(r["ulrich_slope"]["den"], "1");
    assert_eq!(r["min_ulrich_rank"], "2");
    assert_eq!(r["ulrich_count"], 2);

    let (v, _, _) = run_json(&["invariants", "--k", "5", "--n", "17"]);
    assert_eq!(v["results"]["dimension"], 72);

    let (v, _, _) = run_json(&["invariants", "--k", "0", "--n", "4"]);
    assert_eq!(v["results"]["degree"], "1");
    assert_eq!(v["results"]["ulrich_count"], 1);
}

#[test]
fn cohom_examples() {
    let (v, _, code) = run_json(&[
        "cohom", "--k", "1", "--n", "3", "--beta", "1,0", "--gamma", "0,0", "--twist", "0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["kind"], "group");
    assert_eq!(v["results"]["degree"], 0);
    assert_eq!(v["results"]["dimension"], "4");

    let (v, _, _) = run_json(&["cohom", "--k", "1", "--n", "3", "--twist", "-1"]);
    assert_eq!(v["results"]["kind"], "zero");
}

#[test]
fn table_examples() {
    let (v, _, _) = run_json(&["table", "--k", "1", "--n", "3", "--from", "-4", "--to", "0"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["cohomology"]["degree"], 4);
    assert_eq!(rows[0]["cohomology"]["dimension"], "1");
    for row in &rows[1..4] {
        assert_eq!(row["cohomology"]["kind"], "zero");
    }
    assert_eq!(rows[4]["cohomology"]["degree"], 0);

    let (v, _, _) = run_json(&["table", "--k", "1", "--n", "3", "--from", "2", "--to", "2"]);
    assert_eq!(v["results"]["rows"].as_array().unwrap().len(), 1);

    let (v, _, _) = run_json(&[
        "table",
        "--k",
        "5",
        "--n",
        "17",
        "--beta",
        "55,53,33,31,11,9",
        "--gamma",
        "9^3,6^3,3^3,0^3",
        "--from",
        "-72",
        "--to",
        "-1",
    ]);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 72);
    assert!(rows.iter().all(|r| r["cohomology"]["kind"] == "zero"));
}

#[test]
fn text_table_columns_align() {
    let out = run(&[
        "table", "--k", "1", "--n", "3", "--from", "-12", "--to", "0",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().skip(1).collect();
    let col = |l: &str| {
        l.find("twist")
            .or_else(|| l.find(|c: char| c.is_ascii_digit()))
    };
    // right-aligned twist column: every row ends its first field at the same offset
    let ends: Vec<usize> = lines
        .iter()
        .map(|l| {
            let start = col(l).unwrap();
            start + l[start..].find(' ').unwrap()
        })
        .collect();
    assert!(ends.windows(2).all(|w| w[0] == w[1]), "{text}");
}

#[test]
fn ulrich_examples() {
    let (v, _, _) = run_json(&["ulrich", "list", "--k", "1", "--n", "21"]);
    assert_eq!(v["results"]["count"], 6);
    let bundles = v["results"]["bundles"].as_array().unwrap();
    assert_eq!(bundles[1]["beta"], serde_json::json!([19, 10]));
    assert!(bundles
        .iter()
        .all(|b| b["rank"].is_string() && b["slope"]["den"].is_string()));

    let (v, _, _) = run_json(&[
        "ulrich",
        "construct",
        "--k",
        "5",
        "--n",
        "17",
        "--ks",
        "2,3",
        "--ns",
        "3,4",
    ]);
    let r = &v["results"];
    assert_eq!(r["beta"], serde_json::json!([55, 53, 33, 31, 11, 9]));
    assert_eq!(
        r["gamma"],
        serde_json::json!([9, 9, 9, 6, 6, 6, 3, 3, 3, 0, 0, 0])
    );
    assert_eq!(r["is_ulrich"], true);

    let (v, _, _) = run_json(&[
        "ulrich", "verify", "--k", "1", "--n", "4", "--beta", "3,0", "--gamma", "0,0,0",
    ]);
    assert_eq!(v["results"]["is_ulrich"], false);
    assert!(v["results"]["witness"].is_object());

    let (v, _, code) = run_json(&[
        "ulrich",
        "classify",
        "--k",
        "1",
        "--n",
        "4",
        "--brute-force",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["sets_equal"], true);

    let (v, _, _) = run_json(&["ulrich", "minrank", "--k", "2", "--n", "7"]);
    assert_eq!(v["results"]["product_form"], "125");
    assert_eq!(v["results"]["power_form"], "125");
    assert_eq!(v["results"]["enumerated_min"], "125");
}

#[test]
fn exit_codes() {
    let bad_space = run(&["invariants", "--k", "3", "--n", "3"]);
    assert_eq!(bad_space.status.code(), Some(2));

    let bad_weight = run(&["cohom", "--k", "1", "--n", "3", "--beta", "0,1"]);
    assert_eq!(bad_weight.status.code(), Some(2));
    assert!(stderr(&bad_weight).contains("--beta"));

    let bad_gamma = run(&["cohom", "--k", "1", "--n", "3", "--gamma", "x"]);
    assert_eq!(bad_gamma.status.code(), Some(2));
    assert!(stderr(&bad_gamma).contains("--gamma"));

    let bad_range = run(&["table", "--k", "1", "--n", "3", "--from", "1", "--to", "0"]);
    assert_eq!(bad_range.status.code(), Some(2));

    let bad_pair = run(&[
        "ulrich",
        "construct",
        "--k",
        "1",
        "--n",
        "4",
        "--ks",
        "2",
        "--ns",
        "2",
    ]);
    assert_eq!(bad_pair.status.code(), Some(2));

    let missing = run(&["ulrich", "construct", "--k", "1", "--n", "4"]);
    assert_eq!(missing.status.code(), Some(2));

    let too_big = run(&[
        "ulrich",
        "classify",
        "--k",
        "2",
        "--n",
        "9",
        "--brute-force",
        "--cap",
        "10",
    ]);
    assert_eq!(too_big.status.code(), Some(3));

    let ok = run(&[
        "ulrich",
        "classify",
        "--k",
        "2",
        "--n",
        "5",
        "--brute-force",
        "--jobs",
        "2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn cache_mismatch_document_exits_one() {
    // A cached document recording a disagreement must be reported as such.
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "ulrich",
        "classify",
        "--k",
        "1",
        "--n",
        "3",
        "--brute-force",
    ];
    let mut first = bin();
    first.arg("--cache").arg(dir.path()).args(args);
    assert_eq!(first.output().unwrap().status.code(), Some(0));

    let path = dir.path().join("gr_1_3.json");
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["results"]["sets_equal"] = Value::Bool(false);
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let mut second = bin();
    second.arg("--cache").arg(dir.path()).args(args);
    assert_eq!(second.output().unwrap().status.code(), Some(1));
}

#[test]
fn cache_hit_reproduces_document() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--json",
        "ulrich",
        "classify",
        "--k",
        "2",
        "--n",
        "5",
        "--brute-force",
    ];
    let mut first = bin();
    first.arg("--cache").arg(dir.path()).args(args);
    let a = first.output().unwrap();
    assert!(dir.path().join("gr_2_5.json").exists());

    let mut second = bin();
    second.env("BBW_ULRICH_CACHE", dir.path()).args(args);
    let b = second.output().unwrap();

    let va: Value = serde_json::from_slice(&a.stdout).unwrap();
    let vb: Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(without_timing(va), without_timing(vb));
    assert_eq!(b.status.code(), Some(0));
}

#[test]
fn corrupt_cache_is_ignored_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("gr_1_4.json"), "{ not json").unwrap();
    let mut c = bin();
    c.arg("--cache")
        .arg(dir.path())
        .args(["--json", "ulrich", "classify", "--k", "1", "--n", "4"]);
    let out = c.output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["count"], 2);
    // the corrupt file was replaced by a valid document
    let stored: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("gr_1_4.json")).unwrap())
            .unwrap();
    assert_eq!(stored["command"], "ulrich classify");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = bin()
        .args(["--json", "--output"])
        .arg(&path)
        .args(["invariants", "--k", "1", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "invariants");
}
