use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn graphcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn enumerate_four_legged_trees() {
    let o = graphcx(&["enumerate", "--genus", "0", "--legs", "4", "--format", "json"]);
    assert!(o.status.success());
    let graphs = json(&o);
    assert_eq!(graphs.as_array().unwrap().len(), 4);
    // each graph sits on its own line in the exact documented layout
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("  {")).collect();
    assert_eq!(lines.len(), 4);
    for l in lines {
        let l = l.trim().trim_end_matches(',');
        let back = graphcx::graph::ModularGraph::from_json_str(l).unwrap();
        assert_eq!(back.to_json_string(), l);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--genus", "2", "--legs", "1", "--format", "json"];
    let a = graphcx(&args);
    let b = graphcx(&[&args[..], &["--jobs", "1"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = graphcx(&["complex", "--genus", "1", "--legs", "4", "--format", "csv"]);
    let d = graphcx(&[
        "complex", "--genus", "1", "--legs", "4", "--format", "csv", "--jobs", "3",
    ]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn theta_certificate_passes() {
    let o = graphcx(&["verify", "theta", "--j", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let c = json(&o);
    assert_eq!(c["claim"], "theta");
    assert_eq!(c["verdict"], "PASS");
    assert_ne!(c["witness"]["coefficient"], "0");
    assert!(c["ms"].is_u64());
}

#[test]
fn failing_check_exits_one() {
    let o = graphcx(&["verify", "propzero", "--j", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "FAIL");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["enumerate", "--genus", "0", "--legs", "2"][..],
        &["verify", "theta", "--j", "0"],
        &["verify", "theta", "--j", "3"],
        &["complex", "--genus", "1", "--legs", "3", "--operad", "ass"],
        &["rep", "wreath", "--q", "3", "--hook", "3,1"],
        &["differential", "--genus", "1", "--legs", "3", "--degree", "9"],
        &["enumerate", "--genus", "1", "--legs", "1", "--format", "xml"],
        &["frobnicate"],
    ] {
        let o = graphcx(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn wreath_table() {
    let o = graphcx(&["rep", "wreath", "--q", "3", "--hook", "4,1,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().trim_end().ends_with('1'));
    let o = graphcx(&["rep", "wreath", "--q", "3", "--format", "json"]);
    let rows = json(&o);
    let ones: Vec<&Value> = rows
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["multiplicity"] == 1)
        .collect();
    assert_eq!(ones.len(), 1);
    assert_eq!(ones[0]["partition"], "(4,1,1)");
}

#[test]
fn rep_csv_header() {
    let o = graphcx(&["rep", "cyclic", "--shape", "2,1,1", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("partition,subgroup,irrep,multiplicity"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn gc2_homology_csv() {
    let o = graphcx(&["homology", "--gc2", "--genus", "3", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "genus,degree,rank\n3,0,1\n");
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(
        &cfg,
        "# complex parameters\ngenus = 1\nlegs = 3\noperad = \"hlie\"\nformat = json\n",
    )
    .unwrap();
    let out = dir.path().join("out.json");
    let o = graphcx(&[
        "complex",
        "--config",
        cfg.to_str().unwrap(),
        "--legs",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["g"], 1);
    assert_eq!(v["n"], 4);
    assert_eq!(v["operad"], "HLie");
}

#[test]
fn bad_config_and_unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.ini");
    fs::write(&cfg, "[x]\ncolour = blue\n").unwrap();
    let o = graphcx(&["complex", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let missing = dir.path().join("nope").join("out.txt");
    let o = graphcx(&[
        "complex",
        "--genus",
        "1",
        "--legs",
        "3",
        "--out",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nope"));
}

#[test]
fn differential_matrix_squares_to_zero() {
    let d = |deg: &str| {
        let o = graphcx(&[
            "differential",
            "--genus",
            "1",
            "--legs",
            "4",
            "--degree",
            deg,
            "--format",
            "json",
        ]);
        assert!(o.status.success());
        json(&o)
    };
    // compose the coordinate lists of degrees 3 and 2 by hand
    let (a, b) = (d("3"), d("2"));
    let entries = |m: &Value| -> Vec<(usize, usize, graphcx::Q)> {
        m["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                (
                    e[0].as_u64().unwrap() as usize,
                    e[1].as_u64().unwrap() as usize,
                    graphcx::rational::parse_q(e[2].as_str().unwrap()).unwrap(),
                )
            })
            .collect()
    };
    assert_eq!(a["rows"], b["cols"]);
    let mut product = std::collections::BTreeMap::new();
    for (r, k, x) in entries(&b) {
        for (k2, c, y) in entries(&a) {
            if k == k2 {
                *product.entry((r, c)).or_insert_with(graphcx::Q::default) += &x * &y;
            }
        }
    }
    assert!(product.values().all(|v| *v == graphcx::Q::default()));
    assert!(!entries(&a).is_empty());
}

#[test]
fn verify_all_sorted_by_claim() {
    let o = graphcx(&["verify", "all", "--j", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let certs = json(&o);
    let claims: Vec<&str> = certs
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["claim"].as_str().unwrap())
        .collect();
    let mut sorted = claims.clone();
    sorted.sort();
    assert_eq!(claims, sorted);
    assert_eq!(claims.len(), 6);
}
