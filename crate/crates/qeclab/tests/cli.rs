use std::path::PathBuf;
use std::process::{Command, Output};

use qeclab::report::read_report_csv;
use qeclab::scan::read_scan_csv;
use qeclab::tables::read_table_csv;

fn qeclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeclab")).args(args).env_remove("QECLAB_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn schema_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json")
}

#[test]
fn analyze_theta_2_2_4_is_primary_non_qe() {
    let o = qeclab(&["analyze", "--family", "theta:2,2,4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = read_report_csv(stdout(&o).as_bytes()).unwrap();
    assert_eq!(rows.len(), 1);
    assert!((rows[0].qec_numeric - 0.5529).abs() < 5e-4);
    assert_eq!(rows[0].class.to_string(), "nonQE");
    assert_eq!(rows[0].primary, "primary");
}

#[test]
fn analyze_acb_reports_both_methods() {
    let o = qeclab(&["analyze", "--family", "acb:1,3,3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let row = &read_report_csv(stdout(&o).as_bytes()).unwrap()[0];
    let exact = (17f64.sqrt() - 3.0) / 2.0;
    assert!((row.qec_numeric - exact).abs() < 1e-9);
    assert!((row.qec_closed_form.unwrap() - exact).abs() < 1e-9);
    assert!(!row.flagged);
}

#[test]
fn analyze_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p2.txt");
    std::fs::write(&path, "# P2\n2 1\n0 1\n").unwrap();
    let o = qeclab(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("qec") && l.ends_with(" -1")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("class") && l.ends_with(" QE")), "{text}");
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n1 7\n").unwrap();
    let o = qeclab(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let split = dir.path().join("split.txt");
    std::fs::write(&split, "5 3\n0 1\n2 3\n3 4\n").unwrap();
    let o = qeclab(&["analyze", split.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("{0, 1} {2, 3, 4}"), "{}", stderr(&o));

    assert_eq!(qeclab(&["analyze", "--family", "theta:1,1,3"]).status.code(), Some(1));
    assert_eq!(qeclab(&["analyze", "--family", "nope:3"]).status.code(), Some(1));
    assert_eq!(qeclab(&["analyze", "--family", "acb:2,2,2"]).status.code(), Some(1));
    assert_eq!(qeclab(&["analyze"]).status.code(), Some(1));
    assert_eq!(qeclab(&["conjecture-scan", "--max-sum", "4"]).status.code(), Some(1));
    assert_eq!(
        qeclab(&["tables", "t33", "--out", dir.path().join("no/such/dir.csv").to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn thread_cap_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_qeclab"))
        .args(["conjecture-scan", "--max-sum", "6"])
        .env("QECLAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_qeclab"))
        .args(["conjecture-scan", "--max-sum", "8"])
        .env("QECLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&qeclab(&["conjecture-scan", "--max-sum", "8"])));
}

#[test]
fn json_output_matches_schema() {
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(schema_path()).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for spec in ["theta:2,2,4", "kmn:3,3", "acb:1,3,3", "path:2", "cycle:5", "hypercube:3", "theta:3,3,4"] {
        let o = qeclab(&["analyze", "--family", spec, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{spec}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{spec}: {errors:?}");
    }
    let o = qeclab(&["analyze", "--family", "theta:4,4,4", "--format", "json", "--max-vertices", "5"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["report"]["primary_status"]["status"], "skipped");
    assert!(validator.is_valid(&doc));
    let mut broken = doc.clone();
    broken["report"]["qe_class"] = "maybe".into();
    assert!(!validator.is_valid(&broken));
}

#[test]
fn tables_write_files_and_match() {
    let dir = tempfile::tempdir().unwrap();
    for (which, rows) in [("t33", 10), ("t1", 3), ("t3", 6)] {
        let out = dir.path().join(format!("{which}.csv"));
        let o = qeclab(&["tables", which, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let parsed = read_table_csv(std::fs::File::open(&out).unwrap()).unwrap();
        assert_eq!(parsed.len(), rows);
        assert!(parsed.iter().all(|r| r.matches));
    }
    let t33 = read_table_csv(std::fs::File::open(dir.path().join("t33.csv")).unwrap()).unwrap();
    let p6 = t33.iter().find(|r| r.label == "6").unwrap();
    assert!((p6.qec_numeric - (2.0 * 3f64.sqrt() - 4.0)).abs() < 1e-9);
}

#[test]
fn conjecture_scan_flags_counterexamples() {
    let o = qeclab(&["conjecture-scan", "--max-sum", "14"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = read_scan_csv(stdout(&o).as_bytes()).unwrap();
    let row = |a, b, c| rows.iter().find(|r| (r.alpha, r.beta, r.gamma) == (a, b, c)).unwrap();
    assert!((row(1, 2, 2).qec + 0.5).abs() < 1e-9);
    assert!((row(2, 2, 2).qec - 0.4).abs() < 1e-9);
    assert!(row(1, 4, 5).qec.abs() < 1e-6);
    let flagged: Vec<_> = rows.iter().filter(|r| r.is_finding()).map(|r| (r.alpha, r.beta, r.gamma)).collect();
    assert_eq!(flagged, [(2, 3, 9)]);
    assert!(stderr(&o).contains("FINDING: Θ(2,3,9)"), "{}", stderr(&o));
}

#[test]
fn generate_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    assert_eq!(
        qeclab(&["generate", "--family", "theta:2,2,4", "--out", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let a = qeclab(&["analyze", path.to_str().unwrap(), "--format", "csv"]);
    let b = qeclab(&["analyze", "--family", "theta:2,2,4", "--format", "csv"]);
    let (a, b) =
        (&read_report_csv(stdout(&a).as_bytes()).unwrap()[0], &read_report_csv(stdout(&b).as_bytes()).unwrap()[0]);
    assert_eq!(a.qec_numeric, b.qec_numeric);
    assert_eq!(a.tanaka, b.tanaka);
}
