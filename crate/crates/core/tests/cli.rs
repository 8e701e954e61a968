use std::path::Path;

use serde_json::Value;

fn qct(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qct").chain(args.iter().copied());
    let rc = qct::qct::run(argv, &mut out, &mut err);
    (
        rc,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (rc, out, err) = qct(&full);
    assert_eq!(rc, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn stored_ids(err: &str) -> Vec<String> {
    err.lines()
        .filter_map(|l| l.strip_prefix("catalog: "))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_owned())
        .collect()
}

#[test]
fn exit_codes() {
    assert_eq!(qct(&["field", "--p", "3", "--e", "2"]).0, 0);
    assert_eq!(qct(&["no-such-command"]).0, 2);
    assert_eq!(qct(&["code", "build", "rs", "--q", "8"]).0, 2);
    let (rc, _, err) = qct(&["code", "build", "rs", "--q", "6", "--k", "2"]);
    assert_eq!(rc, 1);
    assert!(err.contains("prime power"));
    assert_eq!(
        qct(&["code", "distance", "--input", "/no/such/file.json"]).0,
        1
    );
}

#[test]
fn field_dual_basis() {
    let v = json(&["field", "--p", "2", "--e", "2", "--dual-basis", "1,w"]);
    assert_eq!(v["order"], 4);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    assert_eq!(v["dual_basis"].as_array().unwrap().len(), 2);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "code", "build", "bch", "--q", "4", "--n", "15", "--delta", "5",
    ];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a, b);
    assert_eq!(a["n"], 15);
    assert_eq!(a["k"], 9);
    assert_eq!(a["distance"]["value"], 5);
    assert_eq!(a["distance"]["exactness"], "lower_bound");
}

#[test]
fn records_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rs.json");
    let (rc, out, _) = qct(&["--json", "code", "build", "rs", "--q", "8", "--k", "3"]);
    assert_eq!(rc, 0);
    std::fs::write(&path, out).unwrap();
    let p = path.to_str().unwrap();

    let dual = json(&["code", "dual", "--input", p]);
    assert_eq!((dual["n"].as_u64(), dual["k"].as_u64()), (Some(7), Some(4)));
    let d = json(&["code", "distance", "--input", p]);
    assert_eq!(d["distance"]["value"], 5);
    let ext = json(&["code", "extend", "--input", p]);
    assert_eq!(ext["n"], 8);
}

#[test]
fn quantum_pipelines() {
    let v = json(&["quantum", "rs-sum", "--q", "16", "--k1", "9", "--k2", "2"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(31), Some(14)));
    assert_eq!((v["dz"].as_u64(), v["dx"].as_u64()), (Some(7), Some(3)));

    let v = json(&["quantum", "th-best", "simplex", "--m", "3"]);
    let first = &v.as_array().unwrap()[0];
    assert_eq!(
        (first["n"].as_u64(), first["k"].as_u64()),
        (Some(7), Some(3))
    );

    let (rc, _, err) = qct(&["quantum", "rs-sum", "--q", "16", "--k1", "2", "--k2", "9"]);
    assert_eq!(rc, 1);
    assert!(err.contains("k2"));
}

#[test]
fn audit_formats() {
    let (rc, out, _) = qct(&["--csv", "audit", "table3"]);
    assert_eq!(rc, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("target,index,claim,status,summary,witness")
    );
    assert_eq!(lines.count(), 4);

    let v = json(&["audit", "table1"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["status"] == "confirmed"));

    // an inconsistent table still exits 0
    let (rc, out, _) = qct(&["audit", "examples"]);
    assert_eq!(rc, 0);
    assert!(out.contains("inconsistent"));
}

#[test]
fn catalog_store_get_search() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("nested/catalog.jsonl");
    let cat_s = cat.to_str().unwrap();

    let build = [
        "--catalog",
        cat_s,
        "code",
        "build",
        "rs",
        "--q",
        "4",
        "--k",
        "2",
    ];
    let (rc, _, err1) = qct(&build);
    assert_eq!(rc, 0);
    let (_, _, err2) = qct(&build);
    let ids = stored_ids(&err1);
    assert_eq!(ids.len(), 1);
    assert_eq!(ids, stored_ids(&err2));

    let listed = json(&["--catalog", cat_s, "catalog", "list"]);
    assert_eq!(listed.as_array().unwrap().len(), 1);

    let prefix = &ids[0][..10];
    let got = json(&["--catalog", cat_s, "catalog", "get", prefix]);
    assert_eq!(got["id"], ids[0].as_str());
    assert_eq!(got["kind"], "classical");

    let reference = format!("id:{prefix}");
    let dual = json(&["--catalog", cat_s, "code", "dual", "--input", &reference]);
    assert_eq!(dual["k"], 1);

    let (rc, _, err) = qct(&[
        "--catalog",
        cat_s,
        "quantum",
        "rs-sum",
        "--q",
        "8",
        "--k1",
        "4",
        "--k2",
        "1",
    ]);
    assert_eq!(rc, 0);
    assert_eq!(stored_ids(&err).len(), 1);
    let found = json(&[
        "--catalog",
        cat_s,
        "catalog",
        "search",
        "--n",
        "15",
        "--q",
        "8",
    ]);
    assert_eq!(found.as_array().unwrap().len(), 1);
    let none = json(&[
        "--catalog",
        cat_s,
        "catalog",
        "search",
        "--n",
        "15",
        "--dz-min",
        "50",
    ]);
    assert!(none.as_array().unwrap().is_empty());

    assert_eq!(
        qct(&["--catalog", cat_s, "catalog", "get", "ffffffffffff"]).0,
        1
    );
    assert!(Path::new(cat_s).exists());
}

#[test]
fn audit_reports_are_stored_with_their_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("c.jsonl");
    let cat_s = cat.to_str().unwrap();
    let (rc, _, err) = qct(&["--catalog", cat_s, "audit", "table3"]);
    assert_eq!(rc, 0);
    let ids = stored_ids(&err);
    assert!(ids.len() > 1);
    let report = json(&["--catalog", cat_s, "catalog", "get", &ids[0]]);
    assert_eq!(report["kind"], "report");
    let row = json(&["--catalog", cat_s, "catalog", "get", &ids[1]]);
    assert_eq!(row["inputs"][0], ids[0].as_str());
}
