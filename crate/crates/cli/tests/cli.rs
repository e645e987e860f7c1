use std::io::Write;
use std::process::{Command, Output, Stdio};

fn minorham(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minorham"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn minorham");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn family(args: &[&str]) -> String {
    let mut a = vec!["family"];
    a.extend_from_slice(args);
    let o = minorham(&a, None);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn herschel_props() {
    let h = family(&["herschel"]);
    let out = stdout(&minorham(&["props"], Some(&h)));
    for line in ["n=11", "m=18", "connectivity=3", "planar=true", "bipartite=true", "hamiltonian=false", "k25_free=false"] {
        assert!(out.lines().any(|l| l == line), "missing {line} in\n{out}");
    }
}

#[test]
fn petersen_has_no_k25() {
    let p = family(&["petersen"]);
    let o = minorham(&["minor", "--t", "5"], Some(&p));
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "absent");
    let o = minorham(&["minor", "--t", "4"], Some(&p));
    assert!(stdout(&o).starts_with("present"));
}

#[test]
fn gk_pipes_into_ham() {
    for k in ["1", "3"] {
        let g = family(&["gk", "--k", k]);
        let out = stdout(&minorham(&["ham"], Some(&g)));
        assert!(out.starts_with("non-hamiltonian"), "{out}");
        assert!(out.contains("components=6"), "{out}");
    }
}

#[test]
fn parse_errors_report_byte_offsets() {
    let o = minorham(&["props"], Some("C~\nD?!\n"));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("byte 5"), "{err}");
}

#[test]
fn json_lines_carry_schema() {
    let h = family(&["herschel"]);
    for args in [&["--json", "props"][..], &["--json", "ham"], &["--json", "minor", "--t", "5"]] {
        let out = stdout(&minorham(args, Some(&h)));
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["schema"], 1, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "--certificate", "props"];
    let g = family(&["gk", "--k", "2"]);
    let a = stdout(&minorham(&args, Some(&g)));
    let b = stdout(&minorham(&args, Some(&g)));
    assert_eq!(a, b);
    let a = stdout(&minorham(&["enumerate", "--n", "7"], None));
    let b = stdout(&minorham(&["enumerate", "--n", "7"], None));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 34);
}

#[test]
fn enumerate_counts() {
    let out = stdout(&minorham(&["enumerate", "--n", "8", "--filter", "k25-free", "--count-only", "--hamilton"], None));
    assert!(out.contains("total_3c_planar=257"), "{out}");
    assert!(out.contains("passing=194"), "{out}");
    assert!(out.contains("passing_hamiltonian=194"), "{out}");
    let out = stdout(&minorham(&["enumerate", "--n", "8", "--class", "triangulations", "--count-only"], None));
    assert!(out.contains("triangulations=14"), "{out}");
}

#[test]
fn reduce_round_trips_through_check() {
    let cube = "Gr`HOk";
    let o = minorham(&["--json", "reduce", "-g", cube, "--cycle", "1,3,2,6,4,5", "--lift-all"], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let dir = std::env::temp_dir().join(format!("minorham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.json");
    std::fs::write(&path, stdout(&o)).unwrap();
    let ok = minorham(&["reduce", "--check", path.to_str().unwrap()], None);
    assert!(ok.status.success());

    // A step naming a non-edge must be rejected.
    let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    v["trace"]["steps"][0]["c"] = serde_json::json!(0);
    v["trace"]["steps"][0]["b"] = serde_json::json!(0);
    std::fs::write(&path, v.to_string()).unwrap();
    let bad = minorham(&["reduce", "--check", path.to_str().unwrap()], None);
    assert!(!bad.status.success());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_quick_passes_and_tampering_fails() {
    let o = minorham(&["verify-paper", "--level", "quick", "--only", "herschel-connectivity", "--only", "gk-family"], None);
    assert!(o.status.success(), "{}", stdout(&o));

    // Dropping one edge at a degree-3 vertex leaves connectivity 2.
    let h = family(&["herschel"]);
    let g = minorham(&["--json", "props"], Some(&h));
    let v: serde_json::Value = serde_json::from_str(stdout(&g).trim()).unwrap();
    assert_eq!(v["connectivity"], 3);
    let tampered = drop_edge_at_degree3(h.trim());
    let dir = std::env::temp_dir().join(format!("minorham-tamper-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("herschel.g6");
    std::fs::write(&path, format!("{tampered}\n")).unwrap();
    let o = minorham(
        &["verify-paper", "--herschel", path.to_str().unwrap(), "--only", "herschel-connectivity"],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL herschel-connectivity"), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).ok();
}

/// Removes the first edge incident to a degree-3 vertex.
fn drop_edge_at_degree3(g6: &str) -> String {
    let g = minorham_core::Graph::from_graph6(g6).unwrap();
    let v = (0..g.n()).find(|&v| g.degree(v) == 3).unwrap();
    let u = g.neighbors(v)[0];
    g.remove_edge(u, v).unwrap().to_graph6()
}

#[test]
fn unknown_item_is_a_usage_error() {
    let o = minorham(&["verify-paper", "--only", "nope"], None);
    assert_eq!(o.status.code(), Some(2));
}
