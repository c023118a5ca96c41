use std::fs;
use std::process::{Command, Output};

fn zfw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zfw")).args(args).env_remove("ZFW_WORKERS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trace_examples() {
    let p3 = "Bg";
    let o = zfw(&["trace", p3, "--blue", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0→1, 1→2");

    let k4 = "C~";
    assert_eq!(stdout(&zfw(&["trace", k4, "--blue", "0,1,2"])).trim(), "0→3");

    let c4 = "Cl";
    let o = zfw(&["trace", c4, "--blue", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("stalled: blue = {0}"));

    let o = zfw(&["trace", p3, "--blue", "0", "--dot"]);
    assert!(stdout(&o).starts_with("graph forcing {"));
}

#[test]
fn compute_petersen() {
    let o = zfw(&["compute", "IheA@GUAo", "--z", "--alpha"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["z"], 5);
    assert_eq!(v["alpha"], 4);
    assert!(v.get("embeddability").is_none());
}

#[test]
fn verify_writes_deterministic_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, workers: &str| {
        let out = dir.path().join(name);
        let o = zfw(&["verify", "--enumerate-n", "6,8", "--workers", workers, "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        (fs::read(out).unwrap(), stdout(&o))
    };
    let (a, summary) = run("a.jsonl", "1");
    let (b, _) = run("b.jsonl", "3");
    assert_eq!(a, b);
    assert_eq!(a.iter().filter(|&&c| c == b'\n').count(), 7);
    assert!(summary.contains("graphs: 7"));
    assert!(summary.contains("violations: 0"));
}

#[test]
fn verify_ingests_files_and_isolates_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    fs::write(&input, "# comment\nIheA@GUAo\n\n!!bad\nC~\n").unwrap();
    let csv = dir.path().join("out.csv");
    let o = zfw(&["verify", "--input", input.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("graphs: 2"), "{s}");
    assert!(s.contains("rejected record 4"), "{s}");
    let rows = fs::read_to_string(csv).unwrap();
    assert_eq!(rows.lines().count(), 3);
    assert!(rows.starts_with("graph6,n,z,alpha"));
}

#[test]
fn construct_modes() {
    let o = zfw(&["construct", "--gt", "4", "--verify"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["z_gt"].as_u64(), v["alpha_gt"].as_u64()), (Some(8), Some(7)));

    let o = zfw(&["construct", "--gadget", "g2", "--vertex", "1", "--graph", "Bg", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["gadgets"][0]["kind"], "k4_minus_e");

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("paths.g6");
    fs::write(&input, "Bg\n").unwrap();
    let o = zfw(&["construct", "--cubify", input.to_str().unwrap()]);
    assert!(o.status.success());
    let g = zfw::graph6::parse_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert!(zfw::graph::classify_degrees(&g).is_cubic);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(zfw(&["verify"]).status.code(), Some(2));
    assert_eq!(zfw(&["verify", "--enumerate-n", "7"]).status.code(), Some(2));
    assert_eq!(zfw(&["compute", "not graph6 at all"]).status.code(), Some(2));
    assert_eq!(zfw(&["verify", "--enumerate-n", "6", "--budget-secs", "0"]).status.code(), Some(2));
}
