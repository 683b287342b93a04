use std::io::Write;
use std::process::{Command, Output};

fn cisgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cisgraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_k4() {
    let o = cisgraph(&["construct", "K:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "C~");
    let edges = stdout(&cisgraph(&["--format", "edges", "construct", "K:3"]));
    assert!(edges.contains("0 1"), "{edges}");
}

#[test]
fn props_q5() {
    let o = cisgraph(&["props", "--chromatic", "--vt", "Q:5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["alpha=5", "omega=4", "chromatic_number=4", "automorphisms=320", "cis=true"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
    let json = stdout(&cisgraph(&["--format", "jsonl", "props", "Kmn:2,3"]));
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["cis"], true);
    assert_eq!(v["well_covered"], false);
}

#[test]
fn enumerate_counts() {
    let all = stdout(&cisgraph(&["enumerate", "4"]));
    assert_eq!(all.lines().count(), 11);
    let tf = stdout(&cisgraph(&["enumerate", "5", "connected & omega<=2 & cis"]));
    assert_eq!(tf.lines().count(), 2);
}

#[test]
fn iso_and_canon() {
    assert_eq!(stdout(&cisgraph(&["iso", "R:2", "Q:4"])).trim(), "isomorphic=true");
    assert_eq!(stdout(&cisgraph(&["iso", "C:5", "K:5"])).trim(), "isomorphic=false");
    let a = stdout(&cisgraph(&["canon", "C:5"]));
    let b = stdout(&cisgraph(&["canon", "Dhc"]));
    assert_eq!(a, b);
}

#[test]
fn verify_and_explore_pass() {
    let o = cisgraph(&["verify", "families", "q-noncayley"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("status=pass").count(), 2);
    let o = cisgraph(&["explore", "q2", "--max", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn scan_file() {
    let dir = std::env::temp_dir().join(format!("cisgraph-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.g6");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "C~\nDhc\nnot graph6 !!\n").unwrap();
    drop(f);
    let o = cisgraph(&["scan", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("graph6=C~"), "{text}");
    assert!(!text.contains("graph6=Dhc"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(cisgraph(&["construct", "Q:2"]).status.code(), Some(2));
    assert_eq!(cisgraph(&["props", "@/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(cisgraph(&["enumerate", "4", "bogus"]).status.code(), Some(2));
    assert_eq!(cisgraph(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(cisgraph(&["--budget", "1", "canon", "Q:5"]).status.code(), Some(3));
    assert_eq!(cisgraph(&["--limit-cliques", "1", "props", "C:5"]).status.code(), Some(3));
    assert_eq!(cisgraph(&["enumerate", "8"]).status.code(), Some(2));
}
