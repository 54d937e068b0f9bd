use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

const C4: &str = "part A a1 a2\npart B b1 b2\nedge a1 b1\nedge a1 b2\nedge a2 b1\nedge a2 b2\n";
const PATH4: &str = "part A a1 a2\npart B b1 b2\nedge a1 b1\nedge b1 a2\nedge a2 b2\n";

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("matchcover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn k33() -> String {
    let mut s = String::from("part A a0 a1 a2\npart B b0 b1 b2\n");
    for i in 0..3 {
        for j in 0..3 {
            s.push_str(&format!("edge a{i} b{j}\n"));
        }
    }
    s
}

fn petersen() -> String {
    let mut s = String::new();
    for i in 0..5 {
        s.push_str(&format!("edge {i} {}\n", (i + 1) % 5));
        s.push_str(&format!("edge {i} {}\n", i + 5));
        s.push_str(&format!("edge {} {}\n", 5 + i, 5 + (i + 2) % 5));
    }
    s
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_matchcover"))
        .args(args)
        .output()
        .unwrap();
    let code = out.status.code().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (code, json)
}

fn graph_arg(name: &str, text: &str) -> String {
    scratch(name, text).display().to_string()
}

#[test]
fn classify_reports() {
    let (code, out) = run(&["classify", "--graph", &graph_arg("c4", C4)]);
    assert_eq!(code, 0);
    assert_eq!(out["schema_version"], 1);
    assert_eq!(out["status"], "ok");
    let p = &out["payload"];
    assert_eq!(p["matching_covered"], true);
    assert_eq!(p["no_equivalent_class"], false);
    assert_eq!(
        p["witnesses"]["equivalent_class"].as_array().unwrap().len(),
        2
    );

    let (code, out) = run(&["classify", "--graph", &graph_arg("k33", &k33())]);
    assert_eq!(code, 0);
    for key in [
        "matching_covered",
        "no_equivalent_class",
        "strongly_coverable",
        "two_extendable",
        "brace",
    ] {
        assert_eq!(out["payload"][key], true, "{key}");
    }
}

#[test]
fn malformed_file_is_a_parse_error() {
    let (code, out) = run(&[
        "classify",
        "--graph",
        &graph_arg("bad", "part A a\nedge a\n"),
    ]);
    assert_eq!(code, 1);
    assert_eq!(out["status"], "error");
    assert!(
        out["diagnostics"][0].as_str().unwrap().contains("line 2"),
        "{out}"
    );
}

#[test]
fn feasibility() {
    let c4 = graph_arg("c4f", C4);
    let (_, out) = run(&["feasible", "--graph", &c4, "--edges", "a1-b1"]);
    assert_eq!(out["payload"]["feasible"], true);
    assert_eq!(out["payload"]["matching_count"], 2);
    let (_, out) = run(&["feasible", "--graph", &c4, "--edges", "a1-b1,a2-b2"]);
    assert_eq!(out["payload"]["feasible"], false);

    // The three edges at a vertex form a cut; every perfect matching uses one.
    let p = graph_arg("petersen", &petersen());
    let (code, out) = run(&["feasible", "--graph", &p, "--edges", "0-1,0-4,0-5"]);
    assert_eq!(code, 0);
    assert_eq!(out["payload"]["feasible"], false);
    assert_eq!(out["payload"]["spectrum"]["odd"], true);

    let (code, _) = run(&["feasible", "--graph", &c4, "--edges", "a1-a2"]);
    assert_eq!(code, 1);
    let (code, out) = run(&[
        "feasible",
        "--graph",
        &graph_arg("p4f", PATH4),
        "--edges",
        "a1-b1",
    ]);
    assert_eq!(code, 2);
    assert_eq!(out["status"], "error");
}

#[test]
fn switching() {
    let c4 = graph_arg("c4s", C4);
    let (_, out) = run(&[
        "switch-equiv",
        "--graph",
        &c4,
        "--edges",
        "a1-b1,a1-b2",
        "--target",
        "empty",
    ]);
    assert_eq!(out["payload"]["equivalent"], true);
    assert_eq!(out["payload"]["witness"], serde_json::json!(["a1"]));
    let (_, out) = run(&[
        "switch-equiv",
        "--graph",
        &c4,
        "--edges",
        "a1-b1",
        "--target",
        "a1-b1",
    ]);
    assert_eq!(out["payload"]["equivalent"], true);
    assert_eq!(out["payload"]["witness"], serde_json::json!([]));
}

#[test]
fn decomposition() {
    let (code, out) = run(&["dm", "--graph", &graph_arg("p4", PATH4)]);
    assert_eq!(code, 0);
    let p = &out["payload"];
    assert_eq!(p["parts"].as_array().unwrap().len(), 2);
    assert_eq!(p["arcs"].as_array().unwrap().len(), 1);
    assert_eq!(p["ell"], 1);
    assert_eq!(p["augmentation"]["new_edges"], serde_json::json!(["b2-a1"]));

    let (_, out) = run(&["dm", "--graph", &graph_arg("c4d", C4)]);
    assert_eq!(out["payload"]["parts"].as_array().unwrap().len(), 1);
    assert_eq!(out["payload"]["ell"], 0);

    let odd = "part A a1 a2\npart B b1\nedge a1 b1\nedge a2 b1\n";
    let (code, out) = run(&["dm", "--graph", &graph_arg("odd", odd)]);
    assert_eq!(code, 2);
    assert!(out["diagnostics"][0]
        .as_str()
        .unwrap()
        .contains("perfect matching"));
}

#[test]
fn augment_writes_a_covered_graph() {
    let out_path = scratch("aug-out", "");
    let (code, out) = run(&[
        "augment",
        "--graph",
        &graph_arg("p4a", PATH4),
        "--out",
        &out_path.display().to_string(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["payload"]["ell"], 1);
    let (_, out) = run(&["classify", "--graph", &out_path.display().to_string()]);
    assert_eq!(out["payload"]["matching_covered"], true);
}

#[test]
fn generate_and_verify() {
    let file = scratch("g32", "");
    let f = file.display().to_string();
    let (code, out) = run(&["generate", "--k", "3", "--m", "2", "--out", &f]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["payload"]["vertices"], 12);
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(
        text.lines().filter(|l| l.starts_with("link-edge ")).count(),
        4
    );
    assert!(out["payload"]["verification"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));

    let (code, _) = run(&["verify", "--graph", &f, "--mode", "structural"]);
    assert_eq!(code, 0);

    let test_edges: Vec<String> = text
        .lines()
        .filter_map(|l| l.strip_prefix("test-edge "))
        .map(|l| l.replace(' ', "-"))
        .collect();
    let (_, out) = run(&[
        "switch-equiv",
        "--graph",
        &f,
        "--edges",
        &test_edges.join(","),
        "--target",
        "empty",
    ]);
    assert_eq!(out["payload"]["equivalent"], false);
    let (_, out) = run(&[
        "switch-equiv",
        "--graph",
        &f,
        "--edges",
        &test_edges.join(","),
        "--target",
        "full",
    ]);
    assert_eq!(out["payload"]["equivalent"], false);

    let (code, out) = run(&["generate", "--k", "2", "--m", "2"]);
    assert_eq!(code, 2);
    assert_eq!(out["status"], "error");
}

#[test]
fn odd_copy_count_fails_verification() {
    // With three copies the test set meets every perfect matching in 0 or
    // 3 edges, so the non-feasibility check fails and the exit code says so.
    let (code, out) = run(&["generate", "--k", "3", "--m", "3"]);
    assert_eq!(code, 3);
    assert_eq!(out["payload"]["vertices"], 18);
    let failed: Vec<&str> = out["payload"]["verification"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["test_set_non_feasible"]);
}

#[test]
fn crossvalidation() {
    let args = [
        "crossvalidate",
        "--suite",
        "main2",
        "--bound",
        "6",
        "--samples",
        "20",
        "--random-bound",
        "8",
        "--seed",
        "3",
    ];
    let (code, first) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(
        first["payload"]["report"]["disagreements"],
        serde_json::json!([])
    );
    let (_, second) = run(&args);
    assert_eq!(first, second);

    let (code, _) = run(&["crossvalidate", "--suite", "main2"]);
    assert_eq!(code, 1);
    let (code, _) = run(&["crossvalidate", "--suite", "nope", "--seed", "1"]);
    assert_eq!(code, 1);

    // K2 satisfies the cut condition vacuously but is not strongly coverable.
    let (code, out) = run(&[
        "crossvalidate",
        "--suite",
        "main3",
        "--bound",
        "4",
        "--samples",
        "0",
        "--seed",
        "1",
    ]);
    assert_eq!(code, 3);
    assert_eq!(
        out["payload"]["report"]["disagreements"]
            .as_array()
            .unwrap()
            .len(),
        1
    );
}

#[test]
fn searches() {
    let (code, out) = run(&["search", "--mode", "subsets"]);
    assert_eq!(code, 0);
    assert_eq!(out["payload"]["scan"]["exceptional"], 1024);
    let (_, out) = run(&["search", "--mode", "mc-nec"]);
    assert_eq!(out["payload"]["witness"]["vertices"], 4);
    let (code, _) = run(&["search", "--mode", "large-class"]);
    assert_eq!(code, 1);
    let (code, out) = run(&[
        "search",
        "--mode",
        "large-class",
        "--seed",
        "5",
        "--samples",
        "5",
        "--bound",
        "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["payload"]["search"]["samples"], 5);
}

#[test]
fn human_output_and_usage_errors() {
    let out = Command::new(env!("CARGO_BIN_EXE_matchcover"))
        .args(["--human", "dm", "--graph", &graph_arg("p4h", PATH4)])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("dm [ok]"));
    assert!(text.contains("ell: 1"));

    let out = Command::new(env!("CARGO_BIN_EXE_matchcover"))
        .args(["frobnicate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
