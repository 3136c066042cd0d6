use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resurgence")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(suffix: &str, text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn resurgence_of_builtin_graphs() {
    let v = json(&["resurgence", "graph:C5", "--cover"]);
    assert_eq!(v["rho"]["exact"], "6/5");
    assert_eq!(v["rho_a"]["exact"], "6/5");
    let v = json(&["resurgence", "graph:three-triangles-d2", "--edge", "--no-sweep"]);
    assert_eq!(v["rho"]["exact"], "3/2");
    assert_eq!(v["rho_a"]["exact"], "4/3");
}

#[test]
fn graph_file_input() {
    let f = temp_file(".graph", "# bowtie\nvertices: x a b c d\nedge: x a\nedge: a b\nedge: b x\nedge: x c\nedge: c d\nedge: d x\n");
    let path = f.path().to_str().unwrap();
    let v = json(&["resurgence", path, "--edge", "--no-sweep"]);
    assert_eq!(v["rho"]["exact"], "4/3");
    let v = json(&["invariants", path]);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["omega"], 3);
}

#[test]
fn json_graph_input() {
    let f = temp_file(".json", r#"{"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"],["c","a"]]}"#);
    let v = json(&["resurgence", f.path().to_str().unwrap(), "--cover", "--no-sweep"]);
    assert_eq!(v["rho"]["exact"], "4/3");
}

#[test]
fn ideal_file_input() {
    // the cover ideal of a triangle, written out by hand
    let f = temp_file(".ideal", "x y z\nx y\ny z\nx z\n");
    let path = f.path().to_str().unwrap();
    let v = json(&["ideal", path]);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["big_height"], 2);
    let v = json(&["resurgence", path, "--no-sweep"]);
    assert_eq!(v["rho"]["exact"], "4/3");
}

#[test]
fn hypergraph_input() {
    let f = temp_file(".hg", "vertices: 1 2 3 4 5\nedge: 1 2 3\nedge: 3 4 5\nedge: 5 1 2\n");
    let path = f.path().to_str().unwrap();
    let v = json(&["invariants", path]);
    assert_eq!(v["chi"], 2);
    assert_eq!(v["max_edge_size"], 3);
    let v = json(&["resurgence", path, "--no-sweep"]);
    assert_eq!(v["rho_a"]["upper"], "5/2");
}

#[test]
fn containment_modes() {
    let v = json(&["containment", "graph:C5", "--edge", "--s", "3", "--t", "3"]);
    assert_eq!(v["holds"], false);
    assert!(v["witness"].is_string());
    let v = json(&["containment", "graph:C5", "--edge", "--s", "3", "--t", "2", "--certify"]);
    assert_eq!(v["holds"], true);
    assert!(!v["certificate"].as_array().unwrap().is_empty());
    let v = json(&["containment", "graph:K4", "--cover", "--c", "1"]);
    assert_eq!(v["chi"], 4);
    assert_eq!(v["entries"].as_array().unwrap().len(), 4);
    let v = json(&["containment", "graph:two-triangles-d2", "--edge", "--n", "1", "--b", "3"]);
    assert_eq!(v["t"], 4);
    assert_eq!(v["holds"], true);
}

#[test]
fn symbolic_and_sweep() {
    let v = json(&["symbolic", "graph:C3", "--cover", "--s", "2", "--cross-check"]);
    assert_eq!(v["alpha"], 3);
    assert_eq!(v["equals_ordinary"], false);
    let v = json(&["sweep", "graph:C3", "--cover", "--s-max", "4", "--t-max", "3"]);
    assert_eq!(v["lower_bound"], "1");
    assert!(v["truncated"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["resurgence", "graph:C5"],
        vec!["resurgence", "graph:C5", "--cover", "--edge"],
        vec!["resurgence", "graph:nonsense", "--cover"],
        vec!["symbolic", "graph:C5", "--cover", "--s", "0"],
        vec!["containment", "graph:C5", "--cover", "--s", "2"],
        vec!["containment", "graph:C5", "--cover", "--s", "2", "--t", "2", "--c", "1"],
        vec!["resurgence", "/no/such/file.graph", "--cover"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bad_graph_file_exits_2() {
    let f = temp_file(".graph", "vertices: a b\nedge: a c\n");
    let out = run(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn verify_suite_corpus() {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus");
    let v = json(&["verify-suite", corpus, "--corpus-only"]);
    assert_eq!(v["passed"], true);
    assert!(v["corpus"].as_array().unwrap().len() >= 8);

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("wrong.graph"), "# expect: cover rho 2\nvertices: a b c\nedge: a b\nedge: b c\nedge: c a\n")
        .unwrap();
    let out = run(&["verify-suite", dir.path().to_str().unwrap(), "--corpus-only"]);
    assert_eq!(out.status.code(), Some(1));
}
