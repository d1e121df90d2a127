use std::path::Path;
use std::process::{Command, Output};

use layerq::layout::{planar_pipeline, Assign};
use layerq::oracle::{generate, GeneratorKind, GeneratorSpec};
use layerq::partition::Mode;
use serde_json::Value;

fn layerq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_layerq")).args(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not a report ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn grid_layout_succeeds_with_valid_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let (g, l) = (path(dir.path(), "g.txt"), path(dir.path(), "l.json"));
    assert_eq!(layerq(&["gen", "--kind", "grid", "--n", "5", "--out", &g]).status.code(), Some(0));
    for mode in ["width1", "tripod"] {
        for assign in ["depth", "structured"] {
            let out = layerq(&["layout", &g, "--mode", mode, "--assign", assign, "--out", &l]);
            assert_eq!(out.status.code(), Some(0));
            let r = report(&out);
            assert!(r["verdicts"].as_object().unwrap().values().all(|v| v == true));
            assert_eq!(r["instance"]["n"], 25);
            assert!(r["final_queue_count"].as_u64().unwrap() <= r["bound"]["value"].as_u64().unwrap());
            let out = layerq(&["verify", "--graph", &g, "--layout", &l]);
            assert_eq!(out.status.code(), Some(0));
        }
    }
}

#[test]
fn corrupted_layout_names_a_nested_pair() {
    let dir = tempfile::tempdir().unwrap();
    let (g, l) = (path(dir.path(), "g.txt"), path(dir.path(), "l.json"));
    layerq(&["gen", "--kind", "grid", "--n", "5", "--out", &g]);
    let out = layerq(&["layout", &g, "--out", &l]);
    assert!(report(&out)["final_queue_count"].as_u64().unwrap() >= 2);
    // Put every edge in the first queue.
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&l).unwrap()).unwrap();
    let queues = doc["queues"].as_array().unwrap();
    let merged: Vec<Value> = queues.iter().flat_map(|q| q.as_array().unwrap().clone()).collect();
    doc["queues"] = Value::Array(vec![Value::Array(merged)]);
    std::fs::write(&l, doc.to_string()).unwrap();

    let out = layerq(&["verify", "--graph", &g, "--layout", &l]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["verdicts"]["layout"], false);
    let problem = r["problems"][0].as_str().unwrap();
    assert!(problem.contains("nest in queue 0"), "{problem}");
}

#[test]
fn nonplanar_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "k5.txt");
    layerq(&["gen", "--kind", "complete", "--n", "5", "--out", &g]);
    let out = layerq(&["layout", &g]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not planar"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(layerq(&["layout", "--bogus"]).status.code(), Some(2));
    assert_eq!(layerq(&["layout", "x.txt", "--mode", "wide"]).status.code(), Some(2));
    assert_eq!(layerq(&["layout", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(layerq(&["gen", "--kind", "grid"]).status.code(), Some(2));
}

#[test]
fn render_draws_every_vertex_and_edge() {
    let dir = tempfile::tempdir().unwrap();
    let (g, l, svg) = (path(dir.path(), "g.txt"), path(dir.path(), "l.json"), path(dir.path(), "l.svg"));
    layerq(&["gen", "--kind", "grid", "--n", "4", "--out", &g]);
    layerq(&["layout", &g, "--out", &l]);
    assert_eq!(layerq(&["render", "--layout", &l, "--out", &svg]).status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 16);
    assert_eq!(text.matches("class=\"arc\"").count(), 24);
    // Without --out the drawing goes to stdout.
    assert_eq!(layerq(&["render", "--layout", &l]).stdout, text.as_bytes());
}

#[test]
fn artifacts_match_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (g, l) = (path(dir.path(), "g.txt"), path(dir.path(), "l.json"));
    let out = layerq(&["gen", "--kind", "random-triangulation", "--n", "300", "--seed", "7", "--out", &g]);
    assert_eq!(out.status.code(), Some(0));
    let spec = GeneratorSpec {
        kind: GeneratorKind::RandomTriangulation { n: 300 },
        seed: 7,
    };
    let graph = generate(&spec).unwrap();
    assert_eq!(std::fs::read_to_string(&g).unwrap(), graph.to_text());

    layerq(&["layout", &g, "--mode", "tripod", "--assign", "structured", "--out", &l]);
    let lib = planar_pipeline(&graph, Mode::Tripod, Assign::Structured).unwrap();
    assert_eq!(std::fs::read_to_string(&l).unwrap(), lib.layout.to_json());
}

#[test]
fn gen_without_out_prints_the_graph() {
    let out = layerq(&["gen", "--kind", "cycle", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let g = layerq::Graph::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
}

#[test]
fn partition_bundle_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (g, p) = (path(dir.path(), "g.txt"), path(dir.path(), "p.json"));
    layerq(&["gen", "--kind", "random-triangulation", "--n", "200", "--seed", "3", "--out", &g]);
    for mode in ["width1", "tripod"] {
        let made = report(&layerq(&["partition", &g, "--mode", mode, "--out", &p]));
        let out = layerq(&["verify", "--graph", &g, "--partition", &p]);
        assert_eq!(out.status.code(), Some(0));
        let checked = report(&out);
        assert_eq!(checked["verdicts"], made["verdicts"]);
        assert_eq!(checked["quotient_td_width"], made["quotient_td_width"]);
        assert_eq!(checked["mode"], mode);
    }
}

#[test]
fn batch_verify_uses_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut args: Vec<String> = vec!["verify".into(), "--jobs".into(), "3".into()];
    for n in 3..8 {
        let (g, l) = (path(dir.path(), &format!("g{n}.txt")), path(dir.path(), &format!("l{n}.json")));
        layerq(&["gen", "--kind", "grid", "--n", &n.to_string(), "--out", &g]);
        layerq(&["layout", &g, "--out", &l]);
        args.extend(["--graph".into(), g, "--layout".into(), l]);
    }
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = layerq(&args);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdicts"].as_object().unwrap().len(), 5);
    assert_eq!(r["values"]["items"].as_array().unwrap().len(), 5);
}

#[test]
fn oracle_reports_exact_values_and_samples() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "k4.txt");
    layerq(&["gen", "--kind", "complete", "--n", "4", "--out", &g]);
    let r = report(&layerq(&["oracle", "--what", "queue-number", &g]));
    assert_eq!(r["values"]["queue_number"], 2);
    let r = report(&layerq(&["oracle", "--what", "fan-sample", "--samples", "200"]));
    assert_eq!(r["verdicts"]["every_quotient_has_a_triangle"], true);
}
