//! End-to-end checks of the `rainbow` binary and the report contract.

use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use rainbow_cli::io::{emit_graph, parse_graph};
use rainbow_cli::{run_experiment, ColouringSource, ExperimentConfig, Report};
use rainbow_core::paths::{HoleWitness, PathWitness};
use rainbow_core::{Colouring, Graph};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rainbow"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rainbow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// The report with timing fields removed.
fn untimed(r: &Report) -> Value {
    fn strip(v: &mut Value) {
        match v {
            Value::Object(m) => {
                m.retain(|k, _| !k.starts_with("elapsed"));
                m.values_mut().for_each(strip);
            }
            Value::Array(a) => a.iter_mut().for_each(strip),
            _ => {}
        }
    }
    let mut v = serde_json::to_value(r).unwrap();
    strip(&mut v);
    v
}

proptest! {
    #[test]
    fn edge_lists_round_trip(n in 1usize..40, seed in any::<u64>(), density in 0.0f64..1.0) {
        let mut edges = Vec::new();
        let mut x = seed;
        for u in 0..n {
            for v in u + 1..n {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if ((x >> 33) as f64 / (1u64 << 31) as f64) < density {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }
}

#[test]
fn generated_families_round_trip() {
    for spec in ["shift:8", "mycielski:2", "petersen", "kneser:6,2", "kbip:3,4"] {
        let g = rainbow_cli::family::build_family(spec, None).unwrap().graph;
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g, "{spec}");
    }
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let mut cfg = ExperimentConfig::new("search:rainbow-path")
        .with_family("random-tf:18")
        .with_colouring(ColouringSource::Random);
    cfg.params.seed = Some(11);
    cfg.params.s = Some(4);
    let a = run_experiment(&cfg);
    let b = run_experiment(&cfg);
    assert_eq!(a.exit_code(), 0, "{}", a.to_json());
    assert_eq!(serde_json::to_string(&untimed(&a)).unwrap(), serde_json::to_string(&untimed(&b)).unwrap());
    let mut hunt = ExperimentConfig::new("grotzsch-t4");
    hunt.params.jobs = Some(2);
    assert_eq!(untimed(&run_experiment(&hunt)), untimed(&run_experiment(&hunt)));
}

#[test]
fn report_witnesses_revalidate() {
    let g = rainbow_cli::family::build_family("shift:7", None).unwrap().graph;
    let c = rainbow_core::generators::shift_graph_triples(7).unwrap().middle_element_colouring();

    let mut cfg = ExperimentConfig::new("search:rainbow-path").with_family("shift:7").with_colouring(ColouringSource::Middle);
    cfg.params.s = Some(3);
    let r = run_experiment(&cfg);
    let vertices: Vec<usize> = serde_json::from_value(r.result["witness"]["vertices"].clone()).unwrap();
    PathWitness { vertices, induced: true, rainbow: true }.validate(&g, Some(&c)).unwrap();

    let r = run_experiment(&ExperimentConfig::new("shift-claims"));
    let hole = &r.result["hole_with_rainbow_3_run"];
    if !hole.is_null() {
        let vertices: Vec<usize> = serde_json::from_value(hole["hole"]["vertices"].clone()).unwrap();
        let h = HoleWitness { vertices };
        h.validate(&g).unwrap();
        assert!(h.run_is_rainbow(&c, hole["start"].as_u64().unwrap() as usize, 3));
    }

    let mut cfg = ExperimentConfig::new("machinery:guided").with_family("grotzsch").with_colouring(ColouringSource::Random);
    cfg.params.seed = Some(5);
    cfg.params.s = Some(4);
    let r = run_experiment(&cfg);
    let grotzsch = rainbow_core::generators::grotzsch();
    let c = rainbow_core::generators::random_proper_colouring(&grotzsch, 4, 5).unwrap();
    let vertices: Vec<usize> = serde_json::from_value(r.result["witness"]["vertices"].clone()).unwrap();
    PathWitness { vertices, induced: true, rainbow: true }.validate(&grotzsch, Some(&c)).unwrap();
}

#[test]
fn binary_exit_codes_and_files() {
    let graph = scratch("p3.txt");
    std::fs::write(&graph, "3 2\n0 1\n1 2\n").unwrap();
    let out = bin().args(["analyze", "--graph"]).arg(&graph).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["chi"], 2);

    let bad = scratch("loop.txt");
    std::fs::write(&bad, "2 1\n0 0\n").unwrap();
    let out = bin().args(["analyze", "--graph"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["error"].as_str().unwrap().contains("line 2"));

    let out = bin().args(["search", "holes", "--family", "petersen", "--budget", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["run", "no-such-experiment"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let (edges, colours, triples, json) = (scratch("s6.txt"), scratch("s6.col"), scratch("s6.tri"), scratch("s6.json"));
    let out = bin()
        .args(["gen", "--family", "shift:6", "--colouring", "middle", "--out"])
        .arg(&edges)
        .arg("--colouring-out")
        .arg(&colours)
        .arg("--triples")
        .arg(&triples)
        .arg("--json")
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let g = parse_graph(&std::fs::read_to_string(&edges).unwrap()).unwrap();
    assert_eq!(g.n(), 20);
    let c = rainbow_cli::io::parse_colouring(&std::fs::read_to_string(&colours).unwrap(), 20).unwrap();
    assert_eq!(c, Colouring::new(rainbow_core::generators::shift_graph_triples(6).unwrap().middle_element_colouring().as_slice().to_vec()).unwrap());
    assert!(std::fs::read_to_string(&triples).unwrap().starts_with("0: 1 2 3\n1: 1 2 4\n"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["inputs"]["colouring"], c.digest());

    // Files produced by gen feed back into search.
    let out = bin()
        .args(["search", "rainbow-hole", "--graph"])
        .arg(&edges)
        .arg("--colouring")
        .arg(&colours)
        .output()
        .unwrap();
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(report["result"]["witness"].is_null());

    let cp = scratch("m23.ckpt");
    let _ = std::fs::remove_file(&cp);
    let out = bin().args(["hunt", "--family", "mycielski:2", "--t", "5", "--budget", "5000", "--split-depth", "8", "--checkpoint"]).arg(&cp).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["hunt", "--family", "mycielski:2", "--t", "5", "--split-depth", "8", "--checkpoint"]).arg(&cp).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["verdict"]["verdict"], "holds");
    assert!(report["result"]["stats"]["jobs_resumed"].as_u64().unwrap() > 0);
}
