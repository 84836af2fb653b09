#![allow(dead_code)]

use std::path::PathBuf;

use onepl::construct::{fixture, FIXTURE_NAMES};
use onepl::diagram::{parse, Diagram, SimpleGraph};
use rand::Rng;

pub const DATA_FILES: [&str; 8] = [
    "tetrahedron_glued_n3.onepl",
    "c4_glued_n3.onepl",
    "k5_glued_n2.onepl",
    "k6_glued_n2.onepl",
    "k6_glued_n4.onepl",
    "rhombicuboctahedron_crossed.onepl",
    "rhombicuboctahedron_glued_n2.onepl",
    "rhombicuboctahedron_glued_n3.onepl",
];

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load(name: &str) -> Diagram {
    parse(&read_data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Built-in fixtures followed by every bundled data file.
pub fn corpus() -> Vec<(String, Diagram)> {
    let mut out: Vec<(String, Diagram)> =
        FIXTURE_NAMES.iter().map(|n| (n.to_string(), fixture(n).unwrap())).collect();
    out.extend(DATA_FILES.iter().map(|n| (n.to_string(), load(n))));
    out
}

/// G(n, p) with vertices named `g0`, `g1`, ...
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new((0..n).map(|i| format!("g{i}")).collect());
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["onepl"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = onepl::cli::run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
