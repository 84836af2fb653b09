mod common;

use common::{cli, data_path, read_data};
use onepl::construct::fixture;
use onepl::diagram::serialize;

fn fixture_text(name: &str) -> String {
    serialize(&fixture(name).unwrap()).unwrap()
}

fn path(name: &str) -> String {
    data_path(name).to_string_lossy().into_owned()
}

#[test]
fn validate_tetrahedron() {
    assert_eq!(cli(&["validate", "-"], &fixture_text("tetrahedron")), (0, "ok\n".into(), String::new()));
}

#[test]
fn validate_reports_violations() {
    let text = "onepl 1\nvertex a true\nvertex b true\nvertex c true\nrot a b\nrot b a c\nrot c b\n";
    // a-b, b-c path: fine as a tree
    assert_eq!(cli(&["validate", "-"], text).0, 0);
    let asym = "onepl 1\nvertex a true\nvertex b true\nvertex c true\nrot a b c\nrot b a\nrot c b\n";
    let (code, out, _) = cli(&["validate", "-"], asym);
    assert_eq!(code, 1);
    assert!(out.lines().all(|l| l.starts_with("violation ")), "{out}");
    assert!(out.contains("violation Asymmetric"), "{out}");
    // other subcommands refuse an invalid diagram with the same code
    let (code, out, err) = cli(&["faces", "-"], asym);
    assert_eq!((code, out.as_str()), (1, ""));
    assert!(err.contains("Asymmetric"));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    assert_eq!(cli(&["validate", "-"], "not a diagram\n").0, 2);
    assert_eq!(cli(&["charge", "--scheme", "Z", "-"], "").0, 2);
    assert_eq!(cli(&["frobnicate"], "").0, 2);
    assert_eq!(cli(&["faces", "/nonexistent/file.onepl"], "").0, 2);
    assert_eq!(cli(&["find", "-"], &fixture_text("k6")).0, 2);
    assert_eq!(cli(&["find", "--pattern", "nope", "-"], &fixture_text("k6")).0, 2);
    assert_eq!(cli(&["glue", "--w1", "a", "--w2", "a", "--face", "0", "-"], &fixture_text("tetrahedron")).0, 2);
}

#[test]
fn charge_totals() {
    let (code, out, _) = cli(&["charge", "--scheme", "A", "-"], &fixture_text("k6"));
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("total=-12/1"));
    let (_, out, _) = cli(&["charge", "--scheme", "B", "-"], &fixture_text("k6"));
    assert_eq!(out.lines().last(), Some("total=-8/1"));
    // 9 vertices + 14 faces
    assert_eq!(out.lines().filter(|l| l.starts_with("charge ")).count(), 23);
}

#[test]
fn discharge_tetrahedron_is_inert() {
    let (code, out, _) = cli(&["discharge", "--rules", "B", "-"], &fixture_text("tetrahedron"));
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("total_initial=-8/1 total_final=-8/1"));
    assert_eq!(out.lines().filter(|l| l.starts_with("negative ")).count(), 8);
}

#[test]
fn discharge_log_lines() {
    let (code, out, _) = cli(&["discharge", "--rules", "A", "--log", &path("rhombicuboctahedron_crossed.onepl")], "");
    assert_eq!(code, 0);
    let negatives: Vec<&str> = out.lines().filter(|l| l.starts_with("negative ")).collect();
    assert_eq!(negatives.len(), 18);
    assert!(negatives.iter().all(|l| l.starts_with("negative v:x") && l.ends_with(" -2/3")));
    // every true vertex splits 1 over six false-triangle angles
    let r2: Vec<&str> = out.lines().filter(|l| l.starts_with("transfer A.R2 ")).collect();
    assert_eq!(r2.len(), 24 * 6);
    assert!(r2.iter().all(|l| l.split(' ').nth(4) == Some("1/6")));
}

#[test]
fn faces_and_smooth_output() {
    let (code, out, _) = cli(&["faces", "-"], &fixture_text("k5"));
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.starts_with("face ") && l.contains(" deg=") && l.contains(" class=")));
    let (_, out, _) = cli(&["smooth", "-"], &fixture_text("k5"));
    assert_eq!(out.lines().count(), 10);
    assert!(out.contains("edge a c\n"));
}

#[test]
fn find_catalog_and_file_patterns() {
    let rhombi = path("rhombicuboctahedron_crossed.onepl");
    let (code, out, _) = cli(&["find", "--pattern", "edge_77", &rhombi], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("count=84"));
    assert!(out.starts_with("match u="));

    let file = std::env::temp_dir().join(format!("onepl-pattern-{}.pat", std::process::id()));
    std::fs::write(&file, "# triangle with a 7-corner\npvertex a 7 7\npvertex b 0 inf\npvertex c 0 inf\npedge a b\npedge b c\npedge a c\n").unwrap();
    let (code, out, _) = cli(&["find", "--pattern-file", file.to_str().unwrap(), "-"], &fixture_text("k6"));
    std::fs::remove_file(&file).unwrap();
    assert_eq!((code, out.as_str()), (0, "count=0\n"));
}

#[test]
fn glue_round_trip_through_cli() {
    let (code, glued, _) = cli(&["glue", "--w1", "v1", "--w2", "v4", "--face", "0", "-n", "2", "-"], &fixture_text("k6"));
    assert_eq!(code, 0);
    assert_eq!(glued, read_data("k6_glued_n2.onepl"));
    assert_eq!(cli(&["validate", "-"], &glued).1, "ok\n");
}

#[test]
fn check_theorems_paths() {
    let (code, out, err) = cli(&["check-theorems", "-"], &fixture_text("k6"));
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("minimum degree 7"), "{err}");

    let (code, out, _) = cli(&["check-theorems", &path("rhombicuboctahedron_crossed.onepl")], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 15);
    assert_eq!(out.lines().last(), Some("summary pass=15 fail=0"));
}

#[test]
fn outputs_are_byte_stable() {
    let rhombi = path("rhombicuboctahedron_glued_n2.onepl");
    let runs: [&[&str]; 4] = [
        &["faces", &rhombi],
        &["discharge", "--rules", "C", "--log", &rhombi],
        &["find", "--pattern", "paw_9max", &rhombi],
        &["check-theorems", &rhombi],
    ];
    for args in runs {
        let first = cli(args, "");
        assert_eq!(first.0, 0, "{args:?}");
        assert_eq!(first, cli(args, ""), "{args:?}");
    }
}

#[test]
fn fixture_subcommand() {
    let (code, out, _) = cli(&["fixture", "k6"], "");
    assert_eq!(code, 0);
    assert_eq!(out, fixture_text("k6"));
    assert_eq!(cli(&["fixture", "k7"], "").0, 2);
}
