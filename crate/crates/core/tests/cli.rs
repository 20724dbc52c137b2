//! End-to-end runs of the `devsurf` binary.

use std::path::Path;
use std::process::{Command, Output};

const EXAMPLE_CURVE: &str = r#"{"version": 1, "entity": "curve", "payload": {"degree": 2, "points": [[0,0,0],[1,0,0],[2,1,0]]}}"#;

fn devsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_devsurf"))
        .args(args)
        .env_remove("DEVSURF_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn example_patch(dir: &Path) -> String {
    let curve = write(dir, "curve.json", EXAMPLE_CURVE);
    let patch = dir.join("patch.json").to_str().unwrap().to_string();
    let o = devsurf(&[
        "construct",
        "aumann",
        "--input",
        &curve,
        "--d0",
        "0,0,1",
        "--lambda",
        "2",
        "--m",
        "0.5",
        "--output",
        &patch,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    patch
}

#[test]
fn construct_writes_the_expected_net() {
    let dir = tempfile::tempdir().unwrap();
    let patch = example_patch(dir.path());
    let p = devsurf::io::parse_patch(&std::fs::read_to_string(patch).unwrap()).unwrap();
    let d: Vec<[f64; 3]> = p.d().points().iter().map(|q| q.to_array()).collect();
    assert_eq!(d, vec![[0.0, 0.0, 1.0], [4.0, 0.0, -1.0], [2.0, 4.0, 1.0]]);
}

#[test]
fn check_passes_and_fails_with_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let patch = example_patch(dir.path());
    for oracle in ["developability", "coplanarity", "certificate", "ode"] {
        let o = devsurf(&["check", "--input", &patch, "--oracle", oracle]);
        assert_eq!(o.status.code(), Some(0), "{oracle}: {}", stdout(&o));
        let doc = devsurf::io::parse_document(&stdout(&o)).unwrap();
        assert!(matches!(doc, devsurf::io::Document::Report(r) if r.pass));
    }

    let bent = write(
        dir.path(),
        "bent.json",
        r#"{"version": 1, "entity": "patch", "payload": {
            "c": {"degree": 2, "points": [[0,0,0],[1,0,0],[2,1,0]]},
            "d": {"degree": 2, "points": [[0,0,1],[4,0.5,-1],[2,4,1]]}, "certificate": null}}"#,
    );
    let o = devsurf(&["check", "--input", &bent]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("\"pass\": false"));
}

#[test]
fn tolerance_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let patch = example_patch(dir.path());
    let o = Command::new(env!("CARGO_BIN_EXE_devsurf"))
        .args(["check", "--input", &patch])
        .env("DEVSURF_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("\"tolerance\": 1e-300"));
    let o = Command::new(env!("CARGO_BIN_EXE_devsurf"))
        .args(["check", "--input", &patch])
        .env("DEVSURF_TOL", "banana")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn singular_edge_classify_mesh() {
    let dir = tempfile::tempdir().unwrap();
    let patch = example_patch(dir.path());

    let o = devsurf(&["singular", "--input", &patch]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[0.5, 1]\n");

    let o = devsurf(&["edge", "--input", &patch]);
    assert_eq!(o.status.code(), Some(0));
    let edge = devsurf::io::parse_curve(&stdout(&o)).unwrap();
    assert_eq!(edge.degree(), 3);

    let o = devsurf(&["classify", "--input", &patch]);
    assert_eq!(stdout(&o), "tangent\n");

    let o = devsurf(&["mesh", "--input", &patch, "--nu", "33", "--nv", "9"]);
    let obj = stdout(&o);
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 297);
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 256);
}

#[test]
fn op_chain_through_stdin_files() {
    let dir = tempfile::tempdir().unwrap();
    let patch = example_patch(dir.path());
    let out = dir.path().join("elevated.json");
    let o = devsurf(&[
        "op",
        "elevate",
        "--m",
        "2",
        "--input",
        &patch,
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = devsurf(&[
        "check",
        "--oracle",
        "certificate",
        "--input",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));

    for args in [
        vec!["op", "restrict-u", "--a", "0.2", "--b", "0.7"],
        vec!["op", "restrict-v", "--a", "-0.5", "--b", "0.6"],
        vec!["op", "scale-rulings", "--h", "2,1"],
        vec!["op", "reparam", "--h", "0,0,1"],
    ] {
        let mut full = args.clone();
        full.extend(["--input", patch.as_str()]);
        let o = devsurf(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let q = devsurf::io::parse_patch(&stdout(&o)).unwrap();
        let k = q.certificate().unwrap();
        assert!(
            devsurf::verify::blossom_coupling_residual(&q, k, 33).pass,
            "{args:?}"
        );
    }
}

#[test]
fn family_constructions() {
    let dir = tempfile::tempdir().unwrap();
    // a spatial boundary, so that no family member degenerates to a plane
    let curve = write(
        dir.path(),
        "curve.json",
        r#"{"version": 1, "entity": "curve", "payload": {"degree": 3, "points": [[0,0,0],[1,0,1],[2,1,0],[3,0,2]]}}"#,
    );
    let cases: [(&[&str], &str); 5] = [
        (&["cylinder", "--w", "0,0,1", "--f", "1,1"], "cylinder"),
        (&["cone", "--vertex", "0,0,5", "--f", "1,1"], "cone"),
        (&["tangent", "--f", "0.5"], "tangent"),
        (
            &[
                "family4", "--a", "0.5", "--b", "2", "--A", "-1", "--w", "0,0,1",
            ],
            "tangent",
        ),
        (&["from-edge", "--b1", "0", "--b2", "0.3"], "tangent"),
    ];
    for (flags, class) in cases {
        let mut args = vec!["construct"];
        args.extend_from_slice(flags);
        let input = if flags[0] == "from-edge" {
            write(
                dir.path(),
                "cubic.json",
                r#"{"version": 1, "entity": "curve", "payload": {"degree": 3,
                    "points": [[0,0,0],[0.3333333333333333,0,0],[0.6666666666666666,0.3333333333333333,0],[1,1,1]]}}"#,
            )
        } else {
            curve.clone()
        };
        args.extend(["--input", input.as_str()]);
        let o = devsurf(&args);
        assert_eq!(o.status.code(), Some(0), "{flags:?}: {}", stderr(&o));
        let patch = write(dir.path(), "fam.json", &stdout(&o));
        let o = devsurf(&["check", "--input", &patch]);
        assert_eq!(o.status.code(), Some(0), "{flags:?}");
        let o = devsurf(&["classify", "--input", &patch]);
        assert_eq!(stdout(&o).trim(), class, "{flags:?}");
    }
}

#[test]
fn usage_and_schema_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let curve = write(dir.path(), "curve.json", EXAMPLE_CURVE);

    let o = devsurf(&[
        "construct",
        "aumann",
        "--input",
        &curve,
        "--lambda",
        "2",
        "--m",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--d0"));

    let o = devsurf(&["construct", "aumann", "--input", &curve, "--bogus", "1"]);
    assert_eq!(o.status.code(), Some(1));

    let broken = write(
        dir.path(),
        "broken.json",
        r#"{"version": 1, "entity": "patch", "payload": {"c": {"degree": 1}}}"#,
    );
    let o = devsurf(&["check", "--input", &broken]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("payload.c"), "{}", stderr(&o));

    let o = devsurf(&["mesh", "--input", &curve]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("expected patch"));

    let o = devsurf(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}
