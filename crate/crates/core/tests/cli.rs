//! End-to-end runs of the `idcode` binary.

use std::fs;
use std::path::Path;
use std::process::Command;

use tempfile::TempDir;

fn idcode(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_idcode"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn kv<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn lowerbound_prints_three() {
    let (code, out, _) = idcode(&["lowerbound", "--n", "10", "--d", "2"]);
    assert_eq!((code, out.as_str()), (0, "3\n"));
}

#[test]
fn verify_p4() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p4.graph", "4 3\n0 1\n1 2\n2 3\n");
    let (code, out, _) = idcode(&["verify", "--graph", &g, "--code", "0,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("valid"));
    let (code, out, _) = idcode(&["verify", "--graph", &g, "--code", "1,2"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().next(), Some("not_separating(1,2)"));
    let (code, _, _) = idcode(&["verify", "--graph", &g, "--code", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn solve_exact_k2_has_twins() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k2.graph", "2 1\n0 1\n");
    let (code, _, err) = idcode(&["solve-exact", "--graph", &g]);
    assert_eq!(code, 1);
    assert!(err.contains("twins: 0,1"), "{err}");
    let (code, out, _) = idcode(&["--format", "kv", "solve-exact", "--graph", &g]);
    assert_eq!(code, 1);
    assert_eq!(kv(&out, "error"), "twins: 0,1");
}

#[test]
fn solve_exact_cap() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p6.graph", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    let (code, out, _) = idcode(&["--format", "kv", "solve-exact", "--graph", &g]);
    assert_eq!(code, 0);
    assert_eq!(kv(&out, "gamma_id"), "4");
    let (code, _, _) = idcode(&["solve-exact", "--graph", &g, "--cap", "5"]);
    assert_eq!(code, 3);
}

#[test]
fn malformed_graph_is_input_error() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.graph", "3 2\n0 1\n");
    let (code, _, err) = idcode(&["solve-exact", "--graph", &g]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
    assert_eq!(idcode(&["no-such-command"]).0, 2);
}

#[test]
fn approx_interval_prints_chain() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "p6.intervals",
        "6\n0 0 1\n1 1 2\n2 2 3\n3 3 4\n4 4 5\n5 5 6\n",
    );
    let (code, out, _) = idcode(&["--format", "kv", "approx-interval", "--intervals", &f]);
    assert_eq!(code, 0, "{out}");
    for i in 1..=5 {
        assert!(kv(&out, &format!("chain{i}")).ends_with("ok"));
    }
    let size: usize = kv(&out, "size").parse().unwrap();
    assert!(size <= 6);
}

#[test]
fn approx_greedy_and_vcdim() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p6.graph", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    let (code, out, _) = idcode(&["--format", "kv", "approx-greedy", "--graph", &g]);
    assert_eq!(code, 0);
    assert_eq!(kv(&out, "requirements"), "21");
    let (code, out, _) = idcode(&["--format", "kv", "vcdim", "--graph", &g]);
    assert_eq!(code, 0);
    assert_eq!(kv(&out, "dimension"), "2");
    assert_eq!(kv(&out, "gamma_id_lower_bound"), "3");
}

#[test]
fn gen_writes_files() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("c4");
    let (code, out, _) = idcode(&[
        "--format", "kv", "gen", "--family", "c4free", "--param", "4", "--out",
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(kv(&out, "vertices"), "10");
    let graph = prefix.with_extension("graph");
    let code_text = fs::read_to_string(prefix.with_extension("code")).unwrap();
    let (code, out, _) = idcode(&[
        "verify", "--graph", graph.to_str().unwrap(), "--code", code_text.trim(),
    ]);
    assert_eq!((code, out.lines().next()), (0, Some("valid")));

    let prefix = dir.path().join("path");
    idcode(&["gen", "--family", "path", "--param", "5", "--out", prefix.to_str().unwrap()]);
    assert!(Path::new(&prefix.with_extension("intervals")).exists());
    assert_eq!(idcode(&["gen", "--family", "vcd", "--param", "1"]).0, 2);
}

#[test]
fn reduce_and_map_back() {
    let dir = TempDir::new().unwrap();
    let sc = write(&dir, "sc.txt", "2 2\n1 1\n1 2\n");
    for (target, vertices, code_size) in [("dc", "32", "16"), ("ic", "40", "26")] {
        let prefix = dir.path().join(target);
        let (code, out, _) = idcode(&[
            "--format", "kv", "reduce", "--setcover", &sc, "--target", target, "--out",
            prefix.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(kv(&out, "vertices"), vertices);
        assert_eq!(kv(&out, "forward_code_size"), code_size);
        let labels = fs::read_to_string(prefix.with_extension("labels")).unwrap();
        assert_eq!(labels.lines().count(), vertices.parse::<usize>().unwrap());
        let forward = kv(&out, "forward_code").to_string();
        let (code, out, _) = idcode(&[
            "--format", "kv", "map-back", "--setcover", &sc, "--target", target, "--code",
            &forward,
        ]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(kv(&out, "cover"), "1,2");
    }
    let (code, _, _) = idcode(&["map-back", "--setcover", &sc, "--target", "ic", "--code", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn degenerate_reduce_falls_back() {
    let dir = TempDir::new().unwrap();
    let sc = write(&dir, "sc.txt", "2 1\n2 1 2\n");
    let (code, out, _) = idcode(&["--format", "kv", "reduce", "--setcover", &sc, "--target", "ic"]);
    assert_eq!(code, 0);
    assert_eq!(kv(&out, "direct_cover"), "1");
}
