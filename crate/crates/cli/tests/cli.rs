// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};
use std::process::Command;

use cyclide_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

const FIG2F: &str = r#"{"r":"1","u":["1","0","1","0","12/13"],"v":["2/13","0","-10/13","0"]}"#;
const FIG2A_1: &str = r#"{"r":"1","u":["1","-49/30","0","76/15","323/30"],"v":["-1669/120","0","-76/15","-323/30"]}"#;
const FIG2A_2: &str = r#"{"r":"1","u":["1","-2","-5","0","17/2"],"v":["-93/8","5","0","-17/2"]}"#;
const CROSSING: &str = r#"{"r":"1","u":["1","1","0","0","0"],"v":["0","0","0","0"]}"#;
const TORUS: &str = r#"{"r":"1","u":["1","0","-3","0","9/2"],"v":["-9/2","0","0","0"]}"#;

fn call(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(std::iter::once("cyclide").chain(args.iter().copied()));
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}"));
    (code, value)
}

fn file(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn vector(u: &[&str], v: &[&str]) -> Value {
    serde_json::json!({"r": "1", "u": u, "v": v})
}

#[test]
fn classify_villarceau() {
    let dir = tempfile::tempdir().unwrap();
    let f = file(dir.path(), "f.json", FIG2F);
    let (code, out) = call(&["classify", "--in", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out["verdict"], "VillarceauDupin");
    assert_eq!(out["villarceau"]["r4"], "0");
}

#[test]
fn blend_demo_pair() {
    let dir = tempfile::tempdir().unwrap();
    let a = file(dir.path(), "a.json", FIG2A_1);
    let b = file(dir.path(), "b.json", FIG2A_2);
    let (code, out) = call(&["blend-check", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap()]);
    assert_eq!((code, out), (EXIT_OK, serde_json::json!({"blend": true})));
}

#[test]
fn solvers() {
    let (code, out) = call(&["solve-cylinder", "--r", "1", "--u0", "1", "--u2", "0", "--u3", "0", "--u4", "-4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out["vectors"][0], vector(&["1", "0", "0", "0", "-4"], &["8", "0", "0", "0"]));
    assert_eq!(out["vectors"].as_array().unwrap().len(), 2);

    let (_, out) = call(&["solve-cone", "--r", "1", "--lambda", "-1", "--u0", "1", "--u1", "-2", "--u2", "-5", "--u3", "0"]);
    assert_eq!(out["vector"], serde_json::from_str::<Value>(FIG2A_2).unwrap());

    let (_, out) = call(&["solve-plane", "--r", "1", "--u0", "1", "--u1", "9/5", "--v2", "1", "--v3", "0"]);
    assert_eq!(out["vector"], vector(&["1", "9/5", "0", "0", "0"], &["699/200", "1", "0", "18/5"]));

    let args = ["villarceau-complete", "--r", "1", "--u0", "1", "--u1", "0", "--u2", "1", "--u3", "0", "--u4", "12/13"];
    let (_, out) = call(&args);
    assert_eq!(out["vectors"][1], serde_json::from_str::<Value>(FIG2F).unwrap());
}

#[test]
fn vector_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let f = file(dir.path(), "f.json", FIG2F);
    let t = file(dir.path(), "t.json", TORUS);
    let (_, out) = call(&["pencil", "--in", f.to_str().unwrap(), "--t", "2/5"]);
    assert_eq!(out["vector"]["u"][0], "7/5");
    assert_eq!(out["vector"]["v"][0], "62/65");
    let (_, out) = call(&["invariant", "--in", f.to_str().unwrap()]);
    assert_eq!(out, serde_json::json!({"J0": "25/104", "class": "smooth"}));
    let (_, out) = call(&["recognize-torus", "--in", t.to_str().unwrap()]);
    assert_eq!(out["torus"], "aroundTube");
    let (_, out) = call(&["check-dupin", "--in", t.to_str().unwrap()]);
    assert_eq!(out["path"], "quartic");
    assert_eq!(out["allVanish"], true);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["solve-cone", "--r", "1.5"],
        vec!["frobnicate"],
        vec!["solve-plane", "--r", "1", "--u0", "1", "--u1", "1", "--v2", "1e3", "--v3", "0"],
        vec!["classify"],
    ] {
        let (code, out) = call(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert_eq!(out["error"]["kind"], "UsageError");
    }
}

#[test]
fn domain_errors_exit_two_with_residuals() {
    let (code, out) = call(&["villarceau-complete", "--r", "1", "--u0", "1", "--u1", "0", "--u2", "1", "--u3", "0", "--u4", "2"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out["error"]["kind"], "NoRealSolution");
    assert_eq!(out["error"]["residuals"]["discriminant"], "-12");

    let dir = tempfile::tempdir().unwrap();
    let c = file(dir.path(), "c.json", CROSSING);
    let (code, out) = call(&["invariant", "--in", c.to_str().unwrap()]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out["error"]["kind"], "ComponentMismatch");
    let witness = &out["error"]["residuals"]["classification"];
    assert_eq!(witness["verdict"], "Outside");
    assert!(witness["principal"]["minorsM"].as_array().unwrap().iter().any(|m| m["value"] == "4"));

    let bad = file(dir.path(), "bad.json", r#"{"r":"1","u":[1.5,"0","0","0","0"],"v":["0","0","0","0"]}"#);
    let (code, out) = call(&["classify", "--in", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out["error"]["kind"], "ParseError");
}

#[test]
fn outputs_are_deterministic() {
    let args = ["solve-cylinder", "--r", "1", "--u0", "1", "--u2", "-3", "--u3", "0", "--u4", "9/2"];
    assert_eq!(run(std::iter::once("cyclide").chain(args)), run(std::iter::once("cyclide").chain(args)));
}

#[test]
fn mesh_is_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    let t = file(dir.path(), "t.json", TORUS);
    let mut objs = Vec::new();
    for threads in ["1", "3"] {
        let out_path = dir.path().join(format!("t{threads}.obj"));
        let args = ["mesh", "--in", t.to_str().unwrap(), "--bbox", "-9/2,9/2", "--res", "24", "--out", out_path.to_str().unwrap(), "--threads", threads];
        let (code, out) = call(&args);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out["triangles"].as_u64().unwrap() > 0);
        objs.push(std::fs::read(&out_path).unwrap());
    }
    assert_eq!(objs[0], objs[1]);

    let out_path = dir.path().join("empty.obj");
    let args = ["mesh", "--in", t.to_str().unwrap(), "--bbox", "10,11", "--res", "8", "--out", out_path.to_str().unwrap()];
    let (code, out) = call(&args);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out["error"]["kind"], "EmptySurface");
}

#[test]
fn demo_reproduces_all_panels() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = call(&["demo-fig2", "--out", dir.path().to_str().unwrap(), "--res", "24"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let panels = out["panels"].as_array().unwrap();
    assert_eq!(panels.len(), 6);
    let mut verdicts = 0;
    for p in panels {
        assert_eq!(p["blend"], true);
        for v in p["verdicts"].as_array().unwrap() {
            assert!(v == "PrincipalDupin" || v == "VillarceauDupin");
            verdicts += 1;
        }
        let obj = std::fs::read_to_string(p["obj"].as_str().unwrap()).unwrap();
        assert_eq!(obj.lines().filter(|l| l.starts_with("g ")).count(), 2);
    }
    assert_eq!(verdicts, 12);
    assert_eq!(panels[4]["vectors"][1], vector(&["1", "9/5", "0", "0", "0"], &["699/200", "1", "0", "18/5"]));
    assert_eq!(panels[5]["vectors"][1]["u"][0], "7/5");
    assert_eq!(panels[5]["J0"][0]["J0"], "25/104");
    let saved = std::fs::read_to_string(dir.path().join("panel-f-1.json")).unwrap();
    assert_eq!(saved.trim(), FIG2F);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cyclide");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["solve-cylinder", "--r", "1", "--u0", "1", "--u2", "0", "--u3", "0", "--u4", "-4"]), Some(0));
    assert_eq!(status(&["solve-cylinder", "--r", "x"]), Some(1));
    assert_eq!(status(&["solve-cylinder", "--r", "1", "--u0", "1", "--u2", "0", "--u3", "0", "--u4", "1"]), Some(2));
}
