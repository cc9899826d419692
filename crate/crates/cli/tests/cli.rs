use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tcoalg::constructions::{double, ribbon_extension};
use tcoalg::demos;
use tcoalg::io;
use tcoalg::rep::regular_module;
use tcoalg::rib::{rib_from_rt_module, RibObject};
use tcoalg::yd::ddouble_to_yd;

fn tcoalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcoalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn trivial_demo_checks_clean_at_ribbon_level() {
    let o = tcoalg(&["check", "demo:trivial", "--level", "ribbon"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("clean"));
}

#[test]
fn constructed_double_rechecks_clean() {
    let dir = tempfile::tempdir().unwrap();
    let d = path(dir.path(), "d.json");
    let o = tcoalg(&["construct", "double", "demo:group_algebra2", "-o", &d]);
    assert_eq!(o.status.code(), Some(0));
    let o = tcoalg(&["check", &d, "--level", "quasi"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn every_construction_reloads_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, src, level) in [
        ("coop", "demo:sweedler", "hopf"),
        ("mirror", "demo:constant", "hopf"),
        ("mirror", "demo:double_kz2", "quasi"),
        ("dualcoop", "demo:group_algebra2", "hopf"),
        ("double", "demo:constant", "quasi"),
        ("ribbon-ext", "demo:double_kz2", "ribbon"),
    ] {
        let out = path(dir.path(), &format!("{kind}-{level}.json"));
        assert_eq!(tcoalg(&["construct", kind, src, "-o", &out]).status.code(), Some(0), "{kind}");
        let o = tcoalg(&["check", &out, "--level", level]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
    }
}

#[test]
fn mutated_file_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "sweedler.json");
    assert_eq!(tcoalg(&["demo", "sweedler", "-o", &f]).status.code(), Some(0));
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["comul"][0][0][0][0] = Value::String("2".into());
    let m = path(dir.path(), "mutated.json");
    std::fs::write(&m, v.to_string()).unwrap();

    let o = tcoalg(&["check", &m]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL ")));

    let o = tcoalg(&["--format", "json", "check", &m]);
    assert_eq!(o.status.code(), Some(1));
    let rep: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["clean"], Value::Bool(false));
    let failing: Vec<&Value> =
        rep["entries"].as_array().unwrap().iter().filter(|e| e["pass"] == Value::Bool(false)).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|e| e["witness"].is_string()));
}

#[test]
fn json_reports_are_deterministic() {
    let a = tcoalg(&["--format", "json", "check", "demo:double_kz2", "--level", "quasi"]);
    let b = tcoalg(&["--format", "json", "check", "demo:double_kz2", "--level", "quasi"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = tcoalg(&["--format", "json", "report"]);
    assert_eq!(r.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v.as_object().unwrap().len(), demos::DEMO_NAMES.len());
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(tcoalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tcoalg(&["check", "demo:nope"]).status.code(), Some(2));
    assert_eq!(tcoalg(&["check", "demo:constant", "--level", "quasi"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.json");
    std::fs::write(&bad, "{\"kind\": \"tcoalg\", \"field\": \"Q\", \"group\": 3}").unwrap();
    let o = tcoalg(&["check", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn drinfeld_prints_elements() {
    let dir = tempfile::tempdir().unwrap();
    let d = path(dir.path(), "d.json");
    assert_eq!(tcoalg(&["construct", "double", "demo:constant", "-o", &d]).status.code(), Some(0));
    let o = tcoalg(&["drinfeld", &d]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("u_0 = ") && out.contains("u_1 = "));
    assert!(out.contains("pass ovid-8"));
}

#[test]
fn yd_and_rib_commands() {
    let dir = tempfile::tempdir().unwrap();
    let h = demos::group_algebra(2);
    let d = double(&h).unwrap();
    let v = ddouble_to_yd(&h, &regular_module(&d, 0));
    let vf = path(dir.path(), "v.json");
    io::save(&vf, &io::yd_to_string(&v)).unwrap();
    for sub in ["check", "roundtrip"] {
        let o = tcoalg(&["yd", sub, "demo:group_algebra2", &vf]);
        assert_eq!(o.status.code(), Some(0), "{sub}: {}", stdout(&o));
    }

    let rt = ribbon_extension(&d).unwrap();
    let o = rib_from_rt_module(&rt, &regular_module(&rt, 0)).unwrap();
    let of = path(dir.path(), "o.json");
    io::save(&of, &io::rib_to_string(&o)).unwrap();
    assert_eq!(tcoalg(&["rib", "check", "demo:double_kz2", &of]).status.code(), Some(0));

    let doubled = RibObject { module: o.module.clone(), t: o.t.scale(&tcoalg::Scalar::from(2)) };
    io::save(&of, &io::rib_to_string(&doubled)).unwrap();
    let out = tcoalg(&["rib", "check", "demo:double_kz2", &of]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL rib-square"));
}

#[test]
fn demo_to_stdout_matches_library() {
    let o = tcoalg(&["demo", "constant"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), io::tcoalg_to_string(&demos::demo("constant").unwrap()));
}
