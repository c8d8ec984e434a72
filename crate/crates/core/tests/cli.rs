use std::io::Write;
use std::process::{Command, Output};

use enumgeo::{BiSeries, QSeries};

fn enumgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_enumgeo"))
        .args(args)
        .env_remove("ENUMGEO_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = enumgeo(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eta_quotient_text() {
    assert_eq!(
        stdout(&["expand", "eta-quotient", "--exponent", "-12", "--order", "5"]),
        "# shift -1/2\n1, 12, 90, 520, 2535, 10908\n"
    );
}

#[test]
fn order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_enumgeo"))
        .args(["expand", "eisenstein", "--weight", "4"])
        .env("ENUMGEO_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1, 240, 2160, 6720\n");
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["--format", "json", "expand", "goettsche", "--surface", "b9", "--order", "6"],
        &["--format", "json", "verify", "lattice"],
        &["lattice", "exceptional", "--k", "7"],
        &["--format", "json", "fit", "--preset", "half-k3-z2"],
    ];
    for args in cases {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn expand_json_round_trips() {
    let targets: &[&[&str]] = &[
        &["eta-quotient", "--exponent", "-12"],
        &["eisenstein", "--weight", "6"],
        &["theta-e8"],
        &["hilb-euler", "--surface", "k3"],
        &["bryan-leung", "--genus", "1"],
        &["half-k3-z1"],
    ];
    for target in targets {
        let mut args = vec!["--format", "json", "expand", "--order", "8"];
        args.extend_from_slice(target);
        let text = stdout(&args);
        let s: QSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(s.order(), 8, "{target:?}");
        assert_eq!(serde_json::to_string_pretty(&s).unwrap().trim(), text.trim(), "{target:?}");
    }
    let text = stdout(&["--format", "json", "expand", "goettsche", "--surface", "k3", "--order", "4"]);
    let b: BiSeries = serde_json::from_str(&text).unwrap();
    assert_eq!(b.coefficient(1).unwrap().len(), 5);
}

#[test]
fn mochizuki_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"v":{{"r":2,"a_h":5,"a_K":-3,"a_sq":5,"n":["1","1"]}},"chi_v":["3","1"],"K_h":-3,
            "decomps":[{{"a1_h":1,"a2_h":4,"sw":1,"A":["2","1"]}},
                       {{"a1_h":-1,"a2_h":6,"sw":-1,"A":[1,2]}}]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    // −(1·2 − 1·½)·2^{1−3}
    assert_eq!(stdout(&["sw", "mochizuki", "--file", path]), "-3/8\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "sw", "mochizuki", "--file", path, "--dt-hat", "1/3"]))
            .unwrap();
    assert_eq!(v["dt_bar"], serde_json::json!(["-1", "24"]));
}

#[test]
fn invalid_decomposition_is_rejected() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"v":{{"r":2,"a_h":5,"a_K":-3,"a_sq":5,"n":["1","1"]}},"chi_v":["3","1"],
            "decomps":[{{"a1_h":3,"a2_h":2,"sw":1,"A":["2","1"]}}]}}"#
    )
    .unwrap();
    let out = enumgeo(&["sw", "mochizuki", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(enumgeo(&["expand", "nosuch"]).status.code(), Some(2));
    assert_eq!(enumgeo(&["sw", "p2", "--c", "4", "--chamber", "plus"]).status.code(), Some(2));
    assert_eq!(enumgeo(&["lattice", "pair", "--u", "F", "--v", "e11"]).status.code(), Some(2));
    assert_eq!(enumgeo(&["sw", "mochizuki", "--file", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(enumgeo(&["--help"]).status.code(), Some(0));
    assert_eq!(enumgeo(&["verify", "sw"]).status.code(), Some(0));
}

#[test]
fn lattice_queries() {
    assert_eq!(stdout(&["lattice", "pair", "--u", "F", "--v", "B"]).trim(), "1");
    assert_eq!(stdout(&["lattice", "pair", "--u", "3e0-e1-e2-e3-e4-e5-e6-e7-e8-e9", "--v=-K"]).trim(), "0");
    assert_eq!(stdout(&["lattice", "genus", "--beta", "B+2F"]).trim(), "2");
    assert_eq!(stdout(&["lattice", "signature"]).trim(), "(1, 9)");
    let classes = stdout(&["lattice", "exceptional", "--k", "6"]);
    assert_eq!(classes.lines().next(), Some("27"));
    assert_eq!(classes.lines().count(), 28);
}

#[test]
fn sw_queries() {
    assert_eq!(stdout(&["sw", "p2", "--c", "3", "--chamber", "plus"]).trim(), "1");
    assert_eq!(stdout(&["sw", "p2", "--c", "-3", "--chamber", "minus"]).trim(), "-1");
    assert_eq!(stdout(&["sw", "closed-form", "--d", "1", "--pg", "3"]).trim(), "-2");
}
