//! End-to-end runs of the `cubecomp` binary.

use cubecomp::forms::{equivalent_forms, QuadForm};
use cubecomp::{json, BaseField};
use serde_json::{json, Value};
use std::io::Write;
use std::process::{Command, Stdio};

fn cubecomp(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cubecomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("bad JSON {s:?}: {e}"))
}

fn int(n: i64) -> Value {
    json!({"u": n.to_string(), "v": "0"})
}

#[test]
fn forms_of_sum_of_squares_cube() {
    let (code, out, _) = cubecomp(&["forms-of", "--field", "Q", "--disc", "-4", r#"{"entries":[0,1,1,0,1,0,0,-1]}"#], "");
    assert_eq!(code, 0);
    let one = json!({"a": int(1), "b": int(0), "c": int(1)});
    assert_eq!(parse(&out), json!({"forms": [one, one, one]}));
}

#[test]
fn classgroup_of_minus_23_has_order_3() {
    let (code, out, _) = cubecomp(&["classgroup", "--field", "Q", "--disc", "-23"], "");
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["h_composition"], 3);
    assert_eq!(v["h_naive"], 3);
    assert_eq!(v["is_group"], true);
}

#[test]
fn verify_passes_with_seed_42() {
    let (code, out, _) = cubecomp(&["verify", "--seed", "42"], "");
    assert_eq!(code, 0, "{out}");
    let lines: Vec<Value> = out.lines().map(parse).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[..9].iter().all(|l| l["passed"] == true));
    assert_eq!(lines[9]["passed"], true);
}

#[test]
fn composition_pipeline_at_minus_20() {
    // Q1 of this cube is the non-principal class 2x^2 + 2xy + 3y^2
    let a = r#"{"entries":[1,0,0,-2,0,1,3,2]}"#;
    let (code, disc, _) = cubecomp(&["disc", a], "");
    assert_eq!((code, parse(&disc)), (0, int(-20)));

    let (code, sq, _) = cubecomp(&["compose-cubes", a, a], "");
    assert_eq!(code, 0);
    let (_, forms, _) = cubecomp(&["forms-of"], &sq);
    for f in parse(&forms)["forms"].as_array().unwrap() {
        let (code, ideal, _) = cubecomp(&["psi", &f.to_string()], "");
        assert_eq!(code, 0);
        let (code, p, _) = cubecomp(&["--disc", "-20", "is-principal", &ideal], "");
        assert_eq!(code, 0);
        assert_eq!(parse(&p)["principal"], true);
    }

    let (_, t, _) = cubecomp(&["psi-prime", a], "");
    let (code, back, _) = cubecomp(&["--disc", "-20", "phi-prime"], &t);
    assert_eq!(code, 0);
    let (_, f1, _) = cubecomp(&["forms-of", a], "");
    let (_, f2, _) = cubecomp(&["forms-of", &back], "");
    let forms = |s: &str| -> Vec<QuadForm> {
        parse(s)["forms"].as_array().unwrap().iter().map(|f| json::form_from_json(BaseField::Rational, f).unwrap()).collect()
    };
    for (p, q) in forms(&f1).iter().zip(forms(&f2).iter()) {
        assert!(equivalent_forms(p, q).unwrap(), "{p} vs {q}");
    }
}

#[test]
fn ideals_over_sqrt2() {
    let disc = r#"{"u":"-1","v":"2"}"#;
    let (code, id, err) = cubecomp(&["--field", "Q-sqrt2", "--disc", disc, "identity-cube"], "");
    assert_eq!(code, 0, "{err}");
    let (code, t, _) = cubecomp(&["--field", "Q-sqrt2", "psi-prime", &id], "");
    assert_eq!(code, 0);
    let ideals = parse(&t)["ideals"].clone();
    let i1 = ideals[0].to_string();
    let (code, prod, _) = cubecomp(&["--field", "Q-sqrt2", "--disc", disc, "mul-ideals", &i1, &i1], "");
    assert_eq!(code, 0);
    assert_eq!(parse(&prod)["eps"], json!([1, 1]));
    let (code, out, _) = cubecomp(&["--field", "Q-sqrt2", "--disc", disc, "is-principal", &i1], "");
    assert_eq!(code, 1);
    assert_eq!(parse(&out)["error"], "UnsupportedBaseField");
}

#[test]
fn exit_codes_and_error_payloads() {
    let (code, out, _) = cubecomp(&["reduce-cube", r#"{"entries":[0,0,0,0,0,0,0,0]}"#], "");
    assert_eq!(code, 1);
    let v = parse(&out);
    assert_eq!(v["error"], "NotProjective");
    assert!(v["message"].is_string());
    assert!(v["input"].is_array());

    let (code, out, _) = cubecomp(&["psi", r#"{"a":1,"b":0,"c":-2}"#], "");
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = cubecomp(&["--disc", "4", "identity-cube"], "");
    assert_eq!(code, 1, "{out}");

    assert_eq!(cubecomp(&["frobnicate"], "").0, 2);
    assert_eq!(cubecomp(&["--field", "Q-sqrt3", "disc", "{}"], "").0, 2);
    assert_eq!(cubecomp(&["disc", "{\"a\":1"], "").0, 2);
    assert_eq!(cubecomp(&["compose-cubes", r#"{"entries":[1,0,0,1,0,1,1,0]}"#], "").0, 2);
    assert_eq!(cubecomp(&["--help"], "").0, 0);
}

#[test]
fn pretty_output() {
    let (code, out, _) = cubecomp(&["--format", "pretty", "--disc", "-23", "classgroup"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("D = -23, order 3"));
    let (code, out, _) = cubecomp(&["--format", "pretty", "verify"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 9);
    let (code, _, err) = cubecomp(&["--format", "pretty", "reduce-cube", r#"{"entries":[0,0,0,0,0,0,0,0]}"#], "");
    assert_eq!(code, 1);
    assert!(err.contains("NotProjective"));
}

#[test]
fn act_and_invert() {
    let a = r#"{"entries":[1,0,0,-2,0,1,3,2]}"#;
    let g = r#"{"t1":[[1,1],[0,1]],"t3":[[0,-1],[1,0]]}"#;
    let (code, moved, _) = cubecomp(&["act", a, g], "");
    assert_eq!(code, 0);
    let (_, d, _) = cubecomp(&["disc", &moved], "");
    assert_eq!(parse(&d), int(-20));
    let (code, inv, _) = cubecomp(&["invert-cube", a], "");
    assert_eq!(code, 0);
    let (code, prod, _) = cubecomp(&["compose-cubes", a, &inv], "");
    assert_eq!(code, 0);
    let (_, forms, _) = cubecomp(&["forms-of", &prod], "");
    for f in parse(&forms)["forms"].as_array().unwrap() {
        let (_, i, _) = cubecomp(&["psi", &f.to_string()], "");
        let (_, p, _) = cubecomp(&["--disc", "-20", "is-principal", &i], "");
        assert_eq!(parse(&p)["principal"], true);
    }
}

#[test]
fn output_is_byte_stable() {
    let a = r#"{"entries":[1,0,0,-2,0,1,3,2]}"#;
    for args in [vec!["verify", "--seed", "5"], vec!["psi-prime", a], vec!["--disc", "-84", "classgroup"], vec!["compose-cubes", a, a]] {
        let first = cubecomp(&args, "");
        assert_eq!(first, cubecomp(&args, ""), "{args:?}");
    }
}
