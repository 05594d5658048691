use std::process::{Command, Output};

use serde_json::Value;
use tilegroups::artin::Presentation;
use tilegroups::tiles::TileExpr;
use tilegroups::BraidWord;

const STAR: &str = "(F + ((D + D) ; P)) ; P ; ((1_1 + D) ; P)";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilegroups")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn braid_trivial_on_a_relator() {
    let o = run(&["braid", "trivial", "b3: s1 s2 s1 s2^-1 s1^-1 s2^-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    assert_eq!(json(&["braid", "trivial", "b3: s1 s2"]), Value::Bool(false));
}

#[test]
fn braid_outputs_round_trip() {
    for args in [
        vec!["braid", "reduce", "b4: s1 s2 s2^-1 s3"],
        vec!["braid", "mirror", "b4: s1 s2^-1 s3"],
        vec!["braid", "cable", "b2: s1", "b2: s1", "b2: e"],
    ] {
        let v = json(&args);
        let w: BraidWord = v.as_str().unwrap().parse().unwrap();
        assert_eq!(stdout(&run(&args)).trim(), w.to_string());
    }
    assert_eq!(json(&["braid", "reduce", "b3: s1 s2 s1 s2^-1 s1^-1 s2^-1"]), Value::from("b3: e"));
    assert_eq!(json(&["braid", "equal", "b3: s1 s2 s1", "b3: s2 s1 s2"]), Value::Bool(true));
}

#[test]
fn tile_group_is_presentation_json() {
    let v = json(&["tile", "group", "(F+F);P"]);
    let p: Presentation = serde_json::from_value(v).unwrap();
    assert_eq!(p.generator_count(), 4);
    assert_eq!(p.relators().len(), 6);
}

#[test]
fn tile_outputs() {
    let nf = json(&["tile", "nf", "(F ; F) + 1_2 ; (1_1 + P) + D"]);
    let t: TileExpr = nf.as_str().unwrap().parse().unwrap();
    assert_eq!((t.source(), t.target()), (3, 3));
    let tree = json(&["tile", "tree", STAR]);
    assert_eq!(tree["points"], 5);
    assert_eq!(tree["edges"], serde_json::json!([[1, 2], [2, 4], [3, 4], [4, 5]]));
    let mcg = json(&["tile", "mcg", STAR]);
    assert_eq!(mcg["strands"], 5);
}

#[test]
fn hom_commands() {
    let theta = json(&["hom", "theta", STAR, "g2"]);
    assert_eq!(theta, Value::from("b5: s3 s2 s3^-1"));
    let phi = json(&["hom", "phi", "b2: s1"]);
    assert_eq!(phi, serde_json::json!([["1", "0"], ["1", "1"]]));
    let d = json(&["hom", "discrepancy", "b2: s1", "b2: e", "b2: e"]);
    assert_eq!(d["equal"], false);
    assert_ne!(d["a"], d["b"]);
    let p1 = json(&["hom", "phi1", "b2: s1 s1"]);
    assert_eq!(p1, serde_json::json!([["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]));
    let og = json(&["hom", "omega-gamma", "b2: e", "b2: s1", "b2: e"]);
    assert_eq!(og[0], serde_json::json!(["1", "0", "0", "0"]));
    let pt = json(&["hom", "phitile", "(F+F);P", "-1,2"]);
    assert_eq!(pt.as_array().unwrap().len(), 4);
}

#[test]
fn artin_commands() {
    let o = run(&["artin", "certify", STAR, "-3 2 3 4 -3 -2 3 -4"]);
    assert_eq!(stdout(&o).trim(), "nontrivial");
    assert_eq!(json(&["artin", "certify", STAR, "g1 g3 g1^-1 g3^-1"]), Value::from("inconclusive"));
    let a = json(&["artin", "abelianize", "--strands", "5"]);
    assert_eq!(a["free_rank"], 1);
    let a = json(&["artin", "abelianize", STAR]);
    assert_eq!(a["free_rank"], 1);
    let c = json(&["artin", "coxeter", STAR, "g1 g1"]);
    assert_eq!(c[0], serde_json::json!(["1", "0", "0", "0"]));
}

#[test]
fn usage_errors_exit_two_with_position() {
    let o = run(&["braid", "trivial", "b3: s1 s7"]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("s7") && e.contains("byte"), "{e}");

    let o = run(&["tile", "nf", "F ; P"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains('1') && stderr(&o).contains('2'), "{}", stderr(&o));

    let o = run(&["braid", "cable", "b3: s1", "b2: e"]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains('3') && e.contains('1'), "{e}");

    assert_eq!(run(&["braid", "frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

fn strip_times(mut v: Value) -> Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("wall_ms");
    }
    v
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let o = run(&["verify", "paper", "--quiet"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).trim(), "overall: pass");
    let a = strip_times(json(&["verify", "paper", "--seed", "3"]));
    let b = strip_times(json(&["verify", "paper", "--seed", "3"]));
    assert_eq!(a, b);
    assert_eq!(a["overall"], "pass");
    assert_eq!(a["suite"], "paper");
}

#[test]
fn verify_random_passes() {
    let o = run(&["verify", "random", "--seed", "5", "--max-len", "10", "--genus", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: pass"));
}
