use std::process::{Command, Output};

use serde_json::Value;

fn vc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vc"))
        .args(args)
        .env_remove("VC_MAX_SEARCH")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_subset_passes() {
    let out = vc(&["verify", "--only", "chow,fm"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["overall"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks
        .iter()
        .all(|c| c["pass"] == true && ["chow", "fm"].contains(&c["group"].as_str().unwrap())));
}

#[test]
fn verify_is_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let a = strip(json(&vc(&["verify", "--only", "chow,involution,components"])));
    let b = strip(json(&vc(&["verify", "--only", "chow,involution,components"])));
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--only", "nope"],
        vec!["fm-count", "18"],
        vec!["component", "20", "26", "9"],
        vec!["cremona-image", "3,4;5,12"],
        vec!["cremona-image", "3,1,1;1,7,0;1,0,9"],
        vec!["bigger-disc", "20"],
        vec!["no-such-command"],
    ] {
        let out = vc(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn fm_count_of_twenty() {
    let v = json(&vc(&["fm-count", "20"]));
    assert_eq!(v["d"], 20);
    assert_eq!(v["m"], 2);
    assert_eq!(v["partner_count"], 2);
}

#[test]
fn component_20_26_0() {
    let v = json(&vc(&["component", "20", "26", "0"]));
    assert_eq!(v["disc"], 173);
    assert_eq!(v["gram"], serde_json::json!([[3, 1, 1], [1, 7, 0], [1, 0, 9]]));
    assert_eq!(v["norm2_witness"], Value::Null);
    let neg = json(&vc(&["component", "20", "26", "-4"]));
    assert_eq!(neg["tau"], -4);
}

#[test]
fn cremona_image_literal_and_json() {
    let a = json(&vc(&["cremona-image", "3,4,1;4,12,1;1,1,9"]));
    let b = json(&vc(&["cremona-image", "[[3,4,1],[4,12,1],[1,1,9]]"]));
    assert_eq!(a, b);
    assert_eq!(
        a["image"]["gram"],
        serde_json::json!([[3, 4, 3], [4, 12, 1], [3, 1, 13]])
    );
    let r = json(&vc(&["cremona-image", "--reframe", "3,1,1;1,7,0;1,0,9"]));
    assert_eq!(r["image"], a["image"]);
}

#[test]
fn isometric_reports_witness() {
    let v = json(&vc(&["isometric", "3,1,1;1,7,0;1,0,9", "3,4,1;4,12,1;1,1,9"]));
    assert_eq!(v["isometric"], true);
    assert!(v["witness"].is_array());
    let v = json(&vc(&["isometric", "2,1;1,2", "2,0;0,2"]));
    assert_eq!(v["isometric"], false);
}

#[test]
fn search_bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_vc"))
        .args(["bigger-disc", "26"])
        .env("VC_MAX_SEARCH", "30")
        .output()
        .unwrap();
    let v = json(&out);
    assert_eq!(v["clause2"]["status"], "inconclusive_below_bound");
    assert_eq!(v["clause2"]["bound"], 30);
    let v = json(&vc(&["bigger-disc", "26"]));
    assert_eq!(v["clause2"]["status"], "witness_found");
    assert_eq!(v["clause2"]["d_prime"], 74);
}

#[test]
fn segre_and_survey() {
    let v = json(&vc(&["segre"]));
    assert_eq!(v["segre_class"]["coeffs"], serde_json::json!([1, -9, 51]));
    let rows = json(&vc(&["survey-c20-c14"]));
    assert_eq!(rows.as_array().unwrap().len(), 9);
}
