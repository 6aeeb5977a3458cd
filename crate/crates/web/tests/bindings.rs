use serde_json::{json, Value};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("bindings return JSON")
}

#[test]
fn component_explorer() {
    let v = parse(vcubic_web::component(20, 26, 0));
    assert_eq!(
        v["component"]["source"]["gram"],
        json!([[3, 1, 1], [1, 7, 0], [1, 0, 9]])
    );
    assert_eq!(
        v["component"]["marked_source"]["gram"],
        json!([[3, 4, 1], [4, 12, 1], [1, 1, 9]])
    );
    assert_eq!(
        v["component"]["image"]["gram"],
        json!([[3, 4, 3], [4, 12, 1], [3, 1, 13]])
    );
    let hits: Vec<i64> = v["image_components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["d2"].as_i64().unwrap())
        .collect();
    assert_eq!(hits, vec![30, 32, 68, 74]);
}

#[test]
fn cremona_image() {
    let v = parse(vcubic_web::cremona("3,4,1;4,12,1;1,1,9", false));
    assert_eq!(v["image"]["gram"], json!([[3, 4, 3], [4, 12, 1], [3, 1, 13]]));
    assert_eq!(v["labelling_form"], json!({ "a": 20, "b": -18, "c": 30 }));
    let r = parse(vcubic_web::cremona("[[3,1,1],[1,7,0],[1,0,9]]", true));
    assert_eq!(r["image"], v["image"]);
}

#[test]
fn fm_partner_count() {
    let v = parse(vcubic_web::fm_partners(20));
    assert_eq!(v["partner_count"], 2);
}

#[test]
fn errors_are_reported_as_json() {
    for s in [
        vcubic_web::fm_partners(18),
        vcubic_web::component(20, 26, 9),
        vcubic_web::cremona("3,4;5,12", false),
    ] {
        assert!(parse(s)["error"].is_string());
    }
}
