use ruspini_web::{analyze_json, forest_json, formula_json};
use serde_json::Value;

fn parse(text: String) -> Value {
    serde_json::from_str(&text).unwrap()
}

#[test]
fn analyze_reports_forest_ids() {
    let pair = include_str!("../../../data/complementary_pair.json");
    let v = parse(analyze_json(pair).unwrap());
    assert_eq!(v["is_exact_ruspini"], true);
    assert_eq!(v["forest_ids"].as_array().unwrap().len(), 8);
    assert!(analyze_json("{\"n\": 1}").is_err());
}

#[test]
fn forest_kinds() {
    let count = |kind, t| parse(forest_json(3, kind, t).unwrap())["nodes"].as_array().unwrap().len();
    assert_eq!(count("fn", 0), 51);
    assert_eq!(count("rn", 0), 47);
    assert!(count("tn", 0) < 51);
    assert!(count("fnt", 2) == 8);
    assert!(forest_json(3, "fnt", 1).is_err());
    assert!(forest_json(5, "fn", 0).is_err());
    assert!(forest_json(2, "xx", 0).is_err());
}

#[test]
fn formula_check() {
    let v = parse(formula_json(1, "ginf", "X1 | ~X1").unwrap());
    assert_eq!(v["tautology"], false);
    assert_eq!(v["ids"].as_array().unwrap().len(), 2);
    let v = parse(formula_json(1, "g2", "X1 | ~X1").unwrap());
    assert_eq!(v["tautology"], true);
    assert!(formula_json(1, "ginf", "X1 &").is_err());
}
