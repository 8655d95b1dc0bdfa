use std::path::PathBuf;

use ruspini::io::{partition_from_json, partition_to_json};
use ruspini_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_string_lossy().into_owned()
}

fn ruspini(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ruspini").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = ruspini(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn counts_are_exact() {
    assert_eq!(ok(&["count", "--n", "3", "--kind", "weak-ruspini"]), "33554431\n");
    assert_eq!(ok(&["count", "--n", "5", "--kind", "leaves"]), "1082\n");
    assert_eq!(ok(&["count", "--n", "3", "--kind", "overlap2"]), "4095\n");
    // 2^149 - 1, far beyond machine words
    let big = ok(&["count", "--n", "4", "--kind", "weak-ruspini"]);
    assert_eq!(big.trim(), "713623846352979940529142984724747568191373311");
    let (code, _, err) = ruspini(&["count", "--n", "0", "--kind", "leaves"]);
    assert_eq!(code, EXIT_DOMAIN, "{err}");
}

#[test]
fn lin_axioms_separate_finite_logics() {
    let lin3 = "X1 | (X1 -> X2) | ((X1 & X2) -> X3)";
    assert_eq!(ok(&["taut", "--n", "3", "--logic", "g3", lin3, "--oracle"]), "tautology\n");
    assert_eq!(ok(&["taut", "--n", "3", "--logic", "g4", lin3, "--oracle"]), "not a tautology\n");
    assert_eq!(ok(&["taut", "--n", "3", "--logic", "ginf", lin3]), "not a tautology\n");
    let (code, _, _) = ruspini(&["taut", "--n", "3", "--logic", "ginf", lin3, "--oracle"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn analyze_complementary_pair() {
    let text = ok(&["analyze", &data("complementary_pair.json")]);
    assert!(text.contains("exact Ruspini: true"));
    assert!(text.contains("weak Ruspini: true"));
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["analyze", &data("complementary_pair.json"), "--json"])).unwrap();
    assert_eq!(json["is_exact_ruspini"], true);
    assert_eq!(json["is_weak_ruspini"], true);
    assert_eq!(json["forest_size"], 8);
}

#[test]
fn analyze_negative_instance() {
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["analyze", &data("not_weak_ruspini.json"), "--json"])).unwrap();
    assert_eq!(json["is_weak_ruspini"], false);
    assert_eq!(json["weak_ruspini"]["consistent"], true);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["analyze", &data("wide_overlap.json"), "--json"])).unwrap();
    assert_eq!(json["is_2_overlapping"], false);
    assert_eq!(json["overlap"]["consistent"], true);
}

#[test]
fn example_partitions_round_trip() {
    for entry in std::fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        if text.trim_start().starts_with('[') {
            continue;
        }
        let p = partition_from_json(&text).unwrap();
        let again = partition_from_json(&partition_to_json(&p)).unwrap();
        assert_eq!(p, again, "{}", path.display());
    }
}

#[test]
fn synthesize_writes_an_exact_partition() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let out = out.to_str().unwrap();
    ok(&["synthesize", &data("mixed_leaves_3.json"), "--n", "3", "-o", out]);
    let report = ok(&["analyze", out]);
    assert!(report.contains("exact Ruspini: true"));
    assert!(report.contains("F(P): 7 nodes, 4 leaves"));
    // Boolean leaves force a jump in every set
    let steps = ok(&["synthesize", &data("boolean_leaves_3.json"), "--n", "3"]);
    assert_eq!(steps, std::fs::read_to_string(data("boolean_steps_3.json")).unwrap());
    let p = partition_from_json(&steps).unwrap();
    assert!(p.sets().iter().all(|s| !s.discontinuities().is_empty()));
}

#[test]
fn forest_exports() {
    let dot = ok(&["forest", "--n", "2", "--format", "dot"]);
    assert_eq!(dot.matches("digraph").count(), 4);
    assert!(dot.contains("[label=\"0=X1<X2<1\"]"));
    let json: serde_json::Value = serde_json::from_str(&ok(&["forest", "--n", "3", "--kind", "rn", "--format", "json"])).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 51 - 1 - 3);
    let g3: serde_json::Value =
        serde_json::from_str(&ok(&["forest", "--n", "3", "--kind", "fnt", "--t", "3", "--format", "json"])).unwrap();
    assert!(g3["nodes"].as_array().unwrap().iter().all(|n| n["depth"].as_u64().unwrap() <= 2));
    let (code, _, _) = ruspini(&["forest", "--n", "3", "--kind", "fnt"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = ruspini(&["forest", "--n", "9"]);
    assert_eq!(code, EXIT_DOMAIN);
}

#[test]
fn classify_axioms_equiv() {
    let out = ok(&["classify", "--values", "0,1/2,1/3"]);
    assert!(out.starts_with("0=X1<X3<X2<1\n"));
    assert_eq!(ok(&["axioms", "--kind", "tau", "--n", "3"]), "~(X1 & X2 & X3)\n");
    assert_eq!(ok(&["axioms", "--kind", "rho", "--n", "2"]), "~~X1 & ~~X2 | X1 & ~X2 | X2 & ~X1\n");
    assert_eq!(ok(&["equiv", "--n", "1", "~~~X1", "~X1"]), "equivalent\n");
    assert_eq!(ok(&["equiv", "--n", "1", "~~X1", "X1"]), "not equivalent\n");
    assert_eq!(ok(&["equiv", "--n", "1", "--logic", "g2", "~~X1", "X1"]), "equivalent\n");
    let axiom = ok(&["axiomatize", &data("complementary_pair.json")]);
    assert_eq!(ok(&["equiv", "--n", "2", axiom.trim(), "~~X1 & ~~X2 | X1 & ~X2 | X2 & ~X1"]), "equivalent\n");
}

#[test]
fn errors_and_usage() {
    let (code, _, err) = ruspini(&["taut", "--n", "2", "X1 & (X2"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("position"), "{err}");
    let (code, _, err) = ruspini(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
    let (code, _, err) = ruspini(&["analyze", "/nonexistent.json"]);
    assert_eq!(code, EXIT_DOMAIN, "{err}");
    let (code, out, _) = ruspini(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("synthesize"));
}

#[test]
fn output_is_deterministic() {
    let args = ["analyze", &data("triangular_4.json"), "--json"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["forest", "--n", "4", "--format", "json"];
    assert_eq!(ok(&args), ok(&args));
}
