//! Browser bindings. Each exported function is a thin wrapper over a plain
//! Rust function returning JSON text, so the logic is testable natively.

use ruspini::io::{partition_from_json, report_to_json, subforest_to_json};
use ruspini::semantics::{formula_forest, relevant_part};
use ruspini::{analyze, parse_formula, Forest, Logic, Subforest};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest forest the page renders; 299 nodes already fill the screen.
pub const MAX_DRAWN_VARS: usize = 4;

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn check_size(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_DRAWN_VARS {
        return Err(format!("the demo draws forests for 1 to {MAX_DRAWN_VARS} variables"));
    }
    Ok(())
}

fn select<'f>(forest: &'f Forest, kind: &str, t: usize) -> Result<Subforest<'f>, String> {
    match kind {
        "fn" => Ok(forest.full()),
        "rn" => Ok(forest.ruspini()),
        "tn" => Ok(forest.overlap2()),
        "fnt" if t >= 2 => Ok(forest.truncated(t)),
        "fnt" => Err("t must be at least 2".into()),
        _ => Err(format!("unknown forest kind {kind:?}")),
    }
}

/// Analysis report for a partition file, plus the ids of `F(P)` in the
/// full forest for highlighting.
pub fn analyze_json(partition: &str) -> Result<String, String> {
    let p = partition_from_json(partition).map_err(err)?;
    let report = analyze(&p).map_err(err)?;
    let mut value = report_to_json(&report);
    if p.n() <= MAX_DRAWN_VARS {
        let forest = Forest::new(p.n()).map_err(err)?;
        let ids: Vec<usize> = p.forest_in(&forest).map_err(err)?.ids().collect();
        value["forest_ids"] = json!(ids);
    }
    Ok(value.to_string())
}

/// Subforest of the given kind in the node-list format of the forest export.
pub fn forest_json(n: usize, kind: &str, t: usize) -> Result<String, String> {
    check_size(n)?;
    let forest = Forest::new(n).map_err(err)?;
    Ok(subforest_to_json(&select(&forest, kind, t)?).to_string())
}

/// Tautology verdict and the value-1 set of a formula.
pub fn formula_json(n: usize, logic: &str, formula: &str) -> Result<String, String> {
    check_size(n)?;
    let logic: Logic = logic.parse().map_err(err)?;
    let f = parse_formula(formula).map_err(err)?;
    let forest = Forest::new(n).map_err(err)?;
    let ff = formula_forest(&f, &forest).map_err(err)?;
    let relevant = relevant_part(&forest, logic).map_err(err)?;
    Ok(json!({
        "formula": f.to_string(),
        "tautology": relevant.is_subset(&ff),
        "ids": ff.ids().collect::<Vec<_>>(),
        "relevant_ids": relevant.ids().collect::<Vec<_>>(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = analyzePartition)]
pub fn analyze_partition(partition: &str) -> Result<String, JsValue> {
    analyze_json(partition).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = forest)]
pub fn forest(n: usize, kind: &str, t: usize) -> Result<String, JsValue> {
    forest_json(n, kind, t).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = checkFormula)]
pub fn check_formula(n: usize, logic: &str, formula: &str) -> Result<String, JsValue> {
    formula_json(n, logic, formula).map_err(|e| JsValue::from_str(&e))
}
