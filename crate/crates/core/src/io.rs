//! JSON and DOT interchange.
//!
//! Partition files look like
//! `{"n": 2, "sets": [{"name": "f1", "points": [["0","1"],["1","0"]]}, ...]}`
//! with rationals written as `"p/q"` or integers. A jump is encoded by two
//! points sharing an abscissa.
//!
//! Leaves files are JSON lists of classes `{"zero": [..], "mid": [[..], ..], "one": [..]}`
//! with 1-based variable indices and mid blocks listed from lowest to highest.
//!
//! Forest JSON is `{"n": N, "nodes": [{"id", "label", "zero", "mid", "one",
//! "parent", "depth", "children"}]}` where `parent` is a node id or null.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{AnalysisReport, TheoremVerdicts};
use crate::class::AssignmentClass;
use crate::error::{Error, Result};
use crate::forest::{Forest, Subforest};
use crate::partition::{Partition, PiecewiseLinearFuzzySet};
use crate::truth::{format_rational, parse_rational};

#[derive(Deserialize)]
struct PartitionFile {
    n: usize,
    sets: Vec<SetFile>,
}

#[derive(Deserialize)]
struct SetFile {
    name: String,
    points: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct ClassFile {
    #[serde(default)]
    zero: Vec<usize>,
    #[serde(default)]
    mid: Vec<Vec<usize>>,
    #[serde(default)]
    one: Vec<usize>,
}

pub fn partition_from_json(text: &str) -> Result<Partition> {
    let file: PartitionFile = serde_json::from_str(text)?;
    if file.n != file.sets.len() {
        return Err(Error::InvalidPartition(format!(
            "declared n = {} but {} sets are given",
            file.n,
            file.sets.len()
        )));
    }
    let mut sets = Vec::with_capacity(file.sets.len());
    for set in file.sets {
        let mut points = Vec::with_capacity(set.points.len());
        for (i, (x, y)) in set.points.iter().enumerate() {
            let parse = |s: &str| {
                parse_rational(s).map_err(|_| Error::InvalidFuzzySet {
                    set: set.name.clone(),
                    point: Some(i + 1),
                    reason: format!("invalid rational {s:?}"),
                })
            };
            points.push((parse(x)?, parse(y)?));
        }
        sets.push(PiecewiseLinearFuzzySet::new(set.name, points)?);
    }
    Partition::new(sets)
}

/// Emits a partition with one point per line.
pub fn partition_to_json(partition: &Partition) -> String {
    let quote = |s: String| serde_json::to_string(&s).expect("string serializes");
    let sets: Vec<String> = partition
        .sets()
        .iter()
        .map(|s| {
            let points: Vec<String> = s
                .points()
                .iter()
                .map(|(x, y)| format!("[{}, {}]", quote(format_rational(x)), quote(format_rational(y))))
                .collect();
            format!(
                "    {{\n      \"name\": {},\n      \"points\": [\n        {}\n      ]\n    }}",
                quote(s.name().to_string()),
                points.join(",\n        ")
            )
        })
        .collect();
    format!("{{\n  \"n\": {},\n  \"sets\": [\n{}\n  ]\n}}", partition.n(), sets.join(",\n"))
}

pub fn classes_from_json(text: &str, n: usize) -> Result<Vec<AssignmentClass>> {
    let files: Vec<ClassFile> = serde_json::from_str(text)?;
    files
        .iter()
        .map(|c| AssignmentClass::from_blocks(n, &c.zero, &c.mid, &c.one))
        .collect()
}

fn class_value(class: &AssignmentClass) -> Value {
    json!({
        "label": class.label(),
        "zero": class.zero_block(),
        "mid": class.mid_blocks(),
        "one": class.one_block(),
    })
}

pub fn classes_to_json(classes: &[AssignmentClass]) -> String {
    let list: Vec<ClassFile> = classes
        .iter()
        .map(|c| ClassFile {
            zero: c.zero_block(),
            mid: c.mid_blocks(),
            one: c.one_block(),
        })
        .collect();
    serde_json::to_string_pretty(&list).expect("classes serialize")
}

/// JSON export of a subforest. Ids refer to positions in the ambient forest.
pub fn subforest_to_json(sub: &Subforest<'_>) -> Value {
    let forest = sub.forest();
    let nodes: Vec<Value> = sub
        .ids()
        .map(|id| {
            let class = forest.node(id);
            let mut v = class_value(class);
            let obj = v.as_object_mut().expect("object");
            obj.insert("id".into(), json!(id));
            obj.insert("parent".into(), json!(forest.parent_of(id)));
            obj.insert("depth".into(), json!(class.depth()));
            let kids: Vec<usize> = forest
                .children_of(id)
                .iter()
                .copied()
                .filter(|&c| sub.contains_id(c))
                .collect();
            obj.insert("children".into(), json!(kids));
            v
        })
        .collect();
    json!({ "n": forest.n(), "nodes": nodes })
}

pub fn forest_to_json(forest: &Forest) -> Value {
    subforest_to_json(&forest.full())
}

/// DOT export with one digraph per tree of the subforest.
pub fn subforest_to_dot(sub: &Subforest<'_>) -> String {
    let forest = sub.forest();
    let mut out = String::new();
    for (t, &root) in forest.roots().iter().enumerate() {
        if !sub.contains_id(root) {
            continue;
        }
        out.push_str(&format!("digraph tree{} {{\n", t + 1));
        let mut stack = vec![root];
        let mut edges = Vec::new();
        let mut members = Vec::new();
        while let Some(id) = stack.pop() {
            members.push(id);
            for &c in forest.children_of(id) {
                if sub.contains_id(c) {
                    edges.push((id, c));
                    stack.push(c);
                }
            }
        }
        members.sort_unstable();
        edges.sort_unstable();
        for id in members {
            out.push_str(&format!("  n{id} [label=\"{}\"];\n", forest.node(id).label()));
        }
        for (a, b) in edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
    }
    out
}

fn verdicts_value(v: &TheoremVerdicts) -> Value {
    json!({
        "direct": v.direct,
        "forest": v.forest,
        "provable": v.provable,
        "consistent": v.consistent(),
    })
}

pub fn report_to_json(report: &AnalysisReport) -> Value {
    json!({
        "n": report.n,
        "realized_classes": report.realized.iter().map(class_value).collect::<Vec<_>>(),
        "leaves": report.leaves.iter().map(class_value).collect::<Vec<_>>(),
        "forest_size": report.forest_size,
        "is_exact_ruspini": report.is_exact_ruspini,
        "is_weak_ruspini": report.is_weak_ruspini,
        "is_2_overlapping": report.is_2_overlapping,
        "alpha_p": report.alpha_p.to_string(),
        "weak_ruspini": verdicts_value(&report.weak_ruspini),
        "overlap": verdicts_value(&report.overlap),
        "overlap_weak_ruspini": verdicts_value(&report.overlap_weak_ruspini),
        "g4_ginf_agree": report.g4_ginf_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = r#"{"n": 2, "sets": [
        {"name": "f", "points": [["0","1"],["1","0"]]},
        {"name": "g", "points": [["0","0"],["1","1"]]}]}"#;

    #[test]
    fn partition_round_trip() {
        let p = partition_from_json(PAIR).unwrap();
        let again = partition_from_json(&partition_to_json(&p)).unwrap();
        assert_eq!(p.sets(), again.sets());
    }

    #[test]
    fn errors_name_set_and_point() {
        let bad = PAIR.replace(r#"["1","1"]"#, r#"["1","3/2"]"#);
        let msg = partition_from_json(&bad).unwrap_err().to_string();
        assert!(msg.contains("\"g\"") && msg.contains("point 2"), "{msg}");
        let bad = PAIR.replace(r#"["1","0"]"#, r#"["1","x"]"#);
        let msg = partition_from_json(&bad).unwrap_err().to_string();
        assert!(msg.contains("\"f\"") && msg.contains("point 2"), "{msg}");
        let bad = PAIR.replace(r#""n": 2"#, r#""n": 3"#);
        assert!(partition_from_json(&bad).is_err());
    }

    #[test]
    fn classes_round_trip() {
        let text = r#"[{"zero":[1],"mid":[[2]],"one":[3]}, {"one":[1,2,3]}]"#;
        let classes = classes_from_json(text, 3).unwrap();
        assert_eq!(classes[0].label(), "0=X1<X2<X3=1");
        assert_eq!(classes_from_json(&classes_to_json(&classes), 3).unwrap(), classes);
    }

    #[test]
    fn dot_has_one_graph_per_tree() {
        let forest = Forest::new(2).unwrap();
        let dot = subforest_to_dot(&forest.full());
        assert_eq!(dot.matches("digraph").count(), 4);
        assert!(dot.contains("label=\"0=X1<X2<1\""));
        assert_eq!(dot.matches("->").count(), forest.len() - 4);
        let json = forest_to_json(&forest);
        assert_eq!(json["nodes"].as_array().unwrap().len(), 11);
    }
}
