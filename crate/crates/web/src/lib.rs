//! Browser bindings. Every export takes plain strings and returns JSON text,
//! which keeps the JavaScript side free of generated glue types.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use nclag::algebra::{Basis, NSymBasis};
use nclag::lagrange::{named_series, tables};
use nclag::noncrossing::tree::{rebuild_trace, tree_phi, BinaryTree};
use nclag::noncrossing::{kreweras, NoncrossingPartition};
use nclag::Composition;

fn fail(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// Degree-`degree` component of a named series in a basis, as text.
#[wasm_bindgen]
pub fn expand(series: &str, degree: usize, basis: &str) -> Result<String, JsError> {
    let basis =
        NSymBasis::from_symbol(basis).ok_or_else(|| fail(format!("unknown basis {basis}")))?;
    // the demo stays well below the table bound
    let max = tables().max_degree().min(7);
    if degree > max {
        return Err(fail(format!("degree {degree} is above {max} in the demo")));
    }
    let s = named_series(series, degree).map_err(fail)?;
    let x = s.component(degree).convert(basis).map_err(fail)?;
    Ok(json!({"text": x.to_string(), "terms": x.len()}).to_string())
}

fn blocks(p: &NoncrossingPartition) -> Value {
    json!(p.blocks())
}

/// The Kreweras complement, with blocks for drawing arc diagrams.
#[wasm_bindgen]
pub fn kreweras_complement(text: &str) -> Result<String, JsError> {
    let p: NoncrossingPartition = text.trim().parse().map_err(fail)?;
    let k = kreweras(&p);
    Ok(json!({
        "n": p.size(),
        "partition": p.to_string(),
        "blocks": blocks(&p),
        "type": p.ordered_type().to_string(),
        "complement": k.to_string(),
        "complement_blocks": blocks(&k),
        "complement_type": k.ordered_type().to_string(),
        "permutation": k.to_permutation().to_string(),
    })
    .to_string())
}

fn tree_json(t: &BinaryTree) -> Value {
    let nodes: Vec<Value> = t
        .layout()
        .into_iter()
        .map(|(label, depth)| json!({"label": label, "depth": depth, "parent": t.parent(label)}))
        .collect();
    let (left, right) = tree_phi(t);
    json!({
        "text": t.to_string(),
        "nodes": nodes,
        "left_partition": left.to_string(),
        "right_partition": right.to_string(),
    })
}

/// Rebuilds the tree with the given branch lengths and returns every step.
#[wasm_bindgen]
pub fn rebuild(left: &str, right: &str) -> Result<String, JsError> {
    let i: Composition = left.trim().parse().map_err(fail)?;
    let j: Composition = right.trim().parse().map_err(fail)?;
    if i.weight() > 40 || j.weight() > 40 {
        return Err(fail("keep trees under 40 nodes"));
    }
    let (t, steps) = rebuild_trace(&i, &j).map_err(fail)?;
    Ok(json!({"tree": tree_json(&t), "steps": steps}).to_string())
}
