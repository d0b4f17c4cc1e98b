//! WebAssembly bindings for the browser demo. Every export returns a JSON
//! string; the `*_json` functions underneath are plain Rust.

use std::collections::BTreeSet;

use ribbonrep::quotient::{aligned_boundaries, interlace};
use ribbonrep::ribbons::ribbon_peels;
use ribbonrep::*;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

/// Boundary word, `r`-core, removable `r`-ribbons and, when the core is
/// empty, the `r`-quotient and `r`-sign.
pub fn explore_json(lambda: &str, r: usize) -> Result<Value> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let lambda: Partition = lambda.parse()?;
    let word = boundary_sequence(&lambda, None)?;
    let outer: BTreeSet<(usize, usize)> = lambda.cells().collect();
    let ribbons: Vec<Value> = ribbon_peels(&lambda, r)
        .into_iter()
        .map(|(q, smaller, height)| {
            let inner: BTreeSet<(usize, usize)> = smaller.cells().collect();
            let cells: Vec<(usize, usize)> = outer.difference(&inner).copied().collect();
            json!({ "q": q, "height": height, "result": parts(&smaller), "cells": cells })
        })
        .collect();
    let core = r_core(&lambda, r)?;
    let mut out = json!({
        "lambda": parts(&lambda),
        "text": lambda.to_string(),
        "size": lambda.size(),
        "word": word.display_with_anchor(),
        "r": r,
        "core": parts(&core),
        "ribbons": ribbons,
        "dimension": dimension(&lambda).to_string(),
    });
    if core.is_empty() {
        let t = r_quotient(&lambda, r)?;
        out["quotient"] = json!(t.to_string());
        out["components"] = t.components().iter().map(parts).collect();
        out["sign"] = serde_json::to_value(sign_report(&lambda, r)?).expect("report serializes");
    }
    Ok(out)
}

/// `φ_r` of an `r`-partite partition, with the aligned component words and
/// their interlacing.
pub fn compose_json(quotient: &str) -> Result<Value> {
    let t: RPartitePartition = quotient.parse()?;
    let words = aligned_boundaries(&t);
    let merged = interlace(&words);
    let lambda = phi_r(&t);
    Ok(json!({
        "quotient": t.to_string(),
        "r": t.arity(),
        "components": t.components().iter().map(parts).collect::<Vec<_>>(),
        "words": words.iter().map(|w| w.display_with_anchor()).collect::<Vec<_>>(),
        "interlaced": merged.display_with_anchor(),
        "lambda": parts(&lambda),
        "text": lambda.to_string(),
    }))
}

/// The character table of `G ≀ S_n`, refused above 400 rows.
pub fn table_json(group: &str, n: usize) -> Result<Value> {
    let group: AbelianGroupSpec = group.parse()?;
    let rows = quotient::rpartite_partitions(group.order(), n).len();
    if rows > 400 {
        return Err(Error::InvalidArgument(format!(
            "{rows} characters is too many to show"
        )));
    }
    Ok(character_table(&group, n).to_json())
}

fn export(result: Result<Value>) -> std::result::Result<String, JsError> {
    result
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn explore(lambda: &str, r: usize) -> std::result::Result<String, JsError> {
    export(explore_json(lambda, r))
}

#[wasm_bindgen]
pub fn compose(quotient: &str) -> std::result::Result<String, JsError> {
    export(compose_json(quotient))
}

#[wasm_bindgen]
pub fn table(group: &str, n: usize) -> std::result::Result<String, JsError> {
    export(table_json(group, n))
}
