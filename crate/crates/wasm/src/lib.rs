//! Browser bindings. Every export returns a JSON string.

use serde_json::{json, Value};
use sumrank::codes::encode;
use sumrank::field::{make_field, FieldDescriptor, FieldKind};
use sumrank::metrics::{self, BlockVector, SearchOptions};
use sumrank::spec_file::{AnyCode, CodeSpecFile};
use sumrank::{geometry, Centralizer, Field};
use wasm_bindgen::prelude::*;

/// Keeps the page responsive: GF(9) k = 4 is 6560 messages.
const DEMO_BUDGET: u64 = 200_000;

fn finite(p: u32, s: usize, r: usize, gamma: Option<String>) -> Result<sumrank::GaloisField, String> {
    match make_field(FieldKind::Finite, p, s, r, gamma.as_deref().filter(|g| !g.is_empty()), false) {
        Ok(FieldDescriptor::Finite(f)) => Ok(f),
        Ok(_) => unreachable!(),
        Err(e) => Err(e.to_string()),
    }
}

pub fn field_classes_json(p: u32, s: usize, r: usize, gamma: Option<String>) -> Result<String, String> {
    let f = finite(p, s, r, gamma)?;
    if f.order() > 729 {
        return Err("demo is limited to fields with at most 729 elements".into());
    }
    let classes = geometry::conjugacy_classes(&f).map_err(|e| e.to_string())?;
    let all = f.elements().unwrap_or_default();
    let mut class_of = vec![0usize; all.len()];
    for (i, c) in classes.iter().enumerate() {
        for m in c.members.iter().flatten() {
            class_of[f.index_of(m) as usize] = i;
        }
    }
    let cells: Vec<Value> = all
        .iter()
        .zip(&class_of)
        .map(|(a, &c)| json!({ "elem": f.format_elem(a), "class": c }))
        .collect();
    let summary: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "rep": f.format_elem(&c.rep),
                "size": c.len(),
                "centralizer": if c.centralizer == Centralizer::Whole { "whole".to_string() } else { format!("GF({})", f.q()) },
            })
        })
        .collect();
    Ok(json!({ "q": f.q(), "m": f.m(), "order": f.order(), "cells": cells, "classes": summary }).to_string())
}

pub fn linearized_code_json(spec_toml: &str, message: &str) -> Result<String, String> {
    let code = CodeSpecFile::load(spec_toml).map_err(|e| e.to_string())?;
    let AnyCode::Finite(c) = code else {
        return Err("the demo verifies finite fields only".into());
    };
    let f = c.field();
    let fmt = |v: &[sumrank::field::GfElem]| v.iter().map(|x| f.format_elem(x)).collect::<Vec<_>>();
    let rows: Vec<Vec<String>> = c.generator.rows.iter().map(|r| fmt(r)).collect();
    let opts = SearchOptions {
        budget: DEMO_BUDGET,
        workers: Some(1),
    };
    let verify = metrics::verify_optimal(&c, opts).map_err(|e| e.to_string())?;
    let mut out = json!({
        "n": c.n(),
        "k": c.k(),
        "lengths": c.spec.lengths(),
        "generator": rows,
        "skew_points": fmt(&c.skew_points),
        "verify": verify,
    });
    if !message.trim().is_empty() {
        let m = message
            .split(',')
            .map(|x| f.parse_elem(x.trim()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let cw = encode(f, &c.generator, &m).map_err(|e| e.to_string())?;
        out["codeword"] = json!(cw.blocks.iter().map(|b| fmt(b)).collect::<Vec<_>>());
        out["codeword_sum_rank"] = json!(metrics::sum_rank_weight(f, &cw));
        out["codeword_hamming"] = json!(metrics::hamming_weight(f, &cw.flat()));
    }
    Ok(out.to_string())
}

/// `blocks` is `|`-separated, entries `,`-separated; every block is taken
/// over the fixed subfield.
pub fn sum_rank_weight_json(p: u32, s: usize, r: usize, blocks: &str) -> Result<String, String> {
    let f = finite(p, s, r, None)?;
    let parsed = blocks
        .split('|')
        .map(|b| {
            b.split(',')
                .map(|x| x.trim())
                .filter(|x| !x.is_empty())
                .map(|x| f.parse_elem(x))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let v = BlockVector {
        centralizers: vec![Centralizer::Fixed; parsed.len()],
        blocks: parsed,
    };
    let per_block: Vec<usize> = v
        .blocks
        .iter()
        .map(|b| metrics::rank_weight(&f, Centralizer::Fixed, b))
        .collect();
    Ok(json!({
        "sum_rank": metrics::sum_rank_weight(&f, &v),
        "block_ranks": per_block,
        "hamming": metrics::hamming_weight(&f, &v.flat()),
        "subfield": format!("GF({})", f.q()),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn field_classes(p: u32, s: usize, r: usize, gamma: Option<String>) -> Result<String, JsError> {
    field_classes_json(p, s, r, gamma).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn linearized_code(spec_toml: &str, message: &str) -> Result<String, JsError> {
    linearized_code_json(spec_toml, message).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sum_rank_weight(p: u32, s: usize, r: usize, blocks: &str) -> Result<String, JsError> {
    sum_rank_weight_json(p, s, r, blocks).map_err(|e| JsError::new(&e))
}
