//! WebAssembly bindings used by `www/index.html`. Every export takes plain
//! strings and returns a JSON string, or throws the error message.

use kuratowski::finitetop::spaces_up_to;
use kuratowski::realline::{default_corpus, eval_word_real};
use kuratowski::terms::parse_generators;
use kuratowski::{compute_poset, emit_hasse_dot, enumerate_monoid, make_set, normalize, parse_word, Budget, Models};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Points of the finite spaces used for the order diagram.
const DIAGRAM_POINTS: usize = 3;
const DIAGRAM_MAX_LEN: usize = 8;
const DIAGRAM_CLASS_CAP: usize = 64;

/// Normal form and rewrite trace of a word.
pub fn normalize_json(word: &str) -> Result<String, String> {
    let w = parse_word(word).map_err(|e| e.to_string())?;
    let nf = normalize(&w);
    Ok(json!({ "word": w, "normal_form": nf.word, "trace": nf.trace }).to_string())
}

/// Image of a real-line set under a word, with every intermediate step.
pub fn evaluate_json(word: &str, set: &str) -> Result<String, String> {
    let w = parse_word(word).map_err(|e| e.to_string())?;
    let a = make_set(set).map_err(|e| e.to_string())?;
    let mut steps = vec![json!({ "applied": "id", "set": a })];
    let mut current = a.clone();
    for g in w.application_order() {
        current = current.apply(g);
        steps.push(json!({ "applied": g, "set": current }));
    }
    debug_assert_eq!(current, eval_word_real(&w, &a));
    Ok(json!({ "word": w, "input": a, "image": current, "steps": steps }).to_string())
}

/// Inclusion order of the monoid generated by `generators`, e.g. `"c,i"`.
pub fn order_json(generators: &str) -> Result<String, String> {
    let gens = parse_generators(generators).map_err(|e| e.to_string())?;
    let spaces = spaces_up_to(DIAGRAM_POINTS).map_err(|e| e.to_string())?;
    let models = Models::new(spaces, default_corpus());
    let budget = Budget { class_cap: Some(DIAGRAM_CLASS_CAP), time_cap: None };
    let report = enumerate_monoid(&gens, &models, DIAGRAM_MAX_LEN, budget).map_err(|e| e.to_string())?;
    if report.truncated {
        return Err(format!("more than {DIAGRAM_CLASS_CAP} classes; choose fewer generators"));
    }
    let poset = compute_poset(&report).map_err(|e| e.to_string())?;
    let edges: Vec<_> = poset
        .hasse
        .iter()
        .zip(&poset.strictness)
        .map(|(&(a, b), w)| json!({ "from": a, "to": b, "witness": w.describe() }))
        .collect();
    Ok(json!({
        "elements": poset.elements,
        "edges": edges,
        "growth": report.growth,
        "dot": emit_hasse_dot(&poset),
    })
    .to_string())
}

#[wasm_bindgen(js_name = normalizeWord)]
pub fn normalize_word(word: &str) -> Result<String, JsError> {
    normalize_json(word).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = evaluateOnLine)]
pub fn evaluate_on_line(word: &str, set: &str) -> Result<String, JsError> {
    evaluate_json(word, set).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = orderDiagram)]
pub fn order_diagram(generators: &str) -> Result<String, JsError> {
    order_json(generators).map_err(|e| JsError::new(&e))
}
