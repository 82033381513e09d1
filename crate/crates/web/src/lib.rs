//! Browser bindings: each function returns a JSON (or DOT) string, or throws
//! the error message.

use annulus_core::export::{branch_report, graph_to_dot, to_sorted_json};
use annulus_core::profile::ProfileInvariants;
use annulus_core::resolution::resolve_branch;
use annulus_core::verifier::{symbolic_case_bound, verify_profile, OptimizerOptions};
use annulus_core::{AnnulusProfile, BranchTopology};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn fail(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

pub fn branch_json(pairs: &str) -> Result<String, String> {
    let topology: BranchTopology = pairs.parse().map_err(|e| format!("{e}"))?;
    let report = branch_report(&topology).map_err(|e| e.to_string())?;
    to_sorted_json(&report).map_err(|e| e.to_string())
}

pub fn branch_dot(pairs: &str) -> Result<String, String> {
    let topology: BranchTopology = pairs.parse().map_err(|e| format!("{e}"))?;
    let graph = resolve_branch(&topology).map_err(|e| e.to_string())?;
    Ok(graph_to_dot(&graph))
}

pub fn profile_json(p: i64, q: i64, r: i64, s: i64) -> Result<String, String> {
    let x = AnnulusProfile::new(p, q, r, s).map_err(|e| e.to_string())?;
    let inv = ProfileInvariants::of(&x).map_err(|e| e.to_string())?;
    let cert = verify_profile(&x, OptimizerOptions::default()).map_err(|e| e.to_string())?;
    let symbolic = symbolic_case_bound(&x).map_err(|e| e.to_string())?;
    let reduced = x.reduce().map_err(|e| e.to_string())?;
    to_sorted_json(&json!({
        "invariants": inv,
        "certificate": cert,
        "symbolic": symbolic,
        "reduced_form": reduced,
    }))
    .map_err(|e| e.to_string())
}

/// Invariants of a branch given as "m1,n1;m2,n2".
#[wasm_bindgen(js_name = branchReport)]
pub fn branch_report_js(pairs: &str) -> Result<String, JsError> {
    branch_json(pairs).map_err(fail)
}

/// Resolution graph of a branch in DOT.
#[wasm_bindgen(js_name = resolveDot)]
pub fn resolve_dot_js(pairs: &str) -> Result<String, JsError> {
    branch_dot(pairs).map_err(fail)
}

/// Type, invariants and certificate of one profile.
#[wasm_bindgen(js_name = profileReport)]
pub fn profile_report_js(p: i32, q: i32, r: i32, s: i32) -> Result<String, JsError> {
    profile_json(p.into(), q.into(), r.into(), s.into()).map_err(fail)
}
