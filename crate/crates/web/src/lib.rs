//! Browser demo bindings. The `*_json` functions are plain Rust and return
//! JSON text; the `#[wasm_bindgen]` wrappers forward to them.

use lambda_friezes::bijection::associated_triangulation;
use lambda_friezes::frieze::{cc_frieze, lambda_frieze, Frieze};
use lambda_friezes::polygon::{enumerate_p_angulations, fuss_catalan, Dissection};
use lambda_friezes::verify::{odd_row_mismatch, sweep, verify_dissection};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest face count the demo will enumerate.
pub const MAX_S: usize = 6;

#[derive(Debug, Serialize)]
struct FriezeView {
    width: usize,
    period: usize,
    rows: Vec<Vec<String>>,
    values: Vec<Vec<f64>>,
}

impl From<&Frieze> for FriezeView {
    fn from(f: &Frieze) -> Self {
        FriezeView {
            width: f.width(),
            period: f.period(),
            rows: f
                .rows()
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
            values: f
                .rows()
                .iter()
                .map(|row| row.iter().map(|x| x.to_f64()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct PairView {
    p: usize,
    n: usize,
    diagonals: Vec<(usize, usize)>,
    triangulation: Vec<(usize, usize)>,
    lambda: FriezeView,
    cc: FriezeView,
    odd_rows_agree: bool,
    all_claims_hold: bool,
}

fn check_p(p: usize) -> Result<(), String> {
    match p {
        4 | 6 => Ok(()),
        _ => Err(format!("p must be 4 or 6, got {p}")),
    }
}

fn check_s(s: usize) -> Result<(), String> {
    if (1..=MAX_S).contains(&s) {
        Ok(())
    } else {
        Err(format!("s must be between 1 and {MAX_S}, got {s}"))
    }
}

fn to_json(value: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn pair_view(d: &Dissection, p: usize) -> Result<String, String> {
    check_p(p)?;
    let lambda = lambda_frieze(d, p).map_err(|e| e.to_string())?;
    let t = associated_triangulation(d, p).map_err(|e| e.to_string())?;
    let cc = cc_frieze(&t).map_err(|e| e.to_string())?;
    let report = verify_dissection(d, p).map_err(|e| e.to_string())?;
    to_json(&PairView {
        p,
        n: d.n(),
        diagonals: d.diagonals().to_vec(),
        triangulation: t.dissection().diagonals().to_vec(),
        odd_rows_agree: odd_row_mismatch(&lambda, &cc).is_none(),
        lambda: (&lambda).into(),
        cc: (&cc).into(),
        all_claims_hold: report.all_ok(),
    })
}

/// Number of p-angulations with `s` faces.
pub fn count_json(p: usize, s: usize) -> Result<String, String> {
    if !matches!(p, 3 | 4 | 6) {
        return Err(format!("p must be 3, 4 or 6, got {p}"));
    }
    check_s(s)?;
    to_json(&fuss_catalan(s, p).to_string())
}

/// Friezes of the `index`-th p-angulation with `s` faces, in enumeration order.
pub fn pair_by_index_json(p: usize, s: usize, index: usize) -> Result<String, String> {
    check_p(p)?;
    check_s(s)?;
    let all = enumerate_p_angulations(s, p).map_err(|e| e.to_string())?;
    let d = all
        .get(index)
        .ok_or_else(|| format!("index {index} out of range (0..{})", all.len()))?;
    pair_view(d, p)
}

/// Friezes of a dissection given as `{"n": .., "diagonals": [[a, b], ..]}`.
pub fn pair_from_dissection_json(p: usize, dissection: &str) -> Result<String, String> {
    let d: Dissection = serde_json::from_str(dissection).map_err(|e| e.to_string())?;
    pair_view(&d, p)
}

/// Sweep summary over every p-angulation with at most `s_max` faces.
pub fn sweep_json(p: usize, s_max: usize) -> Result<String, String> {
    check_p(p)?;
    let limit = if p == 4 { 5 } else { 3 };
    if !(1..=limit).contains(&s_max) {
        return Err(format!("s_max must be between 1 and {limit} for p = {p}"));
    }
    to_json(&sweep(p, s_max).map_err(|e| e.to_string())?)
}

#[wasm_bindgen]
pub fn count(p: usize, s: usize) -> Result<String, JsError> {
    count_json(p, s).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pair_by_index(p: usize, s: usize, index: usize) -> Result<String, JsError> {
    pair_by_index_json(p, s, index).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pair_from_dissection(p: usize, dissection: &str) -> Result<String, JsError> {
    pair_from_dissection_json(p, dissection).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify_sweep(p: usize, s_max: usize) -> Result<String, JsError> {
    sweep_json(p, s_max).map_err(|e| JsError::new(&e))
}
