//! wasm-bindgen entry points for the static demo page in `www/`.

use wasm_bindgen::prelude::*;

use weylcone::experiment::{self, FigureFormat};
use weylcone::{charvar, fan, json, parse, Rational, Weight};

fn lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

fn parse_gens(text: &str, n: usize) -> Result<Vec<weylcone::WeylElement>, String> {
    lines(text)
        .map(|l| parse::parse_weyl(l, n).map_err(|e| e.to_string()))
        .collect()
}

/// SVG of the half-line colour classes plus a one-line summary.
pub fn experiment_svg_impl(s0: u32, window: u32, s_max: u32) -> Result<String, String> {
    let e = experiment::halfline_cones(s0 as u64, window as u64, &Rational::from_integer(s_max.into()))
        .map_err(|e| e.to_string())?;
    let summary = serde_json::json!({
        "classes": e.classes.len(),
        "degenerate": e.degenerate_count(),
        "lower_vertices": e.lower_vertices().into_iter().collect::<Vec<_>>(),
    });
    Ok(format!(
        "<!-- {summary} -->\n{}",
        experiment::emit_figure(&e.classes, window as u64, FigureFormat::Svg)
    ))
}

/// Slope fan of an ideal of the first Weyl algebra, as JSON.
pub fn fan_json_impl(gens: &str) -> Result<String, String> {
    let gens = parse_gens(gens, 1)?;
    let f = fan::fan_1d(&gens).map_err(|e| e.to_string())?;
    let chi = fan::chi(&gens).map_err(|e| e.to_string())?;
    Ok(serde_json::json!({ "cones": json::fan_cones(&f), "chi": chi }).to_string())
}

/// Reduced basis of `Gr^ω L` and the dimension of its variety, as JSON.
pub fn initial_ideal_impl(gens: &str, n: u32, weight: &str) -> Result<String, String> {
    let n = n as usize;
    let gens = parse_gens(gens, n)?;
    let w: Weight = weight.parse().map_err(|e: weylcone::Error| e.to_string())?;
    let ci = charvar::char_ideal(&gens, n, &w).map_err(|e| e.to_string())?;
    let dim = charvar::dim_char_variety(&gens, n, &w).map_err(|e| e.to_string())?;
    let initial: Vec<String> = ci.reduced_gb.iter().map(|p| p.to_string()).collect();
    Ok(serde_json::json!({ "initial": initial, "dim": dim.to_string() }).to_string())
}

#[wasm_bindgen]
pub fn experiment_svg(s0: u32, window: u32, s_max: u32) -> Result<String, JsValue> {
    experiment_svg_impl(s0, window, s_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fan_json(gens: &str) -> Result<String, JsValue> {
    fan_json_impl(gens).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn initial_ideal(gens: &str, n: u32, weight: &str) -> Result<String, JsValue> {
    initial_ideal_impl(gens, n, weight).map_err(|e| JsValue::from_str(&e))
}
