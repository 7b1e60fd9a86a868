//! Browser bindings for the `flatpants` library.
//!
//! Each export takes plain numbers and returns a JSON string, so the page
//! needs no bindings beyond `JSON.parse`. The `*_json` functions hold the
//! logic and are callable (and tested) natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use flatpants::json::{
    cone_json, degeneracy_json, membership_json, violations_json, Mode, PantsDocument, Params,
};
use flatpants::teich_space::{membership_with, stratum};
use flatpants::{emit_svg, Development, Error, Tolerance};

fn mode(name: &str) -> Result<Mode, String> {
    match name {
        "lr" => Ok(Mode::Lr),
        "la" => Ok(Mode::La),
        other => Err(format!("unknown mode {other:?}, expected \"lr\" or \"la\"")),
    }
}

fn six(values: &[f64]) -> Result<[f64; 6], String> {
    <[f64; 6]>::try_from(values).map_err(|_| format!("expected 6 values, got {}", values.len()))
}

fn params(mode_name: &str, values: &[f64]) -> Result<Params, String> {
    PantsDocument::new(mode(mode_name)?, six(values)?)
        .params()
        .map_err(|e| e.to_string())
}

fn error_report(e: &Error) -> serde_json::Value {
    match e {
        Error::Invalid(v) => {
            json!({ "ok": false, "message": e.to_string(), "violations": violations_json(v) })
        }
        _ => json!({ "ok": false, "message": e.to_string(), "violations": [] }),
    }
}

/// Development drawing and cone point of a pair of pants. Constraint
/// failures are reported inside the JSON with `"ok": false`.
pub fn develop_json(mode_name: &str, values: &[f64]) -> Result<String, String> {
    let tol = Tolerance::default();
    let p = params(mode_name, values)?;
    let built = p
        .length_radius(tol)
        .and_then(|lr| Development::build_with(&lr, tol).map(|d| (lr, d)));
    let report = match built {
        Ok((lr, d)) => json!({
            "ok": true,
            "lr": lr.values(),
            "svg": emit_svg(&d),
            "cone": cone_json(&d.cone_point()),
            "degeneracy": degeneracy_json(d.report()),
        }),
        Err(e) => error_report(&e),
    };
    Ok(report.to_string())
}

/// The same pants in the other parameter system, with its classification.
pub fn convert_json(mode_name: &str, values: &[f64]) -> Result<String, String> {
    let tol = Tolerance::default();
    let p = params(mode_name, values)?;
    let report = match p.convert(tol) {
        Ok(out) => {
            let lr = match out {
                Params::Lr(lr) => lr,
                Params::La(_) => p.length_radius(tol).map_err(|e| e.to_string())?,
            };
            json!({
                "ok": true,
                "output": PantsDocument::from_params(&out).to_value(),
                "degeneracy": degeneracy_json(&lr.classify_with(tol)),
            })
        }
        Err(e) => error_report(&e),
    };
    Ok(report.to_string())
}

/// Membership and wall stratum of a distance-parameter 6-tuple.
pub fn teich_json(values: &[f64]) -> Result<String, String> {
    let tol = Tolerance::default();
    let x = six(values)?;
    let m = membership_with(&x, tol).map_err(|e| e.to_string())?;
    let s = stratum(&x, tol).map_err(|e| e.to_string())?;
    let mut report = membership_json(&m);
    report["l_walls"] = json!(s.l_walls.iter().map(|i| i + 1).collect::<Vec<_>>());
    report["a_walls"] = json!(s.a_walls.iter().map(|i| i + 1).collect::<Vec<_>>());
    Ok(report.to_string())
}

#[wasm_bindgen]
pub fn develop(mode: &str, values: Vec<f64>) -> Result<String, JsValue> {
    develop_json(mode, &values).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn convert(mode: &str, values: Vec<f64>) -> Result<String, JsValue> {
    convert_json(mode, &values).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn teich(values: Vec<f64>) -> Result<String, JsValue> {
    teich_json(&values).map_err(|e| JsValue::from_str(&e))
}
