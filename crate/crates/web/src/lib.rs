//! WebAssembly bindings for the browser demo. Every entry point takes a TOML
//! spec document and returns pretty-printed JSON, or an error message.

use std::collections::BTreeMap;

use isotriv::fibration::surface_invariants;
use isotriv::ordinarity::{
    build_report, check_supersingular_corollary, decide, hasse_divisor, CurveId, Supplied,
};
use isotriv::SpecDocument;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("JSON values always print")
}

fn parse_overrides(text: &str) -> Result<BTreeMap<CurveId, Supplied>, String> {
    text.split([',', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (curve, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected CURVE=VALUE, got `{item}`"))?;
            let id = CurveId::from_name(curve.trim()).ok_or_else(|| format!("unknown curve `{curve}`"))?;
            let v = Supplied::parse(value.trim()).ok_or_else(|| format!("unknown value `{value}`"))?;
            Ok((id, v))
        })
        .collect()
}

/// Line-bundle degrees, chi, Euler number, Hodge numbers and fibers.
#[wasm_bindgen]
pub fn invariants(spec: &str) -> Result<String, String> {
    let doc = SpecDocument::parse(spec).map_err(|e| e.to_string())?;
    let s = doc.to_spec().map_err(|e| e.to_string())?;
    let inv = surface_invariants(&s).map_err(|e| e.to_string())?;
    Ok(pretty(json!(inv)))
}

/// Ordinarity verdict. `overrides` is a comma-separated list such as
/// `Dp=ordinary, Dpp=0`.
#[wasm_bindgen]
pub fn ordinarity(spec: &str, overrides: &str) -> Result<String, String> {
    let doc = SpecDocument::parse(spec).map_err(|e| e.to_string())?;
    let s = doc.to_spec().map_err(|e| e.to_string())?;
    let supplied = parse_overrides(overrides)?;
    let report = build_report(&s, &supplied).map_err(|e| e.to_string())?;
    let verdict = decide(&s, &report).map_err(|e| e.to_string())?;
    let check = check_supersingular_corollary(&s, &verdict, &report).map_err(|e| e.to_string())?;
    let hasse = match report.ordinary(CurveId::E) {
        Some(true) => Some(hasse_divisor(&s, &report).map_err(|e| e.to_string())?),
        _ => None,
    };
    Ok(pretty(json!({
        "curves": report,
        "verdict": verdict,
        "supersingular_check": check,
        "hasse_divisor": hasse,
    })))
}

/// Per-prime ordinarity table for `5 <= p <= pmax`.
#[wasm_bindgen]
pub fn scan(spec: &str, pmax: u32) -> Result<String, String> {
    let doc = SpecDocument::parse(spec).map_err(|e| e.to_string())?;
    let r = isotriv::scan::scan(&doc, u64::from(pmax)).map_err(|e| e.to_string())?;
    Ok(pretty(json!({
        "rows": r.rows,
        "good_primes": r.summary.good_primes,
        "ordinary": r.summary.ordinary,
        "e_ordinary": r.summary.e_ordinary,
        "fraction": r.summary.fraction(),
        "e_fraction": r.summary.e_fraction(),
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    const KUMMER: &str = "p = 7\nR = \"C2\"\nbranch = [1, 0, 0, 0, 1]\n[ram]\na2 = 4\n[E]\na = 0\nb = 1\n";

    #[test]
    fn invariants_json() {
        let v: serde_json::Value = serde_json::from_str(&invariants(KUMMER).unwrap()).unwrap();
        assert_eq!(v["chi"], 2);
        assert_eq!(v["fibers"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn ordinarity_json() {
        let v: serde_json::Value = serde_json::from_str(&ordinarity(KUMMER, "").unwrap()).unwrap();
        assert_eq!(v["verdict"]["ordinary"], false);
        assert!(ordinarity(KUMMER, "Dp=ordinary").is_err());
        assert!(ordinarity(KUMMER, "Dp").unwrap_err().contains("CURVE=VALUE"));
    }

    #[test]
    fn scan_json() {
        let spec = "R = \"trivial\"\n[E]\na = 0\nb = 1\n";
        let v: serde_json::Value = serde_json::from_str(&scan(spec, 50).unwrap()).unwrap();
        // ordinary at 7, 13, 19, 31, 37, 43 out of 13 primes
        assert_eq!((v["ordinary"].as_u64(), v["good_primes"].as_u64()), (Some(6), Some(13)));
        assert!(scan(spec, 20_000).is_err());
    }

    #[test]
    fn errors_are_messages() {
        assert!(invariants("R = \"C7\"").unwrap_err().contains("parse error"));
    }
}
