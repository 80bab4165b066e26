//! Browser bindings: build and check an example, validate a pasted document,
//! compose two relations as Kleisli/powerset horizontal morphisms.
//!
//! Every export returns a JSON string so the page needs no glue types.

use dblcat::doublecat::{check_univalent_double, is_strict, DoubleCategory};
use dblcat::examples::{
    finset_skeleton, finset_skeleton_of, kleisli_compose, kleisli_double_cat, lenses_double_cat, poset_category,
    spans_double_cat, square_double_cat, structured_cospans_double_cat, Poset, PowersetMonad,
};
use dblcat::fincat::{validate_category, FinFunctor, FinMap, MapClass};
use dblcat::json::{parse_document, Level};
use dblcat::twosided::validate_twosided;
use dblcat::validate_double_category;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest carrier the page will build; keeps the law suite interactive.
const PAGE_BOUND: usize = 2;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn build(name: &str, size: usize) -> dblcat::Result<DoubleCategory> {
    let size = size.min(PAGE_BOUND);
    match name {
        "squares" => square_double_cat(poset_category(&Poset::chain(size + 2)).category()),
        "kleisli" => kleisli_double_cat(&PowersetMonad, &finset_skeleton(size, PAGE_BOUND)?),
        "spans" => spans_double_cat(&finset_skeleton_of(size, MapClass::INJECTIVE, PAGE_BOUND)?),
        "cospans" => {
            let c = finset_skeleton_of(size, MapClass::SURJECTIVE, PAGE_BOUND)?;
            structured_cospans_double_cat(&FinFunctor::identity(c.category().clone()), &c)
        }
        "lenses" => lenses_double_cat(&finset_skeleton(size, PAGE_BOUND)?),
        other => Err(dblcat::Error::InvalidInput(format!("unknown example \"{other}\""))),
    }
}

/// Builds an example on sets (or a chain) of size up to `size`, runs the law
/// suite and the strictness and univalence deciders.
#[wasm_bindgen]
pub fn check_example(name: &str, size: usize) -> String {
    let d = match build(name, size) {
        Ok(d) => d,
        Err(e) => return error(e),
    };
    let report = validate_double_category(&d);
    let univalent = check_univalent_double(&d);
    json!({
        "example": name,
        "objects": d.vertical().object_count(),
        "vertical_morphisms": d.vertical().morphism_count(),
        "horizontal_morphisms": d.hor_count(),
        "squares": d.square_count(),
        "report": report.to_json(),
        "strict": is_strict(&d).holds(),
        "univalent": univalent.holds(),
        "univalence_witness": univalent.witness(),
    })
    .to_string()
}

/// Validates a `dblcat/1` document at its deepest layer.
#[wasm_bindgen]
pub fn validate_document(text: &str) -> String {
    let doc = match parse_document(text) {
        Ok(d) => d,
        Err(e) => return error(e),
    };
    let report = match doc.level() {
        Level::Category => doc.category().map(|c| validate_category(&c)),
        Level::Twosided => doc.twosided().map(|d| validate_twosided(&d)),
        Level::Double => doc.double().map(|d| validate_double_category(&d)),
    };
    match report {
        Ok(r) => {
            let mut v = r.to_json();
            v["level"] = json!(format!("{:?}", doc.level()).to_lowercase());
            v.to_string()
        }
        Err(e) => error(e),
    }
}

fn parse_relation(v: &Value) -> Result<Vec<Vec<bool>>, String> {
    let rows = v.as_array().ok_or("a relation is an array of rows")?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or("each row is an array of booleans")?
                .iter()
                .map(|b| b.as_bool().ok_or_else(|| "entries must be true or false".to_string()))
                .collect()
        })
        .collect()
}

fn as_kleisli(rel: &[Vec<bool>], cols: usize) -> Result<FinMap, String> {
    if rel.iter().any(|r| r.len() != cols) {
        return Err(format!("every row needs {cols} entries"));
    }
    let table = rel.iter().map(|r| r.iter().enumerate().filter(|(_, &b)| b).fold(0, |acc, (j, _)| acc | 1 << j)).collect();
    FinMap::new(table, 1 << cols).map_err(|e| e.to_string())
}

/// Composes relations `h ⊆ x × y` and `k ⊆ y × z`, given as boolean
/// matrices in JSON, through the Kleisli composite for the powerset monad.
#[wasm_bindgen]
pub fn compose_relations(h: &str, k: &str, y: usize, z: usize) -> String {
    let run = || -> Result<Value, String> {
        if y > 4 || z > 4 {
            return Err("sets of size at most 4".into());
        }
        let h: Value = serde_json::from_str(h).map_err(|e| e.to_string())?;
        let k: Value = serde_json::from_str(k).map_err(|e| e.to_string())?;
        let (h, k) = (parse_relation(&h)?, parse_relation(&k)?);
        if k.len() != y {
            return Err(format!("the second relation needs {y} rows"));
        }
        let hk = kleisli_compose(&PowersetMonad, &as_kleisli(&h, y)?, &as_kleisli(&k, z)?, z).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<bool>> = hk.table().iter().map(|&s| (0..z).map(|l| s >> l & 1 == 1).collect()).collect();
        Ok(json!({ "composite": rows }))
    };
    match run() {
        Ok(v) => v.to_string(),
        Err(e) => error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_build_and_pass() {
        for name in ["squares", "kleisli", "spans", "cospans", "lenses"] {
            let v: Value = serde_json::from_str(&check_example(name, 1)).unwrap();
            assert_eq!(v["report"]["ok"], json!(true), "{name}: {v}");
        }
        let v: Value = serde_json::from_str(&check_example("nope", 1)).unwrap();
        assert!(v["error"].is_string());
    }

    #[test]
    fn relation_composite() {
        let h = "[[true, false], [false, true], [true, true]]";
        let k = "[[false, true], [true, false]]";
        let v: Value = serde_json::from_str(&compose_relations(h, k, 2, 2)).unwrap();
        assert_eq!(v["composite"], json!([[false, true], [true, false], [true, true]]));
    }

    #[test]
    fn documents_validate() {
        let d = build("squares", 1).unwrap();
        let text = dblcat::json::Document::from_double(&d).to_json_string();
        let v: Value = serde_json::from_str(&validate_document(&text)).unwrap();
        assert_eq!(v["ok"], json!(true));
        assert_eq!(v["level"], json!("double"));
        let v: Value = serde_json::from_str(&validate_document("{")).unwrap();
        assert!(v["error"].is_string());
    }
}
