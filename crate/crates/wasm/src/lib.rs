//! Browser bindings: three interactive operations over the balance engine,
//! each returning a JSON document for the demo page to render.
//!
//! Build with `wasm-pack build crates/wasm --target web` and serve the
//! `www/` directory next to the generated `pkg/`.

use wasm_bindgen::prelude::*;

use rootbalance::balance::{
    find_zero_signing, is_well_balanced, lattice_membership_obstruction, strongly_orthogonal_set,
    SolverBudget, SubsetSelection,
};
use rootbalance::extremal::{thm32_value, thm41_value};
use rootbalance::witnesses::{thm32_witness, thm41_witness, verify_well_balanced};
use rootbalance::{DynkinLabel, Error, Family, Result, RootSystem};

fn parse_label(family: &str, rank: u32) -> Result<DynkinLabel> {
    let family: Family = family.parse()?;
    DynkinLabel::new(family, rank as usize)
}

fn render_terms(rs: &RootSystem, terms: &[(usize, rootbalance::Sign)]) -> Vec<String> {
    terms
        .iter()
        .map(|&(i, s)| format!("{s}{}", rs.positive_roots()[i]))
        .collect()
}

fn roots_table_impl(family: &str, rank: u32) -> Result<String> {
    let label = parse_label(family, rank)?;
    let rs = RootSystem::build(label)?;
    let roots: Vec<serde_json::Value> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            serde_json::json!({
                "index": i,
                "display": r.to_string(),
                "stored": r.coords(),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "label": label.to_string(),
        "count": rs.count(),
        "ambient_dim": rs.ambient_dim(),
        "min_balanced_cocardinality": thm32_value(label),
        "max_wellbalanced_cocardinality": thm41_value(label),
        "positive_sum": rs.positive_sum().to_string(),
        "roots": roots,
    });
    Ok(doc.to_string())
}

fn check_subset_impl(family: &str, rank: u32, spec: &str) -> Result<String> {
    let label = parse_label(family, rank)?;
    let rs = RootSystem::build(label)?;
    let sel = SubsetSelection::parse_spec(&rs, spec)?;
    let budget = SolverBudget::default();
    let witness = match find_zero_signing(&rs, &sel, &budget) {
        Ok(w) => w,
        Err(Error::BudgetExceeded(breach)) => {
            let doc = serde_json::json!({
                "label": label.to_string(),
                "subset_size": sel.len(),
                "budget_exceeded": breach.to_string(),
            });
            return Ok(doc.to_string());
        }
        Err(e) => return Err(e),
    };
    let balanced = witness.is_some();
    let obstruction = if balanced {
        None
    } else {
        lattice_membership_obstruction(&rs, &sel)?
    };
    let doc = serde_json::json!({
        "label": label.to_string(),
        "subset_size": sel.len(),
        "balanced": balanced,
        "strongly_orthogonal": strongly_orthogonal_set(&rs, &sel)?,
        "well_balanced": is_well_balanced(&rs, &sel, &budget)?,
        "witness": witness.as_ref().map(|w| render_terms(&rs, w.terms())),
        "obstruction": obstruction.as_ref().map(|c| c.kind()),
    });
    Ok(doc.to_string())
}

fn extremal_witness_impl(which: &str, family: &str, rank: u32) -> Result<String> {
    let label = parse_label(family, rank)?;
    let rs = RootSystem::build(label)?;
    let cert = match which {
        "min" => thm32_witness(label)?,
        "max" => thm41_witness(label)?,
        other => {
            return Err(Error::SpecParse {
                reason: format!("witness kind must be `min` or `max`, got {other:?}"),
            })
        }
    };
    verify_well_balanced(&rs, &cert)?;
    let complement: Vec<String> = cert
        .complement
        .iter()
        .map(|&i| rs.positive_roots()[i].to_string())
        .collect();
    let doc = serde_json::json!({
        "label": label.to_string(),
        "cocardinality": cert.cocardinality,
        "complement": complement,
        "complement_strongly_orthogonal": cert.complement_strongly_orthogonal,
        "witness": render_terms(&rs, cert.witness.terms()),
        "certificate": cert,
    });
    Ok(doc.to_string())
}

/// Positive-root table plus the two extremal values for a label.
#[wasm_bindgen]
pub fn roots_table(family: &str, rank: u32) -> std::result::Result<String, JsError> {
    roots_table_impl(family, rank).map_err(|e| JsError::new(&e.to_string()))
}

/// Balanced / strongly orthogonal / well-balanced for a subset spec
/// (`full`, `indices:i,j,...`, `complement:i,j,...`), with a witness or a
/// lattice obstruction.
#[wasm_bindgen]
pub fn check_subset(family: &str, rank: u32, spec: &str) -> std::result::Result<String, JsError> {
    check_subset_impl(family, rank, spec).map_err(|e| JsError::new(&e.to_string()))
}

/// The constructed extremal witness (`min` for the smallest balanced
/// complement, `max` for the largest well-balanced one).
#[wasm_bindgen]
pub fn extremal_witness(
    which: &str,
    family: &str,
    rank: u32,
) -> std::result::Result<String, JsError> {
    extremal_witness_impl(which, family, rank).map_err(|e| JsError::new(&e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_table_json_shape() {
        let doc: serde_json::Value =
            serde_json::from_str(&roots_table_impl("G", 2).unwrap()).unwrap();
        assert_eq!(doc["count"], 6);
        assert_eq!(doc["max_wellbalanced_cocardinality"], 2);
        assert_eq!(doc["roots"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn check_subset_reports_witness() {
        let doc: serde_json::Value =
            serde_json::from_str(&check_subset_impl("A", 2, "full").unwrap()).unwrap();
        assert_eq!(doc["balanced"], true);
        assert_eq!(doc["well_balanced"], true);
        assert_eq!(doc["witness"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn check_subset_budget_is_reported_not_hidden() {
        let doc: serde_json::Value =
            serde_json::from_str(&check_subset_impl("E", 7, "full").unwrap()).unwrap();
        assert!(doc["budget_exceeded"].is_string());
    }

    #[test]
    fn extremal_witness_renders() {
        let doc: serde_json::Value =
            serde_json::from_str(&extremal_witness_impl("max", "D", 4).unwrap()).unwrap();
        assert_eq!(doc["cocardinality"], 4);
        assert_eq!(doc["complement"].as_array().unwrap().len(), 4);
        assert!(extremal_witness_impl("median", "D", 4).is_err());
    }
}
