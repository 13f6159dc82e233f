//! JSON encoding. Every document carries the schema version `v`.

use confpoly::exactalg::Polynomial;
use confpoly::singular::AnalysisReport;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub fn document(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("v".into(), json!(SCHEMA_VERSION));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

/// Monomial text to coefficient text, in canonical term order.
pub fn coefficients(p: &Polynomial) -> Value {
    let map: Map<String, Value> = p.terms().map(|(m, c)| (m.to_string(), json!(c.to_string()))).collect();
    Value::Object(map)
}

pub fn polynomial_fields(p: &Polynomial) -> Vec<(&'static str, Value)> {
    vec![("polynomial", json!(p.to_string())), ("coefficients", coefficients(p))]
}

pub fn variable(i: usize) -> String {
    format!("A{}", i + 1)
}

/// Flat record: rationals as strings, cone polynomials as canonical text.
pub fn report(r: &AnalysisReport) -> Value {
    let cone = r.tangent_cone.as_ref();
    json!({
        "point": r.point.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "dim": r.dim,
        "rank": r.rank,
        "corank": r.corank,
        "multiplicity": r.multiplicity,
        "theorem_ok": r.theorem_ok,
        "in_theorem_range": r.in_theorem_range,
        "psi_value": r.psi_value.to_string(),
        "chart": variable(r.chart),
        "tangent_cone": cone.map(|c| c.projective.to_string()),
        "tangent_cone_affine": cone.map(|c| c.affine.to_string()),
    })
}

pub fn report_text(r: &AnalysisReport) -> String {
    let point: Vec<String> = r.point.iter().map(ToString::to_string).collect();
    let mut lines = vec![
        format!("point: {}", point.join(",")),
        format!("dim: {}", r.dim),
        format!("rank: {}", r.rank),
        format!("corank: {}", r.corank),
        format!("multiplicity: {}", r.multiplicity),
        format!("theorem_ok: {}", r.theorem_ok),
        format!("in_theorem_range: {}", r.in_theorem_range),
        format!("psi_value: {}", r.psi_value),
        format!("chart: {}", variable(r.chart)),
    ];
    if let Some(c) = &r.tangent_cone {
        lines.push(format!("tangent_cone: {}", c.projective));
        lines.push(format!("tangent_cone_affine: {}", c.affine));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use confpoly::config::Configuration;

    #[test]
    fn coefficient_map_keeps_term_order() {
        let w = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        let doc = document(polynomial_fields(&w.psi_det().unwrap()));
        assert_eq!(
            doc.to_string(),
            r#"{"v":1,"polynomial":"A1*A2 + 4*A1*A3 + 4*A2*A3","coefficients":{"A1*A2":"1","A1*A3":"4","A2*A3":"4"}}"#
        );
    }
}
