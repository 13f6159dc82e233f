//! Single-input verbs.

use std::path::Path;

use clap::ValueEnum;
use confpoly::config::{h1_configuration, phi_config};
use confpoly::exactalg::Polynomial;
use confpoly::singular::{analyze, tangent_cone, verify_theorem};
use serde_json::json;

use crate::input::{self, Input};
use crate::output::{self, document, polynomial_fields};
use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum PsiMethod {
    Forests,
    Det,
    Plucker,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum PhiMethod {
    Cutsets,
    Config,
    All,
}

fn emit(json: bool, text: String, fields: Vec<(&str, serde_json::Value)>) {
    if json {
        println!("{}", document(fields));
    } else {
        println!("{text}");
    }
}

/// All results must coincide; the first is returned.
fn agree(results: Vec<(&'static str, Polynomial)>) -> Result<(Vec<&'static str>, Polynomial), CliError> {
    let (first_name, first) = results[0].clone();
    for (name, p) in &results[1..] {
        if *p != first {
            return Err(CliError::Check(format!("method {first_name} gives {first} but {name} gives {p}")));
        }
    }
    Ok((results.iter().map(|(n, _)| *n).collect(), first))
}

pub fn psi(path: &Path, method: PsiMethod, json: bool) -> Result<(), CliError> {
    let input = input::load(path)?;
    let mut results = Vec::new();
    match &input {
        Input::Graph(g) => {
            if matches!(method, PsiMethod::Forests | PsiMethod::All) {
                results.push(("forests", g.first_graph_polynomial_forests()));
            }
            // an acyclic graph has no configuration; `all` keeps the forest sum
            let skip_config = method == PsiMethod::All && g.h1() == 0;
            if matches!(method, PsiMethod::Det | PsiMethod::Plucker | PsiMethod::All) && !skip_config {
                let w = h1_configuration(g)?;
                if method != PsiMethod::Plucker {
                    results.push(("det", w.psi_det()?));
                }
                if method != PsiMethod::Det {
                    results.push(("plucker", w.psi_plucker()));
                }
            }
        }
        Input::Config(w) => {
            if method == PsiMethod::Forests {
                return Err(CliError::Invalid("the forests method needs a graph input".into()));
            }
            if method != PsiMethod::Plucker {
                results.push(("det", w.psi_det()?));
            }
            if method != PsiMethod::Det {
                results.push(("plucker", w.psi_plucker()));
            }
        }
    }
    let (methods, p) = agree(results)?;
    let mut fields = polynomial_fields(&p);
    fields.push(("methods", json!(methods)));
    emit(json, p.to_string(), fields);
    Ok(())
}

pub fn phi(graph: &Path, momentum: &Path, method: PhiMethod, json: bool) -> Result<(), CliError> {
    let g = input::load_graph(graph)?;
    let p = input::load_momentum(momentum, &g)?;
    let mut results = Vec::new();
    if method != PhiMethod::Config {
        results.push(("cutsets", g.second_graph_polynomial_cutsets(&p)?));
    }
    if method != PhiMethod::Cutsets {
        results.push(("config", phi_config(&g, &p)?));
    }
    let (methods, poly) = agree(results)?;
    // the cut-set sum of a zero momentum is 0; the configuration route refuses it
    if poly.is_zero() {
        return Err(confpoly::Error::ZeroMomentum.into());
    }
    let mut fields = polynomial_fields(&poly);
    fields.push(("methods", json!(methods)));
    emit(json, poly.to_string(), fields);
    Ok(())
}

pub fn plucker(path: &Path, momentum: Option<&Path>, json: bool) -> Result<(), CliError> {
    let w = input::configuration(input::load(path)?, momentum)?;
    let coords = w.plucker();
    let nonzero: Vec<(String, String)> = coords.nonzero().map(|(s, v)| (s.to_string(), v.to_string())).collect();
    let text = nonzero.iter().map(|(s, v)| format!("{s} {v}")).collect::<Vec<_>>().join("\n");
    let map: serde_json::Map<String, serde_json::Value> = nonzero.into_iter().map(|(s, v)| (s, json!(v))).collect();
    emit(
        json,
        text,
        vec![("n", json!(w.n())), ("dim", json!(w.dim())), ("coordinates", serde_json::Value::Object(map))],
    );
    Ok(())
}

pub fn restrict(path: &Path, momentum: Option<&Path>, edges: &str, json: bool) -> Result<(), CliError> {
    let input = input::load(path)?;
    let h = input::parse_edges(edges, &input)?;
    let w = input::configuration(input, momentum)?;
    match w.restrict(h) {
        Some(r) => {
            let p = r.psi_det()?;
            let mut fields = polynomial_fields(&p);
            fields.push(("dim", json!(r.dim())));
            fields.push(("configuration", json!(r.to_text())));
            emit(json, format!("{}psi: {p}", r.to_text()), fields);
        }
        None => {
            // the zero subspace: its polynomial is the empty determinant
            let p = Polynomial::one(w.n());
            let mut fields = polynomial_fields(&p);
            fields.push(("dim", json!(0)));
            fields.push(("configuration", serde_json::Value::Null));
            emit(json, format!("zero subspace\npsi: {p}"), fields);
        }
    }
    Ok(())
}

pub fn analyze_point(
    path: &Path,
    momentum: Option<&Path>,
    point: &str,
    with_cone: bool,
    json: bool,
) -> Result<(), CliError> {
    let w = input::configuration(input::load(path)?, momentum)?;
    let a = input::parse_point(point)?;
    let report = if with_cone { analyze(&w, &a)? } else { verify_theorem(&w, &a)? };
    emit(json, output::report_text(&report), vec![("report", output::report(&report))]);
    if !report.theorem_ok {
        return Err(CliError::Check(format!(
            "multiplicity {} differs from corank {}",
            report.multiplicity, report.corank
        )));
    }
    Ok(())
}

pub fn cone(path: &Path, momentum: Option<&Path>, point: &str, json: bool) -> Result<(), CliError> {
    let w = input::configuration(input::load(path)?, momentum)?;
    let a = input::parse_point(point)?;
    let c = tangent_cone(&w, &a)?;
    let text = format!(
        "order: {}\nchart: {}\naffine: {}\nprojective: {}",
        c.order,
        output::variable(c.chart),
        c.affine,
        c.projective
    );
    emit(
        json,
        text,
        vec![
            ("order", json!(c.order)),
            ("chart", json!(output::variable(c.chart))),
            ("affine", json!(c.affine.to_string())),
            ("polynomial", json!(c.projective.to_string())),
            ("coefficients", output::coefficients(&c.projective)),
        ],
    );
    Ok(())
}
