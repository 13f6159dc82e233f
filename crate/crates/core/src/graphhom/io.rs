//! Line-oriented text formats.
//!
//! Graph file:
//!
//! ```text
//! # two vertices, two parallel edges
//! v a
//! v b
//! e e1 a b     # name, tail, head
//! e e2 a b
//! ```
//!
//! Momentum file, one `p <vertex> <rational>` per line; unlisted vertices
//! get zero.

use std::fmt::Write as _;

use num::Zero;

use super::graph::{Edge, Multigraph};
use super::momentum::Momentum;
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, Rational};

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edge_names: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (line, words) in content_lines(text) {
        match words.as_slice() {
            ["v", name] => {
                if vertices.iter().any(|v| v == name) {
                    return Err(Error::parse(line, format!("vertex `{name}` declared twice")));
                }
                vertices.push(name.to_string());
            }
            ["e", name, tail, head] => {
                if edge_names.iter().any(|e| e == name) {
                    return Err(Error::parse(line, format!("edge `{name}` declared twice")));
                }
                let find = |v: &str| {
                    vertices
                        .iter()
                        .position(|x| x == v)
                        .ok_or_else(|| Error::parse(line, format!("unknown vertex `{v}`")))
                };
                edges.push(Edge::new(find(tail)?, find(head)?));
                edge_names.push(name.to_string());
            }
            _ => {
                return Err(Error::parse(
                    line,
                    format!("expected `v <name>` or `e <name> <tail> <head>`, got `{}`", words.join(" ")),
                ))
            }
        }
    }
    Multigraph::with_names(vertices, edge_names, edges)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = String::new();
    for v in g.vertex_names() {
        writeln!(out, "v {v}").unwrap();
    }
    for (name, e) in g.edge_names().iter().zip(g.edges()) {
        let names = g.vertex_names();
        writeln!(out, "e {name} {} {}", names[e.tail], names[e.head]).unwrap();
    }
    out
}

/// Parses a momentum file against `g`. Conservation is not checked here.
pub fn parse_momentum(text: &str, g: &Multigraph) -> Result<Momentum> {
    let mut values = vec![Rational::zero(); g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    for (line, words) in content_lines(text) {
        match words.as_slice() {
            ["p", vertex, value] => {
                let v = g
                    .vertex_index(vertex)
                    .ok_or_else(|| Error::parse(line, format!("unknown vertex `{vertex}`")))?;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::parse(line, format!("vertex `{vertex}` listed twice")));
                }
                values[v] = parse_rational(value, line)?;
            }
            _ => {
                return Err(Error::parse(
                    line,
                    format!("expected `p <vertex> <rational>`, got `{}`", words.join(" ")),
                ))
            }
        }
    }
    Ok(Momentum(values))
}

/// Writes the nonzero entries of `p`.
pub fn write_momentum(p: &Momentum, g: &Multigraph) -> String {
    let mut out = String::new();
    for (name, value) in g.vertex_names().iter().zip(p.values()) {
        if !value.is_zero() {
            writeln!(out, "p {name} {value}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    const BAN2: &str = "# banana\nv a\nv b\ne e1 a b  # first\ne e2 a b\n";

    #[test]
    fn parse_and_write_graph() {
        let g = parse_graph(BAN2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[Edge::new(0, 1), Edge::new(0, 1)]);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("v a\ne x a b\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("v a\nv a\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("w a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("v a\ne x a a\ne x a a\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn momentum_files() {
        let g = parse_graph(BAN2).unwrap();
        let p = parse_momentum("p a 1/2\n# c\np b -1/2\n", &g).unwrap();
        assert_eq!(p.0, vec![ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(parse_momentum(&write_momentum(&p, &g), &g).unwrap(), p);
        let partial = parse_momentum("p b 3\n", &g).unwrap();
        assert!(partial.0[0].is_zero());
        assert!(parse_momentum("p c 1\n", &g).is_err());
        assert!(parse_momentum("p a 1/0\n", &g).is_err());
        assert!(parse_momentum("p a 1\np a 2\n", &g).is_err());
    }
}
