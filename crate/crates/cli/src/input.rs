//! Input files, points and edge lists.

use std::fs;
use std::path::Path;

use confpoly::config::{h1_configuration, h1p_configuration, Configuration};
use confpoly::exactalg::{parse_rational, Rational};
use confpoly::graphhom::io::{parse_graph, parse_momentum};
use confpoly::graphhom::{EdgeSubset, Momentum, Multigraph};

use crate::CliError;

pub enum Input {
    Graph(Multigraph),
    Config(Configuration),
}

impl Input {
    pub fn n(&self) -> usize {
        match self {
            Input::Graph(g) => g.edge_count(),
            Input::Config(w) => w.n(),
        }
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

/// A configuration file starts with `n <int>`; anything else is a graph.
pub fn is_configuration_text(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
        == Some("n")
}

pub fn load(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let input = if is_configuration_text(&text) {
        Input::Config(Configuration::parse(&text)?)
    } else {
        Input::Graph(parse_graph(&text)?)
    };
    Ok(input)
}

pub fn load_graph(path: &Path) -> Result<Multigraph, CliError> {
    match load(path)? {
        Input::Graph(g) => Ok(g),
        Input::Config(_) => Err(CliError::Invalid(format!("{} is a configuration, not a graph", path.display()))),
    }
}

pub fn load_momentum(path: &Path, g: &Multigraph) -> Result<Momentum, CliError> {
    Ok(parse_momentum(&read(path)?, g)?)
}

/// The configuration of an input: itself, `H_1(G)`, or `H_1(G, p)` when a
/// momentum file is given.
pub fn configuration(input: Input, momentum: Option<&Path>) -> Result<Configuration, CliError> {
    match (input, momentum) {
        (Input::Config(w), None) => Ok(w),
        (Input::Config(_), Some(_)) => Err(CliError::Invalid("a momentum needs a graph input".into())),
        (Input::Graph(g), None) => Ok(h1_configuration(&g)?),
        (Input::Graph(g), Some(path)) => {
            let p = load_momentum(path, &g)?;
            Ok(h1p_configuration(&g, &p)?)
        }
    }
}

/// Comma-separated rationals such as `1,0,-1/2`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|s| parse_rational(s, 1).map_err(|_| CliError::Invalid(format!("bad coordinate `{}` in point", s.trim()))))
        .collect()
}

/// Comma-separated edges: 1-based indices, or edge names for graph inputs.
pub fn parse_edges(text: &str, input: &Input) -> Result<EdgeSubset, CliError> {
    let n = input.n();
    let mut subset = EdgeSubset::empty();
    for word in text.split(',').map(str::trim).filter(|w| !w.is_empty()) {
        let index = match word.parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => i - 1,
            Ok(i) => return Err(CliError::Invalid(format!("edge index {i} outside 1..={n}"))),
            Err(_) => match input {
                Input::Graph(g) => g
                    .edge_index(word)
                    .ok_or_else(|| CliError::Invalid(format!("unknown edge `{word}`")))?,
                Input::Config(_) => return Err(CliError::Invalid(format!("`{word}` is not an index"))),
            },
        };
        subset = subset.with(index);
    }
    Ok(subset)
}
