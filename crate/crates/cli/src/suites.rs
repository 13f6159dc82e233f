//! Seeded verification suites. Trials run on the worker pool; results are
//! reported in trial order, so output depends only on the seed.

use clap::ValueEnum;
use confpoly::config::{h1_configuration, h1p_configuration_with_lift, phi_config, Configuration};
use confpoly::graphhom::io::{write_graph, write_momentum};
use confpoly::exactalg::{rat, Polynomial, Rational};
use confpoly::graphhom::Multigraph;
use confpoly::random::{
    random_configuration, random_cyclic_multigraph, random_flip, random_lift, random_momentum, random_multigraph,
};
use confpoly::singular::{
    generic_cone_check, generic_det_pullback, multiplicity_at, sample_corank_points, singular_ideal_gens,
    tangent_cone, verify_theorem, PairClass, MAX_GENERIC_DIM,
};
use confpoly::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::output::document;
use crate::CliError;

/// Largest `--max-edges`: cut-set and forest enumeration is exponential.
pub const MAX_SUITE_EDGES: usize = 16;
/// Sampled points per corank and trial.
const POINTS_PER_CORANK: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    Matrixtree,
    Secondpoly,
    Restriction,
    Theorem,
    Cones,
    Generic,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Matrixtree => "matrixtree",
            Suite::Secondpoly => "secondpoly",
            Suite::Restriction => "restriction",
            Suite::Theorem => "theorem",
            Suite::Cones => "cones",
            Suite::Generic => "generic",
        }
    }

    fn statement(self) -> &'static str {
        match self {
            Suite::Matrixtree => "the spanning-forest sum equals the determinant of H_1(G) in a circuit basis",
            Suite::Secondpoly => "the cut-set sum equals the polynomial of H_1(G,p) for two lifts and any orientation",
            Suite::Restriction => "each partial derivative is C times the polynomial of the restriction, or 0 with a matched smaller restriction; C = 1 for graphs",
            Suite::Theorem => "the multiplicity of the configuration hypersurface equals the corank of the evaluated form",
            Suite::Cones => "the Taylor tangent cone equals the sum over restrictions, with degree equal to the multiplicity",
            Suite::Generic => "the generic symmetric determinant pulls back to the polynomial and has the same tangent cone",
        }
    }
}

pub struct Options {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub max_edges: usize,
    /// Fixed configuration replacing the random one, where the suite allows.
    pub input: Option<Configuration>,
}

/// Named counters summed over the trials.
type Counters = Vec<(&'static str, usize)>;

struct Failure {
    detail: String,
    dump: String,
}

fn fail(detail: impl Into<String>, dump: String) -> Failure {
    Failure { detail: detail.into(), dump }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(trial as u64))
}

fn graph_with_h1<R: Rng>(rng: &mut R, max_edges: usize, lo: usize, hi: usize) -> Multigraph {
    loop {
        let g = random_cyclic_multigraph(rng, max_edges);
        if (lo..=hi).contains(&g.h1()) {
            return g;
        }
    }
}

fn matrixtree(rng: &mut ChaCha8Rng, max_edges: usize) -> Result<Counters, Failure> {
    let g = random_multigraph(rng, max_edges);
    let dump = write_graph(&g);
    let forests = g.first_graph_polynomial_forests();
    match h1_configuration(&g) {
        Ok(w) => {
            let det = w.psi_det().map_err(|e| fail(e.to_string(), dump.clone()))?;
            if det != forests {
                return Err(fail(format!("forests {forests} vs determinant {det}"), dump));
            }
        }
        Err(Error::ZeroConfiguration(_)) if forests == Polynomial::one(g.edge_count()) => {}
        Err(e) => return Err(fail(e.to_string(), dump)),
    }
    Ok(vec![("forest terms", forests.len())])
}

fn secondpoly(rng: &mut ChaCha8Rng, max_edges: usize) -> Result<Counters, Failure> {
    let (g, p) = loop {
        let g = random_multigraph(rng, max_edges);
        if let Some(p) = random_momentum(rng, &g) {
            break (g, p);
        }
    };
    let dump = format!("{}{}", write_graph(&g), write_momentum(&p, &g));
    let err = |e: Error| fail(e.to_string(), dump.clone());
    let cut = g.second_graph_polynomial_cutsets(&p).map_err(err)?;
    let first = phi_config(&g, &p).map_err(err)?;
    let q = random_lift(rng, &g, &p);
    let second = h1p_configuration_with_lift(&g, &p, &q).and_then(|w| w.psi_det()).map_err(err)?;
    let flipped = random_flip(rng, &g);
    let flipped_cut = flipped.second_graph_polynomial_cutsets(&p).map_err(err)?;
    let flipped_config = phi_config(&flipped, &p).map_err(err)?;
    for (name, other) in [("first lift", &first), ("second lift", &second), ("flipped cut sets", &flipped_cut), ("flipped lift", &flipped_config)] {
        if *other != cut {
            return Err(fail(format!("cut sets {cut} vs {name} {other}"), dump));
        }
    }
    Ok(vec![("cut-set terms", cut.len())])
}

fn restriction(rng: &mut ChaCha8Rng, trial: usize, max_edges: usize, input: Option<&Configuration>) -> Result<Counters, Failure> {
    let (w, is_graph, dump) = match input {
        Some(w) => (w.clone(), false, w.to_text()),
        None if trial.is_multiple_of(2) => {
            let g = random_cyclic_multigraph(rng, max_edges);
            let w = h1_configuration(&g).map_err(|e| fail(e.to_string(), write_graph(&g)))?;
            (w, true, write_graph(&g))
        }
        None => {
            let w = random_configuration(rng, 5, max_edges);
            let dump = w.to_text();
            (w, false, dump)
        }
    };
    let (mut proportional, mut unit, mut vanishing) = (0, 0, 0);
    for k in 1..w.dim() {
        let gens = singular_ideal_gens(&w, k).map_err(|e| fail(e.to_string(), dump.clone()))?;
        for pair in &gens.pairs {
            match &pair.class {
                PairClass::Proportional { constant } => {
                    proportional += 1;
                    if *constant == rat(1) {
                        unit += 1;
                    } else if is_graph {
                        return Err(fail(format!("C = {constant} for {} in a graph configuration", pair.subset), dump));
                    }
                }
                PairClass::Vanishing { .. } => vanishing += 1,
                PairClass::Inconsistent => {
                    return Err(fail(format!("pair {} (order {k}) is inconsistent", pair.subset), dump));
                }
            }
        }
    }
    Ok(vec![("proportional pairs", proportional), ("pairs with C = 1", unit), ("vanishing pairs", vanishing)])
}

/// `W` for the point-sampling suites, with `2 ≤ ℓ ≤ max_dim`.
fn point_config(
    rng: &mut ChaCha8Rng,
    max_edges: usize,
    max_dim: usize,
    input: Option<&Configuration>,
) -> (Configuration, String) {
    match input {
        Some(w) => (w.clone(), w.to_text()),
        None => {
            let g = graph_with_h1(rng, max_edges, 2, max_dim);
            (h1_configuration(&g).expect("cyclic graph"), write_graph(&g))
        }
    }
}

fn sampled(rng: &mut ChaCha8Rng, w: &Configuration, dump: &str) -> Result<Vec<Vec<Rational>>, Failure> {
    let mut points = Vec::new();
    for k in 1..w.dim() {
        let found = sample_corank_points(w, k, POINTS_PER_CORANK, rng.gen()).map_err(|e| fail(e.to_string(), dump.to_string()))?;
        points.extend(found);
    }
    Ok(points)
}

fn show(a: &[Rational]) -> String {
    a.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn theorem(rng: &mut ChaCha8Rng, max_edges: usize, input: Option<&Configuration>) -> Result<Counters, Failure> {
    let (w, dump) = point_config(rng, max_edges, usize::MAX, input);
    let points = sampled(rng, &w, &dump)?;
    for a in &points {
        let r = verify_theorem(&w, a).map_err(|e| fail(e.to_string(), dump.clone()))?;
        if !r.theorem_ok {
            return Err(fail(format!("multiplicity {} vs corank {} at ({})", r.multiplicity, r.corank, show(a)), dump));
        }
    }
    Ok(vec![("points", points.len())])
}

fn cones(rng: &mut ChaCha8Rng, max_edges: usize, input: Option<&Configuration>) -> Result<Counters, Failure> {
    let (w, dump) = point_config(rng, max_edges, usize::MAX, input);
    let points = sampled(rng, &w, &dump)?;
    for a in &points {
        let at = |e: Error| fail(format!("{e} at ({})", show(a)), dump.clone());
        let cone = tangent_cone(&w, a).map_err(at)?;
        let mult = multiplicity_at(&w, a).map_err(at)?;
        if cone.order != mult {
            return Err(fail(format!("cone degree {} vs multiplicity {mult} at ({})", cone.order, show(a)), dump));
        }
    }
    Ok(vec![("cones", points.len())])
}

fn generic(rng: &mut ChaCha8Rng, max_edges: usize, input: Option<&Configuration>) -> Result<Counters, Failure> {
    let (w, dump) = point_config(rng, max_edges, MAX_GENERIC_DIM, input);
    let pullback = generic_det_pullback(&w).map_err(|e| fail(e.to_string(), dump.clone()))?;
    if !pullback.matches {
        return Err(fail(format!("pullback {} differs from the polynomial", pullback.pullback), dump));
    }
    let points = sampled(rng, &w, &dump)?;
    for a in &points {
        let c = generic_cone_check(&w, a).map_err(|e| fail(e.to_string(), dump.clone()))?;
        if c.generic_multiplicity != c.corank || !c.cones_match {
            return Err(fail(
                format!("generic multiplicity {} corank {} cones match {} at ({})", c.generic_multiplicity, c.corank, c.cones_match, show(a)),
                dump,
            ));
        }
    }
    Ok(vec![("pullbacks", 1), ("cone checks", points.len())])
}

fn run_trial(opts: &Options, trial: usize) -> Result<Counters, Failure> {
    let rng = &mut trial_rng(opts.seed, trial);
    let input = opts.input.as_ref();
    match opts.suite {
        Suite::Matrixtree => matrixtree(rng, opts.max_edges),
        Suite::Secondpoly => secondpoly(rng, opts.max_edges),
        Suite::Restriction => restriction(rng, trial, opts.max_edges, input),
        Suite::Theorem => theorem(rng, opts.max_edges, input),
        Suite::Cones => cones(rng, opts.max_edges, input),
        Suite::Generic => generic(rng, opts.max_edges, input),
    }
}

pub fn validate(opts: &Options) -> Result<(), CliError> {
    if opts.trials == 0 {
        return Err(CliError::Invalid("--trials must be positive".into()));
    }
    if !(1..=MAX_SUITE_EDGES).contains(&opts.max_edges) {
        return Err(CliError::Invalid(format!("--max-edges must be in 1..={MAX_SUITE_EDGES}")));
    }
    let samples_points = matches!(opts.suite, Suite::Theorem | Suite::Cones | Suite::Generic);
    if samples_points && opts.input.is_none() && opts.max_edges < 2 {
        return Err(CliError::Invalid("this suite needs --max-edges >= 2 to build graphs with h1 >= 2".into()));
    }
    match (&opts.input, opts.suite) {
        (Some(_), Suite::Matrixtree | Suite::Secondpoly) => {
            Err(CliError::Invalid(format!("suite {} draws its own graphs and takes no --input", opts.suite.name())))
        }
        (Some(w), _) if samples_points && w.dim() < 2 => {
            Err(CliError::Invalid("point sampling needs a configuration of dimension >= 2".into()))
        }
        (Some(w), Suite::Generic) if w.dim() > MAX_GENERIC_DIM => {
            Err(CliError::Invalid(format!("the generic suite needs dimension <= {MAX_GENERIC_DIM}")))
        }
        _ => Ok(()),
    }
}

pub fn run(opts: &Options, json: bool) -> Result<(), CliError> {
    validate(opts)?;
    // a fixed input makes the restriction suite deterministic: one trial suffices
    let trials = if opts.input.is_some() && opts.suite == Suite::Restriction { 1 } else { opts.trials };
    let results: Vec<Result<Counters, Failure>> = (0..trials).into_par_iter().map(|t| run_trial(opts, t)).collect();

    let mut totals: Counters = Vec::new();
    let mut failures = Vec::new();
    for (t, r) in results.iter().enumerate() {
        match r {
            Ok(counters) => {
                for &(name, count) in counters {
                    match totals.iter_mut().find(|(n, _)| *n == name) {
                        Some((_, total)) => *total += count,
                        None => totals.push((name, count)),
                    }
                }
            }
            Err(f) => failures.push((t, f)),
        }
    }
    let passed = trials - failures.len();
    if json {
        let counters: serde_json::Map<String, serde_json::Value> =
            totals.iter().map(|(n, c)| (n.to_string(), json!(c))).collect();
        let fails: Vec<serde_json::Value> = failures
            .iter()
            .map(|(t, f)| json!({"trial": t, "detail": f.detail, "input": f.dump}))
            .collect();
        println!(
            "{}",
            document(vec![
                ("suite", json!(opts.suite.name())),
                ("checks", json!(opts.suite.statement())),
                ("seed", json!(opts.seed)),
                ("trials", json!(trials)),
                ("passed", json!(passed)),
                ("counters", serde_json::Value::Object(counters)),
                ("failures", json!(fails)),
            ])
        );
    } else {
        println!("suite {}: {}", opts.suite.name(), opts.suite.statement());
        println!("seed {}, {trials} trials, {passed} passed", opts.seed);
        for (name, count) in &totals {
            println!("  {name}: {count}");
        }
        for (t, f) in &failures {
            println!("trial {t} FAIL: {}", f.detail);
            for line in f.dump.lines() {
                println!("  | {line}");
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(format!("{} of {trials} trials failed", failures.len())))
    }
}
