//! Vertex-removal attacks and the resulting degradation curves.
//!
//! A parallel attack ranks nodes once on the intact graph and removes the
//! top `floor(f * |V|)` for each fraction `f`. A sequential attack removes
//! one node at a time, re-ranking the remnant after every removal. Random
//! selection averages over independent trials; trial `t` is seeded with
//! `seed + t`, so results do not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{centrality, largest_component_size, path_stats, CentralityKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Selector {
    Random,
    Degree,
    Betweenness,
    Closeness,
}

impl Selector {
    pub const ALL: [Selector; 4] = [Selector::Random, Selector::Degree, Selector::Betweenness, Selector::Closeness];

    pub fn as_str(self) -> &'static str {
        match self {
            Selector::Random => "random",
            Selector::Degree => "dc",
            Selector::Betweenness => "bc",
            Selector::Closeness => "cc",
        }
    }

    pub fn centrality_kind(self) -> Option<CentralityKind> {
        match self {
            Selector::Random => None,
            Selector::Degree => Some(CentralityKind::Degree),
            Selector::Betweenness => Some(CentralityKind::Betweenness),
            Selector::Closeness => Some(CentralityKind::Closeness),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "random" => Ok(Selector::Random),
            other => other
                .parse::<CentralityKind>()
                .map(|k| match k {
                    CentralityKind::Degree => Selector::Degree,
                    CentralityKind::Betweenness => Selector::Betweenness,
                    CentralityKind::Closeness => Selector::Closeness,
                })
                .map_err(|_| format!("unknown selector {other:?} (expected random, dc, bc or cc)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Parallel,
    Sequential,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Parallel, Mode::Sequential];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Parallel => "parallel",
            Mode::Sequential => "sequential",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "parallel" => Ok(Mode::Parallel),
            "sequential" => Ok(Mode::Sequential),
            other => Err(format!("unknown mode {other:?} (expected parallel or sequential)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttackStrategy {
    pub selector: Selector,
    pub mode: Mode,
    /// Always 1 for targeted selectors.
    pub trials: usize,
    pub seed: u64,
}

/// State of the remnant after removing `removed` nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePoint {
    pub f: f64,
    pub removed: usize,
    /// Largest component size over the ORIGINAL node count.
    pub scc_fraction: f64,
    /// Largest component size (mean over trials, rounded, for random attacks).
    pub scc_abs: usize,
    /// Mean APL over the trials where it is defined.
    pub apl: Option<f64>,
    pub apl_defined_trials: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttackCurve {
    pub strategy: AttackStrategy,
    pub points: Vec<CurvePoint>,
}

impl AttackCurve {
    pub fn f_grid(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.f).collect()
    }

    /// Point recorded at fraction `f`, if any.
    pub fn at(&self, f: f64) -> Option<&CurvePoint> {
        self.points.iter().find(|p| (p.f - f).abs() < 1e-12)
    }
}

/// `floor(f * n)`, tolerant of binary rounding just below an integer.
pub fn victim_count(f: f64, n: usize) -> usize {
    (f * n as f64 + 1e-9).floor() as usize
}

/// Fractions `0.01, 0.02, ..., 0.25`.
pub fn default_grid() -> Vec<f64> {
    (1..=25).map(|i| i as f64 / 100.0).collect()
}

#[derive(Clone, Copy, Debug)]
struct Measurement {
    scc: usize,
    apl: Option<f64>,
}

fn measure(g: &Graph) -> Measurement {
    Measurement { scc: largest_component_size(g), apl: path_stats(g).average::<f64>().ok() }
}

fn check_graph(g: &Graph) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::invalid("need at least one trial"));
    }
    Ok(())
}

/// Points from per-trial measurements taken at the same removal counts.
fn average(n: usize, fs: &[f64], counts: &[usize], trials: &[Vec<Measurement>]) -> Vec<CurvePoint> {
    let t = trials.len() as f64;
    (0..counts.len())
        .map(|i| {
            let mean_scc = trials.iter().map(|m| m[i].scc as f64).sum::<f64>() / t;
            let defined: Vec<f64> = trials.iter().filter_map(|m| m[i].apl).collect();
            let apl = if defined.is_empty() { None } else { Some(defined.iter().sum::<f64>() / defined.len() as f64) };
            CurvePoint {
                f: fs[i],
                removed: counts[i],
                scc_fraction: mean_scc / n as f64,
                scc_abs: mean_scc.round() as usize,
                apl,
                apl_defined_trials: defined.len(),
            }
        })
        .collect()
}

/// Remnants after removing prefixes of `order` of each length in `counts`.
fn prefix_measurements(g: &Graph, order: &[usize], counts: &[usize]) -> Vec<Measurement> {
    let mut keep = vec![true; g.n()];
    let mut done = 0;
    counts
        .iter()
        .map(|&k| {
            for &v in &order[done..k] {
                keep[v] = false;
            }
            done = k;
            measure(&g.retain(&keep))
        })
        .collect()
}

fn random_trials(g: &Graph, counts: &[usize], trials: usize, seed: u64) -> Vec<Vec<Measurement>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t));
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rng);
            prefix_measurements(g, &order, counts)
        })
        .collect()
}

/// Simultaneous removal of a fraction `f` of nodes for each `f` in the grid.
/// The curve always starts with the intact graph at `f = 0`.
pub fn parallel_attack(g: &Graph, selector: Selector, f_grid: &[f64], trials: usize, seed: u64) -> Result<AttackCurve> {
    check_graph(g)?;
    check_trials(trials)?;
    if let Some(bad) = f_grid.iter().find(|f| !(0.0..1.0).contains(*f)) {
        return Err(Error::invalid(format!("removal fraction must lie in [0, 1), got {bad}")));
    }
    let mut fs: Vec<f64> = std::iter::once(0.0).chain(f_grid.iter().copied()).collect();
    fs.sort_by(f64::total_cmp);
    fs.dedup();
    let n = g.n();
    let counts: Vec<usize> = fs.iter().map(|&f| victim_count(f, n)).collect();

    let (trials, runs) = match selector.centrality_kind() {
        None => (trials, random_trials(g, &counts, trials, seed)),
        Some(kind) => {
            let scores = centrality::<f64>(g, kind);
            let order: Vec<usize> = scores.ranking().iter().map(|&id| g.index_of(id).unwrap()).collect();
            (1, vec![prefix_measurements(g, &order, &counts)])
        }
    };
    Ok(AttackCurve {
        strategy: AttackStrategy { selector, mode: Mode::Parallel, trials, seed },
        points: average(n, &fs, &counts, &runs),
    })
}

/// One-at-a-time removal until `floor(f_max * |V|)` nodes are gone. Targeted
/// selectors recompute centrality on the remnant before each removal; the
/// random selector removes a uniformly chosen survivor. One point per
/// removal, with `f` relative to the original node count.
pub fn sequential_attack(g: &Graph, selector: Selector, f_max: f64, trials: usize, seed: u64) -> Result<AttackCurve> {
    check_graph(g)?;
    check_trials(trials)?;
    if !(f_max > 0.0 && f_max < 1.0) {
        return Err(Error::invalid(format!("sequential f_max must lie in (0, 1), got {f_max}")));
    }
    let n = g.n();
    let steps = victim_count(f_max, n);
    let counts: Vec<usize> = (0..=steps).collect();
    let fs: Vec<f64> = counts.iter().map(|&k| k as f64 / n as f64).collect();

    let (trials, runs) = match selector.centrality_kind() {
        None => (trials, random_trials(g, &counts, trials, seed)),
        Some(kind) => {
            let mut current = g.clone();
            let mut run = vec![measure(&current)];
            for _ in 0..steps {
                let top = centrality::<f64>(&current, kind).ranking()[0];
                current = current.remove_nodes(&[top])?;
                run.push(measure(&current));
            }
            (1, vec![run])
        }
    };
    Ok(AttackCurve {
        strategy: AttackStrategy { selector, mode: Mode::Sequential, trials, seed },
        points: average(n, &fs, &counts, &runs),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    /// Fractions for parallel attacks.
    pub f_grid: Vec<f64>,
    /// Removal budget for sequential attacks.
    pub f_max: f64,
    /// Trials for random selection.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { f_grid: default_grid(), f_max: 0.30, trials: 100, seed: 0 }
    }
}

/// One curve per `(selector, mode)` pair, selector-major, all from the same
/// intact graph and master seed.
pub fn attack_sweep(
    g: &Graph,
    selectors: &[Selector],
    modes: &[Mode],
    config: &SweepConfig,
) -> Result<Vec<AttackCurve>> {
    if selectors.is_empty() || modes.is_empty() {
        return Err(Error::invalid("attack sweep needs at least one selector and one mode"));
    }
    let jobs: Vec<(Selector, Mode)> = selectors.iter().flat_map(|&s| modes.iter().map(move |&m| (s, m))).collect();
    jobs.into_par_iter()
        .map(|(selector, mode)| match mode {
            Mode::Parallel => parallel_attack(g, selector, &config.f_grid, config.trials, config.seed),
            Mode::Sequential => sequential_attack(g, selector, config.f_max, config.trials, config.seed),
        })
        .collect()
}
