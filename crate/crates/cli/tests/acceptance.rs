//! Acceptance suite: one line per criterion, nonzero exit if any fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use netresil::attack::{default_grid, parallel_attack, sequential_attack, victim_count, AttackCurve};
use netresil::metrics::{self, CentralityKind};
use netresil::powerlaw::{fit_discrete_powerlaw, sample_powerlaw};
use netresil::synth::{dense_two_clan, erdos_renyi, preferential_attachment};
use netresil::{Exact, Graph, NodeId, Role, Selector};
use num_rational::Rational64 as Q;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn to_f64(q: &Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn c1_oracle() -> Outcome {
    let mut mismatches = Vec::new();
    for seed in 0..200u64 {
        let s = oracle::random_small(seed, 10);
        let g = s.graph();
        let mut bad = |what: &str| mismatches.push(format!("seed {seed}: {what}"));

        let want = [oracle::degree_scores(&s), oracle::betweenness(&s), oracle::closeness(&s)];
        for (kind, want) in CentralityKind::ALL.into_iter().zip(&want) {
            let exact = metrics::centrality::<Exact>(&g, kind);
            let float = metrics::centrality::<f64>(&g, kind);
            for (i, &id) in s.ids.iter().enumerate() {
                if exact.score(id) != Some(&want[i]) || (float.score(id).unwrap() - to_f64(&want[i])).abs() > 1e-9 {
                    bad(kind.as_str());
                }
            }
        }
        for (i, acc) in oracle::clustering(&s).iter().enumerate() {
            if metrics::local_clustering::<Exact>(&g, s.ids[i]).unwrap() != *acc {
                bad("clustering");
            }
        }
        let comps = oracle::components(&s);
        let (members, share) = metrics::largest_component::<Exact>(&g);
        if members != comps[0] || share != Q::new(comps[0].len() as i64, s.n() as i64) {
            bad("largest component");
        }
        match oracle::apl_and_diameter(&s) {
            Some((apl, diam)) => {
                if metrics::average_path_length::<Exact>(&g).ok() != Some(apl)
                    || metrics::diameter(&g).ok() != Some(diam as usize)
                {
                    bad("apl/diameter");
                }
            }
            None => {
                if metrics::average_path_length::<Exact>(&g).is_ok() {
                    bad("apl defined without pairs");
                }
            }
        }
    }
    let pass = mismatches.is_empty();
    let detail = if pass {
        "200 graphs, all scores exact".to_owned()
    } else {
        format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
    };
    outcome(pass, detail)
}

/// Two layers shaped like the contact and criminal networks: 1716 and 104
/// nodes sharing 98, with exactly seven common edges.
fn layer_fixture() -> (Graph, Graph) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut first: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    for v in 1..1716u64 {
        first.insert((rng.gen_range(0..v), v));
    }
    while first.len() < 8481 {
        let (a, b) = (rng.gen_range(0..1716u64), rng.gen_range(0..1716u64));
        if a != b {
            first.insert((a.min(b), a.max(b)));
        }
    }
    // layer two: nodes 0..98 shared, 1716..1722 new
    let nodes: Vec<NodeId> = (0..98).chain(1716..1722).collect();
    let shared: Vec<(NodeId, NodeId)> = first.iter().copied().filter(|&(a, b)| a < 98 && b < 98).take(7).collect();
    let mut second: BTreeSet<(NodeId, NodeId)> = shared.iter().copied().collect();
    while second.len() < 2596 {
        let i = index::sample(&mut rng, nodes.len(), 2);
        let (a, b) = (nodes[i.index(0)], nodes[i.index(1)]);
        let e = (a.min(b), a.max(b));
        if !first.contains(&e) {
            second.insert(e);
        }
    }
    let g1 = Graph::from_parts(0..1716, first).unwrap();
    let g2 = Graph::from_parts(nodes, second).unwrap();
    (g1, g2)
}

fn c2_table() -> Outcome {
    let (g1, g2) = layer_fixture();
    let union = g1.aggregate_union(&g2);
    let mut parts = Vec::new();
    let mut pass = true;
    for (g, v, e, want) in [(&g1, 1716, 8481, "9.88"), (&g2, 104, 2596, "49.92"), (&union, 1722, 11070, "12.86")] {
        let s = metrics::summarize::<f64>(g);
        let got = format!("{:.2}", s.mean_degree);
        pass &= s.vertex_count == v && s.edge_count == e && got == want;
        parts.push(format!("({}, {}) -> {got}", s.vertex_count, s.edge_count));
    }
    let overlap = g1.shared_edge_count(&g2);
    pass &= overlap == 7;
    outcome(pass, format!("{}; overlap {overlap}", parts.join(", ")))
}

fn c3_fitter() -> Outcome {
    let alphas: Vec<f64> = (0..10)
        .map(|seed| {
            let sample = sample_powerlaw(2.5, 1, 10_000, seed).unwrap();
            fit_discrete_powerlaw::<f64>(&sample).unwrap().alpha
        })
        .collect();
    let inside = alphas.iter().filter(|a| (2.4..=2.6).contains(*a)).count();
    let lo = alphas.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = alphas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    outcome(inside >= 9, format!("{inside}/10 seeds in [2.4, 2.6], alpha range [{lo:.3}, {hi:.3}]"))
}

/// Largest `|scc_fraction - (1 - f)|` over curve points with `f <= 0.25`.
fn worst_linear_gap(curve: &AttackCurve) -> f64 {
    curve
        .points
        .iter()
        .filter(|p| p.f <= 0.25 + 1e-12)
        .map(|p| (p.scc_fraction - (1.0 - p.f)).abs())
        .fold(0.0, f64::max)
}

fn c4_homogeneous() -> Outcome {
    let g = erdos_renyi(1000, 0.01, 0).unwrap();
    let curve = parallel_attack(&g, Selector::Random, &default_grid(), 100, 0).unwrap();
    let gap = worst_linear_gap(&curve);
    let k = 2.0 * g.edge_count() as f64 / 1000.0;
    outcome(gap <= 0.05, format!("mean degree {k:.2}, worst |scc - (1 - f)| = {gap:.4}"))
}

fn c5_heterogeneous() -> Outcome {
    let g = preferential_attachment(1716, 5, 0).unwrap();
    let at = |selector| {
        let curve = parallel_attack(&g, selector, &default_grid(), 100, 0).unwrap();
        curve.at(0.25).unwrap().scc_fraction
    };
    let (random, dc, bc) = (at(Selector::Random), at(Selector::Degree), at(Selector::Betweenness));
    let fragile = dc < 0.5 * random;
    let ordered = dc <= bc + 0.03 && bc <= random + 0.03;
    outcome(
        fragile && ordered,
        format!(
            "f = 0.25: random {random:.3}, dc {dc:.3}, bc {bc:.3}; dc < 0.5 x random: {fragile}, ordering: {ordered}"
        ),
    )
}

fn c6_dense() -> Outcome {
    let g = dense_two_clan(104, 0.97, 4, 5, 0).unwrap();
    let mean_degree = 2.0 * g.edge_count() as f64 / 104.0;
    let acc: Vec<f64> = g
        .roles()
        .filter(|(_, r)| *r != Role::Boss)
        .map(|(v, _)| metrics::local_clustering::<f64>(&g, v).unwrap())
        .collect();
    let mean_acc = acc.iter().sum::<f64>() / acc.len() as f64;
    let mut pass = (45.0..=55.0).contains(&mean_degree) && mean_acc > 0.6;
    let mut gaps = Vec::new();
    for selector in [Selector::Degree, Selector::Betweenness, Selector::Closeness] {
        let gap = worst_linear_gap(&parallel_attack(&g, selector, &default_grid(), 1, 0).unwrap());
        pass &= gap <= 0.05;
        gaps.push(format!("{selector} {gap:.3}"));
    }
    outcome(
        pass,
        format!("mean degree {mean_degree:.2}, non-boss clustering {mean_acc:.3}, worst gap {}", gaps.join(", ")),
    )
}

fn c7_sequential() -> Outcome {
    let (mut dominated, mut strict) = (0, 0);
    let mut at_005 = Vec::new();
    for seed in 0..10 {
        let g = dense_two_clan(104, 0.97, 4, 5, seed).unwrap();
        let par = parallel_attack(&g, Selector::Closeness, &default_grid(), 1, 0).unwrap();
        let seq = sequential_attack(&g, Selector::Closeness, 0.25, 1, 0).unwrap();
        // compare after the same number of removals
        let seq_at = |k: usize| seq.points[k].scc_fraction;
        if par.points.iter().all(|p| seq_at(p.removed) <= p.scc_fraction + 1e-12) {
            dominated += 1;
        }
        let k = victim_count(0.05, 104);
        let (s, p) = (seq_at(k), par.at(0.05).unwrap().scc_fraction);
        if s < p {
            strict += 1;
        }
        at_005.push(format!("{s:.3}/{p:.3}"));
    }
    outcome(
        dominated == 10 && strict == 10,
        format!(
            "seq <= par everywhere in {dominated}/10 seeds, strict at f = 0.05 in {strict}/10 (seq/par: {})",
            at_005.join(" ")
        ),
    )
}

fn run_cli(args: &[&str], out: &Path) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_netresil"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    if status.status.success() {
        Ok(())
    } else {
        Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&status.stderr).trim()))
    }
}

fn dir_contents(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}

fn c8_determinism() -> Outcome {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path();
    let path = |name: &str| -> PathBuf { root.join(name) };
    let s = |p: &Path| p.to_str().unwrap().to_owned();

    let setup = || -> Result<(), String> {
        run_cli(
            &["generate", "--kind", "two-clan", "--n", "60", "--density", "0.9", "--liaisons", "3", "--bosses", "4"],
            &path("clan"),
        )?;
        run_cli(&["generate", "--kind", "pa", "--n", "2000", "--m", "3", "--seed", "5"], &path("pa"))
    };
    if let Err(e) = setup() {
        return outcome(false, e);
    }
    let clan = s(&path("clan/edges.csv"));
    let roles = s(&path("clan/roles.csv"));
    let pa = s(&path("pa/edges.csv"));

    let invocations: Vec<(&str, Vec<String>)> = vec![
        ("stats", vec!["stats".into(), "--edges".into(), clan.clone(), "--roles".into(), roles.clone()]),
        ("centrality", vec!["centrality".into(), "--edges".into(), clan.clone(), "--kind".into(), "bc".into()]),
        (
            "attack",
            ["attack", "--edges", &clan, "--selector", "random", "--selector", "cc", "--mode", "parallel"]
                .into_iter()
                .chain(["--mode", "sequential", "--f-max", "0.1", "--trials", "20", "--seed", "3"])
                .map(String::from)
                .collect(),
        ),
        (
            "fit",
            ["fit", "--edges", &pa, "--bootstrap-reps", "100", "--seed", "11"].into_iter().map(String::from).collect(),
        ),
        (
            "generate",
            ["generate", "--kind", "config", "--n", "3000", "--alpha", "2.5", "--seed", "2"]
                .into_iter()
                .map(String::from)
                .collect(),
        ),
        ("aggregate", vec!["aggregate".into(), "--edges".into(), clan.clone(), "--edges".into(), pa.clone()]),
    ];
    let mut problems = Vec::new();
    for (name, args) in &invocations {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (path(&format!("{name}-1")), path(&format!("{name}-2")));
        if let Err(e) = run_cli(&args, &a).and_then(|_| run_cli(&args, &b)) {
            problems.push(e);
            continue;
        }
        let (x, y) = (dir_contents(&a), dir_contents(&b));
        if x != y || x.len() < 2 {
            problems.push(format!("{name}: outputs differ"));
        }
    }
    let pass = problems.is_empty();
    outcome(pass, if pass { "6 subcommands byte-identical on rerun".to_owned() } else { problems.join("; ") })
}

type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("C1", "oracle equivalence", Duration::from_secs(10), c1_oracle),
        ("C2", "table arithmetic and aggregation", Duration::from_secs(1), c2_table),
        ("C3", "power-law fitter recovery", Duration::from_secs(30), c3_fitter),
        ("C4", "homogeneous robustness", Duration::from_secs(120), c4_homogeneous),
        ("C5", "heterogeneous fragility", Duration::MAX, c5_heterogeneous),
        ("C6", "dense-network resilience", Duration::MAX, c6_dense),
        ("C7", "sequential dominance", Duration::MAX, c7_sequential),
        ("C8", "determinism", Duration::MAX, c8_determinism),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if elapsed > budget {
            result.pass = false;
            result.detail = format!("{} (over the {:.0?} budget)", result.detail, budget);
        }
        if !result.pass {
            failed += 1;
        }
        let verdict = if result.pass { "PASS" } else { "FAIL" };
        println!("{id} {verdict} {name} [{:.2}s]: {}", elapsed.as_secs_f64(), result.detail);
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
