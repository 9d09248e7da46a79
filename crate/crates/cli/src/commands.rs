use serde_json::{json, Value};

use netresil::attack::{attack_sweep, default_grid, AttackCurve, Mode, Selector, SweepConfig};
use netresil::graph::RoleRecord;
use netresil::io::{format_edge_list, format_roles, parse_edge_list, parse_roles};
use netresil::metrics::{self, DegreeClass};
use netresil::powerlaw::{bootstrap_pvalue, fit_discrete_powerlaw};
use netresil::report::{self, round9};
use netresil::synth::{GeneratorKind, GeneratorSpec};
use netresil::{Graph, PowerLawFit, Role};

use crate::output::{Input, Manifest, Outputs};
use crate::{
    AggregateArgs, AttackArgs, CentralityArgs, Failure, FitArgs, Format, GenerateArgs, GeneratorName, GraphInput,
    StatsArgs,
};

fn load(input: &GraphInput, manifest: &mut Manifest) -> Result<Graph, Failure> {
    let edges = Input::read(&input.edges)?;
    manifest.input("edges", &edges);
    let list = parse_edge_list(&edges.text).map_err(|e| Failure::loading(&edges.path, e))?;
    let roles: Option<Vec<RoleRecord>> = match &input.roles {
        Some(path) => {
            let roles = Input::read(path)?;
            manifest.input("roles", &roles);
            Some(parse_roles(&roles.text).map_err(|e| Failure::loading(&roles.path, e))?)
        }
        None => None,
    };
    Graph::from_edge_list(&list, roles.as_deref()).map_err(|e| Failure::loading(&edges.path, e))
}

fn class_name(c: DegreeClass) -> &'static str {
    match c {
        DegreeClass::A => "A",
        DegreeClass::B => "B",
        DegreeClass::C => "C",
    }
}

pub fn stats(args: StatsArgs) -> Result<(), Failure> {
    let mut manifest = Manifest::new("stats");
    let g = load(&args.input, &mut manifest)?;
    manifest.param("lo", args.lo);
    manifest.param("hi", args.hi);

    let classes = metrics::classify_by_degree(&g, args.lo, args.hi)?;
    let ccdf = metrics::degree_ccdf::<f64>(&g)?;
    let mut out = Outputs::new();
    out.json("summary.json", &metrics::summarize::<f64>(&g).to_json());
    out.add("degrees.csv", report::degrees_csv(&g));
    out.add("ccdf.csv", report::ccdf_csv(&ccdf));
    out.add("degree_rank.csv", report::degree_rank_csv(&metrics::degree_rank(&g)));
    out.add("clustering_by_degree.csv", report::clustering_by_degree_csv(&metrics::clustering_by_degree(&g)));

    let mut csv = String::from("node,degree,class\n");
    for (id, class) in &classes {
        csv.push_str(&format!("{id},{},{}\n", g.degree(*id)?, class_name(*class)));
    }
    out.add("classes.csv", csv);

    if args.input.roles.is_some() {
        let mut csv = String::from("node,role,degree,class\n");
        for (id, role) in g.roles().filter(|(_, r)| *r != Role::Unknown) {
            csv.push_str(&format!("{id},{role},{},{}\n", g.degree(id)?, class_name(classes[&id])));
        }
        out.add("role_degrees.csv", csv);
    }
    out.commit(&args.out.out, &manifest)
}

pub fn centrality(args: CentralityArgs) -> Result<(), Failure> {
    let mut manifest = Manifest::new("centrality");
    let g = load(&args.input, &mut manifest)?;
    manifest.param("kind", args.kind);
    let scores = metrics::centrality::<f64>(&g, args.kind);
    let mut out = Outputs::new();
    match args.format {
        Format::Csv => {
            manifest.param("format", "csv");
            out.add("scores.csv", report::scores_csv(&scores));
        }
        Format::Json => {
            manifest.param("format", "json");
            let rows: Vec<Value> =
                scores.ranked().map(|(node, s)| json!({ "node": node, "score": round9(*s) })).collect();
            out.json("scores.json", &json!({ "kind": args.kind, "scores": rows }));
        }
    }
    out.commit(&args.out.out, &manifest)
}

fn curve_json(c: &AttackCurve) -> Value {
    let points: Vec<Value> = c
        .points
        .iter()
        .map(|p| {
            json!({
                "f": round9(p.f),
                "removed": p.removed,
                "scc_fraction": round9(p.scc_fraction),
                "scc_abs": p.scc_abs,
                "apl": p.apl.map(round9),
                "apl_defined_trials": p.apl_defined_trials,
            })
        })
        .collect();
    json!({
        "selector": c.strategy.selector.as_str(),
        "mode": c.strategy.mode.as_str(),
        "trials": c.strategy.trials,
        "seed": c.strategy.seed,
        "points": points,
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn attack(args: AttackArgs) -> Result<(), Failure> {
    let mut manifest = Manifest::new("attack");
    let g = load(&args.input, &mut manifest)?;
    let selectors = if args.selectors.is_empty() { Selector::ALL.to_vec() } else { args.selectors };
    let modes = if args.modes.is_empty() { vec![Mode::Parallel] } else { args.modes };
    let f_grid = if args.grid.is_empty() { default_grid() } else { args.grid };
    let config = SweepConfig { f_grid, f_max: args.f_max, trials: args.trials, seed: args.seed };

    manifest.seed(args.seed);
    manifest.param("selectors", join(&selectors));
    manifest.param("modes", join(&modes));
    manifest.param("grid", join(&config.f_grid));
    manifest.param("f_max", config.f_max);
    manifest.param("trials", config.trials);

    let curves = attack_sweep(&g, &selectors, &modes, &config)?;
    let mut out = Outputs::new();
    match args.format {
        Format::Csv => {
            manifest.param("format", "csv");
            out.add("curves.csv", report::curves_csv(&curves));
        }
        Format::Json => {
            manifest.param("format", "json");
            out.json("curves.json", &curves.iter().map(curve_json).collect::<Vec<_>>());
        }
    }
    out.commit(&args.out.out, &manifest)
}

pub fn fit(args: FitArgs) -> Result<(), Failure> {
    let mut manifest = Manifest::new("fit");
    let g = load(&args.input, &mut manifest)?;
    manifest.seed(args.seed);
    let degrees: Vec<u64> = g.degrees().map(|(_, k)| k as u64).collect();
    let mut fit: PowerLawFit = fit_discrete_powerlaw(&degrees)?;
    if fit.zeros_dropped > 0 {
        eprintln!("note: dropped {} zero-degree nodes before fitting", fit.zeros_dropped);
    }
    if let Some(reps) = args.bootstrap_reps {
        manifest.param("bootstrap_reps", reps);
        fit.p_value = Some(bootstrap_pvalue(&degrees, &fit, reps, args.seed)?);
    }
    let mut out = Outputs::new();
    out.json("fit.json", &fit.to_json());
    out.commit(&args.out.out, &manifest)
}

fn required<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required for --kind {kind}")))
}

pub fn generate(args: GenerateArgs) -> Result<(), Failure> {
    let mut manifest = Manifest::new("generate");
    manifest.seed(args.seed);
    manifest.param("n", args.n);
    let kind = match args.kind {
        GeneratorName::Er => {
            let p = required(args.p, "p", "er")?;
            manifest.param("kind", "er");
            manifest.param("p", p);
            GeneratorKind::ErdosRenyi { n: args.n, p }
        }
        GeneratorName::Pa => {
            let m = required(args.m, "m", "pa")?;
            manifest.param("kind", "pa");
            manifest.param("m", m);
            GeneratorKind::PreferentialAttachment { n: args.n, m }
        }
        GeneratorName::Config => {
            let alpha = required(args.alpha, "alpha", "config")?;
            manifest.param("kind", "config");
            manifest.param("alpha", alpha);
            manifest.param("kmin", args.kmin);
            GeneratorKind::ConfigPowerLaw { n: args.n, alpha, kmin: args.kmin }
        }
        GeneratorName::TwoClan => {
            let clan_density = required(args.density, "density", "two-clan")?;
            let liaison_count = required(args.liaisons, "liaisons", "two-clan")?;
            manifest.param("kind", "two-clan");
            manifest.param("density", clan_density);
            manifest.param("liaisons", liaison_count);
            manifest.param("bosses", args.bosses);
            GeneratorKind::DenseTwoClan { n: args.n, clan_density, liaison_count, boss_count: args.bosses }
        }
    };
    let g = GeneratorSpec { kind, seed: args.seed }.generate()?;
    let mut out = Outputs::new();
    out.add("edges.csv", format_edge_list(&g));
    out.add("roles.csv", format_roles(&g));
    out.commit(&args.out.out, &manifest)
}

pub fn aggregate(args: AggregateArgs) -> Result<(), Failure> {
    let [first, second] = args.edges.as_slice() else {
        return Err(Failure::usage(format!("aggregate needs exactly two --edges files, got {}", args.edges.len())));
    };
    let mut manifest = Manifest::new("aggregate");
    let mut layers = Vec::with_capacity(2);
    for path in [first, second] {
        let input = GraphInput { edges: path.clone(), roles: None };
        layers.push(load(&input, &mut manifest)?);
    }
    let union = layers[0].aggregate_union(&layers[1]);
    let overlap = layers[0].shared_edge_count(&layers[1]);
    let mut out = Outputs::new();
    out.add("edges.csv", format_edge_list(&union));
    out.commit(&args.out.out, &manifest)?;
    println!("overlap {overlap}");
    println!("edges {}", union.edge_count());
    Ok(())
}
