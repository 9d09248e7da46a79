//! CSV renderings of metric and attack results.
//!
//! Every real number is written with exactly nine decimals so reruns can be
//! compared byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::attack::AttackCurve;
use crate::graph::Graph;
use crate::metrics::{CcdfPoint, CentralityScores, DegreeRank};

/// Fixed nine-decimal text form. Negative zero prints as zero.
pub fn fixed9(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000".to_owned();
    }
    format!("{x:.9}")
}

/// Rounds to nine decimals, for JSON output.
pub fn round9(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// `node,score` in ranking order.
pub fn scores_csv(scores: &CentralityScores<f64>) -> String {
    let mut s = String::from("node,score\n");
    for (id, v) in scores.ranked() {
        let _ = writeln!(s, "{id},{}", fixed9(*v));
    }
    s
}

/// `node,degree` in ascending id order.
pub fn degrees_csv(g: &Graph) -> String {
    let mut s = String::from("node,degree\n");
    for (id, k) in g.degrees() {
        let _ = writeln!(s, "{id},{k}");
    }
    s
}

pub fn ccdf_csv(points: &[CcdfPoint<f64>]) -> String {
    let mut s = String::from("k,prob\n");
    for p in points {
        let _ = writeln!(s, "{},{}", p.k, fixed9(p.prob));
    }
    s
}

pub fn degree_rank_csv(ranks: &[DegreeRank]) -> String {
    let mut s = String::from("rank,node,degree\n");
    for r in ranks {
        let _ = writeln!(s, "{},{},{}", r.rank, r.node, r.degree);
    }
    s
}

pub fn clustering_by_degree_csv(acc: &BTreeMap<usize, f64>) -> String {
    let mut s = String::from("k,acc\n");
    for (k, v) in acc {
        let _ = writeln!(s, "{k},{}", fixed9(*v));
    }
    s
}

pub const CURVE_HEADER: &str = "selector,mode,f,scc_fraction,scc_abs,apl,apl_defined_trials";

/// One row per curve point; `apl` is empty where undefined.
pub fn curves_csv(curves: &[AttackCurve]) -> String {
    let mut s = format!("{CURVE_HEADER}\n");
    for c in curves {
        for p in &c.points {
            let apl = p.apl.map(fixed9).unwrap_or_default();
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{}",
                c.strategy.selector,
                c.strategy.mode,
                fixed9(p.f),
                fixed9(p.scc_fraction),
                p.scc_abs,
                apl,
                p.apl_defined_trials
            );
        }
    }
    s
}
