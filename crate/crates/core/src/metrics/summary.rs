use serde_json::json;

use super::components::{component_count, largest_component_size};
use super::paths::path_stats;
use crate::graph::Graph;
use crate::report::round9;
use crate::scalar::{ratio, Scalar};

/// Headline statistics of a network. `apl` and `diameter` are absent when
/// no pair of nodes is connected.
#[derive(Clone, Debug, PartialEq)]
pub struct NetworkSummary<T = f64> {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub mean_degree: T,
    pub apl: Option<T>,
    pub diameter: Option<usize>,
    pub component_count: usize,
    pub largest_component_fraction: T,
}

pub fn summarize<T: Scalar>(g: &Graph) -> NetworkSummary<T> {
    let n = g.node_count() as u64;
    let stats = path_stats(g);
    let apl = stats.average().ok();
    NetworkSummary {
        vertex_count: g.node_count(),
        edge_count: g.edge_count(),
        mean_degree: ratio(2 * g.edge_count() as u64, n),
        diameter: apl.as_ref().map(|_| stats.diameter),
        apl,
        component_count: component_count(g),
        largest_component_fraction: ratio(largest_component_size(g) as u64, n),
    }
}

impl NetworkSummary<f64> {
    /// JSON object keyed by field name; floats rounded to 9 decimals.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "mean_degree": round9(self.mean_degree),
            "apl": self.apl.map(round9),
            "diameter": self.diameter,
            "component_count": self.component_count,
            "largest_component_fraction": round9(self.largest_component_fraction),
        })
    }
}
