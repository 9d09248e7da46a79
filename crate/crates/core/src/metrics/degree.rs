use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::scalar::{ratio, Scalar};

/// One point of the complementary cumulative degree distribution:
/// the fraction of nodes whose degree is strictly greater than `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct CcdfPoint<T = f64> {
    pub k: usize,
    pub prob: T,
}

/// CCDF evaluated at each observed degree, ascending in `k`.
pub fn degree_ccdf<T: Scalar>(g: &Graph) -> Result<Vec<CcdfPoint<T>>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.n() as u64;
    let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
    for i in 0..g.n() {
        *hist.entry(g.deg(i)).or_default() += 1;
    }
    let mut above = n;
    Ok(hist
        .into_iter()
        .map(|(k, count)| {
            above -= count;
            CcdfPoint { k, prob: ratio(above, n) }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRank {
    pub rank: usize,
    pub node: NodeId,
    pub degree: usize,
}

/// Nodes by descending degree, ties by ascending id, ranks from 1.
pub fn degree_rank(g: &Graph) -> Vec<DegreeRank> {
    let mut order: Vec<(NodeId, usize)> = g.degrees().collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    order.into_iter().enumerate().map(|(i, (node, degree))| DegreeRank { rank: i + 1, node, degree }).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DegreeClass {
    A,
    B,
    C,
}

/// Class boundaries: `A` for `k <= lo`, `B` for `lo < k <= hi`, `C` above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeThresholds {
    lo: usize,
    hi: usize,
}

impl Default for DegreeThresholds {
    fn default() -> Self {
        DegreeThresholds { lo: 15, hi: 85 }
    }
}

impl DegreeThresholds {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo >= hi {
            return Err(Error::invalid(format!("degree thresholds need lo < hi, got {lo} >= {hi}")));
        }
        Ok(DegreeThresholds { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn classify(&self, k: usize) -> DegreeClass {
        if k <= self.lo {
            DegreeClass::A
        } else if k <= self.hi {
            DegreeClass::B
        } else {
            DegreeClass::C
        }
    }
}

pub fn classify_by_degree(g: &Graph, lo: usize, hi: usize) -> Result<BTreeMap<NodeId, DegreeClass>> {
    let t = DegreeThresholds::new(lo, hi)?;
    Ok(g.degrees().map(|(id, k)| (id, t.classify(k))).collect())
}
