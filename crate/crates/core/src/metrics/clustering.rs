use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{Graph, NodeId};
use crate::scalar::{ratio, Scalar};

fn common_neighbors(a: &[usize], b: &[usize]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn clustering_at<T: Scalar>(g: &Graph, i: usize) -> T {
    let k = g.deg(i) as u64;
    if k < 2 {
        return T::zero();
    }
    let own = g.nbrs(i);
    // each link among neighbours is seen from both of its ends
    let twice_links: u64 = own.iter().map(|&u| common_neighbors(own, g.nbrs(u))).sum();
    ratio(twice_links, k * (k - 1))
}

/// Fraction of neighbour pairs of `id` that are adjacent; 0 below degree 2.
pub fn local_clustering<T: Scalar>(g: &Graph, id: NodeId) -> Result<T> {
    Ok(clustering_at(g, g.require(id)?))
}

/// Local clustering of every node, ascending id.
pub fn local_clustering_all<T: Scalar>(g: &Graph) -> Vec<(NodeId, T)> {
    (0..g.n()).map(|i| (g.id(i), clustering_at(g, i))).collect()
}

/// Mean local clustering per observed degree `k >= 2`.
pub fn clustering_by_degree<T: Scalar>(g: &Graph) -> BTreeMap<usize, T> {
    let mut groups: BTreeMap<usize, (T, u64)> = BTreeMap::new();
    for i in 0..g.n() {
        let k = g.deg(i);
        if k < 2 {
            continue;
        }
        let entry = groups.entry(k).or_insert((T::zero(), 0));
        entry.0 = entry.0.clone() + clustering_at(g, i);
        entry.1 += 1;
    }
    groups.into_iter().map(|(k, (sum, count))| (k, sum / T::from_count(count))).collect()
}
