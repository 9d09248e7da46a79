use std::collections::VecDeque;

use crate::graph::{Graph, NodeId};
use crate::scalar::{ratio, Scalar};

/// Component label per dense index plus the size of each label. Labels are
/// assigned in order of each component's smallest node id.
fn labels(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        label[s] = c;
        queue.push_back(s);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &v in g.nbrs(u) {
                if label[v] == usize::MAX {
                    label[v] = c;
                    queue.push_back(v);
                }
            }
        }
        sizes.push(size);
    }
    (label, sizes)
}

/// Components ordered by size (largest first), ties by smallest member id.
/// Members are listed in ascending id order.
pub fn connected_components(g: &Graph) -> Vec<Vec<NodeId>> {
    let (label, sizes) = labels(g);
    let mut comps: Vec<Vec<NodeId>> = sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
    for (i, &c) in label.iter().enumerate() {
        comps[c].push(g.id(i));
    }
    // stable sort keeps smallest-id order among equal sizes
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    comps
}

pub fn component_count(g: &Graph) -> usize {
    labels(g).1.len()
}

/// Largest connected component and its share of all nodes. Ties go to the
/// component holding the smallest node id; an empty graph yields `([], 0)`.
pub fn largest_component<T: Scalar>(g: &Graph) -> (Vec<NodeId>, T) {
    let n = g.node_count() as u64;
    match connected_components(g).into_iter().next() {
        Some(c) => {
            let len = c.len() as u64;
            (c, ratio(len, n))
        }
        None => (Vec::new(), T::zero()),
    }
}

pub(crate) fn largest_component_size(g: &Graph) -> usize {
    labels(g).1.into_iter().max().unwrap_or(0)
}
