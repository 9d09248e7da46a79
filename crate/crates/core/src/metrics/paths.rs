//! All-pairs hop-distance aggregates.
//!
//! Distances are computed with a bit-parallel BFS: 256 sources advance in
//! lock-step, each node carrying a bitmask of the sources that have reached
//! it. One level costs a pass over the adjacency per batch instead of per
//! source, which is what makes repeated APL evaluation in attack sweeps
//! affordable.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{ratio, Scalar};

const WORDS: usize = 4;
const BATCH: usize = 64 * WORDS;

type Mask = [u64; WORDS];

/// Per-node distance sums and reach counts over mutually reachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    /// Sum of hop distances from each node to every other node it reaches.
    pub farness: Vec<u64>,
    /// Number of other nodes each node reaches.
    pub reach: Vec<u64>,
    /// Largest finite distance, 0 when no pair is connected.
    pub diameter: usize,
}

impl PathStats {
    /// Number of unordered connected pairs.
    pub fn connected_pairs(&self) -> u64 {
        self.reach.iter().sum::<u64>() / 2
    }

    /// Sum of distances over unordered connected pairs.
    pub fn total_distance(&self) -> u64 {
        self.farness.iter().sum::<u64>() / 2
    }

    pub fn average<T: Scalar>(&self) -> Result<T> {
        match self.connected_pairs() {
            0 => Err(Error::AplUndefined),
            p => Ok(ratio(self.total_distance(), p)),
        }
    }
}

struct BatchResult {
    farness: Vec<u64>,
    reach: Vec<u64>,
    depth: usize,
}

fn run_batch(g: &Graph, start: usize) -> BatchResult {
    let n = g.n();
    let width = BATCH.min(n - start);
    let mut full: Mask = [0; WORDS];
    for b in 0..width {
        full[b / 64] |= 1 << (b % 64);
    }
    let mut visited: Vec<Mask> = vec![[0; WORDS]; n];
    let mut frontier: Vec<Mask> = vec![[0; WORDS]; n];
    let mut next: Vec<Mask> = vec![[0; WORDS]; n];
    for b in 0..width {
        visited[start + b][b / 64] |= 1 << (b % 64);
        frontier[start + b][b / 64] |= 1 << (b % 64);
    }
    let mut farness = vec![0u64; n];
    let mut reach = vec![0u64; n];
    let mut depth = 0;
    let mut level = 0u64;
    loop {
        level += 1;
        let mut advanced = false;
        for v in 0..n {
            let seen = visited[v];
            if seen == full {
                next[v] = [0; WORDS];
                continue;
            }
            let mut acc: Mask = [0; WORDS];
            for &u in g.nbrs(v) {
                let f = &frontier[u];
                for w in 0..WORDS {
                    acc[w] |= f[w];
                }
            }
            let mut count = 0u64;
            for w in 0..WORDS {
                acc[w] &= !seen[w];
                count += acc[w].count_ones() as u64;
            }
            next[v] = acc;
            if count > 0 {
                for w in 0..WORDS {
                    visited[v][w] |= acc[w];
                }
                farness[v] += level * count;
                reach[v] += count;
                advanced = true;
            }
        }
        if !advanced {
            break;
        }
        depth = level as usize;
        std::mem::swap(&mut frontier, &mut next);
    }
    BatchResult { farness, reach, depth }
}

/// Distance aggregates for every node. Sums are exact integers, so the
/// result does not depend on how batches are scheduled.
pub(crate) fn path_stats(g: &Graph) -> PathStats {
    let n = g.n();
    let starts: Vec<usize> = (0..n).step_by(BATCH).collect();
    let batches: Vec<BatchResult> = starts.par_iter().map(|&s| run_batch(g, s)).collect();
    let mut stats = PathStats { farness: vec![0; n], reach: vec![0; n], diameter: 0 };
    for b in batches {
        for v in 0..n {
            stats.farness[v] += b.farness[v];
            stats.reach[v] += b.reach[v];
        }
        stats.diameter = stats.diameter.max(b.depth);
    }
    stats
}

/// Mean hop distance over unordered pairs that are mutually reachable.
pub fn average_path_length<T: Scalar>(g: &Graph) -> Result<T> {
    path_stats(g).average()
}

/// Longest finite shortest-path distance.
pub fn diameter(g: &Graph) -> Result<usize> {
    let stats = path_stats(g);
    if stats.connected_pairs() == 0 {
        return Err(Error::AplUndefined);
    }
    Ok(stats.diameter)
}
