use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::paths::path_stats;
use crate::graph::{Graph, NodeId};
use crate::scalar::Scalar;

/// Sources handled per reduction chunk in betweenness. The chunk layout is
/// fixed so the floating-point summation order never depends on threads.
const BC_CHUNK: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CentralityKind {
    #[serde(rename = "dc")]
    Degree,
    #[serde(rename = "bc")]
    Betweenness,
    #[serde(rename = "cc")]
    Closeness,
}

impl CentralityKind {
    pub const ALL: [CentralityKind; 3] =
        [CentralityKind::Degree, CentralityKind::Betweenness, CentralityKind::Closeness];

    pub fn as_str(self) -> &'static str {
        match self {
            CentralityKind::Degree => "dc",
            CentralityKind::Betweenness => "bc",
            CentralityKind::Closeness => "cc",
        }
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CentralityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dc" | "degree" => Ok(CentralityKind::Degree),
            "bc" | "betweenness" => Ok(CentralityKind::Betweenness),
            "cc" | "closeness" => Ok(CentralityKind::Closeness),
            other => Err(format!("unknown centrality kind {other:?} (expected dc, bc or cc)")),
        }
    }
}

/// Per-node scores of one centrality index with a deterministic ranking:
/// descending score, ties by ascending node id.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityScores<T = f64> {
    kind: CentralityKind,
    nodes: Vec<NodeId>,
    scores: Vec<T>,
    ranking: Vec<NodeId>,
}

impl<T: Scalar> CentralityScores<T> {
    fn new(kind: CentralityKind, g: &Graph, scores: Vec<T>) -> Self {
        debug_assert_eq!(scores.len(), g.n());
        let mut order: Vec<usize> = (0..g.n()).collect();
        // ids are ascending with the dense index, so index order breaks ties
        order.sort_by(|&a, &b| scores[b].partial_cmp(&scores[a]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
        CentralityScores {
            kind,
            nodes: g.node_ids().to_vec(),
            ranking: order.into_iter().map(|i| g.id(i)).collect(),
            scores,
        }
    }

    pub fn kind(&self) -> CentralityKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn score(&self, id: NodeId) -> Option<&T> {
        self.nodes.binary_search(&id).ok().map(|i| &self.scores[i])
    }

    /// `(id, score)` in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &T)> {
        self.nodes.iter().copied().zip(self.scores.iter())
    }

    /// Node ids, highest score first.
    pub fn ranking(&self) -> &[NodeId] {
        &self.ranking
    }

    /// `(id, score)` in ranking order.
    pub fn ranked(&self) -> impl Iterator<Item = (NodeId, &T)> {
        self.ranking.iter().map(move |&id| (id, self.score(id).unwrap()))
    }
}

/// Number of incident edges.
pub fn degree_centrality<T: Scalar>(g: &Graph) -> CentralityScores<T> {
    let scores = (0..g.n()).map(|i| T::from_count(g.deg(i) as u64)).collect();
    CentralityScores::new(CentralityKind::Degree, g, scores)
}

/// Unnormalized betweenness summed over unordered pairs (Brandes
/// accumulation). Disconnected pairs contribute nothing.
pub fn betweenness_centrality<T: Scalar>(g: &Graph) -> CentralityScores<T> {
    let n = g.n();
    let chunks: Vec<usize> = (0..n).step_by(BC_CHUNK).collect();
    let partials: Vec<Vec<T>> = chunks
        .par_iter()
        .map(|&start| {
            let mut acc = Accumulator::new(n);
            let mut local = vec![T::zero(); n];
            for s in start..(start + BC_CHUNK).min(n) {
                acc.single_source(g, s, &mut local);
            }
            local
        })
        .collect();
    let mut total = vec![T::zero(); n];
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t = t.clone() + p;
        }
    }
    // every unordered pair was visited from both ends
    let two = T::one() + T::one();
    let scores = total.into_iter().map(|x| x / two.clone()).collect();
    CentralityScores::new(CentralityKind::Betweenness, g, scores)
}

struct Accumulator<T> {
    dist: Vec<u32>,
    sigma: Vec<T>,
    delta: Vec<T>,
    order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<T: Scalar> Accumulator<T> {
    fn new(n: usize) -> Self {
        Accumulator {
            dist: vec![u32::MAX; n],
            sigma: vec![T::zero(); n],
            delta: vec![T::zero(); n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }

    fn single_source(&mut self, g: &Graph, s: usize, out: &mut [T]) {
        for &v in &self.order {
            self.dist[v] = u32::MAX;
            self.sigma[v] = T::zero();
            self.delta[v] = T::zero();
        }
        self.order.clear();

        self.dist[s] = 0;
        self.sigma[s] = T::one();
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            let next = self.dist[v] + 1;
            for &w in g.nbrs(v) {
                if self.dist[w] == u32::MAX {
                    self.dist[w] = next;
                    self.queue.push_back(w);
                }
                if self.dist[w] == next {
                    self.sigma[w] = self.sigma[w].clone() + self.sigma[v].clone();
                }
            }
        }

        for &w in self.order.iter().rev() {
            if w == s {
                continue;
            }
            let dw = self.dist[w];
            let coeff = (T::one() + self.delta[w].clone()) / self.sigma[w].clone();
            for &v in g.nbrs(w) {
                if self.dist[v] + 1 == dw {
                    self.delta[v] = self.delta[v].clone() + self.sigma[v].clone() * coeff.clone();
                }
            }
            out[w] = out[w].clone() + self.delta[w].clone();
        }
    }
}

/// Reciprocal of the summed hop distance to every node in the same
/// component; isolated nodes score 0.
pub fn closeness_centrality<T: Scalar>(g: &Graph) -> CentralityScores<T> {
    let stats = path_stats(g);
    let scores = stats.farness.iter().map(|&f| if f == 0 { T::zero() } else { T::one() / T::from_count(f) }).collect();
    CentralityScores::new(CentralityKind::Closeness, g, scores)
}

pub fn centrality<T: Scalar>(g: &Graph, kind: CentralityKind) -> CentralityScores<T> {
    match kind {
        CentralityKind::Degree => degree_centrality(g),
        CentralityKind::Betweenness => betweenness_centrality(g),
        CentralityKind::Closeness => closeness_centrality(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;

    fn star(leaves: u64) -> Graph {
        Graph::from_edges((1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn path(n: u64) -> Graph {
        Graph::from_edges((0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn degree_examples() {
        let s = degree_centrality::<f64>(&star(3));
        assert_eq!(s.score(0), Some(&3.0));
        assert_eq!(s.score(2), Some(&1.0));
        assert_eq!(s.ranking(), &[0, 1, 2, 3]);
        let iso = Graph::from_parts([4], [(0, 1)]).unwrap();
        assert_eq!(degree_centrality::<f64>(&iso).score(4), Some(&0.0));
    }

    #[test]
    fn betweenness_examples() {
        let p = betweenness_centrality::<Q>(&path(3));
        assert_eq!(p.score(1), Some(&Q::from_integer(1)));
        assert_eq!(p.score(0), Some(&Q::from_integer(0)));
        assert_eq!(p.score(2), Some(&Q::from_integer(0)));

        let s = betweenness_centrality::<Q>(&star(4));
        assert_eq!(s.score(0), Some(&Q::from_integer(6)));

        let c4 = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = betweenness_centrality::<Q>(&c4);
        for v in 0..4 {
            assert_eq!(c.score(v), Some(&Q::new(1, 2)));
        }
    }

    #[test]
    fn betweenness_path_five() {
        let b = betweenness_centrality::<f64>(&path(5));
        let got: Vec<f64> = b.iter().map(|(_, s)| *s).collect();
        assert_eq!(got, vec![0.0, 3.0, 4.0, 3.0, 0.0]);
        assert_eq!(b.ranking(), &[2, 1, 3, 0, 4]);
    }

    #[test]
    fn closeness_examples() {
        let p = closeness_centrality::<Q>(&path(3));
        assert_eq!(p.score(1), Some(&Q::new(1, 2)));
        assert_eq!(p.score(0), Some(&Q::new(1, 3)));

        let s = closeness_centrality::<Q>(&star(3));
        assert_eq!(s.score(0), Some(&Q::new(1, 3)));
        assert_eq!(s.score(1), Some(&Q::new(1, 5)));

        let iso = Graph::from_parts([9], [(0, 1)]).unwrap();
        assert_eq!(closeness_centrality::<f64>(&iso).score(9), Some(&0.0));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("BC".parse::<CentralityKind>().unwrap(), CentralityKind::Betweenness);
        assert!("pagerank".parse::<CentralityKind>().is_err());
    }

    #[test]
    fn f32_scores_available() {
        let b = betweenness_centrality::<f32>(&star(4));
        assert_eq!(b.score(0), Some(&6.0f32));
    }
}
