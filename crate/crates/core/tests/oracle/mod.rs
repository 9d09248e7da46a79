//! Brute-force reference implementations on adjacency matrices.
//!
//! Nothing here calls into the library's metric code: distances come from
//! Floyd-Warshall, geodesic counts from explicit enumeration of simple paths,
//! components from union-find.

#![allow(dead_code, clippy::needless_range_loop)]

use netresil::{Graph, NodeId};
use num_rational::Rational64 as Q;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Small {
    pub ids: Vec<NodeId>,
    pub adj: Vec<Vec<bool>>,
}

impl Small {
    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.adj[i][j] {
                    out.push((self.ids[i], self.ids[j]));
                }
            }
        }
        out
    }

    pub fn graph(&self) -> Graph {
        Graph::from_parts(self.ids.iter().copied(), self.edges()).unwrap()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().filter(|&&b| b).count()
    }
}

/// Random graph on 1..=max_n nodes with scattered ids and random density.
pub fn random_small(seed: u64, max_n: usize) -> Small {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let mut pool: Vec<NodeId> = (0..200).collect();
    pool.shuffle(&mut rng);
    let ids = pool[..n].to_vec();
    let p: f64 = rng.gen_range(0.0..1.0);
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    Small { ids, adj }
}

pub fn floyd(s: &Small) -> Vec<Vec<Option<u64>>> {
    let n = s.n();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if s.adj[i][j] {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Every simple path from `u` to `w` with exactly `len` edges.
fn paths_of_length(s: &Small, u: usize, w: usize, len: u64) -> Vec<Vec<usize>> {
    fn go(s: &Small, at: usize, w: usize, left: u64, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if at == w {
                out.push(path.clone());
            }
            return;
        }
        for next in 0..s.n() {
            if s.adj[at][next] && !path.contains(&next) {
                path.push(next);
                go(s, next, w, left - 1, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(s, u, w, len, &mut vec![u], &mut out);
    out
}

pub fn degree_scores(s: &Small) -> Vec<Q> {
    (0..s.n()).map(|i| Q::from_integer(s.degree(i) as i64)).collect()
}

pub fn betweenness(s: &Small) -> Vec<Q> {
    let n = s.n();
    let d = floyd(s);
    let mut bc = vec![Q::from_integer(0); n];
    for u in 0..n {
        for w in u + 1..n {
            let Some(len) = d[u][w] else { continue };
            let paths = paths_of_length(s, u, w, len);
            let total = paths.len() as i64;
            for i in 0..n {
                if i == u || i == w {
                    continue;
                }
                let through = paths.iter().filter(|p| p.contains(&i)).count() as i64;
                bc[i] += Q::new(through, total);
            }
        }
    }
    bc
}

pub fn closeness(s: &Small) -> Vec<Q> {
    let d = floyd(s);
    (0..s.n())
        .map(|i| {
            let sum: u64 = d[i].iter().flatten().sum();
            if sum == 0 {
                Q::from_integer(0)
            } else {
                Q::new(1, sum as i64)
            }
        })
        .collect()
}

pub fn clustering(s: &Small) -> Vec<Q> {
    (0..s.n())
        .map(|i| {
            let nb: Vec<usize> = (0..s.n()).filter(|&j| s.adj[i][j]).collect();
            let k = nb.len() as i64;
            if k < 2 {
                return Q::from_integer(0);
            }
            let mut links = 0;
            for a in 0..nb.len() {
                for b in a + 1..nb.len() {
                    if s.adj[nb[a]][nb[b]] {
                        links += 1;
                    }
                }
            }
            Q::new(2 * links, k * (k - 1))
        })
        .collect()
}

/// Components as sorted id lists, largest first, ties by smallest id.
pub fn components(s: &Small) -> Vec<Vec<NodeId>> {
    let n = s.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if s.adj[i][j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<NodeId>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(s.ids[i]);
    }
    let mut comps: Vec<Vec<NodeId>> = groups
        .into_values()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect();
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    comps
}

/// `(apl, diameter)` over connected unordered pairs, `None` without pairs.
pub fn apl_and_diameter(s: &Small) -> Option<(Q, u64)> {
    let d = floyd(s);
    let (mut sum, mut pairs, mut diam) = (0u64, 0u64, 0u64);
    for u in 0..s.n() {
        for w in u + 1..s.n() {
            if let Some(x) = d[u][w] {
                sum += x;
                pairs += 1;
                diam = diam.max(x);
            }
        }
    }
    (pairs > 0).then(|| (Q::new(sum as i64, pairs as i64), diam))
}
