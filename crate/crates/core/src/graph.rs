//! Undirected simple graph keyed by external integer node ids.
//!
//! Nodes are stored densely in ascending id order with a compressed
//! adjacency layout. Dense indices never appear in the public API: every
//! method takes and returns the caller's node ids.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// External node identifier, preserved verbatim from the input.
pub type NodeId = u64;

/// Position of a node in the organisation, when known.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Boss,
    Lieutenant,
    Associate,
    #[default]
    Unknown,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Boss => "boss",
            Role::Lieutenant => "lieutenant",
            Role::Associate => "associate",
            Role::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "boss" => Ok(Role::Boss),
            "lieutenant" => Ok(Role::Lieutenant),
            "associate" => Ok(Role::Associate),
            other => Err(format!("unknown role {other:?}")),
        }
    }
}

/// One `src,dst` record together with the line it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub src: NodeId,
    pub dst: NodeId,
    pub line: usize,
}

/// Raw edge records prior to simplification.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList {
    pub records: Vec<EdgeRecord>,
}

impl EdgeList {
    /// Builds records from pairs, numbering them 1, 2, ... as if each were a line.
    pub fn from_pairs<I: IntoIterator<Item = (NodeId, NodeId)>>(pairs: I) -> Self {
        let records =
            pairs.into_iter().enumerate().map(|(i, (src, dst))| EdgeRecord { src, dst, line: i + 1 }).collect();
        EdgeList { records }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Number of records that collapse into an already-seen undirected edge
    /// (repeats and reversed repeats). Self-loops are not counted.
    pub fn duplicate_count(&self) -> usize {
        let mut seen = BTreeSet::new();
        self.records
            .iter()
            .filter(|r| r.src != r.dst)
            .filter(|r| !seen.insert((r.src.min(r.dst), r.src.max(r.dst))))
            .count()
    }
}

/// One `node,role` record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoleRecord {
    pub node: NodeId,
    pub role: Role,
    pub line: usize,
}

/// Immutable undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    ids: Vec<NodeId>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    roles: Vec<Role>,
}

impl Graph {
    /// Graph with the given nodes and edges. Edge endpoints are added to the
    /// node set; duplicates collapse; a self-loop is an error.
    pub fn from_parts<N, E>(nodes: N, edges: E) -> Result<Graph>
    where
        N: IntoIterator<Item = NodeId>,
        E: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let list = EdgeList::from_pairs(edges);
        let mut g = Graph::from_edge_list(&list, None)?;
        let extra: BTreeSet<NodeId> = nodes.into_iter().filter(|id| !g.contains(*id)).collect();
        if !extra.is_empty() {
            g = g.with_isolated(extra);
        }
        Ok(g)
    }

    /// Convenience wrapper over [`Graph::from_parts`] without isolated nodes.
    pub fn from_edges<E: IntoIterator<Item = (NodeId, NodeId)>>(edges: E) -> Result<Graph> {
        Graph::from_parts(std::iter::empty(), edges)
    }

    /// Simplifies raw records into a graph and applies optional role labels.
    /// Role records may name nodes absent from the edge list; those become
    /// isolated nodes. A later role record for the same node wins.
    pub fn from_edge_list(records: &EdgeList, roles: Option<&[RoleRecord]>) -> Result<Graph> {
        let mut ids = BTreeSet::new();
        for r in &records.records {
            if r.src == r.dst {
                return Err(Error::SelfLoop { line: r.line, node: r.src });
            }
            ids.insert(r.src);
            ids.insert(r.dst);
        }
        let mut role_map = BTreeMap::new();
        for r in roles.unwrap_or(&[]) {
            ids.insert(r.node);
            role_map.insert(r.node, r.role);
        }
        let ids: Vec<NodeId> = ids.into_iter().collect();
        let index = |id: NodeId| ids.binary_search(&id).expect("id collected above");
        let pairs = records.records.iter().map(|r| (index(r.src), index(r.dst))).collect();
        let roles = ids.iter().map(|id| role_map.get(id).copied().unwrap_or_default()).collect();
        Ok(Graph::assemble(ids, pairs, roles))
    }

    /// `ids` sorted and unique; `pairs` are dense, loop-free, possibly repeated.
    fn assemble(ids: Vec<NodeId>, mut pairs: Vec<(usize, usize)>, roles: Vec<Role>) -> Graph {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        for p in pairs.iter_mut() {
            debug_assert_ne!(p.0, p.1);
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let n = ids.len();
        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        for &(u, v) in &pairs {
            targets[cursor[u]] = v;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }
        for i in 0..n {
            targets[offsets[i]..offsets[i + 1]].sort_unstable();
        }
        Graph { ids, offsets, targets, roles }
    }

    fn with_isolated(&self, extra: BTreeSet<NodeId>) -> Graph {
        let mut ids: Vec<NodeId> = self.ids.iter().copied().chain(extra).collect();
        ids.sort_unstable();
        let index = |id: NodeId| ids.binary_search(&id).unwrap();
        let pairs = self.dense_edges().map(|(u, v)| (index(self.ids[u]), index(self.ids[v]))).collect();
        let roles = ids.iter().map(|&id| self.index_of(id).map(|i| self.roles[i]).unwrap_or_default()).collect();
        Graph::assemble(ids, pairs, roles)
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Node ids in ascending order.
    pub fn node_ids(&self) -> &[NodeId] {
        &self.ids
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.index_of(id).is_some()
    }

    pub fn degree(&self, id: NodeId) -> Result<usize> {
        Ok(self.deg(self.require(id)?))
    }

    /// Neighbors of `id` in ascending id order.
    pub fn neighbors(&self, id: NodeId) -> Result<impl Iterator<Item = NodeId> + '_> {
        let i = self.require(id)?;
        Ok(self.nbrs(i).iter().map(move |&j| self.ids[j]))
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Each undirected edge once, as `(lo, hi)` with `lo < hi`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.dense_edges().map(move |(u, v)| (self.ids[u], self.ids[v]))
    }

    /// `(id, degree)` in ascending id order.
    pub fn degrees(&self) -> impl Iterator<Item = (NodeId, usize)> + '_ {
        (0..self.n()).map(move |i| (self.ids[i], self.deg(i)))
    }

    pub fn role(&self, id: NodeId) -> Result<Role> {
        Ok(self.roles[self.require(id)?])
    }

    /// `(id, role)` in ascending id order, including `Unknown`.
    pub fn roles(&self) -> impl Iterator<Item = (NodeId, Role)> + '_ {
        self.ids.iter().copied().zip(self.roles.iter().copied())
    }

    /// Copy of the graph with the role of each listed node replaced.
    pub fn with_roles<I: IntoIterator<Item = (NodeId, Role)>>(&self, roles: I) -> Result<Graph> {
        let mut g = self.clone();
        for (id, role) in roles {
            let i = g.require(id)?;
            g.roles[i] = role;
        }
        Ok(g)
    }

    /// Edge-wise union (adjacency OR). Node sets are merged; on a role
    /// conflict the label from `other` wins unless it is `Unknown`.
    pub fn aggregate_union(&self, other: &Graph) -> Graph {
        let ids: Vec<NodeId> =
            self.ids.iter().chain(other.ids.iter()).copied().collect::<BTreeSet<_>>().into_iter().collect();
        let index = |id: NodeId| ids.binary_search(&id).unwrap();
        let pairs = self.edges().chain(other.edges()).map(|(a, b)| (index(a), index(b))).collect();
        let roles = ids
            .iter()
            .map(|&id| {
                let mine = self.index_of(id).map(|i| self.roles[i]).unwrap_or_default();
                match other.index_of(id).map(|i| other.roles[i]) {
                    Some(r) if r != Role::Unknown => r,
                    _ => mine,
                }
            })
            .collect();
        Graph::assemble(ids, pairs, roles)
    }

    /// Number of undirected edges present in both graphs.
    pub fn shared_edge_count(&self, other: &Graph) -> usize {
        self.edges().filter(|&(a, b)| other.has_edge(a, b)).count()
    }

    /// Graph without `victims` and their incident edges. `self` is untouched.
    pub fn remove_nodes<'a, I>(&self, victims: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a NodeId>,
    {
        let mut keep = vec![true; self.n()];
        for &v in victims {
            keep[self.require(v)?] = false;
        }
        Ok(self.retain(&keep))
    }

    /// Induced subgraph on `v` and its neighbors.
    pub fn egonet(&self, v: NodeId) -> Result<Graph> {
        self.egonet_union(std::iter::once(&v))
    }

    /// Union of the egonets of every node in `vs`.
    ///
    /// This is the union of the individual induced subgraphs, not the
    /// subgraph induced by all their members: an edge between members of two
    /// different egonets is kept only if some single egonet contains both ends.
    pub fn egonet_union<'a, I>(&self, vs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a NodeId>,
    {
        let mut keep = vec![false; self.n()];
        let mut pairs = BTreeSet::new();
        let mut member = vec![false; self.n()];
        for &v in vs {
            let c = self.require(v)?;
            let ego: Vec<usize> = std::iter::once(c).chain(self.nbrs(c).iter().copied()).collect();
            for &u in &ego {
                member[u] = true;
                keep[u] = true;
            }
            for &u in &ego {
                for &w in self.nbrs(u) {
                    if u < w && member[w] {
                        pairs.insert((u, w));
                    }
                }
            }
            for &u in &ego {
                member[u] = false;
            }
        }
        let mut remap = vec![usize::MAX; self.n()];
        let mut ids = Vec::new();
        let mut roles = Vec::new();
        for i in 0..self.n() {
            if keep[i] {
                remap[i] = ids.len();
                ids.push(self.ids[i]);
                roles.push(self.roles[i]);
            }
        }
        let pairs = pairs.into_iter().map(|(u, w)| (remap[u], remap[w])).collect();
        Ok(Graph::assemble(ids, pairs, roles))
    }

    // ---- dense-index internals -------------------------------------------

    pub(crate) fn n(&self) -> usize {
        self.ids.len()
    }

    pub(crate) fn id(&self, i: usize) -> NodeId {
        self.ids[i]
    }

    pub(crate) fn nbrs(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub(crate) fn deg(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub(crate) fn adjacent(&self, i: usize, j: usize) -> bool {
        self.nbrs(i).binary_search(&j).is_ok()
    }

    pub(crate) fn index_of(&self, id: NodeId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub(crate) fn require(&self, id: NodeId) -> Result<usize> {
        self.index_of(id).ok_or(Error::UnknownNode(id))
    }

    pub(crate) fn dense_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.nbrs(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Induced subgraph on the nodes whose `keep` flag is set.
    pub(crate) fn retain(&self, keep: &[bool]) -> Graph {
        debug_assert_eq!(keep.len(), self.n());
        let mut remap = vec![usize::MAX; self.n()];
        let mut ids = Vec::new();
        let mut roles = Vec::new();
        for i in 0..self.n() {
            if keep[i] {
                remap[i] = ids.len();
                ids.push(self.ids[i]);
                roles.push(self.roles[i]);
            }
        }
        let mut offsets = Vec::with_capacity(ids.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for i in 0..self.n() {
            if keep[i] {
                targets.extend(self.nbrs(i).iter().filter(|&&j| keep[j]).map(|&j| remap[j]));
                offsets.push(targets.len());
            }
        }
        Graph { ids, offsets, targets, roles }
    }
}

/// Free-function form of [`Graph::aggregate_union`].
pub fn aggregate_union(g1: &Graph, g2: &Graph) -> Graph {
    g1.aggregate_union(g2)
}
