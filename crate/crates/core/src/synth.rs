//! Seeded network generators.
//!
//! All generators number nodes `0..n` and are pure functions of their
//! parameters and seed.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, Role};
use crate::powerlaw::Sampler;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("generator needs n >= 2, got {n}")));
    }
    Ok(())
}

/// G(n, p): every unordered pair independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for i in 0..n as NodeId {
        for j in i + 1..n as NodeId {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_parts(0..n as NodeId, edges)
}

/// Growth with degree-proportional attachment from an `m`-clique seed. Each
/// new node adds `m` distinct edges; colliding picks are redrawn.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if m < 1 || m >= n {
        return Err(Error::invalid(format!("attachment count needs 1 <= m < n, got m = {m}, n = {n}")));
    }
    let mut rng = rng(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(m * n);
    // every edge endpoint, so a uniform pick is degree-proportional
    let mut pool: Vec<NodeId> = Vec::with_capacity(2 * m * n);
    for i in 0..m as NodeId {
        for j in i + 1..m as NodeId {
            edges.push((i, j));
            pool.extend([i, j]);
        }
    }
    let mut chosen: Vec<NodeId> = Vec::with_capacity(m);
    for v in m as NodeId..n as NodeId {
        chosen.clear();
        while chosen.len() < m {
            let t = if pool.is_empty() { rng.gen_range(0..v) } else { pool[rng.gen_range(0..pool.len())] };
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            pool.extend([t, v]);
        }
    }
    Graph::from_parts(0..n as NodeId, edges)
}

/// Configuration-model output before and after simplification.
#[derive(Clone, Debug)]
pub struct ConfigModel {
    pub graph: Graph,
    /// Drawn degree of node `i` at position `i`; the total is even.
    pub degree_sequence: Vec<u64>,
    /// Stub pairing before self-loops and repeated edges were dropped.
    pub stub_pairs: Vec<(NodeId, NodeId)>,
}

impl ConfigModel {
    /// Stubs lost to simplification.
    pub fn stubs_removed(&self) -> usize {
        2 * (self.stub_pairs.len() - self.graph.edge_count())
    }
}

/// Power-law configuration model, simplified. See [`config_powerlaw_detailed`].
pub fn config_powerlaw(n: usize, alpha: f64, kmin: u64, seed: u64) -> Result<Graph> {
    config_powerlaw_detailed(n, alpha, kmin, seed).map(|c| c.graph)
}

/// Draws a power-law degree sequence (redrawing the last value until the
/// total is even), pairs stubs uniformly at random, then drops self-loops
/// and collapses repeated edges.
pub fn config_powerlaw_detailed(n: usize, alpha: f64, kmin: u64, seed: u64) -> Result<ConfigModel> {
    check_n(n)?;
    if alpha.is_nan() || alpha <= 2.0 {
        return Err(Error::invalid(format!("configuration model needs alpha > 2, got {alpha}")));
    }
    let sampler = Sampler::new(alpha, kmin)?;
    let mut rng = rng(seed);
    let mut degrees: Vec<u64> = (0..n).map(|_| sampler.draw(&mut rng)).collect();
    while degrees.iter().sum::<u64>() % 2 == 1 {
        degrees[n - 1] = sampler.draw(&mut rng);
    }
    let mut stubs: Vec<NodeId> = Vec::with_capacity(degrees.iter().sum::<u64>() as usize);
    for (i, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(i as NodeId, d as usize));
    }
    stubs.shuffle(&mut rng);
    let stub_pairs: Vec<(NodeId, NodeId)> = stubs.chunks_exact(2).map(|p| (p[0], p[1])).collect();
    let graph = Graph::from_parts(0..n as NodeId, stub_pairs.iter().copied().filter(|(a, b)| a != b))?;
    Ok(ConfigModel { graph, degree_sequence: degrees, stub_pairs })
}

/// Two dense clans joined by liaisons, plus sparsely attached bosses.
///
/// Node layout: clan members first (the first clan takes the extra node when
/// the count is odd), then liaisons, then bosses. Clan pairs and
/// liaison-to-clan or liaison-to-liaison pairs are linked with probability
/// `clan_density`. Each boss links to 3 to 5 distinct non-boss nodes chosen
/// uniformly. Roles: associates, lieutenants, bosses.
pub fn dense_two_clan(
    n: usize,
    clan_density: f64,
    liaison_count: usize,
    boss_count: usize,
    seed: u64,
) -> Result<Graph> {
    check_n(n)?;
    if !(clan_density > 0.0 && clan_density <= 1.0) {
        return Err(Error::invalid(format!("clan density must lie in (0, 1], got {clan_density}")));
    }
    if liaison_count < 1 {
        return Err(Error::invalid("need at least one liaison"));
    }
    if liaison_count + boss_count >= n {
        return Err(Error::invalid(format!(
            "liaisons ({liaison_count}) plus bosses ({boss_count}) must be fewer than n ({n})"
        )));
    }
    let members = n - liaison_count - boss_count;
    let first = members.div_ceil(2);
    let clans = [0..first, first..members];
    let liaisons = members..members + liaison_count;
    let non_boss = members + liaison_count;

    let mut rng = rng(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut maybe_link = |rng: &mut ChaCha8Rng, a: usize, b: usize| {
        if rng.gen::<f64>() < clan_density {
            edges.push((a as NodeId, b as NodeId));
        }
    };
    for clan in &clans {
        for i in clan.clone() {
            for j in i + 1..clan.end {
                maybe_link(&mut rng, i, j);
            }
        }
    }
    for l in liaisons.clone() {
        for i in 0..members {
            maybe_link(&mut rng, l, i);
        }
        for other in l + 1..liaisons.end {
            maybe_link(&mut rng, l, other);
        }
    }
    for b in non_boss..n {
        let k = rng.gen_range(3..=5usize).min(non_boss);
        for t in index::sample(&mut rng, non_boss, k).into_iter() {
            edges.push((b as NodeId, t as NodeId));
        }
    }
    let roles = (0..n).map(|i| {
        let role = if i < members {
            Role::Associate
        } else if i < non_boss {
            Role::Lieutenant
        } else {
            Role::Boss
        };
        (i as NodeId, role)
    });
    Graph::from_parts(0..n as NodeId, edges)?.with_roles(roles)
}

/// Generator choice with parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorKind {
    ErdosRenyi { n: usize, p: f64 },
    PreferentialAttachment { n: usize, m: usize },
    ConfigPowerLaw { n: usize, alpha: f64, kmin: u64 },
    DenseTwoClan { n: usize, clan_density: f64, liaison_count: usize, boss_count: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph> {
        match self.kind {
            GeneratorKind::ErdosRenyi { n, p } => erdos_renyi(n, p, self.seed),
            GeneratorKind::PreferentialAttachment { n, m } => preferential_attachment(n, m, self.seed),
            GeneratorKind::ConfigPowerLaw { n, alpha, kmin } => config_powerlaw(n, alpha, kmin, self.seed),
            GeneratorKind::DenseTwoClan { n, clan_density, liaison_count, boss_count } => {
                dense_two_clan(n, clan_density, liaison_count, boss_count, self.seed)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        let empty = erdos_renyi(7, 0.0, 1).unwrap();
        assert_eq!(empty.node_count(), 7);
        assert_eq!(empty.edge_count(), 0);
        let full = erdos_renyi(7, 1.0, 1).unwrap();
        assert_eq!(full.edge_count(), 21);
        assert!(erdos_renyi(1, 0.5, 0).is_err());
        assert!(erdos_renyi(5, 1.5, 0).is_err());
    }

    #[test]
    fn pa_seed_clique_only() {
        for m in 1..5 {
            let g = preferential_attachment(m + 1, m, 3).unwrap();
            assert_eq!(g.edge_count(), m * (m + 1) / 2);
        }
        assert!(preferential_attachment(5, 5, 0).is_err());
        assert!(preferential_attachment(5, 0, 0).is_err());
    }

    #[test]
    fn pa_edge_count_identity() {
        let (n, m) = (1716, 5);
        let g = preferential_attachment(n, m, 11).unwrap();
        assert_eq!(g.edge_count(), m * (n - m) + m * (m - 1) / 2);
    }

    #[test]
    fn config_rejects_heavy_exponent() {
        assert!(config_powerlaw(100, 2.0, 1, 0).is_err());
        assert!(config_powerlaw(100, 2.5, 0, 0).is_err());
    }

    #[test]
    fn config_multigraph_degrees_match_draw() {
        let c = config_powerlaw_detailed(2000, 2.5, 1, 4).unwrap();
        let mut realized = vec![0u64; 2000];
        for &(a, b) in &c.stub_pairs {
            realized[a as usize] += 1;
            realized[b as usize] += 1;
        }
        assert_eq!(realized, c.degree_sequence);
        assert_eq!(c.degree_sequence.iter().sum::<u64>() % 2, 0);
    }

    #[test]
    fn two_clan_layout_and_roles() {
        let g = dense_two_clan(104, 0.97, 4, 5, 2).unwrap();
        assert_eq!(g.node_count(), 104);
        for b in 99..104 {
            assert_eq!(g.role(b).unwrap(), Role::Boss);
            let d = g.degree(b).unwrap();
            assert!((3..=5).contains(&d), "boss {b} has degree {d}");
        }
        for l in 95..99 {
            assert_eq!(g.role(l).unwrap(), Role::Lieutenant);
        }
        assert_eq!(g.role(0).unwrap(), Role::Associate);
        assert!(dense_two_clan(10, 0.5, 5, 5, 0).is_err());
        assert!(dense_two_clan(10, 0.0, 1, 0, 0).is_err());
        assert!(dense_two_clan(10, 0.5, 0, 0, 0).is_err());
    }

    #[test]
    fn spec_dispatch() {
        let spec = GeneratorSpec { kind: GeneratorKind::ErdosRenyi { n: 10, p: 1.0 }, seed: 0 };
        assert_eq!(spec.generate().unwrap().edge_count(), 45);
    }
}
