//! Named graph families and seeded random graphs. All labels are `0..n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

fn dense(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut adj = vec![BTreeSet::new(); n];
    for (u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Graph::from_dense(
        (0..n as u64).map(Into::into).collect(),
        adj.into_iter().map(|s| s.into_iter().collect()).collect(),
    )
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BadSize(msg()))
    }
}

pub fn gen_path(n: usize) -> Result<Graph> {
    need(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(dense(n, (1..n).map(|i| (i - 1, i))))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(dense(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    need(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    Ok(dense(
        n,
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))),
    ))
}

/// Centre `0` joined to leaves `1..n`.
pub fn gen_star(n: usize) -> Result<Graph> {
    need(n >= 1, || format!("star needs n >= 1, got {n}"))?;
    Ok(dense(n, (1..n).map(|i| (0, i))))
}

/// `K_r(n)`: `r` parts of `n` vertices each, vertex `v` in part `v / n`,
/// edges exactly between different parts.
pub fn gen_complete_multipartite(r: usize, n: usize) -> Result<Graph> {
    need(r >= 1 && n >= 1, || {
        format!("K_r(n) needs r, n >= 1, got r={r}, n={n}")
    })?;
    let total = r * n;
    Ok(dense(
        total,
        (0..total).flat_map(|i| {
            (i + 1..total)
                .filter(move |j| i / n != j / n)
                .map(move |j| (i, j))
        }),
    ))
}

/// Random chordal graph grown one vertex at a time.
///
/// Vertex `v` picks one of the current maximal cliques uniformly, then a
/// uniform subset of it of size `1..=min(clique_bound, |clique|)`, and is
/// joined to exactly that subset. Its neighbourhood is a clique when it is
/// inserted, so reversed insertion order is a perfect elimination ordering
/// and the graph is connected. With `clique_bound == 1` the result is a tree.
///
/// The distribution is not uniform over chordal graphs.
pub fn gen_random_chordal(n: usize, clique_bound: usize, seed: u64) -> Result<Graph> {
    need(n >= 1, || {
        format!("random chordal graph needs n >= 1, got {n}")
    })?;
    need(clique_bound >= 1, || {
        format!("clique bound must be >= 1, got {clique_bound}")
    })?;
    let mut rng = SplitMix64::new(seed);
    // Maximal cliques of the graph built so far, each sorted.
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let c = rng.below(cliques.len() as u64) as usize;
        let cap = clique_bound.min(cliques[c].len());
        let size = 1 + rng.below(cap as u64) as usize;
        let mut pool = cliques[c].clone();
        // Partial Fisher-Yates picks a uniform `size`-subset.
        for k in 0..size {
            let j = k + rng.below((pool.len() - k) as u64) as usize;
            pool.swap(k, j);
        }
        let mut chosen = pool[..size].to_vec();
        chosen.sort_unstable();
        edges.extend(chosen.iter().map(|&u| (u, v)));
        if chosen.len() == cliques[c].len() {
            cliques[c].push(v);
        } else {
            chosen.push(v);
            cliques.push(chosen);
        }
    }
    Ok(dense(n, edges))
}

/// Erdos-Renyi `G(n, p)`: pairs `(i, j)`, `i < j`, visited in lexicographic
/// order, each kept when a uniform draw in `[0, 1)` falls below `p`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(dense(n, edges))
}
