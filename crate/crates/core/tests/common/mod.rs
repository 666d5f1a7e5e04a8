//! Test-only oracles, written against the public graph API only and
//! deliberately naive so they share no code path with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chordalkit::{Graph, VertexId, VertexSet};

fn subset(g: &Graph, mask: u32) -> Vec<VertexId> {
    g.vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

fn pairwise_adjacent(g: &Graph, vs: &[VertexId]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(k, &x)| vs[k + 1..].iter().all(|&y| g.is_adjacent(x, y)))
}

/// Largest clique by trying every vertex subset.
pub fn max_clique_by_subsets(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter(|&m| pairwise_adjacent(g, &subset(g, m)))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Maximal cliques by trying every vertex subset.
pub fn maximal_cliques_by_subsets(g: &Graph) -> BTreeSet<VertexSet> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let cliques: Vec<u32> = (1u32..1 << n)
        .filter(|&m| pairwise_adjacent(g, &subset(g, m)))
        .collect();
    let set: BTreeSet<u32> = cliques.iter().copied().collect();
    cliques
        .iter()
        .filter(|&&m| (0..n).all(|i| m >> i & 1 == 1 || !set.contains(&(m | 1 << i))))
        .map(|&m| subset(g, m).into_iter().collect())
        .collect()
}

/// Fewest colors by trying every assignment of `k` colors, `k = 1, 2, ..`.
pub fn chromatic_by_assignments(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 8);
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let pos = |x| g.vertices().iter().position(|&y| y == x).unwrap();
            (pos(u), pos(v))
        })
        .collect();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = vec![0; n];
            let mut r = code;
            for slot in c.iter_mut() {
                *slot = r % k;
                r /= k;
            }
            if edges.iter().all(|&(u, v)| c[u] != c[v]) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Reachability matrix of a digraph given as arcs over `0..n`, by
/// Floyd-Warshall closure. `reach[i][j]` means a walk of length >= 1.
pub fn closure(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for &(u, v) in arcs {
        r[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Dependent-arc count by the walk criterion, or `None` when cyclic.
pub fn dependent_count_by_closure(n: usize, arcs: &[(usize, usize)]) -> Option<usize> {
    let r = closure(n, arcs);
    if (0..n).any(|i| r[i][i]) {
        return None;
    }
    Some(
        arcs.iter()
            .filter(|&&(u, v)| arcs.iter().any(|&(a, w)| a == u && w != v && r[w][v]))
            .count(),
    )
}

/// Dependent-arc counts over all acyclic orientations, via the closure oracle.
pub fn spectrum_by_closure(g: &Graph) -> BTreeSet<usize> {
    let n = g.vertex_count();
    let pos = |x: VertexId| g.vertices().iter().position(|&y| y == x).unwrap();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (pos(u), pos(v)))
        .collect();
    let mut out = BTreeSet::new();
    for bits in 0u64..1 << edges.len() {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if bits >> k & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        if let Some(d) = dependent_count_by_closure(n, &arcs) {
            out.insert(d);
        }
    }
    out
}

/// The labelled graph on `0..n` whose edges are the set bits of `code`
/// over pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_code(n: u64, code: u64) -> Graph {
    let pairs: Vec<(u64, u64)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let edges: Vec<(u64, u64)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| code >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    let vertices: Vec<u64> = (0..n).collect();
    Graph::from_pairs(&vertices, &edges).unwrap()
}
