//! Clique number, maximal cliques and colorings.
//!
//! On a chordal graph with a perfect elimination ordering `v_1 .. v_n`, every
//! maximal clique has the form `{v_i} ∪ (Adj(v_i) ∩ {v_{i+1}, ..})`, so the
//! clique number and the maximal cliques fall out of one pass, and greedy
//! coloring along the reversed ordering uses exactly `ω` colors. The exact
//! routines at the bottom handle arbitrary graphs up to 12 vertices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::nested::peo_violation;
use crate::recognition::BRUTE_FORCE_LIMIT;

/// A proper vertex coloring with dense 0-based colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    assignment: BTreeMap<VertexId, usize>,
    color_count: usize,
}

impl Coloring {
    /// Validates properness and that every vertex of `g` is colored.
    pub fn new(g: &Graph, assignment: BTreeMap<VertexId, usize>) -> Result<Coloring> {
        for &v in g.vertices() {
            if !assignment.contains_key(&v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        if let Some(&v) = assignment.keys().find(|v| !g.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        for (u, v) in g.edges() {
            if assignment[&u] == assignment[&v] {
                return Err(Error::ImproperColoring(u, v));
            }
        }
        let color_count = assignment.values().collect::<BTreeSet<_>>().len();
        Ok(Coloring {
            assignment,
            color_count,
        })
    }

    pub fn color(&self, v: VertexId) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<VertexId, usize> {
        &self.assignment
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// One `vertex color` line per vertex, ascending by vertex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in &self.assignment {
            writeln!(out, "{v} {c}").unwrap();
        }
        out
    }
}

fn check_peo(g: &Graph, peo: &[VertexId]) -> Result<Vec<usize>> {
    if let Some(v) = peo_violation(g, peo)? {
        return Err(Error::NotAPeo(v));
    }
    g.permutation_indices(peo)
}

// `{v_i} ∪ later neighbours`, as sorted index lists.
fn peo_candidates(g: &Graph, idx: &[usize]) -> Vec<Vec<usize>> {
    let mut pos = vec![0; idx.len()];
    for (p, &i) in idx.iter().enumerate() {
        pos[i] = p;
    }
    idx.iter()
        .enumerate()
        .map(|(p, &i)| {
            let mut c: Vec<usize> = g.nbrs(i).iter().copied().filter(|&j| pos[j] > p).collect();
            c.push(i);
            c.sort_unstable();
            c
        })
        .collect()
}

/// `ω(G)` from a perfect elimination ordering; 0 for the empty graph.
pub fn clique_number_chordal(g: &Graph, peo: &[VertexId]) -> Result<usize> {
    let idx = check_peo(g, peo)?;
    Ok(peo_candidates(g, &idx)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0))
}

/// All maximal cliques of a chordal graph, at most `|V|` of them, sorted.
pub fn maximal_cliques_chordal(g: &Graph, peo: &[VertexId]) -> Result<Vec<VertexSet>> {
    let idx = check_peo(g, peo)?;
    let candidates: BTreeSet<Vec<usize>> = peo_candidates(g, &idx).into_iter().collect();
    let sets: Vec<BTreeSet<usize>> = candidates
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();
    let mut out: Vec<VertexSet> = sets
        .iter()
        .filter(|c| !sets.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .map(|c| c.iter().map(|&i| g.label(i)).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// Colors vertices in `order`, each with the least color unused by its
/// already-colored neighbours.
pub fn greedy_coloring(g: &Graph, order: &[VertexId]) -> Result<Coloring> {
    let idx = g.permutation_indices(order)?;
    let mut color = vec![usize::MAX; g.vertex_count()];
    for &i in &idx {
        let used: BTreeSet<usize> = g
            .nbrs(i)
            .iter()
            .map(|&j| color[j])
            .filter(|&c| c != usize::MAX)
            .collect();
        color[i] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    let assignment = (0..g.vertex_count())
        .map(|i| (g.label(i), color[i]))
        .collect();
    Ok(Coloring::new(g, assignment).expect("greedy coloring is proper"))
}

/// Greedy coloring along the reverse of a perfect elimination ordering.
pub fn chordal_coloring(g: &Graph, peo: &[VertexId]) -> Result<Coloring> {
    check_peo(g, peo)?;
    let reversed: Vec<VertexId> = peo.iter().rev().copied().collect();
    greedy_coloring(g, &reversed)
}

fn guard(g: &Graph) -> Result<()> {
    if g.vertex_count() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: g.vertex_count(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

/// A coloring with the fewest colors, for `|V| <= 12`, found by trying
/// `k = 1, 2, ..` colors with backtracking.
pub fn optimal_coloring_exact(g: &Graph) -> Result<Coloring> {
    guard(g)?;
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g.nbrs(i).len()));

    fn assign(g: &Graph, order: &[usize], k: usize, color: &mut [usize], used: usize) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return true;
        };
        // Colors beyond `used` are interchangeable; try only the first fresh one.
        for c in 0..k.min(used + 1) {
            if g.nbrs(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                if assign(g, rest, k, color, used.max(c + 1)) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }

    for k in 0..=n {
        let mut color = vec![usize::MAX; n];
        if assign(g, &order, k, &mut color, 0) {
            let assignment = (0..n).map(|i| (g.label(i), color[i])).collect();
            return Coloring::new(g, assignment);
        }
    }
    unreachable!("n colors always suffice")
}

/// Exact `χ(G)` for `|V| <= 12`; 0 for the empty graph.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    Ok(optimal_coloring_exact(g)?.color_count())
}

/// All maximal cliques of any graph with `|V| <= 12` (Bron-Kerbosch with
/// pivoting), sorted.
pub fn maximal_cliques_exact(g: &Graph) -> Result<Vec<VertexSet>> {
    guard(g)?;
    let adj: Vec<u32> = (0..g.vertex_count())
        .map(|i| g.nbrs(i).iter().fold(0u32, |m, &j| m | (1 << j)))
        .collect();
    let mut found = Vec::new();
    fn bk(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(adj, r | (1 << v), p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let all = if adj.is_empty() {
        0
    } else {
        (1u32 << adj.len()) - 1
    };
    bk(&adj, 0, all, 0, &mut found);
    let mut out: Vec<VertexSet> = found
        .into_iter()
        .filter(|&m| m != 0)
        .map(|m| {
            (0..adj.len())
                .filter(|&i| m & (1 << i) != 0)
                .map(|i| g.label(i))
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Exact `ω(G)` for `|V| <= 12`.
pub fn clique_number_exact(g: &Graph) -> Result<usize> {
    Ok(maximal_cliques_exact(g)?
        .iter()
        .map(BTreeSet::len)
        .max()
        .unwrap_or(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct R1Report {
    pub chi: usize,
    pub omega: usize,
    pub equal: bool,
}

/// Computes `χ` and `ω` exactly; panics if `χ < ω`, which would mean a bug.
pub fn check_r1(g: &Graph) -> Result<R1Report> {
    let chi = chromatic_number_exact(g)?;
    let omega = clique_number_exact(g)?;
    assert!(chi >= omega, "chi {chi} < omega {omega}");
    Ok(R1Report {
        chi,
        omega,
        equal: chi == omega,
    })
}
