//! Perfect (simplicial) vertices.
//!
//! A vertex is perfect when it has no neighbours or when its neighbours are
//! pairwise adjacent. `P(A)` collects the vertices of `A` that are perfect
//! inside the induced subgraph `G(A)`.

use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};

pub fn is_perfect_vertex(g: &Graph, x: VertexId) -> Result<bool> {
    let i = g.index_of(x)?;
    Ok(is_perfect_idx(g, i, None))
}

/// `P(A)`, computed inside `G(A)`.
pub fn perfect_set(g: &Graph, a: &VertexSet) -> Result<VertexSet> {
    let mask = g.mask_of(a)?;
    Ok(perfect_indices(g, &mask)
        .into_iter()
        .map(|i| g.label(i))
        .collect())
}

/// Indices `i` with `active[i]` that are perfect in `G(active)`, ascending.
pub(crate) fn perfect_indices(g: &Graph, active: &[bool]) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&i| active[i] && is_perfect_idx(g, i, Some(active)))
        .collect()
}

// Pairwise test over the neighbours of `i` that lie in `active`.
pub(crate) fn is_perfect_idx(g: &Graph, i: usize, active: Option<&[bool]>) -> bool {
    let nbrs: Vec<usize> = match active {
        Some(mask) => g.nbrs(i).iter().copied().filter(|&j| mask[j]).collect(),
        None => g.nbrs(i).to_vec(),
    };
    g.is_clique_idx(&nbrs)
}

/// Two neighbours of `i` inside `active` that are not adjacent, if any.
pub(crate) fn non_adjacent_pairs(g: &Graph, i: usize, active: &[bool]) -> Vec<(usize, usize)> {
    let nbrs: Vec<usize> = g.nbrs(i).iter().copied().filter(|&j| active[j]).collect();
    let mut out = Vec::new();
    for (k, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[k + 1..] {
            if !g.has_edge(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_complete_multipartite, gen_cycle, gen_path};
    use crate::graph::vset;

    #[test]
    fn isolated_vertex_is_perfect() {
        let g = Graph::from_pairs(&[0, 1, 2], &[(1, 2)]).unwrap();
        assert!(is_perfect_vertex(&g, VertexId(0)).unwrap());
    }

    #[test]
    fn centre_of_path_is_not_perfect() {
        let g = gen_path(3).unwrap();
        assert!(!is_perfect_vertex(&g, VertexId(1)).unwrap());
        assert!(is_perfect_vertex(&g, VertexId(0)).unwrap());
    }

    #[test]
    fn complete_graph_all_perfect() {
        for n in 1..6 {
            let g = gen_complete(n).unwrap();
            for &v in g.vertices() {
                assert!(is_perfect_vertex(&g, v).unwrap());
            }
        }
    }

    #[test]
    fn perfect_sets_of_small_families() {
        let c4 = gen_cycle(4).unwrap();
        assert!(perfect_set(&c4, &c4.vertex_set()).unwrap().is_empty());
        let p4 = gen_path(4).unwrap();
        assert_eq!(perfect_set(&p4, &p4.vertex_set()).unwrap(), vset([0, 3]));
        // Within a subset the test runs on G(A): removing 0 exposes 1.
        assert_eq!(perfect_set(&p4, &vset([1, 2, 3])).unwrap(), vset([1, 3]));
    }

    #[test]
    fn octahedron_has_no_perfect_vertex() {
        // Oracle: each vertex of K_3(2) sees four others, two of which are an
        // antipodal (non-adjacent) pair, so no neighbourhood is a clique.
        let g = gen_complete_multipartite(3, 2).unwrap();
        for &v in g.vertices() {
            let nb: Vec<VertexId> = g.adjacency(v).unwrap().into_iter().collect();
            let has_gap = nb
                .iter()
                .enumerate()
                .any(|(k, &x)| nb[k + 1..].iter().any(|&y| !g.is_adjacent(x, y)));
            assert!(has_gap);
        }
        assert!(perfect_set(&g, &g.vertex_set()).unwrap().is_empty());
    }

    #[test]
    fn unknown_vertex_errors() {
        let g = gen_path(2).unwrap();
        assert!(is_perfect_vertex(&g, VertexId(5)).is_err());
        assert!(perfect_set(&g, &vset([0, 5])).is_err());
    }
}
