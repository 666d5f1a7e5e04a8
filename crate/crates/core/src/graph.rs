//! Finite simple undirected graphs.
//!
//! Vertices carry opaque non-negative integer labels. Internally every graph
//! keeps its labels sorted and maps them onto a dense index `0..n`, so the
//! algorithms in this crate work on indices while the public surface speaks
//! labels. Graphs are immutable once built; removing vertices is always
//! expressed as taking an induced subgraph.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// External vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for VertexId {
    fn from(v: u64) -> Self {
        VertexId(v)
    }
}

/// A set of vertex labels, iterated in ascending order.
pub type VertexSet = BTreeSet<VertexId>;

/// Builds a [`VertexSet`] from raw labels.
pub fn vset<I: IntoIterator<Item = u64>>(labels: I) -> VertexSet {
    labels.into_iter().map(VertexId).collect()
}

#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from a vertex list and a list of unordered edges.
    ///
    /// Repeated vertices and repeated edges (in either orientation) are
    /// collapsed. A pair `(x, x)` is rejected with [`Error::LoopEdge`], an
    /// endpoint missing from `vertices` with [`Error::UnknownVertex`].
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let labels: Vec<VertexId> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<VertexId, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut sets = vec![BTreeSet::new(); labels.len()];
        for (x, y) in edges {
            if x == y {
                return Err(Error::LoopEdge(x));
            }
            let i = *index.get(&x).ok_or(Error::UnknownVertex(x))?;
            let j = *index.get(&y).ok_or(Error::UnknownVertex(y))?;
            sets[i].insert(j);
            sets[j].insert(i);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph {
            labels,
            index,
            adj,
            edge_count,
        };
        g.debug_check();
        Ok(g)
    }

    /// Convenience constructor over raw `u64` labels.
    pub fn from_pairs(vertices: &[u64], edges: &[(u64, u64)]) -> Result<Graph> {
        Graph::from_edges(
            vertices.iter().copied().map(VertexId),
            edges.iter().map(|&(x, y)| (VertexId(x), VertexId(y))),
        )
    }

    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Graph {
            labels: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            edge_count: 0,
        }
    }

    // Dense-index constructor; `adj` must already be symmetric, sorted and loop-free.
    pub(crate) fn from_dense(labels: Vec<VertexId>, adj: Vec<Vec<usize>>) -> Graph {
        let index = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph {
            labels,
            index,
            adj,
            edge_count,
        };
        g.debug_check();
        g
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            assert!(self.labels.windows(2).all(|w| w[0] < w[1]));
            for (i, nbrs) in self.adj.iter().enumerate() {
                assert!(nbrs.windows(2).all(|w| w[0] < w[1]));
                for &j in nbrs {
                    assert_ne!(i, j, "loop at {}", self.labels[i]);
                    assert!(
                        self.adj[j].binary_search(&i).is_ok(),
                        "asymmetric adjacency"
                    );
                }
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().copied().collect()
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.index.contains_key(&x)
    }

    /// All edges as `(lo, hi)` label pairs, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs.iter().filter(|&&j| j > i) {
                out.push((self.labels[i], self.labels[j]));
            }
        }
        out
    }

    /// `Adj(x)`: the neighbours of `x`.
    pub fn adjacency(&self, x: VertexId) -> Result<VertexSet> {
        let i = self.index_of(x)?;
        Ok(self.adj[i].iter().map(|&j| self.labels[j]).collect())
    }

    pub fn degree(&self, x: VertexId) -> Result<usize> {
        Ok(self.adj[self.index_of(x)?].len())
    }

    /// False when either endpoint is not a vertex.
    pub fn is_adjacent(&self, x: VertexId, y: VertexId) -> bool {
        match (self.index.get(&x), self.index.get(&y)) {
            (Some(&i), Some(&j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    /// True iff every pair of members is adjacent (vacuously for `|c| <= 1`).
    pub fn is_clique(&self, c: &VertexSet) -> Result<bool> {
        let idx = self.indices_of(c)?;
        Ok(self.is_clique_idx(&idx))
    }

    /// `G(A)`: keeps the vertices of `a` and every edge with both ends in `a`.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<Graph> {
        let keep = self.mask_of(a)?;
        Ok(self.induced_by_mask(&keep))
    }

    /// Induced subgraph on the complement of `a`.
    pub fn remove_vertices(&self, a: &VertexSet) -> Result<Graph> {
        let mut keep = vec![true; self.vertex_count()];
        for i in self.indices_of(a)? {
            keep[i] = false;
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// Connected components, each in ascending label order, the list ordered
    /// by least label.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let all = vec![true; self.vertex_count()];
        self.components_idx(&all)
            .into_iter()
            .map(|comp| comp.into_iter().map(|i| self.labels[i]).collect())
            .collect()
    }

    /// True for the empty graph and for any graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    // ---- dense-index helpers shared across the crate ----

    pub(crate) fn index_of(&self, x: VertexId) -> Result<usize> {
        self.index.get(&x).copied().ok_or(Error::UnknownVertex(x))
    }

    pub(crate) fn indices_of<'a, I>(&self, xs: I) -> Result<Vec<usize>>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        xs.into_iter().map(|&x| self.index_of(x)).collect()
    }

    pub(crate) fn mask_of(&self, a: &VertexSet) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.vertex_count()];
        for i in self.indices_of(a)? {
            mask[i] = true;
        }
        Ok(mask)
    }

    pub(crate) fn label(&self, i: usize) -> VertexId {
        self.labels[i]
    }

    pub(crate) fn nbrs(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub(crate) fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub(crate) fn is_clique_idx(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(k, &i)| members[k + 1..].iter().all(|&j| self.has_edge(i, j)))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Graph {
        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = labels.len();
                labels.push(self.labels[i]);
            }
        }
        let adj = (0..self.vertex_count())
            .filter(|&i| keep[i])
            .map(|i| {
                self.adj[i]
                    .iter()
                    .filter(|&&j| keep[j])
                    .map(|&j| remap[j])
                    .collect()
            })
            .collect();
        Graph::from_dense(labels, adj)
    }

    /// Components of `G(active)` as sorted index lists, ordered by least index.
    pub(crate) fn components_idx(&self, active: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if !active[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if active[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Checks that `order` lists every vertex exactly once; returns the indices.
    pub(crate) fn permutation_indices(&self, order: &[VertexId]) -> Result<Vec<usize>> {
        if order.len() != self.vertex_count() {
            return Err(Error::NotAPermutation(format!(
                "expected {} vertices, got {}",
                self.vertex_count(),
                order.len()
            )));
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::with_capacity(order.len());
        for &v in order {
            let i = self
                .index
                .get(&v)
                .copied()
                .ok_or_else(|| Error::NotAPermutation(format!("{v} is not a vertex")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(format!("{v} appears twice")));
            }
            out.push(i);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_pairs(&[1, 2, 3], &[(1, 2), (2, 3)]).unwrap()
    }

    fn k(n: u64) -> Graph {
        let vs: Vec<u64> = (0..n).collect();
        let es: Vec<(u64, u64)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_pairs(&vs, &es).unwrap()
    }

    #[test]
    fn builds_path() {
        let g = p3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(
            g.edges(),
            vec![(VertexId(1), VertexId(2)), (VertexId(2), VertexId(3))]
        );
    }

    #[test]
    fn single_isolated_vertex() {
        let g = Graph::from_pairs(&[1], &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.adjacency(VertexId(1)).unwrap().is_empty());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_pairs(&[1, 2], &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn loops_and_unknown_endpoints_rejected() {
        assert_eq!(
            Graph::from_pairs(&[1, 2], &[(1, 1)]),
            Err(Error::LoopEdge(VertexId(1)))
        );
        assert_eq!(
            Graph::from_pairs(&[1, 2], &[(1, 7)]),
            Err(Error::UnknownVertex(VertexId(7)))
        );
    }

    #[test]
    fn adjacency_cases() {
        assert_eq!(p3().adjacency(VertexId(2)).unwrap(), vset([1, 3]));
        assert_eq!(k(4).adjacency(VertexId(0)).unwrap(), vset([1, 2, 3]));
        assert_eq!(
            p3().adjacency(VertexId(9)),
            Err(Error::UnknownVertex(VertexId(9)))
        );
    }

    #[test]
    fn clique_cases() {
        let tri = k(3);
        assert!(tri.is_clique(&VertexSet::new()).unwrap());
        assert!(tri.is_clique(&vset([0, 1, 2])).unwrap());
        assert!(!p3().is_clique(&vset([1, 3])).unwrap());
        assert!(p3().is_clique(&vset([2])).unwrap());
        assert!(p3().is_clique(&vset([5])).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let c4 = Graph::from_pairs(&[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let sub = c4.induced_subgraph(&vset([0, 1, 2])).unwrap();
        assert_eq!(
            sub,
            Graph::from_pairs(&[0, 1, 2], &[(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(c4.induced_subgraph(&c4.vertex_set()).unwrap(), c4);
        assert_eq!(
            k(4).induced_subgraph(&vset([0, 2, 3]))
                .unwrap()
                .edge_count(),
            3
        );
    }

    #[test]
    fn components() {
        assert_eq!(p3().connected_components(), vec![vset([1, 2, 3])]);
        let two = Graph::from_pairs(&[5, 1, 2, 6], &[(5, 6), (1, 2)]).unwrap();
        assert_eq!(two.connected_components(), vec![vset([1, 2]), vset([5, 6])]);
        assert!(Graph::empty().connected_components().is_empty());
        assert!(Graph::empty().is_connected());
    }

    #[test]
    fn permutation_checks() {
        let g = p3();
        let ids = |xs: &[u64]| xs.iter().copied().map(VertexId).collect::<Vec<_>>();
        assert!(g.permutation_indices(&ids(&[3, 1, 2])).is_ok());
        assert!(g.permutation_indices(&ids(&[3, 1])).is_err());
        assert!(g.permutation_indices(&ids(&[3, 3, 1])).is_err());
        assert!(g.permutation_indices(&ids(&[3, 1, 4])).is_err());
    }
}
