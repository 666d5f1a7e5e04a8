//! Chordality decision with two-sided certificates.
//!
//! [`is_chordal`] answers with either a stationary perfectly nested sequence
//! (the graph is chordal) or a chordless cycle of length at least four (it is
//! not). Both witnesses are checkable on their own by [`verify_certificate`].
//!
//! Two independent oracles sit alongside: maximum cardinality search followed
//! by a perfect-elimination check ([`is_chordal_mcs`]), and exhaustive cycle
//! search for small graphs ([`brute_force_chordal`]).

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::nested::{
    build_stationary_sequence, join, verify_peo, verify_perfectly_nested, BuildOutcome,
    NestedSequence, RemovalStrategy,
};
use crate::perfection::{non_adjacent_pairs, perfect_indices};

/// Largest vertex count accepted by the exhaustive oracles.
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// A cycle `v_1 ... v_k`, `k >= 4`, whose only edges are the consecutive ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChordlessCycle(Vec<VertexId>);

impl ChordlessCycle {
    /// Unchecked; see [`ChordlessCycle::is_valid_in`].
    pub fn new(cycle: Vec<VertexId>) -> Self {
        ChordlessCycle(cycle)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// At least four distinct vertices of `g`, cyclically consecutive ones
    /// adjacent, every other pair non-adjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.0.len();
        if k < 4 || self.0.iter().collect::<BTreeSet<_>>().len() != k {
            return false;
        }
        if !self.0.iter().all(|&v| g.contains(v)) {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                g.is_adjacent(self.0[i], self.0[j]) == consecutive
            })
        })
    }

    pub fn to_text(&self) -> String {
        format!("cycle: {}\n", join(self.0.iter()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CertificateRepr", try_from = "CertificateRepr")]
pub enum ChordalityCertificate {
    Chordal(NestedSequence),
    NotChordal(ChordlessCycle),
}

// Wire form: {"levels": [[..], ..]} or {"cycle": [..]}.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CertificateRepr {
    Levels { levels: Vec<Vec<VertexId>> },
    Cycle { cycle: Vec<VertexId> },
}

impl From<ChordalityCertificate> for CertificateRepr {
    fn from(cert: ChordalityCertificate) -> Self {
        match cert {
            ChordalityCertificate::Chordal(seq) => CertificateRepr::Levels {
                levels: seq
                    .levels()
                    .iter()
                    .map(|l| l.iter().copied().collect())
                    .collect(),
            },
            ChordalityCertificate::NotChordal(c) => CertificateRepr::Cycle { cycle: c.0 },
        }
    }
}

impl TryFrom<CertificateRepr> for ChordalityCertificate {
    type Error = String;

    fn try_from(repr: CertificateRepr) -> std::result::Result<Self, String> {
        Ok(match repr {
            CertificateRepr::Levels { levels } => {
                ChordalityCertificate::Chordal(NestedSequence::from_levels(
                    levels
                        .into_iter()
                        .map(|l| l.into_iter().collect())
                        .collect(),
                ))
            }
            CertificateRepr::Cycle { cycle } => {
                ChordalityCertificate::NotChordal(ChordlessCycle(cycle))
            }
        })
    }
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Chordal(_))
    }

    /// Sequence text block, or a single `cycle: ...` line.
    pub fn to_text(&self) -> String {
        match self {
            ChordalityCertificate::Chordal(seq) => seq.to_text(),
            ChordalityCertificate::NotChordal(c) => c.to_text(),
        }
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let first = text.lines().next().unwrap_or("");
        match first.strip_prefix("cycle:") {
            Some(rest) => rest
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map(VertexId)
                        .map_err(|_| Error::parse(1, format!("invalid vertex label {t:?}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(|c| ChordalityCertificate::NotChordal(ChordlessCycle(c))),
            None => NestedSequence::parse_text(text).map(ChordalityCertificate::Chordal),
        }
    }
}

/// Decides chordality using the all-perfect removal strategy.
pub fn is_chordal(g: &Graph) -> ChordalityCertificate {
    is_chordal_with(g, RemovalStrategy::AllPerfect)
}

pub fn is_chordal_with(g: &Graph, strategy: RemovalStrategy) -> ChordalityCertificate {
    let cert = match build_stationary_sequence(g, strategy) {
        BuildOutcome::Stationary(seq) => ChordalityCertificate::Chordal(seq),
        BuildOutcome::Stalled(core) => ChordalityCertificate::NotChordal(
            find_chordless_cycle(g, &core).expect("a stalled core contains a chordless cycle"),
        ),
    };
    debug_assert!(verify_certificate(g, &cert));
    cert
}

/// Extracts a chordless cycle from a stalled core: a non-empty vertex set in
/// which no vertex is perfect.
///
/// For the lowest `v` and each pair of non-adjacent neighbours `x`, `y` of
/// `v` inside the core, a shortest `x`-`y` path that avoids `v` and its other
/// neighbours closes a chordless cycle through `v`. Pairs and vertices are
/// tried in ascending order until one such path exists.
pub fn find_chordless_cycle(g: &Graph, core: &VertexSet) -> Result<ChordlessCycle> {
    let active = g.mask_of(core)?;
    if core.is_empty() {
        return Err(Error::NotStalled("core is empty".into()));
    }
    let perfect = perfect_indices(g, &active);
    if !perfect.is_empty() {
        return Err(Error::NotStalled(format!(
            "{} is perfect in the core",
            g.label(perfect[0])
        )));
    }
    for v in (0..g.vertex_count()).filter(|&v| active[v]) {
        for (x, y) in non_adjacent_pairs(g, v, &active) {
            let mut allowed = active.clone();
            allowed[v] = false;
            for &w in g.nbrs(v) {
                allowed[w] = false;
            }
            allowed[x] = true;
            allowed[y] = true;
            if let Some(path) = shortest_path(g, x, y, &allowed) {
                let mut cycle = vec![g.label(v)];
                cycle.extend(path.into_iter().map(|i| g.label(i)));
                return Ok(ChordlessCycle(cycle));
            }
        }
    }
    Err(Error::NotStalled("no chordless cycle found".into()))
}

// BFS inside `allowed`, neighbours visited in ascending order.
fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.nbrs(u) {
            if allowed[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Maximum cardinality search: repeatedly picks the unvisited vertex with
/// the most visited neighbours, ties broken by lowest label.
pub fn mcs_order(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for i in (0..n).filter(|&i| !visited[i]) {
            if best.is_none_or(|b| weight[i] > weight[b]) {
                best = Some(i);
            }
        }
        let u = best.unwrap();
        visited[u] = true;
        order.push(g.label(u));
        for &w in g.nbrs(u) {
            weight[w] += 1;
        }
    }
    order
}

/// The reversed MCS order is a perfect elimination ordering exactly when
/// the graph is chordal.
pub fn is_chordal_mcs(g: &Graph) -> bool {
    let mut order = mcs_order(g);
    order.reverse();
    verify_peo(g, &order).expect("MCS visits every vertex once")
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

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|i| g.nbrs(i).iter().fold(0u32, |m, &j| m | (1 << j)))
        .collect()
}

/// Exhaustive chordality test for `|V| <= 12`.
///
/// Searches cycles from each start vertex `s` (the least vertex on the
/// cycle) by depth-first extension, abandoning any partial cycle that has
/// already picked up a chord, and reports a chordless cycle as soon as one
/// closes with length at least four. The verdict is cross-checked against a
/// sweep over all vertex subsets for one that induces a cycle of length at
/// least four; the two must agree.
pub fn brute_force_chordal(g: &Graph) -> Result<bool> {
    guard(g)?;
    let adj = adjacency_masks(g);
    let by_search = chordless_cycle_search(&adj).is_none();
    let by_subsets = !has_induced_long_cycle(&adj);
    assert_eq!(
        by_search, by_subsets,
        "cycle search and subset sweep disagree"
    );
    Ok(by_search)
}

/// A chordless cycle found by [`brute_force_chordal`]'s search, if any.
pub fn brute_force_chordless_cycle(g: &Graph) -> Result<Option<ChordlessCycle>> {
    guard(g)?;
    let adj = adjacency_masks(g);
    Ok(chordless_cycle_search(&adj)
        .map(|c| ChordlessCycle(c.into_iter().map(|i| g.label(i)).collect())))
}

fn chordless_cycle_search(adj: &[u32]) -> Option<Vec<usize>> {
    fn extend(adj: &[u32], s: usize, path: &mut Vec<usize>, on_path: u32) -> bool {
        let k = path.len() - 1;
        let last = path[k];
        // Everything before `last`; a new vertex may touch none of these
        // except the start `s`, and touching `s` closes the cycle.
        let earlier = on_path & !(1 << last);
        let interior = earlier & !(1 << s);
        let mut cand = adj[last] & !on_path & !((1u32 << (s + 1)) - 1);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if adj[w] & interior != 0 {
                continue;
            }
            if adj[w] & (1 << s) != 0 {
                if k >= 2 {
                    path.push(w);
                    return true;
                }
                if k == 1 {
                    continue;
                }
            }
            path.push(w);
            if extend(adj, s, path, on_path | (1 << w)) {
                return true;
            }
            path.pop();
        }
        false
    }

    for s in 0..adj.len() {
        let mut path = vec![s];
        if extend(adj, s, &mut path, 1 << s) {
            return Some(path);
        }
    }
    None
}

fn has_induced_long_cycle(adj: &[u32]) -> bool {
    let n = adj.len();
    (0u32..1 << n).any(|set| {
        if set.count_ones() < 4 {
            return false;
        }
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if (adj[v] & set).count_ones() != 2 {
                return false;
            }
        }
        // 2-regular: a single cycle iff connected.
        let start = set.trailing_zeros();
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == set
    })
}

/// Every elementary cycle of length at least four, each listed once: it
/// starts at its least vertex and its second vertex is smaller than its last.
///
/// The count grows factorially on dense graphs; meant for tiny inputs.
pub fn elementary_cycles(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    guard(g)?;
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    fn walk(adj: &[u32], s: usize, path: &mut Vec<usize>, on: u32, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        let mut cand = adj[last];
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if w == s && path.len() >= 4 && path[1] < last {
                out.push(path.clone());
            }
            if w > s && on & (1 << w) == 0 {
                path.push(w);
                walk(adj, s, path, on | (1 << w), out);
                path.pop();
            }
        }
    }
    let mut raw = Vec::new();
    for s in 0..adj.len() {
        walk(&adj, s, &mut vec![s], 1 << s, &mut raw);
    }
    for c in raw {
        out.push(c.into_iter().map(|i| g.label(i)).collect());
    }
    Ok(out)
}

/// Definition-level check: every elementary cycle of length at least four
/// has a chord. Uses the unpruned enumeration, so only for tiny graphs.
pub fn all_long_cycles_have_chords(g: &Graph) -> Result<bool> {
    Ok(elementary_cycles(g)?.into_iter().all(|c| {
        let k = c.len();
        (0..k).any(|i| (i + 2..k).any(|j| !(i == 0 && j == k - 1) && g.is_adjacent(c[i], c[j])))
    }))
}

/// Checks the embedded witness against `g`.
pub fn verify_certificate(g: &Graph, cert: &ChordalityCertificate) -> bool {
    match cert {
        ChordalityCertificate::Chordal(seq) => verify_perfectly_nested(g, seq).is_ok_and(|r| r.ok),
        ChordalityCertificate::NotChordal(cycle) => cycle.is_valid_in(g),
    }
}

/// Human-readable verdict followed by the certificate text.
pub fn render_certificate(cert: &ChordalityCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "chordal: {}", cert.is_chordal()).unwrap();
    out.push_str(&cert.to_text());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::graph::vset;

    fn ids(xs: &[u64]) -> Vec<VertexId> {
        xs.iter().copied().map(VertexId).collect()
    }

    #[test]
    fn c4_certificate_is_the_cycle() {
        let c4 = gen_cycle(4).unwrap();
        let cert = is_chordal(&c4);
        assert_eq!(
            cert,
            ChordalityCertificate::NotChordal(ChordlessCycle::new(ids(&[0, 1, 2, 3])))
        );
        assert!(verify_certificate(&c4, &cert));
    }

    #[test]
    fn c5_certificate_is_the_cycle() {
        let c5 = gen_cycle(5).unwrap();
        let cert = is_chordal(&c5);
        assert_eq!(
            cert,
            ChordalityCertificate::NotChordal(ChordlessCycle::new(ids(&[0, 1, 2, 3, 4])))
        );
    }

    #[test]
    fn trees_are_chordal() {
        for seed in 0..10 {
            let t = gen_random_chordal(12, 1, seed).unwrap();
            assert!(is_chordal(&t).is_chordal());
        }
        assert!(is_chordal(&gen_star(6).unwrap()).is_chordal());
    }

    #[test]
    fn octahedron_not_chordal() {
        let oct = gen_complete_multipartite(3, 2).unwrap();
        let cert = is_chordal(&oct);
        let ChordalityCertificate::NotChordal(cycle) = &cert else {
            panic!("{cert:?}")
        };
        // Any chordless cycle in K_3(2) is a 4-cycle over two antipodal pairs.
        assert_eq!(cycle.len(), 4);
        assert!(verify_certificate(&oct, &cert));
        assert!(!brute_force_chordal(&oct).unwrap());
        assert!(!is_chordal_mcs(&oct));
    }

    #[test]
    fn c4_with_pendant() {
        // C_4 on 0..4 plus pendant 4 attached to 0.
        let g =
            Graph::from_pairs(&[0, 1, 2, 3, 4], &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(
            build_stationary_sequence(&g, RemovalStrategy::AllPerfect),
            BuildOutcome::Stalled(vset([0, 1, 2, 3]))
        );
        let cycle = find_chordless_cycle(&g, &vset([0, 1, 2, 3])).unwrap();
        assert_eq!(cycle.vertices(), ids(&[0, 1, 2, 3]).as_slice());
        assert!(cycle.is_valid_in(&g));
    }

    #[test]
    fn find_cycle_rejects_non_stalled_cores() {
        let p3 = gen_path(3).unwrap();
        assert!(matches!(
            find_chordless_cycle(&p3, &p3.vertex_set()),
            Err(Error::NotStalled(_))
        ));
        assert!(matches!(
            find_chordless_cycle(&p3, &VertexSet::new()),
            Err(Error::NotStalled(_))
        ));
        assert!(find_chordless_cycle(&p3, &vset([9])).is_err());
    }

    #[test]
    fn mcs_oracle() {
        assert!(is_chordal_mcs(&gen_complete(4).unwrap()));
        assert!(!is_chordal_mcs(&gen_cycle(4).unwrap()));
        assert!(is_chordal_mcs(&Graph::empty()));
    }

    #[test]
    fn brute_force_oracle() {
        assert!(!brute_force_chordal(&gen_cycle(4).unwrap()).unwrap());
        let chorded =
            Graph::from_pairs(&[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(brute_force_chordal(&chorded).unwrap());
        assert!(matches!(
            brute_force_chordal(&gen_path(13).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn elementary_cycle_counts() {
        // K_4 has three 4-cycles; C_5 has one 5-cycle; K_5 has 15 4-cycles and 12 5-cycles.
        assert_eq!(
            elementary_cycles(&gen_complete(4).unwrap()).unwrap().len(),
            3
        );
        assert_eq!(elementary_cycles(&gen_cycle(5).unwrap()).unwrap().len(), 1);
        assert_eq!(
            elementary_cycles(&gen_complete(5).unwrap()).unwrap().len(),
            27
        );
    }

    #[test]
    fn certificate_verification_cases() {
        let c4 = gen_cycle(4).unwrap();
        let k3 = gen_complete(3).unwrap();
        let good_cycle = ChordalityCertificate::NotChordal(ChordlessCycle::new(ids(&[0, 1, 2, 3])));
        assert!(verify_certificate(&c4, &good_cycle));
        let seq =
            ChordalityCertificate::Chordal(NestedSequence::from_levels(vec![vset([0, 1, 2])]));
        assert!(verify_certificate(&k3, &seq));
        let short = ChordalityCertificate::NotChordal(ChordlessCycle::new(ids(&[0, 1, 2])));
        assert!(!verify_certificate(&k3, &short));
        // Wrong cyclic order: 0-2 is not an edge of C_4.
        let scrambled = ChordalityCertificate::NotChordal(ChordlessCycle::new(ids(&[0, 2, 1, 3])));
        assert!(!verify_certificate(&c4, &scrambled));
        let unknown = ChordalityCertificate::Chordal(NestedSequence::from_levels(vec![vset([7])]));
        assert!(!verify_certificate(&k3, &unknown));
    }

    #[test]
    fn certificate_text_and_json_round_trip() {
        for g in [gen_cycle(6).unwrap(), gen_random_chordal(10, 3, 1).unwrap()] {
            let cert = is_chordal(&g);
            let back = ChordalityCertificate::parse_text(&cert.to_text()).unwrap();
            assert!(verify_certificate(&g, &back));
            let json = serde_json::to_string(&cert).unwrap();
            let back: ChordalityCertificate = serde_json::from_str(&json).unwrap();
            assert!(verify_certificate(&g, &back));
        }
        let json = serde_json::to_string(&is_chordal(&gen_cycle(4).unwrap())).unwrap();
        assert_eq!(json, r#"{"cycle":[0,1,2,3]}"#);
        let json = serde_json::to_string(&is_chordal(&gen_path(3).unwrap())).unwrap();
        assert_eq!(json, r#"{"levels":[[0,1,2],[1]]}"#);
    }
}
