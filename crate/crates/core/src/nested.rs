//! Perfectly nested sequences.
//!
//! A perfectly nested sequence on `G = (V, E)` is a decreasing chain
//! `U_0 = V ⊇ U_1 ⊇ ...` in which every `P(U_n)` is non-empty and every
//! removal set `U_n \ U_{n+1}` consists of vertices perfect in `G(U_n)`. It
//! is stationary once some level satisfies `P(U_n) = U_n`, that is once
//! `G(U_n)` is a disjoint union of cliques.
//!
//! Only finite graphs are handled. On infinite graphs a chordal graph need
//! not have any perfect vertex at all (the two-way infinite path), so the
//! construction below has no analogue there.
//!
//! A [`NestedSequence`] stores the finite prefix `[U_0, ..., U_k]` ending at
//! the first stationary level; the constant tail `U_k, U_k, ...` is implied.
//! The graph with no vertices has the single degenerate level `[∅]`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::perfection::{is_perfect_idx, perfect_indices};
use crate::rng::SplitMix64;

/// How many perfect vertices the builder removes at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum RemovalStrategy {
    /// Every vertex of `P(U_n)`.
    #[default]
    AllPerfect,
    /// The perfect vertex with the lowest label.
    SingleLowest,
    /// A uniformly random non-empty subset of `P(U_n)`.
    RandomSubset(u64),
}

impl fmt::Display for RemovalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RemovalStrategy::AllPerfect => f.write_str("all"),
            RemovalStrategy::SingleLowest => f.write_str("single"),
            RemovalStrategy::RandomSubset(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl std::str::FromStr for RemovalStrategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "all" => Ok(RemovalStrategy::AllPerfect),
            "single" => Ok(RemovalStrategy::SingleLowest),
            _ => match s.strip_prefix("random:") {
                Some(seed) => seed
                    .parse()
                    .map(RemovalStrategy::RandomSubset)
                    .map_err(|_| format!("invalid seed in strategy {s:?}")),
                None => Err(format!(
                    "unknown strategy {s:?} (expected all, single or random:<seed>)"
                )),
            },
        }
    }
}

/// Equality compares levels only; the recorded strategy is provenance.
#[derive(Clone, Debug)]
pub struct NestedSequence {
    levels: Vec<VertexSet>,
    /// `None` for sequences supplied from outside the builder.
    strategy: Option<RemovalStrategy>,
}

impl PartialEq for NestedSequence {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
    }
}

impl Eq for NestedSequence {}

impl NestedSequence {
    /// Wraps externally supplied levels. Nothing is checked here; run
    /// [`verify_perfectly_nested`] before trusting the result.
    pub fn from_levels(levels: Vec<VertexSet>) -> Self {
        NestedSequence {
            levels,
            strategy: None,
        }
    }

    pub fn levels(&self) -> &[VertexSet] {
        &self.levels
    }

    pub fn strategy(&self) -> Option<RemovalStrategy> {
        self.strategy
    }

    /// Number of stored levels, `k + 1`.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn terminal(&self) -> Option<&VertexSet> {
        self.levels.last()
    }

    /// The removal sets `U_n \ U_{n+1}` for `n < k`.
    pub fn removal_sets(&self) -> Vec<VertexSet> {
        self.levels
            .windows(2)
            .map(|w| w[0].difference(&w[1]).copied().collect())
            .collect()
    }

    /// `levels k+1` followed by one line per level, members ascending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "levels {}", self.levels.len()).unwrap();
        for level in &self.levels {
            writeln!(out, "{}", join(level.iter())).unwrap();
        }
        out
    }

    /// Inverse of [`NestedSequence::to_text`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing \"levels\" header"))?;
        let count: usize = header
            .strip_prefix("levels ")
            .and_then(|c| c.trim().parse().ok())
            .ok_or_else(|| Error::parse(1, format!("bad header {header:?}")))?;
        let mut levels = Vec::with_capacity(count);
        for _ in 0..count {
            let (k, line) = lines
                .next()
                .ok_or_else(|| Error::parse(count + 1, "missing level line"))?;
            let level = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map(VertexId)
                        .map_err(|_| Error::parse(k + 1, format!("invalid vertex label {t:?}")))
                })
                .collect::<Result<VertexSet>>()?;
            levels.push(level);
        }
        Ok(NestedSequence::from_levels(levels))
    }
}

pub(crate) fn join<'a, I: Iterator<Item = &'a VertexId>>(it: I) -> String {
    it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Result of [`build_stationary_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildOutcome {
    /// The builder reached a level with `P(U) = U`.
    Stationary(NestedSequence),
    /// The builder reached a non-empty level with `P(U) = ∅`.
    Stalled(VertexSet),
}

impl BuildOutcome {
    pub fn is_stationary(&self) -> bool {
        matches!(self, BuildOutcome::Stationary(_))
    }
}

/// Peels perfect vertices off `G` until the remainder is a disjoint union of
/// cliques (`Stationary`) or has no perfect vertex at all (`Stalled`).
///
/// Chordal graphs always end `Stationary`, non-chordal graphs always
/// `Stalled`, whatever the strategy. At most `|V|` removal steps happen.
pub fn build_stationary_sequence(g: &Graph, strategy: RemovalStrategy) -> BuildOutcome {
    let n = g.vertex_count();
    let mut active = vec![true; n];
    let mut remaining = n;
    let mut rng = match strategy {
        RemovalStrategy::RandomSubset(seed) => Some(SplitMix64::new(seed)),
        _ => None,
    };
    let as_set = |active: &[bool]| -> VertexSet {
        (0..n).filter(|&i| active[i]).map(|i| g.label(i)).collect()
    };
    let mut levels = vec![as_set(&active)];
    loop {
        let perfect = perfect_indices(g, &active);
        if perfect.len() == remaining {
            return BuildOutcome::Stationary(NestedSequence {
                levels,
                strategy: Some(strategy),
            });
        }
        if perfect.is_empty() {
            return BuildOutcome::Stalled(levels.pop().unwrap());
        }
        let removal: Vec<usize> = match strategy {
            RemovalStrategy::AllPerfect => perfect,
            RemovalStrategy::SingleLowest => vec![perfect[0]],
            RemovalStrategy::RandomSubset(_) => {
                let rng = rng.as_mut().unwrap();
                loop {
                    let pick: Vec<usize> = perfect.iter().copied().filter(|_| rng.coin()).collect();
                    if !pick.is_empty() {
                        break pick;
                    }
                }
            }
        };
        for &i in &removal {
            active[i] = false;
        }
        remaining -= removal.len();
        levels.push(as_set(&active));
    }
}

/// Which defining condition a level breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// `U_0` differs from the vertex set.
    NotStartV,
    /// `U_{n+1}` is not contained in `U_n`.
    NotNested,
    /// `P(U_n)` is empty.
    EmptyPerfect,
    /// Some removed vertex is not perfect in `G(U_n)`.
    RemovalNotPerfect,
    /// The last level does not satisfy `P(U_k) = U_k`.
    NotStationary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub level: usize,
    pub condition: Condition,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, level: usize, condition: Condition) -> bool {
        self.violations
            .iter()
            .any(|v| v.level == level && v.condition == condition)
    }
}

/// Checks `seq` against every defining condition and reports all
/// violations. Fails only if a level names a vertex outside `g`.
pub fn verify_perfectly_nested(g: &Graph, seq: &NestedSequence) -> Result<VerificationReport> {
    let masks = seq
        .levels
        .iter()
        .map(|level| g.mask_of(level))
        .collect::<Result<Vec<_>>>()?;
    let mut violations = Vec::new();
    let mut push = |level: usize, condition: Condition, detail: String| {
        violations.push(Violation {
            level,
            condition,
            detail,
        })
    };

    let Some(last) = seq.levels.len().checked_sub(1) else {
        push(0, Condition::NotStartV, "sequence has no levels".into());
        return Ok(VerificationReport::from_violations(violations));
    };
    if seq.levels[0] != g.vertex_set() {
        push(
            0,
            Condition::NotStartV,
            format!(
                "U_0 has {} vertices, the graph has {}",
                seq.levels[0].len(),
                g.vertex_count()
            ),
        );
    }
    for (k, pair) in seq.levels.windows(2).enumerate() {
        let escaped: Vec<&VertexId> = pair[1].difference(&pair[0]).collect();
        if !escaped.is_empty() {
            push(
                k + 1,
                Condition::NotNested,
                format!(
                    "U_{} contains {} not in U_{k}",
                    k + 1,
                    join(escaped.into_iter())
                ),
            );
        }
    }
    for (k, level) in seq.levels.iter().enumerate() {
        let perfect: Vec<usize> = perfect_indices(g, &masks[k]);
        let degenerate = k == last && level.is_empty() && g.is_empty();
        if perfect.is_empty() && !degenerate {
            push(k, Condition::EmptyPerfect, format!("P(U_{k}) is empty"));
        }
        if k < last {
            let bad: Vec<VertexId> = level
                .difference(&seq.levels[k + 1])
                .filter(|&&v| {
                    let i = g.index_of(v).unwrap();
                    !is_perfect_idx(g, i, Some(&masks[k]))
                })
                .copied()
                .collect();
            if !bad.is_empty() {
                push(
                    k,
                    Condition::RemovalNotPerfect,
                    format!("removed {} not perfect in G(U_{k})", join(bad.iter())),
                );
            }
        } else if perfect.len() != level.len() {
            push(
                k,
                Condition::NotStationary,
                format!(
                    "P(U_{k}) has {} of {} vertices; G(U_{k}) is not a union of cliques",
                    perfect.len(),
                    level.len()
                ),
            );
        }
    }
    Ok(VerificationReport::from_violations(violations))
}

/// Reads a perfect elimination ordering off a verified sequence.
///
/// Removal batches come first, level by level, each in ascending label
/// order; then the terminal level, one clique component at a time
/// (components by least label, members ascending).
pub fn peo_from_sequence(g: &Graph, seq: &NestedSequence) -> Result<Vec<VertexId>> {
    let report = verify_perfectly_nested(g, seq)?;
    if !report.ok {
        let summary = report
            .violations
            .iter()
            .map(|v| format!("level {}: {:?}", v.level, v.condition))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::InvalidSequence(summary));
    }
    let mut order: Vec<VertexId> = seq.removal_sets().into_iter().flatten().collect();
    let terminal = seq.terminal().expect("verified sequences are non-empty");
    let mask = g.mask_of(terminal)?;
    for comp in g.components_idx(&mask) {
        order.extend(comp.into_iter().map(|i| g.label(i)));
    }
    Ok(order)
}

/// True iff every `order[i]` is perfect among `order[i..]`.
pub fn verify_peo(g: &Graph, order: &[VertexId]) -> Result<bool> {
    Ok(peo_violation(g, order)?.is_none())
}

/// First vertex of `order` that is not simplicial among its successors.
pub(crate) fn peo_violation(g: &Graph, order: &[VertexId]) -> Result<Option<VertexId>> {
    let idx = g.permutation_indices(order)?;
    let mut pos = vec![0; idx.len()];
    for (p, &i) in idx.iter().enumerate() {
        pos[i] = p;
    }
    for (p, &i) in idx.iter().enumerate() {
        let later: Vec<usize> = g.nbrs(i).iter().copied().filter(|&j| pos[j] > p).collect();
        if !g.is_clique_idx(&later) {
            return Ok(Some(g.label(i)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_cycle, gen_path, gen_random_chordal};
    use crate::graph::vset;

    const STRATEGIES: [RemovalStrategy; 3] = [
        RemovalStrategy::AllPerfect,
        RemovalStrategy::SingleLowest,
        RemovalStrategy::RandomSubset(42),
    ];

    fn ids(xs: &[u64]) -> Vec<VertexId> {
        xs.iter().copied().map(VertexId).collect()
    }

    fn levels(seq: &NestedSequence) -> Vec<VertexSet> {
        seq.levels().to_vec()
    }

    #[test]
    fn triangle_is_stationary_at_once() {
        let k3 = gen_complete(3).unwrap();
        for s in STRATEGIES {
            match build_stationary_sequence(&k3, s) {
                BuildOutcome::Stationary(seq) => assert_eq!(levels(&seq), vec![vset([0, 1, 2])]),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn path_peels_leaves() {
        let p3 = gen_path(3).unwrap();
        let BuildOutcome::Stationary(seq) =
            build_stationary_sequence(&p3, RemovalStrategy::AllPerfect)
        else {
            panic!()
        };
        assert_eq!(levels(&seq), vec![vset([0, 1, 2]), vset([1])]);
        assert_eq!(seq.strategy(), Some(RemovalStrategy::AllPerfect));
        assert_eq!(peo_from_sequence(&p3, &seq).unwrap(), ids(&[0, 2, 1]));
    }

    #[test]
    fn cycles_stall_immediately() {
        for n in [4, 5] {
            let c = gen_cycle(n).unwrap();
            for s in STRATEGIES {
                assert_eq!(
                    build_stationary_sequence(&c, s),
                    BuildOutcome::Stalled(c.vertex_set())
                );
            }
        }
    }

    #[test]
    fn empty_graph_is_degenerate_stationary() {
        let g = Graph::empty();
        let BuildOutcome::Stationary(seq) =
            build_stationary_sequence(&g, RemovalStrategy::AllPerfect)
        else {
            panic!()
        };
        assert_eq!(levels(&seq), vec![VertexSet::new()]);
        assert!(verify_perfectly_nested(&g, &seq).unwrap().ok);
        assert!(peo_from_sequence(&g, &seq).unwrap().is_empty());
    }

    #[test]
    fn verifier_accepts_valid_sequences() {
        let p3 = gen_path(3).unwrap();
        let seq = NestedSequence::from_levels(vec![vset([0, 1, 2]), vset([1])]);
        assert!(verify_perfectly_nested(&p3, &seq).unwrap().ok);
        let k2 = gen_complete(2).unwrap();
        let seq = NestedSequence::from_levels(vec![vset([0, 1])]);
        assert!(verify_perfectly_nested(&k2, &seq).unwrap().ok);
    }

    #[test]
    fn verifier_reports_every_violation() {
        let c4 = gen_cycle(4).unwrap();
        let seq = NestedSequence::from_levels(vec![vset([0, 1, 2, 3]), vset([0, 1, 2])]);
        let report = verify_perfectly_nested(&c4, &seq).unwrap();
        assert!(!report.ok);
        assert!(report.has(0, Condition::RemovalNotPerfect));
        assert!(report.has(0, Condition::EmptyPerfect));
        assert!(report.has(1, Condition::NotStationary));

        let p3 = gen_path(3).unwrap();
        let bad = NestedSequence::from_levels(vec![vset([0, 1]), vset([0, 1, 2])]);
        let report = verify_perfectly_nested(&p3, &bad).unwrap();
        assert!(report.has(0, Condition::NotStartV));
        assert!(report.has(1, Condition::NotNested));

        let empty = NestedSequence::from_levels(vec![]);
        assert!(verify_perfectly_nested(&p3, &empty)
            .unwrap()
            .has(0, Condition::NotStartV));

        // Removing everything leaves an empty terminal level with P = ∅.
        let k2 = gen_complete(2).unwrap();
        let drained = NestedSequence::from_levels(vec![vset([0, 1]), VertexSet::new()]);
        assert!(verify_perfectly_nested(&k2, &drained)
            .unwrap()
            .has(1, Condition::EmptyPerfect));
    }

    #[test]
    fn verifier_rejects_unknown_vertices() {
        let p3 = gen_path(3).unwrap();
        let seq = NestedSequence::from_levels(vec![vset([0, 1, 7])]);
        assert_eq!(
            verify_perfectly_nested(&p3, &seq),
            Err(Error::UnknownVertex(VertexId(7)))
        );
    }

    #[test]
    fn peo_from_invalid_sequence_fails() {
        let c4 = gen_cycle(4).unwrap();
        let seq = NestedSequence::from_levels(vec![vset([0, 1, 2, 3])]);
        assert!(matches!(
            peo_from_sequence(&c4, &seq),
            Err(Error::InvalidSequence(_))
        ));
    }

    #[test]
    fn peo_of_triangle_is_ascending() {
        let k3 = gen_complete(3).unwrap();
        let seq = NestedSequence::from_levels(vec![vset([0, 1, 2])]);
        assert_eq!(peo_from_sequence(&k3, &seq).unwrap(), ids(&[0, 1, 2]));
    }

    #[test]
    fn verify_peo_cases() {
        let p3 = gen_path(3).unwrap();
        assert!(!verify_peo(&p3, &ids(&[1, 0, 2])).unwrap());
        assert!(verify_peo(&p3, &ids(&[0, 2, 1])).unwrap());
        assert!(matches!(
            verify_peo(&p3, &ids(&[0, 1])),
            Err(Error::NotAPermutation(_))
        ));
        let k4 = gen_complete(4).unwrap();
        assert!(verify_peo(&k4, &ids(&[3, 1, 0, 2])).unwrap());
    }

    fn permutations(xs: &[u64]) -> Vec<Vec<u64>> {
        if xs.len() <= 1 {
            return vec![xs.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..xs.len() {
            let mut rest = xs.to_vec();
            let head = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn no_ordering_of_c4_is_a_peo() {
        let c4 = gen_cycle(4).unwrap();
        let all = permutations(&[0, 1, 2, 3]);
        assert_eq!(all.len(), 24);
        for p in all {
            assert!(!verify_peo(&c4, &ids(&p)).unwrap(), "{p:?}");
        }
    }

    #[test]
    fn single_lowest_sequences_give_peos() {
        for seed in 0..50 {
            let g = gen_random_chordal(25, 4, seed).unwrap();
            let BuildOutcome::Stationary(seq) =
                build_stationary_sequence(&g, RemovalStrategy::SingleLowest)
            else {
                panic!("seed {seed}")
            };
            assert!(seq.removal_sets().iter().all(|r| r.len() == 1));
            let order = peo_from_sequence(&g, &seq).unwrap();
            assert!(verify_peo(&g, &order).unwrap());
        }
    }

    #[test]
    fn text_round_trip() {
        let seq = NestedSequence::from_levels(vec![vset([0, 1, 2]), vset([1])]);
        let text = seq.to_text();
        assert_eq!(text, "levels 2\n0 1 2\n1\n");
        assert_eq!(NestedSequence::parse_text(&text).unwrap(), seq);
        assert!(NestedSequence::parse_text("levels 3\n0 1\n").is_err());
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("all".parse(), Ok(RemovalStrategy::AllPerfect));
        assert_eq!("single".parse(), Ok(RemovalStrategy::SingleLowest));
        assert_eq!("random:9".parse(), Ok(RemovalStrategy::RandomSubset(9)));
        assert!("random:x".parse::<RemovalStrategy>().is_err());
        assert!("fast".parse::<RemovalStrategy>().is_err());
        assert_eq!(RemovalStrategy::RandomSubset(3).to_string(), "random:3");
    }
}
