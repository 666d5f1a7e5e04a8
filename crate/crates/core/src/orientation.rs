//! Acyclic orientations and dependent arcs.
//!
//! An arc `u -> v` of an acyclic orientation is dependent when reversing it
//! creates a directed cycle, equivalently when some directed walk of length
//! at least two also leads from `u` to `v`. A graph is fully orientable when
//! every count between the least and the greatest number of dependent arcs
//! over its acyclic orientations is attained.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest edge count [`orientation_spectrum`] will enumerate.
pub const SPECTRUM_EDGE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn new(tail: impl Into<VertexId>, head: impl Into<VertexId>) -> Self {
        Arc {
            tail: tail.into(),
            head: head.into(),
        }
    }

    pub fn reversed(self) -> Arc {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.tail, self.head)
    }
}

/// A direction on every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    // One arc per edge, in the order of `base.edges()`.
    arcs: Vec<Arc>,
}

impl Orientation {
    /// Fails unless `arcs` directs every edge of `g` exactly once and
    /// contains nothing else.
    pub fn new(g: &Graph, arcs: impl IntoIterator<Item = Arc>) -> Result<Orientation> {
        let edges = g.edges();
        let mut slot: Vec<Option<Arc>> = vec![None; edges.len()];
        for arc in arcs {
            let key = if arc.tail < arc.head {
                (arc.tail, arc.head)
            } else {
                (arc.head, arc.tail)
            };
            let k = edges
                .binary_search(&key)
                .map_err(|_| Error::InvalidOrientation(format!("{arc} is not an edge")))?;
            if slot[k].replace(arc).is_some() {
                return Err(Error::InvalidOrientation(format!(
                    "edge {{{}, {}}} directed twice",
                    key.0, key.1
                )));
            }
        }
        let arcs = slot
            .into_iter()
            .zip(&edges)
            .map(|(a, &(u, v))| {
                a.ok_or_else(|| {
                    Error::InvalidOrientation(format!("edge {{{u}, {v}}} has no direction"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation {
            base: g.clone(),
            arcs,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    fn out_lists(&self, skip: Option<usize>) -> Vec<Vec<usize>> {
        let g = &self.base;
        let mut out = vec![Vec::new(); g.vertex_count()];
        for (k, a) in self.arcs.iter().enumerate() {
            if Some(k) != skip {
                out[g.index_of(a.tail).unwrap()].push(g.index_of(a.head).unwrap());
            }
        }
        out
    }

    fn with_reversed(&self, k: usize) -> Orientation {
        let mut flipped = self.clone();
        flipped.arcs[k] = flipped.arcs[k].reversed();
        flipped
    }

    /// No directed cycle.
    pub fn is_acyclic(&self) -> bool {
        // Iterative three-color DFS.
        let out = self.out_lists(None);
        let n = out.len();
        let mut state = vec![0u8; n];
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if let Some(&w) = out[u].get(*next) {
                    *next += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => return false,
                        _ => {}
                    }
                } else {
                    state[u] = 2;
                    stack.pop();
                }
            }
        }
        true
    }

    /// Arcs `u -> v` such that `v` is still reachable from `u` once the arc
    /// itself is deleted.
    pub fn dependent_arcs(&self) -> Result<BTreeSet<Arc>> {
        if !self.is_acyclic() {
            return Err(Error::CyclicInput);
        }
        let g = &self.base;
        let mut found = BTreeSet::new();
        for (k, &arc) in self.arcs.iter().enumerate() {
            let out = self.out_lists(Some(k));
            let (s, t) = (g.index_of(arc.tail)?, g.index_of(arc.head)?);
            let mut seen = vec![false; out.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &out[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            if seen[t] {
                found.insert(arc);
            }
        }
        debug_assert_eq!(Ok(&found), self.reversal_dependent_arcs().as_ref());
        Ok(found)
    }

    /// Arcs whose reversal creates a directed cycle.
    pub fn reversal_dependent_arcs(&self) -> Result<BTreeSet<Arc>> {
        if !self.is_acyclic() {
            return Err(Error::CyclicInput);
        }
        Ok((0..self.arcs.len())
            .filter(|&k| !self.with_reversed(k).is_acyclic())
            .map(|k| self.arcs[k])
            .collect())
    }

    /// `d(D)`.
    pub fn dependent_count(&self) -> Result<usize> {
        Ok(self.dependent_arcs()?.len())
    }

    /// One `u -> v` line per arc, in edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.arcs {
            writeln!(out, "{a}").unwrap();
        }
        out
    }
}

/// Directs each edge from the endpoint that comes first in `order`.
pub fn orient_by_ordering(g: &Graph, order: &[VertexId]) -> Result<Orientation> {
    let idx = g.permutation_indices(order)?;
    let mut pos = vec![0; idx.len()];
    for (p, &i) in idx.iter().enumerate() {
        pos[i] = p;
    }
    let arcs = g.edges().into_iter().map(|(u, v)| {
        let (pu, pv) = (pos[g.index_of(u).unwrap()], pos[g.index_of(v).unwrap()]);
        if pu < pv {
            Arc { tail: u, head: v }
        } else {
            Arc { tail: v, head: u }
        }
    });
    Orientation::new(g, arcs)
}

fn edge_guard(g: &Graph) -> Result<()> {
    if g.edge_count() > SPECTRUM_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "edge count",
            actual: g.edge_count(),
            limit: SPECTRUM_EDGE_LIMIT,
        });
    }
    Ok(())
}

/// All `2^|E|` orientations, acyclic or not. Bit `k` of the index reverses
/// the `k`-th edge of `g.edges()` from `lo -> hi` to `hi -> lo`.
pub fn all_orientations(g: &Graph) -> Result<impl Iterator<Item = Orientation> + '_> {
    edge_guard(g)?;
    let edges = g.edges();
    Ok((0u64..1 << edges.len()).map(move |bits| Orientation {
        base: g.clone(),
        arcs: edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| {
                if bits >> k & 1 == 0 {
                    Arc { tail: u, head: v }
                } else {
                    Arc { tail: v, head: u }
                }
            })
            .collect(),
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub achievable_d: BTreeSet<usize>,
    pub d_min: usize,
    pub d_max: usize,
    pub fully_orientable: bool,
    /// Number of acyclic orientations enumerated.
    pub acyclic_orientations: u64,
}

impl SpectrumReport {
    fn from_values(achievable_d: BTreeSet<usize>, acyclic_orientations: u64) -> Self {
        let d_min = *achievable_d
            .first()
            .expect("every graph has an acyclic orientation");
        let d_max = *achievable_d.last().unwrap();
        let fully_orientable = achievable_d.len() == d_max - d_min + 1;
        SpectrumReport {
            achievable_d,
            d_min,
            d_max,
            fully_orientable,
            acyclic_orientations,
        }
    }

    /// `d_min d_max achievable:{..} fully_orientable:{true|false}`.
    pub fn to_text(&self) -> String {
        let values: Vec<String> = self.achievable_d.iter().map(usize::to_string).collect();
        format!(
            "{} {} achievable:{{{}}} fully_orientable:{}",
            self.d_min,
            self.d_max,
            values.join(","),
            self.fully_orientable
        )
    }
}

/// Dependent-arc counts over every acyclic orientation of `g` (`|E| <= 20`).
pub fn orientation_spectrum(g: &Graph) -> Result<SpectrumReport> {
    orientation_spectrum_threads(g, 1)
}

/// As [`orientation_spectrum`], splitting the enumeration over `threads`
/// workers. The report does not depend on the thread count.
pub fn orientation_spectrum_threads(g: &Graph, threads: usize) -> Result<SpectrumReport> {
    edge_guard(g)?;
    let kernel = SpectrumKernel::new(g);
    let total = 1u64 << kernel.edges.len();
    let threads = threads.clamp(1, 64) as u64;
    let chunk = total.div_ceil(threads);
    let parts: Vec<(BTreeSet<usize>, u64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let kernel = &kernel;
                let (lo, hi) = ((t * chunk).min(total), ((t + 1) * chunk).min(total));
                scope.spawn(move || kernel.run(lo..hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut values = BTreeSet::new();
    let mut count = 0;
    for (v, c) in parts {
        values.extend(v);
        count += c;
    }
    Ok(SpectrumReport::from_values(values, count))
}

// Bitmask evaluation over the non-isolated vertices (at most 2 * 20 = 40).
struct SpectrumKernel {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SpectrumKernel {
    fn new(g: &Graph) -> Self {
        let mut dense = vec![usize::MAX; g.vertex_count()];
        let mut n = 0;
        for i in 0..g.vertex_count() {
            if !g.nbrs(i).is_empty() {
                dense[i] = n;
                n += 1;
            }
        }
        let edges = g
            .edges()
            .into_iter()
            .map(|(u, v)| (dense[g.index_of(u).unwrap()], dense[g.index_of(v).unwrap()]))
            .collect();
        SpectrumKernel { n, edges }
    }

    /// `d(D)` for the orientation encoded by `bits`, or `None` if cyclic.
    fn dependent_count(&self, bits: u64, out: &mut [u64], reach: &mut [u64]) -> Option<usize> {
        out.fill(0);
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if bits >> k & 1 == 0 {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
        }
        // Peel sinks level by level; `reach[u]` gathers everything reachable
        // from `u` by at least one arc.
        let mut remaining: u64 = if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        };
        while remaining != 0 {
            let mut sinks = 0u64;
            let mut scan = remaining;
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if out[u] & remaining == 0 {
                    sinks |= 1 << u;
                }
            }
            if sinks == 0 {
                return None;
            }
            let mut scan = sinks;
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let mut r = out[u];
                let mut nb = out[u];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    r |= reach[w];
                }
                reach[u] = r;
            }
            remaining &= !sinks;
        }
        let mut d = 0;
        for u in 0..self.n {
            let mut via = 0u64;
            let mut nb = out[u];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                via |= reach[w];
            }
            d += (out[u] & via).count_ones() as usize;
        }
        Some(d)
    }

    fn run(&self, range: std::ops::Range<u64>) -> (BTreeSet<usize>, u64) {
        let mut out = vec![0u64; self.n];
        let mut reach = vec![0u64; self.n];
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for bits in range {
            if let Some(d) = self.dependent_count(bits, &mut out, &mut reach) {
                seen.insert(d);
                count += 1;
            }
        }
        (seen, count)
    }
}
