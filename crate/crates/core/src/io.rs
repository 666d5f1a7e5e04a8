//! Edge-list and DIMACS text formats.
//!
//! Edge list: `#` starts a comment line, `u v` declares an edge, `n v`
//! declares a (possibly isolated) vertex. DIMACS: `c` comment lines, one
//! `p edge <n> <m>` header, then `e <u> <v>` lines with labels in `1..=n`.
//!
//! Writers are deterministic: edges sorted with the lower endpoint first.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// `.col` and `.dimacs` files are DIMACS, everything else is an edge list.
    pub fn from_path(path: &str) -> Format {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".col") || lower.ends_with(".dimacs") {
            Format::Dimacs
        } else {
            Format::EdgeList
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}

fn parse_label(tok: &str, line: usize) -> Result<u64> {
    tok.parse::<u64>()
        .map_err(|_| Error::parse(line, format!("invalid vertex label {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            ["n", v] => vertices.push(VertexId(parse_label(v, line)?)),
            [u, v] => {
                let (u, v) = (parse_label(u, line)?, parse_label(v, line)?);
                if u == v {
                    return Err(Error::parse(line, format!("loop edge on vertex {u}")));
                }
                vertices.push(VertexId(u));
                vertices.push(VertexId(v));
                edges.push((VertexId(u), VertexId(v)));
            }
            _ => {
                return Err(Error::parse(
                    line,
                    format!("expected \"u v\" or \"n v\", found {body:?}"),
                ))
            }
        }
    }
    Graph::from_edges(vertices, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<u64> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            ["p", kind, nv, ne] => {
                if n.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                if *kind != "edge" && *kind != "col" {
                    return Err(Error::parse(
                        line,
                        format!("unsupported problem kind {kind:?}"),
                    ));
                }
                n = Some(parse_label(nv, line)?);
                parse_label(ne, line)?;
            }
            ["e", u, v] => {
                let Some(n) = n else {
                    return Err(Error::parse(line, "edge before problem line"));
                };
                let (u, v) = (parse_label(u, line)?, parse_label(v, line)?);
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::parse(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(Error::parse(line, format!("loop edge on vertex {u}")));
                }
                edges.push((VertexId(u), VertexId(v)));
            }
            _ => return Err(Error::parse(line, format!("unrecognised line {body:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing problem line \"p edge <n> <m>\""))?;
    Graph::from_edges((1..=n).map(VertexId), edges)
}

/// Edges first, then one `n v` line per isolated vertex.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for &v in g.vertices() {
        if g.degree(v).unwrap() == 0 {
            writeln!(out, "n {v}").unwrap();
        }
    }
    out
}

/// Labels are renumbered `1..=n` by ascending rank, so a graph already
/// labelled `1..=n` is written unchanged.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        let ru = g.index_of(u).unwrap() + 1;
        let rv = g.index_of(v).unwrap() + 1;
        writeln!(out, "e {ru} {rv}").unwrap();
    }
    out
}
