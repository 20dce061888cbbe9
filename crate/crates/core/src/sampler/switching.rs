use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::SimpleGraph;

/// Why a switching on oriented edges `(x, y)`, `(u, v)` is not allowed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("both oriented edges are the same edge")]
    SameEdge,
    #[error("x = v would create a loop")]
    LoopXV,
    #[error("u = y would create a loop")]
    LoopUY,
    #[error("the two edges share an endpoint")]
    SharedVertex,
    #[error("{0}-{1} is already an edge")]
    EdgeExists(usize, usize),
}

fn check(
    g: &SimpleGraph,
    (x, y): (usize, usize),
    (u, v): (usize, usize),
) -> Result<(), SwitchError> {
    for (a, b) in [(x, y), (u, v)] {
        if a >= g.n() || b >= g.n() || a == b || !g.has_edge(a, b) {
            return Err(SwitchError::NotAnEdge(a, b));
        }
    }
    if (x.min(y), x.max(y)) == (u.min(v), u.max(v)) {
        return Err(SwitchError::SameEdge);
    }
    if x == v {
        return Err(SwitchError::LoopXV);
    }
    if u == y {
        return Err(SwitchError::LoopUY);
    }
    if x == u || y == v {
        return Err(SwitchError::SharedVertex);
    }
    if g.has_edge(x, v) {
        return Err(SwitchError::EdgeExists(x, v));
    }
    if g.has_edge(u, y) {
        return Err(SwitchError::EdgeExists(u, y));
    }
    Ok(())
}

/// Replaces edges `xy` and `uv` by `xv` and `uy`.
///
/// Degrees are unchanged. Switching the result on `(x, v)`, `(u, y)` gives
/// back `g`.
pub fn switching(
    g: &SimpleGraph,
    xy: (usize, usize),
    uv: (usize, usize),
) -> Result<SimpleGraph, SwitchError> {
    check(g, xy, uv)?;
    let (x, y) = xy;
    let (u, v) = uv;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let removed = [key(x, y), key(u, v)];
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|e| !removed.contains(e)).collect();
    edges.push(key(x, v));
    edges.push(key(u, y));
    Ok(SimpleGraph::from_edges(g.n(), &edges).expect("validated switching keeps the graph simple"))
}

/// Every valid switching out of `h`, grouped by the graph it produces
/// (keyed by sorted edge list). A switching is an unordered pair of edges
/// with one of four orientation choices.
pub fn switch_counts(h: &SimpleGraph) -> BTreeMap<Vec<(usize, usize)>, usize> {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut out = BTreeMap::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            for xy in [(a, b), (b, a)] {
                for uv in [(c, d), (d, c)] {
                    if let Ok(target) = switching(h, xy, uv) {
                        *out.entry(target.edges().collect()).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    out
}

/// Number of switchings turning `h` into `j`.
pub fn switchings_between(h: &SimpleGraph, j: &SimpleGraph) -> usize {
    let key: Vec<(usize, usize)> = j.edges().collect();
    switch_counts(h).get(&key).copied().unwrap_or(0)
}
