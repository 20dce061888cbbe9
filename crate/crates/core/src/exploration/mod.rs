//! Component exploration with open half-edge bookkeeping.
//!
//! Starting from one vertex, each iteration picks the tree vertex with the
//! fewest open half-edges (smallest label on ties) and exposes all of them.
//! A partner outside the tree joins it and contributes its remaining
//! half-edges; a partner inside the tree closes one of its own. The count of
//! open half-edges `X` is a walk that hits 0 exactly when the component is
//! fully explored.
//!
//! Per iteration, `J`, `K` and `L` count exposed half-edges of the active
//! vertex whose partner lies, respectively, on a new degree-1 vertex, on a
//! new degree-2 vertex, or on a vertex already in the tree. The classes are
//! disjoint; tree membership wins. A loop puts both of its half-edges in
//! `L`.

mod checks;
mod revealing;
mod truncation;

use std::collections::BTreeSet;

use serde::Serialize;

pub use checks::{check_record, InvariantViolation, ViolationKind};
pub use revealing::{explore_configuration, explore_revealing, RealizedGraph, RevealMode};
pub use truncation::{truncated_increment, TruncationParams};

use crate::graph::SimpleGraph;

/// One iteration of the exploration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationRecord {
    /// Iteration number, from 1.
    pub i: usize,
    pub vertex: usize,
    /// Open half-edges of `vertex` when it was selected.
    pub open: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
    /// Matched pairs exposed in this iteration (a loop is one pair).
    pub pairs: u32,
    pub x_prev: u64,
    pub x: u64,
    pub x_star: f64,
    /// `(vertex, degree)` for each vertex that joined the tree.
    pub new_vertices: Vec<(usize, u32)>,
}

impl IterationRecord {
    pub fn step(&self) -> i64 {
        self.x as i64 - self.x_prev as i64
    }

    pub fn truncated_increment<F: num_traits::Float>(
        &self,
        m: u64,
        params: &TruncationParams,
    ) -> F {
        truncated_increment(self.open, self.step(), m, params)
    }
}

/// A record of the walk padded to a fixed length; steps after the walk
/// dies are all zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkStep {
    pub i: usize,
    pub open: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
    pub step: i64,
    pub x: u64,
    pub x_star: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExplorationTrace {
    pub start: usize,
    pub records: Vec<IterationRecord>,
    /// Vertices of the explored component, ascending.
    pub component: Vec<usize>,
    /// Iteration at which `X` reached 0.
    pub died_at: usize,
    /// `(parent, child)` tree edges in discovery order.
    pub tree_edges: Vec<(usize, usize)>,
    /// Every exposed edge `(active vertex, partner vertex)`, tree edges
    /// included.
    pub explored_edges: Vec<(usize, usize)>,
    /// Half-edge pairs `(active, partner)` behind `explored_edges`.
    pub submatching: Vec<(usize, usize)>,
    /// Edge count of the graph the exploration ran on.
    pub m: u64,
}

impl ExplorationTrace {
    /// Records padded with zero steps to `len` iterations.
    pub fn walk(&self, len: usize) -> Vec<WalkStep> {
        let mut out: Vec<WalkStep> = self
            .records
            .iter()
            .map(|r| WalkStep {
                i: r.i,
                open: r.open,
                j: r.j,
                k: r.k,
                l: r.l,
                step: r.step(),
                x: r.x,
                x_star: r.x_star,
            })
            .collect();
        for i in out.len() + 1..=len {
            out.push(WalkStep {
                i,
                open: 0,
                j: 0,
                k: 0,
                l: 0,
                step: 0,
                x: 0,
                x_star: 0.0,
            });
        }
        out
    }

    /// `i,v_i,d_i,J,K,L,X,X_star` rows, vertices labelled from 1.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,v_i,d_i,J,K,L,X,X_star\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.i,
                r.vertex + 1,
                r.open,
                r.j,
                r.k,
                r.l,
                r.x,
                r.x_star
            ));
        }
        out
    }

    /// JSON-friendly copy with vertices labelled from 1.
    pub fn export(&self) -> TraceExport {
        TraceExport {
            start: self.start + 1,
            m: self.m,
            died_at: self.died_at,
            component: self.component.iter().map(|v| v + 1).collect(),
            records: self
                .records
                .iter()
                .map(|r| RecordExport {
                    i: r.i,
                    v_i: r.vertex + 1,
                    d_i: r.open,
                    j: r.j,
                    k: r.k,
                    l: r.l,
                    x: r.x,
                    x_star: r.x_star,
                    new_vertices: r
                        .new_vertices
                        .iter()
                        .map(|&(v, d)| [v + 1, d as usize])
                        .collect(),
                })
                .collect(),
        }
    }

    /// Checks every record; `simple` enables the bounds on `L` that only
    /// hold without loops and parallel edges.
    pub fn violations(&self, simple: bool) -> Vec<InvariantViolation> {
        self.records
            .iter()
            .flat_map(|r| check_record(r, simple))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceExport {
    pub start: usize,
    pub m: u64,
    pub died_at: usize,
    pub component: Vec<usize>,
    pub records: Vec<RecordExport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordExport {
    pub i: usize,
    pub v_i: usize,
    pub d_i: u32,
    #[serde(rename = "J")]
    pub j: u32,
    #[serde(rename = "K")]
    pub k: u32,
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "X")]
    pub x: u64,
    #[serde(rename = "X_star")]
    pub x_star: f64,
    pub new_vertices: Vec<[usize; 2]>,
}

/// Source of half-edge partners for an exploration.
pub(crate) trait Revealer {
    fn vertex_count(&self) -> usize;
    fn degree(&self, v: usize) -> u32;
    fn owner(&self, half_edge: usize) -> usize;
    /// Unmatched half-edges of `v`, ascending.
    fn open_half_edges(&self, v: usize) -> Vec<usize>;
    /// Matches `half_edge` and returns its partner, or `None` if it was
    /// matched earlier in the same iteration.
    fn reveal(&mut self, half_edge: usize) -> Option<usize>;
    fn edge_count(&self) -> u64;
}

/// Mutable state of one exploration.
#[derive(Debug, Clone)]
pub struct ExplorationState {
    in_tree: Vec<bool>,
    open: Vec<u32>,
    queue: BTreeSet<(u32, usize)>,
    x: i64,
    iteration: usize,
}

impl ExplorationState {
    fn new(n: usize, start: usize, start_degree: u32) -> Self {
        let mut state = ExplorationState {
            in_tree: vec![false; n],
            open: vec![0; n],
            queue: BTreeSet::new(),
            x: i64::from(start_degree),
            iteration: 0,
        };
        state.in_tree[start] = true;
        state.set_open(start, start_degree);
        state
    }

    fn set_open(&mut self, v: usize, value: u32) {
        if self.open[v] > 0 {
            self.queue.remove(&(self.open[v], v));
        }
        self.open[v] = value;
        if value > 0 {
            self.queue.insert((value, v));
        }
    }

    /// Open half-edges currently held by `v`.
    pub fn open(&self, v: usize) -> u32 {
        self.open[v]
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn in_tree(&self, v: usize) -> bool {
        self.in_tree[v]
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }
}

pub(crate) fn run<R: Revealer>(revealer: &mut R, start: usize) -> ExplorationTrace {
    let n = revealer.vertex_count();
    assert!(
        start < n,
        "start vertex {start} out of range for {n} vertices"
    );
    let m = revealer.edge_count();
    let params = TruncationParams::default();

    let mut state = ExplorationState::new(n, start, revealer.degree(start));
    let mut component = vec![start];
    let mut records = Vec::new();
    let mut tree_edges = Vec::new();
    let mut explored_edges = Vec::new();
    let mut submatching = Vec::new();

    while let Some(&(open_v, v)) = state.queue.first() {
        state.iteration += 1;
        let x_prev = state.x;
        let (mut j, mut k, mut l, mut pairs) = (0u32, 0u32, 0u32, 0u32);
        let mut new_vertices = Vec::new();

        for h in revealer.open_half_edges(v) {
            let Some(p) = revealer.reveal(h) else {
                continue;
            };
            let w = revealer.owner(p);
            pairs += 1;
            submatching.push((h, p));
            explored_edges.push((v, w));
            if w == v {
                l += 2;
                state.set_open(v, state.open[v] - 2);
                state.x -= 2;
            } else if state.in_tree[w] {
                l += 1;
                state.set_open(v, state.open[v] - 1);
                state.set_open(w, state.open[w] - 1);
                state.x -= 2;
            } else {
                let dw = revealer.degree(w);
                match dw {
                    1 => j += 1,
                    2 => k += 1,
                    _ => {}
                }
                state.in_tree[w] = true;
                component.push(w);
                tree_edges.push((v, w));
                new_vertices.push((w, dw));
                state.set_open(v, state.open[v] - 1);
                state.set_open(w, dw - 1);
                state.x += i64::from(dw) - 2;
            }
        }
        debug_assert_eq!(state.open[v], 0);

        let step = state.x - x_prev;
        records.push(IterationRecord {
            i: state.iteration,
            vertex: v,
            open: open_v,
            j,
            k,
            l,
            pairs,
            x_prev: x_prev as u64,
            x: state.x as u64,
            x_star: truncated_increment(open_v, step, m, &params),
            new_vertices,
        });
    }
    debug_assert_eq!(state.x, 0);

    component.sort_unstable();
    ExplorationTrace {
        start,
        died_at: records.len(),
        records,
        component,
        tree_edges,
        explored_edges,
        submatching,
        m,
    }
}

/// Half-edges of a fixed simple graph: slot `s` of `v` is the edge to the
/// `s`-th smallest neighbour, so ascending slots visit neighbours in label
/// order.
struct FixedGraph<'a> {
    graph: &'a SimpleGraph,
    offsets: Vec<usize>,
    owners: Vec<usize>,
    matched: Vec<bool>,
}

impl<'a> FixedGraph<'a> {
    fn new(graph: &'a SimpleGraph) -> Self {
        let mut offsets = Vec::with_capacity(graph.n() + 1);
        let mut owners = Vec::with_capacity(2 * graph.m());
        offsets.push(0);
        for v in 0..graph.n() {
            owners.extend(std::iter::repeat_n(v, graph.degree(v)));
            offsets.push(owners.len());
        }
        FixedGraph {
            graph,
            matched: vec![false; owners.len()],
            offsets,
            owners,
        }
    }
}

impl Revealer for FixedGraph<'_> {
    fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    fn degree(&self, v: usize) -> u32 {
        self.graph.degree(v) as u32
    }

    fn owner(&self, half_edge: usize) -> usize {
        self.owners[half_edge]
    }

    fn open_half_edges(&self, v: usize) -> Vec<usize> {
        (self.offsets[v]..self.offsets[v + 1])
            .filter(|&h| !self.matched[h])
            .collect()
    }

    fn reveal(&mut self, h: usize) -> Option<usize> {
        if self.matched[h] {
            return None;
        }
        let v = self.owners[h];
        let w = self.graph.neighbors(v)[h - self.offsets[v]];
        let back = self
            .graph
            .neighbors(w)
            .binary_search(&v)
            .expect("adjacency is symmetric");
        let p = self.offsets[w] + back;
        self.matched[h] = true;
        self.matched[p] = true;
        Some(p)
    }

    fn edge_count(&self) -> u64 {
        self.graph.m() as u64
    }
}

/// Explores the component of `start` in `g`. Deterministic.
///
/// Panics if `start >= g.n()`.
pub fn explore(g: &SimpleGraph, start: usize) -> ExplorationTrace {
    run(&mut FixedGraph::new(g), start)
}
