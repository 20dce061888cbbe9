//! Simple graphs and multigraphs on vertices `0..n`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A loop-free graph without parallel edges, stored as sorted adjacency
/// lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(SimpleGraph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Builds from adjacency lists already known to be symmetric, loop-free
    /// and duplicate-free.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            twice += list.len();
        }
        SimpleGraph {
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|a| a.len() as u32).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Upper-triangle adjacency bitset, a compact identity key for
    /// realizations of one degree sequence.
    pub fn edge_bitset(&self) -> Vec<u64> {
        let n = self.n();
        let bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64).max(1)];
        for (u, v) in self.edges() {
            let idx = u * (2 * n - u - 1) / 2 + (v - u - 1);
            words[idx / 64] |= 1 << (idx % 64);
        }
        words
    }

    /// One `"u v"` line per edge, labels `1..=n`, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.m() * 8);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Parses the edge-list format written by [`SimpleGraph::to_edge_list`].
    /// Blank lines and `#` comments are skipped.
    pub fn from_edge_list(n: usize, text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| GraphError::Parse {
                line: idx + 1,
                message,
            };
            let labels: Vec<usize> = line
                .split_whitespace()
                .map(|tok| tok.parse::<usize>().map_err(|e| parse_err(e.to_string())))
                .collect::<Result<_, _>>()?;
            match labels.as_slice() {
                &[u, v] if u >= 1 && v >= 1 => edges.push((u - 1, v - 1)),
                _ => return Err(parse_err(format!("expected two labels >= 1, got {line:?}"))),
            }
        }
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n()
    }
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges().map(|(u, v)| [u + 1, v + 1]).collect();
        let mut s = serializer.serialize_struct("SimpleGraph", 3)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("m", &self.m())?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

/// A multigraph that may contain loops and parallel edges. Edges are kept
/// as a sorted multiset of `(u, v)` with `u <= v`; a loop adds 2 to its
/// vertex's degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        MultiGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Multiplicity of the edge `{u, v}`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        let start = self.edges.partition_point(|e| *e < key);
        self.edges[start..]
            .iter()
            .take_while(|e| **e == key)
            .count()
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn to_simple(&self) -> Option<SimpleGraph> {
        if !self.is_simple() {
            return None;
        }
        SimpleGraph::from_edges(self.n, &self.edges).ok()
    }

    /// Number of components consisting of two vertices joined by exactly one
    /// edge, i.e. degree-1 vertices matched to each other.
    pub fn edge_component_count(&self, degrees: &[u32]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u != v && degrees[u] == 1 && degrees[v] == 1)
            .count()
    }
}
