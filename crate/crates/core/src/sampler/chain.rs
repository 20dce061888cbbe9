use rand_core::RngCore;

use super::{havel_hakimi_construct, SampleError};
use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;
use crate::rng::{uniform_below, uniform_index};

/// `20 * m * ceil(ln m)` proposals.
pub fn default_chain_steps(m: u64) -> u64 {
    if m < 2 {
        return 0;
    }
    20 * m * (m as f64).ln().ceil() as u64
}

/// Lazy edge-switching Markov chain on the realizations of one sequence.
///
/// A proposal picks an ordered pair of distinct edges uniformly
/// (`i = uniform(m)`, `j = uniform(m - 1)`, shifted past `i`), then an
/// orientation `o = uniform(4)`: bit 0 reverses the first edge, bit 1 the
/// second. The switching is applied when valid and the chain holds
/// otherwise. Proposals sharing an endpoint are invalid. The kernel is
/// symmetric, so the stationary law is uniform.
#[derive(Debug, Clone)]
pub struct SwitchChain {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SwitchChain {
    pub fn new(g: &SimpleGraph) -> Self {
        SwitchChain {
            edges: g.edges().collect(),
            adj: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        let (s, t) = if self.adj[a].len() <= self.adj[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.adj[s].contains(&t)
    }

    fn replace_neighbor(&mut self, v: usize, old: usize, new: usize) {
        let slot = self.adj[v]
            .iter()
            .position(|&w| w == old)
            .expect("edge present in adjacency");
        self.adj[v][slot] = new;
    }

    /// One proposal; returns whether the state moved.
    pub fn step<R: RngCore + ?Sized>(&mut self, rng: &mut R) -> bool {
        let m = self.edges.len();
        if m < 2 {
            return false;
        }
        let i = uniform_index(rng, m);
        let mut j = uniform_index(rng, m - 1);
        if j >= i {
            j += 1;
        }
        let orientation = uniform_below(rng, 4);
        let (mut x, mut y) = self.edges[i];
        if orientation & 1 == 1 {
            std::mem::swap(&mut x, &mut y);
        }
        let (mut u, mut v) = self.edges[j];
        if orientation & 2 == 2 {
            std::mem::swap(&mut u, &mut v);
        }
        if x == v || u == y || x == u || y == v || self.has_edge(x, v) || self.has_edge(u, y) {
            return false;
        }
        // xy, uv -> xv, uy
        self.replace_neighbor(x, y, v);
        self.replace_neighbor(y, x, u);
        self.replace_neighbor(u, v, y);
        self.replace_neighbor(v, u, x);
        self.edges[i] = (x.min(v), x.max(v));
        self.edges[j] = (u.min(y), u.max(y));
        true
    }

    pub fn run<R: RngCore + ?Sized>(&mut self, steps: u64, rng: &mut R) -> u64 {
        (0..steps).filter(|_| self.step(rng)).count() as u64
    }

    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_adjacency_unchecked(self.adj.clone())
    }
}

/// Runs the switch chain for `steps` proposals from `initial`, or from the
/// Havel–Hakimi realization when `initial` is `None`.
pub fn switch_chain_sample<R: RngCore + ?Sized>(
    seq: &DegreeSequence,
    steps: u64,
    rng: &mut R,
    initial: Option<&SimpleGraph>,
) -> Result<SimpleGraph, SampleError> {
    let start = match initial {
        Some(g) if g.degrees() != seq.degrees() => return Err(SampleError::InitialMismatch),
        Some(g) => g.clone(),
        None => havel_hakimi_construct(seq),
    };
    let mut chain = SwitchChain::new(&start);
    chain.run(steps, rng);
    Ok(chain.graph())
}
