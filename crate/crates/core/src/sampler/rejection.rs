use rand_core::RngCore;

use super::{HalfEdgeIndex, SampleError};
use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;
use crate::rng::uniform_index;

pub const DEFAULT_MAX_ATTEMPTS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectionOutcome {
    pub graph: SimpleGraph,
    pub attempts: u64,
}

/// Draws configuration-model matchings until one is simple.
///
/// Each attempt follows the draw order of [`super::random_matching`] but
/// stops as soon as a loop or repeated edge appears, since the finished
/// matching would be rejected anyway. Every simple graph comes from the same
/// number of matchings (the product of `d(v)!`), so the accepted graph is
/// uniform.
pub fn rejection_sample<R: RngCore + ?Sized>(
    seq: &DegreeSequence,
    rng: &mut R,
    max_attempts: u64,
) -> Result<RejectionOutcome, SampleError> {
    let index = HalfEdgeIndex::new(seq);
    let total = index.len();
    let mut pool: Vec<usize> = Vec::with_capacity(total);
    let mut adj: Vec<Vec<usize>> = seq
        .degrees()
        .iter()
        .map(|&d| Vec::with_capacity(d as usize))
        .collect();

    for attempt in 1..=max_attempts {
        pool.clear();
        pool.extend(0..total);
        adj.iter_mut().for_each(Vec::clear);

        let mut simple = true;
        while let Some(a) = pool.pop() {
            let b = pool.swap_remove(uniform_index(rng, pool.len()));
            let (u, v) = (index.owner(a), index.owner(b));
            if u == v || adj[u].contains(&v) {
                simple = false;
                break;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        if simple {
            return Ok(RejectionOutcome {
                graph: SimpleGraph::from_adjacency_unchecked(adj),
                attempts: attempt,
            });
        }
    }
    Err(SampleError::AttemptsExhausted { max_attempts })
}
