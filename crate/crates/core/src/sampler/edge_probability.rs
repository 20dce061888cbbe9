use num_rational::Ratio;
use thiserror::Error;

use super::{HalfEdge, HalfEdgeIndex, Matching};
use crate::degseq::DegreeSequence;

/// Enumeration guard: at most 20 half-edges (19!! ~ 6.5e8 matchings).
pub const MAX_ORACLE_HALF_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeProbabilityError {
    #[error("{half_edges} half-edges exceed the enumeration guard of {MAX_ORACLE_HALF_EDGES}")]
    TooLarge { half_edges: usize },
    #[error("partial matching has no simple completion")]
    NotExtendable,
    #[error("partial matching covers {found} half-edges, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("half-edge {0} does not exist")]
    InvalidHalfEdge(usize),
    #[error("half-edge {0} is already matched")]
    AlreadyMatched(usize),
    #[error("half-edges belong to the same vertex")]
    SameOwner,
}

/// Calls `visit` on every full matching that extends `partial` and induces
/// a simple graph; returns how many there were.
pub fn simple_completions<F: FnMut(&Matching)>(
    index: &HalfEdgeIndex,
    partial: &Matching,
    mut visit: F,
) -> Result<u64, EdgeProbabilityError> {
    if index.len() > MAX_ORACLE_HALF_EDGES {
        return Err(EdgeProbabilityError::TooLarge {
            half_edges: index.len(),
        });
    }
    if partial.len() != index.len() {
        return Err(EdgeProbabilityError::LengthMismatch {
            expected: index.len(),
            found: partial.len(),
        });
    }
    let n = index.vertex_count();
    let mut adjacent = vec![false; n * n];
    for (a, b) in partial.pairs() {
        let (u, v) = (index.owner(a), index.owner(b));
        if u == v || adjacent[u * n + v] {
            return Ok(0);
        }
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut matching = partial.clone();
    let mut count = 0;
    extend(
        index,
        &mut matching,
        &mut adjacent,
        0,
        &mut count,
        &mut visit,
    );
    Ok(count)
}

fn extend<F: FnMut(&Matching)>(
    index: &HalfEdgeIndex,
    matching: &mut Matching,
    adjacent: &mut [bool],
    from: usize,
    count: &mut u64,
    visit: &mut F,
) {
    let n = index.vertex_count();
    let Some(a) = (from..matching.len()).find(|&h| !matching.is_matched(h)) else {
        *count += 1;
        visit(matching);
        return;
    };
    let u = index.owner(a);
    for b in a + 1..matching.len() {
        if matching.is_matched(b) {
            continue;
        }
        let v = index.owner(b);
        if u == v || adjacent[u * n + v] {
            continue;
        }
        matching.pair(a, b).expect("both unmatched");
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
        extend(index, matching, adjacent, a + 1, count, visit);
        adjacent[u * n + v] = false;
        adjacent[v * n + u] = false;
        matching.unpair(a);
    }
}

/// Exact probability that `hv` is matched to `hw`, over uniformly random
/// full matchings that contain `partial` and induce a simple graph.
pub fn conditional_edge_probability_oracle(
    seq: &DegreeSequence,
    partial: &Matching,
    hv: HalfEdge,
    hw: HalfEdge,
) -> Result<Ratio<u64>, EdgeProbabilityError> {
    let index = HalfEdgeIndex::new(seq);
    if index.len() > MAX_ORACLE_HALF_EDGES {
        return Err(EdgeProbabilityError::TooLarge {
            half_edges: index.len(),
        });
    }
    for h in [hv, hw] {
        if h.global_id >= index.len() || index.half_edge(h.global_id) != h {
            return Err(EdgeProbabilityError::InvalidHalfEdge(h.global_id));
        }
        if partial.len() == index.len() && partial.is_matched(h.global_id) {
            return Err(EdgeProbabilityError::AlreadyMatched(h.global_id));
        }
    }
    if hv.owner == hw.owner {
        return Err(EdgeProbabilityError::SameOwner);
    }
    let mut hits = 0u64;
    let total = simple_completions(&index, partial, |m| {
        if m.partner(hv.global_id) == Some(hw.global_id) {
            hits += 1;
        }
    })?;
    if total == 0 {
        return Err(EdgeProbabilityError::NotExtendable);
    }
    Ok(Ratio::new(hits, total))
}

/// `4 / (3m)`.
pub fn edge_probability_bound(m: u64) -> Ratio<u64> {
    Ratio::new(4, 3 * m)
}

/// Whether an instance meets the conditions under which the `4 / (3m)`
/// bound is claimed: at most `m / 8` pairs in `partial`, distinct owners,
/// and either `d(w) <= sqrt(m) / 10` or `D* <= m / 100`.
pub fn lemma_hypotheses_hold(
    seq: &DegreeSequence,
    partial: &Matching,
    hv: HalfEdge,
    hw: HalfEdge,
) -> bool {
    let m = seq.m();
    let small_partial = 8 * partial.pairs().len() as u64 <= m;
    let dw = u64::from(seq.degree(hw.owner));
    let low_degree = 100 * dw * dw <= m;
    let spread = 100 * seq.d_star() <= m;
    small_partial && hv.owner != hw.owner && (low_degree || spread)
}
