use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use super::components::connected_components;
use super::taxonomy::{classify_components, ComponentTaxonomy};
use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;

/// Largest half-edge count the exact oracle enumerates.
pub const ORACLE_MAX_HALF_EDGES: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("2m = {half_edges} exceeds the enumeration guard of {ORACLE_MAX_HALF_EDGES}")]
    TooLarge { half_edges: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Labeled simple graphs with the degree sequence.
    pub realizations: u64,
    pub connected: u64,
    /// Component counts summed over all realizations.
    pub taxonomy: ComponentTaxonomy,
}

impl OracleResult {
    pub fn p_connected(&self) -> Ratio<u64> {
        Ratio::new(self.connected, self.realizations)
    }

    pub fn p_disconnected(&self) -> Ratio<u64> {
        Ratio::new(self.realizations - self.connected, self.realizations)
    }

    pub fn export(&self) -> OracleExport {
        let p = self.p_connected();
        let q = self.p_disconnected();
        OracleExport {
            realizations: self.realizations,
            connected: self.connected,
            p_connected: format!("{}/{}", p.numer(), p.denom()),
            p_connected_float: self.connected as f64 / self.realizations as f64,
            p_disconnected: format!("{}/{}", q.numer(), q.denom()),
            taxonomy: self
                .taxonomy
                .entries()
                .into_iter()
                .map(|(c, k)| (c.to_string(), k))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleExport {
    pub realizations: u64,
    pub connected: u64,
    pub p_connected: String,
    pub p_connected_float: f64,
    pub p_disconnected: String,
    pub taxonomy: Vec<(String, u64)>,
}

/// Calls `visit` once for every labeled simple graph realizing `seq`, in a
/// fixed order.
///
/// Vertices are filled in label order: vertex `v` takes all its remaining
/// neighbours among the higher labels in one combination step.
pub fn for_each_realization<F: FnMut(&SimpleGraph)>(
    seq: &DegreeSequence,
    mut visit: F,
) -> Result<u64, OracleError> {
    let half_edges = 2 * seq.m();
    if half_edges > ORACLE_MAX_HALF_EDGES {
        return Err(OracleError::TooLarge { half_edges });
    }
    let mut residual: Vec<u32> = seq.degrees().to_vec();
    let mut edges = Vec::new();
    let mut count = 0;
    fill(
        seq.n(),
        0,
        &mut residual,
        &mut edges,
        &mut count,
        &mut visit,
    );
    Ok(count)
}

fn fill<F: FnMut(&SimpleGraph)>(
    n: usize,
    v: usize,
    residual: &mut [u32],
    edges: &mut Vec<(usize, usize)>,
    count: &mut u64,
    visit: &mut F,
) {
    if v == n {
        *count += 1;
        visit(&SimpleGraph::from_edges(n, edges).expect("construction is simple"));
        return;
    }
    let need = residual[v] as usize;
    let candidates: Vec<usize> = (v + 1..n).filter(|&w| residual[w] > 0).collect();
    if candidates.len() < need {
        return;
    }
    choose(n, v, &candidates, 0, need, residual, edges, count, visit);
}

#[allow(clippy::too_many_arguments)]
fn choose<F: FnMut(&SimpleGraph)>(
    n: usize,
    v: usize,
    candidates: &[usize],
    from: usize,
    need: usize,
    residual: &mut [u32],
    edges: &mut Vec<(usize, usize)>,
    count: &mut u64,
    visit: &mut F,
) {
    if need == 0 {
        let saved = residual[v];
        residual[v] = 0;
        fill(n, v + 1, residual, edges, count, visit);
        residual[v] = saved;
        return;
    }
    for i in from..=candidates.len() - need {
        let w = candidates[i];
        residual[w] -= 1;
        edges.push((v, w));
        choose(
            n,
            v,
            candidates,
            i + 1,
            need - 1,
            residual,
            edges,
            count,
            visit,
        );
        edges.pop();
        residual[w] += 1;
    }
}

/// Exact connection probability under the uniform law on labeled simple
/// realizations of `seq`.
pub fn exact_connectivity_oracle(seq: &DegreeSequence) -> Result<OracleResult, OracleError> {
    let mut connected = 0;
    let mut taxonomy = ComponentTaxonomy::default();
    let realizations = for_each_realization(seq, |g| {
        if connected_components(g).len() == 1 {
            connected += 1;
        }
        taxonomy.merge(&classify_components(g));
    })?;
    Ok(OracleResult {
        realizations,
        connected,
        taxonomy,
    })
}
