use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;

/// Deterministic realization of a graphical sequence.
///
/// Repeatedly takes the vertex with the largest residual degree and joins it
/// to the vertices with the next largest residual degrees. Ties go to the
/// smaller label in both choices.
pub fn havel_hakimi_construct(seq: &DegreeSequence) -> SimpleGraph {
    let n = seq.n();
    let mut residual: Vec<u32> = seq.degrees().to_vec();
    let mut adj = vec![Vec::new(); n];
    let mut order: Vec<usize> = (0..n).collect();

    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let hub = order[0];
        let need = residual[hub] as usize;
        if need == 0 {
            break;
        }
        residual[hub] = 0;
        for &w in &order[1..=need] {
            assert!(
                residual[w] > 0,
                "sequence passed validation but is not graphical"
            );
            residual[w] -= 1;
            adj[hub].push(w);
            adj[w].push(hub);
        }
    }
    SimpleGraph::from_adjacency_unchecked(adj)
}
