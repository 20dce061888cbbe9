use rand_core::RngCore;

use super::{explore, run, ExplorationTrace, Revealer};
use crate::degseq::DegreeSequence;
use crate::graph::{MultiGraph, SimpleGraph};
use crate::rng::uniform_index;
use crate::sampler::{sample_simple, HalfEdgeIndex, SampleError, SamplerChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevealMode {
    /// Partners drawn online from the unconditioned configuration model.
    Multigraph,
    /// A uniform simple graph is sampled first and explored afterwards.
    SimpleConditioned(SamplerChoice),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizedGraph {
    Multi(MultiGraph),
    Simple(SimpleGraph),
}

/// Online uniform matching: each revealed half-edge is paired with a
/// uniform unmatched half-edge (`uniform_index` over the pool after the
/// revealed one is removed; removal swaps the last pool entry into the
/// vacated slot).
struct OnlineMatching<'r, R: RngCore + ?Sized> {
    index: HalfEdgeIndex,
    partner: Vec<usize>,
    pool: Vec<usize>,
    position: Vec<usize>,
    rng: &'r mut R,
}

const NONE: usize = usize::MAX;

impl<'r, R: RngCore + ?Sized> OnlineMatching<'r, R> {
    fn new(index: HalfEdgeIndex, rng: &'r mut R) -> Self {
        let total = index.len();
        OnlineMatching {
            index,
            partner: vec![NONE; total],
            pool: (0..total).collect(),
            position: (0..total).collect(),
            rng,
        }
    }

    fn remove(&mut self, h: usize) {
        let at = self.position[h];
        let last = self.pool.pop().expect("pool holds h");
        if last != h {
            self.pool[at] = last;
            self.position[last] = at;
        }
    }

    /// Pairs the rest of the pool with the draw order of `random_matching`.
    fn finish(mut self) -> MultiGraph {
        while let Some(a) = self.pool.pop() {
            let b = self
                .pool
                .swap_remove(uniform_index(self.rng, self.pool.len()));
            self.partner[a] = b;
            self.partner[b] = a;
        }
        let edges = (0..self.partner.len())
            .filter(|&h| h < self.partner[h])
            .map(|h| (self.index.owner(h), self.index.owner(self.partner[h])))
            .collect();
        MultiGraph::new(self.index.vertex_count(), edges)
    }
}

impl<R: RngCore + ?Sized> Revealer for OnlineMatching<'_, R> {
    fn vertex_count(&self) -> usize {
        self.index.vertex_count()
    }

    fn degree(&self, v: usize) -> u32 {
        self.index.degree(v) as u32
    }

    fn owner(&self, half_edge: usize) -> usize {
        self.index.owner(half_edge)
    }

    fn open_half_edges(&self, v: usize) -> Vec<usize> {
        self.index
            .range(v)
            .filter(|&h| self.partner[h] == NONE)
            .collect()
    }

    fn reveal(&mut self, h: usize) -> Option<usize> {
        if self.partner[h] != NONE {
            return None;
        }
        self.remove(h);
        let p = self.pool[uniform_index(self.rng, self.pool.len())];
        self.remove(p);
        self.partner[h] = p;
        self.partner[p] = h;
        Some(p)
    }

    fn edge_count(&self) -> u64 {
        (self.index.len() / 2) as u64
    }
}

/// Explores the configuration-model multigraph of `degrees` while
/// generating it, then completes the matching outside the component.
///
/// `degrees` needs an even sum and no zeros but need not be graphical.
pub fn explore_configuration<R: RngCore + ?Sized>(
    degrees: &[u32],
    rng: &mut R,
    start: usize,
) -> (ExplorationTrace, MultiGraph) {
    let total: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    assert!(total.is_multiple_of(2), "degree sum must be even");
    assert!(degrees.iter().all(|&d| d > 0), "degrees must be positive");
    let mut online = OnlineMatching::new(HalfEdgeIndex::from_degrees(degrees), rng);
    let trace = run(&mut online, start);
    (trace, online.finish())
}

/// Generates a graph and explores the component of `start` in it.
pub fn explore_revealing<R: RngCore + ?Sized>(
    seq: &DegreeSequence,
    rng: &mut R,
    start: usize,
    mode: RevealMode,
) -> Result<(ExplorationTrace, RealizedGraph), SampleError> {
    match mode {
        RevealMode::Multigraph => {
            let (trace, g) = explore_configuration(seq.degrees(), rng, start);
            Ok((trace, RealizedGraph::Multi(g)))
        }
        RevealMode::SimpleConditioned(choice) => {
            let g = sample_simple(seq, choice, rng)?;
            Ok((explore(&g, start), RealizedGraph::Simple(g)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::trial_rng;

    #[test]
    fn single_edge_either_mode() {
        let s = DegreeSequence::from_degrees(&[1, 1]).unwrap();
        for mode in [
            RevealMode::Multigraph,
            RevealMode::SimpleConditioned(SamplerChoice::default()),
        ] {
            let mut rng = trial_rng(0, 0);
            let (t, _) = explore_revealing(&s, &mut rng, 0, mode).unwrap();
            assert_eq!(t.records.len(), 1);
            let r = &t.records[0];
            assert_eq!((r.vertex, r.open, r.j, r.k, r.l, r.x), (0, 1, 1, 0, 0, 0));
        }
    }

    #[test]
    fn lone_loop() {
        let mut rng = trial_rng(0, 0);
        let (t, g) = explore_configuration(&[2], &mut rng, 0);
        assert_eq!(g.edges(), &[(0, 0)]);
        let r = &t.records[0];
        assert_eq!(
            (r.open, r.j, r.k, r.l, r.x_prev, r.x, r.pairs),
            (2, 0, 0, 2, 2, 0, 1)
        );
        assert!(t.violations(false).is_empty());
    }

    #[test]
    fn realized_multigraph_has_the_right_degrees() {
        let degrees = [3, 3, 2, 2, 1, 1, 4];
        for seed in 0..50 {
            let mut rng = trial_rng(seed, 0);
            let (t, g) = explore_configuration(&degrees, &mut rng, 6);
            assert_eq!(g.degrees(), degrees);
            assert!(t.violations(false).is_empty());
            // every component vertex is reachable from the start in g
            assert!(t.component.contains(&6));
        }
    }

    #[test]
    fn component_matches_realized_multigraph() {
        let degrees = [1, 1, 1, 1, 2, 2, 3, 3];
        for seed in 0..200 {
            let mut rng = trial_rng(seed, 1);
            let (t, g) = explore_configuration(&degrees, &mut rng, 0);
            let mut reach = vec![false; degrees.len()];
            reach[0] = true;
            let mut changed = true;
            while changed {
                changed = false;
                for &(u, v) in g.edges() {
                    if reach[u] != reach[v] {
                        reach[u] = true;
                        reach[v] = true;
                        changed = true;
                    }
                }
            }
            let expected: Vec<usize> = (0..degrees.len()).filter(|&v| reach[v]).collect();
            assert_eq!(t.component, expected);
        }
    }
}
