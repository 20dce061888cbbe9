use rand_core::RngCore;
use serde::{Serialize, Serializer};

use super::SampleError;
use crate::degseq::DegreeSequence;
use crate::graph::MultiGraph;
use crate::rng::uniform_index;

/// One endpoint slot of a future edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HalfEdge {
    pub owner: usize,
    pub slot: usize,
    pub global_id: usize,
}

/// Maps `(owner, slot)` to global half-edge ids by degree prefix sums over
/// vertices `0..n`: vertex `v` owns ids `offset(v)..offset(v) + d(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfEdgeIndex {
    offsets: Vec<usize>,
    owners: Vec<usize>,
}

impl HalfEdgeIndex {
    pub fn new(seq: &DegreeSequence) -> Self {
        Self::from_degrees(seq.degrees())
    }

    pub fn from_degrees(degrees: &[u32]) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len() + 1);
        let mut owners = Vec::new();
        offsets.push(0);
        for (v, &d) in degrees.iter().enumerate() {
            owners.extend(std::iter::repeat_n(v, d as usize));
            offsets.push(owners.len());
        }
        HalfEdgeIndex { offsets, owners }
    }

    /// Total number of half-edges, `2m`.
    pub fn len(&self) -> usize {
        self.owners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owners.is_empty()
    }

    pub fn owner(&self, global_id: usize) -> usize {
        self.owners[global_id]
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn range(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn global_id(&self, owner: usize, slot: usize) -> Option<usize> {
        (slot < self.degree(owner)).then(|| self.offsets[owner] + slot)
    }

    pub fn half_edge(&self, global_id: usize) -> HalfEdge {
        let owner = self.owners[global_id];
        HalfEdge {
            owner,
            slot: global_id - self.offsets[owner],
            global_id,
        }
    }
}

/// A (possibly partial) matching on half-edge ids: `partner[partner[h]] == h`
/// and `partner[h] != h` for matched `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<usize>,
}

const UNMATCHED: usize = usize::MAX;

impl Matching {
    pub fn empty(len: usize) -> Self {
        Matching {
            partner: vec![UNMATCHED; len],
        }
    }

    pub fn from_pairs(len: usize, pairs: &[(usize, usize)]) -> Result<Self, SampleError> {
        let mut m = Matching::empty(len);
        for &(a, b) in pairs {
            m.pair(a, b)?;
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self, h: usize) -> Option<usize> {
        let p = self.partner[h];
        (p != UNMATCHED).then_some(p)
    }

    pub fn is_matched(&self, h: usize) -> bool {
        self.partner[h] != UNMATCHED
    }

    pub fn pair(&mut self, a: usize, b: usize) -> Result<(), SampleError> {
        if a == b || a >= self.len() || b >= self.len() || self.is_matched(a) || self.is_matched(b)
        {
            return Err(SampleError::InvalidPair { a, b });
        }
        self.partner[a] = b;
        self.partner[b] = a;
        Ok(())
    }

    pub(crate) fn unpair(&mut self, a: usize) {
        let b = self.partner[a];
        self.partner[a] = UNMATCHED;
        self.partner[b] = UNMATCHED;
    }

    pub fn unmatched_count(&self) -> usize {
        self.partner.iter().filter(|&&p| p == UNMATCHED).count()
    }

    pub fn is_full(&self) -> bool {
        self.partner.iter().all(|&p| p != UNMATCHED)
    }

    /// Matched pairs `(a, b)` with `a < b`, ordered by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| b != UNMATCHED && a < b)
            .map(|(a, &b)| (a, b))
            .collect()
    }

    pub fn partners(&self) -> Vec<Option<usize>> {
        (0..self.len()).map(|h| self.partner(h)).collect()
    }
}

impl Serialize for Matching {
    /// The partner array; unmatched entries are `null`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.partners().serialize(serializer)
    }
}

/// Uniform perfect matching on the `2m` half-edges of `seq`.
///
/// Draw order: keep a pool `[0, 1, .., 2m-1]`; repeatedly pop the last id
/// and pair it with the id at a uniform position `j` of the remaining pool,
/// removed by `swap_remove(j)`. Each step pairs a fixed half-edge with a
/// uniform unmatched one, so every perfect matching is equally likely.
pub fn random_matching<R: RngCore + ?Sized>(seq: &DegreeSequence, rng: &mut R) -> Matching {
    let total = (2 * seq.m()) as usize;
    let mut matching = Matching::empty(total);
    let mut pool: Vec<usize> = (0..total).collect();
    while let Some(a) = pool.pop() {
        let b = pool.swap_remove(uniform_index(rng, pool.len()));
        matching.partner[a] = b;
        matching.partner[b] = a;
    }
    matching
}

/// The multigraph a full matching induces.
pub fn matching_to_multigraph(
    seq: &DegreeSequence,
    matching: &Matching,
) -> Result<MultiGraph, SampleError> {
    multigraph_from_matching(&HalfEdgeIndex::new(seq), matching)
}

/// Same as [`matching_to_multigraph`] for any half-edge layout, including
/// degree lists that no simple graph realizes.
pub fn multigraph_from_matching(
    index: &HalfEdgeIndex,
    matching: &Matching,
) -> Result<MultiGraph, SampleError> {
    if matching.len() != index.len() {
        return Err(SampleError::LengthMismatch {
            expected: index.len(),
            found: matching.len(),
        });
    }
    if !matching.is_full() {
        return Err(SampleError::PartialMatching {
            unmatched: matching.unmatched_count(),
        });
    }
    let edges = matching
        .pairs()
        .into_iter()
        .map(|(a, b)| (index.owner(a), index.owner(b)))
        .collect();
    Ok(MultiGraph::new(index.vertex_count(), edges))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::rng::trial_rng;

    fn seq(d: &[u32]) -> DegreeSequence {
        DegreeSequence::from_degrees(d).unwrap()
    }

    #[test]
    fn index_uses_prefix_sums() {
        let idx = HalfEdgeIndex::from_degrees(&[1, 3, 2]);
        assert_eq!(idx.len(), 6);
        assert_eq!(idx.global_id(1, 2), Some(3));
        assert_eq!(idx.global_id(1, 3), None);
        assert_eq!(
            idx.half_edge(4),
            HalfEdge {
                owner: 2,
                slot: 0,
                global_id: 4
            }
        );
    }

    #[test]
    fn single_edge_has_one_matching() {
        let s = seq(&[1, 1]);
        let mut rng = trial_rng(0, 0);
        let m = random_matching(&s, &mut rng);
        assert_eq!(m.pairs(), vec![(0, 1)]);
    }

    #[test]
    fn random_matching_is_fixed_point_free_involution() {
        let s = seq(&[3, 3, 2, 2, 1, 1]);
        let mut rng = trial_rng(5, 0);
        for _ in 0..100 {
            let m = random_matching(&s, &mut rng);
            assert!(m.is_full());
            for h in 0..m.len() {
                let p = m.partner(h).unwrap();
                assert_ne!(p, h);
                assert_eq!(m.partner(p), Some(h));
            }
        }
    }

    #[test]
    fn three_matchings_of_four_leaves_are_equally_likely() {
        // (2m - 1)!! = 3 perfect matchings on 4 half-edges.
        let s = seq(&[1, 1, 1, 1]);
        let mut rng = trial_rng(11, 0);
        let draws = 100_000;
        let mut freq: BTreeMap<Vec<(usize, usize)>, u32> = BTreeMap::new();
        for _ in 0..draws {
            *freq
                .entry(random_matching(&s, &mut rng).pairs())
                .or_default() += 1;
        }
        assert_eq!(freq.len(), 3);
        for count in freq.values() {
            let f = f64::from(*count) / draws as f64;
            assert!((f - 1.0 / 3.0).abs() < 0.01, "{freq:?}");
        }
    }

    #[test]
    fn two_twos_multigraphs() {
        // half-edges 0,1 belong to vertex 0; 2,3 to vertex 1
        let idx = HalfEdgeIndex::from_degrees(&[2, 2]);
        let loops = Matching::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let g = multigraph_from_matching(&idx, &loops).unwrap();
        assert_eq!(g.edges(), &[(0, 0), (1, 1)]);
        let double = Matching::from_pairs(4, &[(0, 2), (1, 3)]).unwrap();
        let g = multigraph_from_matching(&idx, &double).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
    }

    #[test]
    fn lone_two_is_a_loop() {
        let s = seq(&[1, 1]);
        let g = matching_to_multigraph(&s, &Matching::from_pairs(2, &[(0, 1)]).unwrap()).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        // [2] is not graphical, but its configuration-model multigraph is a loop.
        let idx = HalfEdgeIndex::from_degrees(&[2]);
        let g =
            multigraph_from_matching(&idx, &Matching::from_pairs(2, &[(0, 1)]).unwrap()).unwrap();
        assert_eq!(g.edges(), &[(0, 0)]);
        assert_eq!(g.degrees(), vec![2]);
    }

    #[test]
    fn partial_matching_is_rejected() {
        let s = seq(&[1, 1, 1, 1]);
        let m = Matching::from_pairs(4, &[(0, 1)]).unwrap();
        assert_eq!(
            matching_to_multigraph(&s, &m),
            Err(SampleError::PartialMatching { unmatched: 2 })
        );
    }

    #[test]
    fn pairing_twice_fails() {
        let mut m = Matching::empty(4);
        m.pair(0, 1).unwrap();
        assert!(m.pair(1, 2).is_err());
        assert!(m.pair(3, 3).is_err());
    }

    #[test]
    fn serializes_as_partner_array() {
        let m = Matching::from_pairs(4, &[(0, 3)]).unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), "[3,null,null,0]");
    }
}
