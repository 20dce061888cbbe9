use std::collections::BTreeSet;

use num_rational::BigRational;
use petgraph::unionfind::UnionFind;
use proptest::prelude::*;

use degcon::census::{classify_components, connected_components};
use degcon::exploration::explore_configuration;
use degcon::rng::{trial_rng, uniform_below};
use degcon::{
    explore, havel_hakimi_construct, switching, BoundedClass, DegreeSequence, InvariantSet,
    SimpleGraph,
};

/// A random graph with isolated vertices removed, so its degree list is a
/// valid graphical sequence.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n, 0.05f64..0.6)
        .prop_flat_map(|(n, p)| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(prop::bool::weighted(p), pairs),
            )
        })
        .prop_filter_map("needs an edge", |(n, bits)| {
            let mut edges = Vec::new();
            let mut b = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[b] {
                        edges.push((u, v));
                    }
                    b += 1;
                }
            }
            let mut used: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            used.sort_unstable();
            used.dedup();
            if used.is_empty() {
                return None;
            }
            let relabel = |x: usize| used.binary_search(&x).unwrap();
            let edges: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (relabel(u), relabel(v)))
                .collect();
            Some(SimpleGraph::from_edges(used.len(), &edges).unwrap())
        })
}

fn union_find_components(g: &SimpleGraph) -> BTreeSet<Vec<usize>> {
    let mut uf = UnionFind::<usize>::new(g.n());
    for (u, v) in g.edges() {
        uf.union(u, v);
    }
    let labels = uf.into_labeling();
    let mut groups = std::collections::BTreeMap::<usize, Vec<usize>>::new();
    for (v, l) in labels.into_iter().enumerate() {
        groups.entry(l).or_default().push(v);
    }
    groups.into_values().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn havel_hakimi_realizes_sampled_sequences(g in graph_strategy(20)) {
        let seq = DegreeSequence::from_degrees(&g.degrees()).unwrap();
        prop_assert_eq!(havel_hakimi_construct(&seq).degrees(), g.degrees());
    }

    #[test]
    fn invariants_ignore_vertex_order(g in graph_strategy(16), rot in 0usize..16) {
        let mut deg = g.degrees();
        let a: InvariantSet<BigRational> =
            InvariantSet::compute(&DegreeSequence::from_degrees(&deg).unwrap());
        let len = deg.len();
        deg.rotate_left(rot % len);
        deg.reverse();
        let b: InvariantSet<BigRational> =
            InvariantSet::compute(&DegreeSequence::from_degrees(&deg).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn float_invariants_track_exact_ones(g in graph_strategy(20)) {
        let seq = DegreeSequence::from_degrees(&g.degrees()).unwrap();
        let exact: InvariantSet<BigRational> = InvariantSet::compute(&seq);
        let float: InvariantSet<f64> = InvariantSet::compute(&seq);
        for class in BoundedClass::ALL {
            let e = exact.to_f64();
            let (x, y) = (*e.get(class), *float.get(class));
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1e-300), "{:?}: {} vs {}", class, x, y);
        }
    }

    #[test]
    fn exploration_from_every_vertex(g in graph_strategy(18)) {
        let reference = union_find_components(&g);
        let mut seen = BTreeSet::new();
        for start in 0..g.n() {
            let trace = explore(&g, start);
            prop_assert!(trace.violations(true).is_empty(), "{:?}", trace.violations(true));
            prop_assert!(reference.contains(&trace.component));
            seen.insert(trace.component.clone());

            // every exposed pair consumes two half-edges of the component
            let degree_sum: u64 = trace.component.iter().map(|&v| g.degree(v) as u64).sum();
            let pairs: u64 = trace.records.iter().map(|r| u64::from(r.pairs)).sum();
            prop_assert_eq!(2 * pairs, degree_sum);
            prop_assert_eq!(trace.explored_edges.len() as u64, pairs);
            prop_assert_eq!(trace.tree_edges.len() + 1, trace.component.len());
            prop_assert_eq!(trace.records.last().unwrap().x, 0);

            prop_assert_eq!(&explore(&g, start), &trace);

            let m = g.m();
            let walk = trace.walk(m);
            prop_assert_eq!(walk.len(), m.max(trace.records.len()));
            let padded: i64 = walk.iter().map(|s| s.step).sum();
            let plain: i64 = trace.records.iter().map(|r| r.step()).sum();
            prop_assert_eq!(padded, plain);
        }
        prop_assert_eq!(seen, reference);
    }

    #[test]
    fn configuration_exploration_keeps_the_weak_invariants(
        g in graph_strategy(18),
        seed in any::<u64>(),
    ) {
        let degrees = g.degrees();
        let mut rng = trial_rng(seed, 0);
        let (trace, multi) = explore_configuration(&degrees, &mut rng, 0);
        prop_assert!(trace.violations(false).is_empty());
        prop_assert_eq!(multi.degrees(), degrees);
    }

    #[test]
    fn taxonomy_partitions_the_components(g in graph_strategy(20)) {
        let tax = classify_components(&g);
        let comps = connected_components(&g);
        prop_assert_eq!(tax.total(), comps.len() as u64);
        let covered: usize = comps.iter().map(|c| c.vertices.len()).sum();
        prop_assert_eq!(covered, g.n());
    }

    #[test]
    fn switching_round_trips(g in graph_strategy(14), picks in any::<[u64; 4]>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(edges.len() >= 2);
        let i = (picks[0] % edges.len() as u64) as usize;
        let j = (picks[1] % edges.len() as u64) as usize;
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        let xy = if picks[2] & 1 == 0 { (a, b) } else { (b, a) };
        let uv = if picks[3] & 1 == 0 { (c, d) } else { (d, c) };
        if let Ok(h) = switching(&g, xy, uv) {
            prop_assert_eq!(h.degrees(), g.degrees());
            let back = switching(&h, (xy.0, uv.1), (uv.0, xy.1)).unwrap();
            prop_assert_eq!(back, g);
        }
    }

    #[test]
    fn uniform_below_stays_in_range(seed in any::<u64>(), bound in 1u64..u64::MAX) {
        let mut rng = trial_rng(seed, 1);
        for _ in 0..16 {
            prop_assert!(uniform_below(&mut rng, bound) < bound);
        }
    }
}
