use std::collections::BTreeMap;
use std::fmt;

use super::components::{connected_components, Component};
use crate::degseq::BoundedClass;
use crate::graph::SimpleGraph;

/// Components with at most this many vertices are classified up to
/// isomorphism; larger ones are bucketed by vertex and edge count.
pub const SMALL_COMPONENT_MAX_ORDER: usize = 6;

/// Isomorphism class of one component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentClass {
    Edge,
    Triangle,
    /// A triangle with a pendant vertex attached.
    TrianglePendant,
    K4MinusE,
    K4,
    /// Cycle on `k >= 4` vertices.
    Cycle(usize),
    /// Path with `k >= 2` edges.
    Path(usize),
    /// Any other small component, keyed by [`canonical_key`].
    OtherSmall(String),
    Large {
        vertices: usize,
        edges: usize,
    },
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::Edge => f.write_str("edge"),
            ComponentClass::Triangle => f.write_str("triangle"),
            ComponentClass::TrianglePendant => f.write_str("triangle_pendant"),
            ComponentClass::K4MinusE => f.write_str("k4_minus_e"),
            ComponentClass::K4 => f.write_str("k4"),
            ComponentClass::Cycle(k) => write!(f, "cycle_len_{k}"),
            ComponentClass::Path(k) => write!(f, "path_len_{k}"),
            ComponentClass::OtherSmall(key) => write!(f, "other_small[{key}]"),
            ComponentClass::Large { vertices, edges } => write!(f, "large[v={vertices} e={edges}]"),
        }
    }
}

/// Component counts per class. Tallies from separate graphs merge by
/// addition, so accumulation order never matters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComponentTaxonomy {
    pub edge: u64,
    pub triangle: u64,
    pub triangle_pendant: u64,
    pub k4_minus_e: u64,
    pub k4: u64,
    pub cycles: BTreeMap<usize, u64>,
    pub paths: BTreeMap<usize, u64>,
    pub other_small: BTreeMap<String, u64>,
    /// Keyed by `(vertices, edges)`.
    pub large: BTreeMap<(usize, usize), u64>,
}

impl ComponentTaxonomy {
    pub fn add(&mut self, class: &ComponentClass, count: u64) {
        match class {
            ComponentClass::Edge => self.edge += count,
            ComponentClass::Triangle => self.triangle += count,
            ComponentClass::TrianglePendant => self.triangle_pendant += count,
            ComponentClass::K4MinusE => self.k4_minus_e += count,
            ComponentClass::K4 => self.k4 += count,
            ComponentClass::Cycle(k) => *self.cycles.entry(*k).or_default() += count,
            ComponentClass::Path(k) => *self.paths.entry(*k).or_default() += count,
            ComponentClass::OtherSmall(key) => {
                *self.other_small.entry(key.clone()).or_default() += count
            }
            ComponentClass::Large { vertices, edges } => {
                *self.large.entry((*vertices, *edges)).or_default() += count
            }
        }
    }

    pub fn merge(&mut self, other: &ComponentTaxonomy) {
        for (class, count) in other.entries() {
            self.add(&class, count);
        }
    }

    /// Every nonzero `(class, count)` pair in class order.
    pub fn entries(&self) -> Vec<(ComponentClass, u64)> {
        let mut out: Vec<(ComponentClass, u64)> = [
            (ComponentClass::Edge, self.edge),
            (ComponentClass::Triangle, self.triangle),
            (ComponentClass::TrianglePendant, self.triangle_pendant),
            (ComponentClass::K4MinusE, self.k4_minus_e),
            (ComponentClass::K4, self.k4),
        ]
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .collect();
        out.extend(
            self.cycles
                .iter()
                .map(|(&k, &c)| (ComponentClass::Cycle(k), c)),
        );
        out.extend(
            self.paths
                .iter()
                .map(|(&k, &c)| (ComponentClass::Path(k), c)),
        );
        out.extend(
            self.other_small
                .iter()
                .map(|(key, &c)| (ComponentClass::OtherSmall(key.clone()), c)),
        );
        out.extend(
            self.large
                .iter()
                .map(|(&(vertices, edges), &c)| (ComponentClass::Large { vertices, edges }, c)),
        );
        out
    }

    pub fn total(&self) -> u64 {
        self.entries().iter().map(|&(_, c)| c).sum()
    }

    pub fn large_total(&self) -> u64 {
        self.large.values().sum()
    }

    /// Count attributed to a bounded class. `K5Plus` collects every small
    /// component outside the five named shapes (cycles, paths, other).
    pub fn bounded_count(&self, class: BoundedClass) -> u64 {
        match class {
            BoundedClass::Edge => self.edge,
            BoundedClass::Triangle => self.triangle,
            BoundedClass::TrianglePendant => self.triangle_pendant,
            BoundedClass::K4MinusE => self.k4_minus_e,
            BoundedClass::K4 => self.k4,
            BoundedClass::K5Plus => {
                self.cycles.values().sum::<u64>()
                    + self.paths.values().sum::<u64>()
                    + self.other_small.values().sum::<u64>()
            }
        }
    }
}

/// Classifies one component of `g`.
pub fn classify_component(g: &SimpleGraph, c: &Component) -> ComponentClass {
    let (order, size) = (c.order(), c.edges);
    if order > SMALL_COMPONENT_MAX_ORDER {
        return ComponentClass::Large {
            vertices: order,
            edges: size,
        };
    }
    let mut degrees: Vec<usize> = c.vertices.iter().map(|&v| g.degree(v)).collect();
    degrees.sort_unstable();
    match (order, size) {
        (2, 1) => return ComponentClass::Edge,
        (3, 3) => return ComponentClass::Triangle,
        (4, 5) => return ComponentClass::K4MinusE,
        (4, 6) => return ComponentClass::K4,
        // the only connected graphs on 4 vertices and 4 edges are C4 and
        // the triangle with a pendant
        (4, 4) if degrees == [1, 2, 2, 3] => return ComponentClass::TrianglePendant,
        _ => {}
    }
    if order >= 4 && size == order && degrees.iter().all(|&d| d == 2) {
        return ComponentClass::Cycle(order);
    }
    if order >= 3 && size + 1 == order && degrees[order - 1] <= 2 {
        return ComponentClass::Path(size);
    }
    ComponentClass::OtherSmall(canonical_key(g, c))
}

/// Classifies every component; the counts sum to the component count.
pub fn classify_components(g: &SimpleGraph) -> ComponentTaxonomy {
    let mut tax = ComponentTaxonomy::default();
    for c in connected_components(g) {
        tax.add(&classify_component(g, &c), 1);
    }
    tax
}

/// `v{order}e{size}:{degrees descending}:{adjacency}` where the adjacency is
/// the minimum upper-triangle bit pattern over all vertex orderings, in hex.
/// Two small components share a key exactly when they are isomorphic.
pub fn canonical_key(g: &SimpleGraph, c: &Component) -> String {
    let order = c.order();
    let mut degrees: Vec<usize> = c.vertices.iter().map(|&v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let degree_text: String = degrees.iter().map(|d| d.to_string()).collect();

    let mut perm: Vec<usize> = (0..order).collect();
    let mut best = u64::MAX;
    loop {
        let mut bits = 0u64;
        let mut bit = 0;
        for i in 0..order {
            for j in i + 1..order {
                if g.has_edge(c.vertices[perm[i]], c.vertices[perm[j]]) {
                    bits |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(bits);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    format!("v{order}e{}:{degree_text}:{best:x}", c.edges)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(n: usize, edges: &[(usize, usize)]) -> Vec<(ComponentClass, u64)> {
        classify_components(&SimpleGraph::from_edges(n, edges).unwrap()).entries()
    }

    fn single(n: usize, edges: &[(usize, usize)]) -> ComponentClass {
        let mut e = classes(n, edges);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].1, 1);
        e.remove(0).0
    }

    #[test]
    fn named_shapes() {
        assert_eq!(single(2, &[(0, 1)]), ComponentClass::Edge);
        assert_eq!(
            single(3, &[(0, 1), (1, 2), (0, 2)]),
            ComponentClass::Triangle
        );
        assert_eq!(
            single(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
            ComponentClass::TrianglePendant
        );
        assert_eq!(
            single(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            ComponentClass::Cycle(4)
        );
        assert_eq!(
            single(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
            ComponentClass::K4MinusE
        );
        assert_eq!(
            single(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]),
            ComponentClass::K4
        );
        assert_eq!(
            single(4, &[(0, 1), (1, 2), (2, 3)]),
            ComponentClass::Path(3)
        );
    }

    #[test]
    fn star_is_other_small() {
        let c = single(4, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(c, ComponentClass::OtherSmall("v4e3:3111:7".into()));
    }

    #[test]
    fn seven_cycle_is_large() {
        let edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        assert_eq!(
            single(7, &edges),
            ComponentClass::Large {
                vertices: 7,
                edges: 7
            }
        );
    }

    #[test]
    fn canonical_key_ignores_labels() {
        // the same 5-vertex "house" under two labelings
        let a = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)];
        let b = [(4, 3), (3, 2), (2, 1), (1, 4), (4, 0), (3, 0)];
        assert_eq!(single(5, &a), single(5, &b));
        // a 6-cycle with a long or a short chord: same degrees, not isomorphic
        let ring: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let long = [ring.clone(), vec![(0, 3)]].concat();
        let short = [ring, vec![(0, 2)]].concat();
        assert_ne!(single(6, &long), single(6, &short));
    }

    #[test]
    fn two_triangles_and_merging() {
        let g =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let mut t = classify_components(&g);
        assert_eq!(t.triangle, 2);
        let other = t.clone();
        t.merge(&other);
        assert_eq!(t.triangle, 4);
        assert_eq!(t.total(), 4);
        assert_eq!(t.bounded_count(BoundedClass::Triangle), 4);
    }
}
