use serde::Serialize;

use crate::graph::SimpleGraph;

/// A maximal connected vertex set with the number of edges inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Sorted, 0-based.
    pub vertices: Vec<usize>,
    pub edges: usize,
}

impl Component {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Components of `g`, ordered by their smallest vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Component> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[root] = id;
        stack.push(root);
        let mut vertices = Vec::new();
        let mut degree_sum = 0;
        while let Some(v) = stack.pop() {
            vertices.push(v);
            degree_sum += g.degree(v);
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = id;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        out.push(Component {
            vertices,
            edges: degree_sum / 2,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_one_component() {
        let edges: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = SimpleGraph::from_edges(4, &edges).unwrap();
        assert_eq!(
            connected_components(&g),
            vec![Component {
                vertices: vec![0, 1, 2, 3],
                edges: 6
            }]
        );
    }

    #[test]
    fn two_disjoint_edges() {
        let g = SimpleGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let c = connected_components(&g);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].vertices, vec![0, 2]);
        assert_eq!(c[1].vertices, vec![1, 3]);
        assert!(c.iter().all(|c| c.edges == 1));
    }

    #[test]
    fn isolated_vertices_count() {
        let g = SimpleGraph::from_edges(3, &[(1, 2)]).unwrap();
        let c = connected_components(&g);
        assert_eq!(c.len(), 2);
        assert_eq!((c[0].order(), c[0].edges), (1, 0));
    }
}
