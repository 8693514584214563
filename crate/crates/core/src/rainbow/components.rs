use crate::graph::{Bits, Graph, VertexSet};

/// A connected component relabeled to `0..k`, with the map back to the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[i]` is the host vertex of component vertex `i`.
    pub vertices: Vec<usize>,
}

impl Component {
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.vertices.iter().copied())
    }
}

/// Connected components ordered by smallest host vertex. Isolated vertices
/// form one-vertex components.
pub fn component_decomposition(g: &Graph) -> Vec<Component> {
    g.component_masks()
        .into_iter()
        .map(|mask| Component {
            graph: g.induced_subgraph(VertexSet(mask)),
            vertices: Bits::new(mask).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, complete_graph, disjoint_union, wheel};

    #[test]
    fn two_k4s() {
        let k4 = complete_graph(4).unwrap();
        let g = disjoint_union(&[k4.clone(), k4.clone()]).unwrap();
        let parts = component_decomposition(&g);
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert!(are_isomorphic(&p.graph, &k4));
        }
        assert_eq!(parts[1].vertices, vec![4, 5, 6, 7]);
    }

    #[test]
    fn connected_is_single() {
        let w = wheel(7).unwrap();
        let parts = component_decomposition(&w);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].graph, w);
    }
}
