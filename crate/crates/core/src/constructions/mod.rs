//! Explicit saturated graphs with their colorings, the small gadgets used in
//! the case analyses, and the recursive family-ladder construction.

mod gadgets;
mod ladder;

use thiserror::Error;

use crate::graph::{
    complete_graph, disjoint_union, empty_graph, graph6_encode, join, star, wheel, Graph,
    GraphError,
};
use crate::rainbow::{is_proper, EdgeColoring, RainbowError};
use crate::saturation::SaturationError;

pub use gadgets::{gadget, Gadget, GadgetKind};
pub use ladder::{
    build_family_ladder, ladder_construction, ladder_construction_with, FamilyLadder,
    IndependentSetSize, LadderConstruction, LadderStep, LadderTrace,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
    #[error(transparent)]
    Saturation(#[from] SaturationError),
    #[error("{what} = {got} outside {expected}")]
    OutOfRange {
        what: &'static str,
        expected: String,
        got: usize,
    },
    #[error("pattern {0} contains an induced even cycle")]
    NotEvenCycleFree(String),
    #[error("unknown gadget {0}")]
    UnknownGadget(String),
    #[error("construction invariant failed: {0}")]
    Invariant(String),
}

fn out_of_range(what: &'static str, expected: &str, got: usize) -> ConstructionError {
    ConstructionError::OutOfRange {
        what,
        expected: expected.to_string(),
        got,
    }
}

/// A graph with a proper coloring of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub coloring: EdgeColoring,
}

impl ColoredGraph {
    pub fn new(graph: Graph, coloring: EdgeColoring) -> Result<Self, ConstructionError> {
        if !is_proper(&graph, &coloring)? {
            return Err(RainbowError::ImproperColoring.into());
        }
        Ok(ColoredGraph { graph, coloring })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph6": graph6_encode(&self.graph),
            "n": self.graph.n(),
            "edges": self.graph.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "classes": self.coloring.classes(),
        })
    }
}

/// `K_{r-2} + E_{n-r+2}`, the unique extremal `K_r`-saturated graph.
pub fn ehm_graph(n: usize, r: usize) -> Result<Graph, ConstructionError> {
    if r < 2 {
        return Err(out_of_range("r", "2 <= r <= n", r));
    }
    if n < r {
        return Err(out_of_range("n", "n >= r", n));
    }
    if r == 2 {
        return Ok(empty_graph(n)?);
    }
    Ok(join(&complete_graph(r - 2)?, &empty_graph(n - r + 2)?)?)
}

/// `a = (-n) mod 5` copies of `K4` and `(n - 4a) / 5` copies of `K_{1,4}`.
///
/// Each `K4` carries its 1-factorization and each star distinct classes.
pub fn p4_construction(n: usize) -> Result<ColoredGraph, ConstructionError> {
    if !(16..=64).contains(&n) {
        return Err(out_of_range("n", "16..=64", n));
    }
    let a = (5 - n % 5) % 5;
    let stars = (n - 4 * a) / 5;
    let k4 = complete_graph(4)?;
    let s = star(4)?;
    let mut parts = vec![k4; a];
    parts.extend(std::iter::repeat_n(s, stars));
    let graph = disjoint_union(&parts)?;
    let classes = graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            if u < 4 * a {
                // ab,cd -> 0; ac,bd -> 1; ad,bc -> 2.
                let (x, y) = (u % 4, v % 4);
                match (x, y) {
                    (0, 1) | (2, 3) => 0,
                    (0, 2) | (1, 3) => 1,
                    _ => 2,
                }
            } else {
                (v - 4 * a) % 5 - 1
            }
        })
        .collect();
    ColoredGraph::new(graph, EdgeColoring::new(classes))
}

/// `W_n` (rim `0..n-1`, hub `n-1`) with spoke `(hub, i)` and rim edge
/// `(i+1, i+2)` both in class `i`, indices mod `n - 1`.
pub fn wheel_construction(n: usize) -> Result<ColoredGraph, ConstructionError> {
    if !(6..=64).contains(&n) {
        return Err(out_of_range("n", "6..=64", n));
    }
    let graph = wheel(n)?;
    let m = n - 1;
    let classes = graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            if v == m {
                u
            } else if v == u + 1 {
                (u + m - 1) % m
            } else {
                // (0, m-1) closes the rim.
                m - 2
            }
        })
        .collect();
    ColoredGraph::new(graph, EdgeColoring::new(classes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::rainbow::{
        component_decomposition, enumerate_embeddings, find_rainbow_embedding, Pattern,
        SearchLimits,
    };
    use crate::saturation::is_rainbow_saturated;

    #[test]
    fn ehm_sizes() {
        assert_eq!(ehm_graph(6, 4).unwrap().edge_count(), 9);
        let g = ehm_graph(5, 3).unwrap();
        assert!(are_isomorphic(&g, &star(4).unwrap()));
        for r in 2..=7 {
            let k = r - 2;
            assert_eq!(ehm_graph(r, r).unwrap().edge_count(), k * k.saturating_sub(1) / 2 + 2 * k);
        }
        assert!(ehm_graph(3, 4).is_err());
        assert!(ehm_graph(3, 1).is_err());
    }

    #[test]
    fn p4_components_and_edges() {
        for n in 16..=40 {
            let cg = p4_construction(n).unwrap();
            let a = (5 - n % 5) % 5;
            assert_eq!(cg.graph.edge_count() * 5, 4 * n + 14 * a, "n = {n}");
            let parts = component_decomposition(&cg.graph);
            let k4s = parts.iter().filter(|c| c.graph.n() == 4).count();
            let stars = parts.iter().filter(|c| c.graph.n() == 5).count();
            assert_eq!((k4s, stars, parts.len()), (a, (n - 4 * a) / 5, a + (n - 4 * a) / 5));
            let p4 = Pattern::parse("P4").unwrap();
            assert!(find_rainbow_embedding(&cg.graph, &cg.coloring, &p4).unwrap().is_none());
        }
        assert!(p4_construction(15).is_err());
    }

    #[test]
    fn p4_small_cases_saturate() {
        let fam = [Pattern::parse("P4").unwrap()];
        for n in [16, 20] {
            let cg = p4_construction(n).unwrap();
            let v = is_rainbow_saturated(&cg.graph, &fam, &SearchLimits::unlimited()).unwrap();
            assert!(v.is_saturated(), "n = {n}");
        }
    }

    #[test]
    fn wheel_coloring_repeats_on_every_c4() {
        let c4 = Pattern::parse("C4").unwrap();
        for n in 6..=12 {
            let cg = wheel_construction(n).unwrap();
            assert_eq!(cg.graph.edge_count(), 2 * (n - 1));
            let copies = enumerate_embeddings(&cg.graph, &c4).embeddings;
            assert_eq!(copies.len(), n - 1);
            assert!(find_rainbow_embedding(&cg.graph, &cg.coloring, &c4).unwrap().is_none());
        }
    }

    #[test]
    fn wheel_spoke_matches_rim_edge() {
        let cg = wheel_construction(8).unwrap();
        let g = &cg.graph;
        let m = 7;
        for i in 0..m {
            let spoke = g.edge_index(i, m).unwrap();
            let rim = g.edge_index((i + 1) % m, (i + 2) % m).unwrap();
            assert_eq!(cg.coloring.class_of(spoke), cg.coloring.class_of(rim));
        }
        assert!(wheel_construction(5).is_err());
    }
}
