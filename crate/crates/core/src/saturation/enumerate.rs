use std::collections::BTreeMap;

use rayon::prelude::*;

use super::SaturationError;
use crate::graph::{canonical_form, empty_graph, Graph};

/// Largest order accepted by the exhaustive enumerator.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Non-isomorphic graphs on `n` vertices, one edge-count level at a time.
///
/// Level `m + 1` is obtained by adding every non-edge to every graph of level
/// `m` and keeping one representative per canonical code. Representatives
/// are canonical and each level is sorted by canonical code.
#[derive(Debug, Clone)]
pub struct GraphLevels {
    budget: usize,
    next_edges: usize,
    current: Option<Vec<Graph>>,
}

impl GraphLevels {
    pub fn new(n: usize, edge_budget: usize) -> Result<Self, SaturationError> {
        if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
            return Err(SaturationError::OutOfRange {
                what: "n",
                expected: format!("1..={MAX_ENUMERATION_ORDER}"),
                got: n,
            });
        }
        let g = empty_graph(n)?;
        let rep = canonical_form(&g).representative(&g);
        Ok(GraphLevels {
            budget: edge_budget.min(n * (n - 1) / 2),
            next_edges: 0,
            current: Some(vec![rep]),
        })
    }
}

impl Iterator for GraphLevels {
    /// `(edge count, graphs)`.
    type Item = (usize, Vec<Graph>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_edges > self.budget {
            return None;
        }
        let level = self.current.take()?;
        let m = self.next_edges;
        self.next_edges += 1;
        if self.next_edges <= self.budget {
            self.current = Some(augment(&level));
        }
        Some((m, level))
    }
}

fn augment(level: &[Graph]) -> Vec<Graph> {
    let found: Vec<(Vec<u8>, Graph)> = level
        .par_iter()
        .flat_map_iter(|g| {
            g.non_edges().into_iter().map(move |(u, v)| {
                let h = g.with_edge(u, v);
                let cf = canonical_form(&h);
                (cf.code().to_vec(), cf.representative(&h))
            })
        })
        .collect();
    let unique: BTreeMap<Vec<u8>, Graph> = found.into_iter().collect();
    unique.into_values().collect()
}

/// Every non-isomorphic graph on `n` vertices with at most `edge_budget`
/// edges, ordered by edge count and then canonical code.
pub fn enumerate_nonisomorphic_graphs(
    n: usize,
    edge_budget: usize,
) -> Result<impl Iterator<Item = Graph>, SaturationError> {
    Ok(GraphLevels::new(n, edge_budget)?.flat_map(|(_, level)| level))
}
