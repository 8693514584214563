use rayon::prelude::*;
use serde::Serialize;

use super::SaturationError;
use crate::graph::{graph6_encode, Bits, Graph, VertexSet};
use crate::rainbow::{
    contains_copy, contains_copy_through, rainbow_free_colorable, Colorability, EdgeColoring,
    Pattern, SearchLimits, SearchStats,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SaturationStatus {
    Saturated,
    NotSaturated,
    Indeterminate,
}

/// Outcome of the colorability search for one added non-edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub edge: (usize, usize),
    pub outcome: &'static str,
    pub nodes: u64,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationVerdict {
    pub status: SaturationStatus,
    /// Condition (a) witness: a proper coloring of `G` with no rainbow copy.
    pub witness_coloring: Option<EdgeColoring>,
    /// A non-edge `e` such that `G + e` still has a rainbow-free coloring.
    pub failing_edge: Option<(usize, usize)>,
    /// That coloring of `G + e`, indexed by the edge order of `G + e`.
    pub failing_coloring: Option<EdgeColoring>,
    /// Non-edges examined, in lexicographic order, up to the first failure.
    pub refutations: Vec<Refutation>,
    pub condition_a_stats: SearchStats,
}

impl SaturationVerdict {
    pub fn is_saturated(&self) -> bool {
        self.status == SaturationStatus::Saturated
    }

    pub fn total_nodes(&self) -> u64 {
        self.condition_a_stats.nodes + self.refutations.iter().map(|r| r.nodes).sum::<u64>()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "status": self.status,
            "witness_coloring": self.witness_coloring.as_ref().map(|c| c.classes()),
            "failing_edge": self.failing_edge.map(|(u, v)| [u, v]),
            "failing_coloring": self.failing_coloring.as_ref().map(|c| c.classes()),
            "non_edges_checked": self.refutations.len(),
            "refutations": self.refutations,
            "search_nodes": self.total_nodes(),
        })
    }
}

/// Non-edges searched per parallel batch; results are consumed in order so
/// the verdict does not depend on the worker count.
const BATCH: usize = 32;

/// Checks conditions (a) and (b) for `G` against the family.
///
/// When every pattern is connected, adding `e` can only create copies inside
/// the component of `G + e` that contains `e`, so only that component is
/// searched; the rest keeps the condition (a) witness.
pub fn is_rainbow_saturated(
    g: &Graph,
    family: &[Pattern],
    limits: &SearchLimits,
) -> Result<SaturationVerdict, SaturationError> {
    let base = rainbow_free_colorable(g, family, limits)?;
    let mut verdict = SaturationVerdict {
        status: SaturationStatus::Saturated,
        witness_coloring: None,
        failing_edge: None,
        failing_coloring: None,
        refutations: Vec::new(),
        condition_a_stats: base.stats,
    };
    let witness = match base.outcome {
        Colorability::Colorable(w) => w,
        Colorability::Uncolorable => {
            verdict.status = SaturationStatus::NotSaturated;
            return Ok(verdict);
        }
        Colorability::Indeterminate => {
            verdict.status = SaturationStatus::Indeterminate;
            return Ok(verdict);
        }
    };
    let connected = family.iter().all(Pattern::is_connected);
    let non_edges = g.non_edges();
    for chunk in non_edges.chunks(BATCH) {
        let results: Vec<_> = chunk
            .par_iter()
            .map(|&(u, v)| check_addition(g, family, limits, connected, u, v))
            .collect::<Result<_, _>>()?;
        for ((u, v), (outcome, stats, sub)) in chunk.iter().copied().zip(results) {
            verdict.refutations.push(Refutation {
                edge: (u, v),
                outcome: match outcome {
                    Colorability::Colorable(_) => "COLORABLE",
                    Colorability::Uncolorable => "UNCOLORABLE",
                    Colorability::Indeterminate => "INDETERMINATE",
                },
                nodes: stats.nodes,
                max_depth: stats.max_depth,
            });
            match outcome {
                Colorability::Uncolorable => {}
                Colorability::Indeterminate => {
                    verdict.status = SaturationStatus::Indeterminate;
                    verdict.witness_coloring = Some(witness);
                    return Ok(verdict);
                }
                Colorability::Colorable(local) => {
                    let full = g.with_edge(u, v);
                    let coloring = match sub {
                        Some(vertices) => merge_coloring(&full, &witness, g, &vertices, &local),
                        None => local,
                    };
                    verdict.status = SaturationStatus::NotSaturated;
                    verdict.failing_edge = Some((u, v));
                    verdict.failing_coloring = Some(coloring);
                    verdict.witness_coloring = Some(witness);
                    return Ok(verdict);
                }
            }
        }
    }
    verdict.witness_coloring = Some(witness);
    Ok(verdict)
}

type Addition = (Colorability, SearchStats, Option<Vec<usize>>);

fn check_addition(
    g: &Graph,
    family: &[Pattern],
    limits: &SearchLimits,
    connected: bool,
    u: usize,
    v: usize,
) -> Result<Addition, SaturationError> {
    let full = g.with_edge(u, v);
    if connected {
        let mask = full.component_of(u);
        let sub = full.induced_subgraph(VertexSet(mask));
        let r = rainbow_free_colorable(&sub, family, limits)?;
        Ok((r.outcome, r.stats, Some(Bits::new(mask).collect())))
    } else {
        let r = rainbow_free_colorable(&full, family, limits)?;
        Ok((r.outcome, r.stats, None))
    }
}

/// Combines the condition (a) witness on `G` with a coloring of the
/// component of `G + e` containing `e`, whose `i`-th vertex is host vertex
/// `vertices[i]`. Component classes are shifted past the witness classes.
fn merge_coloring(
    full: &Graph,
    witness: &EdgeColoring,
    g: &Graph,
    vertices: &[usize],
    local: &EdgeColoring,
) -> EdgeColoring {
    let offset = witness.classes().iter().max().map_or(0, |c| c + 1);
    let inside = VertexSet::from_vertices(vertices.iter().copied());
    let sub = full.induced_subgraph(inside);
    let local_index = |x: usize| vertices.binary_search(&x).expect("vertex in component");
    let classes = full
        .edges()
        .into_iter()
        .map(|(u, v)| {
            if inside.contains(u) {
                let idx = sub
                    .edge_index(local_index(u), local_index(v))
                    .expect("component edge");
                offset + local.class_of(idx)
            } else {
                witness.class_of(g.edge_index(u, v).expect("edge of G"))
            }
        })
        .collect();
    EdgeColoring::new(classes).canonical()
}

/// Classical saturation verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalVerdict {
    pub h_free: bool,
    pub saturated: bool,
    /// A non-edge whose addition creates no copy of `H`.
    pub failing_edge: Option<(usize, usize)>,
}

/// `G` contains no copy of `H`, and adding any non-edge creates one.
pub fn is_classically_saturated(g: &Graph, h: &Pattern) -> ClassicalVerdict {
    if contains_copy(g, h) {
        return ClassicalVerdict {
            h_free: false,
            saturated: false,
            failing_edge: None,
        };
    }
    let failing = g
        .non_edges()
        .into_iter()
        .find(|&(u, v)| !contains_copy_through(&g.with_edge(u, v), h, u, v));
    ClassicalVerdict {
        h_free: true,
        saturated: failing.is_none(),
        failing_edge: failing,
    }
}

pub(crate) fn family_graph6(family: &[Pattern]) -> Vec<String> {
    family.iter().map(|p| graph6_encode(p.graph())).collect()
}
