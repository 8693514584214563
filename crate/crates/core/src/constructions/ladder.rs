//! The family ladder `F^(0) = {H}, F^(1), ..., F^(k)` and the recursive
//! construction of a rainbow `H`-saturated graph from it.
//!
//! `F^(i+1)` collects `F - X` over `F` in `F^(i)` and independent sets `X`
//! of size `alpha(F^(i))`, the largest independence number in the level. The
//! ladder stops at the first level with a bipartite member.
//!
//! The construction starts from a rainbow `F^(k)`-saturated graph on `n_k`
//! vertices and, for `i = k, ..., 1`, joins an independent set `I` to it and
//! then adds every edge inside `I` that keeps the graph rainbow
//! `F^(i-1)`-free colorable.

use std::collections::BTreeMap;

use serde::Serialize;

use super::ConstructionError;
use crate::graph::{
    canonical_form, empty_graph, graph6_encode, independent_sets_of_size, is_bipartite,
    is_even_cycle_free, is_forest, join, max_independent_set, Graph, VertexSet,
};
use crate::rainbow::{rainbow_free_colorable, Colorability, Pattern, SearchLimits};
use crate::saturation::{greedy_saturate, EdgeOrder, SaturationError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLadder {
    /// Canonical representatives of each level, sorted by canonical code.
    pub levels: Vec<Vec<Graph>>,
    /// `alphas[i]` is `alpha(F^(i))` for `i < k`.
    pub alphas: Vec<usize>,
    /// Common order `h_i` of the graphs in level `i`.
    pub orders: Vec<usize>,
}

impl FamilyLadder {
    /// Index `k` of the last level.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn patterns(&self, level: usize) -> Vec<Pattern> {
        self.levels[level].iter().cloned().map(Pattern::new).collect()
    }

    /// `n_i = n - sum_{j < i} |I_j|` for `i = 0..=k`, or `None` if some
    /// `n_i` would be below 1.
    pub fn target_sizes(&self, n: usize, policy: IndependentSetSize) -> Option<Vec<usize>> {
        let mut sizes = vec![n];
        let mut current = n;
        for &h in &self.orders[..self.depth()] {
            current = current.checked_sub(policy.size(h))?;
            sizes.push(current);
        }
        (current >= 1).then_some(sizes)
    }
}

/// Size of the independent set joined at each step, as a function of the
/// order `h` of the level being built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndependentSetSize {
    /// `h^3 + h`, enough for the counting argument to go through.
    Cubic,
    /// `h`.
    Order,
    Fixed(usize),
}

impl IndependentSetSize {
    pub fn size(self, h: usize) -> usize {
        match self {
            IndependentSetSize::Cubic => h * h * h + h,
            IndependentSetSize::Order => h,
            IndependentSetSize::Fixed(s) => s,
        }
    }

    pub fn label(self) -> String {
        match self {
            IndependentSetSize::Cubic => "h^3+h".to_string(),
            IndependentSetSize::Order => "h".to_string(),
            IndependentSetSize::Fixed(s) => s.to_string(),
        }
    }
}

pub fn build_family_ladder(h: &Pattern) -> Result<FamilyLadder, ConstructionError> {
    if !is_even_cycle_free(h.graph()) {
        return Err(ConstructionError::NotEvenCycleFree(h.name().to_string()));
    }
    let g = h.graph();
    let mut levels = vec![vec![canonical_form(g).representative(g)]];
    let mut alphas = Vec::new();
    let mut orders = vec![g.n()];
    loop {
        let level = levels.last().expect("at least one level");
        if level.iter().any(is_bipartite) {
            break;
        }
        let alpha = level
            .iter()
            .map(|f| max_independent_set(f).len())
            .max()
            .expect("levels are non-empty");
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for f in level {
            for x in independent_sets_of_size(f, alpha) {
                let rest = f.remove_vertices(x);
                let cf = canonical_form(&rest);
                next.entry(cf.code().to_vec())
                    .or_insert_with(|| cf.representative(&rest));
            }
        }
        let next: Vec<Graph> = next.into_values().collect();
        let order = next[0].n();
        if next.iter().any(|f| f.n() != order) {
            return Err(ConstructionError::Invariant(
                "members of one level differ in order".into(),
            ));
        }
        alphas.push(alpha);
        orders.push(order);
        levels.push(next);
    }
    for f in levels.last().expect("at least one level") {
        if is_bipartite(f) && !is_forest(f) {
            return Err(ConstructionError::Invariant(format!(
                "bipartite member {} of the last level is not a forest",
                graph6_encode(f)
            )));
        }
    }
    Ok(FamilyLadder {
        levels,
        alphas,
        orders,
    })
}

/// One join-and-patch step building `G^(level)` from `G^(level+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderStep {
    pub level: usize,
    /// Vertices of `I` in the resulting graph.
    pub independent_set: Vec<usize>,
    pub patched_edges: Vec<(usize, usize)>,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderTrace {
    pub pattern: String,
    pub n: usize,
    pub policy: String,
    pub levels: Vec<Vec<String>>,
    pub alphas: Vec<usize>,
    pub orders: Vec<usize>,
    pub independent_set_sizes: Vec<usize>,
    pub level_orders: Vec<usize>,
    pub base_edges: usize,
    pub steps: Vec<LadderStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderConstruction {
    pub graph: Graph,
    pub trace: LadderTrace,
}

/// Ladder construction with `|I| = h^3 + h`.
pub fn ladder_construction(h: &Pattern, n: usize) -> Result<Graph, ConstructionError> {
    ladder_construction_with(h, n, IndependentSetSize::Cubic, &SearchLimits::unlimited())
        .map(|c| c.graph)
}

pub fn ladder_construction_with(
    h: &Pattern,
    n: usize,
    policy: IndependentSetSize,
    limits: &SearchLimits,
) -> Result<LadderConstruction, ConstructionError> {
    let ladder = build_family_ladder(h)?;
    let k = ladder.depth();
    let sizes = ladder.target_sizes(n, policy).ok_or_else(|| {
        let needed: usize = ladder.orders[..k].iter().map(|&o| policy.size(o)).sum();
        ConstructionError::OutOfRange {
            what: "n",
            expected: format!(">= {}", needed + 1),
            got: n,
        }
    })?;
    if n > 64 {
        return Err(ConstructionError::OutOfRange {
            what: "n",
            expected: "<= 64".into(),
            got: n,
        });
    }
    let mut g = greedy_saturate(
        &empty_graph(sizes[k])?,
        &ladder.patterns(k),
        EdgeOrder::Lexicographic,
        limits,
    )?;
    let base_edges = g.edge_count();
    let mut steps = Vec::new();
    for i in (1..=k).rev() {
        let family = ladder.patterns(i - 1);
        let s = sizes[i - 1] - sizes[i];
        let offset = g.n();
        let mut joined = join(&g, &empty_graph(s)?)?;
        if !colorable(&joined, &family, limits)? {
            return Err(ConstructionError::Invariant(format!(
                "join at level {} has no rainbow-free coloring",
                i - 1
            )));
        }
        let mut patched = Vec::new();
        loop {
            let mut added = false;
            for u in offset..offset + s {
                for v in u + 1..offset + s {
                    if joined.has_edge(u, v) {
                        continue;
                    }
                    let candidate = joined.with_edge(u, v);
                    if colorable(&candidate, &family, limits)? {
                        joined = candidate;
                        patched.push((u, v));
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        steps.push(LadderStep {
            level: i - 1,
            independent_set: VertexSet::from_vertices(offset..offset + s).to_vec(),
            patched_edges: patched,
            edges: joined.edge_count(),
        });
        g = joined;
    }
    let trace = LadderTrace {
        pattern: h.name().to_string(),
        n,
        policy: policy.label(),
        levels: ladder
            .levels
            .iter()
            .map(|l| l.iter().map(graph6_encode).collect())
            .collect(),
        alphas: ladder.alphas.clone(),
        orders: ladder.orders.clone(),
        independent_set_sizes: (0..k).map(|j| sizes[j] - sizes[j + 1]).collect(),
        level_orders: sizes,
        base_edges,
        steps,
    };
    Ok(LadderConstruction { graph: g, trace })
}

fn colorable(
    g: &Graph,
    family: &[Pattern],
    limits: &SearchLimits,
) -> Result<bool, ConstructionError> {
    match rainbow_free_colorable(g, family, limits)?.outcome {
        Colorability::Colorable(_) => Ok(true),
        Colorability::Uncolorable => Ok(false),
        Colorability::Indeterminate => Err(SaturationError::Indeterminate {
            graph6: graph6_encode(g),
        }
        .into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, complete_bipartite, complete_graph};
    use crate::saturation::is_rainbow_saturated;

    fn level_sizes(l: &FamilyLadder) -> Vec<usize> {
        l.levels.iter().map(Vec::len).collect()
    }

    #[test]
    fn complete_graph_ladders() {
        let l = build_family_ladder(&Pattern::parse("K4").unwrap()).unwrap();
        assert_eq!(l.depth(), 2);
        assert_eq!(l.alphas, vec![1, 1]);
        assert_eq!(l.orders, vec![4, 3, 2]);
        assert_eq!(level_sizes(&l), vec![1, 1, 1]);
        assert!(are_isomorphic(&l.levels[1][0], &complete_graph(3).unwrap()));
        assert!(are_isomorphic(&l.levels[2][0], &complete_graph(2).unwrap()));

        let l = build_family_ladder(&Pattern::parse("K3").unwrap()).unwrap();
        assert_eq!((l.depth(), l.orders.clone()), (1, vec![3, 2]));
    }

    #[test]
    fn trees_stop_immediately() {
        for name in ["P4", "K1_3", "P2"] {
            let l = build_family_ladder(&Pattern::parse(name).unwrap()).unwrap();
            assert_eq!(l.depth(), 0, "{name}");
        }
    }

    #[test]
    fn level_orders_drop_by_alpha() {
        // W6 is even-cycle-free with alpha 2.
        let l = build_family_ladder(&Pattern::parse("W6").unwrap()).unwrap();
        for i in 0..l.depth() {
            assert_eq!(l.orders[i + 1], l.orders[i] - l.alphas[i]);
            assert!(l.levels[i + 1].iter().all(|f| f.n() == l.orders[i + 1]));
        }
    }

    #[test]
    fn even_cycles_are_rejected() {
        assert!(matches!(
            build_family_ladder(&Pattern::parse("C4").unwrap()),
            Err(ConstructionError::NotEvenCycleFree(_))
        ));
    }

    #[test]
    fn k3_order_policy_gives_complete_bipartite() {
        let h = Pattern::parse("K3").unwrap();
        let lim = SearchLimits::unlimited();
        for n in 4..=9 {
            let c = ladder_construction_with(&h, n, IndependentSetSize::Order, &lim).unwrap();
            assert!(are_isomorphic(&c.graph, &complete_bipartite(n - 3, 3).unwrap()));
            let v = is_rainbow_saturated(&c.graph, std::slice::from_ref(&h), &lim).unwrap();
            assert!(v.is_saturated(), "n = {n}");
        }
    }

    #[test]
    fn cubic_sizing_needs_room() {
        let h = Pattern::parse("K3").unwrap();
        assert!(ladder_construction(&h, 30).is_err());
        let g = ladder_construction(&h, 32).unwrap();
        assert!(are_isomorphic(&g, &complete_bipartite(2, 30).unwrap()));
    }

    #[test]
    fn target_sizes_follow_policy() {
        let l = build_family_ladder(&Pattern::parse("K4").unwrap()).unwrap();
        assert_eq!(l.target_sizes(100, IndependentSetSize::Cubic), Some(vec![100, 32, 2]));
        assert_eq!(l.target_sizes(8, IndependentSetSize::Order), Some(vec![8, 4, 1]));
        assert_eq!(l.target_sizes(7, IndependentSetSize::Order), None);
    }
}
