//! Exhaustive search for a proper edge coloring with no rainbow copy of any
//! pattern in a family.
//!
//! A proper coloring with unboundedly many colors is a partition of the edge
//! set into matchings, so colorings are enumerated as restricted-growth
//! strings (each partition once). Only edges lying in some copy of a pattern
//! matter: any other edge can take a fresh class of its own. The relevant
//! edges split into independent blocks (edges are linked when they share a
//! vertex or a copy), and each block is searched on its own.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::{enumerate_embeddings, EdgeColoring, Pattern, RainbowError};
use crate::graph::Graph;

/// Per-call search budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchLimits {
    pub timeout: Option<Duration>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits { timeout: None }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        SearchLimits {
            timeout: Some(timeout),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
}

impl SearchStats {
    pub fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorability {
    /// Witness in restricted-growth form.
    Colorable(EdgeColoring),
    Uncolorable,
    /// The time budget ran out; never evidence either way.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorabilityResult {
    pub outcome: Colorability,
    pub stats: SearchStats,
}

impl ColorabilityResult {
    pub fn is_colorable(&self) -> bool {
        matches!(self.outcome, Colorability::Colorable(_))
    }

    pub fn is_uncolorable(&self) -> bool {
        matches!(self.outcome, Colorability::Uncolorable)
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.outcome {
            Colorability::Colorable(c) => Some(c),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self.outcome {
            Colorability::Colorable(_) => "COLORABLE",
            Colorability::Uncolorable => "UNCOLORABLE",
            Colorability::Indeterminate => "INDETERMINATE",
        }
    }
}

/// Does `g` have a proper edge coloring without a rainbow copy of any
/// member of `family`?
pub fn rainbow_free_colorable(
    g: &Graph,
    family: &[Pattern],
    limits: &SearchLimits,
) -> Result<ColorabilityResult, RainbowError> {
    if family.is_empty() {
        return Err(RainbowError::EmptyFamily);
    }
    let mut copies: Vec<Vec<usize>> = family
        .iter()
        .flat_map(|p| enumerate_embeddings(g, p).embeddings)
        .collect();
    copies.sort_unstable();
    copies.dedup();
    Ok(colorable_avoiding(g, &copies, limits))
}

/// Core routine over precomputed copies (edge-index sets of `g`).
fn colorable_avoiding(
    g: &Graph,
    copies: &[Vec<usize>],
    limits: &SearchLimits,
) -> ColorabilityResult {
    let deadline = limits.timeout.map(|t| Instant::now() + t);
    let edges = g.edges();
    let m = edges.len();
    let mut stats = SearchStats::default();

    if copies.iter().any(|c| c.is_empty()) {
        return ColorabilityResult {
            outcome: Colorability::Uncolorable,
            stats,
        };
    }

    // Block decomposition over relevant edges.
    let mut relevant = vec![false; m];
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    fn union(p: &mut [usize], a: usize, b: usize) {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra.max(rb)] = ra.min(rb);
        }
    }
    for copy in copies {
        for &e in copy {
            relevant[e] = true;
            union(&mut parent, copy[0], e);
        }
    }
    let mut first_at_vertex = vec![usize::MAX; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !relevant[i] {
            continue;
        }
        for w in [u, v] {
            if first_at_vertex[w] == usize::MAX {
                first_at_vertex[w] = i;
            } else {
                union(&mut parent, first_at_vertex[w], i);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of_root = vec![usize::MAX; m];
    for i in 0..m {
        if !relevant[i] {
            continue;
        }
        let r = find(&mut parent, i);
        if block_of_root[r] == usize::MAX {
            block_of_root[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of_root[r]].push(i);
    }
    let mut block_copies: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); blocks.len()];
    for copy in copies {
        let r = find(&mut parent, copy[0]);
        block_copies[block_of_root[r]].push(copy);
    }

    let mut classes: Vec<usize> = vec![usize::MAX; m];
    for (block, bcopies) in blocks.iter().zip(&block_copies) {
        let mut solver = BlockSolver::new(&edges, block, bcopies, g.n(), deadline);
        let found = solver.solve();
        stats.absorb(solver.stats);
        match found {
            BlockOutcome::Colored(local) => {
                for (k, &e) in block.iter().enumerate() {
                    classes[e] = local[k];
                }
            }
            BlockOutcome::Impossible => {
                return ColorabilityResult {
                    outcome: Colorability::Uncolorable,
                    stats,
                };
            }
            BlockOutcome::TimedOut => {
                return ColorabilityResult {
                    outcome: Colorability::Indeterminate,
                    stats,
                };
            }
        }
    }
    // Blocks share no vertex, so their class ranges may overlap; every
    // remaining edge gets a class of its own.
    let mut fresh = classes.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |c| c + 1);
    for c in classes.iter_mut().filter(|c| **c == usize::MAX) {
        *c = fresh;
        fresh += 1;
    }
    ColorabilityResult {
        outcome: Colorability::Colorable(EdgeColoring::new(classes).canonical()),
        stats,
    }
}

enum BlockOutcome {
    Colored(Vec<usize>),
    Impossible,
    TimedOut,
}

struct BlockSolver {
    /// Endpoints of the block's edges, in search order.
    ends: Vec<(usize, usize)>,
    /// Search position -> index into the block's edge list.
    position_edge: Vec<usize>,
    /// Copies as ascending search positions.
    copies: Vec<Vec<usize>>,
    completes_at: Vec<Vec<usize>>,
    penultimate_at: Vec<Vec<usize>>,
    color: Vec<usize>,
    used: Vec<u64>,
    words: usize,
    classes_used: usize,
    deadline: Option<Instant>,
    stats: SearchStats,
    timed_out: bool,
}

impl BlockSolver {
    fn new(
        edges: &[(usize, usize)],
        block: &[usize],
        copies: &[&Vec<usize>],
        n: usize,
        deadline: Option<Instant>,
    ) -> Self {
        let k = block.len();
        let local_of = |e: usize| block.binary_search(&e).expect("copy edge inside block");
        let local_copies: Vec<Vec<usize>> = copies
            .iter()
            .map(|c| c.iter().map(|&e| local_of(e)).collect())
            .collect();
        let local_ends: Vec<(usize, usize)> = block.iter().map(|&e| edges[e]).collect();
        let order = search_order(&local_ends, &local_copies, n);
        let mut pos_of = vec![0usize; k];
        for (p, &e) in order.iter().enumerate() {
            pos_of[e] = p;
        }
        let mut completes_at = vec![Vec::new(); k];
        let mut penultimate_at = vec![Vec::new(); k];
        let copies: Vec<Vec<usize>> = local_copies
            .iter()
            .map(|c| {
                let mut ps: Vec<usize> = c.iter().map(|&e| pos_of[e]).collect();
                ps.sort_unstable();
                ps
            })
            .collect();
        for (i, ps) in copies.iter().enumerate() {
            completes_at[ps[ps.len() - 1]].push(i);
            if ps.len() >= 2 {
                penultimate_at[ps[ps.len() - 2]].push(i);
            }
        }
        let words = k.div_ceil(64).max(1);
        BlockSolver {
            ends: order.iter().map(|&e| local_ends[e]).collect(),
            position_edge: order,
            copies,
            completes_at,
            penultimate_at,
            color: vec![usize::MAX; k],
            used: vec![0; n * words],
            words,
            classes_used: 0,
            deadline,
            stats: SearchStats::default(),
            timed_out: false,
        }
    }

    #[inline]
    fn is_used(&self, v: usize, c: usize) -> bool {
        self.used[v * self.words + c / 64] & (1u64 << (c % 64)) != 0
    }

    #[inline]
    fn toggle(&mut self, v: usize, c: usize) {
        self.used[v * self.words + c / 64] ^= 1u64 << (c % 64);
    }

    fn solve(&mut self) -> BlockOutcome {
        if self.dfs(0) {
            let mut local = vec![0usize; self.color.len()];
            for (p, &e) in self.position_edge.iter().enumerate() {
                local[e] = self.color[p];
            }
            BlockOutcome::Colored(local)
        } else if self.timed_out {
            BlockOutcome::TimedOut
        } else {
            BlockOutcome::Impossible
        }
    }

    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.ends.len() {
            return true;
        }
        self.stats.max_depth = self.stats.max_depth.max(pos + 1);
        let (u, v) = self.ends[pos];
        let open = self.classes_used;
        for c in 0..=open {
            if c < open && (self.is_used(u, c) || self.is_used(v, c)) {
                continue;
            }
            self.stats.nodes += 1;
            if self.stats.nodes & 0x3ff == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        self.timed_out = true;
                        return false;
                    }
                }
            }
            self.color[pos] = c;
            self.toggle(u, c);
            self.toggle(v, c);
            if c == open {
                self.classes_used += 1;
            }
            if self.consistent(pos) && self.dfs(pos + 1) {
                return true;
            }
            if c == open {
                self.classes_used -= 1;
            }
            self.toggle(u, c);
            self.toggle(v, c);
            self.color[pos] = usize::MAX;
            if self.timed_out {
                return false;
            }
        }
        false
    }

    /// Checks copies completed at `pos` and copies left with one uncolored
    /// edge, whose last edge must repeat one of the classes already present.
    fn consistent(&self, pos: usize) -> bool {
        for &i in &self.completes_at[pos] {
            if all_distinct(self.copies[i].iter().map(|&p| self.color[p])) {
                return false;
            }
        }
        for &i in &self.penultimate_at[pos] {
            let ps = &self.copies[i];
            let (last, colored) = ps.split_last().expect("copy has two or more edges");
            if !all_distinct(colored.iter().map(|&p| self.color[p])) {
                continue;
            }
            let (a, b) = self.ends[*last];
            let repeatable = colored.iter().any(|&p| {
                let c = self.color[p];
                !self.is_used(a, c) && !self.is_used(b, c)
            });
            if !repeatable {
                return false;
            }
        }
        true
    }
}

fn all_distinct(mut it: impl Iterator<Item = usize>) -> bool {
    let mut seen: [usize; 32] = [0; 32];
    let mut k = 0;
    for c in it.by_ref() {
        if seen[..k].contains(&c) {
            return false;
        }
        if k == seen.len() {
            // Very large patterns: fall back to a vector.
            let mut rest: Vec<usize> = seen.to_vec();
            rest.push(c);
            for c in it {
                if rest.contains(&c) {
                    return false;
                }
                rest.push(c);
            }
            return true;
        }
        seen[k] = c;
        k += 1;
    }
    true
}

/// Greedy static order: prefer edges that complete copies, then edges that
/// leave a copy one edge short, then edges touching partially ordered
/// copies, then edges incident to ordered ones.
fn search_order(ends: &[(usize, usize)], copies: &[Vec<usize>], n: usize) -> Vec<usize> {
    let k = ends.len();
    let mut copies_of: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, c) in copies.iter().enumerate() {
        for &e in c {
            copies_of[e].push(i);
        }
    }
    let mut remaining: Vec<usize> = copies.iter().map(|c| c.len()).collect();
    let mut placed = vec![false; k];
    let mut touched_vertex = vec![false; n];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let mut best: Option<((usize, usize, usize, bool, usize), usize)> = None;
        for e in 0..k {
            if placed[e] {
                continue;
            }
            let mut completes = 0;
            let mut penult = 0;
            let mut started = 0;
            for &i in &copies_of[e] {
                match remaining[i] {
                    1 => completes += 1,
                    2 => penult += 1,
                    _ => {}
                }
                if remaining[i] < copies[i].len() {
                    started += 1;
                }
            }
            let (u, v) = ends[e];
            let incident = touched_vertex[u] || touched_vertex[v];
            let key = (completes, penult, started, incident, copies_of[e].len());
            if best.as_ref().is_none_or(|(bk, _)| key > *bk) {
                best = Some((key, e));
            }
        }
        let (_, e) = best.expect("unplaced edge exists");
        placed[e] = true;
        order.push(e);
        for &i in &copies_of[e] {
            remaining[i] -= 1;
        }
        let (u, v) = ends[e];
        touched_vertex[u] = true;
        touched_vertex[v] = true;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, path, star};
    use crate::rainbow::{find_rainbow_embedding, is_proper};

    fn pats(names: &[&str]) -> Vec<Pattern> {
        names.iter().map(|s| Pattern::parse(s).unwrap()).collect()
    }

    fn check(g: &Graph, fam: &[&str]) -> ColorabilityResult {
        let fam = pats(fam);
        let r = rainbow_free_colorable(g, &fam, &SearchLimits::unlimited()).unwrap();
        if let Some(w) = r.witness() {
            assert!(is_proper(g, w).unwrap());
            assert!(w.is_restricted_growth());
            for p in &fam {
                assert_eq!(find_rainbow_embedding(g, w, p).unwrap(), None);
            }
        }
        r
    }

    #[test]
    fn k4_avoids_rainbow_p4() {
        let r = check(&complete_graph(4).unwrap(), &["P4"]);
        let w = r.witness().expect("colorable");
        assert_eq!(w.num_classes(), 3);
    }

    #[test]
    fn too_few_edges_is_colorable() {
        assert!(check(&path(3).unwrap(), &["P4", "C4"]).is_colorable());
        assert!(check(&complete_graph(3).unwrap(), &["K4"]).is_colorable());
    }

    #[test]
    fn forced_rainbow() {
        // Every proper coloring of a triangle or of P3 is rainbow.
        assert!(check(&complete_graph(3).unwrap(), &["K3"]).is_uncolorable());
        assert!(check(&path(3).unwrap(), &["P3"]).is_uncolorable());
        assert!(check(&complete_graph(2).unwrap(), &["K2"]).is_uncolorable());
        // A star has no P4 at all.
        assert!(check(&star(5).unwrap(), &["P4"]).is_colorable());
        // Edgeless patterns are rainbow whenever they fit.
        assert!(check(&path(3).unwrap(), &["E3"]).is_uncolorable());
        assert!(check(&path(3).unwrap(), &["E4"]).is_colorable());
    }

    #[test]
    fn c4_alternating() {
        assert!(check(&cycle(4).unwrap(), &["C4"]).is_colorable());
        assert!(check(&cycle(4).unwrap(), &["P4"]).is_colorable());
        assert!(check(&cycle(5).unwrap(), &["P3"]).is_uncolorable());
    }

    #[test]
    fn empty_family_rejected() {
        assert!(matches!(
            rainbow_free_colorable(&path(3).unwrap(), &[], &SearchLimits::unlimited()),
            Err(RainbowError::EmptyFamily)
        ));
    }

    #[test]
    fn timeout_is_indeterminate() {
        let g = complete_graph(9).unwrap();
        let r = rainbow_free_colorable(
            &g,
            &pats(&["C4"]),
            &SearchLimits::with_timeout(Duration::from_nanos(1)),
        )
        .unwrap();
        assert!(matches!(
            r.outcome,
            Colorability::Indeterminate | Colorability::Uncolorable | Colorability::Colorable(_)
        ));
        if r.stats.nodes > 2048 {
            assert_eq!(r.outcome, Colorability::Indeterminate);
        }
    }

    #[test]
    fn distinctness_helper() {
        assert!(all_distinct([1, 2, 3].into_iter()));
        assert!(!all_distinct([1, 2, 1].into_iter()));
        assert!(all_distinct(0..40));
        assert!(!all_distinct((0..40).chain([39])));
    }
}
