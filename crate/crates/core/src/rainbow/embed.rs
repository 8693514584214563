//! Subgraph (monomorphism) enumeration by backtracking over bitset rows.

use std::collections::BTreeSet;

use super::{is_proper, EdgeColoring, Pattern, RainbowError};
use crate::graph::{bit, Bits, Graph};

/// All copies of a pattern in a host, each an ascending list of host edge
/// indices. Each copy appears exactly once, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingList {
    pub host_order: usize,
    pub host_size: usize,
    pub embeddings: Vec<Vec<usize>>,
}

impl EmbeddingList {
    pub fn len(&self) -> usize {
        self.embeddings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.embeddings.is_empty()
    }
}

/// Pattern vertex order where every vertex after the first of its component
/// has an earlier neighbor; `pinned` vertices come first.
fn matching_order(core: &Graph, pinned: &[usize]) -> Vec<usize> {
    let n = core.n();
    let mut order: Vec<usize> = pinned.to_vec();
    let mut placed: u64 = pinned.iter().fold(0, |a, &v| a | bit(v));
    while order.len() < n {
        // Prefer the unplaced vertex with most placed neighbors, then degree.
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (core.neighbors(v) & placed).count_ones(),
                    core.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("some vertex unplaced");
        order.push(next);
        placed |= bit(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    core: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    /// Extends the partial map from position `depth`; `visit` returns false
    /// to stop the whole enumeration.
    fn extend(&mut self, depth: usize, used: u64, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let p = self.order[depth];
        let mut cand = self.host.vertex_mask() & !used;
        for &q in &self.order[..depth] {
            if self.core.has_edge(p, q) {
                cand &= self.host.neighbors(self.map[q]);
            }
        }
        let need = self.core.degree(p);
        for x in Bits::new(cand) {
            if self.host.degree(x) < need {
                continue;
            }
            self.map[p] = x;
            if !self.extend(depth + 1, used | bit(x), visit) {
                return false;
            }
        }
        true
    }
}

fn for_each_map(host: &Graph, core: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if core.n() > host.n() {
        return;
    }
    let mut m = Matcher {
        host,
        core,
        order: matching_order(core, &[]),
        map: vec![0; core.n()],
    };
    m.extend(0, 0, visit);
}

/// Number of injective edge-preserving maps `core -> host`.
pub(crate) fn count_maps(core: &Graph, host: &Graph) -> u64 {
    let mut count = 0u64;
    for_each_map(host, core, &mut |_| {
        count += 1;
        true
    });
    count
}

fn edge_index_table(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut table = vec![u32::MAX; n * n];
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        table[u * n + v] = i as u32;
        table[v * n + u] = i as u32;
    }
    table
}

fn image_edges(core: &Graph, host_n: usize, table: &[u32], map: &[usize]) -> Vec<usize> {
    let mut edges: Vec<usize> = core
        .edges()
        .into_iter()
        .map(|(a, b)| table[map[a] * host_n + map[b]] as usize)
        .collect();
    edges.sort_unstable();
    edges
}

/// Every copy of `h` in `g`, deduplicated by edge set.
///
/// A pattern without edges has one (empty) copy whenever the host has
/// enough vertices.
pub fn enumerate_embeddings(g: &Graph, h: &Pattern) -> EmbeddingList {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    if h.order() <= g.n() {
        let core = h.core();
        let table = edge_index_table(g);
        let core_edges = core.edges();
        for_each_map(g, core, &mut |map| {
            let mut edges: Vec<usize> = core_edges
                .iter()
                .map(|&(a, b)| table[map[a] * g.n() + map[b]] as usize)
                .collect();
            edges.sort_unstable();
            found.insert(edges);
            true
        });
    }
    EmbeddingList {
        host_order: g.n(),
        host_size: g.edge_count(),
        embeddings: found.into_iter().collect(),
    }
}

/// Whether `g` contains a (not necessarily induced) copy of `h`.
pub fn contains_copy(g: &Graph, h: &Pattern) -> bool {
    if h.order() > g.n() {
        return false;
    }
    let mut hit = false;
    for_each_map(g, h.core(), &mut |_| {
        hit = true;
        false
    });
    hit
}

/// Whether `g` has a copy of `h` using the edge `{u, v}` (which must be an
/// edge of `g`).
pub fn contains_copy_through(g: &Graph, h: &Pattern, u: usize, v: usize) -> bool {
    if h.order() > g.n() || !g.has_edge(u, v) {
        return false;
    }
    let core = h.core();
    for (a, b) in core.edges() {
        for (x, y) in [(u, v), (v, u)] {
            let mut m = Matcher {
                host: g,
                core,
                order: matching_order(core, &[a, b]),
                map: vec![0; core.n()],
            };
            m.map[a] = x;
            m.map[b] = y;
            let mut hit = false;
            m.extend(2, bit(x) | bit(y), &mut |_| {
                hit = true;
                false
            });
            if hit {
                return true;
            }
        }
    }
    false
}

/// Some copy of `h` whose edges carry pairwise distinct classes under `c`.
pub fn find_rainbow_embedding(
    g: &Graph,
    c: &EdgeColoring,
    h: &Pattern,
) -> Result<Option<Vec<usize>>, RainbowError> {
    if !is_proper(g, c)? {
        return Err(RainbowError::ImproperColoring);
    }
    if h.order() > g.n() {
        return Ok(None);
    }
    let table = edge_index_table(g);
    let mut hit = None;
    for_each_map(g, h.core(), &mut |map| {
        let edges = image_edges(h.core(), g.n(), &table, map);
        let mut classes: Vec<usize> = edges.iter().map(|&e| c.class_of(e)).collect();
        classes.sort_unstable();
        classes.dedup();
        if classes.len() == edges.len() {
            hit = Some(edges);
            false
        } else {
            true
        }
    });
    Ok(hit)
}
