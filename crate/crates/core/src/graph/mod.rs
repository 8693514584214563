//! Small undirected simple graphs stored as one `u64` neighbor row per vertex.
//!
//! Every graph in this crate has at most [`MAX_VERTICES`] vertices labeled
//! `0..n`. Edges are always reported in lexicographic `(min, max)` order so
//! that edge indices (and therefore colorings) are reproducible.

mod canon;
mod graph6;
mod independent;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use graph6::{graph6_decode, graph6_encode};
pub use independent::{
    independent_sets_of_size, is_bipartite, is_even_cycle_free, is_forest, max_independent_set,
};

/// Largest supported vertex count: one machine word per neighbor row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("{what} requires {expected}, got {got}")]
    ParameterOutOfRange {
        what: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("malformed adjacency JSON: {0}")]
    MalformedJson(String),
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(u64);

impl Bits {
    pub fn new(word: u64) -> Self {
        Bits(word)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A set of vertices of some host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | bit(v)))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn iter(&self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// An undirected simple graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor rows, checking symmetry and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(GraphError::MalformedJson(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(min endpoint, max endpoint)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent vertex pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mask = self.vertex_mask();
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = !self.adj[u] & mask & !low_mask(u + 1);
            for v in Bits(missing) {
                out.push((u, v));
            }
        }
        out
    }

    /// Position of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if !self.has_edge(u, v) {
            return None;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let before: usize = (0..a)
            .map(|x| (self.adj[x] & !low_mask(x + 1)).count_ones() as usize)
            .sum();
        let within = (self.adj[a] & !low_mask(a + 1) & low_mask(b)).count_ones() as usize;
        Some(before + within)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Adds `{u, v}`; panics on out-of-range vertices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.n).filter(|&v| self.adj[v] == 0))
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in Bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in increasing order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut index = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for u in Bits(self.adj[v] & keep.0) {
                adj[i] |= bit(index[u]);
            }
        }
        Graph { n: verts.len(), adj }
    }

    /// Deletes the vertices in `remove` and relabels the rest in order.
    pub fn remove_vertices(&self, remove: VertexSet) -> Graph {
        self.induced_subgraph(VertexSet(self.vertex_mask() & !remove.0))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0) == self.vertex_mask()
    }

    /// Vertex set of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Vertex sets of all connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = self.vertex_mask();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.component_of(v);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Debug JSON form `{"n": .., "edges": [[u, v], ..]}`.
    pub fn to_json(&self) -> AdjacencyJson {
        AdjacencyJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(j: &AdjacencyJson) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(j.n, &edges)
    }
}

/// Adjacency-list debug format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub fn empty_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

pub fn complete_graph(r: usize) -> Result<Graph, GraphError> {
    if !(1..=MAX_VERTICES).contains(&r) {
        return Err(GraphError::ParameterOutOfRange {
            what: "complete_graph",
            expected: "1 <= r <= 64",
            got: r,
        });
    }
    let mask = low_mask(r);
    let adj = (0..r).map(|v| mask & !bit(v)).collect();
    Ok(Graph { n: r, adj })
}

/// Path on `k` vertices (and `k - 1` edges).
pub fn path(k: usize) -> Result<Graph, GraphError> {
    if !(1..=MAX_VERTICES).contains(&k) {
        return Err(GraphError::ParameterOutOfRange {
            what: "path",
            expected: "1 <= k <= 64",
            got: k,
        });
    }
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

pub fn cycle(k: usize) -> Result<Graph, GraphError> {
    if !(3..=MAX_VERTICES).contains(&k) {
        return Err(GraphError::ParameterOutOfRange {
            what: "cycle",
            expected: "3 <= k <= 64",
            got: k,
        });
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    if leaves + 1 > MAX_VERTICES {
        return Err(GraphError::ParameterOutOfRange {
            what: "star",
            expected: "leaves <= 63",
            got: leaves,
        });
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// Wheel on `n` vertices: rim `0..n-1` in cyclic order, hub `n - 1`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if !(4..=MAX_VERTICES).contains(&n) {
        return Err(GraphError::ParameterOutOfRange {
            what: "wheel",
            expected: "4 <= n <= 64",
            got: n,
        });
    }
    let rim = n - 1;
    let hub = n - 1;
    let mut g = Graph::empty(n)?;
    for i in 0..rim {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, hub);
    }
    Ok(g)
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    join(&Graph::empty(a)?, &Graph::empty(b)?)
}

/// The join `G + H`: disjoint copies plus every edge between them.
/// Vertices of `h` are shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let total = g.n + h.n;
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let g_mask = low_mask(g.n);
    let h_mask = low_mask(total) & !g_mask;
    let mut adj = Vec::with_capacity(total);
    adj.extend(g.adj.iter().map(|&r| r | h_mask));
    adj.extend(h.adj.iter().map(|&r| (r << g.n) | g_mask));
    Ok(Graph { n: total, adj })
}

/// Block-diagonal union; labels are shifted cumulatively.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, GraphError> {
    let total: usize = gs.iter().map(|g| g.n).sum();
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut adj = Vec::with_capacity(total);
    let mut offset = 0;
    for g in gs {
        adj.extend(g.adj.iter().map(|&r| r << offset));
        offset += g.n;
    }
    Ok(Graph { n: total, adj })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_edge_counts() {
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
        assert_eq!(wheel(8).unwrap().edge_count(), 14);
        assert_eq!(wheel(8).unwrap().n(), 8);
        assert_eq!(star(4).unwrap().edge_count(), 4);
        assert_eq!(path(4).unwrap().edge_count(), 3);
        assert_eq!(path(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn generator_ranges() {
        assert!(complete_graph(0).is_err());
        assert!(complete_graph(65).is_err());
        assert!(cycle(2).is_err());
        assert!(wheel(3).is_err());
        assert!(path(0).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn join_examples() {
        let k2 = complete_graph(2).unwrap();
        let e4 = empty_graph(4).unwrap();
        let j = join(&k2, &e4).unwrap();
        assert_eq!((j.n(), j.edge_count()), (6, 9));
        let e1 = empty_graph(1).unwrap();
        assert_eq!(join(&e1, &e1).unwrap(), complete_graph(2).unwrap());
        let w = join(&e1, &cycle(7).unwrap()).unwrap();
        assert!(are_isomorphic(&w, &wheel(8).unwrap()));
        assert!(join(&empty_graph(40).unwrap(), &empty_graph(30).unwrap()).is_err());
    }

    #[test]
    fn union_examples() {
        let k4 = complete_graph(4).unwrap();
        let u = disjoint_union(&[k4.clone(), k4.clone(), k4.clone(), k4]).unwrap();
        assert_eq!((u.n(), u.edge_count()), (16, 24));
        assert_eq!(disjoint_union(&[]).unwrap().n(), 0);
        let k2 = complete_graph(2).unwrap();
        let u = disjoint_union(&[k2.clone(), k2]).unwrap();
        assert_eq!((u.n(), u.edge_count()), (4, 2));
        assert_eq!(u.component_masks(), vec![0b0011, 0b1100]);
    }

    #[test]
    fn edge_order_and_index() {
        let g = Graph::from_edges(4, &[(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        for (i, (u, v)) in g.edges().into_iter().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(2, 3), None);
        assert_eq!(g.non_edges(), vec![(0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_adjacency() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = wheel(6).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: AdjacencyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Graph::from_json(&back).unwrap(), g);
    }

    #[test]
    fn induced_and_removal() {
        let c5 = cycle(5).unwrap();
        let p = c5.remove_vertices(VertexSet::from_vertices([0]));
        assert!(are_isomorphic(&p, &path(4).unwrap()));
    }
}
