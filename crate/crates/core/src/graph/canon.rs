//! Canonical labeling by equitable refinement and individualization.
//!
//! The search tree branches on the vertices of the first non-singleton cell
//! of the refined partition. Every leaf yields a relabeling; the canonical
//! form is the lexicographically largest relabeled adjacency. Children that
//! lie in one orbit of the automorphisms found so far (those fixing the
//! current prefix pointwise) are skipped, which keeps highly symmetric graphs
//! such as `E_n` and `K_n` cheap.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::{bit, Bits, Graph};

/// Isomorphism-invariant encoding of a graph plus the relabeling reaching it.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    code: Vec<u8>,
    labeling: Vec<usize>,
}

impl CanonicalForm {
    /// Byte encoding: vertex count, then the packed upper triangle of the
    /// canonical representative.
    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// The canonical representative of `g`'s isomorphism class.
    pub fn representative(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

/// Splits cells until every cell is equitable with respect to every other.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(8);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                groups.clear();
                for v in Bits::new(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, set)) => *set |= bit(v),
                        None => groups.push((c, bit(v))),
                    }
                }
                if groups.len() == 1 {
                    next.push(cell);
                } else {
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    next.extend(groups.iter().map(|&(_, set)| set));
                    changed = true;
                }
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the rest of the subtree down to `level`
    /// is known to be an automorphic image of explored work.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let target = cells[target_idx];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits::new(target) {
            if !explored.is_empty() && self.same_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < prefix.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn same_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let n = self.g.n();
        let mut perm = vec![0usize; n];
        for (label, &cell) in cells.iter().enumerate() {
            perm[cell.trailing_zeros() as usize] = label;
        }
        let rows = self.g.permuted(&perm).rows().to_vec();
        let leaf = Leaf {
            rows,
            perm,
            path: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: leaf.rows.clone(),
                perm: leaf.perm.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        // An equivalent leaf means the subtree hanging off the common
        // ancestor is the image of one already explored.
        if leaf.rows == first.rows {
            let gamma = automorphism_between(&first.perm, &leaf.perm);
            self.automorphisms.push(gamma);
            return Some(common_prefix(&first.path, prefix));
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.rows.cmp(&best.rows) {
            Ordering::Equal => {
                let gamma = automorphism_between(&best.perm, &leaf.perm);
                self.automorphisms.push(gamma);
                Some(common_prefix(&best.path, prefix))
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Less => None,
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Given two relabelings producing the same graph, the map
/// `v -> a^{-1}(b(v))` is an automorphism.
fn automorphism_between(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut a_inv = vec![0usize; a.len()];
    for (v, &l) in a.iter().enumerate() {
        a_inv[l] = v;
    }
    b.iter().map(|&l| a_inv[l]).collect()
}

fn encode(n: usize, rows: &[u64]) -> Vec<u8> {
    let mut code = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    code.push(n as u8);
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            byte = (byte << 1) | ((rows[i] >> j) & 1) as u8;
            filled += 1;
            if filled == 8 {
                code.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        code.push(byte << (8 - filled));
    }
    code
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm {
            code: vec![0],
            labeling: Vec::new(),
        };
    }
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(cells, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    CanonicalForm {
        code: encode(n, &best.rows),
        labeling: best.perm,
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, empty_graph, path, star, wheel};

    #[test]
    fn reversed_path_is_same_class() {
        let p = path(4).unwrap();
        let rev = p.permuted(&[3, 2, 1, 0]);
        assert_eq!(canonical_form(&p), canonical_form(&rev));
    }

    #[test]
    fn c4_differs_from_claw() {
        assert_ne!(
            canonical_form(&cycle(4).unwrap()),
            canonical_form(&star(3).unwrap())
        );
        assert!(!are_isomorphic(&star(3).unwrap(), &path(4).unwrap()));
        let c4 = cycle(4).unwrap();
        assert!(are_isomorphic(&c4, &c4.permuted(&[2, 0, 3, 1])));
    }

    #[test]
    fn representative_is_relabeling() {
        let g = wheel(7).unwrap();
        let cf = canonical_form(&g);
        let rep = cf.representative(&g);
        assert_eq!(canonical_form(&rep), cf);
        assert_eq!(rep.edge_count(), g.edge_count());
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for n in [2, 10, 40, 64] {
            let e = empty_graph(n).unwrap();
            assert_eq!(canonical_form(&e).labeling().len(), n);
            let k = complete_graph(n).unwrap();
            assert_ne!(canonical_form(&k), canonical_form(&e));
        }
        assert_eq!(canonical_form(&empty_graph(0).unwrap()).code(), &[0]);
    }

    #[test]
    fn code_distinguishes_orders() {
        assert_ne!(
            canonical_form(&empty_graph(3).unwrap()),
            canonical_form(&empty_graph(4).unwrap())
        );
    }
}
