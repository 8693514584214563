//! Brute-force oracle sharing no code with the search engine.
//!
//! Copies are found by trying every injective vertex map, and colorings by
//! enumerating every partition of the edge set into matchings. Exponential in
//! the edge count; meant for hosts with about a dozen edges at most.

use crate::graph::Graph;
use crate::rainbow::EdgeColoring;

/// Edge-index sets of every copy of `h` in `g`, sorted and deduplicated.
pub fn naive_copies(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let index = |u: usize, v: usize| {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).ok()
    };
    let h_edges = h.edges();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    fn assign(
        pos: usize,
        g: &Graph,
        h_edges: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut dyn FnMut(&[usize]),
    ) {
        if pos == map.len() {
            found(map);
            return;
        }
        for x in 0..g.n() {
            if used[x] {
                continue;
            }
            map[pos] = x;
            let ok = h_edges
                .iter()
                .filter(|&&(a, b)| a.max(b) == pos)
                .all(|&(a, b)| g.has_edge(map[a], map[b]));
            if ok {
                used[x] = true;
                assign(pos + 1, g, h_edges, map, used, found);
                used[x] = false;
            }
        }
        map[pos] = usize::MAX;
    }
    if h.n() <= g.n() {
        assign(0, g, &h_edges, &mut map, &mut used, &mut |m: &[usize]| {
            let mut copy: Vec<usize> = h_edges
                .iter()
                .map(|&(a, b)| index(m[a], m[b]).expect("mapped edge exists"))
                .collect();
            copy.sort_unstable();
            out.push(copy);
        });
    }
    out.sort();
    out.dedup();
    out
}

/// Calls `visit` with every proper coloring of `g` in restricted-growth
/// form until it returns `false`.
pub fn for_each_proper_coloring(g: &Graph, mut visit: impl FnMut(&[usize]) -> bool) {
    let edges = g.edges();
    let mut classes = vec![0usize; edges.len()];
    fn go(
        i: usize,
        used: usize,
        edges: &[(usize, usize)],
        classes: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == edges.len() {
            return visit(classes);
        }
        let (u, v) = edges[i];
        for c in 0..=used {
            let clash = (0..i).any(|j| {
                classes[j] == c && {
                    let (a, b) = edges[j];
                    a == u || a == v || b == u || b == v
                }
            });
            if clash {
                continue;
            }
            classes[i] = c;
            if !go(i + 1, used.max(c + 1), edges, classes, visit) {
                return false;
            }
        }
        true
    }
    go(0, 0, &edges, &mut classes, &mut visit);
}

fn is_rainbow(copy: &[usize], classes: &[usize]) -> bool {
    let mut seen: Vec<usize> = copy.iter().map(|&e| classes[e]).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// The first proper coloring (in enumeration order) with no rainbow copy of
/// any pattern, if one exists.
pub fn naive_rainbow_free_coloring(g: &Graph, family: &[Graph]) -> Option<EdgeColoring> {
    let copies: Vec<Vec<usize>> = family.iter().flat_map(|h| naive_copies(g, h)).collect();
    let mut found = None;
    for_each_proper_coloring(g, |classes| {
        if copies.iter().any(|c| is_rainbow(c, classes)) {
            true
        } else {
            found = Some(EdgeColoring::new(classes.to_vec()));
            false
        }
    });
    found
}

pub fn naive_colorable(g: &Graph, family: &[Graph]) -> bool {
    naive_rainbow_free_coloring(g, family).is_some()
}

/// Whether `coloring` is proper and leaves no copy rainbow.
pub fn naive_check_coloring(g: &Graph, family: &[Graph], coloring: &EdgeColoring) -> bool {
    let classes = coloring.classes();
    let edges = g.edges();
    if classes.len() != edges.len() {
        return false;
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let share = a == c || a == d || b == c || b == d;
            if share && classes[i] == classes[j] {
                return false;
            }
        }
    }
    family
        .iter()
        .flat_map(|h| naive_copies(g, h))
        .all(|c| !is_rainbow(&c, classes))
}

pub fn naive_is_rainbow_saturated(g: &Graph, family: &[Graph]) -> bool {
    naive_colorable(g, family)
        && g
            .non_edges()
            .into_iter()
            .all(|(u, v)| !naive_colorable(&g.with_edge(u, v), family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, path, star, wheel};

    #[test]
    fn copy_counts() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(naive_copies(&k4, &path(4).unwrap()).len(), 12);
        assert_eq!(naive_copies(&k4, &cycle(4).unwrap()).len(), 3);
        assert_eq!(naive_copies(&wheel(8).unwrap(), &cycle(4).unwrap()).len(), 7);
    }

    #[test]
    fn proper_coloring_counts() {
        // Matching partitions of K3 and K_{1,3}: one each; of P4: two.
        let mut count = 0;
        for_each_proper_coloring(&complete_graph(3).unwrap(), |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        let mut count = 0;
        for_each_proper_coloring(&path(4).unwrap(), |_| {
            count += 1;
            true
        });
        assert_eq!(count, 2);
        let mut count = 0;
        for_each_proper_coloring(&complete_graph(4).unwrap(), |_| {
            count += 1;
            true
        });
        // Each of the three perfect matchings is kept whole or split.
        assert_eq!(count, 8);
    }

    #[test]
    fn small_verdicts() {
        let p4 = path(4).unwrap();
        assert!(naive_colorable(&complete_graph(4).unwrap(), std::slice::from_ref(&p4)));
        assert!(!naive_colorable(&complete_graph(3).unwrap(), &[complete_graph(3).unwrap()]));
        assert!(naive_is_rainbow_saturated(&star(4).unwrap(), &[p4]));
    }
}
