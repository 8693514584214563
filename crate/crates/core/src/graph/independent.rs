use super::{bit, Bits, Graph, VertexSet};

/// Exact maximum independent set by branch and bound over bitsets.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let mut best = 0u64;
    branch(g, g.vertex_mask(), 0, &mut best);
    VertexSet(best)
}

fn branch(g: &Graph, mut cand: u64, mut cur: u64, best: &mut u64) {
    loop {
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        // A vertex with at most one candidate neighbor belongs to some
        // maximum independent set of the candidate subgraph.
        let mut forced = None;
        let mut pivot = (0usize, 0u32);
        for v in Bits::new(cand) {
            let d = (g.neighbors(v) & cand).count_ones();
            if d <= 1 {
                forced = Some(v);
                break;
            }
            if d > pivot.1 {
                pivot = (v, d);
            }
        }
        match forced {
            Some(v) => {
                cur |= bit(v);
                cand &= !(g.neighbors(v) | bit(v));
            }
            None => {
                let v = pivot.0;
                branch(g, cand & !(g.neighbors(v) | bit(v)), cur | bit(v), best);
                cand &= !bit(v);
            }
        }
    }
}

/// Every independent set of exactly `k` vertices, in increasing bitmask
/// order of their lowest elements (deterministic).
pub fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, cand: u64, cur: u64, left: usize, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(VertexSet(cur));
            return;
        }
        if (cand.count_ones() as usize) < left {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !bit(v);
            rec(g, rest & !g.neighbors(v), cur | bit(v), left - 1, out);
        }
    }
    let mut out = Vec::new();
    rec(g, g.vertex_mask(), 0, k, &mut out);
    out
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None::<bool>; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("pushed vertices are colored");
            for v in Bits::new(g.neighbors(u)) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        stack.push(v);
                    }
                    Some(sv) if sv == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.component_masks().len() == g.n()
}

/// True iff no vertex subset induces a cycle of even length.
///
/// Exhaustive over vertex subsets; meant for pattern-sized graphs.
pub fn is_even_cycle_free(h: &Graph) -> bool {
    let n = h.n();
    if n < 4 {
        return true;
    }
    let full = h.vertex_mask();
    let mut s: u64 = 0;
    // Walk all subsets of the vertex mask.
    loop {
        s = s.wrapping_sub(full) & full;
        if s == 0 {
            break;
        }
        let size = s.count_ones();
        if size < 4 || size % 2 == 1 {
            continue;
        }
        if Bits::new(s).all(|v| (h.neighbors(v) & s).count_ones() == 2)
            && h.component_of_within(s.trailing_zeros() as usize, s) == s
        {
            return false;
        }
    }
    true
}

impl Graph {
    fn component_of_within(&self, v: usize, within: u64) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in Bits::new(frontier) {
                next |= self.neighbors(u) & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }
}
