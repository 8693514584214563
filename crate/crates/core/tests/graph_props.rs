use proptest::prelude::*;

use rainsat_core::graph::{
    are_isomorphic, canonical_form, graph6_decode, graph6_encode, independent_sets_of_size,
    is_bipartite, is_even_cycle_free, is_forest, max_independent_set, Graph, VertexSet,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && permutations(g.n()).iter().any(|p| g.permuted(p) == *h)
}

fn is_independent(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|v| s >> v & 1 == 0 || g.neighbors(v) & s == 0)
}

fn brute_alpha(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| is_independent(g, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn brute_bipartite(g: &Graph) -> bool {
    (0u64..1 << g.n()).any(|side| g.edges().iter().all(|&(u, v)| (side >> u & 1) != (side >> v & 1)))
}

/// Some vertex subset of even size >= 4 induces a cycle.
fn brute_has_induced_even_cycle(g: &Graph) -> bool {
    (0u64..1 << g.n()).any(|s| {
        let k = s.count_ones();
        if k < 4 || k % 2 == 1 {
            return false;
        }
        let h = g.induced_subgraph(VertexSet(s));
        h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_decides_isomorphism(g in graph_strategy(6), h in graph_strategy(6)) {
        let same_code = canonical_form(&g).code() == canonical_form(&h).code();
        prop_assert_eq!(same_code, brute_isomorphic(&g, &h));
        prop_assert_eq!(are_isomorphic(&g, &h), same_code);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        (g, p) in graph_strategy(24).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        let h = g.permuted(&p);
        let cf = canonical_form(&g);
        let ch = canonical_form(&h);
        prop_assert_eq!(cf.code(), ch.code());
        prop_assert_eq!(cf.representative(&g), ch.representative(&h));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(64)) {
        let text = graph6_encode(&g);
        prop_assert_eq!(graph6_decode(&text).unwrap(), g);
    }

    #[test]
    fn maximum_independent_set_is_maximum(g in graph_strategy(12)) {
        let s = max_independent_set(&g);
        prop_assert!(is_independent(&g, s.0));
        let alpha = brute_alpha(&g);
        prop_assert_eq!(s.len(), alpha);
        let all = independent_sets_of_size(&g, alpha);
        let expected = (0u64..1 << g.n())
            .filter(|&x| x.count_ones() as usize == alpha && is_independent(&g, x))
            .count();
        prop_assert_eq!(all.len(), expected);
        prop_assert!(all.iter().all(|x| is_independent(&g, x.0)));
    }

    #[test]
    fn structural_predicates(g in graph_strategy(8)) {
        prop_assert_eq!(is_bipartite(&g), brute_bipartite(&g));
        let acyclic = g.edge_count() + g.component_masks().len() == g.n();
        prop_assert_eq!(is_forest(&g), acyclic);
        prop_assert_eq!(is_even_cycle_free(&g), !brute_has_induced_even_cycle(&g));
    }
}
