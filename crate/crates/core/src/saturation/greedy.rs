use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::SaturationError;
use crate::graph::{graph6_encode, Graph};
use crate::rainbow::{rainbow_free_colorable, Colorability, Pattern, SearchLimits};

/// Order in which candidate non-edges are tried on each pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    Lexicographic,
    /// Lexicographic order shuffled once per pass by a seeded ChaCha8 stream.
    Seeded(u64),
}

fn colorable(g: &Graph, family: &[Pattern], limits: &SearchLimits) -> Result<bool, SaturationError> {
    match rainbow_free_colorable(g, family, limits)?.outcome {
        Colorability::Colorable(_) => Ok(true),
        Colorability::Uncolorable => Ok(false),
        Colorability::Indeterminate => Err(SaturationError::Indeterminate {
            graph6: graph6_encode(g),
        }),
    }
}

/// Adds non-edges while the graph stays rainbow-free colorable, until a
/// full pass adds nothing. The result satisfies both saturation conditions.
pub fn greedy_saturate(
    g0: &Graph,
    family: &[Pattern],
    order: EdgeOrder,
    limits: &SearchLimits,
) -> Result<Graph, SaturationError> {
    if !colorable(g0, family, limits)? {
        return Err(SaturationError::NotColorable {
            graph6: graph6_encode(g0),
        });
    }
    let mut rng = match order {
        EdgeOrder::Lexicographic => None,
        EdgeOrder::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut g = g0.clone();
    loop {
        let mut candidates = g.non_edges();
        if let Some(rng) = rng.as_mut() {
            candidates.shuffle(rng);
        }
        let mut added = false;
        for (u, v) in candidates {
            let h = g.with_edge(u, v);
            if colorable(&h, family, limits)? {
                g = h;
                added = true;
            }
        }
        if !added {
            return Ok(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, empty_graph, star};
    use crate::saturation::is_rainbow_saturated;

    #[test]
    fn k3_from_empty_is_star() {
        let fam = [Pattern::parse("K3").unwrap()];
        let g = greedy_saturate(
            &empty_graph(4).unwrap(),
            &fam,
            EdgeOrder::Lexicographic,
            &SearchLimits::unlimited(),
        )
        .unwrap();
        assert!(are_isomorphic(&g, &star(3).unwrap()));
    }

    #[test]
    fn seeded_result_is_saturated_and_reproducible() {
        let fam = [Pattern::parse("C4").unwrap()];
        let lim = SearchLimits::unlimited();
        let e = empty_graph(7).unwrap();
        let a = greedy_saturate(&e, &fam, EdgeOrder::Seeded(7), &lim).unwrap();
        let b = greedy_saturate(&e, &fam, EdgeOrder::Seeded(7), &lim).unwrap();
        assert_eq!(a, b);
        assert!(is_rainbow_saturated(&a, &fam, &lim).unwrap().is_saturated());
    }

    #[test]
    fn rejects_uncolorable_start() {
        let fam = [Pattern::parse("K3").unwrap()];
        let k4 = crate::graph::complete_graph(4).unwrap();
        let err = greedy_saturate(&k4, &fam, EdgeOrder::Lexicographic, &SearchLimits::unlimited());
        assert!(matches!(err, Err(SaturationError::NotColorable { .. })));
    }
}
