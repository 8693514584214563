use rayon::prelude::*;
use serde::Serialize;

use super::verdict::{family_graph6, is_classically_saturated, is_rainbow_saturated};
use super::{GraphLevels, SaturationError, SaturationStatus};
use crate::graph::{graph6_encode, Graph};
use crate::rainbow::{Pattern, RainbowError, SearchLimits};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SatStats {
    pub levels_searched: usize,
    pub graphs_examined: usize,
    pub search_nodes: u64,
}

/// Minimum edge count of a saturated graph on `n` vertices, with every
/// saturated graph attaining it. `value` is `None` when no graph on `n`
/// vertices is saturated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatNumberResult {
    pub n: usize,
    pub family: Vec<String>,
    pub value: Option<usize>,
    pub witnesses: Vec<Graph>,
    pub stats: SatStats,
}

impl SatNumberResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "family": self.family,
            "value": self.value,
            "witnesses": self.witnesses.iter().map(graph6_encode).collect::<Vec<_>>(),
            "stats": self.stats,
        })
    }
}

/// Exact `sat*(n, F)` by exhaustive search in increasing edge count.
pub fn sat_star_exact(
    n: usize,
    family: &[Pattern],
    limits: &SearchLimits,
) -> Result<SatNumberResult, SaturationError> {
    if family.is_empty() {
        return Err(RainbowError::EmptyFamily.into());
    }
    search_levels(n, family_graph6(family), |g| {
        let v = is_rainbow_saturated(g, family, limits)?;
        match v.status {
            SaturationStatus::Indeterminate => Err(SaturationError::Indeterminate {
                graph6: graph6_encode(g),
            }),
            status => Ok((status == SaturationStatus::Saturated, v.total_nodes())),
        }
    })
}

/// Exact classical `sat(n, H)`.
pub fn sat_exact(n: usize, h: &Pattern) -> Result<SatNumberResult, SaturationError> {
    search_levels(n, family_graph6(std::slice::from_ref(h)), |g| {
        Ok((is_classically_saturated(g, h).saturated, 0))
    })
}

fn search_levels<F>(
    n: usize,
    family: Vec<String>,
    check: F,
) -> Result<SatNumberResult, SaturationError>
where
    F: Fn(&Graph) -> Result<(bool, u64), SaturationError> + Sync,
{
    let mut stats = SatStats::default();
    for (m, level) in GraphLevels::new(n, usize::MAX)? {
        let results: Vec<(bool, u64)> = level
            .par_iter()
            .map(&check)
            .collect::<Result<_, _>>()?;
        stats.levels_searched += 1;
        stats.graphs_examined += level.len();
        stats.search_nodes += results.iter().map(|r| r.1).sum::<u64>();
        let witnesses: Vec<Graph> = level
            .into_iter()
            .zip(&results)
            .filter(|(_, r)| r.0)
            .map(|(g, _)| g)
            .collect();
        if !witnesses.is_empty() {
            return Ok(SatNumberResult {
                n,
                family,
                value: Some(m),
                witnesses,
                stats,
            });
        }
    }
    Ok(SatNumberResult {
        n,
        family,
        value: None,
        witnesses: Vec::new(),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, complete_graph};

    fn p(name: &str) -> Pattern {
        Pattern::parse(name).unwrap()
    }

    #[test]
    fn k3_small() {
        let lim = SearchLimits::unlimited();
        // sat*(n, K3) = n - 1 for small n.
        for n in 3..=6 {
            let r = sat_star_exact(n, &[p("K3")], &lim).unwrap();
            assert_eq!(r.value, Some(n - 1), "n = {n}");
        }
    }

    #[test]
    fn classical_p4() {
        let r = sat_exact(4, &p("P4")).unwrap();
        assert_eq!(r.value, Some(2));
        let r = sat_exact(3, &p("P4")).unwrap();
        assert_eq!(r.value, Some(3));
        assert!(are_isomorphic(&r.witnesses[0], &complete_graph(3).unwrap()));
    }

    #[test]
    fn json_shape() {
        let r = sat_exact(4, &p("K3")).unwrap();
        let j = r.to_json();
        assert_eq!(j["value"], 3);
        assert_eq!(j["family"][0], "Bw");
        assert!(!j["witnesses"].as_array().unwrap().is_empty());
    }
}
