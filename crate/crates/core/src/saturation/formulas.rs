use serde::Serialize;

use super::SaturationError;
use crate::graph::Graph;

/// Closed forms for classical saturation numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatFormula {
    /// `sat(n, K_r) = (r-2)(n-r+2) + C(r-2, 2)`, for `2 <= r <= n`.
    Ehm { r: usize },
    /// `sat(n, P4)`: `n/2` for even `n`, `(n+3)/2` for odd `n`; `n >= 4`.
    KtP4,
    /// `sat(n, C4) = floor((3n-5)/2)`; `n >= 4`.
    C4,
}

impl SatFormula {
    pub fn parse(name: &str, r: Option<usize>) -> Result<Self, SaturationError> {
        match (name.to_ascii_uppercase().as_str(), r) {
            ("EHM", Some(r)) => Ok(SatFormula::Ehm { r }),
            ("KT_P4", _) => Ok(SatFormula::KtP4),
            ("C4", _) => Ok(SatFormula::C4),
            _ => Err(SaturationError::UnknownFormula(name.to_string())),
        }
    }
}

fn out_of_range(what: &'static str, expected: &str, got: usize) -> SaturationError {
    SaturationError::OutOfRange {
        what,
        expected: expected.to_string(),
        got,
    }
}

pub fn sat_formula_oracle(formula: SatFormula, n: usize) -> Result<usize, SaturationError> {
    match formula {
        SatFormula::Ehm { r } => {
            if r < 2 {
                return Err(out_of_range("r", "2 <= r <= n", r));
            }
            if n < r {
                return Err(out_of_range("n", "n >= r", n));
            }
            let k = r - 2;
            Ok(k * (n - k) + k * k.saturating_sub(1) / 2)
        }
        SatFormula::KtP4 => {
            if n < 4 {
                return Err(out_of_range("n", "n >= 4", n));
            }
            Ok(if n.is_multiple_of(2) { n / 2 } else { (n + 3) / 2 })
        }
        SatFormula::C4 => {
            if n < 4 {
                return Err(out_of_range("n", "n >= 4", n));
            }
            Ok((3 * n - 5) / 2)
        }
    }
}

/// Audit data for the degree arguments about saturated graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub r: usize,
    /// Nonadjacent pairs `u < v` with `deg u = deg v = r - 2`.
    pub low_degree_nonadjacent_pairs: Vec<(usize, usize)>,
    pub degree_one_vertices: usize,
    pub min_degree: usize,
}

pub fn structural_property_checks(g: &Graph, r: usize) -> StructureReport {
    let degrees = g.degrees();
    let low: Vec<usize> = (0..g.n())
        .filter(|&v| r >= 2 && degrees[v] == r - 2)
        .collect();
    let mut pairs = Vec::new();
    for (i, &u) in low.iter().enumerate() {
        for &v in &low[i + 1..] {
            if !g.has_edge(u, v) {
                pairs.push((u, v));
            }
        }
    }
    StructureReport {
        r,
        low_degree_nonadjacent_pairs: pairs,
        degree_one_vertices: degrees.iter().filter(|&&d| d == 1).count(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
    }
}
