//! Saturation verdicts, exhaustive saturation numbers, and greedy
//! construction of saturated graphs.
//!
//! A graph `G` is rainbow `F`-saturated when (a) some proper edge coloring of
//! `G` has no rainbow copy of any member of `F`, and (b) for every non-edge
//! `e`, every proper coloring of `G + e` has one. Classical saturation is the
//! uncolored analogue: `G` is `H`-free and every added edge creates a copy.

mod enumerate;
mod exact;
mod formulas;
mod greedy;
mod verdict;

use thiserror::Error;

use crate::graph::GraphError;
use crate::rainbow::RainbowError;

pub use enumerate::{enumerate_nonisomorphic_graphs, GraphLevels, MAX_ENUMERATION_ORDER};
pub use exact::{sat_exact, sat_star_exact, SatNumberResult, SatStats};
pub use formulas::{sat_formula_oracle, structural_property_checks, SatFormula, StructureReport};
pub use greedy::{greedy_saturate, EdgeOrder};
pub use verdict::{
    is_classically_saturated, is_rainbow_saturated, ClassicalVerdict, Refutation,
    SaturationStatus, SaturationVerdict,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SaturationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
    #[error("search limit reached on graph {graph6}")]
    Indeterminate { graph6: String },
    #[error("start graph {graph6} has no rainbow-free coloring")]
    NotColorable { graph6: String },
    #[error("{what} = {got} outside {expected}")]
    OutOfRange {
        what: &'static str,
        expected: String,
        got: usize,
    },
    #[error("unknown formula {0}")]
    UnknownFormula(String),
}
