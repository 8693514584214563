//! Proper edge colorings, copies of patterns, and the rainbow-free
//! colorability decision procedure.

mod coloring;
mod components;
mod embed;
mod pattern;
mod search;

use thiserror::Error;

pub use coloring::{is_proper, EdgeColoring};
pub use components::{component_decomposition, Component};
pub use embed::{
    contains_copy, contains_copy_through, enumerate_embeddings, find_rainbow_embedding,
    EmbeddingList,
};
pub use pattern::Pattern;
pub use search::{
    rainbow_free_colorable, Colorability, ColorabilityResult, SearchLimits, SearchStats,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RainbowError {
    #[error("coloring has {classes} entries but the graph has {edges} edges")]
    ColoringMismatch { edges: usize, classes: usize },
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("pattern family is empty")]
    EmptyFamily,
    #[error("unknown pattern {0}")]
    UnknownPattern(String),
    #[error("coloring format: {0}")]
    Format(String),
}
