//! Exact computations for rainbow saturation of edge-colored graphs.
//!
//! - [`graph`]: bitset graphs, generators, canonical forms, graph6.
//! - [`rainbow`]: proper colorings, pattern copies, rainbow-free colorability.
//! - [`saturation`]: saturation verdicts, graph enumeration, exact
//!   saturation numbers, greedy saturation.
//! - [`constructions`]: the explicit saturated families and gadgets.
//! - [`reference`]: brute-force oracle used to cross-check the engine.
//! - [`verify`]: the claim suite behind `rainsat verify-paper`.

pub mod graph;
pub mod rainbow;
pub mod saturation;
pub mod constructions;
pub mod reference;
pub mod verify;
