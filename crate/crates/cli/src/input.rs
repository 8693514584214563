use std::fs;

use rainsat_core::graph::{AdjacencyJson, Graph};
use rainsat_core::rainbow::Pattern;

/// Reads `@path` as file contents; anything else is taken literally.
fn resolve(arg: &str) -> Result<String, String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| format!("{path}: {e}")),
        None => Ok(arg.trim().to_string()),
    }
}

/// A host graph: a name such as `W8`, graph6, or adjacency JSON.
pub fn parse_graph(arg: &str) -> Result<Graph, String> {
    parse_pattern(arg).map(|p| p.graph().clone())
}

pub fn parse_pattern(arg: &str) -> Result<Pattern, String> {
    let text = resolve(arg)?;
    if text.starts_with('{') {
        let j: AdjacencyJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let g = Graph::from_json(&j).map_err(|e| e.to_string())?;
        return Ok(Pattern::new(g));
    }
    Pattern::parse(&text).map_err(|e| e.to_string())
}

pub fn parse_family(args: &[String]) -> Result<Vec<Pattern>, String> {
    if args.is_empty() {
        return Err("at least one pattern is required".into());
    }
    args.iter().map(|a| parse_pattern(a)).collect()
}
