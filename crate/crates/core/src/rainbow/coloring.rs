use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::RainbowError;
use crate::graph::Graph;

/// Class assignment for the edges of a host graph, indexed by the host's
/// lexicographic edge order. Class ids are 0-based and otherwise arbitrary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    classes: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(classes: Vec<usize>) -> Self {
        EdgeColoring { classes }
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.classes[edge]
    }

    pub fn num_classes(&self) -> usize {
        let mut seen: Vec<usize> = self.classes.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels classes in order of first appearance (restricted growth).
    pub fn canonical(&self) -> EdgeColoring {
        let mut map = HashMap::new();
        let classes = self
            .classes
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        EdgeColoring { classes }
    }

    pub fn is_restricted_growth(&self) -> bool {
        let mut max_seen: Option<usize> = None;
        for &c in &self.classes {
            match max_seen {
                None if c != 0 => return false,
                Some(m) if c > m + 1 => return false,
                _ => {}
            }
            max_seen = Some(max_seen.map_or(c, |m| m.max(c)));
        }
        true
    }

    /// Text form: one `u v c` line per edge in the host's edge order.
    pub fn to_text(&self, g: &Graph) -> Result<String, RainbowError> {
        check_len(g, self)?;
        let mut out = String::new();
        for ((u, v), c) in g.edges().into_iter().zip(&self.classes) {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        Ok(out)
    }

    /// Parses `u v c` lines; every edge of `g` must appear exactly once.
    pub fn from_text(g: &Graph, text: &str) -> Result<EdgeColoring, RainbowError> {
        let mut classes = vec![None; g.edge_count()];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| RainbowError::Format(format!("line {}: {e}", lineno + 1)))?;
            let [u, v, c] = fields[..] else {
                return Err(RainbowError::Format(format!(
                    "line {}: expected `u v c`",
                    lineno + 1
                )));
            };
            let idx = g.edge_index(u, v).ok_or_else(|| {
                RainbowError::Format(format!("line {}: {u} {v} is not an edge", lineno + 1))
            })?;
            if classes[idx].replace(c).is_some() {
                return Err(RainbowError::Format(format!(
                    "line {}: edge {u} {v} colored twice",
                    lineno + 1
                )));
            }
        }
        let classes = classes
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or(i))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|i| RainbowError::Format(format!("edge #{i} has no class")))?;
        Ok(EdgeColoring { classes })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "classes": self.classes })
    }
}

fn check_len(g: &Graph, c: &EdgeColoring) -> Result<(), RainbowError> {
    if g.edge_count() != c.len() {
        return Err(RainbowError::ColoringMismatch {
            edges: g.edge_count(),
            classes: c.len(),
        });
    }
    Ok(())
}

/// True iff no two incident edges share a class.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<bool, RainbowError> {
    check_len(g, c)?;
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    for ((u, v), &class) in g.edges().into_iter().zip(c.classes()) {
        if seen.insert((u, class), ()).is_some() || seen.insert((v, class), ()).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
