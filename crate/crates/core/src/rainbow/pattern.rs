use std::fmt;
use std::sync::Arc;

use super::embed::count_maps;
use super::RainbowError;
use crate::graph::{
    self, complete_bipartite, complete_graph, cycle, graph6_decode, graph6_encode, path, wheel,
    Graph,
};

/// A forbidden subgraph together with its isolated-vertex-free core.
///
/// A copy of the pattern in a host is a copy of the core plus enough spare
/// host vertices for the isolated ones, so embeddings are enumerated for the
/// core and the host order is checked separately.
#[derive(Clone)]
pub struct Pattern {
    inner: Arc<PatternData>,
}

struct PatternData {
    name: String,
    graph: Graph,
    core: Graph,
    isolated: usize,
    automorphisms: u64,
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.inner.name)
    }
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.inner.graph == other.inner.graph
    }
}

impl Eq for Pattern {}

impl Pattern {
    pub fn new(graph: Graph) -> Self {
        let name = graph6_encode(&graph);
        Self::with_name(graph, name)
    }

    pub fn with_name(graph: Graph, name: impl Into<String>) -> Self {
        let iso = graph.isolated_vertices();
        let core = graph.remove_vertices(iso);
        let isolated = iso.len();
        let core_autos = count_maps(&core, &core);
        let automorphisms = (1..=isolated as u64).product::<u64>() * core_autos;
        Pattern {
            inner: Arc::new(PatternData {
                name: name.into(),
                graph,
                core,
                isolated,
                automorphisms,
            }),
        }
    }

    /// Resolves a pattern by name (`K4`, `P4`, `C4`, `K1_4`, `W8`, `E3`) or
    /// falls back to parsing the text as graph6.
    pub fn parse(text: &str) -> Result<Self, RainbowError> {
        let text = text.trim();
        if let Some(g) = named_graph(text)? {
            return Ok(Self::with_name(g, text));
        }
        let g = graph6_decode(text)
            .map_err(|e| RainbowError::UnknownPattern(format!("{text}: {e}")))?;
        Ok(Self::new(g))
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn graph(&self) -> &Graph {
        &self.inner.graph
    }

    /// The pattern with isolated vertices removed.
    pub fn core(&self) -> &Graph {
        &self.inner.core
    }

    pub fn order(&self) -> usize {
        self.inner.graph.n()
    }

    pub fn size(&self) -> usize {
        self.inner.core.edge_count()
    }

    pub fn isolated_count(&self) -> usize {
        self.inner.isolated
    }

    pub fn automorphism_count(&self) -> u64 {
        self.inner.automorphisms
    }

    /// Connected including isolated vertices; only then does every copy lie
    /// inside one host component.
    pub fn is_connected(&self) -> bool {
        self.inner.graph.is_connected()
    }
}

fn named_graph(text: &str) -> Result<Option<Graph>, RainbowError> {
    let Some(kind) = text.chars().next() else {
        return Ok(None);
    };
    let rest = &text[kind.len_utf8()..];
    if rest.is_empty() || !rest.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        return Ok(None);
    }
    let nums: Vec<usize> = match rest
        .split('_')
        .map(|s| s.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(v) => v,
        Err(_) => return Ok(None),
    };
    let built = match (kind, nums.as_slice()) {
        ('K', [r]) => complete_graph(*r),
        ('K', [a, b]) => complete_bipartite(*a, *b),
        ('P', [k]) => path(*k),
        ('C', [k]) => cycle(*k),
        ('W', [n]) => wheel(*n),
        ('E', [n]) => graph::empty_graph(*n),
        ('S', [leaves]) => graph::star(*leaves),
        _ => return Err(RainbowError::UnknownPattern(text.to_string())),
    };
    built
        .map(Some)
        .map_err(|e| RainbowError::UnknownPattern(format!("{text}: {e}")))
}

impl From<Graph> for Pattern {
    fn from(g: Graph) -> Self {
        Pattern::new(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(Pattern::parse("K4").unwrap().size(), 6);
        assert_eq!(Pattern::parse("P4").unwrap().size(), 3);
        assert_eq!(Pattern::parse("C4").unwrap().size(), 4);
        let star = Pattern::parse("K1_4").unwrap();
        assert_eq!((star.order(), star.size()), (5, 4));
        assert_eq!(Pattern::parse("W8").unwrap().size(), 14);
        assert_eq!(Pattern::parse("A_").unwrap().size(), 1);
        assert!(Pattern::parse("Q7").is_err());
        assert!(Pattern::parse("C2").is_err());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(Pattern::parse("K4").unwrap().automorphism_count(), 24);
        assert_eq!(Pattern::parse("C4").unwrap().automorphism_count(), 8);
        assert_eq!(Pattern::parse("P4").unwrap().automorphism_count(), 2);
        assert_eq!(Pattern::parse("K1_4").unwrap().automorphism_count(), 24);
        assert_eq!(Pattern::parse("E3").unwrap().automorphism_count(), 6);
    }

    #[test]
    fn isolated_vertices_are_stripped() {
        let g = Graph::from_edges(5, &[(1, 3), (3, 4)]).unwrap();
        let p = Pattern::new(g);
        assert_eq!(p.core().n(), 3);
        assert_eq!(p.isolated_count(), 2);
        assert_eq!(p.order(), 5);
        assert!(!p.is_connected());
        assert_eq!(p.automorphism_count(), 4);
    }
}
