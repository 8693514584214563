use std::fmt;
use std::str::FromStr;

use super::ConstructionError;
use crate::graph::Graph;

/// Small graphs from the case analyses, each including its added edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    /// Hub `w` over rim path `a-b-c-d-e`, added chord `bd`.
    GA,
    /// Hub `w` over rim paths `a-b-c` and `d-e-f`, added chord `be`.
    GB,
    /// `K_{1,4}` plus an edge between two leaves.
    StarChord,
    /// `K_{1,4}` plus a pendant edge at one leaf.
    StarPendant,
    /// `P3` closed into a triangle.
    Triangle,
    /// `K_{1,3}` plus an edge between two leaves.
    ClawChord,
    /// `P4` closed into a 4-cycle.
    Square,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 7] = [
        GadgetKind::GA,
        GadgetKind::GB,
        GadgetKind::StarChord,
        GadgetKind::StarPendant,
        GadgetKind::Triangle,
        GadgetKind::ClawChord,
        GadgetKind::Square,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::GA => "GA",
            GadgetKind::GB => "GB",
            GadgetKind::StarChord => "star_chord",
            GadgetKind::StarPendant => "star_pendant",
            GadgetKind::Triangle => "triangle",
            GadgetKind::ClawChord => "claw_chord",
            GadgetKind::Square => "square",
        }
    }

    /// The pattern the gadget is analysed against.
    pub fn pattern_name(self) -> &'static str {
        match self {
            GadgetKind::GA | GadgetKind::GB => "C4",
            _ => "P4",
        }
    }

    /// Whether the gadget admits no rainbow-free coloring.
    pub fn forces_rainbow(self) -> bool {
        matches!(
            self,
            GadgetKind::GA | GadgetKind::GB | GadgetKind::StarChord | GadgetKind::StarPendant
        )
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConstructionError::UnknownGadget(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub kind: GadgetKind,
    /// Includes the marked edge.
    pub graph: Graph,
    pub marked_edge: (usize, usize),
    /// Vertex names in label order.
    pub labels: Vec<&'static str>,
}

impl Gadget {
    /// The gadget before the marked edge is added.
    pub fn base(&self) -> Graph {
        let mut g = self.graph.clone();
        g.remove_edge(self.marked_edge.0, self.marked_edge.1);
        g
    }
}

pub fn gadget(kind: GadgetKind) -> Gadget {
    let (labels, edges, marked): (Vec<&'static str>, Vec<(usize, usize)>, (usize, usize)) =
        match kind {
            // w=0, a..e=1..5
            GadgetKind::GA => (
                vec!["w", "a", "b", "c", "d", "e"],
                vec![
                    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                    (1, 2), (2, 3), (3, 4), (4, 5),
                ],
                (2, 4),
            ),
            // w=0, a..f=1..6
            GadgetKind::GB => (
                vec!["w", "a", "b", "c", "d", "e", "f"],
                vec![
                    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
                    (1, 2), (2, 3), (4, 5), (5, 6),
                ],
                (2, 5),
            ),
            GadgetKind::StarChord => (
                vec!["c", "l1", "l2", "l3", "l4"],
                vec![(0, 1), (0, 2), (0, 3), (0, 4)],
                (1, 2),
            ),
            GadgetKind::StarPendant => (
                vec!["c", "l1", "l2", "l3", "l4", "x"],
                vec![(0, 1), (0, 2), (0, 3), (0, 4)],
                (1, 5),
            ),
            GadgetKind::Triangle => (vec!["c", "l1", "l2"], vec![(0, 1), (0, 2)], (1, 2)),
            GadgetKind::ClawChord => (
                vec!["c", "l1", "l2", "l3"],
                vec![(0, 1), (0, 2), (0, 3)],
                (1, 2),
            ),
            GadgetKind::Square => (
                vec!["p", "q", "r", "s"],
                vec![(0, 1), (0, 2), (1, 3)],
                (2, 3),
            ),
        };
    let mut graph = Graph::from_edges(labels.len(), &edges).expect("gadget edges are valid");
    graph.add_edge(marked.0, marked.1);
    Gadget {
        kind,
        graph,
        marked_edge: marked,
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, cycle, complete_graph};
    use crate::rainbow::{rainbow_free_colorable, Pattern, SearchLimits};

    #[test]
    fn sizes() {
        let sizes: Vec<(usize, usize)> = GadgetKind::ALL
            .iter()
            .map(|&k| {
                let g = gadget(k);
                (g.graph.n(), g.graph.edge_count())
            })
            .collect();
        assert_eq!(sizes, vec![(6, 10), (7, 11), (5, 5), (6, 5), (3, 3), (4, 4), (4, 4)]);
        assert!(are_isomorphic(&gadget(GadgetKind::Triangle).graph, &complete_graph(3).unwrap()));
        assert!(are_isomorphic(&gadget(GadgetKind::Square).graph, &cycle(4).unwrap()));
    }

    #[test]
    fn verdicts_match_analysis() {
        for kind in GadgetKind::ALL {
            let g = gadget(kind);
            let fam = [Pattern::parse(kind.pattern_name()).unwrap()];
            let r = rainbow_free_colorable(&g.graph, &fam, &SearchLimits::unlimited()).unwrap();
            assert_eq!(r.is_uncolorable(), kind.forces_rainbow(), "{kind}");
            let base = rainbow_free_colorable(&g.base(), &fam, &SearchLimits::unlimited()).unwrap();
            assert!(base.is_colorable(), "{kind} before its marked edge");
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in GadgetKind::ALL {
            assert_eq!(kind.name().parse::<GadgetKind>().unwrap(), kind);
        }
        assert!("GC".parse::<GadgetKind>().is_err());
    }
}
