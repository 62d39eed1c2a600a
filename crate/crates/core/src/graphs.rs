//! Strongly connected move digraphs on three pegs, up to peg relabelling.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::model::{MoveGraph, Peg};

/// The five isomorphism classes and their canonical labelled member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    /// Directed 3-cycle; closed form in Q(√3).
    Cycle,
    /// Two bidirectional edges through a centre peg; closed form `3^n - 1`.
    Linear,
    /// 3-cycle plus one reversed edge; closed form in Q(√17).
    Chord,
    /// Complete graph minus one edge; growth from a cubic.
    FiveEdge,
    /// Classical puzzle; `2^n - 1`.
    Complete,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Cycle,
        GraphClass::Linear,
        GraphClass::Chord,
        GraphClass::FiveEdge,
        GraphClass::Complete,
    ];

    pub fn canonical(self) -> MoveGraph {
        match self {
            GraphClass::Cycle => MoveGraph::cycle(),
            GraphClass::Linear => MoveGraph::linear(),
            GraphClass::Chord => MoveGraph::chord(),
            GraphClass::FiveEdge => MoveGraph::five_edge(),
            GraphClass::Complete => MoveGraph::complete(),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Cycle => "cycle",
            GraphClass::Linear => "linear",
            GraphClass::Chord => "chord",
            GraphClass::FiveEdge => "five-edge",
            GraphClass::Complete => "complete",
        })
    }
}

/// All six peg permutations, identity first.
pub fn permutations() -> [[Peg; 3]; 6] {
    let (a, b, c) = (Peg::ONE, Peg::TWO, Peg::THREE);
    [
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ]
}

/// Class of `graph` plus a permutation `perm` with
/// `class.canonical().relabel(perm) == graph`. `None` unless strongly connected.
pub fn classify(graph: MoveGraph) -> Option<(GraphClass, [Peg; 3])> {
    if !graph.is_strongly_connected() {
        return None;
    }
    GraphClass::ALL.into_iter().find_map(|class| {
        permutations()
            .into_iter()
            .find(|&perm| class.canonical().relabel(perm) == graph)
            .map(|perm| (class, perm))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub class: GraphClass,
    pub representative: MoveGraph,
    pub members: Vec<MoveGraph>,
}

/// Every strongly connected digraph on {1,2,3} grouped by isomorphism class.
///
/// Classes come out in [`GraphClass::ALL`] order, members by edge mask.
pub fn enumerate_graphs() -> Vec<ClassSummary> {
    let mut groups: BTreeMap<GraphClass, Vec<MoveGraph>> = BTreeMap::new();
    for mask in 0u8..64 {
        let graph = MoveGraph::from_mask(mask);
        if let Some((class, _)) = classify(graph) {
            groups.entry(class).or_default().push(graph);
        }
    }
    groups
        .into_iter()
        .map(|(class, members)| ClassSummary {
            class,
            representative: class.canonical(),
            members,
        })
        .collect()
}

/// All labelled strongly connected digraphs, by edge mask.
pub fn strongly_connected_graphs() -> Vec<MoveGraph> {
    (0u8..64)
        .map(MoveGraph::from_mask)
        .filter(|g| g.is_strongly_connected())
        .collect()
}
