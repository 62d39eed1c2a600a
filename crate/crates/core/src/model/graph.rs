use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ModelError, Move, Peg};

/// The six ordered peg pairs in the enumeration e1..e6 used by count tables:
/// (1,2), (2,1), (1,3), (3,1), (2,3), (3,2).
pub const PAIRS: [(Peg, Peg); 6] = [
    (Peg::ONE, Peg::TWO),
    (Peg::TWO, Peg::ONE),
    (Peg::ONE, Peg::THREE),
    (Peg::THREE, Peg::ONE),
    (Peg::TWO, Peg::THREE),
    (Peg::THREE, Peg::TWO),
];

/// Position of an ordered pair in [`PAIRS`].
pub fn pair_index(from: Peg, to: Peg) -> usize {
    match (from.number(), to.number()) {
        (1, 2) => 0,
        (2, 1) => 1,
        (1, 3) => 2,
        (3, 1) => 3,
        (2, 3) => 4,
        (3, 2) => 5,
        _ => panic!("no pair index for {from}>{to}"),
    }
}

/// Directed graph of permitted move directions over the three pegs.
///
/// Stored as a 6-bit mask over [`PAIRS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MoveGraph {
    mask: u8,
}

impl MoveGraph {
    pub const fn from_mask(mask: u8) -> MoveGraph {
        MoveGraph {
            mask: mask & 0b11_1111,
        }
    }

    pub fn mask(self) -> u8 {
        self.mask
    }

    pub fn empty() -> MoveGraph {
        MoveGraph { mask: 0 }
    }

    /// Every move direction allowed; the classical puzzle.
    pub fn complete() -> MoveGraph {
        MoveGraph { mask: 0b11_1111 }
    }

    /// Directed 3-cycle 1>2, 2>3, 3>1.
    pub fn cycle() -> MoveGraph {
        MoveGraph::of(&[(1, 2), (2, 3), (3, 1)])
    }

    /// Peg 1 in the middle, connected both ways to pegs 2 and 3.
    pub fn linear() -> MoveGraph {
        MoveGraph::of(&[(1, 2), (2, 1), (1, 3), (3, 1)])
    }

    /// The cycle 1>2, 2>3, 3>1 plus the reverse edge 1>3.
    pub fn chord() -> MoveGraph {
        MoveGraph::of(&[(1, 2), (1, 3), (3, 1), (2, 3)])
    }

    /// Complete graph without 2>1.
    pub fn five_edge() -> MoveGraph {
        MoveGraph::of(&[(1, 2), (1, 3), (3, 1), (2, 3), (3, 2)])
    }

    /// Builds a graph from peg-number literals. Panics on invalid pairs.
    pub fn of(edges: &[(u8, u8)]) -> MoveGraph {
        let mut graph = MoveGraph::empty();
        for &(from, to) in edges {
            graph = graph.with_edge(Move::of(from, to));
        }
        graph
    }

    pub fn with_edge(self, mv: Move) -> MoveGraph {
        MoveGraph {
            mask: self.mask | 1 << pair_index(mv.from, mv.to),
        }
    }

    pub fn without_edge(self, mv: Move) -> MoveGraph {
        MoveGraph {
            mask: self.mask & !(1 << pair_index(mv.from, mv.to)),
        }
    }

    pub fn contains(self, from: Peg, to: Peg) -> bool {
        from != to && self.mask & (1 << pair_index(from, to)) != 0
    }

    pub fn edge_count(self) -> u32 {
        self.mask.count_ones()
    }

    /// Edges in lexicographic (from, to) order.
    pub fn edges(self) -> Vec<Move> {
        let mut edges: Vec<Move> = PAIRS
            .iter()
            .filter(|(from, to)| self.contains(*from, *to))
            .map(|&(from, to)| Move { from, to })
            .collect();
        edges.sort();
        edges
    }

    pub fn is_strongly_connected(self) -> bool {
        Peg::ALL
            .iter()
            .all(|&root| self.reachable_from(root) == 0b111)
    }

    fn reachable_from(self, root: Peg) -> u8 {
        let mut seen = 1u8 << root.index();
        let mut stack = vec![root];
        while let Some(peg) = stack.pop() {
            for next in Peg::ALL {
                if self.contains(peg, next) && seen & (1 << next.index()) == 0 {
                    seen |= 1 << next.index();
                    stack.push(next);
                }
            }
        }
        seen
    }

    /// Relabels pegs: edge (a, b) becomes (perm[a], perm[b]).
    pub fn relabel(self, perm: [Peg; 3]) -> MoveGraph {
        let mut out = MoveGraph::empty();
        for mv in self.edges() {
            out = out.with_edge(Move {
                from: perm[mv.from.index()],
                to: perm[mv.to.index()],
            });
        }
        out
    }

    /// True when swapping `a` and `b` (fixing the third peg) maps the graph to itself.
    pub fn is_swap_invariant(self, a: Peg, b: Peg) -> bool {
        let mut perm = Peg::ALL;
        perm.swap(a.index(), b.index());
        self.relabel(perm) == self
    }
}

impl fmt::Display for MoveGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(Move::to_string).collect();
        f.write_str(&edges.join(","))
    }
}

impl FromStr for MoveGraph {
    type Err = ModelError;

    /// Parses `1>2,2>3,3>1`; whitespace is ignored. Rejects self-loops,
    /// duplicate edges and pegs outside 1..=3.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut graph = MoveGraph::empty();
        if compact.is_empty() {
            return Ok(graph);
        }
        for item in compact.split(',') {
            let (from, to) = item.split_once('>').ok_or_else(|| {
                ModelError::Parse(format!("edge {item:?} is not of the form i>j"))
            })?;
            let from: Peg = from.parse()?;
            let to: Peg = to.parse()?;
            if from == to {
                return Err(ModelError::SelfMove(from));
            }
            if graph.contains(from, to) {
                return Err(ModelError::DuplicateEdge(Move { from, to }));
            }
            graph = graph.with_edge(Move { from, to });
        }
        Ok(graph)
    }
}

impl TryFrom<String> for MoveGraph {
    type Error = ModelError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

impl From<MoveGraph> for String {
    fn from(graph: MoveGraph) -> String {
        graph.to_string()
    }
}
