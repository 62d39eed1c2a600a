//! Pegs, discs, states and the legality rules shared by every puzzle variant.
//!
//! A [`Model`] pairs a move digraph with a placement distance `C`: a disc `A`
//! may rest above disc `B` on the same peg iff `size(A) - size(B) <= C`. The
//! constraint is checked pairwise against every disc below, which reduces to
//! comparing against the smallest disc already on the target peg.

mod graph;
mod peg;
mod state;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use graph::{pair_index, MoveGraph, PAIRS};
pub use peg::{Move, MoveSequence, Peg};
pub use state::{Disc, State, MAX_DISCS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("peg {0} is not in 1..=3")]
    InvalidPeg(i64),
    #[error("move from peg {0} to itself")]
    SelfMove(Peg),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Move),
    #[error("malformed state: {0}")]
    Malformed(String),
    #[error("{0} discs exceeds the supported maximum")]
    TooManyDiscs(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Why a single move is not allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum MoveError {
    #[error("peg {from} is empty")]
    EmptySource { from: Peg },
    #[error("edge {from}>{to} is not in the move graph")]
    MissingEdge { from: Peg, to: Peg },
    #[error("disc {disc} may not rest on disc {below} (distance {}, allowed {allowed})", *disc as i32 - *below as i32)]
    DistanceViolation {
        disc: Disc,
        below: Disc,
        allowed: u32,
    },
}

/// First illegal move of a sequence; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("move {index} ({mv}) is illegal: {error}")]
pub struct SequenceError {
    pub index: usize,
    pub mv: Move,
    pub error: MoveError,
}

/// Move digraph plus placement distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Model {
    pub graph: MoveGraph,
    pub distance: u32,
}

impl Model {
    pub fn new(graph: MoveGraph, distance: u32) -> Model {
        Model { graph, distance }
    }

    /// Complete graph, no inversions allowed.
    pub fn classical() -> Model {
        Model::new(MoveGraph::complete(), 0)
    }

    pub fn digraph(graph: MoveGraph) -> Model {
        Model::new(graph, 0)
    }

    /// Complete graph with placement distance `distance`.
    pub fn relaxed(distance: u32) -> Model {
        Model::new(MoveGraph::complete(), distance)
    }

    pub fn is_legal_state(&self, state: &State) -> bool {
        state
            .stacks()
            .iter()
            .all(|stack| stack_is_legal(stack, self.distance))
    }

    /// Checks `mv` against the three rules: non-empty source, permitted edge,
    /// and the distance constraint on the target peg.
    pub fn check_move(&self, state: &State, mv: Move) -> Result<Disc, MoveError> {
        let disc = state
            .top(mv.from)
            .ok_or(MoveError::EmptySource { from: mv.from })?;
        if !self.graph.contains(mv.from, mv.to) {
            return Err(MoveError::MissingEdge {
                from: mv.from,
                to: mv.to,
            });
        }
        let target = state.stack(mv.to);
        if let Some(&below) = target.iter().min() {
            if !fits_on(disc, below, self.distance) {
                return Err(MoveError::DistanceViolation {
                    disc,
                    below,
                    allowed: self.distance,
                });
            }
        }
        Ok(disc)
    }

    /// Legal moves in lexicographic (from, to) order.
    pub fn legal_moves(&self, state: &State) -> Vec<Move> {
        let mut moves = Vec::with_capacity(6);
        for from in Peg::ALL {
            for to in Peg::ALL {
                if from != to {
                    let mv = Move { from, to };
                    if self.check_move(state, mv).is_ok() {
                        moves.push(mv);
                    }
                }
            }
        }
        moves
    }

    pub fn apply(&self, state: &State, mv: Move) -> Result<State, MoveError> {
        let mut next = state.clone();
        self.apply_in_place(&mut next, mv)?;
        Ok(next)
    }

    /// Applies `mv` to `state`, returning the moved disc. Leaves `state`
    /// untouched on error.
    pub fn apply_in_place(&self, state: &mut State, mv: Move) -> Result<Disc, MoveError> {
        self.check_move(state, mv)?;
        Ok(state.shift(mv.from, mv.to))
    }

    pub fn apply_all(&self, start: &State, seq: &MoveSequence) -> Result<State, SequenceError> {
        let mut state = start.clone();
        for (i, &mv) in seq.iter().enumerate() {
            self.apply_in_place(&mut state, mv)
                .map_err(|error| SequenceError {
                    index: i + 1,
                    mv,
                    error,
                })?;
        }
        Ok(state)
    }
}

/// The single placement predicate: may `disc` rest above `below`?
pub fn fits_on(disc: Disc, below: Disc, distance: u32) -> bool {
    disc as i64 - below as i64 <= distance as i64
}

/// Pairwise check of one bottom-to-top stack.
pub fn stack_is_legal(stack: &[Disc], distance: u32) -> bool {
    let mut min_below = Disc::MAX;
    for &disc in stack {
        if min_below != Disc::MAX && !fits_on(disc, min_below, distance) {
            return false;
        }
        min_below = min_below.min(disc);
    }
    true
}

/// The source/target swap σ that fixes the auxiliary peg.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mirror {
    src: Peg,
    tgt: Peg,
}

impl Mirror {
    pub fn new(src: Peg, tgt: Peg) -> Result<Mirror, ModelError> {
        if src == tgt {
            return Err(ModelError::SelfMove(src));
        }
        Ok(Mirror { src, tgt })
    }

    pub fn src(self) -> Peg {
        self.src
    }

    pub fn tgt(self) -> Peg {
        self.tgt
    }

    pub fn aux(self) -> Peg {
        Peg::third(self.src, self.tgt)
    }

    pub fn peg(self, peg: Peg) -> Peg {
        if peg == self.src {
            self.tgt
        } else if peg == self.tgt {
            self.src
        } else {
            peg
        }
    }

    /// Swaps the source and target stacks.
    pub fn mirror_state(self, state: &State) -> State {
        let mut out = state.clone();
        out.stacks_mut().swap(self.src.index(), self.tgt.index());
        out
    }

    /// `x>y` becomes `σ(y)>σ(x)`: the move played backwards in the mirrored world.
    pub fn mirror_move(self, mv: Move) -> Move {
        Move {
            from: self.peg(mv.to),
            to: self.peg(mv.from),
        }
    }

    /// Reverses `seq` and mirrors every move. An involution.
    pub fn mirror_reverse(self, seq: &MoveSequence) -> MoveSequence {
        seq.iter().rev().map(|&mv| self.mirror_move(mv)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(stacks: [&[Disc]; 3]) -> State {
        State::from_stacks(stacks.map(<[Disc]>::to_vec)).unwrap()
    }

    #[test]
    fn distance_legality() {
        let relaxed = Model::relaxed(1);
        assert!(relaxed.is_legal_state(&state([&[3, 4], &[2, 1], &[]])));
        assert!(!relaxed.is_legal_state(&state([&[2, 4], &[3, 1], &[]])));
        // pairwise: 3 sits on 4 fine, but 3 is 2 above the 1 further down
        assert!(!relaxed.is_legal_state(&state([&[1, 4, 3], &[2], &[]])));
        assert!(Model::classical().is_legal_state(&state([&[4, 3, 1], &[2], &[]])));
        assert!(!Model::classical().is_legal_state(&state([&[1, 2], &[], &[]])));
    }

    #[test]
    fn legal_moves_examples() {
        let s = State::standard(2, Peg::ONE);
        assert_eq!(
            Model::classical().legal_moves(&s),
            vec![Move::of(1, 2), Move::of(1, 3)]
        );
        assert_eq!(
            Model::digraph(MoveGraph::cycle()).legal_moves(&s),
            vec![Move::of(1, 2)]
        );
        let s = state([&[2], &[1], &[]]);
        assert!(Model::relaxed(1).legal_moves(&s).contains(&Move::of(1, 2)));
        assert!(!Model::classical().legal_moves(&s).contains(&Move::of(1, 2)));
    }

    #[test]
    fn apply_examples() {
        let m = Model::classical();
        let s = State::standard(3, Peg::ONE);
        let next = m.apply(&s, Move::of(1, 2)).unwrap();
        assert_eq!(next.stack(Peg::ONE), &[3, 2]);
        assert_eq!(next.stack(Peg::TWO), &[1]);
        assert_eq!(s, State::standard(3, Peg::ONE));
        assert_eq!(
            m.apply(&s, Move::of(2, 1)),
            Err(MoveError::EmptySource { from: Peg::TWO })
        );

        let s = state([&[3], &[4], &[2, 1]]);
        let next = Model::relaxed(1).apply(&s, Move::of(2, 1)).unwrap();
        assert_eq!(next.stack(Peg::ONE), &[3, 4]);

        let cyc = Model::digraph(MoveGraph::cycle());
        assert_eq!(
            cyc.apply(&State::standard(1, Peg::ONE), Move::of(1, 3)),
            Err(MoveError::MissingEdge {
                from: Peg::ONE,
                to: Peg::THREE
            })
        );
    }

    #[test]
    fn apply_all_reports_first_bad_index() {
        let m = Model::classical();
        let done = m
            .apply_all(&State::standard(1, Peg::ONE), &vec![Move::of(1, 2)].into())
            .unwrap();
        assert_eq!(done, State::standard(1, Peg::TWO));

        let err = m
            .apply_all(
                &State::standard(2, Peg::ONE),
                &vec![Move::of(1, 2), Move::of(1, 2)].into(),
            )
            .unwrap_err();
        assert_eq!(err.index, 2);
        assert_eq!(
            err.error,
            MoveError::DistanceViolation {
                disc: 2,
                below: 1,
                allowed: 0
            }
        );
    }

    #[test]
    fn nine_move_sequence_transfers_four_discs() {
        let seq = MoveSequence::parse_lines("1>2\n1>3\n1>3\n2>3\n1>2\n3>1\n3>2\n3>2\n1>2").unwrap();
        let end = Model::relaxed(1)
            .apply_all(&State::standard(4, Peg::ONE), &seq)
            .unwrap();
        assert_eq!(end, State::standard(4, Peg::TWO));
    }

    #[test]
    fn mirror_examples() {
        let m = Mirror::new(Peg::ONE, Peg::TWO).unwrap();
        let (s, t, a) = (1, 2, 3);
        assert_eq!(m.mirror_move(Move::of(a, t)), Move::of(s, a));
        assert_eq!(m.mirror_move(Move::of(s, t)), Move::of(s, t));
        assert_eq!(m.mirror_move(Move::of(a, s)), Move::of(t, a));
        assert_eq!(
            m.mirror_state(&State::standard(5, Peg::ONE)),
            State::standard(5, Peg::TWO)
        );
        let on_aux = State::standard(4, Peg::THREE);
        assert_eq!(m.mirror_state(&on_aux), on_aux);
        assert!(Mirror::new(Peg::TWO, Peg::TWO).is_err());
    }
}
