//! Generalized Tower of Hanoi laboratory.
//!
//! Two relaxations of the classical three-peg puzzle share one engine:
//!
//! - moves restricted to the edges of a strongly connected digraph on the
//!   pegs ([`solvers::directed_move`], [`recurrence::eval_move_counts`]);
//! - a placement distance `C`, letting a disc rest on one up to `C` sizes
//!   smaller ([`solvers::zeta`], [`solvers::a_symmetric`], [`solvers::q_sequence`]).
//!
//! [`oracle`] certifies every construction and formula by exhaustive
//! breadth-first search, and [`verify`] bundles the checks into named
//! harnesses.
//!
//! With the default `parallel` feature the oracle expands BFS frontiers and
//! batch sweeps on the rayon pool; [`Exec::Sequential`] is always available.

pub mod exec;
pub mod graphs;
pub mod model;
pub mod oracle;
pub mod recurrence;
pub mod report;
pub mod solvers;
pub mod verify;

pub use exec::Exec;
pub use model::{Disc, Model, Move, MoveGraph, MoveSequence, Peg, State};
