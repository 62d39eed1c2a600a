//! Exhaustive breadth-first search over the legal state graph.
//!
//! This is the ground truth the constructions and formulas are checked
//! against. Distances are exact; witnesses are the lexicographically
//! smallest optimal move at every step, so runs reproduce byte for byte.

mod codec;
mod probe;
mod search;
mod symmetric;

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

pub use codec::{Codec, MAX_BASE3_DISCS, MAX_STACK_DISCS};
pub use probe::{
    conjecture_probe, verify_optimality, OptimalityReport, PairComparison, ProbeReport, ProbeRow,
};
pub use symmetric::shortest_symmetric;

use crate::exec::Exec;
use crate::model::{Model, MoveSequence, Peg, State};
use search::Search;

/// Roughly 4 GiB of visited-set and layer storage at ~32 bytes per state.
pub const DEFAULT_MAX_STATES: usize = 1 << 27;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("state budget exceeded: more than {cap} states visited (raise --max-states)")]
    CapExceeded { cap: usize },
    #[error("start state {0} is illegal under the model")]
    IllegalStart(String),
    #[error("{n} discs exceeds the oracle limit of {max} for this model")]
    TooManyDiscs { n: usize, max: usize },
    #[error("goal has {goal} discs but the start has {start}")]
    DiscCountMismatch { start: usize, goal: usize },
    #[error("move graph {graph} is not invariant under swapping pegs {src} and {tgt}")]
    NotSwapInvariant {
        graph: crate::model::MoveGraph,
        src: Peg,
        tgt: Peg,
    },
    #[error("move graph {0} is not strongly connected")]
    NotStronglyConnected(crate::model::MoveGraph),
    #[error("source and target are both peg {0}")]
    SamePeg(Peg),
    #[error("placement distance must be at least 1")]
    ZeroDistance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_states: usize,
    pub exec: Exec,
    /// Rebuild an optimal move sequence alongside the distance.
    pub witness: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_states: DEFAULT_MAX_STATES,
            exec: Exec::default(),
            witness: true,
        }
    }
}

impl SearchConfig {
    pub fn without_witness(self) -> Self {
        SearchConfig {
            witness: false,
            ..self
        }
    }

    pub fn with_exec(self, exec: Exec) -> Self {
        SearchConfig { exec, ..self }
    }

    pub fn with_max_states(self, max_states: usize) -> Self {
        SearchConfig { max_states, ..self }
    }
}

/// Which states end the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoalPredicate {
    /// The single standard state on the peg.
    StandardOn(Peg),
    /// Every legal state with all discs on the peg, in any order.
    AllOn(Peg),
    Exact(State),
}

impl GoalPredicate {
    fn compile(&self, codec: Codec) -> Result<CompiledGoal, OracleError> {
        let n = codec.disc_count();
        Ok(match self {
            GoalPredicate::StandardOn(p) => {
                CompiledGoal::Key(codec.encode(&State::standard(n, *p)))
            }
            GoalPredicate::AllOn(p) => CompiledGoal::AllOn(*p),
            GoalPredicate::Exact(s) => {
                if s.disc_count() != n {
                    return Err(OracleError::DiscCountMismatch {
                        start: n,
                        goal: s.disc_count(),
                    });
                }
                CompiledGoal::Key(codec.encode(s))
            }
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum CompiledGoal {
    Key(u128),
    AllOn(Peg),
}

impl CompiledGoal {
    fn matches(self, codec: Codec, key: u128) -> bool {
        match self {
            CompiledGoal::Key(k) => k == key,
            CompiledGoal::AllOn(p) => codec.decode(key).all_on(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    /// `None` when no goal state is reachable.
    pub distance: Option<u64>,
    pub witness: Option<MoveSequence>,
    pub explored: usize,
    pub peak_frontier: usize,
}

/// Minimal number of legal moves from `start` to any state matching `goal`.
pub fn bfs_distance(
    model: &Model,
    start: &State,
    goal: &GoalPredicate,
    cfg: SearchConfig,
) -> Result<SearchResult, OracleError> {
    let mut results = bfs_distances(model, start, std::slice::from_ref(goal), cfg)?;
    Ok(results.pop().expect("one goal in, one result out"))
}

/// Runs one search until every goal is reached (or the space is exhausted).
pub fn bfs_distances(
    model: &Model,
    start: &State,
    goals: &[GoalPredicate],
    cfg: SearchConfig,
) -> Result<Vec<SearchResult>, OracleError> {
    let mut search = Search::new(model, start, cfg)?;
    let codec = search.codec();
    let compiled: Vec<CompiledGoal> = goals
        .iter()
        .map(|g| g.compile(codec))
        .collect::<Result<_, _>>()?;
    let mut hits: Vec<Option<(usize, HashSet<u128>)>> = vec![None; goals.len()];
    let mut level = 0;
    loop {
        let layer = search.layer(level);
        for (goal, hit) in compiled.iter().zip(hits.iter_mut()) {
            if hit.is_some() {
                continue;
            }
            let found = cfg.exec.map(layer, |&key| goal.matches(codec, key));
            let keys: HashSet<u128> = layer
                .iter()
                .zip(found)
                .filter_map(|(&k, f)| f.then_some(k))
                .collect();
            if !keys.is_empty() {
                *hit = Some((level, keys));
            }
        }
        if hits.iter().all(Option::is_some) || !search.expand()? {
            break;
        }
        level += 1;
    }
    Ok(hits
        .into_iter()
        .map(|hit| {
            let (distance, witness) = match hit {
                Some((level, keys)) => (
                    Some(level as u64),
                    cfg.witness.then(|| search.path_to(level, &keys)),
                ),
                None => (None, None),
            };
            SearchResult {
                distance,
                witness,
                explored: search.explored(),
                peak_frontier: search.peak_frontier(),
            }
        })
        .collect())
}

/// Number of legal states reachable from `start`.
pub fn reachable_states(
    model: &Model,
    start: &State,
    cfg: SearchConfig,
) -> Result<usize, OracleError> {
    let mut search = Search::new(model, start, cfg)?;
    while search.expand()? {}
    Ok(search.explored())
}
