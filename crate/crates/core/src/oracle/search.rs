use std::collections::HashSet;

use crate::model::{Model, Move, MoveSequence, Peg, State};

use super::{Codec, OracleError, SearchConfig};

/// Level-synchronous BFS over packed states.
///
/// Every layer is kept so that witnesses can be rebuilt. Frontier expansion
/// runs through [`Exec`](crate::Exec); dedup happens sequentially in layer
/// order, so the layers are the same under every execution mode.
pub(crate) struct Search<'m> {
    model: &'m Model,
    codec: Codec,
    cfg: SearchConfig,
    layers: Vec<Vec<u128>>,
    visited: HashSet<u128>,
    peak: usize,
}

const ORDERED_MOVES: [(u8, u8); 6] = [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)];

impl<'m> Search<'m> {
    pub fn new(model: &'m Model, start: &State, cfg: SearchConfig) -> Result<Self, OracleError> {
        if !model.is_legal_state(start) {
            return Err(OracleError::IllegalStart(start.canonical_key()));
        }
        let codec = Codec::for_model(model, start.disc_count())?;
        let key = codec.encode(start);
        let mut visited = HashSet::new();
        visited.insert(key);
        Ok(Search {
            model,
            codec,
            cfg,
            layers: vec![vec![key]],
            visited,
            peak: 1,
        })
    }

    pub fn codec(&self) -> Codec {
        self.codec
    }

    pub fn layer(&self, level: usize) -> &[u128] {
        &self.layers[level]
    }

    pub fn explored(&self) -> usize {
        self.visited.len()
    }

    pub fn peak_frontier(&self) -> usize {
        self.peak
    }

    /// Legal successors in lexicographic move order.
    pub fn successors(&self, key: u128) -> Vec<(Move, u128)> {
        successors(self.model, self.codec, key)
    }

    /// Adds the next layer. Returns `false` once the reachable set is exhausted.
    pub fn expand(&mut self) -> Result<bool, OracleError> {
        let frontier = self.layers.last().expect("at least the start layer");
        if frontier.is_empty() {
            return Ok(false);
        }
        let (model, codec, visited) = (self.model, self.codec, &self.visited);
        let found = self.cfg.exec.map(frontier, |&key| {
            successors(model, codec, key)
                .into_iter()
                .map(|(_, next)| next)
                .filter(|next| !visited.contains(next))
                .collect::<Vec<u128>>()
        });
        let mut next_layer = Vec::new();
        for key in found.into_iter().flatten() {
            if self.visited.insert(key) {
                next_layer.push(key);
                if self.visited.len() > self.cfg.max_states {
                    return Err(OracleError::CapExceeded {
                        cap: self.cfg.max_states,
                    });
                }
            }
        }
        let more = !next_layer.is_empty();
        self.peak = self.peak.max(next_layer.len());
        self.layers.push(next_layer);
        Ok(more)
    }

    /// Lexicographically smallest shortest path from the start to any key of
    /// `targets`, all of which must sit in layer `level`.
    pub fn path_to(&self, level: usize, targets: &HashSet<u128>) -> MoveSequence {
        // on_path[i]: states of layer i with a shortest continuation into targets
        let mut on_path: Vec<HashSet<u128>> = vec![HashSet::new(); level + 1];
        on_path[level] = targets.clone();
        for i in (0..level).rev() {
            let next = &on_path[i + 1];
            let keep = self.cfg.exec.map(&self.layers[i], |&key| {
                self.successors(key)
                    .iter()
                    .any(|(_, succ)| next.contains(succ))
            });
            on_path[i] = self.layers[i]
                .iter()
                .zip(keep)
                .filter_map(|(&key, k)| k.then_some(key))
                .collect();
        }
        let mut path = MoveSequence::with_capacity(level);
        let mut key = self.layers[0][0];
        for next_set in &on_path[1..] {
            let (mv, next) = self
                .successors(key)
                .into_iter()
                .find(|(_, succ)| next_set.contains(succ))
                .expect("marked state has a marked successor");
            path.push(mv);
            key = next;
        }
        path
    }
}

pub(crate) fn successors(model: &Model, codec: Codec, key: u128) -> Vec<(Move, u128)> {
    let mut state = codec.decode(key);
    let mut out = Vec::with_capacity(6);
    for (from, to) in ORDERED_MOVES {
        let mv = Move {
            from: Peg::from_index(from as usize - 1),
            to: Peg::from_index(to as usize - 1),
        };
        if model.apply_in_place(&mut state, mv).is_ok() {
            out.push((mv, codec.encode(&state)));
            // undo without rule checks; the reverse edge may be missing
            state.shift(mv.to, mv.from);
        }
    }
    out
}
