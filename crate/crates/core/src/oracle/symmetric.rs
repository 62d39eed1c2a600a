use std::collections::HashSet;

use crate::model::{Mirror, Model, Move, MoveSequence, Peg, State};

use super::search::Search;
use super::{OracleError, SearchConfig, SearchResult};

/// Shortest sequence from `standard(n, src)` to `standard(n, tgt)` that is
/// fixed by reverse-then-mirror.
///
/// A symmetric sequence is determined by its first half. Odd length `2m+1`
/// needs a state `W` at distance `m` with a legal move `W -> σ(W)`; even
/// length `2m` needs `W = σ(W)` at distance `m`. The second half is the
/// mirrored reverse of a shortest path to `W`, which is legal whenever the
/// move graph is invariant under σ. Even candidates are searched too, so odd
/// parity is observed rather than assumed.
pub fn shortest_symmetric(
    model: &Model,
    n: usize,
    src: Peg,
    tgt: Peg,
    cfg: SearchConfig,
) -> Result<SearchResult, OracleError> {
    let mirror = Mirror::new(src, tgt).map_err(|_| OracleError::SamePeg(src))?;
    if !model.graph.is_swap_invariant(src, tgt) {
        return Err(OracleError::NotSwapInvariant {
            graph: model.graph,
            src,
            tgt,
        });
    }
    let start = State::standard(n, src);
    let mut search = Search::new(model, &start, cfg)?;
    let codec = search.codec();
    let mut level = 0;
    loop {
        let layer = search.layer(level);
        let found: Vec<(bool, Option<Move>)> = cfg.exec.map(layer, |&key| {
            let state = codec.decode(key);
            let mirrored = codec.encode(&mirror.mirror_state(&state));
            if mirrored == key {
                return (true, None);
            }
            let crossing = search
                .successors(key)
                .into_iter()
                .find(|(_, next)| *next == mirrored)
                .map(|(mv, _)| mv);
            (false, crossing)
        });
        let even = layer
            .iter()
            .zip(&found)
            .filter(|(_, f)| f.0)
            .map(|(&k, _)| k)
            .min();
        let odd = layer
            .iter()
            .zip(&found)
            .filter_map(|(&k, f)| f.1.map(|mv| (k, mv)))
            .min();
        let pick = match (even, odd) {
            (Some(w), _) => Some((w, None)),
            (None, Some((w, mv))) => Some((w, Some(mv))),
            (None, None) => None,
        };
        if let Some((w, middle)) = pick {
            let length = 2 * level as u64 + middle.is_some() as u64;
            let witness = cfg.witness.then(|| {
                let first = search.path_to(level, &HashSet::from([w]));
                let mut out = MoveSequence::with_capacity(length as usize);
                out.extend_from(&first);
                if let Some(mv) = middle {
                    out.push(mv);
                }
                out.extend_from(&mirror.mirror_reverse(&first));
                out
            });
            return Ok(SearchResult {
                distance: Some(length),
                witness,
                explored: search.explored(),
                peak_frontier: search.peak_frontier(),
            });
        }
        if !search.expand()? {
            return Ok(SearchResult {
                distance: None,
                witness: None,
                explored: search.explored(),
                peak_frontier: search.peak_frontier(),
            });
        }
        level += 1;
    }
}
