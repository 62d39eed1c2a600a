//! Constructive move sequences.
//!
//! Every generator emits a bare list of peg moves; none of them tracks disc
//! identities. Legality is always established by replaying through a
//! [`Model`](crate::model::Model).

use thiserror::Error;

use crate::model::{Mirror, Move, MoveGraph, MoveSequence, Peg};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("source and target are both peg {0}")]
    SamePeg(Peg),
    #[error("move graph {0} is not strongly connected")]
    NotStronglyConnected(MoveGraph),
    #[error("this construction needs placement distance C >= 1")]
    ZeroDistance,
}

fn distinct(src: Peg, tgt: Peg) -> Result<(), SolveError> {
    if src == tgt {
        Err(SolveError::SamePeg(src))
    } else {
        Ok(())
    }
}

fn positive(distance: u32) -> Result<(), SolveError> {
    if distance == 0 {
        Err(SolveError::ZeroDistance)
    } else {
        Ok(())
    }
}

/// Classical recursion: `n-1` to the spare peg, disc `n` across, `n-1` on top.
/// Length `2^n - 1`.
pub fn classical_solve(n: usize, src: Peg, tgt: Peg) -> Result<MoveSequence, SolveError> {
    distinct(src, tgt)?;
    let mut out = MoveSequence::with_capacity(capacity_hint(n, 2));
    classical_into(&mut out, n, src, tgt);
    Ok(out)
}

fn classical_into(out: &mut MoveSequence, n: usize, src: Peg, tgt: Peg) {
    if n == 0 {
        return;
    }
    let aux = Peg::third(src, tgt);
    classical_into(out, n - 1, src, aux);
    out.push(Move { from: src, to: tgt });
    classical_into(out, n - 1, aux, tgt);
}

/// Transfer under a restricted move digraph.
///
/// When the direct edge exists the usual three-part recursion is used;
/// otherwise disc `n` travels through the spare peg while the smaller discs
/// shuttle `src -> tgt -> src -> tgt`.
pub fn directed_move(
    graph: MoveGraph,
    src: Peg,
    tgt: Peg,
    n: usize,
) -> Result<MoveSequence, SolveError> {
    distinct(src, tgt)?;
    if !graph.is_strongly_connected() {
        return Err(SolveError::NotStronglyConnected(graph));
    }
    let mut out = MoveSequence::with_capacity(capacity_hint(n, 3));
    directed_into(&mut out, graph, src, tgt, n);
    Ok(out)
}

fn directed_into(out: &mut MoveSequence, graph: MoveGraph, i: Peg, j: Peg, n: usize) {
    if n == 0 {
        return;
    }
    let k = Peg::third(i, j);
    if graph.contains(i, j) {
        directed_into(out, graph, i, k, n - 1);
        out.push(Move { from: i, to: j });
        directed_into(out, graph, k, j, n - 1);
    } else {
        directed_into(out, graph, i, j, n - 1);
        out.push(Move { from: i, to: k });
        directed_into(out, graph, j, i, n - 1);
        out.push(Move { from: k, to: j });
        directed_into(out, graph, i, j, n - 1);
    }
}

/// ζ-transfer: moves `n` discs from `src` to `tgt` under distance `C`,
/// ending with all discs on `tgt` in some legal (generally non-standard)
/// order.
///
/// Up to `C+1` discs go across one by one. Larger towers park the `n-C-1`
/// smallest discs on the spare peg, move the remaining `C+1` across one by
/// one, then bring the small discs over.
pub fn zeta(n: usize, distance: u32, src: Peg, tgt: Peg) -> Result<MoveSequence, SolveError> {
    distinct(src, tgt)?;
    positive(distance)?;
    let mut out = MoveSequence::new();
    zeta_into(&mut out, n, distance as usize + 1, src, tgt);
    Ok(out)
}

fn zeta_into(out: &mut MoveSequence, n: usize, block: usize, src: Peg, tgt: Peg) {
    if n <= block {
        for _ in 0..n {
            out.push(Move { from: src, to: tgt });
        }
        return;
    }
    let aux = Peg::third(src, tgt);
    zeta_into(out, n - block, block, src, aux);
    for _ in 0..block {
        out.push(Move { from: src, to: tgt });
    }
    zeta_into(out, n - block, block, aux, tgt);
}

/// Symmetric standard-to-standard transfer of length `2 b(n-1) + 1`:
/// a ζ-transfer of the `n-1` small discs to the spare peg, disc `n` across,
/// then the first half reversed and mirrored.
///
/// `n = 0` yields the empty sequence.
pub fn a_symmetric(
    n: usize,
    distance: u32,
    src: Peg,
    tgt: Peg,
) -> Result<MoveSequence, SolveError> {
    distinct(src, tgt)?;
    positive(distance)?;
    if n == 0 {
        return Ok(MoveSequence::new());
    }
    let aux = Peg::third(src, tgt);
    let first = zeta(n - 1, distance, src, aux)?;
    let mirror = Mirror::new(src, tgt).expect("distinct pegs");
    let mut out = MoveSequence::with_capacity(2 * first.len() + 1);
    out.extend_from(&first);
    out.push(Move { from: src, to: tgt });
    out.extend_from(&mirror.mirror_reverse(&first));
    Ok(out)
}

/// Five-step standard-to-standard procedure with `k = C+1`:
///
/// 1. ζ-transfer the `n-k` small discs `src -> tgt`,
/// 2. the `k` large discs one by one `src -> aux`,
/// 3. ζ-transfer the small discs `tgt -> src`,
/// 4. the large discs one by one `aux -> tgt`,
/// 5. recurse on the `n-k` small discs `src -> tgt`.
///
/// Towers of at most `k` discs use the `2m - 1` move transfer (`m-1` discs
/// to the spare peg, the largest across, `m-1` back on top), which keeps the
/// end state standard.
pub fn q_sequence(n: usize, distance: u32, src: Peg, tgt: Peg) -> Result<MoveSequence, SolveError> {
    distinct(src, tgt)?;
    positive(distance)?;
    let mut out = MoveSequence::new();
    q_into(&mut out, n, distance as usize + 1, src, tgt);
    Ok(out)
}

fn q_into(out: &mut MoveSequence, n: usize, block: usize, src: Peg, tgt: Peg) {
    let aux = Peg::third(src, tgt);
    if n == 0 {
        return;
    }
    if n <= block {
        for _ in 1..n {
            out.push(Move { from: src, to: aux });
        }
        out.push(Move { from: src, to: tgt });
        for _ in 1..n {
            out.push(Move { from: aux, to: tgt });
        }
        return;
    }
    let small = n - block;
    zeta_into(out, small, block, src, tgt);
    for _ in 0..block {
        out.push(Move { from: src, to: aux });
    }
    zeta_into(out, small, block, tgt, src);
    for _ in 0..block {
        out.push(Move { from: aux, to: tgt });
    }
    q_into(out, small, block, src, tgt);
}

fn capacity_hint(n: usize, base: usize) -> usize {
    base.saturating_pow(n.min(64) as u32).min(1 << 20)
}
