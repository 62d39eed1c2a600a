//! Executable checks: sequence validation, symmetry, projection of the
//! largest disc, λ-state predicates, and named claim harnesses.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::model::{Disc, Mirror, Model, MoveSequence, Peg, SequenceError, State};
use crate::oracle::{
    bfs_distances, conjecture_probe, shortest_symmetric, GoalPredicate, OracleError, SearchConfig,
};
use crate::recurrence::{conjecture_values, q_lengths};
use crate::solvers::{a_symmetric, q_sequence, zeta};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    /// 1-based index of the first illegal move.
    pub first_bad_index: Option<usize>,
    pub final_state: Option<State>,
    pub length: usize,
}

pub fn validate(model: &Model, start: &State, seq: &MoveSequence) -> ValidationReport {
    match model.apply_all(start, seq) {
        Ok(end) => ValidationReport {
            ok: true,
            first_bad_index: None,
            final_state: Some(end),
            length: seq.len(),
        },
        Err(e) => ValidationReport {
            ok: false,
            first_bad_index: Some(e.index),
            final_state: None,
            length: seq.len(),
        },
    }
}

/// Move `L+1-i` is the mirror image of move `i`, for every `i`.
pub fn is_symmetric(seq: &MoveSequence, mirror: Mirror) -> bool {
    let len = seq.len();
    (0..len.div_ceil(2)).all(|i| seq[len - 1 - i] == mirror.mirror_move(seq[i]))
}

/// [`is_symmetric`] plus: replayed from `start`, the disc moved at step `i`
/// is the disc moved at step `L+1-i`. Illegal sequences are an error.
pub fn is_symmetric_from(
    seq: &MoveSequence,
    mirror: Mirror,
    model: &Model,
    start: &State,
) -> Result<bool, SequenceError> {
    let discs = moved_discs(model, start, seq)?;
    let len = discs.len();
    Ok(is_symmetric(seq, mirror) && (0..len / 2).all(|i| discs[i] == discs[len - 1 - i]))
}

fn moved_discs(
    model: &Model,
    start: &State,
    seq: &MoveSequence,
) -> Result<Vec<Disc>, SequenceError> {
    let mut state = start.clone();
    seq.iter()
        .enumerate()
        .map(|(i, &mv)| {
            model
                .apply_in_place(&mut state, mv)
                .map_err(|error| SequenceError {
                    index: i + 1,
                    mv,
                    error,
                })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Projection {
    /// Legal from `start.without_largest()`.
    pub sequence: MoveSequence,
    /// Number of moves of the largest disc that were dropped.
    pub removed: usize,
}

/// Drops every move of the largest disc.
pub fn project_out_largest(
    seq: &MoveSequence,
    model: &Model,
    start: &State,
) -> Result<Projection, SequenceError> {
    let discs = moved_discs(model, start, seq)?;
    let largest = start.disc_count() as Disc;
    let sequence: MoveSequence = seq
        .iter()
        .zip(&discs)
        .filter(|(_, &d)| d != largest)
        .map(|(&mv, _)| mv)
        .collect();
    let removed = seq.len() - sequence.len();
    Ok(Projection { sequence, removed })
}

/// How to read "disc `n-1` on another peg" in a λ-state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum LambdaReading {
    /// Disc `n-1` (or the pair `n-1, n`) is alone on its peg.
    #[default]
    Strict,
    /// Smaller discs may sit on top of it.
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaStatus {
    pub is_lambda: bool,
    pub is_lambda_prime: bool,
}

/// λ: disc `n` alone on `initial`, disc `n-1` at the bottom of another peg,
/// the rest on the third. λ′: `initial` empty, disc `n` directly on disc
/// `n-1`, the rest on the third. Both need `n >= 2`.
pub fn lambda_predicates(state: &State, initial: Peg, reading: LambdaReading) -> LambdaStatus {
    let n = state.disc_count();
    if n < 2 {
        return LambdaStatus {
            is_lambda: false,
            is_lambda_prime: false,
        };
    }
    let (big, next) = (n as Disc, (n - 1) as Disc);
    let others = Peg::ALL.into_iter().filter(|&p| p != initial);
    let fits = |stack: &[Disc], base: &[Disc]| match reading {
        LambdaReading::Strict => stack == base,
        LambdaReading::Relaxed => stack.starts_with(base),
    };
    let init = state.stack(initial);
    let is_lambda = init == [big] && others.clone().any(|p| fits(state.stack(p), &[next]));
    let is_lambda_prime = init.is_empty()
        && others
            .into_iter()
            .any(|p| fits(state.stack(p), &[next, big]));
    LambdaStatus {
        is_lambda,
        is_lambda_prime,
    }
}

/// Named claim bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum Suite {
    /// Conjectured `a_n`, `b_n` against BFS.
    ConjectureVsOracle,
    /// `x_n - x_{n-k} >= y_n - y_{n-k}` for the five-step transfer.
    FiveStepInequality,
    /// `2b_{n-1} + 1 < 3b_{n-2} + 4` and `d_n = 2d_{n-2} + 1` at distance 1.
    DnNegative,
    /// Shortest symmetric transfer has odd length.
    SymmetricOdd,
    /// Shortest symmetric transfer has length `a_n`.
    SymmetricEqualsA,
    /// Dropping the largest disc leaves a legal transfer of the rest.
    Projection,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ConjectureVsOracle,
        Suite::FiveStepInequality,
        Suite::DnNegative,
        Suite::SymmetricOdd,
        Suite::SymmetricEqualsA,
        Suite::Projection,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::ConjectureVsOracle => "eq3-vs-oracle",
            Suite::FiveStepInequality => "claim51-inequality",
            Suite::DnNegative => "dn-negative",
            Suite::SymmetricOdd => "symmetric-odd",
            Suite::SymmetricEqualsA => "symmetric-equals-a",
            Suite::Projection => "projection",
        }
    }

    pub fn default_params(self) -> HarnessParams {
        let base = HarnessParams {
            distance: 1,
            n_max: 8,
            k_values: Vec::new(),
            max_states: crate::oracle::DEFAULT_MAX_STATES,
        };
        match self {
            Suite::ConjectureVsOracle => base,
            Suite::FiveStepInequality => HarnessParams {
                n_max: 60,
                k_values: vec![2, 3, 4, 5],
                ..base
            },
            Suite::DnNegative => HarnessParams { n_max: 60, ..base },
            Suite::SymmetricOdd | Suite::SymmetricEqualsA => HarnessParams { n_max: 7, ..base },
            Suite::Projection => HarnessParams { n_max: 7, ..base },
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl From<Suite> for String {
    fn from(s: Suite) -> String {
        s.id().to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite id {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Suite, UnknownSuite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessParams {
    /// Placement distance `C`. Ignored by `claim51-inequality` (uses
    /// `k_values`) and `dn-negative` (fixed at 1).
    pub distance: u32,
    pub n_max: usize,
    /// Block sizes `k = C + 1` for `claim51-inequality`.
    pub k_values: Vec<usize>,
    pub max_states: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub suite: Suite,
    pub params: HarnessParams,
    pub pass: bool,
    /// Number of individual checks performed.
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl HarnessReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("placement distance must be at least 1")]
    ZeroDistance,
    #[error("block size k must be at least 2, got {0}")]
    BadBlock(usize),
}

pub fn claim_harness(suite: Suite, params: HarnessParams) -> Result<HarnessReport, HarnessError> {
    let mut checked = 0;
    let mut bad = Vec::new();
    let cfg = SearchConfig::default().with_max_states(params.max_states);
    match suite {
        Suite::ConjectureVsOracle => {
            let report = conjecture_probe(nonzero(params.distance)?, params.n_max, cfg)?;
            for row in &report.rows {
                checked += 1;
                if !row.matches {
                    bad.push(Counterexample {
                        n: row.n,
                        k: None,
                        detail: format!(
                            "bfs std {} any {}, conjectured a {} b {}",
                            row.bfs_std, row.bfs_any, row.a_conj, row.b_conj
                        ),
                    });
                }
            }
        }
        Suite::FiveStepInequality => {
            for &k in &params.k_values {
                if k < 2 {
                    return Err(HarnessError::BadBlock(k));
                }
                let distance = (k - 1) as u32;
                let x = q_lengths(params.n_max, distance).expect("distance >= 1");
                let y = conjecture_values(params.n_max, distance)
                    .expect("distance >= 1")
                    .a;
                for n in k..=params.n_max {
                    checked += 1;
                    let lhs = BigInt::from(x[n].clone()) - BigInt::from(x[n - k].clone());
                    let rhs = BigInt::from(y[n].clone()) - BigInt::from(y[n - k].clone());
                    if lhs < rhs {
                        bad.push(Counterexample {
                            n,
                            k: Some(k),
                            detail: format!("x_n - x_(n-k) = {lhs} < y_n - y_(n-k) = {rhs}"),
                        });
                    }
                }
            }
        }
        Suite::DnNegative => {
            let b = conjecture_values(params.n_max.max(1), 1)
                .expect("distance 1")
                .b;
            let d = |n: usize| -> BigInt {
                BigInt::from(&b[n - 1] * 2u32 + 1u32) - BigInt::from(&b[n - 2] * 3u32 + 4u32)
            };
            for n in 2..=params.n_max {
                checked += 1;
                let dn = d(n);
                if dn >= BigInt::from(0) {
                    bad.push(Counterexample {
                        n,
                        k: Some(2),
                        detail: format!("2b_(n-1)+1 - (3b_(n-2)+4) = {dn} is not negative"),
                    });
                }
                if n >= 4 {
                    checked += 1;
                    let expected = d(n - 2) * 2 + 1;
                    if dn != expected {
                        bad.push(Counterexample {
                            n,
                            k: Some(2),
                            detail: format!("d_n = {dn} but 2d_(n-2)+1 = {expected}"),
                        });
                    }
                }
            }
        }
        Suite::SymmetricOdd | Suite::SymmetricEqualsA => {
            let distance = nonzero(params.distance)?;
            let model = Model::relaxed(distance);
            let a = conjecture_values(params.n_max, distance)
                .expect("distance >= 1")
                .a;
            let ns: Vec<usize> = (1..=params.n_max).collect();
            let found = cfg.exec.map(&ns, |&n| {
                shortest_symmetric(&model, n, Peg::ONE, Peg::TWO, cfg.without_witness())
            });
            for (n, result) in ns.into_iter().zip(found) {
                checked += 1;
                let len = result?.distance;
                let ok = match (suite, len) {
                    (_, None) => false,
                    (Suite::SymmetricOdd, Some(l)) => l % 2 == 1,
                    (_, Some(l)) => a[n].to_u64() == Some(l),
                };
                if !ok {
                    bad.push(Counterexample {
                        n,
                        k: None,
                        detail: match len {
                            None => "no symmetric transfer exists".to_string(),
                            Some(l) => format!("shortest symmetric length {l}, a_n = {}", a[n]),
                        },
                    });
                }
            }
        }
        Suite::Projection => {
            let distance = nonzero(params.distance)?;
            let model = Model::relaxed(distance);
            for n in 1..=params.n_max {
                for (start, seq) in projection_corpus(&model, n, cfg)? {
                    checked += 1;
                    if let Err(detail) = check_projection(&model, &start, &seq) {
                        bad.push(Counterexample { n, k: None, detail });
                    }
                }
            }
        }
    }
    Ok(HarnessReport {
        suite,
        params,
        pass: bad.is_empty(),
        checked,
        counterexamples: bad,
    })
}

fn nonzero(distance: u32) -> Result<u32, HarnessError> {
    if distance == 0 {
        Err(HarnessError::ZeroDistance)
    } else {
        Ok(distance)
    }
}

/// Oracle witnesses between single-peg states plus the constructive
/// transfers, each paired with its start state.
pub fn projection_corpus(
    model: &Model,
    n: usize,
    cfg: SearchConfig,
) -> Result<Vec<(State, MoveSequence)>, OracleError> {
    let mut out = Vec::new();
    for src in Peg::ALL {
        let start = State::standard(n, src);
        let goals: Vec<GoalPredicate> = Peg::ALL
            .into_iter()
            .filter(|&p| p != src)
            .flat_map(|p| [GoalPredicate::StandardOn(p), GoalPredicate::AllOn(p)])
            .collect();
        for r in bfs_distances(model, &start, &goals, cfg)? {
            if let Some(w) = r.witness {
                out.push((start.clone(), w));
            }
        }
    }
    if model.distance >= 1 && model.graph == crate::model::MoveGraph::complete() {
        let (s, t) = (Peg::ONE, Peg::TWO);
        let start = State::standard(n, s);
        for seq in [
            a_symmetric(n, model.distance, s, t),
            zeta(n, model.distance, s, t),
            q_sequence(n, model.distance, s, t),
        ] {
            out.push((start.clone(), seq.expect("valid arguments")));
        }
    }
    Ok(out)
}

/// Projection is legal, ends at the projected end state, and accounts for
/// every dropped move.
pub fn check_projection(model: &Model, start: &State, seq: &MoveSequence) -> Result<(), String> {
    let end = model
        .apply_all(start, seq)
        .map_err(|e| format!("input illegal: {e}"))?;
    let p = project_out_largest(seq, model, start).map_err(|e| e.to_string())?;
    if p.sequence.len() + p.removed != seq.len() {
        return Err("length does not add up".to_string());
    }
    let projected_end = model
        .apply_all(&start.without_largest(), &p.sequence)
        .map_err(|e| format!("projection illegal: {e}"))?;
    if projected_end != end.without_largest() {
        return Err(format!(
            "projection ends at {projected_end}, expected {}",
            end.without_largest()
        ));
    }
    Ok(())
}
