//! Property suites shared by the `properties` and `acceptance` targets.
//!
//! Each suite drives proptest's runner directly and returns the first
//! failure as a string, so callers can either assert or print a verdict.

#![allow(dead_code)]

use hanoi_core::graphs::strongly_connected_graphs;
use hanoi_core::model::{Mirror, Model, Move, MoveGraph, MoveSequence, Peg, State, PAIRS};
use hanoi_core::oracle::{bfs_distance, GoalPredicate, SearchConfig};
use hanoi_core::recurrence::{
    conjecture_values, consecutive_ratio, eval_move_counts, five_edge_denominator, QuadValue,
    GROWTH_PAIR,
};
use hanoi_core::solvers::{a_symmetric, directed_move};
use hanoi_core::verify::{check_projection, is_symmetric, is_symmetric_from, projection_corpus};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub type SuiteResult = Result<String, String>;

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn quad(d: u32) -> impl Strategy<Value = QuadValue> {
    (-50i64..50, 1i64..12, -50i64..50, 1i64..12).prop_map(move |(an, ad, bn, bd)| {
        QuadValue::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
            d,
        )
    })
}

fn quad_triple() -> impl Strategy<Value = (QuadValue, QuadValue, QuadValue)> {
    prop_oneof![Just(2u32), Just(3), Just(5), Just(17)]
        .prop_flat_map(|d| (quad(d), quad(d), quad(d)))
}

pub fn quad_field_axioms(cases: u32) -> SuiteResult {
    run(cases, quad_triple(), |(x, y, z)| {
        let d = x.d();
        let zero = QuadValue::integer(0, d);
        let one = QuadValue::one(d);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &zero, x.clone());
        prop_assert_eq!(&x * &one, x.clone());
        prop_assert_eq!(&x + &(-&x), zero.clone());
        prop_assert_eq!(&x - &y, &x + &(-&y));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        if !x.is_zero() {
            let inv = x.inverse().expect("nonzero element is invertible");
            prop_assert_eq!(&x * &inv, one.clone());
            prop_assert_eq!(&(&y / &x) * &x, y.clone());
        } else {
            prop_assert!(x.inverse().is_none());
        }
        Ok(())
    })?;
    Ok(format!(
        "{cases} random triples over Q(√2), Q(√3), Q(√5), Q(√17)"
    ))
}

/// A legal state reached by a random walk from a standard state.
pub fn legal_state(max_n: usize, max_c: u32) -> impl Strategy<Value = (Model, State)> {
    (
        0..=max_c,
        1..=max_n,
        0usize..3,
        prop::collection::vec(any::<u16>(), 0..60),
    )
        .prop_map(|(c, n, peg, walk)| {
            let model = Model::relaxed(c);
            let mut state = State::standard(n, Peg::from_index(peg));
            for pick in walk {
                let moves = model.legal_moves(&state);
                let mv = moves[pick as usize % moves.len()];
                model
                    .apply_in_place(&mut state, mv)
                    .expect("listed move is legal");
            }
            (model, state)
        })
}

fn mirror_strategy() -> impl Strategy<Value = Mirror> {
    (0usize..3, 1usize..3).prop_map(|(s, step)| {
        Mirror::new(Peg::from_index(s), Peg::from_index((s + step) % 3)).unwrap()
    })
}

fn move_sequence() -> impl Strategy<Value = MoveSequence> {
    prop::collection::vec((0usize..3, 1usize..3), 0..40).prop_map(|v| {
        v.into_iter()
            .map(|(f, step)| {
                Move::new(Peg::from_index(f), Peg::from_index((f + step) % 3)).unwrap()
            })
            .collect()
    })
}

pub fn mirror_invariants(cases: u32) -> SuiteResult {
    run(
        cases,
        (legal_state(8, 3), mirror_strategy(), move_sequence()),
        |((model, s), m, seq)| {
            prop_assert_eq!(m.mirror_reverse(&m.mirror_reverse(&seq)), seq.clone());
            prop_assert_eq!(m.mirror_state(&m.mirror_state(&s)), s.clone());
            prop_assert!(model.is_legal_state(&m.mirror_state(&s)));
            // s --mv--> t implies σ(t) --mirror(mv)--> σ(s)
            for mv in model.legal_moves(&s) {
                let t = model.apply(&s, mv).unwrap();
                let back = model.apply(&m.mirror_state(&t), m.mirror_move(mv));
                prop_assert_eq!(back, Ok(m.mirror_state(&s)));
            }
            prop_assert!(is_symmetric(&concat_mirror(&seq, m), m));
            Ok(())
        },
    )?;
    Ok(format!(
        "{cases} random legal states, mirrors and move lists"
    ))
}

fn concat_mirror(seq: &MoveSequence, m: Mirror) -> MoveSequence {
    let mut out = seq.clone();
    out.extend_from(&m.mirror_reverse(seq));
    out
}

pub fn move_rules(cases: u32) -> SuiteResult {
    run(
        cases,
        (legal_state(8, 3), 0u8..64),
        |((relaxed, s), mask)| {
            let model = Model::new(MoveGraph::from_mask(mask), relaxed.distance);
            let listed = model.legal_moves(&s);
            for from in Peg::ALL {
                for to in Peg::ALL.into_iter().filter(|&t| t != from) {
                    let mv = Move::new(from, to).unwrap();
                    match model.apply(&s, mv) {
                        Ok(t) => {
                            prop_assert!(listed.contains(&mv));
                            prop_assert_eq!(t.disc_count(), s.disc_count());
                            prop_assert!(model.is_legal_state(&t));
                            prop_assert_eq!(t.top(to), s.top(from));
                            // legality only grows with the distance
                            prop_assert!(Model::new(model.graph, model.distance + 1)
                                .apply(&s, mv)
                                .is_ok());
                        }
                        Err(_) => prop_assert!(!listed.contains(&mv)),
                    }
                }
            }
            Ok(())
        },
    )?;
    Ok(format!(
        "{cases} random states under random digraphs and distances"
    ))
}

/// Oracle distances never grow when the placement distance grows.
pub fn distance_monotone(n_max: usize) -> SuiteResult {
    let cfg = SearchConfig::default().without_witness();
    let mut checked = 0;
    for n in 1..=n_max {
        let start = State::standard(n, Peg::ONE);
        for goal in [
            GoalPredicate::StandardOn(Peg::TWO),
            GoalPredicate::AllOn(Peg::TWO),
        ] {
            let mut prev = u64::MAX;
            for c in 0..=4 {
                let d = bfs_distance(&Model::relaxed(c), &start, &goal, cfg)
                    .map_err(|e| e.to_string())?
                    .distance
                    .ok_or("unreachable goal on the complete graph")?;
                if d > prev {
                    return Err(format!(
                        "n={n} {goal:?}: distance {d} at C={c} exceeds {prev} at C={}",
                        c - 1
                    ));
                }
                prev = d;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} oracle distances, C = 0..4, n <= {n_max}"
    ))
}

pub fn count_tables_monotone(n_max: usize) -> SuiteResult {
    for g in strongly_connected_graphs() {
        let t = eval_move_counts(g, n_max).map_err(|e| e.to_string())?;
        for &(i, j) in &PAIRS {
            for n in 0..n_max {
                if t.get(i, j, n + 1) <= t.get(i, j, n) {
                    return Err(format!("graph {g}: N({i},{j},{}) <= N({i},{j},{n})", n + 1));
                }
            }
            // at least the classical count, at most the 3^n - 1 of the sparsest class
            let n = n_max;
            let classical = (BigInt::from(1) << n) - 1;
            let linear = BigInt::from(3).pow(n as u32) - 1;
            let v = BigInt::from(t.get(i, j, n).clone());
            if v < classical || v > linear {
                return Err(format!(
                    "graph {g}: N({i},{j},{n}) = {v} outside [2^n-1, 3^n-1]"
                ));
            }
        }
    }
    for c in 1..=4 {
        let v = conjecture_values(n_max, c).map_err(|e| e.to_string())?;
        if v.b.windows(2).any(|w| w[1] <= w[0]) || v.a.windows(2).any(|w| w[1] <= w[0]) {
            return Err(format!("a_n or b_n not increasing at C={c}"));
        }
    }
    Ok(format!(
        "18 graphs x 6 pairs, n <= {n_max}; a_n, b_n for C = 1..4"
    ))
}

pub fn directed_move_lengths(cases: u32) -> SuiteResult {
    let graphs = strongly_connected_graphs();
    run(
        cases,
        (0..graphs.len(), 0usize..6, 0usize..=12),
        |(gi, pair, n)| {
            let g = graphs[gi];
            let (from, to) = PAIRS[pair];
            let seq = directed_move(g, from, to, n).unwrap();
            let t = eval_move_counts(g, n).unwrap();
            prop_assert_eq!(seq.len() as u64, t.get(from, to, n).to_u64().unwrap());
            let end = Model::digraph(g).apply_all(&State::standard(n, from), &seq);
            prop_assert_eq!(end, Ok(State::standard(n, to)));
            Ok(())
        },
    )?;
    Ok(format!("{cases} random (graph, pair, n <= 12)"))
}

pub fn symmetric_constructions(n_max: usize) -> SuiteResult {
    let mut checked = 0;
    for c in 1..=3 {
        let model = Model::relaxed(c);
        for (s, t) in PAIRS {
            let m = Mirror::new(s, t).unwrap();
            for n in 1..=n_max {
                let seq = a_symmetric(n, c, s, t).unwrap();
                let ok = seq.len() % 2 == 1
                    && is_symmetric(&seq, m)
                    && is_symmetric_from(&seq, m, &model, &State::standard(n, s)) == Ok(true)
                    && model.apply_all(&State::standard(n, s), &seq) == Ok(State::standard(n, t));
                if !ok {
                    return Err(format!(
                        "a_symmetric({n}, C={c}, {s}>{t}) is not a symmetric standard transfer"
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} constructions, C = 1..3, n <= {n_max}, all six peg pairs"
    ))
}

/// Projection checked on oracle witnesses and constructive transfers.
pub fn projection(n_max: usize) -> SuiteResult {
    let cfg = SearchConfig::default();
    let mut checked = 0;
    let models = [
        Model::classical(),
        Model::relaxed(1),
        Model::relaxed(2),
        Model::relaxed(3),
        Model::digraph(MoveGraph::cycle()),
        Model::digraph(MoveGraph::five_edge()),
    ];
    for model in models {
        for n in 1..=n_max {
            for (start, seq) in projection_corpus(&model, n, cfg).map_err(|e| e.to_string())? {
                check_projection(&model, &start, &seq)
                    .map_err(|e| format!("model {model:?}, n={n}, start {start}: {e}"))?;
                checked += 1;
            }
        }
    }
    if checked < 100 {
        return Err(format!("only {checked} witnesses generated"));
    }
    Ok(format!("{checked} witnesses over 6 models, n <= {n_max}"))
}

/// Distance of the consecutive ratio from the governing root shrinks
/// monotonically from some `n0 <= 20` up to `n_max`.
pub fn growth_error_decreasing(n_max: usize) -> SuiteResult {
    let root = five_edge_denominator()
        .reciprocal()
        .greatest_real_root(&BigRational::new(1.into(), BigInt::from(10).pow(15)))
        .map_err(|e| e.to_string())?
        .ok_or("no real root")?
        .midpoint();
    let table = eval_move_counts(MoveGraph::five_edge(), n_max + 1).map_err(|e| e.to_string())?;
    let (i, j) = GROWTH_PAIR;
    let errors: Vec<BigRational> = (1..=n_max)
        .map(|n| {
            let r = BigRational::new(
                BigInt::from(table.get(i, j, n + 1).clone()),
                BigInt::from(table.get(i, j, n).clone()),
            );
            (r - &root).abs()
        })
        .collect();
    // errors[k] belongs to n = k + 1
    let n0 = (1..=n_max)
        .find(|&n0| {
            errors[n0 - 1..]
                .windows(2)
                .all(|w| w[1] < w[0] || w[1].is_zero())
        })
        .ok_or("error never settles")?;
    if n0 > 20 {
        return Err(format!("error only decreases from n = {n0}"));
    }
    let last = consecutive_ratio(&table, i, j, n_max);
    Ok(format!(
        "monotone from n = {n0} to {n_max}; ratio at {n_max} = {last:.9}"
    ))
}
