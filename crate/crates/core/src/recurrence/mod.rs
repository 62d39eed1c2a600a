//! Exact evaluation of the move-count recurrences and their closed forms.
//!
//! All counts are arbitrary-precision integers; closed forms are evaluated in
//! exact quadratic fields so equality checks never involve floating point.

mod closed_forms;
mod quad;
mod roots;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub use closed_forms::{
    ab_closed_form, closed_form_chord, closed_form_cycle, closed_form_linear, cycle_class,
    AbSequence, CycleClass,
};
pub use quad::{is_square_free, QuadValue};
pub use roots::{bisect_sign_change, Polynomial, RootBracket};

use crate::model::{pair_index, MoveGraph, Peg, PAIRS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("move graph {0} is not strongly connected")]
    NotStronglyConnected(MoveGraph),
    #[error("source and target are both peg {0}")]
    SamePeg(Peg),
    #[error("placement distance must be at least 1")]
    ZeroDistance,
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("no sign change on the interval")]
    NoSignChange,
}

/// `N(i, j, n)` for the six ordered pairs and `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    graph: MoveGraph,
    rows: Vec<[BigUint; 6]>,
}

impl CountTable {
    pub fn graph(&self) -> MoveGraph {
        self.graph
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, from: Peg, to: Peg, n: usize) -> &BigUint {
        &self.rows[n][pair_index(from, to)]
    }

    /// Row `n`, columns in the order of [`PAIRS`].
    pub fn row(&self, n: usize) -> &[BigUint; 6] {
        &self.rows[n]
    }

    pub fn column(&self, from: Peg, to: Peg) -> Vec<&BigUint> {
        let idx = pair_index(from, to);
        self.rows.iter().map(|row| &row[idx]).collect()
    }
}

/// Iterates the coupled recurrence: with `k` the third peg,
/// `N(i,j,n) = N(i,k,n-1) + N(k,j,n-1) + 1` if `i>j` is an edge, and
/// `N(i,j,n) = 2N(i,j,n-1) + N(j,i,n-1) + 2` otherwise.
pub fn eval_move_counts(graph: MoveGraph, n_max: usize) -> Result<CountTable, RecurrenceError> {
    if !graph.is_strongly_connected() {
        return Err(RecurrenceError::NotStronglyConnected(graph));
    }
    let mut rows: Vec<[BigUint; 6]> = Vec::with_capacity(n_max + 1);
    rows.push(Default::default());
    for _ in 1..=n_max {
        let prev = rows.last().unwrap();
        let at = |i: Peg, j: Peg| &prev[pair_index(i, j)];
        let next: [BigUint; 6] = PAIRS.map(|(i, j)| {
            let k = Peg::third(i, j);
            if graph.contains(i, j) {
                at(i, k) + at(k, j) + 1u32
            } else {
                at(i, j) * 2u32 + at(j, i) + 2u32
            }
        });
        rows.push(next);
    }
    Ok(CountTable { graph, rows })
}

/// Conjectured optimal lengths for placement distance `C`:
/// `b_n = 2 b_{n-C-1} + C + 1` with `b_m = m` for `m <= C+1`, and
/// `a_n = 2 b_{n-1} + 1`, `a_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureValues {
    pub distance: u32,
    pub a: Vec<BigUint>,
    pub b: Vec<BigUint>,
}

pub fn conjecture_values(n_max: usize, distance: u32) -> Result<ConjectureValues, RecurrenceError> {
    if distance == 0 {
        return Err(RecurrenceError::ZeroDistance);
    }
    let block = distance as usize + 1;
    let b = b_sequence(n_max, block);
    let mut a = Vec::with_capacity(n_max + 1);
    a.push(BigUint::zero());
    for n in 1..=n_max {
        a.push(&b[n - 1] * 2u32 + 1u32);
    }
    Ok(ConjectureValues { distance, a, b })
}

fn b_sequence(n_max: usize, block: usize) -> Vec<BigUint> {
    let mut b: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = if n <= block {
            BigUint::from(n)
        } else {
            &b[n - block] * 2u32 + block
        };
        b.push(v);
    }
    b
}

/// Lengths of the five-step standard transfer:
/// `x_n = 2 b_{n-k} + x_{n-k} + 2k` for `n > k`, `x_m = 2m - 1` for `1 <= m <= k`.
pub fn q_lengths(n_max: usize, distance: u32) -> Result<Vec<BigUint>, RecurrenceError> {
    if distance == 0 {
        return Err(RecurrenceError::ZeroDistance);
    }
    let block = distance as usize + 1;
    let b = b_sequence(n_max, block);
    let mut x: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = if n == 0 {
            BigUint::zero()
        } else if n <= block {
            BigUint::from(2 * n - 1)
        } else {
            &b[n - block] * 2u32 + &x[n - block] + 2 * block
        };
        x.push(v);
    }
    Ok(x)
}

/// Pair sampled for the growth-rate report.
pub const GROWTH_PAIR: (Peg, Peg) = (Peg::TWO, Peg::ONE);
/// Index at which the consecutive ratio `N(n+1)/N(n)` is taken.
pub const GROWTH_SAMPLE_N: usize = 40;
/// How close the empirical ratio must be to a root to count as a match.
pub const GROWTH_MATCH_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GoverningRoot {
    /// Greatest root of the denominator factor `2x^3 - 4x^2 - x + 1`.
    Denominator,
    /// Greatest root of its reciprocal `x^3 - x^2 - 4x + 2`.
    Reciprocal,
    Neither,
}

/// Growth of the move counts on the complete-minus-one-edge graph.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub graph: MoveGraph,
    /// Greatest real root of `2x^3 - 4x^2 - x + 1` (the quoted ~2.12).
    pub denominator_root: RootBracket,
    /// Greatest real root of `x^3 - x^2 - 4x + 2`, i.e. one over the
    /// smallest positive root of the denominator.
    pub reciprocal_root: RootBracket,
    pub sample_n: usize,
    pub ratio: f64,
    pub governing: GoverningRoot,
    /// Set when the growth is not governed by the ~2.12 root.
    pub discrepancy: Option<String>,
}

/// Denominator factor `2x^3 - 4x^2 - x + 1` of the 5-edge generating functions.
pub fn five_edge_denominator() -> Polynomial {
    Polynomial::from_ints(&[1, -1, -4, 2])
}

pub fn growth_rate_5edge(tolerance: &BigRational) -> Result<GrowthReport, RecurrenceError> {
    let denominator = five_edge_denominator();
    let reciprocal = denominator.reciprocal();
    let denominator_root = denominator
        .greatest_real_root(tolerance)?
        .expect("cubic has a real root");
    let reciprocal_root = reciprocal
        .greatest_real_root(tolerance)?
        .expect("cubic has a real root");

    let graph = MoveGraph::five_edge();
    let table = eval_move_counts(graph, GROWTH_SAMPLE_N + 1)?;
    let ratio = consecutive_ratio(&table, GROWTH_PAIR.0, GROWTH_PAIR.1, GROWTH_SAMPLE_N);

    let near = |root: &RootBracket| (ratio - root.midpoint_f64()).abs() < GROWTH_MATCH_TOLERANCE;
    let governing = if near(&reciprocal_root) {
        GoverningRoot::Reciprocal
    } else if near(&denominator_root) {
        GoverningRoot::Denominator
    } else {
        GoverningRoot::Neither
    };
    let discrepancy = (governing != GoverningRoot::Denominator).then(|| {
        format!(
            "counts grow like {:.6}^n (greatest root of x^3-x^2-4x+2), not like the greatest root {:.6} of 2x^3-4x^2-x+1",
            reciprocal_root.midpoint_f64(),
            denominator_root.midpoint_f64()
        )
    });
    Ok(GrowthReport {
        graph,
        denominator_root,
        reciprocal_root,
        sample_n: GROWTH_SAMPLE_N,
        ratio,
        governing,
        discrepancy,
    })
}

/// `N(i,j,n+1) / N(i,j,n)` as a float (exact division, then rounded).
pub fn consecutive_ratio(table: &CountTable, from: Peg, to: Peg, n: usize) -> f64 {
    let num = table.get(from, to, n + 1);
    let den = table.get(from, to, n);
    BigRational::new(num.clone().into(), den.clone().into())
        .to_f64()
        .unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn complete_graph_is_powers_of_two() {
        let t = eval_move_counts(MoveGraph::complete(), 20).unwrap();
        for (from, to) in PAIRS {
            for n in 0..=20 {
                assert_eq!(t.get(from, to, n), &u((1 << n) - 1));
            }
        }
    }

    #[test]
    fn recurrence_step_examples() {
        let five = eval_move_counts(MoveGraph::five_edge(), 6).unwrap();
        assert_eq!(five.get(Peg::TWO, Peg::ONE, 1), &u(2));
        assert_eq!(five.get(Peg::ONE, Peg::TWO, 1), &u(1));
        assert_eq!(five.get(Peg::TWO, Peg::ONE, 2), &u(7));
        let col: Vec<u64> = five
            .column(Peg::TWO, Peg::ONE)
            .iter()
            .map(|v| v.to_u64().unwrap())
            .collect();
        assert_eq!(col, vec![0, 2, 7, 19, 47, 113, 267]);

        let cyc = eval_move_counts(MoveGraph::cycle(), 2).unwrap();
        assert_eq!(cyc.get(Peg::TWO, Peg::ONE, 1), &u(2));
        assert_eq!(cyc.get(Peg::ONE, Peg::TWO, 2), &u(5));

        let broken = MoveGraph::of(&[(1, 2), (2, 1)]);
        assert!(eval_move_counts(broken, 3).is_err());
    }

    #[test]
    fn conjecture_examples() {
        let c2 = conjecture_values(8, 2).unwrap();
        assert_eq!(c2.b[3], u(3));
        assert_eq!(c2.b[4], u(5));
        assert_eq!(c2.b[6], u(9));
        assert_eq!(c2.a[4], u(7));

        let c1 = conjecture_values(10, 1).unwrap();
        let b: Vec<u64> = c1.b.iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(b, vec![0, 1, 2, 4, 6, 10, 14, 22, 30, 46, 62]);
        for c in 1..=5 {
            let v = conjecture_values(c as usize + 1, c).unwrap();
            for n in 0..=c as usize + 1 {
                assert_eq!(v.b[n], u(n as u64));
            }
        }
        assert_eq!(conjecture_values(3, 0), Err(RecurrenceError::ZeroDistance));
    }

    #[test]
    fn q_length_examples() {
        let x = q_lengths(7, 2).unwrap();
        assert_eq!(x[4], u(9));
        assert_eq!(x[7], u(25));
        assert_eq!(q_lengths(2, 1).unwrap()[2], u(3));
    }

    #[test]
    fn growth_report_flags_the_reciprocal_root() {
        let tol = BigRational::new(1.into(), 1_000_000.into());
        let report = growth_rate_5edge(&tol).unwrap();
        let d = report.denominator_root.midpoint_f64();
        assert!((2.11..=2.13).contains(&d));
        assert!(report.denominator_root.width() < tol);
        assert_eq!(report.governing, GoverningRoot::Reciprocal);
        assert!(report.discrepancy.is_some());
        assert!(growth_rate_5edge(&BigRational::zero()).is_err());
    }
}
