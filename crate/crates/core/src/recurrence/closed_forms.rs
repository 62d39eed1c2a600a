//! Closed forms for the move counts of the non-trivial digraph classes and
//! for the distance-1 standard transfer.
//!
//! Each formula is transcribed as published, coefficient by coefficient, and
//! evaluated in the exact field it lives in. The recurrence iteration in the
//! parent module is the independent route they are compared against.

use num_bigint::BigUint;
use num_traits::One;

use super::quad::QuadValue;
use super::RecurrenceError;
use crate::model::Peg;

fn q(a: i64, b: i64, d: u32) -> QuadValue {
    QuadValue::from_ints(a, b, d)
}

fn check_pair(from: Peg, to: Peg) -> Result<(), RecurrenceError> {
    if from == to {
        Err(RecurrenceError::SamePeg(from))
    } else {
        Ok(())
    }
}

/// Direction of an ordered pair relative to the cycle 1>2, 2>3, 3>1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleClass {
    /// (1,2), (2,3), (3,1): one edge along the cycle.
    With,
    /// (2,1), (3,2), (1,3): two edges along the cycle.
    Against,
}

pub fn cycle_class(from: Peg, to: Peg) -> Result<CycleClass, RecurrenceError> {
    check_pair(from, to)?;
    Ok(if (from.number() % 3) + 1 == to.number() {
        CycleClass::With
    } else {
        CycleClass::Against
    })
}

/// Move count for the directed 3-cycle in Q(√3).
///
/// Against the cycle: `(2+√3)/(2√3)·(1+√3)^n − (2−√3)/(2√3)·(1−√3)^n − 1`;
/// with the cycle the leading coefficients become `(1±√3)/(2√3)`.
pub fn closed_form_cycle(from: Peg, to: Peg, n: u32) -> Result<QuadValue, RecurrenceError> {
    let (plus, minus) = match cycle_class(from, to)? {
        CycleClass::Against => (q(2, 1, 3), q(2, -1, 3)),
        CycleClass::With => (q(1, 1, 3), q(1, -1, 3)),
    };
    let denom = q(0, 2, 3);
    let root_plus = q(1, 1, 3).pow(n);
    let root_minus = q(1, -1, 3).pow(n);
    Ok(plus / &denom * root_plus - minus / &denom * root_minus - QuadValue::one(3))
}

/// Move count for the linear graph with centre peg 1: `3^n − 1` between the
/// two ends, `(3^n − 1)/2` whenever the centre is involved.
pub fn closed_form_linear(from: Peg, to: Peg, n: u32) -> Result<BigUint, RecurrenceError> {
    check_pair(from, to)?;
    let full = BigUint::from(3u32).pow(n) - BigUint::one();
    if from != Peg::ONE && to != Peg::ONE {
        Ok(full)
    } else {
        Ok(full / 2u32)
    }
}

/// Move count for E = {1>2, 1>3, 3>1, 2>3} in Q(√17), with roots
/// `r± = (1 ± √17)/2`.
pub fn closed_form_chord(from: Peg, to: Peg, n: u32) -> Result<QuadValue, RecurrenceError> {
    check_pair(from, to)?;
    let sqrt17 = QuadValue::sqrt(17);
    let half = QuadValue::rational(num_rational::BigRational::new(1.into(), 2.into()), 17);
    let r_plus = (q(1, 1, 17) * &half).pow(n);
    let r_minus = (q(1, -1, 17) * &half).pow(n);
    // c0 - (x - y√17)/(den√17)·r−^n + (x + y√17)/(den√17)·r+^n
    let standard = |c0: QuadValue, x: i64, y: i64, den: i64| {
        let scale = QuadValue::integer(den, 17) * &sqrt17;
        c0 - q(x, -y, 17) / &scale * &r_minus + q(x, y, 17) / &scale * &r_plus
    };
    let quarter =
        |num: i64| QuadValue::rational(num_rational::BigRational::new(num.into(), 4.into()), 17);
    Ok(match (from.number(), to.number()) {
        (1, 2) | (2, 3) => standard(quarter(-3), 11, 3, 8),
        (3, 2) | (2, 1) => standard(quarter(-5), 21, 5, 8),
        (1, 3) => standard(quarter(-2), 5, 1, 4),
        (3, 1) => {
            let plus = q(4, 1, 17) / &sqrt17;
            let minus = q(4, -1, 17) / &sqrt17;
            if n == 0 {
                (QuadValue::integer(1, 17) - QuadValue::integer(3, 17) + plus - minus) * &half
            } else {
                (QuadValue::integer(-3, 17) + plus * &r_plus - minus * &r_minus) * &half
            }
        }
        _ => unreachable!("pair checked above"),
    })
}

/// Which of the two distance-1 sequences to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbSequence {
    /// Standard-to-standard transfer length.
    A,
    /// Transfer to a single peg in any legal order.
    B,
}

/// `a_n = (3+2√2)/2·(√2)^n + (3−2√2)/2·(−√2)^n − 3` in Q(√2), and
/// `b_n = (a_{n+1} − 1)/2` from `a_{n+1} = 2 b_n + 1`.
pub fn ab_closed_form(n: u32, which: AbSequence) -> QuadValue {
    match which {
        AbSequence::A => a_closed(n),
        AbSequence::B => (a_closed(n + 1) - QuadValue::one(2)) / QuadValue::integer(2, 2),
    }
}

fn a_closed(n: u32) -> QuadValue {
    let two = QuadValue::integer(2, 2);
    let first = q(3, 2, 2) / &two * QuadValue::sqrt(2).pow(n);
    let second = q(3, -2, 2) / &two * (-QuadValue::sqrt(2)).pow(n);
    first + second - QuadValue::integer(3, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(v: &QuadValue) -> i64 {
        v.to_integer().expect("integral").try_into().unwrap()
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(int(&closed_form_cycle(Peg::TWO, Peg::ONE, 1).unwrap()), 2);
        assert_eq!(int(&closed_form_cycle(Peg::ONE, Peg::TWO, 1).unwrap()), 1);
        assert_eq!(int(&closed_form_cycle(Peg::ONE, Peg::TWO, 2).unwrap()), 5);
        assert_eq!(int(&closed_form_cycle(Peg::ONE, Peg::TWO, 0).unwrap()), 0);
        assert!(closed_form_cycle(Peg::ONE, Peg::ONE, 1).is_err());
    }

    #[test]
    fn linear_examples() {
        assert_eq!(
            closed_form_linear(Peg::TWO, Peg::THREE, 3).unwrap(),
            BigUint::from(26u32)
        );
        assert_eq!(
            closed_form_linear(Peg::ONE, Peg::TWO, 3).unwrap(),
            BigUint::from(13u32)
        );
        for (from, to) in crate::model::PAIRS {
            assert_eq!(
                closed_form_linear(from, to, 0).unwrap(),
                BigUint::from(0u32)
            );
        }
    }

    #[test]
    fn chord_examples() {
        assert_eq!(int(&closed_form_chord(Peg::THREE, Peg::ONE, 0).unwrap()), 0);
        assert_eq!(int(&closed_form_chord(Peg::ONE, Peg::THREE, 1).unwrap()), 1);
        assert_eq!(int(&closed_form_chord(Peg::THREE, Peg::TWO, 1).unwrap()), 2);
        // sympy-evaluated sequence for N(1,3,n), n = 0..6
        let expected = [0, 1, 3, 9, 23, 61, 155];
        for (n, want) in expected.into_iter().enumerate() {
            assert_eq!(
                int(&closed_form_chord(Peg::ONE, Peg::THREE, n as u32).unwrap()),
                want
            );
        }
    }

    #[test]
    fn ab_examples() {
        assert_eq!(
            ab_closed_form(4, AbSequence::A).to_integer(),
            Some(BigInt::from(9))
        );
        assert_eq!(
            ab_closed_form(3, AbSequence::A).to_integer(),
            Some(BigInt::from(5))
        );
        assert_eq!(
            ab_closed_form(0, AbSequence::A).to_integer(),
            Some(BigInt::from(0))
        );
        assert_eq!(
            ab_closed_form(4, AbSequence::B).to_integer(),
            Some(BigInt::from(6))
        );
        assert_eq!(
            ab_closed_form(0, AbSequence::B).to_integer(),
            Some(BigInt::from(0))
        );
        assert_eq!(
            ab_closed_form(1, AbSequence::B).to_integer(),
            Some(BigInt::from(1))
        );
    }
}
