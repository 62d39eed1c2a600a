//! Real root isolation for small integer polynomials.
//!
//! Everything is exact: signs are evaluated on rationals, a Sturm chain pins
//! the greatest real root into an interval holding no other root, and
//! sign-change bisection then shrinks it below the requested width.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::RecurrenceError;

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Polynomial {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// From `i64` coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        to_rational(&self.coeffs).eval(x)
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign(&self.eval(x))
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = BigRational::from_integer(
            self.coeffs
                .last()
                .cloned()
                .unwrap_or_else(BigInt::one)
                .abs(),
        );
        let max = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lead)
            .fold(BigRational::zero(), |acc, v| if v > acc { v } else { acc });
        max + BigRational::one()
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let chain = sturm_chain(&to_rational(&self.coeffs));
        variations(&chain, lo).saturating_sub(variations(&chain, hi))
    }

    /// Brackets the greatest real root to width below `tolerance`.
    /// Returns `Ok(None)` for polynomials without real roots.
    pub fn greatest_real_root(
        &self,
        tolerance: &BigRational,
    ) -> Result<Option<RootBracket>, RecurrenceError> {
        check_tolerance(tolerance)?;
        if self.degree().unwrap_or(0) == 0 {
            return Ok(None);
        }
        let bound = self.cauchy_bound();
        let chain = sturm_chain(&to_rational(&self.coeffs));
        let count = |lo: &BigRational, hi: &BigRational| {
            variations(&chain, lo).saturating_sub(variations(&chain, hi))
        };
        let mut lo = -bound.clone();
        let mut hi = bound;
        if count(&lo, &hi) == 0 {
            return Ok(None);
        }
        // shrink until (lo, hi] holds exactly the greatest root
        while count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            if count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if self.sign_at(&hi) == 0 {
            return Ok(Some(RootBracket::new(self, hi.clone(), hi)));
        }
        // a multiple root need not change sign; Sturm bisection still converges
        if self.sign_at(&lo) * self.sign_at(&hi) > 0 {
            while &hi - &lo >= *tolerance {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                if count(&mid, &hi) >= 1 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(Some(RootBracket::new(self, lo, hi)));
        }
        bisect_sign_change(self, lo, hi, tolerance).map(Some)
    }
}

/// Sign-change bisection on `[lo, hi]`.
pub fn bisect_sign_change(
    poly: &Polynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    tolerance: &BigRational,
) -> Result<RootBracket, RecurrenceError> {
    check_tolerance(tolerance)?;
    let mut s_lo = poly.sign_at(&lo);
    let s_hi = poly.sign_at(&hi);
    if s_lo == 0 {
        return Ok(RootBracket::new(poly, lo.clone(), lo));
    }
    if s_hi == 0 {
        return Ok(RootBracket::new(poly, hi.clone(), hi));
    }
    if s_lo == s_hi {
        return Err(RecurrenceError::NoSignChange);
    }
    let two = BigRational::from_integer(2.into());
    while &hi - &lo >= *tolerance {
        let mid = (&lo + &hi) / &two;
        let s_mid = poly.sign_at(&mid);
        if s_mid == 0 {
            return Ok(RootBracket::new(poly, mid.clone(), mid));
        }
        if s_mid == s_lo {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootBracket::new(poly, lo, hi))
}

fn check_tolerance(tolerance: &BigRational) -> Result<(), RecurrenceError> {
    if tolerance.is_positive() {
        Ok(())
    } else {
        Err(RecurrenceError::NonPositiveTolerance)
    }
}

/// Rational interval `[lo, hi]` around a real root of `coefficients`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootBracket {
    /// Lowest degree first.
    #[serde(serialize_with = "ser_ints")]
    pub coefficients: Vec<BigInt>,
    #[serde(serialize_with = "ser_rat")]
    pub lo: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub hi: BigRational,
}

impl RootBracket {
    fn new(poly: &Polynomial, lo: BigRational, hi: BigRational) -> RootBracket {
        RootBracket {
            coefficients: poly.coeffs.clone(),
            lo,
            hi,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

fn ser_rat<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(v.to_f64().unwrap_or(f64::NAN))
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone)]
struct RatPoly(Vec<BigRational>);

fn to_rational(coeffs: &[BigInt]) -> RatPoly {
    RatPoly(
        coeffs
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect(),
    )
}

impl RatPoly {
    fn trim(mut self) -> RatPoly {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> RatPoly {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn rem(&self, divisor: &RatPoly) -> RatPoly {
        let mut rem = self.0.clone();
        let dl = divisor.0.len();
        let lead = divisor.0.last().expect("non-zero divisor");
        while rem.len() >= dl && !rem.is_empty() {
            let factor = rem.last().unwrap() / lead;
            let shift = rem.len() - dl;
            for (i, c) in divisor.0.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        RatPoly(rem).trim()
    }
}

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone().trim()];
    let d = chain[0].derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(RatPoly(r.0.into_iter().map(|c| -c).collect()));
    }
    chain
}

fn variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign(&p.eval(x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
