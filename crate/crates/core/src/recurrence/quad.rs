use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact element `a + b·√d` of the real quadratic field Q(√d).
///
/// `d` is a square-free integer greater than one. Binary operations between
/// values of different fields panic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadValue {
    a: BigRational,
    b: BigRational,
    d: u32,
}

pub fn is_square_free(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QuadValue {
    pub fn new(a: BigRational, b: BigRational, d: u32) -> QuadValue {
        assert!(is_square_free(d), "radicand {d} is not square-free");
        QuadValue { a, b, d }
    }

    pub fn from_ints(a: i64, b: i64, d: u32) -> QuadValue {
        QuadValue::new(rat(a), rat(b), d)
    }

    pub fn rational(a: BigRational, d: u32) -> QuadValue {
        QuadValue::new(a, BigRational::zero(), d)
    }

    pub fn integer(a: i64, d: u32) -> QuadValue {
        QuadValue::from_ints(a, 0, d)
    }

    /// `√d` itself.
    pub fn sqrt(d: u32) -> QuadValue {
        QuadValue::from_ints(0, 1, d)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a - b·√d`.
    pub fn conj(&self) -> QuadValue {
        QuadValue {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a² - d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.d as i64)
    }

    pub fn inverse(&self) -> Option<QuadValue> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let conj = self.conj();
        Some(QuadValue {
            a: conj.a / &norm,
            b: conj.b / norm,
            d: self.d,
        })
    }

    pub fn pow(&self, mut exp: u32) -> QuadValue {
        let mut base = self.clone();
        let mut acc = QuadValue::integer(1, self.d);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.a.to_integer())
    }

    /// Approximate value; exact comparisons should never go through this.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    fn same_field(&self, other: &QuadValue) {
        assert_eq!(
            self.d, other.d,
            "mixing Q(sqrt {}) and Q(sqrt {})",
            self.d, other.d
        );
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*sqrt({})", self.a, sign, self.b.abs(), self.d)
    }
}

impl<'a> Add<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;

    fn add(self, rhs: &QuadValue) -> QuadValue {
        self.same_field(rhs);
        QuadValue {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d,
        }
    }
}

impl<'a> Sub<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;

    fn sub(self, rhs: &QuadValue) -> QuadValue {
        self.same_field(rhs);
        QuadValue {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d,
        }
    }
}

impl<'a> Mul<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;

    fn mul(self, rhs: &QuadValue) -> QuadValue {
        self.same_field(rhs);
        let d = rat(self.d as i64);
        QuadValue {
            a: &self.a * &rhs.a + &self.b * &rhs.b * d,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d,
        }
    }
}

impl<'a> Div<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;

    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadValue) -> QuadValue {
        self.same_field(rhs);
        let inv = rhs.inverse().expect("division by zero in quadratic field");
        self * &inv
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;

    fn neg(self) -> QuadValue {
        QuadValue {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<QuadValue> for QuadValue {
            type Output = QuadValue;
            fn $method(self, rhs: QuadValue) -> QuadValue {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QuadValue> for QuadValue {
            type Output = QuadValue;
            fn $method(self, rhs: &QuadValue) -> QuadValue {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadValue {
    type Output = QuadValue;

    fn neg(self) -> QuadValue {
        -&self
    }
}

impl QuadValue {
    pub fn one(d: u32) -> QuadValue {
        QuadValue::rational(BigRational::one(), d)
    }
}
