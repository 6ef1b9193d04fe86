//! Exact arithmetic substrate: rational scalars, dense univariate polynomials
//! over the rationals and reduced rational functions.
//!
//! Every value here is immutable once built and every operation is a pure
//! function, so all types are `Send + Sync` and can be shared freely.

mod gcd;
mod poly;
mod ratfn;
mod serial;

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use gcd::{integer_content, poly_gcd};
pub use poly::Poly;
pub use ratfn::{ArithKind, RatFn};
pub use serial::parse_rat;

/// Arbitrary-precision rational scalar. `num-rational` keeps it reduced with a
/// positive denominator, and zero is `0/1`.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Shorthand for `num/den` as a [`Rat`]. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at the origin; no Taylor expansion at 0")]
    PoleAtOrigin,
    #[error("cannot divide by x^{power}: numerator has valuation {valuation}")]
    NotDivisibleByXPower { power: usize, valuation: usize },
    #[error("malformed coefficient {0:?}")]
    Parse(String),
}

/// Degree of a polynomial or rational function.
///
/// `NegInfinity` is the degree of zero and sorts below every finite degree,
/// so `deg(a * b) = deg(a) + deg(b)` holds without special cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

/// `a - b` where `b` must be finite (a denominator degree).
impl Sub for Degree {
    type Output = Degree;

    fn sub(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a - b),
            (Degree::NegInfinity, Degree::Finite(_)) => Degree::NegInfinity,
            (_, Degree::NegInfinity) => panic!("subtracting the degree of the zero polynomial"),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_order_and_sum() {
        assert!(Degree::NegInfinity < Degree::Finite(-1000));
        assert_eq!(Degree::Finite(2) + Degree::Finite(3), Degree::Finite(5));
        assert_eq!(Degree::NegInfinity + Degree::Finite(3), Degree::NegInfinity);
        assert_eq!(Degree::Finite(1) - Degree::Finite(3), Degree::Finite(-2));
        assert_eq!(Degree::NegInfinity - Degree::Finite(3), Degree::NegInfinity);
    }
}
