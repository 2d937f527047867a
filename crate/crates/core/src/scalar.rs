//! Scalar abstractions.
//!
//! Lie-theoretic computations run over an [`ExactScalar`] (a rational field
//! with exact comparison). The abelian model numerics run over any
//! [`num_traits::Float`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An ordered field with exact arithmetic.
///
/// Every sign decision made by the index formulas goes through this trait,
/// so implementors must never round.
pub trait ExactScalar:
    Clone + Debug + Display + PartialOrd + Ord + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_int(n: i64) -> Self;

    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn is_integral(&self) -> bool;

    /// Integer value if integral and representable as `i64`.
    fn to_int(&self) -> Option<i64>;

    /// Exact square root when `self` is the square of a rational.
    fn exact_sqrt(&self) -> Option<Self>;

    fn numer_denom(&self) -> (BigInt, BigInt);
}

impl ExactScalar for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_int(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (n, d) = (*self.numer(), *self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (rn * rn == n && rd * rd == d).then(|| Ratio::new(rn, rd))
    }

    fn numer_denom(&self) -> (BigInt, BigInt) {
        (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl ExactScalar for BigRational {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (rn, rd) = (self.numer().sqrt(), self.denom().sqrt());
        (&rn * &rn == *self.numer() && &rd * &rd == *self.denom()).then(|| Ratio::new(rn, rd))
    }

    fn numer_denom(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}
