//! Exact arithmetic: scalars, polynomials, rational functions, Laurent
//! polynomials and truncated power series over an arbitrary commutative
//! ℚ-algebra.

mod laurent;
mod mpoly;
mod poly;
mod ratfunc;
pub mod scalar;
mod series;

use std::fmt::Debug;

use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::LaurentPolynomial;
pub use mpoly::{Monomial, Polynomial};
pub use poly::UniPoly;
pub use ratfunc::RationalFunction;
pub use scalar::{binomial_generalized, format_scalar, parse_scalar, Scalar};
pub use series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("series mismatch: {0}")]
    Mismatch(String),
    #[error("constant term is not a unit")]
    NonUnitConstant,
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("series is not reversible: {0}")]
    NotReversible(&'static str),
    #[error("denominator {0} is not a monomial")]
    NotLaurent(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A commutative ℚ-algebra with decidable equality.
///
/// Elements know how to produce the zero and one of their own ring, so that
/// rings whose identity carries shape (e.g. a truncated series) can nest.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Multiplication by a rational number.
    fn scale(&self, s: &Scalar) -> Self;
    /// Multiplicative inverse, when this element is a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn ring_is_one(&self) -> bool {
        *self == self.one_like()
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_scalar_like(&self, s: &Scalar) -> Self {
        self.one_like().scale(s)
    }
}

/// Rings with a context-free zero and one.
pub trait ConstCoeff: Coeff {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn from_scalar(s: &Scalar) -> Self {
        Self::ring_one().scale(s)
    }
}

impl Coeff for Scalar {
    fn zero_like(&self) -> Self {
        <Scalar as Zero>::zero()
    }
    fn one_like(&self) -> Self {
        <Scalar as One>::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl ConstCoeff for Scalar {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
}
