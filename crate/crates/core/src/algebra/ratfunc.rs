use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraError, Coeff, ConstCoeff, LaurentPolynomial, Scalar, UniPoly};

/// Reduced quotient of univariate polynomials. The denominator is monic and
/// coprime to the numerator, so equal values compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::default())
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::constant(Scalar::one()),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// `c * v^k` for any integer `k`.
    pub fn monomial(c: Scalar, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(UniPoly::monomial(c, k as usize))
        } else {
            Self::normalize(UniPoly::constant(c), UniPoly::monomial(Scalar::one(), (-k) as usize))
        }
    }

    /// `1 - c * v^k`, the typical factor of a character computation.
    pub fn one_minus_monomial(c: Scalar, k: i64) -> Self {
        &Self::one() - &Self::monomial(c, k)
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact Laurent expansion; fails unless the denominator is `v^k`.
    pub fn to_laurent(&self) -> Result<LaurentPolynomial, AlgebraError> {
        match self.den.monomial_degree() {
            Some(k) => Ok(LaurentPolynomial::from_poly(&self.num, -(k as i64))),
            None => Err(AlgebraError::NotLaurent(self.den.display_with("v"))),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.den.is_constant() {
            self.num.display_with(var)
        } else {
            format!("({})/({})", self.num.display_with(var), self.den.display_with(var))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        let inv = rhs.try_inverse().expect("division by zero rational function");
        self * &inv
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Coeff for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn ring_is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
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
        if s.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::normalize(self.den.clone(), self.num.clone()))
    }
}

impl ConstCoeff for RationalFunction {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_one() -> Self {
        Self::one()
    }
}
