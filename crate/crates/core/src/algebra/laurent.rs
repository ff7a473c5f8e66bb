use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::format_scalar;
use super::{Coeff, ConstCoeff, RationalFunction, Scalar, UniPoly};

/// Finite sum of `c_k v^k` with `k` ranging over all integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPolynomial {
    pub fn monomial(c: Scalar, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPolynomial { terms }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_pairs(pairs: &[(i64, Scalar)]) -> Self {
        let mut out = Self::default();
        for (k, c) in pairs {
            out.add_term(*k, c);
        }
        out
    }

    /// `p(v) * v^shift`.
    pub fn from_poly(p: &UniPoly, shift: i64) -> Self {
        let mut out = Self::default();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as i64 + shift, c);
        }
        out
    }

    fn add_term(&mut self, k: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.terms.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some(c)` when this is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn has_negative_powers(&self) -> bool {
        self.min_exponent().is_some_and(|k| k < 0)
    }

    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        if x.is_zero() && self.has_negative_powers() {
            return None;
        }
        let mut acc = Scalar::zero();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                num_traits::pow(x.clone(), *k as usize)
            } else {
                num_traits::pow(x.recip(), (-*k) as usize)
            };
            acc += c * p;
        }
        Some(acc)
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let lo = self.min_exponent().unwrap_or(0).min(0);
        let mut coeffs = vec![Scalar::zero(); (self.max_exponent().unwrap_or(0) - lo + 1) as usize];
        for (k, c) in &self.terms {
            coeffs[(k - lo) as usize] = c.clone();
        }
        let num = RationalFunction::from_poly(UniPoly::new(coeffs));
        &num * &RationalFunction::monomial(Scalar::one(), lo)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| match k {
                0 => format_scalar(c),
                1 => format!("{}*{var}", format_scalar(c)),
                _ => format!("{}*{var}^{k}", format_scalar(c)),
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::default();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Coeff for LaurentPolynomial {
    fn zero_like(&self) -> Self {
        Self::default()
    }
    fn one_like(&self) -> Self {
        Self::constant(Scalar::one())
    }
    fn ring_is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
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
            return Self::default();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }
    /// Only monomials are units.
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.recip(), -k))
    }
}

impl ConstCoeff for LaurentPolynomial {
    fn ring_zero() -> Self {
        Self::default()
    }
    fn ring_one() -> Self {
        Self::constant(Scalar::one())
    }
}
