use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{int, ratio};
use super::{AlgebraError, Coeff, ConstCoeff, Scalar};

/// Power series in one named variable, known exactly up to and including
/// `z^order`. Every operation keeps the order fixed; binary operations on
/// series of different variable or order are rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R> {
    var: String,
    coeffs: Vec<R>,
}

impl<R: Coeff> TruncatedSeries<R> {
    /// Builds a series from leading coefficients, padding with `zero` or
    /// dropping terms past `order`.
    pub fn new(var: &str, order: usize, mut coeffs: Vec<R>, zero: &R) -> Self {
        coeffs.resize(order + 1, zero.zero_like());
        TruncatedSeries {
            var: var.to_string(),
            coeffs,
        }
    }

    pub fn from_fn(var: &str, order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            var: var.to_string(),
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(var: &str, order: usize, c: R) -> Self {
        let zero = c.zero_like();
        Self::new(var, order, vec![c], &zero)
    }

    /// `c * var^k` (zero when `k > order`).
    pub fn monomial(var: &str, order: usize, c: R, k: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero.clone(); k.min(order + 1)];
        coeffs.push(c);
        Self::new(var, order, coeffs, &zero)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^n`; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn zero_series(&self) -> Self {
        self.map(|c| c.zero_like())
    }

    pub fn one_series(&self) -> Self {
        Self::constant(&self.var, self.order(), self.coeffs[0].one_like())
    }

    /// The series `var` itself over the same ring.
    pub fn identity_series(&self) -> Self {
        Self::monomial(&self.var, self.order(), self.coeffs[0].one_like(), 1)
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    /// Drop (or zero-extend) to another order. Extending is only sound when
    /// the caller knows the higher coefficients vanish.
    pub fn with_order(&self, order: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        Self::new(&self.var, order, self.coeffs.clone(), &zero)
    }

    /// Index of the first differing coefficient.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeffs.get(i) != other.coeffs.get(i))
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var != other.var {
            return Err(AlgebraError::Mismatch(format!(
                "variables {} and {}",
                self.var, other.var
            )));
        }
        if self.order() != other.order() {
            return Err(AlgebraError::Mismatch(format!(
                "orders {} and {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, R::ring_add))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, R::ring_sub))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let n = self.order();
        let mut out = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.ring_is_zero() {
                    out[i + j] = out[i + j].ring_add(&a.ring_mul(b));
                }
            }
        }
        Ok(TruncatedSeries {
            var: self.var.clone(),
            coeffs: out,
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map(|x| x.ring_mul(c))
    }

    /// Multiply by `1 + a*var` in linear time.
    pub fn mul_linear(&self, a: &R) -> Self {
        let mut out = self.coeffs.clone();
        for k in (1..out.len()).rev() {
            out[k] = out[k].ring_add(&a.ring_mul(&self.coeffs[k - 1]));
        }
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: out,
        }
    }

    /// Divide by `1 + a*var` in linear time.
    pub fn div_linear(&self, a: &R) -> Self {
        let mut out = self.coeffs.clone();
        for k in 1..out.len() {
            out[k] = out[k].ring_sub(&a.ring_mul(&out[k - 1]));
        }
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: out,
        }
    }

    /// `f(-var)`.
    pub fn alternate(&self) -> Self {
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.ring_neg() } else { c.clone() })
                .collect(),
        }
    }

    /// Formal derivative, known to one order less.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return self.zero_series();
        }
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: (1..=n).map(|k| self.coeffs[k].scale(&int(k as i64))).collect(),
        }
    }

    pub fn reciprocal(&self) -> Result<Self, AlgebraError> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(AlgebraError::NonUnitConstant)?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for m in 1..=n {
            let mut s = inv0.zero_like();
            for k in 1..=m {
                if !self.coeffs[k].ring_is_zero() {
                    s = s.ring_add(&self.coeffs[k].ring_mul(&g[m - k]));
                }
            }
            g.push(s.ring_mul(&inv0).ring_neg());
        }
        Ok(TruncatedSeries {
            var: self.var.clone(),
            coeffs: g,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_mul(&other.reciprocal()?)
    }

    /// `exp(f)` for `f(0) = 0`, via `g' = f' g`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].ring_is_zero() {
            return Err(AlgebraError::BadConstantTerm("exp needs constant term 0"));
        }
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(self.coeffs[0].one_like());
        for m in 1..=n {
            let mut s = self.coeffs[0].zero_like();
            for k in 1..=m {
                if !self.coeffs[k].ring_is_zero() {
                    s = s.ring_add(&self.coeffs[k].ring_mul(&g[m - k]).scale(&int(k as i64)));
                }
            }
            g.push(s.scale(&ratio(1, m as i64)));
        }
        Ok(TruncatedSeries {
            var: self.var.clone(),
            coeffs: g,
        })
    }

    /// `log(f)` for `f(0) = 1`, via `f h' = f'`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].ring_is_one() {
            return Err(AlgebraError::BadConstantTerm("log needs constant term 1"));
        }
        let n = self.order();
        let mut h: Vec<R> = Vec::with_capacity(n + 1);
        h.push(self.coeffs[0].zero_like());
        for m in 1..=n {
            let mut s = self.coeffs[m].scale(&int(m as i64));
            for (k, hk) in h.iter().enumerate().skip(1) {
                if !self.coeffs[m - k].ring_is_zero() {
                    s = s.ring_sub(&hk.ring_mul(&self.coeffs[m - k]).scale(&int(k as i64)));
                }
            }
            h.push(s.scale(&ratio(1, m as i64)));
        }
        Ok(TruncatedSeries {
            var: self.var.clone(),
            coeffs: h,
        })
    }

    /// `f^alpha = exp(alpha * log f)` for `f(0) = 1` and any ring element `alpha`.
    pub fn pow(&self, alpha: &R) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].ring_is_one() {
            return Err(AlgebraError::BadConstantTerm("power needs constant term 1"));
        }
        self.log()?.mul_coeff(alpha).exp()
    }

    pub fn pow_scalar(&self, alpha: &Scalar) -> Result<Self, AlgebraError> {
        self.pow(&self.coeffs[0].from_scalar_like(alpha))
    }

    /// Integer power by repeated squaring; negative powers need a unit constant.
    pub fn pow_int(&self, k: i64) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.reciprocal()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one_series();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `f(g(z))`; the result lives in `g`'s variable.
    pub fn compose(&self, g: &Self) -> Result<Self, AlgebraError> {
        if self.order() != g.order() {
            return Err(AlgebraError::Mismatch(format!(
                "orders {} and {}",
                self.order(),
                g.order()
            )));
        }
        if !g.coeffs[0].ring_is_zero() {
            return Err(AlgebraError::BadConstantTerm("inner series needs constant term 0"));
        }
        // Horner: (((f_n) g + f_{n-1}) g + ...) + f_0
        let mut acc = Self::constant(&g.var, g.order(), self.coeffs[self.order()].clone());
        for k in (0..self.order()).rev() {
            acc = &acc * g;
            acc.coeffs[0] = acc.coeffs[0].ring_add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse by Newton iteration `k <- k - (f(k) - z) / f'(k)`,
    /// which doubles the number of correct coefficients per pass.
    pub fn reversion(&self) -> Result<Self, AlgebraError> {
        let n = self.order();
        if n == 0 {
            return Err(AlgebraError::NotReversible("order must be at least 1"));
        }
        if !self.coeffs[0].ring_is_zero() {
            return Err(AlgebraError::NotReversible("constant term must be 0"));
        }
        let lin_inv = self.coeffs[1]
            .try_inverse()
            .ok_or(AlgebraError::NotReversible("linear coefficient must be a unit"))?;
        let z = self.identity_series();
        let df = self.derivative().with_order(n);
        let mut k = z.mul_coeff(&lin_inv);
        let mut correct = 1;
        while correct < n {
            let residual = &self.compose(&k)? - &z;
            let slope = df.compose(&k)?.reciprocal()?;
            k = &k - &(&residual * &slope);
            correct = 2 * correct + 1;
        }
        Ok(k)
    }
}

impl<R: ConstCoeff> TruncatedSeries<R> {
    pub fn from_vec(var: &str, order: usize, coeffs: Vec<R>) -> Self {
        Self::new(var, order, coeffs, &R::ring_zero())
    }

    pub fn zero(var: &str, order: usize) -> Self {
        Self::from_vec(var, order, vec![])
    }

    pub fn one(var: &str, order: usize) -> Self {
        Self::from_vec(var, order, vec![R::ring_one()])
    }

    /// The series consisting of the variable alone.
    pub fn identity(var: &str, order: usize) -> Self {
        Self::from_vec(var, order, vec![R::ring_zero(), R::ring_one()])
    }
}

impl<R: Coeff> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: &TruncatedSeries<R>) -> TruncatedSeries<R> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Coeff> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: &TruncatedSeries<R>) -> TruncatedSeries<R> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Coeff> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: &TruncatedSeries<R>) -> TruncatedSeries<R> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Coeff> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        self.map(R::ring_neg)
    }
}

/// Series nest: a truncated series is itself a valid coefficient ring.
impl<R: Coeff> Coeff for TruncatedSeries<R> {
    fn zero_like(&self) -> Self {
        self.zero_series()
    }
    fn one_like(&self) -> Self {
        self.one_series()
    }
    fn ring_is_zero(&self) -> bool {
        self.coeffs.iter().all(R::ring_is_zero)
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
        TruncatedSeries::scale(self, s)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.reciprocal().ok()
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.ring_is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{i}", self.var),
            };
            parts.push(match (mono.is_empty(), c.ring_is_one()) {
                (true, _) => format!("{c}"),
                (false, true) => mono,
                (false, false) => format!("({c})*{mono}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O({}^{})", parts.join(" + "), self.var, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{binom, int, ratio};
    use crate::algebra::Polynomial;

    type S = TruncatedSeries<Scalar>;

    fn s(coeffs: &[i64], order: usize) -> S {
        S::from_vec("z", order, coeffs.iter().map(|&c| int(c)).collect())
    }

    fn geometric(base: i64, order: usize) -> S {
        S::from_fn("z", order, |n| crate::algebra::scalar::pow_i64(base, n as u32))
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&s(&[1, 1], 6) * &s(&[1, -1], 6), s(&[1, 0, -1], 6));
        assert_eq!(&s(&[1, 1], 6) + &s(&[1, -1], 6), s(&[2], 6));
        assert_eq!(geometric(2, 6).coeff(3), Some(&int(8)));
        assert_eq!(geometric(2, 6).coeff(7), None);
    }

    #[test]
    fn mismatches_are_rejected() {
        let a = s(&[1, 1], 4);
        assert!(matches!(a.checked_add(&s(&[1], 5)), Err(AlgebraError::Mismatch(_))));
        let b = S::from_vec("x", 4, vec![int(1)]);
        assert!(matches!(a.checked_mul(&b), Err(AlgebraError::Mismatch(_))));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[1, -1], 8).reciprocal().unwrap(), geometric(1, 8));
        assert_eq!(s(&[1, -2], 8).reciprocal().unwrap(), geometric(2, 8));
        let f = s(&[1, 3, 5], 6);
        assert_eq!(&f * &f.reciprocal().unwrap(), S::one("z", 6));
        assert_eq!(s(&[0, 1], 4).reciprocal(), Err(AlgebraError::NonUnitConstant));
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(S::zero("z", 6).exp().unwrap(), S::one("z", 6));
        let harmonic = S::from_fn("z", 8, |n| if n == 0 { int(0) } else { ratio(1, n as i64) });
        assert_eq!(geometric(1, 8).log().unwrap(), harmonic);
        // exp(2 log(1+z)) = (1+z)^2
        let log1p = S::from_fn("z", 8, |n| {
            if n == 0 {
                int(0)
            } else {
                ratio(if n % 2 == 1 { 1 } else { -1 }, n as i64)
            }
        });
        assert_eq!(log1p.scale(&int(2)).exp().unwrap(), s(&[1, 2, 1], 8));
        assert!(matches!(s(&[1], 3).exp(), Err(AlgebraError::BadConstantTerm(_))));
        assert!(matches!(s(&[2], 3).log(), Err(AlgebraError::BadConstantTerm(_))));
    }

    #[test]
    fn scalar_powers() {
        let root = s(&[1, -4], 8).pow_scalar(&ratio(1, 2)).unwrap();
        assert_eq!(&root.coeffs()[..4], &[int(1), int(-2), int(-2), int(-4)]);
        assert_eq!(&root * &root, s(&[1, -4], 8));
        assert_eq!(s(&[1, 5, 7], 6).pow_scalar(&int(0)).unwrap(), S::one("z", 6));
        let f = s(&[1, 2, -3], 7);
        assert_eq!(f.pow_scalar(&int(3)).unwrap(), &(&f * &f) * &f);
        assert_eq!(f.pow_int(-2).unwrap(), (&f * &f).reciprocal().unwrap());
        assert!(s(&[2, 1], 3).pow_scalar(&ratio(1, 2)).is_err());
    }

    #[test]
    fn symbolic_power() {
        // (1-2z)^(e/2): the z coefficient is -e
        let e = Polynomial::var("e");
        let f = TruncatedSeries::<Polynomial>::from_vec("z", 4, vec![Polynomial::from_i64(1), Polynomial::from_i64(-2)]);
        let p = f.pow(&e.scale(&ratio(1, 2))).unwrap();
        assert_eq!(p.coeff(1).unwrap(), &-&e);
    }

    #[test]
    fn composition_examples() {
        let f = s(&[3, 1, 4, 1, 5], 6);
        assert_eq!(f.compose(&S::identity("z", 6)).unwrap(), f);
        let even = S::from_fn("z", 8, |n| int(if n % 2 == 0 { 1 } else { 0 }));
        assert_eq!(geometric(1, 8).compose(&s(&[0, 0, 1], 8)).unwrap(), even);
        assert!(f.compose(&s(&[1, 1], 6)).is_err());
    }

    #[test]
    fn catalan_composition_gives_log() {
        // sum binom(2n-1, n-1) z^n / n composed with -t(1+t) is -log(1+t)
        let c = S::from_fn("t", 6, |n| {
            if n == 0 {
                int(0)
            } else {
                binom(2 * n as i64 - 1, n as i64 - 1) * ratio(1, n as i64)
            }
        });
        let inner = S::from_vec("t", 6, vec![int(0), int(-1), int(-1)]);
        let neg_log1p = S::from_fn("t", 6, |n| {
            if n == 0 {
                int(0)
            } else {
                ratio(if n % 2 == 1 { -1 } else { 1 }, n as i64)
            }
        });
        assert_eq!(c.compose(&inner).unwrap(), neg_log1p);
    }

    #[test]
    fn reversion_examples() {
        assert_eq!(S::identity("z", 7).reversion().unwrap(), S::identity("z", 7));
        let k = s(&[0, 1, -1], 7).reversion().unwrap();
        assert_eq!(&k.coeffs()[..6], &[int(0), int(1), int(1), int(2), int(5), int(14)]);
        // independent oracle: fixed-point iteration k <- z + k^2
        let z = S::identity("z", 7);
        let mut it = z.clone();
        for _ in 0..8 {
            it = &z + &(&it * &it);
        }
        assert_eq!(k, it);
        assert!(matches!(s(&[1, 1], 4).reversion(), Err(AlgebraError::NotReversible(_))));
        assert!(matches!(s(&[0, 0, 1], 4).reversion(), Err(AlgebraError::NotReversible(_))));
    }

    #[test]
    fn linear_factor_helpers() {
        let f = s(&[1, 2, 3, 4], 5);
        assert_eq!(f.mul_linear(&int(3)), &f * &s(&[1, 3], 5));
        assert_eq!(f.div_linear(&int(3)), &f * &s(&[1, 3], 5).reciprocal().unwrap());
        assert_eq!(f.alternate(), f.compose(&s(&[0, -1], 5)).unwrap());
    }
}
