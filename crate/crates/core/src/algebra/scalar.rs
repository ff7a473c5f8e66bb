//! Exact rational scalars and integer binomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form: `p/q`, or just `p` for integers.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn parse_scalar(s: &str) -> Option<Scalar> {
    s.trim().parse().ok()
}

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// `m (m-1) ... (m-k+1) / k!` for any integer `m`.
pub fn binomial_generalized(m: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(m) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Binomial as a scalar; `k < 0` gives zero.
pub fn binom(m: i64, k: i64) -> Scalar {
    if k < 0 {
        Scalar::zero()
    } else {
        big(binomial_generalized(m, k as u64))
    }
}

pub fn pow_i64(base: i64, exp: u32) -> Scalar {
    big(BigInt::from(base).pow(exp))
}

/// `(-1)^n` for possibly negative `n`.
pub fn sign_pow(n: i64) -> Scalar {
    if n.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_generalized(5, 2), BigInt::from(10));
        assert_eq!(binomial_generalized(-3, 2), BigInt::from(6));
        assert_eq!(binomial_generalized(0, 0), BigInt::from(1));
        // N_3^0 = binom(4, 3)
        assert_eq!(binomial_generalized(4, 3), BigInt::from(4));
        assert_eq!(binomial_generalized(2, 5), BigInt::from(0));
        assert_eq!(binomial_generalized(-1, 3), BigInt::from(-1));
    }

    #[test]
    fn pascal_recurrence() {
        for m in -20i64..=20 {
            for k in 1u64..=20 {
                assert_eq!(
                    binomial_generalized(m, k),
                    binomial_generalized(m - 1, k - 1) + binomial_generalized(m - 1, k),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_scalar(&ratio(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert_eq!(parse_scalar("-3/2"), Some(ratio(-3, 2)));
        assert_eq!(parse_scalar("4/2"), Some(int(2)));
        assert_eq!(format_scalar(&parse_scalar("10/-4").unwrap()), "-5/2");
    }
}
