//! K-theoretic fixed-point sums (holomorphic Lefschetz).

use num_traits::One;

use super::{enumerate_fixed_points, CurveFixture, LocalizationError};
use crate::algebra::scalar::int;
use crate::algebra::{Coeff, LaurentPolynomial, RationalFunction, Scalar};

/// Polynomial in `y` whose coefficients are rational functions of the
/// character variable `q`. Entry `k` is the coefficient of `y^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPolynomial {
    pub coeffs: Vec<RationalFunction>,
}

impl CharacterPolynomial {
    /// Laurent form of every coefficient; fails if a denominator survives.
    pub fn to_laurent(&self) -> Result<Vec<LaurentPolynomial>, LocalizationError> {
        Ok(self
            .coeffs
            .iter()
            .map(RationalFunction::to_laurent)
            .collect::<Result<Vec<_>, _>>()?)
    }

    /// Nonequivariant value: evaluate every coefficient at `q = 1`.
    pub fn at_q_one(&self) -> Result<Vec<Scalar>, LocalizationError> {
        Ok(self
            .to_laurent()?
            .iter()
            .map(|l| l.eval(&Scalar::one()).expect("q = 1 is never a pole of a Laurent polynomial"))
            .collect())
    }
}

/// `χ(C^[n], Λ_{-y} L^[n])(q)` for a rank-one fixture, as the sum over fixed
/// points of `Π (1 - y q^{a_i + s c_i}) / Π (1 - q^{s c_i})`. Only the
/// coefficients of `y^0 ..= y^y_degree` are kept.
pub fn equivariant_euler_characteristic(
    fixture: &CurveFixture,
    n: usize,
    y_degree: usize,
) -> Result<CharacterPolynomial, LocalizationError> {
    if fixture.rank() != 1 {
        return Err(LocalizationError::RankNotOne(fixture.rank()));
    }
    let mut total = vec![RationalFunction::zero(); y_degree + 1];
    for fp in enumerate_fixed_points(n, fixture.num_points()) {
        // numerator as a y-polynomial over Laurent polynomials in q
        let mut num = vec![LaurentPolynomial::default(); y_degree + 1];
        num[0] = LaurentPolynomial::constant(Scalar::one());
        let mut den = LaurentPolynomial::constant(Scalar::one());
        for (&ni, p) in fp.parts().iter().zip(&fixture.points) {
            let c = p.cotangent_weight;
            let a = p.bundle_weights[0];
            for s in 0..ni as i64 {
                let ch = LaurentPolynomial::monomial(int(1), a + s * c);
                for k in (1..=y_degree).rev() {
                    num[k] = &num[k] - &(&num[k - 1] * &ch);
                }
            }
            for s in 1..=ni as i64 {
                den = &den * &LaurentPolynomial::from_pairs(&[(0, int(1)), (s * c, int(-1))]);
            }
        }
        if den.is_zero() {
            return Err(LocalizationError::DegenerateFixture);
        }
        let den_inv = den
            .to_rational_function()
            .try_inverse()
            .ok_or(LocalizationError::DegenerateFixture)?;
        for (acc, k) in total.iter_mut().zip(num) {
            if !k.is_zero() {
                *acc = &*acc + &(&k.to_rational_function() * &den_inv);
            }
        }
    }
    Ok(CharacterPolynomial { coeffs: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UniPoly;

    fn one_minus(c: i64, k: i64) -> RationalFunction {
        RationalFunction::one_minus_monomial(int(c), k)
    }

    #[test]
    fn affine_line_product_form() {
        let a = 2;
        let chi = equivariant_euler_characteristic(&CurveFixture::affine_line(a), 2, 2).unwrap();
        // (1 - y q^a)(1 - y q^{a+1}) / ((1 - q)(1 - q^2))
        let den = &one_minus(1, 1) * &one_minus(1, 2);
        let qa = RationalFunction::monomial(int(1), a);
        let qa1 = RationalFunction::monomial(int(1), a + 1);
        let expected = [
            &RationalFunction::one() / &den,
            &(-&(&qa + &qa1)) / &den,
            &(&qa * &qa1) / &den,
        ];
        assert_eq!(chi.coeffs, expected.to_vec());
    }

    #[test]
    fn p1_line_bundle_single_point() {
        let chi = equivariant_euler_characteristic(&CurveFixture::p1_line(1), 1, 1).unwrap();
        assert_eq!(chi.coeffs[0], RationalFunction::one());
        // y coefficient is -(1 + q^{-1})
        let expected = RationalFunction::new(UniPoly::from_i64(&[-1, -1]), UniPoly::from_i64(&[0, 1])).unwrap();
        assert_eq!(chi.coeffs[1], expected);
        for d in -3..=3 {
            let v = equivariant_euler_characteristic(&CurveFixture::p1_line(d), 1, 1)
                .unwrap()
                .at_q_one()
                .unwrap();
            assert_eq!(v, vec![int(1), int(-(d + 1))]);
        }
    }

    #[test]
    fn rank_guard() {
        assert_eq!(
            equivariant_euler_characteristic(&CurveFixture::p1_r_trivial(2), 1, 1),
            Err(LocalizationError::RankNotOne(2))
        );
    }
}
