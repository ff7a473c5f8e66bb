//! Torus localization on Hilbert schemes of points on curves.
//!
//! Fixed points of `C^[n]` are compositions `(n_1, ..., n_l)` of `n` over the
//! fixed points `P_i` of the curve. At such a point the tangent space has
//! additive weights `-s c_i` for `1 <= s <= n_i`, and the tautological bundle
//! of `E` has weights `a_{j,i} + s c_i` for `0 <= s < n_i`, all in units of
//! the equivariant parameter `t`.

mod fixture;
mod lefschetz;

use num_traits::{One, Zero};
use thiserror::Error;

pub use fixture::{
    fixture_invariants, CurveFixture, FixedPointChart, FixtureInvariants, FixtureKind, KClassSpec, Sign,
};
pub use lefschetz::{equivariant_euler_characteristic, CharacterPolynomial};

use crate::algebra::scalar::int;
use crate::algebra::{AlgebraError, LaurentPolynomial, Scalar, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("invalid fixture: {0}")]
    InvalidFixture(String),
    #[error("fixture has a zero tangent weight")]
    DegenerateFixture,
    #[error("fixture {0} is not compact")]
    NotCompact(String),
    #[error("localization sum did not cancel at x^{n}: {value}")]
    EquivarianceLeak { n: usize, value: String },
    #[error("operation needs a rank-1 fixture, got rank {0}")]
    RankNotOne(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A torus-fixed point of `C^[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbFixedPoint(pub Vec<usize>);

impl HilbFixedPoint {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Multiset of additive weights, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightMultiset(Vec<i64>);

impl WeightMultiset {
    pub fn new(mut weights: Vec<i64>) -> Self {
        weights.sort_unstable();
        WeightMultiset(weights)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> Scalar {
        self.0.iter().map(|&w| int(w)).product()
    }
}

/// All compositions of `n` into `l` nonnegative parts, with the first part
/// decreasing (so `(n, 0, ..., 0)` comes first).
pub fn enumerate_fixed_points(n: usize, l: usize) -> Vec<HilbFixedPoint> {
    fn rec(n: usize, l: usize, prefix: &mut Vec<usize>, out: &mut Vec<HilbFixedPoint>) {
        if l == 1 {
            prefix.push(n);
            out.push(HilbFixedPoint(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            rec(n - first, l - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        rec(n, l, &mut Vec::with_capacity(l), &mut out);
    }
    out
}

pub fn tangent_weights(fp: &HilbFixedPoint, fixture: &CurveFixture) -> WeightMultiset {
    let mut w = Vec::with_capacity(fp.size());
    for (&ni, p) in fp.parts().iter().zip(&fixture.points) {
        w.extend((1..=ni as i64).map(|s| -s * p.cotangent_weight));
    }
    WeightMultiset::new(w)
}

pub fn taut_weights(fp: &HilbFixedPoint, fixture: &CurveFixture) -> WeightMultiset {
    let mut w = Vec::with_capacity(fp.size() * fixture.rank());
    for (&ni, p) in fp.parts().iter().zip(&fixture.points) {
        for &a in &p.bundle_weights {
            w.extend((0..ni as i64).map(|s| a + s * p.cotangent_weight));
        }
    }
    WeightMultiset::new(w)
}

/// Total Chern or total Segre class, graded by a bookkeeping variable `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassMode {
    Chern,
    Segre,
}

impl ClassMode {
    /// The class of `sign * E`: the virtual negative swaps Chern and Segre.
    pub fn with_sign(self, sign: Sign) -> Self {
        match (self, sign) {
            (m, Sign::Plus) => m,
            (ClassMode::Chern, Sign::Minus) => ClassMode::Segre,
            (ClassMode::Segre, Sign::Minus) => ClassMode::Chern,
        }
    }

    pub fn for_sign(sign: Sign) -> Self {
        ClassMode::Chern.with_sign(sign)
    }
}

/// Characteristic class being integrated.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassSpec {
    TotalChernX,
    TotalSegreX,
    /// Multiplicative classes `Ψ(E^[n]) Φ(T)` built from `ψ` on the bundle
    /// roots and `φ` on the tangent roots. `ψ` needs a unit constant term;
    /// `φ` may vanish at 0 (e.g. `φ(x) = x` gives the Euler characteristic).
    PsiPhi {
        psi: TruncatedSeries<Scalar>,
        phi: TruncatedSeries<Scalar>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ClassIntegral {
    /// Series in `x` with coefficients in `ℚ[t, 1/t]`.
    Graded(TruncatedSeries<LaurentPolynomial>),
    Ungraded(LaurentPolynomial),
}

fn tangent_euler_inverse(fp: &HilbFixedPoint, fixture: &CurveFixture) -> Result<LaurentPolynomial, LocalizationError> {
    let tw = tangent_weights(fp, fixture);
    if tw.weights().contains(&0) {
        return Err(LocalizationError::DegenerateFixture);
    }
    Ok(LaurentPolynomial::monomial(tw.product().recip(), -(tw.len() as i64)))
}

/// Contribution of one fixed point to the `x`-graded integral.
pub fn graded_fixed_point_term(
    fixture: &CurveFixture,
    fp: &HilbFixedPoint,
    mode: ClassMode,
    x_order: usize,
) -> Result<TruncatedSeries<LaurentPolynomial>, LocalizationError> {
    let mut term = TruncatedSeries::<LaurentPolynomial>::one("x", x_order);
    for &w in taut_weights(fp, fixture).weights() {
        let root = LaurentPolynomial::monomial(int(w), 1);
        term = match mode {
            ClassMode::Chern => term.mul_linear(&root),
            ClassMode::Segre => term.div_linear(&root),
        };
    }
    Ok(term.mul_coeff(&tangent_euler_inverse(fp, fixture)?))
}

/// `∫_{C^[n]} c_x(±E^[n])` (or `s_x`) as an `x`-series over `ℚ[t, 1/t]`,
/// summed over all fixed points.
pub fn graded_class_integral(
    fixture: &CurveFixture,
    n: usize,
    mode: ClassMode,
    x_order: usize,
) -> Result<TruncatedSeries<LaurentPolynomial>, LocalizationError> {
    let mut total = TruncatedSeries::<LaurentPolynomial>::zero("x", x_order);
    for fp in enumerate_fixed_points(n, fixture.num_points()) {
        total = &total + &graded_fixed_point_term(fixture, &fp, mode, x_order)?;
    }
    Ok(total)
}

/// Evaluates a polynomial truncation of `f` at `w t`.
fn eval_at_weight(f: &TruncatedSeries<Scalar>, w: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::default();
    let mut wk = Scalar::one();
    for (k, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &LaurentPolynomial::monomial(c * &wk, k as i64);
        }
        wk *= int(w);
    }
    out
}

/// `Π_tangent φ(wt)/(wt) · Π_taut ψ(wt)` at one fixed point; with
/// `sign = Minus` the bundle factor is `1/ψ`.
pub fn psi_phi_fixed_point_term(
    fixture: &CurveFixture,
    fp: &HilbFixedPoint,
    psi: &TruncatedSeries<Scalar>,
    phi: &TruncatedSeries<Scalar>,
    sign: Sign,
) -> Result<LaurentPolynomial, LocalizationError> {
    let psi = match sign {
        Sign::Plus => psi.clone(),
        Sign::Minus => psi.reciprocal()?,
    };
    let mut term = tangent_euler_inverse(fp, fixture)?;
    for &w in tangent_weights(fp, fixture).weights() {
        term = &term * &eval_at_weight(phi, w);
    }
    for &w in taut_weights(fp, fixture).weights() {
        term = &term * &eval_at_weight(&psi, w);
    }
    Ok(term)
}

pub fn psi_phi_integral(
    fixture: &CurveFixture,
    n: usize,
    psi: &TruncatedSeries<Scalar>,
    phi: &TruncatedSeries<Scalar>,
    sign: Sign,
) -> Result<LaurentPolynomial, LocalizationError> {
    if psi.coeffs()[0].is_zero() {
        return Err(AlgebraError::NonUnitConstant.into());
    }
    let mut total = LaurentPolynomial::default();
    for fp in enumerate_fixed_points(n, fixture.num_points()) {
        total = &total + &psi_phi_fixed_point_term(fixture, &fp, psi, phi, sign)?;
    }
    Ok(total)
}

/// Dispatches on the class: graded specs return an `x`-series cut at order
/// `n`, `PsiPhi` a Laurent polynomial in `t`.
pub fn equivariant_class_integral(
    fixture: &CurveFixture,
    n: usize,
    spec: &ClassSpec,
    sign: Sign,
) -> Result<ClassIntegral, LocalizationError> {
    match spec {
        ClassSpec::TotalChernX => Ok(ClassIntegral::Graded(graded_class_integral(
            fixture,
            n,
            ClassMode::Chern.with_sign(sign),
            n,
        )?)),
        ClassSpec::TotalSegreX => Ok(ClassIntegral::Graded(graded_class_integral(
            fixture,
            n,
            ClassMode::Segre.with_sign(sign),
            n,
        )?)),
        ClassSpec::PsiPhi { psi, phi } => Ok(ClassIntegral::Ungraded(psi_phi_integral(fixture, n, psi, phi, sign)?)),
    }
}

/// Nonequivariant `∫_{C^[n]} c(E^[n])` (or `s(E^[n])`): the `x^n`
/// coefficient of the graded integral.
///
/// On a compact fixture the fixed-point sum must cancel every pole in `t`:
/// the coefficients of `x^k` for `k < n` vanish and the `x^n` coefficient is
/// a constant. Anything else is reported as [`LocalizationError::EquivarianceLeak`].
pub fn chern_number(fixture: &CurveFixture, n: usize, mode: ClassMode) -> Result<Scalar, LocalizationError> {
    if !fixture.compact {
        return Err(LocalizationError::NotCompact(fixture.name.clone()));
    }
    let series = graded_class_integral(fixture, n, mode, n)?;
    for (k, c) in series.coeffs().iter().enumerate() {
        let ok = if k < n { c.is_zero() } else { c.as_constant().is_some() };
        if !ok {
            return Err(LocalizationError::EquivarianceLeak {
                n: k,
                value: c.to_string(),
            });
        }
    }
    Ok(series.coeffs()[n].as_constant().expect("checked above"))
}

/// `H(C, E)(t) = Σ_n z^n ∫ Ψ Φ` assembled from fixed-point sums.
pub fn psi_phi_series(
    fixture: &CurveFixture,
    psi: &TruncatedSeries<Scalar>,
    phi: &TruncatedSeries<Scalar>,
    sign: Sign,
    order: usize,
) -> Result<TruncatedSeries<LaurentPolynomial>, LocalizationError> {
    let coeffs = (0..=order)
        .map(|n| psi_phi_integral(fixture, n, psi, phi, sign))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedSeries::from_vec("z", order, coeffs))
}

/// Closed product for the affine line with cotangent weight `c` and bundle
/// weights `a`: `Σ_n z^n Π_{s=1..n} Π_j (1 + (a_j + (s-1)c)t) / (-s c t)`.
pub fn affine_chern_series(a: &[i64], c: i64, order: usize) -> TruncatedSeries<LaurentPolynomial> {
    let mut coeffs = vec![LaurentPolynomial::constant(Scalar::one())];
    for s in 1..=order as i64 {
        let mut factor = LaurentPolynomial::monomial(int(-s * c).recip(), -1);
        for &aj in a {
            let lin = LaurentPolynomial::from_pairs(&[(0, int(1)), (1, int(aj + (s - 1) * c))]);
            factor = &factor * &lin;
        }
        let next = coeffs.last().unwrap() * &factor;
        coeffs.push(next);
    }
    TruncatedSeries::from_vec("z", order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[HilbFixedPoint]) -> Vec<Vec<usize>> {
        v.iter().map(|f| f.0.clone()).collect()
    }

    #[test]
    fn fixed_point_enumeration() {
        assert_eq!(parts(&enumerate_fixed_points(2, 2)), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(parts(&enumerate_fixed_points(3, 1)), vec![vec![3]]);
        assert_eq!(enumerate_fixed_points(5, 2).len(), 6);
        assert_eq!(parts(&enumerate_fixed_points(0, 3)), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn weight_examples() {
        let aff = CurveFixture::affine_line(0);
        assert_eq!(tangent_weights(&HilbFixedPoint(vec![3]), &aff).weights(), &[-3, -2, -1]);
        let p1 = CurveFixture::p1_line(0);
        assert_eq!(tangent_weights(&HilbFixedPoint(vec![1, 1]), &p1).weights(), &[-1, 1]);
        assert_eq!(tangent_weights(&HilbFixedPoint(vec![2, 0]), &p1).weights(), &[1, 2]);

        let aff5 = CurveFixture::affine_line(5);
        assert_eq!(taut_weights(&HilbFixedPoint(vec![2]), &aff5).weights(), &[5, 6]);
        let l3 = CurveFixture::p1_line(3);
        assert_eq!(taut_weights(&HilbFixedPoint(vec![0, 4]), &l3).weights(), &[-3, -2, -1, 0]);
        let mixed = CurveFixture::p1_mixed(2);
        assert_eq!(taut_weights(&HilbFixedPoint(vec![1, 1]), &mixed).weights(), &[0, 0, 0, 1]);
    }

    #[test]
    fn graded_integral_examples() {
        let p1 = CurveFixture::p1_line(0);
        let s1 = graded_class_integral(&p1, 1, ClassMode::Segre, 1).unwrap();
        assert!(s1.coeffs()[1].is_zero());
        assert!(s1.coeffs()[0].is_zero());

        let aff = CurveFixture::affine_line(0);
        let c1 = graded_class_integral(&aff, 1, ClassMode::Chern, 1).unwrap();
        assert_eq!(c1.coeffs()[0], LaurentPolynomial::monomial(int(-1), -1));
        assert!(c1.coeffs()[1].is_zero());

        // x^2 / (1 - x^2 t^2)
        let s2 = graded_class_integral(&p1, 2, ClassMode::Segre, 6).unwrap();
        let expected: Vec<LaurentPolynomial> = (0..=6)
            .map(|k| {
                if k >= 2 && k % 2 == 0 {
                    LaurentPolynomial::monomial(int(1), k as i64 - 2)
                } else {
                    LaurentPolynomial::default()
                }
            })
            .collect();
        assert_eq!(s2.coeffs(), &expected[..]);
    }

    #[test]
    fn chern_number_examples() {
        assert_eq!(chern_number(&CurveFixture::p1_line(2), 2, ClassMode::Chern).unwrap(), int(1));
        assert_eq!(chern_number(&CurveFixture::p1_line(0), 2, ClassMode::Segre).unwrap(), int(1));
        assert_eq!(chern_number(&CurveFixture::p1_line(-1), 2, ClassMode::Segre).unwrap(), int(3));
        assert!(matches!(
            chern_number(&CurveFixture::affine_line(0), 1, ClassMode::Chern),
            Err(LocalizationError::NotCompact(_))
        ));
    }

    #[test]
    fn noncompact_leak_is_reported() {
        let mut f = CurveFixture::affine_line(0);
        f.compact = true;
        assert!(matches!(
            chern_number(&f, 1, ClassMode::Chern),
            Err(LocalizationError::EquivarianceLeak { n: 0, .. })
        ));
    }

    #[test]
    fn degenerate_fixture_rejected() {
        let f = CurveFixture {
            name: "bad".into(),
            compact: true,
            points: vec![FixedPointChart { cotangent_weight: 0, bundle_weights: vec![0] }],
        };
        assert_eq!(
            graded_class_integral(&f, 1, ClassMode::Chern, 1),
            Err(LocalizationError::DegenerateFixture)
        );
    }

    #[test]
    fn psi_phi_counts_fixed_points() {
        let one = TruncatedSeries::<Scalar>::one("x", 6);
        let x = TruncatedSeries::<Scalar>::identity("x", 6);
        let h = psi_phi_series(&CurveFixture::p1_line(0), &one, &x, Sign::Plus, 6).unwrap();
        for (n, c) in h.coeffs().iter().enumerate() {
            assert_eq!(c, &LaurentPolynomial::constant(int(n as i64 + 1)));
        }
    }

    #[test]
    fn psi_phi_chern_matches_graded_path() {
        let psi = TruncatedSeries::<Scalar>::from_vec("x", 8, vec![int(1), int(1)]);
        let phi = TruncatedSeries::<Scalar>::one("x", 8);
        for fixture in [CurveFixture::p1_line(2), CurveFixture::p1_mixed(2), CurveFixture::p1_degrees(&[1, -2])] {
            for n in 0..=4 {
                let h = psi_phi_integral(&fixture, n, &psi, &phi, Sign::Plus).unwrap();
                assert_eq!(h.coeff(0), chern_number(&fixture, n, ClassMode::Chern).unwrap());
                let graded = graded_class_integral(&fixture, n, ClassMode::Chern, fixture.rank() * n).unwrap();
                let summed = graded.coeffs().iter().fold(LaurentPolynomial::default(), |a, b| &a + b);
                assert_eq!(h, summed);
            }
        }
    }

    #[test]
    fn affine_line_matches_closed_product() {
        let psi = TruncatedSeries::<Scalar>::from_vec("x", 6, vec![int(1), int(1)]);
        let phi = TruncatedSeries::<Scalar>::one("x", 6);
        let a = 3;
        let h = psi_phi_series(&CurveFixture::affine_line(a), &psi, &phi, Sign::Plus, 5).unwrap();
        assert_eq!(h, affine_chern_series(&[a], 1, 5));
        // n = 1: (1 + a t) / (-t)
        assert_eq!(
            h.coeffs()[1],
            LaurentPolynomial::from_pairs(&[(-1, int(-1)), (0, int(-a))])
        );
    }
}
