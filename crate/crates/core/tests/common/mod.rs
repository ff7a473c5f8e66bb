#![allow(dead_code)]

use proptest::prelude::*;

use tautcurve::algebra::scalar::{int, ratio};
use tautcurve::algebra::{Scalar, TruncatedSeries, UniPoly};
use tautcurve::localization::{CurveFixture, FixedPointChart};

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

pub const ORDER: usize = 6;

pub fn series() -> impl Strategy<Value = TruncatedSeries<Scalar>> {
    prop::collection::vec(scalar(), ORDER + 1).prop_map(|c| TruncatedSeries::from_vec("z", ORDER, c))
}

/// Series with constant term `c0`.
pub fn series_from(c0: i64) -> impl Strategy<Value = TruncatedSeries<Scalar>> {
    prop::collection::vec(scalar(), ORDER).prop_map(move |rest| {
        let mut c = vec![int(c0)];
        c.extend(rest);
        TruncatedSeries::from_vec("z", ORDER, c)
    })
}

pub fn reversible() -> impl Strategy<Value = TruncatedSeries<Scalar>> {
    (series_from(0), prop_oneof![Just(1i64), Just(-1), Just(2), Just(-3)]).prop_map(|(mut s, lin)| {
        let mut c = s.coeffs().to_vec();
        c[1] = int(lin);
        s = TruncatedSeries::from_vec("z", ORDER, c);
        s
    })
}

pub fn uni_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| UniPoly::from_i64(&c))
}

pub fn chart(rank: usize) -> impl Strategy<Value = FixedPointChart> {
    (
        prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)],
        prop::collection::vec(-2i64..=2, rank),
    )
        .prop_map(|(c, w)| FixedPointChart {
            cotangent_weight: c,
            bundle_weights: w,
        })
}

pub fn formal_fixture() -> impl Strategy<Value = CurveFixture> {
    (1usize..=2, 1usize..=3)
        .prop_flat_map(|(rank, l)| prop::collection::vec(chart(rank), l))
        .prop_map(|points| CurveFixture::new("formal", false, points).unwrap())
}

/// `m choose k` for any integer `m`, by the falling-factorial product.
pub fn binom_oracle(m: i64, k: i64) -> Scalar {
    if k < 0 {
        return int(0);
    }
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for j in 0..k {
        num *= m - j;
        den *= j + 1;
    }
    Scalar::new(num, den)
}
