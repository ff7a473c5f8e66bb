//! Closed forms and functional equations for the generating series, each
//! checked against localization.
//!
//! Everything here is built from two substitutions: `z = k(1-k)^r`, which
//! turns the Segre series into a rational expression in `k`, and its surface
//! analogue `z = k(1-k)(1-2k)^4 / (1-6k+6k^2)^3`.

mod identities;

use std::ops::RangeInclusive;

pub use identities::*;

use crate::algebra::scalar::{binom, int, is_integer, pow_i64, ratio, sign_pow};
use crate::algebra::{Coeff, Polynomial, Scalar, TruncatedSeries};
use crate::error::{Result, TautError};
use crate::localization::{CurveFixture, Sign};
use crate::tautseries::{
    chern_generating_series, extract_universal_coeffs, universal_series, Adjudication, ReportBuilder,
    VerificationReport,
};

/// Data for the rank-`r` Segre closed form
/// `(1-k)^{(r+1)e/2 + d} / (1-(r+1)k)^{e/2}` with `z = k(1-k)^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormSpec<R> {
    pub d: R,
    pub e: R,
    pub rank: usize,
    pub order: usize,
}

impl<R: Coeff> ClosedFormSpec<R> {
    pub fn new(d: R, e: R, rank: usize, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(TautError::InvalidArgument("order must be at least 1".into()));
        }
        Ok(ClosedFormSpec { d, e, rank, order })
    }

    pub fn series(&self) -> Result<TruncatedSeries<R>> {
        marian_oprea_closed_form(self.rank, &self.d, &self.e, self.order)
    }
}

pub(crate) fn lift<R: Coeff>(s: &TruncatedSeries<Scalar>, sample: &R) -> TruncatedSeries<R> {
    s.map(|c| sample.from_scalar_like(c))
}

/// `c0 + c1 * var` over the ring of `sample`.
pub(crate) fn linear<R: Coeff>(var: &str, order: usize, c0: &Scalar, c1: &Scalar, sample: &R) -> TruncatedSeries<R> {
    let coeffs = vec![sample.from_scalar_like(c0), sample.from_scalar_like(c1)];
    TruncatedSeries::new(var, order, coeffs, &sample.zero_like())
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(TautError::InvalidArgument("order must be at least 1".into()));
    }
    Ok(())
}

/// `k(z)` solving `z = k(1-k)^r`.
pub fn invert_z_k(r: usize, order: usize) -> Result<TruncatedSeries<Scalar>> {
    check_order(order)?;
    let one_minus_k = TruncatedSeries::from_vec("k", order, vec![int(1), int(-1)]);
    let z_of_k = &TruncatedSeries::identity("k", order) * &one_minus_k.pow_int(r as i64)?;
    Ok(z_of_k.reversion()?.with_var("z"))
}

/// `(1-k)^{e+d} / (1-2k)^{e/2}` with `z = k(1-k)`.
pub fn segre_closed_form_series<R: Coeff>(d: &R, e: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let k = lift(&invert_z_k(1, order)?, d);
    let one_minus_k = linear("k", order, &int(1), &int(-1), d);
    let one_minus_2k = linear("k", order, &int(1), &int(-2), d);
    let f = &one_minus_k.pow(&e.ring_add(d))? * &one_minus_2k.pow(&e.scale(&ratio(-1, 2)))?;
    Ok(f.compose(&k)?)
}

/// `(1-k)^{(r+1)e/2 + d} / (1-(r+1)k)^{e/2}` with `z = k(1-k)^r`.
pub fn marian_oprea_closed_form<R: Coeff>(r: usize, d: &R, e: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let k = lift(&invert_z_k(r, order)?, d);
    let one_minus_k = linear("k", order, &int(1), &int(-1), d);
    let one_minus_rk = linear("k", order, &int(1), &int(-(r as i64) - 1), d);
    let a = e.scale(&ratio(r as i64 + 1, 2)).ring_add(d);
    let f = &one_minus_k.pow(&a)? * &one_minus_rk.pow(&e.scale(&ratio(-1, 2)))?;
    Ok(f.compose(&k)?)
}

/// `exp(Σ z^n/n (-binom(2n-1,n-1) d + (4^{n-1} - binom(2n-1,n-1)) e))`.
pub fn segre_exponential_form<R: Coeff>(d: &R, e: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let zero = d.zero_like();
    let mut exponent = vec![zero.clone()];
    for n in 1..=order as i64 {
        let c = binom(2 * n - 1, n - 1);
        let term = d.scale(&-&c).ring_add(&e.scale(&(pow_i64(4, n as u32 - 1) - &c)));
        exponent.push(term.scale(&ratio(1, n)));
    }
    Ok(TruncatedSeries::new("z", order, exponent, &zero).exp()?)
}

fn symbols() -> (Polynomial, Polynomial) {
    (Polynomial::var("d"), Polynomial::var("e"))
}

/// Exponential form against closed form symbolically in `(d, e)`, then both
/// against localization on `O(d)` over the projective line.
pub fn verify_thm14(order: usize, d_range: RangeInclusive<i64>) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("thm14", order);
    let (d, e) = symbols();
    let expo = segre_exponential_form(&d, &e, order)?;
    let closed = segre_closed_form_series(&d, &e, order)?;
    report.compare_series(&expo, &closed);
    report.note(format!("symbolic in (d,e): z^1 coefficient {}", closed.coeffs()[1]));
    for dv in d_range.clone() {
        let truth = chern_generating_series(&CurveFixture::p1_line(dv), Sign::Minus, order)?;
        let closed = segre_closed_form_series(&int(dv), &int(2), order)?;
        let expo = segre_exponential_form(&int(dv), &int(2), order)?;
        report.compare_series(&closed, &truth);
        report.compare_series(&expo, &truth);
    }
    report.note(format!(
        "specialized e=2, d in [{},{}] against localization",
        d_range.start(),
        d_range.end()
    ));
    report.note("series taken without the 1/n factor on the left side");
    Ok(report.finish())
}

/// `Σ_{n>=1} c_n z^n / n` from a list of `c_1, c_2, ...`.
fn divided_series(values: &[Scalar], order: usize) -> TruncatedSeries<Scalar> {
    TruncatedSeries::from_fn("z", order, |n| {
        if n == 0 {
            int(0)
        } else {
            &values[n - 1] / int(n as i64)
        }
    })
}

/// `t(z)` solving `z = -t(1 + sign*t)^r`.
fn solve_argument(r: usize, sign: i64, order: usize) -> Result<TruncatedSeries<Scalar>> {
    let base = TruncatedSeries::from_vec("t", order, vec![int(1), int(sign)]);
    let g = &TruncatedSeries::from_vec("t", order, vec![int(0), int(-1)]) * &base.pow_int(r as i64)?;
    Ok(g.reversion()?.with_var("z"))
}

/// `log(1 + c t)` as a series in `t`.
fn log_linear(c: i64, var: &str, order: usize) -> Result<TruncatedSeries<Scalar>> {
    Ok(TruncatedSeries::from_vec(var, order, vec![int(1), int(c)]).log()?)
}

/// Solves the functional equations for `C(z)` and `D(z)` under both printed
/// argument signs, compares with extracted coefficients, and checks the
/// rank-`r` closed form symbolically.
pub fn marian_oprea_series(r: usize, order: usize) -> Result<VerificationReport> {
    if r == 0 {
        return Err(TautError::InvalidArgument("rank must be at least 1".into()));
    }
    let coeffs = extract_universal_coeffs(r, Sign::Minus, order)?;
    let c_series = divided_series(&coeffs.first, order);
    let d_series = divided_series(&coeffs.second, order);
    let mut report = ReportBuilder::new("marian_oprea", order);

    let labels = ["argument -t(1-t)^r", "argument -t(1+t)^r"];
    let mut c_adj = Adjudication::new(&labels);
    let mut d_adj = Adjudication::new(&labels);
    let mut c_pred = Vec::new();
    let mut d_pred = Vec::new();
    let rr = r as i64;
    for sign in [-1, 1] {
        let t = solve_argument(r, sign, order)?;
        let c_rhs = log_linear(1, "t", order)?.scale(&int(-1));
        let d_rhs = &log_linear(1, "t", order)?.scale(&ratio(rr + 1, 2)) - &log_linear(rr + 1, "t", order)?.scale(&ratio(1, 2));
        c_pred.push(c_rhs.compose(&t)?);
        d_pred.push(d_rhs.compose(&t)?);
    }
    for n in 1..=order {
        let at = n.to_string();
        c_adj.record(at.clone(), &[c_pred[0].coeffs()[n] == c_series.coeffs()[n], c_pred[1].coeffs()[n] == c_series.coeffs()[n]]);
        d_adj.record(at, &[d_pred[0].coeffs()[n] == d_series.coeffs()[n], d_pred[1].coeffs()[n] == d_series.coeffs()[n]]);
    }
    c_adj.apply(&mut report, &format!("r={r} C(z)"));
    d_adj.apply(&mut report, &format!("r={r} D(z)"));

    let (d, e) = symbols();
    let closed = marian_oprea_closed_form(r, &d, &e, order)?;
    let universal = universal_series(&coeffs, &d, &e, order)?;
    if report.compare_series(&closed, &universal) {
        report.note(format!("r={r} closed form matches the universal Segre series in (d,e)"));
    }
    if r == 1 {
        report.compare_series(&closed, &segre_closed_form_series(&d, &e, order)?);
    }
    Ok(report.finish())
}

/// Runs [`marian_oprea_series`] for every rank in `1..=r_max` and merges the
/// outcome into one report.
pub fn marian_oprea_sweep(r_max: usize, order: usize) -> Result<VerificationReport> {
    let parts = (1..=r_max)
        .map(|r| marian_oprea_series(r, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merge("marian_oprea", order, parts))
}

/// `z(k) = k(1-k)(1-2k)^4 / (1-6k+6k^2)^3` as a series in `k`.
fn lehn_z_of_k(order: usize) -> Result<TruncatedSeries<Scalar>> {
    let one_minus_k = TruncatedSeries::from_vec("k", order, vec![int(1), int(-1)]);
    let one_minus_2k = TruncatedSeries::from_vec("k", order, vec![int(1), int(-2)]);
    let quad = TruncatedSeries::from_vec("k", order, vec![int(1), int(-6), int(6)]);
    let num = &(&TruncatedSeries::identity("k", order) * &one_minus_k) * &one_minus_2k.pow_int(4)?;
    Ok(&num * &quad.pow_int(-3)?)
}

/// `k(z)` inverting the surface substitution.
pub fn lehn_surface_inverse(order: usize) -> Result<TruncatedSeries<Scalar>> {
    if order < 3 {
        return Err(TautError::InvalidArgument("order must be at least 3".into()));
    }
    Ok(lehn_z_of_k(order)?.reversion()?.with_var("z"))
}

/// `(1-k)^a (1-2k)^b / (1-6k+6k^2)^c` with `k = k(z)` from
/// [`lehn_surface_inverse`].
pub fn lehn_generating_function<R: Coeff>(a: &R, b: &R, c: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let k = lift(&lehn_surface_inverse(order)?, a);
    let one_minus_k = linear("k", order, &int(1), &int(-1), a);
    let one_minus_2k = linear("k", order, &int(1), &int(-2), a);
    let mut quad = linear("k", order, &int(1), &int(-6), a);
    if order >= 2 {
        quad = &quad + &TruncatedSeries::monomial("k", order, a.from_scalar_like(&int(6)), 2);
    }
    let f = &(&one_minus_k.pow(a)? * &one_minus_2k.pow(b)?) * &quad.pow(&c.ring_neg())?;
    Ok(f.compose(&k)?)
}

/// Leading coefficients `1, -9, 94`, the roundtrip `z(k(z)) = z`, and the
/// first-order term `-a - 2b + 6c` of the surface generating function.
pub fn lehn_inverse_check(order: usize) -> Result<VerificationReport> {
    let order = order.max(3);
    let mut report = ReportBuilder::new("lehn_inverse", order);
    let k = lehn_surface_inverse(order)?;
    for (n, want) in [(1, 1), (2, -9), (3, 94)] {
        report.compare(n, &k.coeffs()[n as usize], &int(want));
    }
    let back = lehn_z_of_k(order)?.compose(&k)?;
    report.compare_series(&back, &TruncatedSeries::identity("z", order));
    let f = lehn_generating_function(&Polynomial::var("a"), &Polynomial::var("b"), &Polynomial::var("c"), order)?;
    let expected = &(&Polynomial::var("c").scale(&int(6)) - &Polynomial::var("a")) - &Polynomial::var("b").scale(&int(2));
    report.compare(1, &f.coeffs()[1], &expected);
    let shown: Vec<String> = k.coeffs().iter().take(6).map(|c| c.to_string()).collect();
    report.note(format!("k = [{}, ...]", shown.join(",")));
    Ok(report.finish())
}

/// `(-1)^n [z^n]` of the rank-one Segre series with `e = 2 - 2g`: the number
/// of `n`-secant `(n-2)`-planes to a degree-`d` genus-`g` curve.
pub fn secant_table(d: i64, g: i64, order: usize) -> Result<Vec<(usize, Scalar)>> {
    if g < 0 {
        return Err(TautError::InvalidArgument("genus must be nonnegative".into()));
    }
    let coeffs = extract_universal_coeffs(1, Sign::Minus, order)?;
    let series = universal_series(&coeffs, &int(d), &int(2 - 2 * g), order)?;
    Ok((1..=order)
        .map(|n| (n, sign_pow(n as i64) * &series.coeffs()[n]))
        .collect())
}

/// The node count `(d^2 - 3d + 2 - 2g)/2` as a polynomial identity, and
/// integrality of the table over a grid of `(d, g)`.
pub fn secant_check(order: usize) -> Result<VerificationReport> {
    let order = order.max(2);
    let mut report = ReportBuilder::new("secant", order);
    let coeffs = extract_universal_coeffs(1, Sign::Minus, order)?;
    let d = Polynomial::var("d");
    let g = Polynomial::var("g");
    let e = &Polynomial::from_i64(2) - &g.scale(&int(2));
    let series = universal_series(&coeffs, &d, &e, order)?;
    let nodes = &(&(&(&d * &d) - &d.scale(&int(3))) + &Polynomial::from_i64(2)) - &g.scale(&int(2));
    report.compare(2, &series.coeffs()[2], &nodes.scale(&ratio(1, 2)));
    for dv in 0..=8 {
        for gv in 0..=3 {
            for (n, v) in secant_table(dv, gv, order)? {
                if !is_integer(&v) {
                    report.fail(n as i64, format!("d={dv},g={gv}: {v}"), "an integer");
                }
            }
        }
    }
    report.note("integral for d in [0,8], g in [0,3]");
    Ok(report.finish())
}
