use crate::algebra::scalar::{binom, int, ratio};
use crate::algebra::{Coeff, LaurentPolynomial, Polynomial, Scalar, TruncatedSeries, UniPoly};
use crate::error::{Result, TautError};
use crate::localization::{
    affine_chern_series, equivariant_euler_characteristic, graded_class_integral, ClassMode, CurveFixture,
};
use crate::tautseries::{Adjudication, ReportBuilder, VerificationReport};

/// `Σ binom(2n-2, n) z^n` against `(1 - 2z + √(1-4z)) / (2√(1-4z))`, and the
/// substitution `z = k(1-k)` giving `(1-k)^2 / (1-2k)`.
pub fn ogf_a001791_check(order: usize) -> Result<VerificationReport> {
    if order < 4 {
        return Err(TautError::InvalidArgument("order must be at least 4".into()));
    }
    let mut report = ReportBuilder::new("a001791", order);
    let values = TruncatedSeries::from_fn("z", order, |n| binom(2 * n as i64 - 2, n as i64));
    let root = TruncatedSeries::from_vec("z", order, vec![int(1), int(-4)]).pow_scalar(&ratio(1, 2))?;
    let num = &TruncatedSeries::from_vec("z", order, vec![int(1), int(-2)]) + &root;
    let closed = num.checked_div(&root.scale(&int(2)))?;
    report.compare_series(&values, &closed);

    let sub = TruncatedSeries::from_vec("k", order, vec![int(0), int(1), int(-1)]);
    let lhs = values.compose(&sub)?;
    let one_minus_k = TruncatedSeries::from_vec("k", order, vec![int(1), int(-1)]);
    let rhs = (&one_minus_k * &one_minus_k)
        .checked_div(&TruncatedSeries::from_vec("k", order, vec![int(1), int(-2)]))?;
    report.compare_series(&lhs, &rhs);
    report.note(format!("z^4 coefficient {}", values.coeffs()[4]));
    Ok(report.finish())
}

/// Outcome of comparing the localization sum `N_n^d(t)` with the closed
/// rational expression.
struct NndOutcome {
    /// Whether each denominator reading `Π(1 ∓ (d-i)xt)(1 - ixt)` matches.
    readings: [bool; 2],
}

pub const NND_READINGS: [&str; 2] = ["(1-(d-i)xt)(1-ixt)", "(1+(d-i)xt)(1-ixt)"];

fn nnd_compare(n: usize, d: i64, report: &mut ReportBuilder) -> Result<NndOutcome> {
    if !(1..=8).contains(&n) {
        return Err(TautError::InvalidArgument("n must lie in [1, 8]".into()));
    }
    let x_order = 2 * n + 2;
    let local = graded_class_integral(&CurveFixture::p1_line(d), n, ClassMode::Segre, x_order)?;
    let expected = binom(2 * n as i64 - 2 - d, n as i64);
    for (k, c) in local.coeffs().iter().enumerate().take(n) {
        report.compare(k as i64, c, &LaurentPolynomial::default());
    }
    report.compare(n as i64, &local.coeffs()[n], &LaurentPolynomial::constant(expected.clone()));

    let mut readings = [false; 2];
    for (slot, sign) in readings.iter_mut().zip([-1i64, 1]) {
        let mut rhs = TruncatedSeries::<LaurentPolynomial>::monomial("x", x_order, LaurentPolynomial::constant(expected.clone()), n);
        for i in 0..n as i64 {
            rhs = rhs.div_linear(&LaurentPolynomial::monomial(int(sign * (d - i)), 1));
            rhs = rhs.div_linear(&LaurentPolynomial::monomial(int(-i), 1));
        }
        *slot = rhs == local;
    }
    Ok(NndOutcome { readings })
}

/// Localization against the closed form of `N_n^d(t)`: the `x^n` coefficient
/// is `binom(2n-2-d, n)` and at least one denominator reading matches.
pub fn lemma_nnd_rational_identity(n: usize, d: i64) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("lemma_nnd", n);
    let out = nnd_compare(n, d, &mut report)?;
    let holding: Vec<&str> = NND_READINGS
        .iter()
        .zip(out.readings)
        .filter(|(_, h)| *h)
        .map(|(l, _)| *l)
        .collect();
    if holding.is_empty() {
        report.fail(-1, "denominator", "no reading matches");
    }
    report.note(format!("n={n}, d={d}: matching denominators {}", holding.join(", ")));
    Ok(report.finish())
}

/// [`lemma_nnd_rational_identity`] over `n <= n_max` and `d` in `d_range`;
/// fails unless exactly one denominator reading holds everywhere.
pub fn lemma_nnd_sweep(n_max: usize, d_range: std::ops::RangeInclusive<i64>) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("lemma_nnd", n_max);
    let mut adj = Adjudication::new(&NND_READINGS);
    for n in 1..=n_max {
        for d in d_range.clone() {
            let out = nnd_compare(n, d, &mut report)?;
            adj.record(format!("(n={n},d={d})"), &out.readings);
        }
    }
    report.note(format!("x^n coefficient binom(2n-2-d,n) for n<={n_max}, d in [{},{}]", d_range.start(), d_range.end()));
    adj.apply(&mut report, "denominator");
    Ok(report.finish())
}

/// `binom(p(y), k)` as a polynomial in `y`.
fn binom_poly(p: &UniPoly, k: usize) -> UniPoly {
    let mut out = UniPoly::constant(int(1));
    for j in 0..k {
        out = &out * &(p - &UniPoly::constant(int(j as i64)));
    }
    let fact: Scalar = (1..=k as i64).map(int).product();
    out.scale(&fact.recip())
}

/// `Σ_k binom(-y+n-1, n-k) binom(y+n-1-d, k) = binom(2n-2-d, n)` in `ℚ[y]`.
pub fn chu_vandermonde_check(n: usize, d: i64) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("chu_vandermonde", n);
    let ni = n as i64;
    let a = UniPoly::from_i64(&[ni - 1, -1]);
    let b = UniPoly::from_i64(&[ni - 1 - d, 1]);
    let mut sum = UniPoly::default();
    for k in 0..=n {
        sum = &sum + &(&binom_poly(&a, n - k) * &binom_poly(&b, k));
    }
    report.compare(ni, &sum, &UniPoly::constant(binom(2 * ni - 2 - d, ni)));
    Ok(report.finish())
}

pub fn chu_vandermonde_sweep(n_max: usize, d_range: std::ops::RangeInclusive<i64>) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("chu_vandermonde", n_max);
    for n in 0..=n_max {
        for d in d_range.clone() {
            if let Some(w) = chu_vandermonde_check(n, d)?.witness {
                report.fail(w.index, format!("d={d}: {}", w.lhs), w.rhs);
            }
        }
    }
    report.note(format!("polynomial identity in y for n<={n_max}, d in [{},{}]", d_range.start(), d_range.end()));
    Ok(report.finish())
}

/// Default `q` truncation for [`lambda_y_identity_check`].
pub fn default_q_order(nz: usize, a: i64) -> usize {
    2 * nz + a.max(0) as usize
}

/// `Σ z^n Π_{i=1..n} (1 - y q^{a+i-1}) / (1 - q^i) = exp(Σ z^n/n (1 - q^{na} y^n) / (1 - q^n))`
/// with `z` and `q` truncated and `y` exact, followed by the `β → 0` limit
/// at the same `z` order.
pub fn lambda_y_identity_check(nz: usize, nq: usize, a: i64) -> Result<VerificationReport> {
    if a < 0 {
        return Err(TautError::NegativeWeightUnsupported(a));
    }
    if nz == 0 || nz > 8 || nq > 16 {
        return Err(TautError::InvalidArgument("need 1 <= Nz <= 8 and Nq <= 16".into()));
    }
    type QSeries = TruncatedSeries<Polynomial>;
    let y = Polynomial::var("y");
    let one = QSeries::one("q", nq);
    let q_mono = |c: Polynomial, k: usize| QSeries::monomial("q", nq, c, k);
    let one_minus_q = |k: usize| if k <= nq { &one - &q_mono(Polynomial::from_i64(1), k) } else { one.clone() };

    let mut lhs = vec![one.clone()];
    for i in 1..=nz {
        let e = a as usize + i - 1;
        let num = if e <= nq { &one - &q_mono(y.clone(), e) } else { one.clone() };
        let next = &(lhs.last().unwrap() * &num) * &one_minus_q(i).reciprocal()?;
        lhs.push(next);
    }
    let lhs = TruncatedSeries::new("z", nz, lhs, &one.zero_like());

    let mut exponent = vec![one.zero_like()];
    for n in 1..=nz {
        let e = n * a as usize;
        let num = if e <= nq { &one - &q_mono(y.pow(n as u32), e) } else { one.clone() };
        let term = &num * &one_minus_q(n).reciprocal()?;
        exponent.push(term.scale(&ratio(1, n as i64)));
    }
    let rhs = TruncatedSeries::new("z", nz, exponent, &one.zero_like()).exp()?;

    let mut report = ReportBuilder::new("lambda_y", nz);
    report.compare_series(&lhs, &rhs);
    report.note(format!("a={a}, truncated at z^{nz}, q^{nq}"));
    let beta = beta_limit_identity_check(nz, a)?;
    for line in beta.note_lines() {
        report.note(line);
    }
    if let Some(w) = beta.witness {
        report.fail(w.index, w.lhs, w.rhs);
    }
    Ok(report.finish())
}

/// `exp(Σ z^n/n · c)` for a Laurent coefficient `c`.
fn exp_constant_log(c: &LaurentPolynomial, sign_alternates: bool, order: usize) -> Result<TruncatedSeries<LaurentPolynomial>> {
    let mut exponent = vec![LaurentPolynomial::default()];
    for n in 1..=order as i64 {
        let s = if sign_alternates && n % 2 == 0 { -1 } else { 1 };
        exponent.push(c.scale(&ratio(s, n)));
    }
    Ok(TruncatedSeries::from_vec("z", order, exponent).exp()?)
}

/// The `β → 0` limit of the character identity over `ℚ[t, 1/t]`:
/// `Σ z^n Π_{i=1..n} (1 + at + (i-1)t)/(it) = exp(Σ z^n/n · (1+at)/t)`,
/// plus the equivariant Chern series of the affine line against
/// `exp(Σ (-1)^{n+1} z^n/n · (1+at)/(-t))`.
pub fn beta_limit_identity_check(order: usize, a: i64) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("beta_limit", order);
    let mut lhs = vec![LaurentPolynomial::constant(int(1))];
    for i in 1..=order as i64 {
        let factor = LaurentPolynomial::from_pairs(&[(-1, int(1)), (0, int(a + i - 1))]).scale(&ratio(1, i));
        let next = lhs.last().unwrap() * &factor;
        lhs.push(next);
    }
    let lhs = TruncatedSeries::from_vec("z", order, lhs);
    let weight = LaurentPolynomial::from_pairs(&[(-1, int(1)), (0, int(a))]);
    report.compare_series(&lhs, &exp_constant_log(&weight, false, order)?);

    let chern = affine_chern_series(&[a], 1, order);
    report.compare_series(&chern, &exp_constant_log(&weight.scale(&int(-1)), true, order)?);
    report.note(format!("beta-limit and equivariant Chern identities for a={a} to z^{order}"));
    Ok(report.finish())
}

/// `Σ z^n χ(C^[n], Λ_{-y} L^[n])` on `O(d)` over the projective line, from
/// the Lefschetz sum at `q = 1`, as a `z`-series of polynomials in `y`.
pub fn lambda_y_euler_series(d: i64, order: usize) -> Result<TruncatedSeries<UniPoly>> {
    let fixture = CurveFixture::p1_line(d);
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let values = equivariant_euler_characteristic(&fixture, n, n)?.at_q_one()?;
        coeffs.push(UniPoly::new(values));
    }
    Ok(TruncatedSeries::from_vec("z", order, coeffs))
}

/// Adjudicates the plain sum `Σ z^n (1 - y^n (d+1))` against the exponential
/// `exp(Σ z^n/n (1 - y^n (d+1)))` using the Lefschetz values.
pub fn prop33_probe(d: i64, order: usize) -> Result<VerificationReport> {
    if order == 0 || order > 6 {
        return Err(TautError::InvalidArgument("order must lie in [1, 6]".into()));
    }
    let lhs = lambda_y_euler_series(d, order)?;
    // χ(P^1, Λ_{-y^n} O(d)) = 1 - y^n (d+1)
    let chi = |n: usize| &UniPoly::constant(int(1)) + &UniPoly::monomial(int(-(d + 1)), n);
    let plain = TruncatedSeries::from_fn("z", order, |n| if n == 0 { UniPoly::constant(int(1)) } else { chi(n) });
    let exponent = TruncatedSeries::from_fn("z", order, |n| {
        if n == 0 {
            UniPoly::default()
        } else {
            chi(n).scale(&ratio(1, n as i64))
        }
    });
    let expo = exponent.exp()?;

    let mut report = ReportBuilder::new("prop33", order);
    let mut adj = Adjudication::new(&["plain sum", "exponential form"]);
    for n in 0..=order {
        let l = &lhs.coeffs()[n];
        adj.record(n.to_string(), &[*l == plain.coeffs()[n], *l == expo.coeffs()[n]]);
    }
    let y0 = lhs.map(|p| p.coeff(0));
    report.compare_series(&y0, &TruncatedSeries::from_fn("z", order, |_| int(1)));
    report.note("n=0 term of the plain sum taken as 1");
    adj.apply(&mut report, &format!("d={d} right side"));
    Ok(report.finish())
}
