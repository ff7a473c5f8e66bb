//! Acceptance suite: every criterion is an exact comparison. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::*;
use tautcurve::algebra::scalar::{int, is_integer, ratio};
use tautcurve::algebra::{Coeff, LaurentPolynomial, Polynomial, Scalar, TruncatedSeries};
use tautcurve::closedforms::{
    beta_limit_identity_check, lambda_y_identity_check, lehn_surface_inverse, marian_oprea_sweep, ogf_a001791_check,
    verify_thm14,
};
use tautcurve::localization::{
    affine_chern_series, chern_number, equivariant_euler_characteristic, psi_phi_series, ClassMode, CurveFixture, Sign,
};
use tautcurve::tautseries::{
    chern_generating_series, extract_universal_coeffs, universal_series, verify_b_formulas, verify_conjecture12,
    VerificationReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_report(rep: VerificationReport) -> Outcome {
    match rep.witness {
        None => Ok(rep.notes),
        Some(w) => Err(format!("{} at {}: {} vs {}; {}", rep.name, w.index, w.lhs, w.rhs, rep.notes)),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, lhs: T, rhs: T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

fn segre_numbers() -> Outcome {
    for d in -3..=3 {
        for n in 0..=8 {
            let got = chern_number(&CurveFixture::p1_line(d), n, ClassMode::Segre).map_err(|e| e.to_string())?;
            expect_eq(&format!("d={d} n={n}"), got, binom_oracle(2 * n as i64 - 2 - d, n as i64))?;
        }
    }
    Ok("binom(2n-2-d, n) for n<=8, d in [-3,3]".into())
}

fn rank_one_chern() -> Outcome {
    for d in -2..=2 {
        let series = chern_generating_series(&CurveFixture::p1_line(d), Sign::Plus, 10).map_err(|e| e.to_string())?;
        let exponent = TruncatedSeries::from_fn("z", 10, |n| {
            if n == 0 {
                int(0)
            } else {
                ratio(if n % 2 == 1 { d } else { -d }, n as i64)
            }
        });
        expect_eq(&format!("d={d} exp form"), &series, &exponent.exp().map_err(|e| e.to_string())?)?;
        let oracle: Vec<Scalar> = (0..=10).map(|n| binom_oracle(d, n)).collect();
        expect_eq(&format!("d={d} (1+z)^d"), series.coeffs(), &oracle[..])?;
    }
    Ok("exp(sum (-1)^(n+1) z^n d/n) = (1+z)^d for d in [-2,2] to order 10".into())
}

fn a_formula() -> Outcome {
    for r in 1..=5usize {
        let c = extract_universal_coeffs(r, Sign::Plus, 9).map_err(|e| e.to_string())?;
        for n in 1..=9 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let want = int(sign) * binom_oracle(r as i64 * n as i64 - 1, n as i64 - 1);
            expect_eq(&format!("A[{r}][{n}]"), c.at(n).0, &want)?;
        }
    }
    from_report(verify_conjecture12(5, 9).map_err(|e| e.to_string())?)
}

fn integrality() -> Outcome {
    for r in 1..=5usize {
        for sign in [Sign::Plus, Sign::Minus] {
            let c = extract_universal_coeffs(r, sign, 9).map_err(|e| e.to_string())?;
            if let Some(v) = c.first.iter().chain(&c.second).find(|v| !is_integer(v)) {
                return Err(format!("r={r} {sign}: {v}"));
            }
        }
    }
    Ok("A, B, C, D integral for r<=5, n<=9".into())
}

fn b_formulas() -> Outcome {
    let rep = verify_b_formulas(10).map_err(|e| e.to_string())?;
    let verdicts: Vec<&str> = rep.note_lines().filter(|l| l.contains("formula")).collect();
    let summary = verdicts.join("; ");
    from_report(rep).map(|_| summary)
}

fn segre_closed_form() -> Outcome {
    from_report(verify_thm14(10, -3..=3).map_err(|e| e.to_string())?)
}

fn functional_equations() -> Outcome {
    let rep = marian_oprea_sweep(4, 8).map_err(|e| e.to_string())?;
    let summary = rep
        .note_lines()
        .filter(|l| l.starts_with("r=4"))
        .collect::<Vec<_>>()
        .join("; ");
    from_report(rep).map(|_| summary)
}

fn lehn_inverse() -> Outcome {
    let k = lehn_surface_inverse(3).map_err(|e| e.to_string())?;
    expect_eq("k", &k.coeffs()[1..], &[int(1), int(-9), int(94)][..])?;
    Ok("k = z - 9z^2 + 94z^3 - ...".into())
}

fn secant_nodes() -> Outcome {
    let c = extract_universal_coeffs(1, Sign::Minus, 2).map_err(|e| e.to_string())?;
    let d = Polynomial::var("d");
    let g = Polynomial::var("g");
    let e = &Polynomial::from_i64(2) - &(&g + &g);
    let series = universal_series(&c, &d, &e, 2).map_err(|e| e.to_string())?;
    // (d^2 - 3d + 2 - 2g)/2 assembled term by term
    let half = |p: Polynomial| p.scale(&ratio(1, 2));
    let want = &(&(&half(&d * &d) - &half(&(&d + &d) + &d)) + &Polynomial::from_i64(1)) - &g;
    expect_eq("z^2 coefficient", &series.coeffs()[2], &want)?;
    Ok(format!("n=2: {}", series.coeffs()[2]))
}

fn lambda_y() -> Outcome {
    for a in 0..=2 {
        from_report(lambda_y_identity_check(5, 12, a).map_err(|e| e.to_string())?)?;
        from_report(beta_limit_identity_check(8, a).map_err(|e| e.to_string())?)?;
    }
    Ok("product = exponential form for a in {0,1,2} at (z^5, q^12); beta limit to z^8".into())
}

fn a001791() -> Outcome {
    from_report(ogf_a001791_check(12).map_err(|e| e.to_string())?)
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 48,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(series(), series(), series()), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            Ok(())
        })
        .map_err(|e| fail("ring axioms", e))?;
    runner
        .run(&(series_from(1), series_from(0)), |(f, g)| {
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
            prop_assert_eq!(g.exp().unwrap().log().unwrap(), g);
            Ok(())
        })
        .map_err(|e| fail("exp/log", e))?;
    runner
        .run(&reversible(), |f| {
            let g = f.reversion().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::identity("z", ORDER));
            Ok(())
        })
        .map_err(|e| fail("reversion", e))?;
    runner
        .run(&formal_fixture(), |fixture| {
            let psi = TruncatedSeries::from_vec("x", 1, vec![int(1), int(1)]);
            let phi = TruncatedSeries::<Scalar>::one("x", 1);
            let global = psi_phi_series(&fixture, &psi, &phi, Sign::Plus, 6).unwrap();
            let mut product = TruncatedSeries::<LaurentPolynomial>::one("z", 6);
            for p in &fixture.points {
                product = &product * &affine_chern_series(&p.bundle_weights, p.cotangent_weight, 6);
            }
            prop_assert_eq!(global, product);
            Ok(())
        })
        .map_err(|e| fail("factorization", e))?;
    runner
        .run(&(prop::collection::vec(-2i64..=2, 1..=3), 0usize..=5), |(degrees, n)| {
            let fixture = CurveFixture::p1_degrees(&degrees);
            for mode in [ClassMode::Chern, ClassMode::Segre] {
                prop_assert!(chern_number(&fixture, n, mode).is_ok());
            }
            Ok(())
        })
        .map_err(|e| fail("t-independence", e))?;
    for d in -4..=4 {
        let chi = equivariant_euler_characteristic(&CurveFixture::p1_line(d), 1, 1)
            .and_then(|c| c.at_q_one())
            .map_err(|e| e.to_string())?;
        expect_eq(&format!("chi at n=1, d={d}"), chi, vec![int(1), int(-(d + 1))])?;
    }
    Ok("ring axioms, exp/log, reversion, factorization, t-independence, Lefschetz at n=1".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("segre numbers on O(d)", segre_numbers),
        ("rank-one Chern series", rank_one_chern),
        ("A coefficients", a_formula),
        ("integrality", integrality),
        ("B formula readings", b_formulas),
        ("rank-one Segre closed form", segre_closed_form),
        ("C, D functional equations", functional_equations),
        ("surface substitution inverse", lehn_inverse),
        ("secant count n=2", secant_nodes),
        ("lambda_y identity", lambda_y),
        ("A001791", a001791),
        ("property suites", properties),
    ];
    let mut failures = 0;
    let mut total = Duration::ZERO;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        total += elapsed;
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{:.2?}]: {detail}", i + 1, elapsed),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} [{:.2?}]: {why}", i + 1, elapsed);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failures, criteria.len(), total);
    if failures > 0 {
        std::process::exit(1);
    }
}
