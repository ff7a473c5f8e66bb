//! Python bindings. Exact values cross the boundary as `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tautcurve::algebra::{format_scalar, Scalar};
use tautcurve::cli::{run_check, verify_all as verify_all_checks, CHECK_NAMES};
use tautcurve::closedforms;
use tautcurve::localization::{self, ClassMode, CurveFixture, Sign};
use tautcurve::tautseries::{self, VerificationReport};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_sign(sign: &str) -> PyResult<Sign> {
    sign.parse().map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_scalar(x),))
}

fn fractions<'py>(py: Python<'py>, xs: &[Scalar]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    xs.iter().map(|x| fraction(py, x)).collect()
}

/// A torus-fixed-point description of a curve with a split bundle.
#[pyclass(name = "CurveFixture", frozen)]
struct PyCurveFixture {
    inner: CurveFixture,
}

#[pymethods]
impl PyCurveFixture {
    /// `O(d_1) + ... + O(d_r)` on the projective line.
    #[staticmethod]
    fn p1_degrees(degrees: Vec<i64>) -> PyResult<Self> {
        if degrees.is_empty() {
            return Err(value_error("need at least one degree"));
        }
        Ok(PyCurveFixture {
            inner: CurveFixture::p1_degrees(&degrees),
        })
    }

    #[staticmethod]
    fn affine_line(weights: Vec<i64>) -> Self {
        PyCurveFixture {
            inner: CurveFixture::affine_line_weights(&weights),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyCurveFixture {
            inner: CurveFixture::from_json(text).map_err(value_error)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn compact(&self) -> bool {
        self.inner.compact
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn __repr__(&self) -> String {
        format!("CurveFixture({:?}, rank={})", self.inner.name, self.inner.rank())
    }
}

/// Outcome of a named check.
#[pyclass(name = "Report", frozen, get_all)]
struct PyReport {
    name: String,
    passed: bool,
    order: usize,
    witness: Option<(i64, String, String)>,
    notes: Vec<String>,
}

#[pymethods]
impl PyReport {
    fn __repr__(&self) -> String {
        format!("Report({:?}, passed={})", self.name, self.passed)
    }
}

impl From<VerificationReport> for PyReport {
    fn from(r: VerificationReport) -> Self {
        PyReport {
            notes: r.note_lines().map(str::to_string).collect(),
            name: r.name,
            passed: r.pass,
            order: r.order,
            witness: r.witness.map(|w| (w.index, w.lhs, w.rhs)),
        }
    }
}

/// `∫_{C^[n]} c(E^[n])` (`mode="chern"`) or `s(E^[n])` (`mode="segre"`).
#[pyfunction]
fn chern_number<'py>(py: Python<'py>, fixture: &PyCurveFixture, n: usize, mode: &str) -> PyResult<Bound<'py, PyAny>> {
    let mode = match mode {
        "chern" => ClassMode::Chern,
        "segre" => ClassMode::Segre,
        other => return Err(value_error(format!("mode must be chern or segre, got {other:?}"))),
    };
    let v = localization::chern_number(&fixture.inner, n, mode).map_err(value_error)?;
    fraction(py, &v)
}

/// Coefficients of `Σ z^n ∫ c(±E^[n])` for `n = 0..=order`.
#[pyfunction]
#[pyo3(signature = (fixture, sign = "plus", order = 8))]
fn chern_generating_series<'py>(
    py: Python<'py>,
    fixture: &PyCurveFixture,
    sign: &str,
    order: usize,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let s = tautseries::chern_generating_series(&fixture.inner, parse_sign(sign)?, order).map_err(value_error)?;
    fractions(py, s.coeffs())
}

/// `(first, second)` lists: `(A, B)` for `sign="plus"`, `(C, D)` for `"minus"`.
#[pyfunction]
#[pyo3(signature = (rank, sign = "plus", order = 8))]
#[allow(clippy::type_complexity)]
fn universal_coeffs<'py>(
    py: Python<'py>,
    rank: usize,
    sign: &str,
    order: usize,
) -> PyResult<(Vec<Bound<'py, PyAny>>, Vec<Bound<'py, PyAny>>)> {
    let c = tautseries::extract_universal_coeffs(rank, parse_sign(sign)?, order).map_err(value_error)?;
    Ok((fractions(py, &c.first)?, fractions(py, &c.second)?))
}

/// `k(z)` solving `z = k(1-k)^r`.
#[pyfunction]
fn invert_z_k<'py>(py: Python<'py>, r: usize, order: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let k = closedforms::invert_z_k(r, order).map_err(value_error)?;
    fractions(py, k.coeffs())
}

/// `[(n, count)]` of `n`-secant `(n-2)`-planes for `n = 1..=order`.
#[pyfunction]
fn secant_table<'py>(py: Python<'py>, degree: i64, genus: i64, order: usize) -> PyResult<Vec<(usize, Bound<'py, PyAny>)>> {
    closedforms::secant_table(degree, genus, order)
        .map_err(value_error)?
        .iter()
        .map(|(n, v)| Ok((*n, fraction(py, v)?)))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (check, order = 8))]
fn verify(check: &str, order: usize) -> PyResult<PyReport> {
    Ok(run_check(check, order).map_err(value_error)?.into())
}

#[pyfunction]
#[pyo3(signature = (order = 8))]
fn verify_all(py: Python<'_>, order: usize) -> PyResult<Vec<PyReport>> {
    let reports = py.detach(|| verify_all_checks(order)).map_err(value_error)?;
    Ok(reports.into_iter().map(PyReport::from).collect())
}

#[pymodule]
pub fn pytautcurve(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCurveFixture>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(chern_number, m)?)?;
    m.add_function(wrap_pyfunction!(chern_generating_series, m)?)?;
    m.add_function(wrap_pyfunction!(universal_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(invert_z_k, m)?)?;
    m.add_function(wrap_pyfunction!(secant_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add("CHECK_NAMES", CHECK_NAMES.to_vec())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
