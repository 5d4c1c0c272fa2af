use etamu::approx::{default_log2_approx, fit_target, preset_qa, preset_qa_unit, FitGrid};
use etamu::metrics::{self, CurveKind};
use etamu::oracle::{self, QuadratureSettings};
use etamu::{fading, ApproxKind, Error, FitTarget};
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Domain { .. }
        | Error::Degenerate(_)
        | Error::Modulation(_)
        | Error::Approximation(_)
        | Error::Parse(_) => PyValueError::new_err(e.to_string()),
        Error::Overflow { .. } => PyArithmeticError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// η–μ fading with L-branch MRC.
#[pyclass(name = "FadingSpec", frozen)]
#[derive(Clone)]
struct PyFadingSpec {
    inner: etamu::FadingSpec,
}

#[pymethods]
impl PyFadingSpec {
    #[new]
    #[pyo3(signature = (format, eta, mu, branches=1, mean_snr=1.0))]
    fn new(format: &str, eta: f64, mu: f64, branches: u32, mean_snr: f64) -> PyResult<Self> {
        let format = format.parse().map_err(to_py)?;
        let inner = etamu::FadingSpec::new(format, eta, mu, branches, mean_snr).map_err(to_py)?;
        Ok(Self { inner })
    }

    /// Nakagami-m as the η → 0 limit.
    #[staticmethod]
    #[pyo3(signature = (m, branches=1, mean_snr=1.0))]
    fn nakagami(m: f64, branches: u32, mean_snr: f64) -> PyResult<Self> {
        let inner =
            fading::from_special_case(etamu::SpecialCase::Nakagami { m }, branches, mean_snr)
                .map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (branches=1, mean_snr=1.0))]
    fn rayleigh(branches: u32, mean_snr: f64) -> PyResult<Self> {
        let inner = fading::from_special_case(etamu::SpecialCase::Rayleigh, branches, mean_snr)
            .map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn format(&self) -> String {
        self.inner.format.to_string()
    }

    #[getter]
    fn eta(&self) -> f64 {
        self.inner.eta
    }

    #[getter]
    fn mu(&self) -> f64 {
        self.inner.mu
    }

    #[getter]
    fn branches(&self) -> u32 {
        self.inner.branches
    }

    #[getter]
    fn mean_snr(&self) -> f64 {
        self.inner.mean_snr
    }

    /// Mean combined SNR Lγ̄.
    #[getter]
    fn zeta_tilde(&self) -> f64 {
        self.inner.zeta_tilde()
    }

    fn with_mean_snr(&self, mean_snr: f64) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.with_mean_snr(mean_snr).map_err(to_py)?,
        })
    }

    fn pdf(&self, snr: f64) -> PyResult<f64> {
        fading::pdf_bessel(&self.inner, snr).map_err(to_py)
    }

    /// Finite-sum density; needs integer 2Lμ.
    fn pdf_integer(&self, snr: f64) -> PyResult<f64> {
        fading::pdf_integer(&self.inner, snr).map_err(to_py)
    }

    fn mgf(&self, s: f64) -> PyResult<f64> {
        fading::mgf(&self.inner, s).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "FadingSpec(format='{}', eta={}, mu={}, branches={}, mean_snr={})",
            self.inner.format,
            self.inner.eta,
            self.inner.mu,
            self.inner.branches,
            self.inner.mean_snr
        )
    }
}

/// Generalized Gaussian noise with unit variance.
#[pyclass(name = "NoiseSpec", frozen)]
#[derive(Clone)]
struct PyNoiseSpec {
    inner: etamu::NoiseSpec,
}

#[pymethods]
impl PyNoiseSpec {
    #[new]
    fn new(a: f64) -> PyResult<Self> {
        Ok(Self {
            inner: etamu::NoiseSpec::new(a).map_err(to_py)?,
        })
    }

    #[getter]
    fn a(&self) -> f64 {
        self.inner.a()
    }

    /// Tail probability Q_a(x).
    fn qa(&self, x: f64) -> f64 {
        etamu::noise::qa_exact(&self.inner, x)
    }

    fn __repr__(&self) -> String {
        format!("NoiseSpec(a={})", self.inner.a())
    }
}

#[pyclass(name = "Modulation", frozen)]
#[derive(Clone)]
struct PyModulation {
    inner: etamu::ModulationSpec,
}

#[pymethods]
impl PyModulation {
    #[new]
    #[pyo3(signature = (scheme, m=2))]
    fn new(scheme: &str, m: u32) -> PyResult<Self> {
        let scheme = scheme.parse().map_err(to_py)?;
        Ok(Self {
            inner: etamu::ModulationSpec::new(scheme, m).map_err(to_py)?,
        })
    }

    #[getter]
    fn scheme(&self) -> String {
        self.inner.scheme.to_string()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m
    }

    /// (𝒜, ℬ) in 𝒜·Q_a(√(ℬγ)).
    #[getter]
    fn constants(&self) -> (f64, f64) {
        (self.inner.a, self.inner.b)
    }

    fn __repr__(&self) -> String {
        format!("Modulation('{}', {})", self.inner.scheme, self.inner.m)
    }
}

/// Four-term exponential sum.
#[pyclass(name = "ExpSumApprox", frozen)]
#[derive(Clone)]
struct PyExpSumApprox {
    inner: etamu::ExpSumApprox,
}

#[pymethods]
impl PyExpSumApprox {
    /// Tabulated Q_a(√x) fit. `unit=False` returns the rows verbatim.
    #[staticmethod]
    #[pyo3(signature = (a, unit=true))]
    fn table(a: f64, unit: bool) -> PyResult<Self> {
        let inner = if unit {
            preset_qa_unit(a)
        } else {
            preset_qa(a)
        }
        .map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn log2() -> Self {
        Self {
            inner: default_log2_approx(),
        }
    }

    /// Fit `log2` or `qa<a>` with a `decaying` or `saturating` sum on [lo, hi].
    #[staticmethod]
    #[pyo3(signature = (target, kind, lo, hi, points=200))]
    fn fit(target: &str, kind: &str, lo: f64, hi: f64, points: usize) -> PyResult<Self> {
        let target: FitTarget = target.parse().map_err(to_py)?;
        let kind: ApproxKind = kind.parse().map_err(to_py)?;
        let inner = fit_target(target, kind, FitGrid { lo, hi, points }).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_record(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: etamu::ExpSumApprox::from_record(text).map_err(to_py)?,
        })
    }

    fn to_record(&self) -> String {
        self.inner.to_record()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    /// [(α, λ), ...]
    #[getter]
    fn terms(&self) -> Vec<(f64, f64)> {
        self.inner
            .terms
            .iter()
            .map(|t| (t.alpha, t.lambda))
            .collect()
    }

    #[getter]
    fn max_abs_err(&self) -> f64 {
        self.inner.max_abs_err
    }

    fn __call__(&self, x: f64) -> f64 {
        self.inner.eval(x)
    }

    fn __repr__(&self) -> String {
        format!(
            "ExpSumApprox('{}', {}, max_abs_err={:e})",
            self.inner.name, self.inner.kind, self.inner.max_abs_err
        )
    }
}

/// Closed-form average error rate.
#[pyfunction]
fn aber(spec: &PyFadingSpec, modulation: &PyModulation, approx: &PyExpSumApprox) -> PyResult<f64> {
    metrics::aber(&spec.inner, &modulation.inner, &approx.inner).map_err(to_py)
}

/// Closed-form ergodic capacity in bits/s/Hz.
#[pyfunction]
fn acc(spec: &PyFadingSpec, approx: &PyExpSumApprox) -> PyResult<f64> {
    metrics::acc(&spec.inner, &approx.inner).map_err(to_py)
}

/// Closed form over a dB grid; returns [(snr_db, value), ...].
#[pyfunction]
#[pyo3(signature = (kind, spec, approx, grid_db, modulation=None))]
fn curve(
    py: Python<'_>,
    kind: &str,
    spec: &PyFadingSpec,
    approx: &PyExpSumApprox,
    grid_db: Vec<f64>,
    modulation: Option<PyModulation>,
) -> PyResult<Vec<(f64, f64)>> {
    let kind = match kind {
        "aber" => CurveKind::Aber,
        "acc" => CurveKind::Acc,
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be 'aber' or 'acc', got {other:?}"
            )))
        }
    };
    let m = modulation.map(|m| m.inner);
    let points = py
        .allow_threads(|| metrics::curve(kind, &spec.inner, m.as_ref(), &approx.inner, &grid_db))
        .map_err(to_py)?;
    Ok(points
        .into_iter()
        .map(|p| (p.mean_snr_db, p.value))
        .collect())
}

/// Error rate by adaptive quadrature with the exact noise tail.
#[pyfunction]
#[pyo3(signature = (spec, modulation, noise, rel_tol=1e-10))]
fn aber_quadrature(
    py: Python<'_>,
    spec: &PyFadingSpec,
    modulation: &PyModulation,
    noise: &PyNoiseSpec,
    rel_tol: f64,
) -> PyResult<f64> {
    let s = QuadratureSettings::with_rel_tol(rel_tol);
    py.allow_threads(|| oracle::aber_quadrature(&spec.inner, &modulation.inner, &noise.inner, &s))
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (spec, rel_tol=1e-10))]
fn acc_quadrature(py: Python<'_>, spec: &PyFadingSpec, rel_tol: f64) -> PyResult<f64> {
    let s = QuadratureSettings::with_rel_tol(rel_tol);
    py.allow_threads(|| oracle::acc_quadrature(&spec.inner, &s))
        .map_err(to_py)
}

/// Seeded Monte-Carlo error rate; returns (mean, standard error).
#[pyfunction]
fn aber_montecarlo(
    py: Python<'_>,
    spec: &PyFadingSpec,
    modulation: &PyModulation,
    noise: &PyNoiseSpec,
    n: u64,
    seed: u64,
) -> PyResult<(f64, f64)> {
    let e = py
        .allow_threads(|| {
            oracle::aber_montecarlo(&spec.inner, &modulation.inner, &noise.inner, n, seed)
        })
        .map_err(to_py)?;
    Ok((e.mean, e.std_error))
}

/// KS statistics of simulated Hoyt-q samples against both η–μ mappings.
/// Returns (ks_format_ii, ks_format_i, critical_1pct).
#[pyfunction]
fn hoyt_arbitration(py: Python<'_>, q: f64, n: usize, seed: u64) -> PyResult<(f64, f64, f64)> {
    let r = py
        .allow_threads(|| oracle::hoyt_arbitration(q, n, seed))
        .map_err(to_py)?;
    Ok((r.ks_paper, r.ks_literature, r.critical_1pct))
}

#[pymodule]
#[pyo3(name = "etamu")]
fn etamu_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFadingSpec>()?;
    m.add_class::<PyNoiseSpec>()?;
    m.add_class::<PyModulation>()?;
    m.add_class::<PyExpSumApprox>()?;
    m.add_function(wrap_pyfunction!(aber, m)?)?;
    m.add_function(wrap_pyfunction!(acc, m)?)?;
    m.add_function(wrap_pyfunction!(curve, m)?)?;
    m.add_function(wrap_pyfunction!(aber_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(acc_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(aber_montecarlo, m)?)?;
    m.add_function(wrap_pyfunction!(hoyt_arbitration, m)?)?;
    Ok(())
}
