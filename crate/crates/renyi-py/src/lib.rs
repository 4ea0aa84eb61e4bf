//! Python bindings for the core library: probability distributions, energy
//! spectra, Hermitian operators, and the entropy/free-energy identity.
//!
//! The module mirrors the Rust API one-to-one as the extension module
//! `renyi_py`; domain failures surface as `ValueError` with the library's
//! own message text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use renyi::{
    free_energy, gibbs_state, gibbs_state_quantum, log_partition, quench_ratio, relation_check,
    relation_limit_check, renyi as renyi_entropy, renyi_quantum, validate_density,
    validate_density_strict, von_neumann_from_temperature, EntropyOrder,
};

fn domain(err: renyi::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn order(q: f64) -> PyResult<EntropyOrder> {
    EntropyOrder::new(q).map_err(domain)
}

/// A normalized probability distribution.
#[pyclass(name = "ProbDist", frozen)]
struct PyProbDist {
    inner: renyi::ProbDist,
}

#[pymethods]
impl PyProbDist {
    /// Build from non-negative weights; `strict=True` additionally demands
    /// the input already sums to 1 within 1e-9.
    #[new]
    #[pyo3(signature = (weights, strict = false))]
    fn new(weights: Vec<f64>, strict: bool) -> PyResult<Self> {
        let inner = if strict {
            renyi::ProbDist::new_strict(&weights)
        } else {
            renyi::ProbDist::new(&weights)
        }
        .map_err(domain)?;
        Ok(PyProbDist { inner })
    }

    /// The normalized weights.
    fn weights(&self) -> Vec<f64> {
        self.inner.weights().to_vec()
    }

    /// The Rényi entropy of order `q` (0, 1, and `inf` are the limit
    /// members of the family).
    fn renyi(&self, q: f64) -> PyResult<f64> {
        Ok(renyi_entropy(&self.inner, order(q)?))
    }

    /// The number of weights strictly above `threshold`.
    #[pyo3(signature = (threshold = 0.0))]
    fn support_size(&self, threshold: f64) -> usize {
        self.inner.support_size(threshold)
    }

    /// The largest weight.
    fn max_weight(&self) -> f64 {
        self.inner.max_weight()
    }

    /// Realize this distribution as the Gibbs state of a spectrum at
    /// reference temperature `temp0` (all weights must be positive).
    fn embed(&self, temp0: f64) -> PyResult<PyEnergySpectrum> {
        let inner = renyi::embed_distribution(&self.inner, temp0).map_err(domain)?;
        Ok(PyEnergySpectrum { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("ProbDist({:?})", self.inner.weights())
    }
}

/// A discrete energy spectrum.
#[pyclass(name = "EnergySpectrum", frozen)]
struct PyEnergySpectrum {
    inner: renyi::EnergySpectrum,
}

#[pymethods]
impl PyEnergySpectrum {
    #[new]
    fn new(levels: Vec<f64>) -> PyResult<Self> {
        let inner = renyi::EnergySpectrum::new(levels).map_err(domain)?;
        Ok(PyEnergySpectrum { inner })
    }

    /// The energy levels, in input order.
    fn levels(&self) -> Vec<f64> {
        self.inner.levels().to_vec()
    }

    /// The Gibbs state at temperature `t`.
    fn gibbs_state(&self, t: f64) -> PyResult<PyProbDist> {
        let inner = gibbs_state(&self.inner, t).map_err(domain)?;
        Ok(PyProbDist { inner })
    }

    /// `ln Z` at temperature `t`.
    fn log_partition(&self, t: f64) -> PyResult<f64> {
        log_partition(&self.inner, t).map_err(domain)
    }

    /// The free energy `F = -T ln Z` at temperature `t`.
    fn free_energy(&self, t: f64) -> PyResult<f64> {
        Ok(free_energy(&self.inner, t).map_err(domain)?.free_energy())
    }

    /// The von Neumann (Shannon) entropy of the Gibbs state at `t`.
    fn von_neumann(&self, t: f64) -> PyResult<f64> {
        von_neumann_from_temperature(&self.inner, t).map_err(domain)
    }

    /// Evaluate both sides of the secant identity at `(t0, q)`.
    fn relation_check(&self, t0: f64, q: f64) -> PyResult<PyRelationReport> {
        let inner = relation_check(&self.inner, t0, q).map_err(domain)?;
        Ok(PyRelationReport { inner })
    }

    /// Free-energy secants at steps `deltas`, as `(delta, secant, tangent,
    /// gap)` tuples; the gaps shrink linearly as the steps do.
    fn relation_limit(&self, t0: f64, deltas: Vec<f64>) -> PyResult<Vec<(f64, f64, f64, f64)>> {
        let points = relation_limit_check(&self.inner, t0, &deltas).map_err(domain)?;
        Ok(points
            .into_iter()
            .map(|p| (p.delta, p.secant, p.tangent, p.gap))
            .collect())
    }

    /// The free-energy secant slope between `t0` and `t0/q` (the right side
    /// of the identity).
    fn quench_ratio(&self, t0: f64, q: f64) -> PyResult<f64> {
        quench_ratio(&self.inner, t0, q).map_err(domain)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("EnergySpectrum({:?})", self.inner.levels())
    }
}

/// A Hermitian operator given as real and imaginary parts.
#[pyclass(name = "HermitianOperator", frozen)]
struct PyHermitianOperator {
    inner: renyi::HermitianOperator,
}

#[pymethods]
impl PyHermitianOperator {
    /// Build from a real part and an optional imaginary part (row-major
    /// nested lists); the matrix must be Hermitian within 1e-9.
    #[new]
    #[pyo3(signature = (re, im = None))]
    fn new(re: Vec<Vec<f64>>, im: Option<Vec<Vec<f64>>>) -> PyResult<Self> {
        let inner = match im {
            Some(im) => renyi::HermitianOperator::from_parts(&re, &im),
            None => renyi::HermitianOperator::from_real(&re),
        }
        .map_err(domain)?;
        Ok(PyHermitianOperator { inner })
    }

    /// A diagonal operator.
    #[staticmethod]
    fn diagonal(values: Vec<f64>) -> PyResult<Self> {
        let inner = renyi::HermitianOperator::diagonal(&values).map_err(domain)?;
        Ok(PyHermitianOperator { inner })
    }

    /// Eigenvalues in non-increasing order.
    fn eigenvalues(&self) -> PyResult<Vec<f64>> {
        Ok(renyi::eigh(&self.inner)
            .map_err(domain)?
            .eigenvalues()
            .to_vec())
    }

    /// The (real) trace.
    fn trace(&self) -> f64 {
        self.inner.trace()
    }

    /// The real part, row-major.
    fn real_parts(&self) -> Vec<Vec<f64>> {
        self.inner.real_parts()
    }

    /// The imaginary part, row-major.
    fn imag_parts(&self) -> Vec<Vec<f64>> {
        self.inner.imag_parts()
    }

    /// Interpret the operator as a density matrix and return its spectrum
    /// as a distribution; `strict=True` refuses traces away from 1 and
    /// negative eigenvalues beyond tolerance instead of repairing them.
    #[pyo3(signature = (strict = false))]
    fn validate_density(&self, strict: bool) -> PyResult<PyProbDist> {
        let inner = if strict {
            validate_density_strict(&self.inner)
        } else {
            validate_density(&self.inner)
        }
        .map_err(domain)?;
        Ok(PyProbDist { inner })
    }

    /// The quantum Rényi entropy of order `q`, treating the operator as a
    /// density matrix.
    fn renyi(&self, q: f64) -> PyResult<f64> {
        renyi_quantum(&self.inner, order(q)?).map_err(domain)
    }

    /// The Gibbs density matrix `exp(-H/t) / Z`, treating the operator as a
    /// Hamiltonian.
    fn gibbs_state(&self, t: f64) -> PyResult<PyHermitianOperator> {
        let inner = gibbs_state_quantum(&self.inner, t).map_err(domain)?;
        Ok(PyHermitianOperator { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.dim()
    }

    fn __repr__(&self) -> String {
        format!("HermitianOperator(dim={})", self.inner.dim())
    }
}

/// One evaluation of the secant identity.
#[pyclass(name = "RelationReport", frozen)]
struct PyRelationReport {
    inner: renyi::RelationReport,
}

#[pymethods]
impl PyRelationReport {
    /// The reference temperature `T0`.
    #[getter]
    fn t0(&self) -> f64 {
        self.inner.t0()
    }

    /// The compared temperature `T = T0/q`.
    #[getter]
    fn t(&self) -> f64 {
        self.inner.t()
    }

    /// The entropy order.
    #[getter]
    fn q(&self) -> f64 {
        self.inner.q()
    }

    /// The entropy side.
    #[getter]
    fn lhs(&self) -> f64 {
        self.inner.lhs()
    }

    /// The free-energy side.
    #[getter]
    fn rhs(&self) -> f64 {
        self.inner.rhs()
    }

    /// `lhs - rhs`.
    #[getter]
    fn residual(&self) -> f64 {
        self.inner.residual()
    }

    fn __repr__(&self) -> String {
        format!(
            "RelationReport(t0={}, t={}, q={}, lhs={}, rhs={}, residual={})",
            self.inner.t0(),
            self.inner.t(),
            self.inner.q(),
            self.inner.lhs(),
            self.inner.rhs(),
            self.inner.residual()
        )
    }
}

/// The Rényi entropy of order `q` for raw weights (normalized first).
#[pyfunction]
#[pyo3(name = "renyi")]
fn renyi_of_weights(weights: Vec<f64>, q: f64) -> PyResult<f64> {
    let p = renyi::ProbDist::new(&weights).map_err(domain)?;
    Ok(renyi_entropy(&p, order(q)?))
}

/// The q-derivative `(f(qx) - f(x)) / (qx - x)` of a Python callable.
#[pyfunction]
fn q_derivative(f: &Bound<'_, PyAny>, x: f64, q: f64) -> PyResult<f64> {
    // The core routine takes a plain f64 -> f64 function, so a raising
    // callable is recorded here and re-raised afterwards.
    let failure = std::cell::Cell::new(None::<PyErr>);
    let value = renyi::q_derivative(
        |v| match f.call1((v,)).and_then(|y| y.extract::<f64>()) {
            Ok(y) => y,
            Err(err) => {
                failure.set(Some(err));
                f64::NAN
            }
        },
        x,
        q,
    );
    if let Some(err) = failure.take() {
        return Err(err);
    }
    value.map_err(domain)
}

#[pymodule]
fn renyi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyProbDist>()?;
    m.add_class::<PyEnergySpectrum>()?;
    m.add_class::<PyHermitianOperator>()?;
    m.add_class::<PyRelationReport>()?;
    m.add_function(wrap_pyfunction!(renyi_of_weights, m)?)?;
    m.add_function(wrap_pyfunction!(q_derivative, m)?)?;
    Ok(())
}
