//! Python bindings: forms, factorization, bounds, congruences and corpus runs.
//!
//! Integers cross the boundary as Python `int`, rationals as
//! `fractions.Fraction`. Reports come back as plain dicts mirroring the JSON
//! output of the command line tool.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use threefold::chern_bounds;
use threefold::congruences;
use threefold::corpus::{self, CorpusError};
use threefold::cubic_factor;
use threefold::forms::{self, IntMatrix, LinearFunctional, Vector};
use threefold::record::ThreefoldRecord;

fn value_err(e: threefold::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn corpus_err(e: CorpusError) -> PyErr {
    match e {
        CorpusError::Io { .. } => PyIOError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            let s = n.to_string();
            match s.parse::<BigInt>() {
                Ok(i) => i.into_pyobject(py)?.into_any(),
                Err(_) => s.parse::<f64>().map_err(|e| PyValueError::new_err(e.to_string()))?.into_pyobject(py)?.into_any(),
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, item) in map {
                d.set_item(k, to_py(py, item)?)?;
            }
            d.into_any()
        }
    })
}

fn vector(v: Vec<BigRational>) -> Vector {
    Vector::new(v)
}

fn int_matrix(rows: Vec<Vec<BigInt>>) -> PyResult<IntMatrix> {
    IntMatrix::new(rows).map_err(value_err)
}

fn signature_tuple(s: forms::Signature) -> (usize, usize, usize) {
    (s.plus, s.zero, s.minus)
}

/// Symmetric integer trilinear form; entries are `(i, j, k, value)` with
/// 0-based indices.
#[pyclass(frozen, name = "TrilinearForm")]
struct PyTrilinearForm {
    inner: forms::TrilinearForm,
}

#[pymethods]
impl PyTrilinearForm {
    #[new]
    fn new(rank: usize, entries: Vec<(usize, usize, usize, BigInt)>) -> PyResult<Self> {
        Ok(PyTrilinearForm {
            inner: forms::TrilinearForm::from_entries(rank, entries).map_err(value_err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn entries(&self) -> Vec<(usize, usize, usize, BigInt)> {
        self.inner.entries().map(|((i, j, k), v)| (i, j, k, v.clone())).collect()
    }

    fn eval(&self, x: Vec<BigRational>, y: Vec<BigRational>, z: Vec<BigRational>) -> PyResult<BigRational> {
        self.inner.eval(&vector(x), &vector(y), &vector(z)).map_err(value_err)
    }

    fn cubic(&self, a: Vec<BigRational>) -> PyResult<BigRational> {
        self.inner.cubic_value(&vector(a)).map_err(value_err)
    }

    fn cubic_polynomial(&self) -> String {
        self.inner.cubic_polynomial().to_string()
    }

    fn contract(&self, l: Vec<BigRational>) -> PyResult<PyQuadraticForm> {
        Ok(PyQuadraticForm {
            inner: self.inner.contract(&vector(l)).map_err(value_err)?,
        })
    }

    fn change_basis(&self, m: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(PyTrilinearForm {
            inner: self.inner.change_basis(&int_matrix(m)?).map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("TrilinearForm(rank={}, cubic={})", self.inner.rank(), self.inner.cubic_polynomial())
    }
}

/// Symmetric rational Gram matrix.
#[pyclass(frozen, name = "QuadraticForm")]
struct PyQuadraticForm {
    inner: forms::QuadraticForm,
}

#[pymethods]
impl PyQuadraticForm {
    #[new]
    fn new(gram: Vec<Vec<BigRational>>) -> PyResult<Self> {
        Ok(PyQuadraticForm {
            inner: forms::QuadraticForm::new(gram).map_err(value_err)?,
        })
    }

    fn gram(&self) -> Vec<Vec<BigRational>> {
        self.inner.gram().to_vec()
    }

    /// `(s+, s0, s-)`.
    fn signature(&self) -> (usize, usize, usize) {
        signature_tuple(self.inner.signature())
    }

    fn kernel_dimension(&self) -> usize {
        self.inner.kernel_dimension()
    }

    fn eval(&self, x: Vec<BigRational>) -> PyResult<BigRational> {
        self.inner.eval(&vector(x)).map_err(value_err)
    }

    /// `B^t A B`.
    fn congruent(&self, b: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(PyQuadraticForm {
            inner: self.inner.congruent(&int_matrix(b)?).map_err(value_err)?,
        })
    }

    fn polynomial(&self) -> String {
        self.inner.to_polynomial().to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadraticForm({})", self.inner.to_polynomial())
    }
}

/// `mu(a,a,a) = nu(a) * xi(a)`.
#[pyclass(frozen, name = "Factorization")]
struct PyFactorization {
    inner: cubic_factor::Factorization,
}

#[pymethods]
impl PyFactorization {
    #[getter]
    fn nu(&self) -> Vec<BigInt> {
        self.inner.nu.integer_coeffs().expect("factors are integral")
    }

    #[getter]
    fn xi(&self) -> PyQuadraticForm {
        PyQuadraticForm {
            inner: self.inner.xi.clone(),
        }
    }

    #[getter]
    fn signature(&self) -> (usize, usize, usize) {
        signature_tuple(self.inner.signature)
    }

    #[getter]
    fn kernel_dim(&self) -> usize {
        self.inner.kernel_dim
    }

    /// Columns of an integral basis of `ker(nu)`.
    #[getter]
    fn hyperplane_basis(&self) -> Vec<Vec<BigInt>> {
        self.inner.hyperplane.columns()
    }

    #[getter]
    fn xi_restricted(&self) -> PyQuadraticForm {
        PyQuadraticForm {
            inner: self.inner.xi_restricted.clone(),
        }
    }

    #[getter]
    fn restricted_signature(&self) -> (usize, usize, usize) {
        signature_tuple(self.inner.restricted_signature)
    }

    /// `(scale, gram)` with `gram = scale * A_xi` integral and primitive.
    fn lattice_gram(&self) -> PyResult<(BigRational, Vec<Vec<BigInt>>)> {
        let l = cubic_factor::lattice_gram(&self.inner.xi).map_err(value_err)?;
        Ok((l.scale, l.gram.to_rows()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Factorization(nu={}, xi={}, signature={})",
            self.inner.nu,
            self.inner.xi.to_polynomial(),
            self.inner.signature
        )
    }
}

/// One record of a corpus file.
#[pyclass(frozen, name = "Record")]
struct PyRecord {
    inner: ThreefoldRecord,
}

#[pymethods]
impl PyRecord {
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn b2(&self) -> usize {
        self.inner.b2
    }

    #[getter]
    fn is_calabi_yau(&self) -> bool {
        self.inner.is_calabi_yau
    }

    #[getter]
    fn mu(&self) -> Option<PyTrilinearForm> {
        self.inner.mu.clone().map(|inner| PyTrilinearForm { inner })
    }

    #[getter]
    fn c2(&self) -> Option<Vec<BigRational>> {
        self.inner.c2.as_ref().map(|c| c.coeffs().to_vec())
    }

    #[getter]
    fn c3(&self) -> Option<BigInt> {
        self.inner.c3.clone()
    }

    /// Every check, as the dict written by `threefold report --format json`.
    fn run<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &corpus::run_all(&self.inner).to_json())
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&corpus::record_to_value(&self.inner)).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!("Record(name={:?}, b2={})", self.inner.name, self.inner.b2)
    }
}

#[pyfunction]
#[pyo3(signature = (form, kahler=None))]
fn find_linear_factors(form: &PyTrilinearForm, kahler: Option<Vec<BigRational>>) -> PyResult<Vec<PyFactorization>> {
    let k = kahler.map(vector);
    Ok(cubic_factor::find_linear_factors(&form.inner, k.as_ref())
        .map_err(value_err)?
        .into_iter()
        .map(|inner| PyFactorization { inner })
        .collect())
}

/// Bounds `(lower, upper)` on `c3/2` for a very ample class of degree `mu`.
#[pyfunction]
fn c3_window(mu: BigInt) -> PyResult<(BigInt, BigInt)> {
    chern_bounds::c3_window(&mu).map_err(value_err)
}

#[pyfunction]
fn wall_parity<'py>(py: Python<'py>, form: &PyTrilinearForm) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &congruences::wall_parity(&form.inner).to_json())
}

#[pyfunction]
fn wall_pontrjagin<'py>(py: Python<'py>, form: &PyTrilinearForm, p1: Vec<BigInt>) -> PyResult<Bound<'py, PyAny>> {
    let p1 = LinearFunctional::from_bigints(&p1).map_err(value_err)?;
    to_py(py, &congruences::wall_pontrjagin(&form.inner, &p1).map_err(value_err)?.to_json())
}

#[pyfunction]
fn cy_riemann_roch<'py>(py: Python<'py>, form: &PyTrilinearForm, c2: Vec<BigInt>) -> PyResult<Bound<'py, PyAny>> {
    let c2 = LinearFunctional::from_bigints(&c2).map_err(value_err)?;
    to_py(py, &congruences::cy_riemann_roch(&form.inner, &c2).map_err(value_err)?.to_json())
}

/// Geometric genus `mu/6 + c2.x/12 - 1` of a smooth member of `|x|`.
#[pyfunction]
fn genus_from_numbers(mu: BigInt, c2x: BigInt) -> BigRational {
    chern_bounds::genus_from_numbers(&mu, &c2x)
}

#[pyfunction]
fn load_corpus(path: std::path::PathBuf) -> PyResult<Vec<PyRecord>> {
    Ok(corpus::load_corpus(path)
        .map_err(corpus_err)?
        .records
        .into_iter()
        .map(|inner| PyRecord { inner })
        .collect())
}

#[pyfunction]
fn parse_corpus(text: &str) -> PyResult<Vec<PyRecord>> {
    Ok(corpus::parse_corpus(text)
        .map_err(corpus_err)?
        .records
        .into_iter()
        .map(|inner| PyRecord { inner })
        .collect())
}

#[pymodule]
fn threefold_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTrilinearForm>()?;
    m.add_class::<PyQuadraticForm>()?;
    m.add_class::<PyFactorization>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(find_linear_factors, m)?)?;
    m.add_function(wrap_pyfunction!(c3_window, m)?)?;
    m.add_function(wrap_pyfunction!(wall_parity, m)?)?;
    m.add_function(wrap_pyfunction!(wall_pontrjagin, m)?)?;
    m.add_function(wrap_pyfunction!(cy_riemann_roch, m)?)?;
    m.add_function(wrap_pyfunction!(genus_from_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(load_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(parse_corpus, m)?)?;
    m.add("SCHEMA_VERSION", corpus::SCHEMA_VERSION)?;
    Ok(())
}
