//! Python bindings: `import genexp`.

use std::collections::BTreeMap;

use genexp::exponents::{full_report, Method};
use genexp::quasisym::{self, HeightSet, QuasiDominantWeight};
use genexp::tableaux::syt_enumerate;
use genexp::verify::{self as checks, Check, VerifyOptions};
use genexp::{Error, Partition};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "Weight",
    module = "genexp",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyWeight(genexp::Weight);

#[pymethods]
impl PyWeight {
    #[new]
    fn new(coords: Vec<i64>) -> PyResult<Self> {
        genexp::Weight::new(coords).map(PyWeight).map_err(to_py)
    }

    /// The weight `p - 1` of a partition `p` of `n + 1`, padded with zeros.
    #[staticmethod]
    fn from_partition(parts: Vec<usize>) -> PyResult<Self> {
        let p = Partition::new(parts).map_err(to_py)?;
        let rank = p.size().saturating_sub(1);
        genexp::Weight::from_partition(&p, rank)
            .map(PyWeight)
            .map_err(to_py)
    }

    #[staticmethod]
    fn theta(rank: usize) -> Self {
        PyWeight(genexp::Weight::theta(rank))
    }

    #[getter]
    fn coords(&self) -> Vec<i64> {
        self.0.coords().to_vec()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn height(&self) -> i64 {
        self.0.height()
    }

    fn is_first_layer(&self) -> bool {
        self.0.is_first_layer()
    }

    fn is_dominant(&self) -> bool {
        self.0.is_dominant()
    }

    fn aggregate_vector(&self) -> PyResult<Vec<i64>> {
        self.0
            .aggregate_vector()
            .map(|a| a.entries().to_vec())
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Weight({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(
    name = "LaurentPolynomial",
    module = "genexp",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyLaurent(genexp::LaurentPolynomial);

#[pymethods]
impl PyLaurent {
    #[new]
    #[pyo3(signature = (terms = BTreeMap::new()))]
    fn new(terms: BTreeMap<i64, BigInt>) -> Self {
        PyLaurent(genexp::LaurentPolynomial::from_terms(terms))
    }

    /// `{exponent: coefficient}` with zero coefficients omitted.
    fn terms(&self) -> BTreeMap<i64, BigInt> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn coeff(&self, exp: i64) -> BigInt {
        self.0.coeff(exp)
    }

    fn degree(&self) -> Option<i64> {
        self.0.max_degree()
    }

    fn evaluate_at_one(&self) -> BigInt {
        self.0.evaluate_at_one()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyLaurent(-&self.0)
    }

    fn __repr__(&self) -> String {
        format!("LaurentPolynomial({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn parse_method(name: &str) -> PyResult<Vec<Method>> {
    if name == "all" {
        return Ok(Method::ALL.to_vec());
    }
    name.parse::<Method>().map(|m| vec![m]).map_err(to_py)
}

/// `E(V_lambda)` by one method (`"tableaux"` by default).
#[pyfunction]
#[pyo3(signature = (weight, method = "tableaux", hp_cap = genexp::DEFAULT_HP_CAP))]
fn exponents(weight: &PyWeight, method: &str, hp_cap: usize) -> PyResult<PyLaurent> {
    let m = method.parse::<Method>().map_err(to_py)?;
    genexp::exponents(&weight.0, m, hp_cap)
        .map(PyLaurent)
        .map_err(to_py)
}

/// Runs several methods and returns a dict with per-method polynomials,
/// the agreement flag, any disagreement and the exponent multiset.
#[pyfunction]
#[pyo3(signature = (weight, method = "all", hp_cap = genexp::DEFAULT_HP_CAP))]
fn report<'py>(
    py: Python<'py>,
    weight: &PyWeight,
    method: &str,
    hp_cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let mut methods = parse_method(method)?;
    if method == "all" && weight.0.rank() > hp_cap {
        methods.retain(|&m| m != Method::Hp);
    }
    let r = full_report(&weight.0, &methods, hp_cap).map_err(to_py)?;
    let out = PyDict::new(py);
    let per_method: BTreeMap<&str, PyLaurent> = r
        .polynomials
        .iter()
        .map(|(m, p)| (m.name(), PyLaurent(p.clone())))
        .collect();
    out.set_item("lambda", r.lambda.coords().to_vec())?;
    out.set_item("per_method", per_method)?;
    out.set_item("agreement", r.agreement)?;
    out.set_item("disagreement", r.disagreement.map(|d| d.to_string()))?;
    out.set_item("exponents", r.exponents)?;
    out.set_item("zero_weight_dimension", r.zero_weight_dimension)?;
    Ok(out)
}

/// Fourier coefficient `c_lambda(t)` of the kernel in closed form.
#[pyfunction]
fn c_closed_form(weight: &PyWeight) -> PyResult<PyLaurent> {
    genexp::c_closed_form(&weight.0)
        .map(PyLaurent)
        .map_err(to_py)
}

/// Every standard tableau of a shape, as dicts with descent data, height and charge.
#[pyfunction]
fn syt<'py>(py: Python<'py>, shape: Vec<usize>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let p = Partition::new(shape).map_err(to_py)?;
    syt_enumerate(&p)
        .into_iter()
        .map(|t| {
            let d = PyDict::new(py);
            d.set_item("rows", t.rows().to_vec())?;
            d.set_item("descents", t.descent_set().into_iter().collect::<Vec<_>>())?;
            d.set_item("height", t.height())?;
            d.set_item("reading_word", t.reading_word())?;
            d.set_item("charge", t.charge())?;
            Ok(d)
        })
        .collect()
}

/// Height set of a quasi-dominant weight.
#[pyfunction]
fn height_set(weight: &PyWeight) -> PyResult<Vec<usize>> {
    let q = QuasiDominantWeight::new(weight.0.clone()).map_err(to_py)?;
    Ok(quasisym::height_set(&q)
        .elements()
        .iter()
        .copied()
        .collect())
}

/// The quasi-dominant weight of rank `rank` with the given height set.
#[pyfunction]
fn height_set_inverse(elements: Vec<usize>, rank: usize) -> PyResult<PyWeight> {
    let s = HeightSet::new(elements.into_iter().collect(), rank).map_err(to_py)?;
    Ok(PyWeight(quasisym::height_set_inverse(&s).into_weight()))
}

/// `(check, passed, cases, counterexample)`.
type CheckRow = (String, bool, usize, Option<String>);

/// The invariant suite at rank `n`.
#[pyfunction]
#[pyo3(signature = (n, skip = Vec::new()))]
fn verify(n: usize, skip: Vec<String>) -> PyResult<Vec<CheckRow>> {
    let mut options = VerifyOptions::new(n);
    for s in &skip {
        if let Ok(m) = s.parse::<Method>() {
            options.skip_methods.push(m);
        } else {
            options.skip_checks.push(s.parse::<Check>().map_err(to_py)?);
        }
    }
    let rows = checks::run(&options).map_err(to_py)?;
    Ok(rows
        .into_iter()
        .map(|c| {
            (
                c.check.name().to_string(),
                c.passed,
                c.cases,
                c.counterexample,
            )
        })
        .collect())
}

#[pymodule]
#[pyo3(name = "genexp")]
fn genexp_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeight>()?;
    m.add_class::<PyLaurent>()?;
    m.add_function(wrap_pyfunction!(exponents, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(c_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(syt, m)?)?;
    m.add_function(wrap_pyfunction!(height_set, m)?)?;
    m.add_function(wrap_pyfunction!(height_set_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("DEFAULT_HP_CAP", genexp::DEFAULT_HP_CAP)?;
    Ok(())
}
