//! Python bindings: index sets, generalized numbers and quaternions, plus the
//! ideal, identity-theorem and annihilator analyses.

use colombeau::expr::{self, Value};
use colombeau::gennum::default_window;
use colombeau::holo::{GenPolynomial, IdentityVerdict};
use colombeau::ideals::FgIdeal;
use colombeau::json;
use colombeau::polyann::MultiPoly;
use colombeau::scalar::{fmt_rational, parse_rational};
use colombeau::{Classification, QuatClassification};
use num_rational::BigRational;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: colombeau::Error) -> PyErr {
    match e {
        colombeau::Error::NotAUnit { .. } => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(format!("{}: {other}", other.kind())),
    }
}

fn window(w: Option<&str>) -> PyResult<BigRational> {
    w.map_or_else(|| Ok(default_window()), |w| parse_rational(w).map_err(err))
}

#[pyclass(name = "IndexSet", module = "pycolombeau", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyIndexSet(colombeau::IndexSet);

#[pymethods]
impl PyIndexSet {
    /// Parses `chi{m=..;T=[..];N=..}`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        expr::parse_index_set(text).map(PyIndexSet).map_err(err)
    }

    #[staticmethod]
    fn periodic(modulus: u64, residues: Vec<u64>) -> PyResult<Self> {
        colombeau::IndexSet::periodic(modulus, residues).map(PyIndexSet).map_err(err)
    }

    fn __contains__(&self, n: u64) -> bool {
        self.0.contains(n)
    }

    fn complement(&self) -> Self {
        PyIndexSet(self.0.complement())
    }

    fn __or__(&self, other: &Self) -> Self {
        PyIndexSet(self.0.union(&other.0))
    }

    fn __and__(&self, other: &Self) -> Self {
        PyIndexSet(self.0.intersect(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyIndexSet(self.0.difference(&other.0))
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IndexSet('{}')", self.0)
    }
}

#[pyclass(name = "GenNumber", module = "pycolombeau", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGenNumber(colombeau::GenNumber);

fn classification(py: Python<'_>, c: Classification) -> PyResult<(String, Option<Py<PyGenNumber>>)> {
    let kind = c.kind().to_string();
    let value = match c {
        Classification::Unit { inverse } => Some(Py::new(py, PyGenNumber(inverse))?),
        Classification::ZeroDivisor { witness } => Some(Py::new(py, PyGenNumber(witness))?),
        _ => None,
    };
    Ok((kind, value))
}

#[pymethods]
impl PyGenNumber {
    /// Parses a scalar expression such as `alpha(1) + 2*chi{m=2;T=[0];N=0}`.
    #[new]
    #[pyo3(signature = (text, window = None))]
    fn new(text: &str, window: Option<&str>) -> PyResult<Self> {
        expr::parse_gennum(text, &self::window(window)?).map(PyGenNumber).map_err(err)
    }

    #[staticmethod]
    fn alpha(r: &str) -> PyResult<Self> {
        Ok(PyGenNumber(colombeau::GenNumber::alpha(parse_rational(r).map_err(err)?)))
    }

    #[staticmethod]
    fn chi(region: &PyIndexSet) -> Self {
        PyGenNumber(colombeau::GenNumber::chi(&region.0))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        json::gennum_from_json(text).map(PyGenNumber).map_err(err)
    }

    fn to_json(&self) -> String {
        json::gennum_to_json(&self.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyGenNumber(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyGenNumber(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyGenNumber(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyGenNumber(-&self.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        let inv = other.0.invert(&default_window()).map_err(err)?;
        Ok(PyGenNumber(&self.0 * &inv))
    }

    #[pyo3(signature = (window = None))]
    fn invert(&self, window: Option<&str>) -> PyResult<Self> {
        self.0.invert(&self::window(window)?).map(PyGenNumber).map_err(err)
    }

    #[pyo3(signature = (window = None))]
    fn sqrt(&self, window: Option<&str>) -> PyResult<Self> {
        self.0.sqrt(&self::window(window)?).map(PyGenNumber).map_err(err)
    }

    /// `(kind, inverse_or_witness)`.
    #[pyo3(signature = (window = None))]
    fn classify(&self, py: Python<'_>, window: Option<&str>) -> PyResult<(String, Option<Py<PyGenNumber>>)> {
        classification(py, self.0.classify(&self::window(window)?))
    }

    /// `(V(x), exact)`, with `V` as a rational string or `"inf"`.
    fn valuation(&self) -> (String, bool) {
        let v = self.0.valuation();
        (v.value.to_string(), v.exact)
    }

    fn distance(&self, other: &Self) -> (String, bool) {
        let v = self.0.distance(&other.0);
        (v.value.to_string(), v.exact)
    }

    fn norm_display(&self) -> String {
        self.0.sharp_norm().display()
    }

    fn unit_near(&self, n: &str) -> PyResult<Self> {
        self.0.unit_near(&parse_rational(n).map_err(err)?).map(PyGenNumber).map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn support(&self) -> PyIndexSet {
        PyIndexSet(self.0.support())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GenNumber('{}')", self.0)
    }
}

#[pyclass(name = "GenQuaternion", module = "pycolombeau", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGenQuaternion(colombeau::GenQuaternion);

#[pymethods]
impl PyGenQuaternion {
    /// Parses a quaternion expression such as `quat(1;1;0;0)` or `1 + i*alpha(1)`.
    #[new]
    #[pyo3(signature = (text, window = None))]
    fn new(text: &str, window: Option<&str>) -> PyResult<Self> {
        expr::parse_quaternion(text, &self::window(window)?).map(PyGenQuaternion).map_err(err)
    }

    #[staticmethod]
    fn from_parts(x0: &PyGenNumber, x1: &PyGenNumber, x2: &PyGenNumber, x3: &PyGenNumber) -> PyResult<Self> {
        colombeau::GenQuaternion::new(x0.0.clone(), x1.0.clone(), x2.0.clone(), x3.0.clone()).map(PyGenQuaternion).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        json::quaternion_from_json(text).map(PyGenQuaternion).map_err(err)
    }

    fn to_json(&self) -> String {
        json::quaternion_to_json(&self.0)
    }

    fn parts(&self) -> Vec<PyGenNumber> {
        self.0.parts().iter().cloned().map(PyGenNumber).collect()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyGenQuaternion(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyGenQuaternion(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyGenQuaternion(self.0.mul(&other.0))
    }

    fn __neg__(&self) -> Self {
        PyGenQuaternion(self.0.neg())
    }

    fn conj(&self) -> Self {
        PyGenQuaternion(self.0.conj())
    }

    fn norm_sq(&self) -> PyGenNumber {
        PyGenNumber(self.0.norm_sq())
    }

    /// `(kind, inverse)` for units, `(kind, central idempotent)` for zero divisors.
    #[pyo3(signature = (window = None))]
    fn classify(&self, py: Python<'_>, window: Option<&str>) -> PyResult<(String, Option<Py<PyAny>>)> {
        let c = self.0.qclassify(&self::window(window)?);
        let kind = c.kind().to_string();
        let value = match c {
            QuatClassification::Unit { inverse } => Some(Py::new(py, PyGenQuaternion(inverse))?.into_any()),
            QuatClassification::ZeroDivisor { witness } => Some(Py::new(py, PyGenNumber(witness))?.into_any()),
            _ => None,
        };
        Ok((kind, value))
    }

    fn valuation(&self) -> (String, bool) {
        let v = self.0.qvaluation();
        (v.value.to_string(), v.exact)
    }

    fn distance(&self, other: &Self) -> (String, bool) {
        let v = self.0.qdistance(&other.0);
        (v.value.to_string(), v.exact)
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn idempotent_decompose(&self) -> PyResult<PyIndexSet> {
        self.0.idempotent_decompose().map(PyIndexSet).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GenQuaternion('{}')", self.0)
    }
}

/// Evaluates an expression to a `GenNumber` or a `GenQuaternion`.
#[pyfunction]
#[pyo3(signature = (text, window = None))]
fn evaluate(py: Python<'_>, text: &str, window: Option<&str>) -> PyResult<Py<PyAny>> {
    Ok(match expr::eval_str(text, &self::window(window)?).map_err(err)? {
        Value::Num(x) => Py::new(py, PyGenNumber(x))?.into_any(),
        Value::Quat(q) => Py::new(py, PyGenQuaternion(q))?.into_any(),
    })
}

/// Support, annihilator idempotent, algebraic density and whole-ring verdict.
#[pyfunction]
#[pyo3(signature = (generators, window = None))]
fn ideal_report<'py>(py: Python<'py>, generators: Vec<PyGenNumber>, window: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
    let ideal = FgIdeal::new(generators.into_iter().map(|g| g.0).collect()).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("support", PyIndexSet(ideal.support()))?;
    d.set_item("annihilator", PyGenNumber(ideal.annihilator_idempotent()))?;
    d.set_item("dense_algebraic", ideal.is_dense())?;
    d.set_item("whole_ring", ideal.is_whole_ring(&self::window(window)?))?;
    Ok(d)
}

/// `None` when the coefficient ideal at `z0` is dense, otherwise the
/// counterexample idempotent.
#[pyfunction]
#[pyo3(signature = (coeffs, z0, verify_n = vec!["1".to_string(), "2".to_string(), "5".to_string(), "16".to_string()]))]
fn identity_check(coeffs: Vec<PyGenNumber>, z0: &PyGenNumber, verify_n: Vec<String>) -> PyResult<Option<PyGenNumber>> {
    let ns = verify_n.iter().map(|n| parse_rational(n)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let f = GenPolynomial::new(coeffs.into_iter().map(|c| c.0).collect());
    Ok(match f.identity_check(&z0.0, &ns).map_err(err)? {
        IdentityVerdict::DenseNecessaryConditionHolds => None,
        IdentityVerdict::Counterexample { idempotent, .. } => Some(PyGenNumber(idempotent)),
    })
}

/// Constant annihilator of `sum c * x^e` given as `[(exponents, c), ...]`.
#[pyfunction]
fn ann_constant(nvars: usize, terms: Vec<(Vec<u32>, PyGenNumber)>) -> PyResult<PyGenNumber> {
    let f = MultiPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, c.0))).map_err(err)?;
    let b = f.ann_constant().map_err(err)?;
    if !f.annihilated_coefficientwise(&b) {
        return Err(PyValueError::new_err("annihilator check failed"));
    }
    Ok(PyGenNumber(b))
}

#[pyfunction]
fn format_rational(text: &str) -> PyResult<String> {
    parse_rational(text).map(|r| fmt_rational(&r)).map_err(err)
}

#[pymodule]
fn pycolombeau(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIndexSet>()?;
    m.add_class::<PyGenNumber>()?;
    m.add_class::<PyGenQuaternion>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_report, m)?)?;
    m.add_function(wrap_pyfunction!(identity_check, m)?)?;
    m.add_function(wrap_pyfunction!(ann_constant, m)?)?;
    m.add_function(wrap_pyfunction!(format_rational, m)?)?;
    Ok(())
}
