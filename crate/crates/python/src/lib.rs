use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wittsat::clifford as cl;
use wittsat::geometry;
use wittsat::oracle;
use wittsat::orthogonal as og;
use wittsat::sat;

create_exception!(wittsat_py, ResourceLimit, PyRuntimeError);

fn err(e: wittsat::Error) -> PyErr {
    if e.is_resource_limit() {
        ResourceLimit::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn assignment(values: Vec<bool>) -> sat::Assignment {
    sat::Assignment::new(values)
}

/// A CNF formula over variables `1..=n`, clauses as signed DIMACS literals.
#[pyclass(name = "Formula", module = "wittsat_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyFormula {
    inner: sat::CnfFormula,
}

#[pymethods]
impl PyFormula {
    #[new]
    fn new(n: usize, clauses: Vec<Vec<i64>>) -> PyResult<Self> {
        let cs = clauses
            .iter()
            .map(|c| sat::Clause::from_dimacs(c))
            .collect::<wittsat::Result<Vec<_>>>()
            .map_err(err)?;
        let inner = sat::CnfFormula::new(n, cs).map_err(err)?;
        Ok(PyFormula { inner })
    }

    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        sat::parse_dimacs(text)
            .map(|inner| PyFormula { inner })
            .map_err(err)
    }

    fn to_dimacs(&self) -> String {
        sat::serialize_dimacs(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn clauses(&self) -> Vec<Vec<i64>> {
        self.inner
            .clauses()
            .iter()
            .map(|c| c.literals().iter().map(|l| l.to_dimacs()).collect())
            .collect()
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inner.meta.warnings.clone()
    }

    fn evaluate(&self, values: Vec<bool>) -> PyResult<bool> {
        if values.len() != self.inner.n() {
            return Err(PyValueError::new_err("assignment width differs from n"));
        }
        Ok(self.inner.evaluate(&assignment(values)))
    }

    /// `S = ∏ (1 − z_j)`.
    fn encode(&self) -> PyResult<PyDiagonal> {
        sat::encode_formula(&self.inner)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    fn is_unsatisfiable(&self) -> PyResult<bool> {
        sat::is_unsatisfiable(&self.inner).map_err(err)
    }

    fn count_models(&self) -> PyResult<BigInt> {
        sat::count_models(&self.inner).map_err(err)
    }

    #[pyo3(signature = (limit = sat::DEFAULT_MODEL_LIMIT))]
    fn models(&self, limit: usize) -> PyResult<Vec<Vec<bool>>> {
        let ms = sat::models_with_limit(&self.inner, limit).map_err(err)?;
        Ok(ms.into_iter().map(|a| a.values().to_vec()).collect())
    }

    /// Induced sign patterns over `+`, `-`, `*`.
    fn patterns(&self) -> PyResult<Vec<String>> {
        let ps = geometry::induced_patterns(&self.inner).map_err(err)?;
        Ok(ps.iter().map(|p| p.to_string()).collect())
    }

    fn covers(&self) -> PyResult<bool> {
        let ps = geometry::induced_patterns(&self.inner).map_err(err)?;
        geometry::covers(&ps, self.inner.n()).map_err(err)
    }

    /// A satisfying assignment from the cover check, if any.
    fn witness(&self) -> PyResult<Option<Vec<bool>>> {
        let ps = geometry::induced_patterns(&self.inner).map_err(err)?;
        let w = geometry::witness_uncovered(&ps, self.inner.n()).map_err(err)?;
        Ok(w.map(|v| geometry::assignment_of_sign_vector(&v).values().to_vec()))
    }

    fn dpll(&self) -> Option<Vec<bool>> {
        match oracle::dpll(&self.inner) {
            oracle::DpllResult::Sat(a) => Some(a.values().to_vec()),
            oracle::DpllResult::Unsat => None,
        }
    }

    fn brute_force(&self) -> PyResult<Vec<Vec<bool>>> {
        let b = oracle::brute_force(&self.inner).map_err(err)?;
        Ok(b.models.into_iter().map(|a| a.values().to_vec()).collect())
    }

    /// Report on the clause sets in O(n) as a dict.
    #[pyo3(signature = (samples = 1000, seed = 0))]
    fn explore<'py>(
        &self,
        py: Python<'py>,
        samples: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = og::explore_cover(&self.inner, samples, seed).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("samples", r.samples)?;
        d.set_item("seed", r.seed)?;
        d.set_item("discrete_cover", r.discrete_cover)?;
        d.set_item("discrete_matches_cover", r.discrete_matches_cover)?;
        d.set_item("strict_fraction", r.strict_fraction)?;
        d.set_item("transversal_fraction", r.transversal_fraction)?;
        d.set_item("transversal_p_or_q_fraction", r.transversal_p_or_q_fraction)?;
        Ok(d)
    }

    fn __len__(&self) -> usize {
        self.inner.clauses().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Formula(n={}, clauses={})",
            self.inner.n(),
            self.inner.clauses().len()
        )
    }
}

/// A diagonal element: integer combination of products of `qp`, `pq`, `1`.
#[pyclass(
    name = "DiagonalElement",
    module = "wittsat_py",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
pub struct PyDiagonal {
    inner: cl::DiagonalElement,
}

#[pymethods]
impl PyDiagonal {
    /// Parse the text form, one `coeff * qp pq 1` term per line.
    #[new]
    fn new(n: usize, text: &str) -> PyResult<Self> {
        cl::DiagonalElement::parse(n, text)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        cl::DiagonalElement::identity(n)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn zero(n: usize) -> PyResult<Self> {
        cl::DiagonalElement::zero(n)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    /// `qp` at `position` (0-based), or `pq` when `negated`.
    #[staticmethod]
    #[pyo3(signature = (n, position, negated = false))]
    fn literal(n: usize, position: usize, negated: bool) -> PyResult<Self> {
        cl::DiagonalElement::literal(n, position, negated)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn omega(n: usize) -> PyResult<Self> {
        cl::omega_element(n)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn eval_at(&self, values: Vec<bool>) -> PyResult<BigInt> {
        self.inner.eval_at(&assignment(values)).map_err(err)
    }

    fn total(&self) -> BigInt {
        self.inner.total()
    }

    fn expand(&self) -> PyResult<Self> {
        self.inner
            .expand_primitive()
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    fn terms(&self) -> Vec<(String, BigInt)> {
        let n = self.inner.n();
        self.inner
            .terms()
            .map(|(p, c)| {
                let s: Vec<&str> = p.symbols(n).iter().map(|s| s.as_str()).collect();
                (s.join(" "), c.clone())
            })
            .collect()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .mul(&other.inner)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .try_add(&other.inner)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .try_sub(&other.inner)
            .map(|inner| PyDiagonal { inner })
            .map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyDiagonal {
            inner: -&self.inner,
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "DiagonalElement(n={}, terms={})",
            self.inner.n(),
            self.inner.len()
        )
    }
}

fn parse_term(symbols: &str) -> PyResult<cl::EfbTerm> {
    symbols.parse::<cl::EfbTerm>().map_err(err)
}

fn parse_vector(v: &str) -> PyResult<cl::WittVector> {
    let bad = || PyValueError::new_err(format!("expected p<i> or q<i>, got {v:?}"));
    let (kind, idx) = v.split_at(1.min(v.len()));
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(bad());
    }
    match kind {
        "p" => Ok(cl::WittVector::p(i - 1)),
        "q" => Ok(cl::WittVector::q(i - 1)),
        _ => Err(bad()),
    }
}

/// Generators of the null plane annihilating an EFB term such as `"pq p q"`.
#[pyfunction]
fn mtnp_of_spinor(term: &str) -> PyResult<Vec<String>> {
    let t = parse_term(term)?;
    Ok(cl::mtnp_of_spinor(&t)
        .iter()
        .map(|v| v.to_string())
        .collect())
}

/// `v · ψ` for a Witt vector `"p1"` and a term, or `None` when it vanishes.
#[pyfunction]
fn vector_action(v: &str, term: &str) -> PyResult<Option<String>> {
    let r = cl::vector_action(parse_vector(v)?, &parse_term(term)?).map_err(err)?;
    Ok(r.map(|t| t.to_string()))
}

#[pyfunction]
fn sample_orthogonal(n: usize, seed: u64) -> PyResult<Vec<Vec<f64>>> {
    let t = og::sample_orthogonal(n, seed).map_err(err)?;
    Ok(rows(t.matrix()))
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().cloned().collect()).collect()
}

fn orthogonal(rows: Vec<Vec<f64>>) -> PyResult<og::OrthogonalMatrix> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(PyValueError::new_err("expected a non-empty square matrix"));
    }
    let flat: Vec<f64> = rows.into_iter().flatten().collect();
    og::OrthogonalMatrix::new(DMatrix::from_row_slice(n, n, &flat)).map_err(err)
}

/// Witt basis adapted to the planes `(1, t1)` and `(1, t2)`. Raises
/// `ValueError` naming the intersection dimension when they meet.
#[pyfunction]
fn witt_rebase<'py>(
    py: Python<'py>,
    t1: Vec<Vec<f64>>,
    t2: Vec<Vec<f64>>,
) -> PyResult<Bound<'py, PyDict>> {
    let (t1, t2) = (orthogonal(t1)?, orthogonal(t2)?);
    let w = og::witt_rebase(&t1, &t2).map_err(err)?;
    let r = w.residuals();
    let d = PyDict::new(py);
    let cols = |vs: Vec<DVector<f64>>| -> Vec<Vec<f64>> {
        vs.iter().map(|v| v.iter().cloned().collect()).collect()
    };
    d.set_item("p", cols(w.p_vectors()))?;
    d.set_item("q", cols(w.q_vectors()))?;
    d.set_item("pairing_residual", r.pairing)?;
    d.set_item("null_residual", r.null)?;
    d.set_item("plane_residual", w.plane_residual(&t1, &t2))?;
    Ok(d)
}

#[pymodule]
fn wittsat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFormula>()?;
    m.add_class::<PyDiagonal>()?;
    m.add_function(wrap_pyfunction!(mtnp_of_spinor, m)?)?;
    m.add_function(wrap_pyfunction!(vector_action, m)?)?;
    m.add_function(wrap_pyfunction!(sample_orthogonal, m)?)?;
    m.add_function(wrap_pyfunction!(witt_rebase, m)?)?;
    m.add("ResourceLimit", m.py().get_type::<ResourceLimit>())?;
    Ok(())
}
