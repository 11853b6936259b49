//! Python bindings: simplicial sets and maps, the small object argument,
//! resolutions, the free adjunction and derived completion.

use std::sync::Arc;

use homres::adjres::finvect::FreeForget;
use homres::adjres::sset::IdentityAdjunction;
use homres::adjres::{bar_resolution, check_deformation, check_lemma_identities, cobar_resolution, split_backward, split_forward, CheckReport, DeformableAdjunction};
use homres::completion::{amitsur, derived_completion_report, ss_pages, tot_truncated, Algebra, CosimplicialChainComplex};
use homres::freeadj::{classify, parse_word, Classified};
use homres::scomplex::{self as sc, DEFAULT_BUDGET};
use homres::soa::{exhaustive_lift_check, garner_iterate, FactorizationState as State, GeneratorSet, Replacer, Side};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_py_any(py)?,
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_py_any(py)?,
            (None, Some(u)) => u.into_py_any(py)?,
            _ => n.as_f64().unwrap_or(f64::NAN).into_py_any(py)?,
        },
        Value::String(s) => s.into_py_any(py)?,
        Value::Array(items) => {
            let list = PyList::empty(py);
            for x in items {
                list.append(to_py(py, x)?)?;
            }
            list.into_py_any(py)?
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, to_py(py, x)?)?;
            }
            dict.into_py_any(py)?
        }
    })
}

fn parse(text: &str) -> PyResult<Value> {
    serde_json::from_str(text).map_err(err)
}

#[pyclass(name = "SimplicialSet", frozen, from_py_object)]
#[derive(Clone)]
struct PySimplicialSet(Arc<sc::SimplicialSet>);

#[pymethods]
impl PySimplicialSet {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self(Arc::new(sc::SimplicialSet::from_json(&parse(text)?).map_err(err)?)))
    }

    #[staticmethod]
    fn empty(dim_bound: usize) -> Self {
        Self(Arc::new(sc::SimplicialSet::empty(dim_bound)))
    }

    #[staticmethod]
    fn point(dim_bound: usize) -> Self {
        Self(Arc::new(sc::point(dim_bound)))
    }

    #[staticmethod]
    fn simplex(n: usize, dim_bound: usize) -> PyResult<Self> {
        Ok(Self(Arc::new(sc::standard_simplex(n, dim_bound).map_err(err)?)))
    }

    #[staticmethod]
    fn boundary(n: usize, dim_bound: usize) -> PyResult<Self> {
        Ok(Self(Arc::new(sc::boundary(n, dim_bound).map_err(err)?)))
    }

    #[staticmethod]
    fn horn(n: usize, k: usize, dim_bound: usize) -> PyResult<Self> {
        Ok(Self(Arc::new(sc::horn(n, k, dim_bound).map_err(err)?)))
    }

    #[getter]
    fn dim_bound(&self) -> usize {
        self.0.dim_bound()
    }

    /// Nondegenerate cells per dimension.
    fn counts(&self) -> Vec<usize> {
        self.0.counts()
    }

    fn to_json(&self) -> String {
        self.0.canonical_json()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("SimplicialSet(dim_bound={}, cells={:?})", self.0.dim_bound(), self.0.counts())
    }
}

#[pyclass(name = "SimplicialMap", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySimplicialMap(sc::SimplicialMap);

#[pymethods]
impl PySimplicialMap {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self(sc::SimplicialMap::from_json(&parse(text)?).map_err(err)?))
    }

    #[staticmethod]
    fn identity(x: &PySimplicialSet) -> Self {
        Self(sc::SimplicialMap::identity(&x.0))
    }

    #[staticmethod]
    fn to_point(x: &PySimplicialSet) -> PyResult<Self> {
        let pt = Arc::new(sc::point(x.0.dim_bound()));
        Ok(Self(sc::SimplicialMap::to_point(&x.0, &pt).map_err(err)?))
    }

    #[staticmethod]
    fn from_empty(x: &PySimplicialSet) -> PyResult<Self> {
        let e = Arc::new(sc::SimplicialSet::empty(x.0.dim_bound()));
        Ok(Self(sc::SimplicialMap::from_empty(&e, &x.0).map_err(err)?))
    }

    #[getter]
    fn source(&self) -> PySimplicialSet {
        PySimplicialSet(self.0.source().clone())
    }

    #[getter]
    fn target(&self) -> PySimplicialSet {
        PySimplicialSet(self.0.target().clone())
    }

    /// `self ∘ first`.
    fn after(&self, first: &PySimplicialMap) -> PyResult<Self> {
        Ok(Self(self.0.after(&first.0).map_err(err)?))
    }

    fn is_monomorphism(&self) -> bool {
        self.0.is_monomorphism()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn to_json(&self) -> String {
        self.0.canonical_json()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

fn generator_set(family: &str, dim_bound: usize) -> PyResult<GeneratorSet> {
    match family {
        "boundary" => GeneratorSet::boundaries(dim_bound, dim_bound),
        "horn" => GeneratorSet::horns(dim_bound, dim_bound, false),
        "inner-horn" => GeneratorSet::horns(dim_bound, dim_bound, true),
        other => return Err(PyValueError::new_err(format!("unknown generator family `{other}`"))),
    }
    .map_err(err)
}

#[pyclass(name = "FactorizationState", frozen)]
struct PyState(State);

#[pymethods]
impl PyState {
    #[getter]
    fn stage(&self) -> usize {
        self.0.stage
    }

    #[getter]
    fn status(&self) -> &'static str {
        self.0.status.as_str()
    }

    #[getter]
    fn converged(&self) -> bool {
        self.0.converged()
    }

    #[getter]
    fn object(&self) -> PySimplicialSet {
        PySimplicialSet(self.0.object.clone())
    }

    #[getter]
    fn left(&self) -> PySimplicialMap {
        PySimplicialMap(self.0.left.clone())
    }

    #[getter]
    fn right(&self) -> PySimplicialMap {
        PySimplicialMap(self.0.right.clone())
    }

    #[getter]
    fn attached_counts(&self) -> Vec<usize> {
        self.0.attached_counts.clone()
    }

    /// Exhaustive lift search of the right factor against every generator.
    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn lifts_exhaustively(&self, budget: u64) -> PyResult<bool> {
        Ok(exhaustive_lift_check(&self.0.generators, &self.0.right, budget).map_err(err)?.all_lift())
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.to_json())
    }
}

#[pyfunction]
#[pyo3(signature = (f, generators = "boundary", max_stages = 8, budget = DEFAULT_BUDGET))]
fn factor(py: Python<'_>, f: &PySimplicialMap, generators: &str, max_stages: usize, budget: u64) -> PyResult<PyState> {
    let gens = generator_set(generators, f.0.source().dim_bound())?.shared();
    let map = f.0.clone();
    let state = py.detach(move || garner_iterate(gens, &map, max_stages, budget)).map_err(err)?;
    Ok(PyState(state))
}

fn replacement(x: &PySimplicialSet, side: Side, generators: &str, max_stages: usize, budget: u64) -> PyResult<(PySimplicialSet, PySimplicialMap)> {
    let gens = generator_set(generators, x.0.dim_bound())?.shared();
    let r = Replacer::new(gens, side, max_stages, budget);
    let rep = r.replace(&x.0).map_err(err)?;
    Ok((PySimplicialSet(rep.object().clone()), PySimplicialMap(rep.structure_map().clone())))
}

/// `(RX, r : X -> RX)`.
#[pyfunction]
#[pyo3(signature = (x, generators = "boundary", max_stages = 8, budget = DEFAULT_BUDGET))]
fn fibrant_replacement(x: &PySimplicialSet, generators: &str, max_stages: usize, budget: u64) -> PyResult<(PySimplicialSet, PySimplicialMap)> {
    replacement(x, Side::Fibrant, generators, max_stages, budget)
}

/// `(QX, q : QX -> X)`.
#[pyfunction]
#[pyo3(signature = (x, generators = "boundary", max_stages = 8, budget = DEFAULT_BUDGET))]
fn cofibrant_replacement(x: &PySimplicialSet, generators: &str, max_stages: usize, budget: u64) -> PyResult<(PySimplicialSet, PySimplicialMap)> {
    replacement(x, Side::Cofibrant, generators, max_stages, budget)
}

fn cell_dict(py: Python<'_>, c: &Classified) -> PyResult<Py<PyAny>> {
    let d = PyDict::new(py);
    d.set_item("source", c.source.to_string())?;
    d.set_item("target", c.target.to_string())?;
    d.set_item("hom", c.tag().as_str())?;
    d.set_item("normal_form", c.normal_form().to_string())?;
    d.into_py_any(py)
}

/// Boundary and normal form of a pasting word of the free adjunction.
#[pyfunction(name = "classify")]
fn classify_word(py: Python<'_>, word: &str) -> PyResult<Py<PyAny>> {
    cell_dict(py, &classify(&parse_word(word).map_err(err)?))
}

/// `"EQUAL"`, `"DISTINCT"` or `"ILL-TYPED"`.
#[pyfunction]
fn adjcheck(w1: &str, w2: &str) -> &'static str {
    match (parse_word(w1), parse_word(w2)) {
        (Ok(a), Ok(b)) if a.source() == b.source() && a.target() == b.target() => {
            if classify(&a) == classify(&b) {
                "EQUAL"
            } else {
                "DISTINCT"
            }
        }
        _ => "ILL-TYPED",
    }
}

fn resolution_checks<A: DeformableAdjunction>(adj: &A, xs: &[homres::adjres::CObj<A>], ys: &[homres::adjres::DObj<A>], levels: usize) -> PyResult<CheckReport> {
    let mut rep = CheckReport::default();
    for x in xs {
        rep.extend(cobar_resolution(adj, x, levels).map_err(err)?.check_identities(adj.c()));
        rep.extend(split_forward(adj, x, levels).map_err(err)?.check_identities(adj.d()));
    }
    for y in ys {
        rep.extend(bar_resolution(adj, y, levels).map_err(err)?.check_identities(adj.d()));
        rep.extend(split_backward(adj, y, levels).map_err(err)?.check_identities(adj.c()));
    }
    rep.extend(check_deformation(adj, xs, ys));
    rep.extend(check_lemma_identities(adj, xs, ys));
    Ok(rep)
}

/// Resolutions and lemma checks on the free/forget adjunction over F₂.
#[pyfunction]
#[pyo3(signature = (sets, dims, levels = 3))]
fn resolve_strict(py: Python<'_>, sets: Vec<usize>, dims: Vec<usize>, levels: usize) -> PyResult<Py<PyAny>> {
    let rep = py.detach(|| resolution_checks(&FreeForget::new(), &sets, &dims, levels))?;
    to_py(py, &rep.to_json())
}

/// Resolutions and lemma checks on the identity adjunction of simplicial sets.
#[pyfunction]
#[pyo3(signature = (objects, levels = 2, max_stages = 8, budget = DEFAULT_BUDGET))]
fn resolve_sset(py: Python<'_>, objects: Vec<PySimplicialSet>, levels: usize, max_stages: usize, budget: u64) -> PyResult<Py<PyAny>> {
    let xs: Vec<_> = objects.into_iter().map(|x| x.0).collect();
    let d = xs.first().map_or(0, |x| x.dim_bound());
    let adj = IdentityAdjunction::new(d, max_stages, budget).map_err(err)?;
    let rep = resolution_checks(&adj, &xs, &xs, levels)?;
    to_py(py, &rep.to_json())
}

/// Cohomology and pages of the completion of the free/forget resolution.
#[pyfunction]
#[pyo3(signature = (x, levels = 2))]
fn completion_report(py: Python<'_>, x: usize, levels: usize) -> PyResult<Py<PyAny>> {
    let rep = py.detach(|| derived_completion_report(&FreeForget::new(), x, levels)).map_err(err)?;
    to_py(py, &rep.to_json())
}

/// Spectral sequence pages of the Amitsur complex of `F_p[t]/tᵏ`.
#[pyfunction]
#[pyo3(signature = (p = 2, k = 2, module = "residue", levels = 3))]
fn amitsur_pages(py: Python<'_>, p: u64, k: usize, module: &str, levels: usize) -> PyResult<Py<PyAny>> {
    let alg = Algebra::truncated_polynomial(p, k).map_err(err)?;
    let v_dim = match module {
        "residue" => 1,
        "free" => alg.dim(),
        other => return Err(PyValueError::new_err(format!("unknown module `{other}`"))),
    };
    let m = amitsur(&alg, v_dim, levels).map_err(err)?;
    let cc = CosimplicialChainComplex { rows: vec![m], vertical: Vec::new() };
    let (_, total) = tot_truncated(&cc, levels).map_err(err)?;
    let ss = ss_pages(&total, levels).map_err(err)?;
    if !ss.certified() {
        return Err(PyRuntimeError::new_err(format!("page invariants fail: {:?}", ss.failures)));
    }
    to_py(py, &ss.to_json())
}

#[pymodule(name = "homres")]
fn homres_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PySimplicialSet>()?;
    m.add_class::<PySimplicialMap>()?;
    m.add_class::<PyState>()?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(fibrant_replacement, m)?)?;
    m.add_function(wrap_pyfunction!(cofibrant_replacement, m)?)?;
    m.add_function(wrap_pyfunction!(classify_word, m)?)?;
    m.add_function(wrap_pyfunction!(adjcheck, m)?)?;
    m.add_function(wrap_pyfunction!(resolve_strict, m)?)?;
    m.add_function(wrap_pyfunction!(resolve_sset, m)?)?;
    m.add_function(wrap_pyfunction!(completion_report, m)?)?;
    m.add_function(wrap_pyfunction!(amitsur_pages, m)?)?;
    Ok(())
}
