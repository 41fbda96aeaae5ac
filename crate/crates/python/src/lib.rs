//! Python bindings: `Graph`, `WeightSystem` and `LieAlgebra` classes plus the
//! bound calculus and enumeration entry points.
//!
//! Exact rationals cross the boundary as strings (`"3"`, `"-1/2"`); anything
//! whose `str()` parses as `num/den` works as input, so Python `int` and
//! `fractions.Fraction` are accepted directly. Infinite graph distances come
//! back as `None`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyDict};

use wg_core::criteria;
use wg_core::enumeration;
use wg_core::graph::{self, SimpleGraph};
use wg_core::lie::{self, StructureConstants};
use wg_core::rational::{format_rational, parse_rational};
use wg_core::weights::{self, Weight, WeightSystem as CoreWeightSystem};

fn value_error(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// Parses any object whose `str()` looks like `num/den` or an integer.
fn rational_from_any(obj: &Bound<'_, PyAny>) -> PyResult<num_rational::BigRational> {
    let text = obj.str()?.to_string();
    parse_rational(&text).map_err(value_error)
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// An undirected simple graph on vertices 1..=p (immutable).
#[pyclass(frozen, eq, hash)]
#[derive(PartialEq, Eq, Hash)]
struct Graph {
    inner: SimpleGraph,
}

impl Graph {
    fn wrap(inner: SimpleGraph) -> Graph {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    /// Graph(p, edges=None): the graph on p vertices with the given
    /// 1-indexed edges.
    #[new]
    #[pyo3(signature = (p, edges=None))]
    fn new(p: usize, edges: Option<Vec<(usize, usize)>>) -> PyResult<Self> {
        let inner = match edges {
            Some(edges) => SimpleGraph::from_edges(p, &edges),
            None => SimpleGraph::new(p),
        }
        .map_err(value_error)?;
        Ok(Graph::wrap(inner))
    }

    #[staticmethod]
    fn complete(p: usize) -> PyResult<Self> {
        SimpleGraph::complete(p).map(Graph::wrap).map_err(value_error)
    }

    #[staticmethod]
    fn path(p: usize) -> PyResult<Self> {
        SimpleGraph::path(p).map(Graph::wrap).map_err(value_error)
    }

    #[staticmethod]
    fn cycle(p: usize) -> PyResult<Self> {
        SimpleGraph::cycle(p).map(Graph::wrap).map_err(value_error)
    }

    #[staticmethod]
    fn star(p: usize) -> PyResult<Self> {
        SimpleGraph::star(p).map(Graph::wrap).map_err(value_error)
    }

    /// Parse the edge-list text format (header `p q`, lines `u v`).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        graph::parse_edge_list(text).map(Graph::wrap).map_err(value_error)
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        let p = self.inner.vertex_count();
        if u == 0 || u > p || v == 0 || v > p {
            return Err(value_error(format!("vertex out of range 1..={p}")));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v == 0 || v > self.inner.vertex_count() {
            return Err(value_error("vertex out of range"));
        }
        Ok(self.inner.degree(v))
    }

    fn complement(&self) -> Graph {
        Graph::wrap(self.inner.complement())
    }

    /// Shortest-path distance; None when there is no path.
    fn distance(&self, u: usize, v: usize) -> PyResult<Option<u32>> {
        self.inner
            .distance(u, v)
            .map(|d| d.finite())
            .map_err(value_error)
    }

    /// All-pairs maximum of the metric; None when disconnected.
    fn diameter(&self) -> Option<u32> {
        self.inner.diameter().finite()
    }

    /// The n-th power: adjacency iff 1 <= d(u,v) <= n.
    fn power(&self, n: usize) -> PyResult<Graph> {
        if n == 0 {
            return Err(value_error("graph power requires n >= 1"));
        }
        Ok(Graph::wrap(self.inner.power(n)))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn isolated_vertices(&self) -> Vec<usize> {
        self.inner.isolated_vertices()
    }

    fn universal_vertices(&self) -> Vec<usize> {
        self.inner.universal_vertices()
    }

    /// Canonical label (bytes): equal labels iff isomorphic, for equal p.
    fn canonical_label<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyBytes>> {
        let label = self.inner.canonical_label().map_err(value_error)?;
        Ok(PyBytes::new(py, label.bytes()))
    }

    /// The canonically labeled representative of this isomorphism class.
    fn canonical_form(&self) -> PyResult<Graph> {
        self.inner.canonical_form().map(Graph::wrap).map_err(value_error)
    }

    fn is_isomorphic(&self, other: &Graph) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn to_edge_list(&self) -> String {
        graph::write_edge_list(&self.inner)
    }

    /// DOT rendering; optional per-vertex label lines and highlighted
    /// vertices (1-indexed).
    #[pyo3(signature = (labels=None, highlighted=None))]
    fn to_dot(&self, labels: Option<Vec<String>>, highlighted: Option<Vec<usize>>) -> String {
        graph::to_dot(
            &self.inner,
            labels.as_deref(),
            highlighted.as_deref().unwrap_or(&[]),
        )
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

// ---------------------------------------------------------------------------
// WeightSystem
// ---------------------------------------------------------------------------

/// An ordered list of pairwise distinct rational weights.
#[pyclass(frozen)]
struct WeightSystem {
    inner: CoreWeightSystem,
}

#[pymethods]
impl WeightSystem {
    /// WeightSystem(rows): each row is one weight, entries are ints,
    /// strings like "1/2", or fractions.Fraction.
    #[new]
    fn new(py: Python<'_>, rows: Vec<Vec<Py<PyAny>>>) -> PyResult<Self> {
        let rank = rows.first().map_or(0, |row| row.len());
        let weights: PyResult<Vec<Weight>> = rows
            .iter()
            .map(|row| {
                let coords: PyResult<Vec<_>> = row
                    .iter()
                    .map(|obj| rational_from_any(obj.bind(py)))
                    .collect();
                Ok(Weight::new(coords?))
            })
            .collect();
        let inner = CoreWeightSystem::new(rank, weights?).map_err(value_error)?;
        Ok(WeightSystem { inner })
    }

    /// Parse the text format (header `p r`, then coordinate lines).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        weights::parse_weight_system(text)
            .map(|inner| WeightSystem { inner })
            .map_err(value_error)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Weights as rows of rational strings.
    fn weights(&self) -> Vec<Vec<String>> {
        self.inner
            .weights()
            .iter()
            .map(|w| w.coords().iter().map(format_rational).collect())
            .collect()
    }

    /// All (i, j, k) with i < j and a_i + a_j = a_k, 1-indexed.
    fn sum_triples(&self) -> Vec<(usize, usize, usize)> {
        self.inner.sum_triples()
    }

    /// Diagnostic pairs (i, k) with 2 a_i = a_k.
    fn self_sums(&self) -> Vec<(usize, usize)> {
        self.inner.self_sums()
    }

    fn raw_graph(&self) -> PyResult<Graph> {
        self.inner.raw_graph().map(Graph::wrap).map_err(value_error)
    }

    fn weight_graph(&self) -> PyResult<Graph> {
        self.inner.weight_graph().map(Graph::wrap).map_err(value_error)
    }

    /// A permutation s with s(i)+s(j)=s(k) for every sum triple, or None.
    fn index_compatible_order(&self) -> PyResult<Option<Vec<usize>>> {
        self.inner.index_compatible_order().map_err(value_error)
    }

    fn to_text(&self) -> String {
        weights::write_weight_system(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "WeightSystem(p={}, rank={})",
            self.inner.len(),
            self.inner.rank()
        )
    }
}

// ---------------------------------------------------------------------------
// LieAlgebra
// ---------------------------------------------------------------------------

/// A Lie algebra candidate given by rational structure constants.
#[pyclass(frozen)]
struct LieAlgebra {
    inner: StructureConstants,
}

#[pymethods]
impl LieAlgebra {
    /// LieAlgebra(dim, brackets=None): brackets is a list of (i, j, k, value)
    /// with i < j, meaning [X_i, X_j] includes value * X_k.
    #[new]
    #[pyo3(signature = (dim, brackets=None))]
    fn new(
        py: Python<'_>,
        dim: usize,
        brackets: Option<Vec<(usize, usize, usize, Py<PyAny>)>>,
    ) -> PyResult<Self> {
        let mut inner = StructureConstants::new(dim).map_err(value_error)?;
        for (i, j, k, value) in brackets.unwrap_or_default() {
            let value = rational_from_any(value.bind(py))?;
            inner.set(i, j, k, value).map_err(value_error)?;
        }
        Ok(LieAlgebra { inner })
    }

    /// Parse the text format (`dim n` header, `i j k q` lines).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        lie::parse_structure_constants(text)
            .map(|inner| LieAlgebra { inner })
            .map_err(value_error)
    }

    #[staticmethod]
    fn abelian(n: usize) -> PyResult<Self> {
        if n == 0 || n > 64 {
            return Err(value_error("dimension must be in 1..=64"));
        }
        Ok(LieAlgebra { inner: lie::abelian(n) })
    }

    /// Heisenberg algebra of dimension 2k+1.
    #[staticmethod]
    fn heisenberg(k: usize) -> PyResult<Self> {
        if k == 0 || 2 * k + 1 > 64 {
            return Err(value_error("requires 1 <= k and 2k+1 <= 64"));
        }
        Ok(LieAlgebra { inner: lie::heisenberg(k) })
    }

    /// Model filiform algebra L_n ([X_1, X_i] = X_{i+1}).
    #[staticmethod]
    fn filiform(n: usize) -> PyResult<Self> {
        if !(3..=64).contains(&n) {
            return Err(value_error("requires 3 <= n <= 64"));
        }
        Ok(LieAlgebra { inner: lie::filiform(n) })
    }

    #[staticmethod]
    fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> PyResult<Self> {
        lie::direct_sum(&a.inner, &b.inner)
            .map(|inner| LieAlgebra { inner })
            .map_err(value_error)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Nonzero constants as (i, j, k, value-string) tuples.
    fn brackets(&self) -> Vec<(usize, usize, usize, String)> {
        self.inner
            .entries()
            .map(|(i, j, k, v)| (i, j, k, format_rational(v)))
            .collect()
    }

    /// {'jacobi_ok', 'jacobi_violations', 'series', 'nilpotent'}
    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = self.inner.validate();
        let dict = PyDict::new(py);
        dict.set_item("jacobi_ok", report.jacobi_ok())?;
        dict.set_item("jacobi_violations", report.jacobi_violations.clone())?;
        dict.set_item("series", report.lower_central_dims.clone())?;
        dict.set_item("nilpotent", report.nilpotent)?;
        Ok(dict)
    }

    fn lower_central_series(&self) -> Vec<usize> {
        self.inner.lower_central_series()
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.is_nilpotent()
    }

    fn center_dim(&self) -> usize {
        self.inner.center().dim()
    }

    /// Basis of the center as rows of rational strings.
    fn center_basis(&self) -> Vec<Vec<String>> {
        self.inner
            .center()
            .basis()
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect()
    }

    fn torus_rank(&self) -> usize {
        self.inner.diagonal_torus().rank()
    }

    /// Weight matrix of the diagonal torus: one row of rational strings per
    /// basis vector.
    fn weight_matrix(&self) -> Vec<Vec<String>> {
        self.inner
            .diagonal_torus()
            .weight_matrix()
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect()
    }

    /// The weight system of the diagonal torus (raises on repeated weights).
    fn weight_system(&self) -> PyResult<WeightSystem> {
        self.inner
            .weight_system()
            .map(|inner| WeightSystem { inner })
            .map_err(value_error)
    }

    /// (holds, violations): sum triples must be matched by nonzero brackets.
    fn check_condition1(&self, system: &WeightSystem) -> PyResult<(bool, Vec<(usize, usize, usize)>)> {
        let report = self
            .inner
            .check_condition1(&system.inner)
            .map_err(value_error)?;
        Ok((report.holds, report.violations))
    }

    fn to_text(&self) -> String {
        lie::write_structure_constants(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "LieAlgebra(dim={}, brackets={})",
            self.inner.dim(),
            self.inner.entries().count()
        )
    }
}

// ---------------------------------------------------------------------------
// Module functions
// ---------------------------------------------------------------------------

/// sum_{j=1}^{floor(p/2)} (p - 2j): maximal number of weight sums.
#[pyfunction]
fn max_weight_sums(p: usize) -> usize {
    weights::max_weight_sums(p)
}

/// The coarse edge bound p - 1.
#[pyfunction]
fn naive_min_edges(p: usize) -> usize {
    criteria::naive_min_edges(p)
}

/// The sharp edge bound C(p,2) - max_weight_sums(p).
#[pyfunction]
fn min_edges(p: usize) -> usize {
    criteria::min_edges(p)
}

/// Gap function f(p) = C(p,2) - (p-1) - max_weight_sums(p), p >= 3.
#[pyfunction]
fn f(p: usize) -> PyResult<i64> {
    criteria::f(p).map_err(value_error)
}

/// Closed form for f(p+k) - f(p).
#[pyfunction]
fn f_difference(p: usize, k: usize) -> PyResult<i64> {
    if k == 0 {
        return Err(value_error("f_difference requires k >= 1"));
    }
    criteria::f_difference(p, k).map_err(value_error)
}

/// Run the necessary-condition battery; returns a dict with 'p', 'q',
/// 'overall' and one entry per check: (pass, witness-or-None).
#[pyfunction]
fn check_weight_graph<'py>(py: Python<'py>, graph: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let report = criteria::check_weight_graph(&graph.inner);
    let dict = PyDict::new(py);
    dict.set_item("p", report.p)?;
    dict.set_item("q", report.q)?;
    let checks = PyDict::new(py);
    for check in &report.checks {
        checks.set_item(check.name.as_str(), (check.pass, check.witness.clone()))?;
    }
    dict.set_item("checks", checks)?;
    dict.set_item("overall", report.overall)?;
    Ok(dict)
}

/// One canonically labeled representative per isomorphism class, 1 <= p <= 8.
#[pyfunction]
fn enumerate_graphs(p: usize) -> PyResult<Vec<Graph>> {
    let graphs = enumeration::enumerate_graphs(p).map_err(value_error)?;
    Ok(graphs.into_iter().map(Graph::wrap).collect())
}

/// Candidate counts for 3 <= p <= 8, as a dict; at p=6 also carries the
/// published-figure audit.
#[pyfunction]
fn candidate_report<'py>(py: Python<'py>, p: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = enumeration::candidate_report(p).map_err(value_error)?;
    let dict = PyDict::new(py);
    dict.set_item("p", report.p)?;
    dict.set_item("total_graphs", report.total_graphs)?;
    dict.set_item("connected_graphs", report.connected_graphs)?;
    dict.set_item("edge_histogram", report.edge_histogram.clone())?;
    dict.set_item("naive_min_edges", report.naive_min_edges)?;
    dict.set_item("min_edges", report.min_edges)?;
    dict.set_item("candidates_naive", report.candidates_naive)?;
    dict.set_item("candidates_strict", report.candidates_strict)?;
    dict.set_item("eliminated_by_bound", report.eliminated_by_bound)?;
    if let Some((published, agrees)) = report.published_comparison() {
        dict.set_item("published_elimination", published)?;
        dict.set_item("published_agreement", agrees)?;
    }
    dict.set_item("text", report.render_text())?;
    Ok(dict)
}

/// Cumulative survivor counts through the filter stages, as (name, count).
#[pyfunction]
fn filter_pipeline(p: usize) -> PyResult<Vec<(String, usize)>> {
    enumeration::filter_pipeline(p).map_err(value_error)
}

#[pymodule]
fn wg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Graph>()?;
    m.add_class::<WeightSystem>()?;
    m.add_class::<LieAlgebra>()?;
    m.add_function(wrap_pyfunction!(max_weight_sums, m)?)?;
    m.add_function(wrap_pyfunction!(naive_min_edges, m)?)?;
    m.add_function(wrap_pyfunction!(min_edges, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(f_difference, m)?)?;
    m.add_function(wrap_pyfunction!(check_weight_graph, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(candidate_report, m)?)?;
    m.add_function(wrap_pyfunction!(filter_pipeline, m)?)?;
    Ok(())
}
