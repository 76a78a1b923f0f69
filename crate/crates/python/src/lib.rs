//! Python bindings for `treebound`.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use treebound::{Edge, Error};

create_exception!(pytreebound, ProofInvariantViolated, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ProofInvariantViolated { .. } => ProofInvariantViolated::new_err(e.to_string()),
        Error::Io(_) => PyIOError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn pairs(edges: &[Edge]) -> Vec<(usize, usize)> {
    edges.iter().map(|e| e.endpoints()).collect()
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pytreebound", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Graph(treebound::Graph);

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        treebound::Graph::from_edges(n, edges)
            .map(Graph)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        treebound::parse_graph6(line).map(Graph).map_err(to_py)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        treebound::parse_edge_list(text).map(Graph).map_err(to_py)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Graph(treebound::Graph::complete(n))
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Graph(treebound::Graph::path(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Graph(treebound::Graph::cycle(n))
    }

    #[staticmethod]
    fn petersen() -> Self {
        Graph(treebound::Graph::petersen())
    }

    fn to_graph6(&self) -> PyResult<String> {
        treebound::write_graph6(&self.0).map_err(to_py)
    }

    fn to_edge_list(&self) -> String {
        treebound::write_edge_list(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().map(Edge::endpoints).collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.check_vertex(v).map_err(to_py)?;
        Ok(self.0.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_edge(u, v)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn cut_vertices(&self) -> PyResult<Vec<usize>> {
        Ok(self.0.cut_vertices().map_err(to_py)?.into_iter().collect())
    }

    fn delete_vertex(&self, v: usize) -> PyResult<Self> {
        self.0.delete_vertex(v).map(Graph).map_err(to_py)
    }

    /// Returns the contracted graph and the old-to-new vertex map.
    fn identify(&self, vertices: Vec<usize>) -> PyResult<(Self, Vec<usize>)> {
        let cr = self.0.identify(&vertices).map_err(to_py)?;
        Ok((Graph(cr.graph), cr.vertex_map))
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        match treebound::write_graph6(&self.0) {
            Ok(s) => format!("Graph.from_graph6({s:?})"),
            Err(_) => format!("<Graph n={} m={}>", self.0.n(), self.0.edge_count()),
        }
    }
}

#[pyfunction]
fn chromatic_number(g: &Graph) -> usize {
    treebound::chromatic_number(&g.0)
}

/// A proper coloring with at most `k` colors, or `None`.
#[pyfunction]
fn coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    treebound::is_k_colorable(&g.0, k).map(|c| c.into_inner())
}

#[pyfunction]
fn count_spanning_trees(g: &Graph) -> BigUint {
    treebound::count_spanning_trees(&g.0).into_biguint()
}

#[pyfunction]
fn count_spanning_trees_bruteforce(g: &Graph) -> BigUint {
    treebound::count_spanning_trees_bruteforce(&g.0).into_biguint()
}

#[pyfunction]
#[pyo3(signature = (g, limit = None))]
fn spanning_trees(g: &Graph, limit: Option<usize>) -> Vec<Vec<(usize, usize)>> {
    treebound::enumerate_spanning_trees(&g.0, limit)
        .iter()
        .map(|t| pairs(t.edges()))
        .collect()
}

#[pyfunction]
fn bound(k: usize) -> PyResult<BigUint> {
    treebound::bound(k).map(|b| b.into_biguint()).map_err(to_py)
}

/// Distinct spanning trees of `g` as `(edges, case)` pairs. `k` defaults to
/// the chromatic number.
#[pyfunction]
#[pyo3(signature = (g, k = None, cap = None))]
fn construct_witnesses(
    g: &Graph,
    k: Option<usize>,
    cap: Option<usize>,
) -> PyResult<Vec<(Vec<(usize, usize)>, String)>> {
    let k = k.unwrap_or_else(|| treebound::chromatic_number(&g.0));
    let set = treebound::construct_witnesses(&g.0, k, cap).map_err(to_py)?;
    Ok(set
        .trees
        .iter()
        .map(|w| (pairs(w.tree.edges()), w.provenance.to_string()))
        .collect())
}

#[pyfunction]
fn verify_bound<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let rec = treebound::verify_bound(&g.0).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("n", rec.n)?;
    d.set_item("m", rec.m)?;
    d.set_item("graph_id", rec.graph_id)?;
    d.set_item("chromatic", rec.chromatic)?;
    d.set_item("tau", rec.tau.into_biguint())?;
    d.set_item("bound", rec.bound.into_biguint())?;
    d.set_item("tight", rec.tight)?;
    d.set_item("extremal", rec.extremal)?;
    d.set_item("counterexample", rec.counterexample)?;
    Ok(d)
}

/// `None`, or a dict with the clique `core` and the `stripped` (leaf, anchor) pairs.
#[pyfunction]
fn recognize_extremal<'py>(py: Python<'py>, g: &Graph) -> PyResult<Option<Bound<'py, PyDict>>> {
    let Some(cert) = treebound::recognize_extremal(&g.0).map_err(to_py)? else {
        return Ok(None);
    };
    let d = PyDict::new(py);
    d.set_item("k", cert.k())?;
    d.set_item("core", cert.core)?;
    d.set_item("stripped", cert.stripped)?;
    Ok(Some(d))
}

#[pyfunction]
#[pyo3(signature = (k, attachments = Vec::new()))]
fn generate_extremal(k: usize, attachments: Vec<usize>) -> PyResult<Graph> {
    treebound::generate_extremal(&treebound::PendantSpec { k, attachments })
        .map(Graph)
        .map_err(to_py)
}

#[pymodule]
fn pytreebound(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add(
        "ProofInvariantViolated",
        m.py().get_type::<ProofInvariantViolated>(),
    )?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(coloring, m)?)?;
    m.add_function(wrap_pyfunction!(count_spanning_trees, m)?)?;
    m.add_function(wrap_pyfunction!(count_spanning_trees_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_trees, m)?)?;
    m.add_function(wrap_pyfunction!(bound, m)?)?;
    m.add_function(wrap_pyfunction!(construct_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bound, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(generate_extremal, m)?)?;
    Ok(())
}
