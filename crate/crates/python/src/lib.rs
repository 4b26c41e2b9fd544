//! Python bindings for `sdset`.
//!
//! Graphs cross the boundary as a `SignedBipartiteGraph` class; sequences
//! and degree sets as lists of ints. Signs are `+1` / `-1` (or `"+"`/`"-"`).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use sdset::bipartite_seq;
use sdset::graph::{DegreeSet, Sign, SignedBipartiteGraph, SignedDegrees, Vertex};
use sdset::realize::{self, RealizationReport};
use sdset::{io, oracle, sgraphical, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ResourceGuard(_) => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn degree_set(elements: Vec<i64>) -> PyResult<DegreeSet> {
    DegreeSet::new(elements).map_err(to_py)
}

fn sign_from_py(sign: &Bound<'_, PyAny>) -> PyResult<Sign> {
    if let Ok(s) = sign.extract::<String>() {
        return match s.as_str() {
            "+" | "positive" => Ok(Sign::Positive),
            "-" | "negative" => Ok(Sign::Negative),
            _ => Err(PyValueError::new_err(format!("bad sign {s:?}"))),
        };
    }
    match sign.extract::<i64>()? {
        1 => Ok(Sign::Positive),
        -1 => Ok(Sign::Negative),
        n => Err(PyValueError::new_err(format!("bad sign {n}"))),
    }
}

fn vertex(part: &str, index: usize) -> PyResult<Vertex> {
    match part {
        "u" | "U" => Ok(Vertex::U(index)),
        "v" | "V" => Ok(Vertex::V(index)),
        _ => Err(PyValueError::new_err(format!(
            "part must be 'u' or 'v', got {part:?}"
        ))),
    }
}

/// A simple signed bipartite graph with 0-based vertex indices per part.
#[pyclass(name = "SignedBipartiteGraph", module = "sdset", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: SignedBipartiteGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(p: usize, q: usize) -> Self {
        PyGraph {
            inner: SignedBipartiteGraph::new(p, q),
        }
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.p()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.q()
    }

    fn add_edge(&mut self, u: usize, v: usize, sign: &Bound<'_, PyAny>) -> PyResult<()> {
        let sign = sign_from_py(sign)?;
        self.inner.add_edge(u, v, sign).map_err(to_py)
    }

    /// `(u, v, sign)` triples sorted by `(u, v)`, sign as +1/-1.
    fn edges(&self) -> Vec<(usize, usize, i64)> {
        self.inner
            .edges()
            .map(|((u, v), s)| (u, v, s.value()))
            .collect()
    }

    fn signed_degree(&self, part: &str, index: usize) -> PyResult<i64> {
        self.inner
            .signed_degree(vertex(part, index)?)
            .map_err(to_py)
    }

    fn u_degrees(&self) -> Vec<i64> {
        self.inner.u_degrees().to_vec()
    }

    fn v_degrees(&self) -> Vec<i64> {
        self.inner.v_degrees().to_vec()
    }

    /// Distinct signed degrees, ascending.
    fn signed_degree_set(&self) -> PyResult<Vec<i64>> {
        Ok(self.inner.signed_degree_set().map_err(to_py)?.to_vec())
    }

    fn signed_degree_sequences(&self) -> PyResult<(Vec<i64>, Vec<i64>)> {
        self.inner.signed_degree_sequences().map_err(to_py)
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(to_py)
    }

    fn join_all_positive(&mut self, xs: Vec<usize>, ys: Vec<usize>) -> PyResult<()> {
        self.inner.join_all_positive(&xs, &ys).map_err(to_py)
    }

    fn flipped(&self) -> Self {
        PyGraph {
            inner: self.inner.flipped(),
        }
    }

    fn label(&self, part: &str, index: usize) -> PyResult<Option<String>> {
        Ok(self.inner.label(vertex(part, index)?).map(str::to_owned))
    }

    fn to_sbg(&self) -> String {
        io::emit_graph(&self.inner)
    }

    fn to_dot(&self) -> String {
        io::emit_dot(&self.inner)
    }

    #[staticmethod]
    fn from_sbg(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: io::parse_graph(text).map_err(to_py)?,
        })
    }

    fn __eq__(&self, other: PyRef<'_, Self>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "SignedBipartiteGraph(p={}, q={}, edges={})",
            self.inner.p(),
            self.inner.q(),
            self.inner.edge_count()
        )
    }
}

#[pyclass(name = "RealizationReport", module = "sdset", frozen)]
struct PyReport {
    #[pyo3(get)]
    case_used: String,
    #[pyo3(get)]
    block_sizes: Vec<(String, usize)>,
    graph: SignedBipartiteGraph,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.graph.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "RealizationReport(case_used={:?}, p={}, q={})",
            self.case_used,
            self.graph.p(),
            self.graph.q()
        )
    }
}

impl From<RealizationReport> for PyReport {
    fn from(r: RealizationReport) -> Self {
        PyReport {
            case_used: r.case_used.name().to_string(),
            block_sizes: r.block_sizes,
            graph: r.graph,
        }
    }
}

/// Connected signed bipartite graph whose signed degree set is `elements`.
#[pyfunction]
fn realize_set(elements: Vec<i64>) -> PyResult<PyReport> {
    let set = degree_set(elements)?;
    Ok(realize::realize_set(&set).map_err(to_py)?.into())
}

#[pyfunction]
fn realize_positive_set(elements: Vec<i64>) -> PyResult<PyReport> {
    let set = degree_set(elements)?;
    Ok(realize::realize_positive_set(&set).map_err(to_py)?.into())
}

#[pyfunction]
fn realize_negative_set(elements: Vec<i64>) -> PyResult<PyReport> {
    let set = degree_set(elements)?;
    Ok(realize::realize_negative_set(&set).map_err(to_py)?.into())
}

#[pyfunction]
fn realize_zero_set() -> PyReport {
    realize::realize_zero_set().into()
}

/// `method` is one of "branching", "deterministic", "oracle".
#[pyfunction]
#[pyo3(signature = (seq, method = "branching"))]
fn is_s_graphical(seq: Vec<i64>, method: &str) -> PyResult<bool> {
    match method {
        "branching" => Ok(sgraphical::is_s_graphical_branching(&seq)),
        "deterministic" => Ok(sgraphical::is_s_graphical_deterministic(&seq)),
        "oracle" => oracle::oracle_s_graphical(&seq).map_err(to_py),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

/// `method` is one of "reduction", "oracle".
#[pyfunction]
#[pyo3(signature = (alpha, beta, method = "reduction"))]
fn is_bipartite_s_graphical(alpha: Vec<i64>, beta: Vec<i64>, method: &str) -> PyResult<bool> {
    match method {
        "reduction" => Ok(bipartite_seq::is_bipartite_s_graphical(&alpha, &beta)),
        "oracle" => oracle::oracle_bipartite(&alpha, &beta).map_err(to_py),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

#[pyfunction]
fn is_standard_pair(alpha: Vec<i64>, beta: Vec<i64>) -> bool {
    bipartite_seq::is_standard_pair(&alpha, &beta)
}

#[pyfunction]
fn gale_ryser(d: Vec<i64>, e: Vec<i64>) -> PyResult<bool> {
    bipartite_seq::gale_ryser(&d, &e).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (elements, p, q, require_connected = true))]
fn oracle_degree_set_realizable(
    elements: Vec<i64>,
    p: usize,
    q: usize,
    require_connected: bool,
) -> PyResult<bool> {
    let set = degree_set(elements)?;
    oracle::oracle_degree_set_realizable(&set, p, q, require_connected).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (p, q, require_connected = true))]
fn realizable_degree_sets(p: usize, q: usize, require_connected: bool) -> PyResult<Vec<Vec<i64>>> {
    Ok(oracle::realizable_degree_sets(p, q, require_connected)
        .map_err(to_py)?
        .into_iter()
        .collect())
}

#[pyfunction]
fn parse_graph(text: &str) -> PyResult<PyGraph> {
    PyGraph::from_sbg(text)
}

#[pymodule]
#[pyo3(name = "sdset")]
fn sdset_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(realize_set, m)?)?;
    m.add_function(wrap_pyfunction!(realize_positive_set, m)?)?;
    m.add_function(wrap_pyfunction!(realize_negative_set, m)?)?;
    m.add_function(wrap_pyfunction!(realize_zero_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_s_graphical, m)?)?;
    m.add_function(wrap_pyfunction!(is_bipartite_s_graphical, m)?)?;
    m.add_function(wrap_pyfunction!(is_standard_pair, m)?)?;
    m.add_function(wrap_pyfunction!(gale_ryser, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_degree_set_realizable, m)?)?;
    m.add_function(wrap_pyfunction!(realizable_degree_sets, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::types::PyDict;

    fn with_module(code: &str) {
        Python::initialize();
        Python::attach(|py| {
            let module = pyo3::wrap_pymodule!(sdset_module)(py);
            let globals = PyDict::new(py);
            globals.set_item("sdset", module).unwrap();
            let code = std::ffi::CString::new(code).unwrap();
            py.run(&code, Some(&globals), None)
                .inspect_err(|e| e.print(py))
                .unwrap();
        });
    }

    #[test]
    fn realize_from_python() {
        with_module(
            r#"
r = sdset.realize_set([5, -3, 0])
assert r.case_used == "mixed_with_zero", r.case_used
assert r.graph.signed_degree_set() == [-3, 0, 5]
assert r.graph.is_connected()
z = sdset.realize_zero_set().graph
assert z.to_sbg() == "sbg 2 2\nu1 v1 +\nu1 v2 -\nu2 v1 -\nu2 v2 +\n"
assert sdset.parse_graph(z.to_sbg()) == z
"#,
        );
    }

    #[test]
    fn deciders_and_errors_from_python() {
        with_module(
            r#"
assert sdset.is_s_graphical([1, 1])
assert not sdset.is_s_graphical([1, -1], method="oracle")
assert sdset.is_bipartite_s_graphical([1, -1], [0])
assert sdset.gale_ryser([2, 1], [2, 1])
for bad in (lambda: sdset.realize_set([]), lambda: sdset.gale_ryser([-1], [1])):
    try:
        bad()
        raise AssertionError("expected ValueError")
    except ValueError:
        pass
try:
    sdset.is_s_graphical([0] * 7, method="oracle")
    raise AssertionError("expected RuntimeError")
except RuntimeError:
    pass
g = sdset.SignedBipartiteGraph(1, 2)
g.add_edge(0, 1, "-")
g.add_edge(0, 0, 1)
assert g.signed_degree("u", 0) == 0
assert g.edges() == [(0, 0, 1), (0, 1, -1)]
"#,
        );
    }
}
