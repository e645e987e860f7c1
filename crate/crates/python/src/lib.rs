//! Python bindings: `minorham.Graph` plus family, enumeration and
//! verification entry points. Structured answers come back as plain
//! dicts and lists.

use pyo3::exceptions::{PyValueError, PyRuntimeError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use minorham_core::enumerate::{count_k25_free, generate_3c_planar, generate_triangulations};
use minorham_core::families::{mask_from_bits, named_graph, FamilySpec};
use minorham_core::hamilton::{find_tough_cut, hamilton_cycle, longest_cycle, HamiltonResult};
use minorham_core::minors::{enumerate_k2t_models, find_k2t_model, find_rooted_k22};
use minorham_core::topology::{is_planar, planar_embedding, vertex_connectivity};
use minorham_core::verify::{run_verification, Level, VerifyOptions};

fn err(e: minorham_core::Error) -> PyErr {
    match e {
        minorham_core::Error::Parse { .. } => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => u.into_pyobject(py)?.into_any().unbind(),
            (None, Some(i)) => i.into_pyobject(py)?.into_any().unbind(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(a) => {
            let items = a.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any().unbind()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any().unbind()
        }
    })
}

fn ser<T: serde::Serialize>(py: Python<'_>, x: &T) -> PyResult<Py<PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// Simple undirected graph on vertices 0..n.
#[pyclass(name = "Graph", module = "minorham", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(minorham_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        minorham_core::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    /// Parses one graph6 or sparse6 line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        minorham_core::graph::parse_graph_line(text.trim()).map(PyGraph).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn graph6(&self) -> String {
        self.0.to_graph6()
    }

    fn canonical_code(&self) -> String {
        self.0.canonical_code().to_string()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        self.0.canonical_code() == other.0.canonical_code()
    }

    fn contract(&self, u: usize, v: usize) -> PyResult<PyGraph> {
        self.0.contract_edge(u, v).map(|(h, _)| PyGraph(h)).map_err(err)
    }

    fn delete_edge(&self, u: usize, v: usize) -> PyResult<PyGraph> {
        self.0.remove_edge(u, v).map(PyGraph).map_err(err)
    }

    fn is_planar(&self) -> bool {
        is_planar(&self.0)
    }

    /// Faces of a planar embedding, or None when nonplanar or disconnected.
    fn faces(&self) -> PyResult<Option<Vec<Vec<usize>>>> {
        if !self.0.is_connected() || self.0.n() == 0 {
            return Ok(None);
        }
        let p = planar_embedding(&self.0).map_err(err)?;
        Ok(p.embedding().map(|e| e.faces().to_vec()))
    }

    fn connectivity(&self) -> PyResult<usize> {
        vertex_connectivity(&self.0).map_err(err)
    }

    /// A Hamilton cycle as a vertex list, or None.
    fn hamilton_cycle(&self) -> PyResult<Option<Vec<usize>>> {
        Ok(match hamilton_cycle(&self.0).map_err(err)? {
            HamiltonResult::Cycle(c) => Some(c.vertices),
            HamiltonResult::Exhausted(_) => None,
        })
    }

    fn is_hamiltonian(&self) -> PyResult<bool> {
        Ok(self.hamilton_cycle()?.is_some())
    }

    fn longest_cycle(&self) -> PyResult<Vec<usize>> {
        longest_cycle(&self.0).map(|c| c.vertices).map_err(err)
    }

    /// `(cut, components)` with more components than cut vertices, if any.
    #[pyo3(signature = (max_size = 6))]
    fn tough_cut(&self, max_size: usize) -> PyResult<Option<(Vec<usize>, usize)>> {
        let cut = find_tough_cut(&self.0, max_size.min(self.0.n())).map_err(err)?;
        Ok(cut.map(|c| (c.cut.iter().collect(), c.component_count)))
    }

    /// A K2,t minor model as a dict with keys R1, R2, S, t, or None.
    fn k2t_model(&self, py: Python<'_>, t: usize) -> PyResult<Py<PyAny>> {
        let m = find_k2t_model(&self.0, t).map_err(err)?;
        ser(py, &m)
    }

    fn has_k2t_minor(&self, t: usize) -> PyResult<bool> {
        Ok(find_k2t_model(&self.0, t).map_err(err)?.is_some())
    }

    fn k2t_models(&self, py: Python<'_>, t: usize) -> PyResult<Py<PyAny>> {
        ser(py, &enumerate_k2t_models(&self.0, t).map_err(err)?)
    }

    fn rooted_k22(&self, py: Python<'_>, x: usize, y: usize) -> PyResult<Py<PyAny>> {
        ser(py, &find_rooted_k22(&self.0, x, y).map_err(err)?)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    /// Same vertex count and edge set; display labels are ignored.
    fn __eq__(&self, other: &PyGraph) -> bool {
        self.0.n() == other.0.n() && self.0.edges().eq(other.0.edges())
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={}, graph6={:?})", self.0.n(), self.0.m(), self.0.to_graph6())
    }
}

/// Named graph: herschel, goldner-harary, gk(k), prism-chords(m, mask),
/// petersen, wheel(n), complete-bipartite(s, t).
#[pyfunction]
#[pyo3(signature = (name, k = None, m = None, mask = 0, n = None, s = None, t = None))]
fn family(
    name: &str,
    k: Option<usize>,
    m: Option<usize>,
    mask: u64,
    n: Option<usize>,
    s: Option<usize>,
    t: Option<usize>,
) -> PyResult<PyGraph> {
    let need = |x: Option<usize>, what: &str| x.ok_or_else(|| PyValueError::new_err(format!("{name} needs {what}")));
    let spec = match name {
        "herschel" => FamilySpec::Herschel,
        "goldner-harary" => FamilySpec::GoldnerHarary,
        "gk" => FamilySpec::Gk { k: need(k, "k")? },
        "prism-chords" => {
            let m = need(m, "m")?;
            FamilySpec::PrismChords {
                m,
                mask: mask_from_bits(m, mask),
            }
        }
        "petersen" => FamilySpec::Petersen,
        "wheel" => FamilySpec::Wheel { n: need(n, "n")? },
        "complete-bipartite" => FamilySpec::CompleteBipartite {
            s: need(s, "s")?,
            t: need(t, "t")?,
        },
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    named_graph(&spec).map(PyGraph).map_err(err)
}

/// `(total 3-connected planar, K2,5-free, K2,5-free Hamiltonian)` for order n.
#[pyfunction]
fn count_k25_free_graphs(py: Python<'_>, n: usize) -> PyResult<(u64, u64, u64)> {
    let r = py.detach(|| count_k25_free(n)).map_err(err)?;
    Ok((r.total_3c_planar, r.k25_free, r.k25_free_hamiltonian))
}

/// All 3-connected planar graphs of order n, one per isomorphism class.
#[pyfunction]
fn three_connected_planar(py: Python<'_>, n: usize) -> PyResult<Vec<PyGraph>> {
    let gs = py.detach(|| generate_3c_planar(n)).map_err(err)?;
    Ok(gs.into_iter().map(PyGraph).collect())
}

#[pyfunction]
fn triangulations(py: Python<'_>, n: usize) -> PyResult<Vec<PyGraph>> {
    let gs = py.detach(|| generate_triangulations(n)).map_err(err)?;
    Ok(gs.into_iter().map(PyGraph).collect())
}

/// Runs the verification matrix; returns it as a dict.
#[pyfunction]
#[pyo3(signature = (level = "quick", only = Vec::new()))]
fn verify(py: Python<'_>, level: &str, only: Vec<String>) -> PyResult<Py<PyAny>> {
    let level = match level {
        "quick" => Level::Quick,
        "full" => Level::Full,
        "extended" => Level::Extended,
        other => return Err(PyValueError::new_err(format!("unknown level {other:?}"))),
    };
    let mut opts = VerifyOptions::new(level);
    opts.only = only;
    let matrix = py.detach(|| run_verification(&opts)).map_err(err)?;
    ser(py, &matrix)
}

#[pymodule]
fn minorham(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(count_k25_free_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(three_connected_planar, m)?)?;
    m.add_function(wrap_pyfunction!(triangulations, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
