//! Python bindings. Vertex ids, elements and set indices are 0-based;
//! rationals cross the boundary as strings such as `"7/2"`.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use idcode::code::{self, Code, DEFAULT_EXACT_CAP};
use idcode::constructions;
use idcode::graph::{Graph, VertexSet};
use idcode::interval::{self, IntervalRep};
use idcode::io;
use idcode::reductions::{self, ReducedInstance, SetCover1Instance};
use idcode::vcdim;
use idcode::Error;

create_exception!(idcode, IdcodeError, PyException);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::VertexOutOfRange { .. }
        | Error::SameVertex(_)
        | Error::NotAdjacent(..)
        | Error::InvalidBipartition(_)
        | Error::NotACover { .. }
        | Error::Degenerate(_)
        | Error::InvalidInput(_)
        | Error::Parse { .. } => PyValueError::new_err(err.to_string()),
        _ => IdcodeError::new_err(err.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for idcode::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "idcode", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::from_edges(n, edges).py()?,
        })
    }

    /// Parses the edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: io::parse_graph(text).py()?,
        })
    }

    fn to_text(&self) -> String {
        io::write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(to_py(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn find_twins(&self) -> Vec<(usize, usize)> {
        self.inner.find_twins()
    }

    fn is_twin_free(&self) -> bool {
        self.inner.is_twin_free()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_c4_free(&self) -> bool {
        self.inner.is_c4_free()
    }

    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

fn code_of(g: &Graph, vertices: Vec<usize>) -> PyResult<Code> {
    Ok(Code::identifying(VertexSet::new(g.n(), vertices).py()?))
}

/// `"valid"`, `"not_dominating(v)"` or `"not_separating(u,v)"`.
#[pyfunction]
fn verify_identifying_code(g: &PyGraph, code: Vec<usize>) -> PyResult<String> {
    let code = code_of(&g.inner, code)?;
    Ok(code::verify_identifying_code(&g.inner, &code).py()?.to_string())
}

/// A minimum identifying code; raises when the graph has twins or more than
/// `cap` vertices.
#[pyfunction]
#[pyo3(signature = (g, cap=DEFAULT_EXACT_CAP))]
fn exact_min_id_code(py: Python<'_>, g: &PyGraph, cap: usize) -> PyResult<Vec<usize>> {
    let graph = g.inner.clone();
    let code = py.detach(move || code::exact_min_id_code(&graph, cap)).py()?;
    Ok(code.vertices.into_vec())
}

#[pyfunction]
fn greedy_id_code(g: &PyGraph) -> PyResult<Vec<usize>> {
    Ok(code::greedy_id_code(&g.inner).py()?.vertices.into_vec())
}

/// `(dimension, shattered_set, lower_bound_only)`.
#[pyfunction]
#[pyo3(signature = (g, max_d=6))]
fn vc_dimension(g: &PyGraph, max_d: usize) -> (usize, Vec<usize>, bool) {
    let vc = vcdim::vc_dimension(&g.inner, max_d);
    (
        vc.dimension,
        vc.certificate.shattered_set.into_vec(),
        vc.lower_bound_only,
    )
}

/// Smallest `c` with `c^d >= n - 1`.
#[pyfunction]
fn sauer_lower_bound(n: u64, d: u32) -> PyResult<u64> {
    vcdim::sauer_lower_bound(n, d).py()
}

/// Induced subgraph and identifying code built from a shattered set:
/// `(graph, original_ids, code)`.
#[pyfunction]
fn code_from_shattered(g: &PyGraph, x: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>, Vec<usize>)> {
    let x = VertexSet::new(g.inner.n(), x).py()?;
    let sc = vcdim::code_from_shattered(&g.inner, &x).py()?;
    Ok((
        PyGraph { inner: sc.graph },
        sc.original_ids,
        sc.code.vertices.into_vec(),
    ))
}

/// Result of the interval-graph approximation.
#[pyclass(name = "IntervalApprox", module = "idcode", frozen, get_all)]
struct PyIntervalApprox {
    code: Vec<usize>,
    opt_full: String,
    opt_inter: String,
    opt_disj: String,
    /// `(name, lhs, rhs, holds)` for each link of the bound chain.
    chain: Vec<(String, String, String, bool)>,
}

#[pymethods]
impl PyIntervalApprox {
    fn __repr__(&self) -> String {
        format!(
            "IntervalApprox(size={}, opt_full={})",
            self.code.len(),
            self.opt_full
        )
    }
}

/// Runs the 6-approximation on closed integer intervals `(begin, end)`;
/// vertex `i` is interval `i`.
#[pyfunction]
fn approx_id_code_interval(
    py: Python<'_>,
    intervals: Vec<(i64, i64)>,
) -> PyResult<(PyGraph, PyIntervalApprox)> {
    let rep = IntervalRep::from_ints(&intervals).py()?;
    let g = rep.graph();
    let approx = py
        .detach(|| interval::approx_id_code_interval(&g, &rep))
        .py()?;
    let chain = approx
        .bound_chain()
        .into_iter()
        .map(|b| {
            let holds = b.holds();
            (b.name.to_string(), b.lhs.to_string(), b.rhs.to_string(), holds)
        })
        .collect();
    let out = PyIntervalApprox {
        code: approx.code.vertices.into_vec(),
        opt_full: approx.opt_full.to_string(),
        opt_inter: approx.opt_inter.to_string(),
        opt_disj: approx.opt_disj.to_string(),
        chain,
    };
    Ok((PyGraph { inner: g }, out))
}

/// `(graph, code)` for the C4-free bipartite family with `|Y| = n`.
#[pyfunction]
fn c4_free_bipartite_family(n: usize) -> PyResult<(PyGraph, Vec<usize>)> {
    let (g, code) = constructions::c4_free_bipartite_family(n).py()?;
    Ok((PyGraph { inner: g }, code.vertices.into_vec()))
}

/// `(graph, code)` for the family with `|A| = d`.
#[pyfunction]
fn vc_d_bipartite_family(d: usize) -> PyResult<(PyGraph, Vec<usize>)> {
    let (g, code) = constructions::vc_d_bipartite_family(d).py()?;
    Ok((PyGraph { inner: g }, code.vertices.into_vec()))
}

/// A set-cover instance reduced to a discriminating-code (`"dc"`) or
/// identifying-code (`"ic"`) instance.
#[pyclass(name = "Reduction", module = "idcode", frozen)]
struct PyReduction {
    inner: ReducedInstance,
}

fn build_reduction(n: usize, sets: Vec<Vec<usize>>, target: &str) -> PyResult<ReducedInstance> {
    let sc = SetCover1Instance::new(n, sets).py()?;
    match target {
        "dc" => reductions::build_dc_instance(&sc).py(),
        "ic" => reductions::build_ic_instance(&sc).py(),
        other => Err(PyValueError::new_err(format!(
            "target must be 'dc' or 'ic', got '{other}'"
        ))),
    }
}

#[pymethods]
impl PyReduction {
    #[new]
    fn new(n: usize, sets: Vec<Vec<usize>>, target: &str) -> PyResult<Self> {
        Ok(PyReduction {
            inner: build_reduction(n, sets, target)?,
        })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn ell(&self) -> usize {
        self.inner.ell
    }

    /// Role of each vertex, e.g. `"S 3 2"` (1-based copy and set).
    fn labels(&self) -> Vec<String> {
        self.inner.roles.iter().map(ToString::to_string).collect()
    }

    fn x_side(&self) -> Vec<usize> {
        self.inner.x_side().into_vec()
    }

    fn y_side(&self) -> Vec<usize> {
        self.inner.y_side().into_vec()
    }

    /// Code obtained from a set cover (set indices).
    fn forward(&self, cover: Vec<usize>) -> PyResult<Vec<usize>> {
        let code = match self.inner.target {
            reductions::ReductionTarget::DiscriminatingCode => {
                reductions::setcover_to_dc_solution(&self.inner, &cover).py()?
            }
            reductions::ReductionTarget::IdentifyingCode => {
                reductions::setcover_to_ic_solution(&self.inner, &cover).py()?.vertices
            }
        };
        Ok(code.into_vec())
    }

    /// Set cover (set indices) obtained from a valid code.
    fn backward(&self, code: Vec<usize>) -> PyResult<Vec<usize>> {
        let vertices = VertexSet::new(self.inner.graph.n(), code).py()?;
        match self.inner.target {
            reductions::ReductionTarget::DiscriminatingCode => {
                reductions::dc_solution_to_setcover(&self.inner, &vertices).py()
            }
            reductions::ReductionTarget::IdentifyingCode => {
                let back =
                    reductions::ic_solution_to_setcover(&self.inner, &Code::identifying(vertices))
                        .py()?;
                Ok(back.cover)
            }
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Reduction(target={:?}, n={}, ell={})",
            self.inner.target,
            self.inner.graph.n(),
            self.inner.ell
        )
    }
}

#[pymodule]
#[pyo3(name = "idcode")]
fn idcode_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("IdcodeError", m.py().get_type::<IdcodeError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyIntervalApprox>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(verify_identifying_code, m)?)?;
    m.add_function(wrap_pyfunction!(exact_min_id_code, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_id_code, m)?)?;
    m.add_function(wrap_pyfunction!(vc_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(sauer_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(code_from_shattered, m)?)?;
    m.add_function(wrap_pyfunction!(approx_id_code_interval, m)?)?;
    m.add_function(wrap_pyfunction!(c4_free_bipartite_family, m)?)?;
    m.add_function(wrap_pyfunction!(vc_d_bipartite_family, m)?)?;
    Ok(())
}
