//! Python bindings: graphs, exact interval counts, spectra, the bound check
//! and corpus verification.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lapgirth::cli::parse_rational;
use lapgirth::enumeration;
use lapgirth::report::ReportDocument;
use lapgirth::spectra::{self, LaplacianCounter};
use lapgirth::theorems::{self, Classification};
use lapgirth::{Gadget, Girth};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", module = "pylapgirth", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph {
    inner: lapgirth::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        lapgirth::Graph::from_edges(n, &edges).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        lapgirth::Graph::from_graph6(text).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        lapgirth::Graph::cycle(n).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        lapgirth::Graph::path(n).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        lapgirth::Graph::complete(n).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn complete_multipartite(parts: Vec<usize>) -> PyResult<Self> {
        lapgirth::Graph::complete_multipartite(&parts).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn u_t(g: usize, t: usize) -> PyResult<Self> {
        lapgirth::Graph::u_t(g, t).map(|inner| Self { inner }).map_err(value_error)
    }

    /// One of the four proof gadgets, named "G1" to "G4".
    #[staticmethod]
    fn gadget(name: &str) -> PyResult<Self> {
        let which: Gadget = name.parse().map_err(|e: lapgirth::graph::ParseGadgetError| value_error(e.0))?;
        Ok(Self { inner: lapgirth::Graph::gadget(which) })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn graph6(&self) -> String {
        self.inner.to_graph6()
    }

    /// Length of a shortest cycle, or None for forests.
    fn girth(&self) -> Option<usize> {
        self.inner.girth().finite()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn chromatic_number(&self) -> PyResult<usize> {
        self.inner.chromatic_number().map_err(value_error)
    }

    /// Canonical-form bytes; equal for isomorphic graphs on at most 12 vertices.
    fn canonical_form<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, pyo3::types::PyBytes>> {
        let form = enumeration::canonical_form(&self.inner).map_err(value_error)?;
        Ok(pyo3::types::PyBytes::new(py, &form.bytes()))
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.inner.to_graph6())
    }
}

#[pyclass(name = "VerificationRecord", module = "pylapgirth", frozen, get_all)]
struct PyRecord {
    graph6: String,
    n: usize,
    girth: Option<usize>,
    count: Option<usize>,
    bound: Option<usize>,
    holds: bool,
    equality: bool,
    classification: String,
}

#[pymethods]
impl PyRecord {
    fn __repr__(&self) -> String {
        format!(
            "VerificationRecord(graph6={:?}, n={}, girth={:?}, count={:?}, bound={:?}, holds={}, equality={}, classification={:?})",
            self.graph6, self.n, self.girth, self.count, self.bound, self.holds, self.equality, self.classification
        )
    }
}

impl From<theorems::VerificationRecord> for PyRecord {
    fn from(r: theorems::VerificationRecord) -> Self {
        Self {
            graph6: r.graph6,
            n: r.n,
            girth: match r.girth {
                Girth::Finite(g) => Some(g),
                Girth::Infinite => None,
            },
            count: r.count,
            bound: r.bound,
            holds: r.holds,
            equality: r.equality,
            classification: r.classification.to_string(),
        }
    }
}

fn rational_arg(value: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    let text = value.str()?.to_string();
    parse_rational(&text).ok_or_else(|| value_error(format!("cannot read {text:?} as a rational number")))
}

/// Characteristic polynomial of the Laplacian, coefficients in ascending degree.
#[pyfunction]
fn char_poly(graph: &PyGraph) -> PyResult<Vec<BigInt>> {
    Ok(LaplacianCounter::new(&graph.inner).map_err(value_error)?.polynomial().coeffs().to_vec())
}

/// Exact number of Laplacian eigenvalues in (a, b]; endpoints may be ints,
/// Fractions or strings like "7/2".
#[pyfunction]
fn m_interval(graph: &PyGraph, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<usize> {
    let (a, b) = (rational_arg(a)?, rational_arg(b)?);
    Ok(spectra::m_interval(&graph.inner, &a, &b).map_err(value_error)?.count())
}

/// Numeric Laplacian eigenvalues, largest first.
#[pyfunction]
fn numeric_spectrum(graph: &PyGraph) -> PyResult<Vec<f64>> {
    spectra::numeric_spectrum(&graph.inner).map_err(value_error)
}

/// Integer Laplacian eigenvalues with multiplicities, ascending.
#[pyfunction]
fn integer_eigenvalues(graph: &PyGraph) -> PyResult<Vec<(i64, usize)>> {
    Ok(LaplacianCounter::new(&graph.inner).map_err(value_error)?.integer_eigenvalues())
}

/// Closed-form spectrum of a named family as display text.
#[pyfunction]
#[pyo3(signature = (family, *params))]
fn closed_form_spectrum(family: &str, params: Vec<usize>) -> PyResult<String> {
    let spectrum = match (family, params.as_slice()) {
        ("cycle", [n]) => spectra::cycle_spectrum(*n),
        ("path", [n]) => spectra::path_spectrum(*n),
        ("k", parts) => spectra::multipartite_spectrum(parts),
        _ => return Err(value_error(format!("no closed form for {family} {params:?}"))),
    };
    Ok(spectrum.map_err(value_error)?.to_string())
}

#[pyfunction]
fn theorem_up_check(graph: &PyGraph) -> PyResult<PyRecord> {
    theorems::theorem_up_check(&graph.inner).map(PyRecord::from).map_err(value_error)
}

/// Record for any connected graph, including cycles and trees.
#[pyfunction]
fn verification_record(graph: &PyGraph) -> PyResult<PyRecord> {
    theorems::verification_record(&graph.inner).map(PyRecord::from).map_err(value_error)
}

#[pyfunction]
fn classify_equality(graph: &PyGraph) -> String {
    theorems::classify_equality(&graph.inner).to_string()
}

#[pyfunction]
fn remark_cycle_count(n: usize) -> PyResult<usize> {
    theorems::remark_cycle_count(n).map_err(value_error)
}

/// Per-lemma pass flags.
#[pyfunction]
fn lemma_suite(graph: &PyGraph) -> PyResult<Vec<(String, bool)>> {
    let r = theorems::lemma_suite(&graph.inner).map_err(value_error)?;
    let flags = [r.edge_deletion, r.max_degree_plus_one, r.edge_degree_bound, r.chromatic];
    Ok(theorems::LemmaReport::NAMES.iter().map(|s| s.to_string()).zip(flags).collect())
}

/// `(closed_form, numeric, slack)` for the rank-two gadget.
#[pyfunction]
fn rho2_gadget(a: u64, g: usize) -> PyResult<(f64, f64, f64)> {
    let r = lapgirth::linalg::rho2_case2_gadget(a, g).map_err(value_error)?;
    Ok((r.closed_form, r.numeric, r.slack))
}

#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumeration::enumerate_connected(n).map_err(value_error)?.into_iter().map(|inner| PyGraph { inner }).collect())
}

/// Scans the given graphs, or every connected graph up to `nmax` vertices,
/// and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (graphs = None, nmax = None))]
fn verify(py: Python<'_>, graphs: Option<Vec<PyGraph>>, nmax: Option<usize>) -> PyResult<String> {
    let (corpus, command) = match (graphs, nmax) {
        (Some(gs), None) => (gs.into_iter().map(|g| g.inner).collect::<Vec<_>>(), "verify (python, explicit graphs)".to_string()),
        (None, Some(n)) => (
            enumeration::enumerate_connected_upto(n).map_err(value_error)?.into_iter().flatten().collect(),
            format!("verify --nmax {n}"),
        ),
        _ => return Err(value_error("pass exactly one of graphs or nmax")),
    };
    let scan = py.detach(|| theorems::scan_corpus(corpus));
    Ok(ReportDocument::new(&scan, command, ReportDocument::now()).to_json())
}

#[pymodule]
fn pylapgirth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(m_interval, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(integer_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_up_check, m)?)?;
    m.add_function(wrap_pyfunction!(verification_record, m)?)?;
    m.add_function(wrap_pyfunction!(classify_equality, m)?)?;
    m.add_function(wrap_pyfunction!(remark_cycle_count, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_suite, m)?)?;
    m.add_function(wrap_pyfunction!(rho2_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("CLASSIFICATIONS", Classification::ALL.map(|c| c.as_str()).to_vec())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
