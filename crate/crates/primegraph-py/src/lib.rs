use std::collections::{BTreeMap, BTreeSet};

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use primegraph::catalog::{build_profile, parse_target, realization_pgc, Catalog};
use primegraph::chars::{generic_sl2_2f_fixed_points, GenericElement};
use primegraph::classify::{classifier_for, classify_solvable, VerdictStatus};
use primegraph::groupkit::GroupSpec;
use primegraph::smallgraph::{self, Prime, PrimeGraph};
use primegraph::witness::{self, build_witness, round_trips, verify_blueprint};
use primegraph::spectra;

create_exception!(primegraph, PrimeGraphError, PyValueError);

fn err(e: primegraph::Error) -> PyErr {
    PrimeGraphError::new_err(e.to_string())
}

fn spec(group: &str) -> PyResult<GroupSpec> {
    group.parse().map_err(err)
}

/// A simple graph on prime labels.
#[pyclass(name = "Graph", module = "primegraph", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: PrimeGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (vertices, edges = Vec::new()))]
    fn new(vertices: Vec<Prime>, edges: Vec<(Prime, Prime)>) -> PyResult<Self> {
        Ok(PyGraph { inner: PrimeGraph::from_edges(vertices, edges).map_err(err)? })
    }

    /// Parse the `vertices:` / `edge:` / `root:` text format; returns `(graph, root)`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<(PyGraph, Option<Prime>)> {
        let (inner, root) = smallgraph::parse_graph(text).map_err(err)?;
        Ok((PyGraph { inner }, root))
    }

    #[getter]
    fn vertices(&self) -> Vec<Prime> {
        self.inner.vertices().iter().copied().collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(Prime, Prime)> {
        self.inner.edges().iter().copied().collect()
    }

    fn has_edge(&self, a: Prime, b: Prime) -> bool {
        self.inner.has_edge(a, b)
    }

    fn degree(&self, v: Prime) -> usize {
        self.inner.degree(v)
    }

    fn is_triangle_free(&self) -> bool {
        self.inner.is_triangle_free()
    }

    /// A proper O/D/I colouring with `mono` forced to I, or `None`.
    #[pyo3(signature = (mono = None))]
    fn three_coloring(&self, mono: Option<BTreeSet<Prime>>) -> Option<BTreeMap<Prime, char>> {
        smallgraph::three_colorable(&self.inner, mono.as_ref())
            .map(|c| c.assignment.into_iter().map(|(v, col)| (v, col.letter())).collect())
    }

    fn complement(&self) -> PyGraph {
        PyGraph { inner: smallgraph::complement(&self.inner) }
    }

    #[pyo3(signature = (root = None))]
    fn to_text(&self, root: Option<Prime>) -> String {
        smallgraph::to_text(&self.inner, root)
    }

    #[pyo3(signature = (root = None))]
    fn to_dot(&self, root: Option<Prime>) -> String {
        smallgraph::to_dot(&self.inner, root)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertices={:?}, edges={:?})", self.vertices(), self.edges())
    }
}

/// Outcome of a classification.
#[pyclass(name = "Verdict", module = "primegraph", frozen)]
struct PyVerdict {
    #[pyo3(get)]
    status: String,
    #[pyo3(get)]
    target: String,
    #[pyo3(get)]
    summary: String,
    #[pyo3(get)]
    report: String,
    #[pyo3(get)]
    condition: Option<String>,
    #[pyo3(get)]
    x: Option<Vec<Prime>>,
    #[pyo3(get)]
    entry: Option<String>,
    #[pyo3(get)]
    base: Option<String>,
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn realizable(&self) -> bool {
        self.status == VerdictStatus::Realizable.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Verdict({})", self.summary)
    }

    fn __str__(&self) -> String {
        self.summary.clone()
    }
}

fn verdict_for(target: &str, f: Option<u64>, g: &PrimeGraph, root: Option<Prime>) -> PyResult<primegraph::classify::Verdict> {
    if target.eq_ignore_ascii_case("solvable") {
        return Ok(classify_solvable(g));
    }
    let t = parse_target(target, f).map_err(err)?;
    classifier_for(&t).map_err(err)?.classify(g, root).map_err(err)
}

/// Prime graph complement of a group spec such as `"PSL2 q=16"` or
/// `"PSL2 q=16 * MODULE(r=3,row=chi10)"`.
#[pyfunction]
fn pgc(group: &str) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: realization_pgc(&spec(group)?).map_err(err)?.0 })
}

/// Prime graph (not complemented) of a group spec.
#[pyfunction]
fn prime_graph(group: &str) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: spectra::prime_graph(&spec(group)?).map_err(err)? })
}

/// Order of a group spec when it has a closed form.
#[pyfunction]
fn group_order(group: &str) -> PyResult<Option<u64>> {
    Ok(spec(group)?.analytic_order())
}

/// Classify `graph` against a target such as `"psl2-16"`, `"psl2-2f"` (with `f`) or `"solvable"`.
#[pyfunction]
#[pyo3(signature = (target, graph, root = None, f = None))]
fn classify(target: &str, graph: &PyGraph, root: Option<Prime>, f: Option<u64>) -> PyResult<PyVerdict> {
    let v = verdict_for(target, f, &graph.inner, root)?;
    let cert = v.certificate.as_ref();
    Ok(PyVerdict {
        status: v.status.to_string(),
        target: v.target.clone(),
        summary: v.to_string(),
        report: v.report(),
        condition: cert.map(|c| c.condition.clone()),
        x: cert.map(|c| c.x.iter().copied().collect()),
        entry: cert.and_then(|c| c.entry.clone()),
        base: cert.map(|c| c.base.to_string()),
    })
}

/// Verified blueprint text for a realizable graph, or `None` otherwise.
#[pyfunction(name = "witness")]
#[pyo3(signature = (target, graph, root = None, f = None))]
fn witness_text(target: &str, graph: &PyGraph, root: Option<Prime>, f: Option<u64>) -> PyResult<Option<String>> {
    let v = verdict_for(target, f, &graph.inner, root)?;
    let Some(cert) = v.certificate.as_ref().filter(|_| v.status == VerdictStatus::Realizable) else {
        return Ok(None);
    };
    let b = build_witness(&graph.inner, cert).map_err(err)?;
    verify_blueprint(&b).map_err(err)?;
    if !round_trips(&graph.inner, &b).map_err(err)? {
        return Err(PrimeGraphError::new_err("blueprint complement differs from the input graph"));
    }
    Ok(Some(b.to_string()))
}

/// Complement of the group a blueprint text describes.
#[pyfunction]
fn blueprint_pgc(text: &str) -> PyResult<PyGraph> {
    let b = witness::parse_blueprint(text).map_err(err)?;
    verify_blueprint(&b).map_err(err)?;
    Ok(PyGraph { inner: witness::blueprint_pgc(&b).map_err(err)? })
}

/// Catalog entries as `(id, status, [realizing specs])`.
#[pyfunction]
#[pyo3(signature = (target, f = None))]
fn catalog_entries(target: &str, f: Option<u64>) -> PyResult<Vec<(String, String, Vec<String>)>> {
    let c = Catalog::build(&parse_target(target, f).map_err(err)?).map_err(err)?;
    Ok(c.entries()
        .map(|e| (e.id.clone(), e.status.to_string(), e.realizations.iter().map(|r| r.spec.to_string()).collect()))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (target, f = None))]
fn catalog_dump(target: &str, f: Option<u64>) -> PyResult<String> {
    Ok(Catalog::build(&parse_target(target, f).map_err(err)?).map_err(err)?.dump())
}

/// Order, root prime and Schur multiplier of a supported target.
#[pyfunction]
#[pyo3(signature = (target, f = None))]
fn profile(target: &str, f: Option<u64>) -> PyResult<BTreeMap<&'static str, u64>> {
    let p = build_profile(&parse_target(target, f).map_err(err)?).map_err(err)?;
    Ok(BTreeMap::from([
        ("order", p.order),
        ("aut_order", p.aut_order),
        ("root_prime", p.root_prime),
        ("schur_multiplier", p.schur_multiplier as u64),
    ]))
}

/// Least prime ≡ 1 (mod m) outside `exclude`.
#[pyfunction]
#[pyo3(signature = (m, exclude = BTreeSet::new()))]
fn dirichlet_prime(m: u64, exclude: BTreeSet<Prime>) -> PyResult<Prime> {
    witness::dirichlet_prime(m, &exclude).map_err(err)
}

/// `(f, 2^f-1, (2^f+1)/3, is_k4)` for every odd prime f ≤ max_f.
#[pyfunction]
fn k4_scan(max_f: u64) -> Vec<(u64, u64, u64, bool)> {
    spectra::k4_scan(max_f).into_iter().map(|r| (r.f, r.q_minus, r.p_plus, r.is_k4)).collect()
}

/// Fixed-point dimensions m1..m4 on the class of an element of `order` in SL(2,2^f).
#[pyfunction]
fn generic_fixed_points(f: u64, order: u64) -> PyResult<[u64; 4]> {
    let e = GenericElement::from_order(f, order).map_err(err)?;
    Ok(generic_sl2_2f_fixed_points(f, e).map_err(err)?.summed)
}

#[pymodule]
#[pyo3(name = "primegraph")]
fn primegraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PrimeGraphError", m.py().get_type::<PrimeGraphError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(pgc, m)?)?;
    m.add_function(wrap_pyfunction!(prime_graph, m)?)?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(witness_text, m)?)?;
    m.add_function(wrap_pyfunction!(blueprint_pgc, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_entries, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_dump, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_prime, m)?)?;
    m.add_function(wrap_pyfunction!(k4_scan, m)?)?;
    m.add_function(wrap_pyfunction!(generic_fixed_points, m)?)?;
    Ok(())
}
