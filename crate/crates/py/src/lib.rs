//! Python bindings. Elements are addressed by label throughout.

use std::collections::HashMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::poset_residuation as pr;
use ::poset_residuation::fixtures::{fixture, verify_fixture, FIXTURES};
use ::poset_residuation::{ElementSet, Error, Premise, SetValuedTable, TableFormat, Variant};

create_exception!(poset_residuation, PosetError, PyValueError);

fn err(e: Error) -> PyErr {
    PosetError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

/// A finite poset with named elements.
#[pyclass(name = "Poset", module = "poset_residuation", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoset {
    inner: pr::Poset,
}

impl PyPoset {
    fn set(&self, labels: Vec<String>) -> PyResult<ElementSet> {
        self.inner.set_of(&labels).map_err(err)
    }

    fn index(&self, label: &str) -> PyResult<usize> {
        self.inner.index_of(label).map_err(err)
    }
}

#[pymethods]
impl PyPoset {
    /// Builds a poset from element names and `(lower, upper)` cover pairs.
    #[new]
    fn new(names: Vec<String>, covers: Vec<(String, String)>) -> PyResult<Self> {
        let inner = pr::Poset::from_covers(&names, &covers).map_err(err)?;
        Ok(PyPoset { inner })
    }

    /// Builds a poset from the full list of pairs `(x, y)` with `x <= y`.
    /// Reflexive pairs may be omitted.
    #[staticmethod]
    fn from_relation(names: Vec<String>, pairs: Vec<(String, String)>) -> PyResult<Self> {
        let pairs: std::collections::HashSet<(&str, &str)> =
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let inner = pr::Poset::from_relation(&names, |a, b| {
            a == b || pairs.contains(&(names[a].as_str(), names[b].as_str()))
        })
        .map_err(err)?;
        Ok(PyPoset { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Poset({})", self.inner.names().join(", "))
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn leq(&self, x: &str, y: &str) -> PyResult<bool> {
        Ok(self.inner.leq(self.index(x)?, self.index(y)?))
    }

    fn covers(&self) -> Vec<(String, String)> {
        let p = &self.inner;
        p.covers()
            .into_iter()
            .map(|(a, b)| (p.name(a).to_owned(), p.name(b).to_owned()))
            .collect()
    }

    fn lower_cone(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self.inner.labels(self.inner.lower_cone(self.set(labels)?)))
    }

    fn upper_cone(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self.inner.labels(self.inner.upper_cone(self.set(labels)?)))
    }

    fn maximal(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self.inner.labels(self.inner.max(self.set(labels)?)))
    }

    fn minimal(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self.inner.labels(self.inner.min(self.set(labels)?)))
    }

    /// `A <= B`: every member of `A` lies below every member of `B`.
    fn set_leq(&self, a: Vec<String>, b: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.set_leq(self.set(a)?, self.set(b)?))
    }

    fn is_bounded(&self) -> bool {
        self.inner.is_bounded()
    }

    fn is_lattice(&self) -> bool {
        self.inner.is_lattice()
    }

    /// Canonical relation code; equal for isomorphic posets.
    fn canonical_code(&self) -> u64 {
        pr::canonical_form(&self.inner).0
    }
}

/// A unary operation `x -> x'` on a poset.
#[pyclass(name = "UnaryOp", module = "poset_residuation", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyUnaryOp {
    inner: pr::UnaryOp,
    names: Vec<String>,
}

#[pymethods]
impl PyUnaryOp {
    #[new]
    fn new(poset: &PyPoset, mapping: HashMap<String, String>) -> PyResult<Self> {
        let pairs: Vec<(String, String)> = mapping.into_iter().collect();
        let inner = pr::UnaryOp::from_pairs(&poset.inner, &pairs).map_err(err)?;
        Ok(PyUnaryOp {
            inner,
            names: poset.inner.names().to_vec(),
        })
    }

    fn __call__(&self, x: &str) -> PyResult<String> {
        let i = self
            .names
            .iter()
            .position(|n| n == x)
            .ok_or_else(|| err(Error::UnknownLabel(x.to_owned())))?;
        Ok(self.names[self.inner.apply(i)].clone())
    }

    fn mapping(&self) -> HashMap<String, String> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), self.names[self.inner.apply(i)].clone()))
            .collect()
    }
}

/// The `⊙` and `→` tables of one construction.
#[pyclass(name = "Tables", module = "poset_residuation", frozen, skip_from_py_object)]
struct PyTables {
    poset: pr::Poset,
    odot: SetValuedTable,
    arrow: SetValuedTable,
    unary: Option<pr::UnaryOp>,
    variant: Variant,
}

impl PyTables {
    fn cell(&self, t: &SetValuedTable, x: &str, y: &str) -> PyResult<Vec<String>> {
        let p = &self.poset;
        let (x, y) = (p.index_of(x).map_err(err)?, p.index_of(y).map_err(err)?);
        Ok(p.labels(t.get(x, y)))
    }
}

#[pymethods]
impl PyTables {
    fn odot(&self, x: &str, y: &str) -> PyResult<Vec<String>> {
        self.cell(&self.odot, x, y)
    }

    fn arrow(&self, x: &str, y: &str) -> PyResult<Vec<String>> {
        self.cell(&self.arrow, x, y)
    }

    /// Renders both tables as `tsv` or `markdown`.
    #[pyo3(signature = (format = "tsv"))]
    fn render(&self, format: &str) -> PyResult<String> {
        let format: TableFormat = parse(format)?;
        Ok(format!(
            "{}\n{}",
            pr::render_table(&self.poset, &self.odot, format),
            pr::render_table(&self.poset, &self.arrow, format)
        ))
    }

    /// `None` if left adjointness holds, else the first failing `(a, b, c)`.
    fn adjointness_counterexample(&self) -> PyResult<Option<(String, String, String)>> {
        let v = pr::verify_left_adjointness(&self.poset, &self.odot, &self.arrow).map_err(err)?;
        let p = &self.poset;
        Ok(v.counterexample.map(|c| {
            (
                p.name(c.a).to_owned(),
                p.name(c.b).to_owned(),
                p.name(c.c).to_owned(),
            )
        }))
    }

    /// Names of the failing identities of the construction's suite.
    fn identity_failures(&self) -> PyResult<Vec<String>> {
        let r = pr::verify_identity_suite(
            &self.poset,
            self.unary.as_ref(),
            self.variant,
            &self.odot,
            &self.arrow,
        )
        .map_err(err)?;
        Ok(r.failures().map(|(n, _)| n.to_owned()).collect())
    }
}

/// Builds the tables of `variant` (`th1`, `boolean`, `piecewise`, `rp`).
#[pyfunction]
#[pyo3(signature = (poset, variant, unary = None, enforce_premises = true))]
fn build_tables(
    poset: &PyPoset,
    variant: &str,
    unary: Option<&PyUnaryOp>,
    enforce_premises: bool,
) -> PyResult<PyTables> {
    let variant: Variant = parse(variant)?;
    let u = unary.map(|u| u.inner.clone());
    let (odot, arrow) =
        pr::build_tables(&poset.inner, u.as_ref(), variant, enforce_premises).map_err(err)?;
    Ok(PyTables {
        poset: poset.inner.clone(),
        odot,
        arrow,
        unary: u,
        variant,
    })
}

/// Every verdict of the full property report, by name.
#[pyfunction]
#[pyo3(signature = (poset, unary = None))]
fn check(poset: &PyPoset, unary: Option<&PyUnaryOp>) -> HashMap<String, bool> {
    pr::full_report(&poset.inner, unary.map(|u| &u.inner))
        .iter()
        .map(|(n, v)| (n.to_owned(), v.passed()))
        .collect()
}

/// The full property report with witnesses, as a JSON string.
#[pyfunction]
#[pyo3(signature = (poset, unary = None))]
fn check_json(poset: &PyPoset, unary: Option<&PyUnaryOp>) -> String {
    let p = &poset.inner;
    pr::full_report(p, unary.map(|u| &u.inner)).to_json(p).to_string()
}

/// Parses the text poset format into a poset and its unary operation.
#[pyfunction]
fn parse_poset(text: &str) -> PyResult<(PyPoset, Option<PyUnaryOp>)> {
    let doc = pr::parse_poset_file(text).map_err(err)?;
    resolve(doc)
}

/// Loads a built-in example by id, e.g. `fig3`.
#[pyfunction]
fn load_fixture(id: &str) -> PyResult<(PyPoset, Option<PyUnaryOp>)> {
    let entry = fixture(id).ok_or_else(|| err(Error::UnknownLabel(id.to_owned())))?;
    resolve(pr::parse_poset_file(entry.source).map_err(err)?)
}

fn resolve(doc: pr::PosetDocument) -> PyResult<(PyPoset, Option<PyUnaryOp>)> {
    let p = doc.to_poset().map_err(err)?;
    let u = doc.unary_op(&p).map_err(err)?.map(|inner| PyUnaryOp {
        inner,
        names: p.names().to_vec(),
    });
    Ok((PyPoset { inner: p }, u))
}

/// `{id: ok}` for every built-in example.
#[pyfunction]
fn verify_fixtures() -> PyResult<HashMap<String, bool>> {
    FIXTURES
        .iter()
        .map(|e| Ok((e.id.to_owned(), verify_fixture(e).map_err(err)?.ok())))
        .collect()
}

/// Number of posets on `n` elements, labelled or up to isomorphism.
#[pyfunction]
#[pyo3(signature = (n, up_to_iso = true))]
fn count_posets(py: Python<'_>, n: usize, up_to_iso: bool) -> PyResult<usize> {
    py.detach(|| Ok(pr::enumerate_posets(n, up_to_iso)?.count()))
        .map_err(err)
}

/// Sweeps every model of size up to `max_size` meeting `premise`.
#[pyfunction]
#[pyo3(signature = (premise, max_size, up_to_iso = true))]
fn sweep(
    py: Python<'_>,
    premise: &str,
    max_size: usize,
    up_to_iso: bool,
) -> PyResult<HashMap<&'static str, u64>> {
    let premise: Premise = parse(premise)?;
    let r = py
        .detach(|| pr::sweep(premise, max_size, up_to_iso))
        .map_err(err)?;
    Ok(HashMap::from([
        ("models_examined", r.models_examined),
        ("models_passing_premises", r.models_passing_premises),
        ("adjointness_failures", r.adjointness_failure_count),
        ("identity_failures", r.identity_failure_count),
    ]))
}

#[pymodule(name = "poset_residuation")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PosetError", m.py().get_type::<PosetError>())?;
    m.add_class::<PyPoset>()?;
    m.add_class::<PyUnaryOp>()?;
    m.add_class::<PyTables>()?;
    m.add_function(wrap_pyfunction!(build_tables, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(check_json, m)?)?;
    m.add_function(wrap_pyfunction!(parse_poset, m)?)?;
    m.add_function(wrap_pyfunction!(load_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(verify_fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(count_posets, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
