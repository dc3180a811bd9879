//! Python bindings. Partitions are passed as lists of ints; products come back
//! as lists of (nu, degree, coefficient) triples.

use num_complex::Complex64;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use qfusion::identities::{self, CoeffTable, GwSymmetry, TableKind};
use qfusion::{boson, fermion, plactic, spectral, suites, symfunc};
use qfusion::{AffineWeight, Error, Partition as CorePartition, Word01};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn part(v: Vec<usize>) -> PyResult<CorePartition> {
    CorePartition::new(v).map_err(err)
}

type Terms = Vec<(Vec<usize>, i64, u64)>;

fn monomials<'a>(it: impl Iterator<Item = (CorePartition, &'a qfusion::LaurentInt)>) -> PyResult<Terms> {
    use num_traits::ToPrimitive;
    let mut out = Vec::new();
    for (nu, c) in it {
        for (d, x) in c.terms() {
            let x = x
                .to_u64()
                .ok_or_else(|| PyValueError::new_err(format!("coefficient {x} out of range")))?;
            out.push((nu.parts().to_vec(), d, x));
        }
    }
    Ok(out)
}

/// Integer partition with weakly decreasing positive parts.
#[pyclass(name = "Partition", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPartition(CorePartition);

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts=vec![]))]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Ok(PyPartition(part(parts)?))
    }

    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        Ok(PyPartition(s.parse().map_err(err)?))
    }

    /// All partitions inside a rows x cols box.
    #[staticmethod]
    fn all_in_box(rows: usize, cols: usize) -> Vec<Self> {
        CorePartition::all_in_box(rows, cols)
            .into_iter()
            .map(PyPartition)
            .collect()
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn transpose(&self) -> Self {
        PyPartition(self.0.transpose())
    }

    fn complement(&self, rows: usize, cols: usize) -> PyResult<Self> {
        Ok(PyPartition(self.0.complement(rows, cols).map_err(err)?))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// Table of structure constants keyed by (lambda, mu, nu).
#[pyclass(name = "CoeffTable", frozen)]
struct PyCoeffTable(CoeffTable);

#[pymethods]
impl PyCoeffTable {
    /// Gromov-Witten invariants of Gr(k, N) from the lattice action.
    #[staticmethod]
    #[pyo3(name = "gw")]
    fn gw(py: Python<'_>, k: usize, nn: usize) -> PyResult<Self> {
        py.detach(|| CoeffTable::gw_direct(k, nn))
            .map(PyCoeffTable)
            .map_err(err)
    }

    /// Fusion coefficients of affine sl(n) at level k.
    #[staticmethod]
    fn fusion(py: Python<'_>, n: usize, k: usize) -> PyResult<Self> {
        py.detach(|| CoeffTable::fusion_direct(n, k))
            .map(PyCoeffTable)
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        CoeffTable::from_json(s).map(PyCoeffTable).map_err(err)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.0.kind {
            TableKind::Fusion => "fusion",
            TableKind::Gw => "gw",
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k
    }

    /// (degree, coefficient), or None when the coefficient vanishes.
    fn get(&self, lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<Option<(i64, u64)>> {
        Ok(self.0.get(&part(lam)?, &part(mu)?, &part(nu)?))
    }

    fn __getitem__(&self, key: (Vec<usize>, Vec<usize>, Vec<usize>)) -> PyResult<(i64, u64)> {
        self.get(key.0, key.1, key.2)?
            .ok_or_else(|| PyKeyError::new_err("zero coefficient"))
    }

    fn records(&self) -> Vec<(String, String, String, i64, u64)> {
        self.0
            .records()
            .into_iter()
            .map(|r| (r.lambda, r.mu, r.nu, r.d, r.c))
            .collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    /// Check one of "s3", "level_rank", "rotation", "curious"; returns (checked, violations).
    fn check_symmetry(&self, which: &str) -> PyResult<(usize, Vec<String>)> {
        let s = match which {
            "s3" => GwSymmetry::S3,
            "level_rank" => GwSymmetry::LevelRank,
            "rotation" => GwSymmetry::Rotation,
            "curious" => GwSymmetry::Curious,
            _ => return Err(PyValueError::new_err(format!("unknown symmetry {which}"))),
        };
        let r = identities::gw_symmetry_check(&self.0, s).map_err(err)?;
        Ok((r.checked, r.violations))
    }

    fn __len__(&self) -> usize {
        self.0.entries.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "CoeffTable(kind={}, n={}, k={}, entries={})",
            self.kind(),
            self.0.n,
            self.0.k,
            self.0.entries.len()
        )
    }
}

/// s_lambda(A) s_mu in the fusion ring of sl(n) at level k.
#[pyfunction]
fn fusion_product(n: usize, k: usize, lam: Vec<usize>, mu: Vec<usize>) -> PyResult<Terms> {
    let a = AffineWeight::from_partition(&part(lam)?, n, k).map_err(err)?;
    let b = AffineWeight::from_partition(&part(mu)?, n, k).map_err(err)?;
    let prod = boson::fusion_product(&a, &b).map_err(err)?;
    monomials(prod.iter().map(|(w, c)| (w.to_partition(), c)))
}

#[pyfunction]
fn fusion_coeff(n: usize, k: usize, lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    let w = |v| AffineWeight::from_partition(&part(v)?, n, k).map_err(err);
    boson::fusion_coeff(&w(lam)?, &w(mu)?, &w(nu)?).map_err(err)
}

/// Fusion coefficient from the Verlinde formula.
#[pyfunction]
fn verlinde_coeff(n: usize, k: usize, lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    let w = |v| AffineWeight::from_partition(&part(v)?, n, k).map_err(err);
    spectral::verlinde_coeff(&w(lam)?, &w(mu)?, &w(nu)?).map_err(err)
}

/// Quantum product lambda * mu in QH*(Gr(k, N)).
#[pyfunction]
fn quantum_product(k: usize, nn: usize, lam: Vec<usize>, mu: Vec<usize>) -> PyResult<Terms> {
    let prod = fermion::quantum_product(&part(lam)?, &part(mu)?, k, nn).map_err(err)?;
    monomials(prod.iter().map(|(w, c)| (w.to_partition(), c)))
}

#[pyfunction]
fn gw_invariant(k: usize, nn: usize, lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>, d: usize) -> PyResult<u64> {
    fermion::gw_invariant(&part(lam)?, &part(mu)?, &part(nu)?, d, k, nn).map_err(err)
}

/// (degree or None, coefficient) from the Bertram-Vafa-Intriligator formula.
#[pyfunction]
fn bvi_coeff(k: usize, nn: usize, lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<(Option<usize>, u64)> {
    spectral::bvi_coeff(&part(lam)?, &part(mu)?, &part(nu)?, k, nn).map_err(err)
}

#[pyfunction]
fn littlewood_richardson(lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    Ok(symfunc::littlewood_richardson(&part(lam)?, &part(mu)?, &part(nu)?))
}

/// (basis as P-partitions, S as nested lists of complex).
#[pyfunction]
fn smatrix(n: usize, k: usize) -> PyResult<(Vec<Vec<usize>>, Vec<Vec<Complex64>>)> {
    let s = spectral::smatrix(n, k).map_err(err)?;
    Ok((
        s.basis.iter().map(|w| w.to_partition().parts().to_vec()).collect(),
        s.entries,
    ))
}

/// Gr(k, N) tables for k = 0..=N built up from the point.
#[pyfunction]
fn hierarchy_build(py: Python<'_>, nn: usize) -> PyResult<Vec<PyCoeffTable>> {
    let t = py.detach(|| identities::hierarchy_build(nn)).map_err(err)?;
    Ok(t.into_iter().map(PyCoeffTable).collect())
}

/// Run a named verification suite; returns (ok, [check dicts]).
#[pyfunction]
#[pyo3(signature = (name, n, k, tol=1e-9))]
fn run_suite<'py>(
    py: Python<'py>,
    name: &str,
    n: usize,
    k: usize,
    tol: f64,
) -> PyResult<(bool, Vec<Bound<'py, PyDict>>)> {
    let rep = py.detach(|| suites::run_suite(name, n, k, tol)).map_err(err)?;
    let mut checks = Vec::new();
    for c in &rep.checks {
        let d = PyDict::new(py);
        d.set_item("name", &c.name)?;
        d.set_item("ok", c.ok)?;
        d.set_item("numeric", c.numeric)?;
        d.set_item("detail", &c.detail)?;
        checks.push(d);
    }
    Ok((rep.ok(), checks))
}

/// Word in a_0..a_{n-1} (list of indices) to its aperiodic multipartition.
#[pyfunction]
fn word_to_multipartition(word: Vec<usize>, n: usize) -> PyResult<Vec<Vec<usize>>> {
    if let Some(&x) = word.iter().find(|&&x| x >= n) {
        return Err(PyValueError::new_err(format!("letter {x} out of range for n={n}")));
    }
    let pi = plactic::word_to_multipartition(&word, n);
    Ok(pi.components().iter().map(|p| p.parts().to_vec()).collect())
}

/// Standard word of an aperiodic multipartition.
#[pyfunction]
fn multipartition_to_word(components: Vec<Vec<usize>>) -> PyResult<Vec<usize>> {
    let parts = components.into_iter().map(part).collect::<PyResult<Vec<_>>>()?;
    let pi = plactic::MultiPartition::new(parts).map_err(err)?;
    plactic::multipartition_to_word(&pi).map_err(err)
}

#[pyfunction]
fn format_word(word: Vec<usize>) -> String {
    plactic::format_word(&word)
}

#[pyfunction]
fn parse_word(s: &str) -> PyResult<Vec<usize>> {
    plactic::parse_word(s).map_err(err)
}

/// Normal form of a semistandard tableau (list of rows) over letters 1..n-1.
/// With log=True also returns the applied rules as (label, column, value).
#[pyfunction]
#[pyo3(signature = (rows, n, log=false))]
fn normalize_tableau<'py>(py: Python<'py>, rows: Vec<Vec<usize>>, n: usize, log: bool) -> PyResult<Bound<'py, PyAny>> {
    let t = plactic::Tableau::new(rows).map_err(err)?;
    let (d, rules) = plactic::normalize_tableau_logged(&t, n).map_err(err)?;
    let out = d.rows().to_vec();
    if log {
        let rules: Vec<(&str, usize, usize)> = rules.iter().map(|r| (r.rule.label(), r.column, r.value)).collect();
        Ok((out, rules).into_pyobject(py)?.into_any())
    } else {
        Ok(out.into_pyobject(py)?.into_any())
    }
}

/// 01-word of a partition in the k x (N-k) box.
#[pyfunction]
fn partition_to_word01(lam: Vec<usize>, k: usize, nn: usize) -> PyResult<String> {
    Ok(Word01::from_partition(&part(lam)?, k, nn).map_err(err)?.to_string())
}

#[pymodule]
#[pyo3(name = "qfusion")]
pub fn qfusion_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyCoeffTable>()?;
    m.add_function(wrap_pyfunction!(fusion_product, m)?)?;
    m.add_function(wrap_pyfunction!(fusion_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(verlinde_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_product, m)?)?;
    m.add_function(wrap_pyfunction!(gw_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(bvi_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(littlewood_richardson, m)?)?;
    m.add_function(wrap_pyfunction!(smatrix, m)?)?;
    m.add_function(wrap_pyfunction!(hierarchy_build, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(word_to_multipartition, m)?)?;
    m.add_function(wrap_pyfunction!(multipartition_to_word, m)?)?;
    m.add_function(wrap_pyfunction!(format_word, m)?)?;
    m.add_function(wrap_pyfunction!(parse_word, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(partition_to_word01, m)?)?;
    m.add("SUITES", suites::SUITES.to_vec())?;
    Ok(())
}
