//! Python bindings for the `rouquier` crate.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rouquier::block::rouquier_multicore;
use rouquier::fock::CanonicalBasis as CoreBasis;
use rouquier::formula::{self, RouquierPair};
use rouquier::multipartition::{self as mp, compose, decompose, quotient_size};
use rouquier::{lr, verify, Error};

create_exception!(rouquier_py, PreconditionError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Precondition(_) | Error::UnknownLabel(_) => PreconditionError::new_err(e.to_string()),
        Error::OrderingViolation(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Partition", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Partition(rouquier::Partition);

#[pymethods]
impl Partition {
    /// Accepts a list of parts or text such as `"3,1,1"`.
    #[new]
    fn new(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = obj.extract::<String>() {
            return s.parse().map(Partition).map_err(to_py);
        }
        let parts: Vec<usize> = obj.extract()?;
        rouquier::Partition::new(parts).map(Partition).map_err(to_py)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        Partition(self.0.conjugate())
    }

    fn is_e_regular(&self, e: usize) -> PyResult<bool> {
        self.0.is_e_regular(e).map_err(to_py)
    }

    /// `(core, quotient, weight)` on an abacus with `e` runners at charge `a`.
    #[pyo3(signature = (e, a = 0))]
    fn core_and_quotient(&self, e: usize, a: i64) -> PyResult<(Partition, Vec<Partition>, usize)> {
        let cq = rouquier::e_core_and_quotient(&self.0, a, e).map_err(to_py)?;
        Ok((Partition(cq.core), cq.quotient.into_iter().map(Partition).collect(), cq.weight))
    }

    /// The first `n` β-numbers at charge `a`.
    #[pyo3(signature = (n, a = 0))]
    fn beta_numbers(&self, n: usize, a: i64) -> Vec<i64> {
        rouquier::BetaSet::new(&self.0, a).first_beads(n)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

#[pyclass(name = "Multipartition", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Multipartition(rouquier::Multipartition);

#[pymethods]
impl Multipartition {
    /// Accepts text such as `"3,1;-;2"` or a list of partitions.
    #[new]
    fn new(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = obj.extract::<String>() {
            return s.parse().map(Multipartition).map_err(to_py);
        }
        let comps: Vec<Vec<usize>> = obj.extract()?;
        let comps = comps
            .into_iter()
            .map(rouquier::Partition::new)
            .collect::<rouquier::Result<Vec<_>>>()
            .map_err(to_py)?;
        rouquier::Multipartition::new(comps).map(Multipartition).map_err(to_py)
    }

    /// Rebuilds a multipartition from a multicore and a quotient given as
    /// text, for example `"-|1|1;-|-|-"`.
    #[staticmethod]
    fn from_quotient(mc: &Multicharge, multicore: &Multipartition, quotient: &str) -> PyResult<Self> {
        let (core, q0) = decompose(&multicore.0, &mc.0).map_err(to_py)?;
        if quotient_size(&q0) != 0 {
            return Err(PyValueError::new_err(format!("{} is not a multicore", multicore.0)));
        }
        let q = rouquier::cli::parse_quotient(quotient).map_err(to_py)?;
        compose(&core, &q).map(Multipartition).map_err(to_py)
    }

    /// The smallest multicore whose runners differ by at least `gap`.
    #[staticmethod]
    fn rouquier_multicore(mc: &Multicharge, gap: i64) -> PyResult<Self> {
        let core = rouquier_multicore(&mc.0, gap);
        let empty = vec![vec![rouquier::Partition::empty(); mc.0.e()]; mc.0.rank()];
        compose(&core, &empty).map(Multipartition).map_err(to_py)
    }

    #[getter]
    fn components(&self) -> Vec<Partition> {
        self.0.components().iter().cloned().map(Partition).collect()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn is_e_regular(&self, e: usize) -> bool {
        self.0.is_e_regular(e)
    }

    /// `(multicore, quotient text, hook)`.
    fn core_and_quotient(&self, mc: &Multicharge) -> PyResult<(Multipartition, String, usize)> {
        let (core, q) = decompose(&self.0, &mc.0).map_err(to_py)?;
        let empty = vec![vec![rouquier::Partition::empty(); mc.0.e()]; mc.0.rank()];
        let mcore = compose(&core, &empty).map_err(to_py)?;
        Ok((Multipartition(mcore), rouquier::cli::format_quotient(&q), quotient_size(&q)))
    }

    fn is_rouquier(&self, mc: &Multicharge) -> PyResult<bool> {
        mp::is_rouquier(&self.0, &mc.0).map_err(to_py)
    }

    fn is_rock(&self, mc: &Multicharge) -> PyResult<bool> {
        Ok(mp::rock_data(&self.0, &mc.0).map_err(to_py)?.1)
    }

    fn scopes_move(&self, mc: &Multicharge, i: usize) -> PyResult<Self> {
        mp::scopes_move(&self.0, &mc.0, i).map(Multipartition).map_err(to_py)
    }

    fn same_block(&self, other: &Multipartition, mc: &Multicharge) -> PyResult<bool> {
        mp::same_block(&self.0, &other.0, &mc.0).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.rank()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Multipartition('{}')", self.0)
    }
}

#[pyclass(name = "Multicharge", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Multicharge(rouquier::Multicharge);

#[pymethods]
impl Multicharge {
    #[new]
    fn new(e: usize, charges: Vec<usize>) -> PyResult<Self> {
        rouquier::Multicharge::new(e, charges).map(Multicharge).map_err(to_py)
    }

    #[getter]
    fn e(&self) -> usize {
        self.0.e()
    }

    #[getter]
    fn charges(&self) -> Vec<usize> {
        self.0.charges().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Multicharge({}, {:?})", self.0.e(), self.0.charges())
    }
}

/// Canonical basis of the Fock space, with cached elements.
#[pyclass(name = "CanonicalBasis")]
struct CanonicalBasis(CoreBasis);

#[pymethods]
impl CanonicalBasis {
    #[new]
    fn new(mc: &Multicharge) -> Self {
        CanonicalBasis(CoreBasis::new(&mc.0))
    }

    /// `d_{λμ}(v)` as text.
    fn d(&mut self, lam: &Multipartition, mu: &Multipartition) -> PyResult<String> {
        self.0.d(&lam.0, &mu.0).map(|p| p.to_string()).map_err(to_py)
    }

    /// `G(μ)` as `(λ, coefficient)` pairs, largest `λ` first.
    fn element(&mut self, mu: &Multipartition) -> PyResult<Vec<(Multipartition, String)>> {
        let g = self.0.g(&mu.0).map_err(to_py)?;
        Ok(g.sorted_terms().into_iter().map(|(l, c)| (Multipartition(l.clone()), c.to_string())).collect())
    }
}

#[pyfunction]
#[pyo3(signature = (outer, *factors))]
fn lr_coeff(outer: &Partition, factors: Vec<Partition>) -> PyResult<u64> {
    let fs: Vec<rouquier::Partition> = factors.into_iter().map(|p| p.0).collect();
    lr::lr_coeff_multi(&outer.0, &fs).map_err(to_py)
}

/// `g_{λμ}(v)` as text, for example `"2v^2"`.
#[pyfunction]
fn g(lam: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> PyResult<String> {
    let pair = RouquierPair::new(&lam.0, &mu.0, &mc.0).map_err(to_py)?;
    Ok(formula::g_poly(&pair).to_string())
}

/// `g_{λμ}(v)` as a map from exponent to coefficient.
#[pyfunction]
fn g_coefficients(lam: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> PyResult<Vec<(i32, i64)>> {
    let pair = RouquierPair::new(&lam.0, &mu.0, &mc.0).map_err(to_py)?;
    Ok(formula::g_poly(&pair).terms().collect())
}

#[pyfunction]
fn rock_g(lam: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> PyResult<u64> {
    formula::rock_g(&lam.0, &mu.0, &mc.0).map_err(to_py)
}

#[pyfunction]
fn schur_conj(lam: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> PyResult<u64> {
    formula::conjectural_schur_multiplicity(&lam.0, &mu.0, &mc.0).map_err(to_py)
}

/// `Q(μ)` as `(λ, coefficient)` pairs.
#[pyfunction]
fn q_vector(mu: &Multipartition, mc: &Multicharge) -> PyResult<Vec<(Multipartition, String)>> {
    let q = formula::q_vector(&mu.0, &mc.0).map_err(to_py)?;
    Ok(q.sorted_terms().into_iter().map(|(l, c)| (Multipartition(l.clone()), c.to_string())).collect())
}

/// Compares the formula with the canonical basis over a block. Returns
/// `(pairs checked, mismatches)` with each mismatch as
/// `(λ, μ, formula, oracle)`.
#[pyfunction]
fn verify_block(
    py: Python<'_>,
    rep: &Multipartition,
    mc: &Multicharge,
    max_hook: usize,
) -> PyResult<(usize, Vec<(String, String, String, String)>)> {
    let (rep, mc) = (rep.0.clone(), mc.0.clone());
    let report = py.detach(move || verify::verify_block(&rep, &mc, max_hook)).map_err(to_py)?;
    let mism = report
        .mismatches
        .into_iter()
        .map(|m| (m.lambda, m.mu, m.formula.to_string(), m.oracle.to_string()))
        .collect();
    Ok((report.pairs, mism))
}

#[pymodule]
fn rouquier_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<Multipartition>()?;
    m.add_class::<Multicharge>()?;
    m.add_class::<CanonicalBasis>()?;
    m.add_function(wrap_pyfunction!(lr_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(g, m)?)?;
    m.add_function(wrap_pyfunction!(g_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(rock_g, m)?)?;
    m.add_function(wrap_pyfunction!(schur_conj, m)?)?;
    m.add_function(wrap_pyfunction!(q_vector, m)?)?;
    m.add_function(wrap_pyfunction!(verify_block, m)?)?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    Ok(())
}
