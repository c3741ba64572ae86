//! Python bindings for the finq exact-arithmetic engine. Exact values
//! cross the boundary as strings (rationals like "16/21", cyclotomics in
//! root-of-unity notation) so no precision is lost; structure crosses as
//! lists and dicts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use finq::classalg::{character_table, ConjugacyClasses};
use finq::mix::MixTable;
use finq::perm;
use finq::rep;
use finq::Error;

fn to_py_err(e: Error) -> PyErr {
    match &e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A permutation in cycle notation on points 1..=degree.
#[pyclass(name = "Permutation", frozen)]
struct PyPermutation {
    inner: perm::Permutation,
}

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(cycles: &str, degree: usize) -> PyResult<Self> {
        let inner = perm::Permutation::parse(cycles, degree).map_err(to_py_err)?;
        Ok(PyPermutation { inner })
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    /// Images of 1..=degree under the permutation, 1-based.
    fn images(&self) -> Vec<usize> {
        self.inner.images_one_based()
    }

    fn inverse(&self) -> Self {
        PyPermutation { inner: self.inner.inverse() }
    }

    /// Composition acting left to right: (p * q)(i) = q(p(i)).
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        let inner = self.inner.compose(&other.inner).map_err(to_py_err)?;
        Ok(PyPermutation { inner })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.cycle_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}', {})", self.inner.cycle_string(), self.inner.degree())
    }
}

/// A finite permutation group generated from cycle strings.
#[pyclass(name = "FiniteGroup", frozen)]
struct PyFiniteGroup {
    inner: perm::FiniteGroup,
}

impl PyFiniteGroup {
    fn classes(&self) -> ConjugacyClasses {
        ConjugacyClasses::new(&self.inner)
    }
}

#[pymethods]
impl PyFiniteGroup {
    #[new]
    #[pyo3(signature = (generators, degree=None, cap=None))]
    fn new(generators: Vec<String>, degree: Option<usize>, cap: Option<usize>) -> PyResult<Self> {
        if generators.is_empty() {
            return Err(PyValueError::new_err("at least one generator required"));
        }
        let degree = match degree {
            Some(d) if d >= 1 => d,
            Some(_) => return Err(PyValueError::new_err("degree must be at least 1")),
            None => generators
                .iter()
                .flat_map(|t| t.split(|c: char| !c.is_ascii_digit()))
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().unwrap_or(0))
                .max()
                .unwrap_or(1)
                .max(1),
        };
        let gens = generators
            .iter()
            .map(|t| perm::Permutation::parse(t, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py_err)?;
        let inner = perm::FiniteGroup::generate(&gens, cap.unwrap_or(perm::DEFAULT_CAP))
            .map_err(to_py_err)?;
        Ok(PyFiniteGroup { inner })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    /// All elements in generation order, as cycle strings.
    fn elements(&self) -> Vec<String> {
        self.inner.elements().iter().map(|p| p.cycle_string()).collect()
    }

    fn class_sizes(&self) -> Vec<usize> {
        let c = self.classes();
        (0..c.count()).map(|i| c.size(i)).collect()
    }

    fn class_representatives(&self) -> Vec<String> {
        let c = self.classes();
        (0..c.count())
            .map(|i| self.inner.element(c.representative(i)).cycle_string())
            .collect()
    }

    /// Character table as a dict: dimensions, exact rows (value strings),
    /// class sizes and representatives, and the working prime.
    fn character_table<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let table = character_table(&self.inner).map_err(to_py_err)?;
        let rows: Vec<Vec<String>> = table
            .rows()
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect();
        let out = PyDict::new(py);
        out.set_item("dimensions", table.dimensions().to_vec())?;
        out.set_item("rows", rows)?;
        out.set_item("class_sizes", self.class_sizes())?;
        out.set_item("class_representatives", self.class_representatives())?;
        out.set_item("prime", table.prime())?;
        out.set_item("exponent", table.exponent())?;
        Ok(out)
    }

    /// Decompose the natural or regular permutation action; returns a dict
    /// with multiplicities, permutation character, and block shapes.
    #[pyo3(signature = (action="natural"))]
    fn decompose<'py>(&self, py: Python<'py>, action: &str) -> PyResult<Bound<'py, PyDict>> {
        let rep = match action {
            "natural" => rep::PermRepresentation::natural(&self.inner),
            "regular" => rep::PermRepresentation::regular(&self.inner),
            other => {
                return Err(PyValueError::new_err(format!(
                    "action must be 'natural' or 'regular', got {other:?}"
                )))
            }
        };
        let dec = rep::decompose(&rep).map_err(to_py_err)?;
        let blocks = PyList::empty(py);
        for b in &dec.blocks {
            let d = PyDict::new(py);
            d.set_item("character", b.character)?;
            d.set_item("dimension", b.dimension)?;
            d.set_item("multiplicity", b.multiplicity)?;
            d.set_item("span", b.span())?;
            blocks.append(d)?;
        }
        let out = PyDict::new(py);
        out.set_item("action", action)?;
        out.set_item("blocks", blocks)?;
        out.set_item("multiplicities", dec.multiplicities.clone())?;
        out.set_item("permutation_character", dec.permutation_character.clone())?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!(
            "FiniteGroup(order={}, degree={})",
            self.inner.order(),
            self.inner.degree()
        )
    }
}

/// Born probability in the full space, as an exact rational string.
#[pyfunction]
fn born_full(m: Vec<u64>, n: Vec<u64>) -> PyResult<String> {
    Ok(finq::born::born_full(&m, &n).map_err(to_py_err)?.to_string())
}

/// Born probability in the complement of the uniform direction.
#[pyfunction]
fn born_complement(m: Vec<u64>, n: Vec<u64>) -> PyResult<String> {
    Ok(finq::born::born_complement(&m, &n).map_err(to_py_err)?.to_string())
}

/// Projected inner product Q - L(m)L(n)/N, exact.
#[pyfunction]
fn complement_inner(m: Vec<u64>, n: Vec<u64>) -> PyResult<String> {
    Ok(finq::born::complement_inner(&m, &n).map_err(to_py_err)?.to_string())
}

/// All destructive interference pairs with components in 0..=bound.
#[pyfunction]
fn interference_solutions(degree: usize, bound: u64) -> Vec<(Vec<u64>, Vec<u64>)> {
    finq::born::interference_solutions(degree, bound)
}

/// Squared modulus of the three-cycle eigenline inner product, exact.
#[pyfunction]
fn c3_born_subspace(m: Vec<u64>, n: Vec<u64>) -> PyResult<String> {
    Ok(finq::born::c3_born_subspace(&m, &n).map_err(to_py_err)?.to_string())
}

/// Tribimaximal probability table as exact rational strings.
#[pyfunction]
fn tribimaximal_moduli_squared() -> Vec<Vec<String>> {
    let table = MixTable::tribimaximal();
    let m = table.moduli_squared_exact().expect("tribimaximal is exact");
    m.iter()
        .map(|row| row.iter().map(|r| r.to_string()).collect())
        .collect()
}

/// (bimaximal, trimaximal, upper_right_zero) flags of the tribimaximal table.
#[pyfunction]
fn tribimaximal_pattern() -> PyResult<(bool, bool, bool)> {
    let flags = MixTable::tribimaximal().pattern_check(0.0).map_err(to_py_err)?;
    Ok((flags.bimaximal, flags.trimaximal, flags.upper_right_zero))
}

#[pymodule]
fn finq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyFiniteGroup>()?;
    m.add_function(wrap_pyfunction!(born_full, m)?)?;
    m.add_function(wrap_pyfunction!(born_complement, m)?)?;
    m.add_function(wrap_pyfunction!(complement_inner, m)?)?;
    m.add_function(wrap_pyfunction!(interference_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(c3_born_subspace, m)?)?;
    m.add_function(wrap_pyfunction!(tribimaximal_moduli_squared, m)?)?;
    m.add_function(wrap_pyfunction!(tribimaximal_pattern, m)?)?;
    Ok(())
}
