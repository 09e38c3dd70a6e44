//! Python bindings for `gcm-core`.

use gcm_core::complex::{is_clique_complex, is_matroid, is_shellable, is_shifted, is_tree_complex};
use gcm_core::deform::deform as deform_with;
use gcm_core::ideal::{stanley_reisner, v_complex};
use gcm_core::json::{report_json, scarf_json};
use gcm_core::oracle::{brute_irreducible_decomposition, has_embedded_primes, intersect_components};
use gcm_core::{DeformMethod, DeformationReport, Error, Monomial, SearchLimits, SimplicialComplex, VertexSet};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(gcm, GcmError, PyException, "A domain error raised by the core library.");

fn to_py(e: Error) -> PyErr {
    GcmError::new_err((e.code(), e.to_string()))
}

fn limits(max_facets: Option<usize>, max_generators: Option<usize>) -> SearchLimits {
    let d = SearchLimits::default();
    SearchLimits {
        max_facets: max_facets.unwrap_or(d.max_facets),
        max_generators: max_generators.unwrap_or(d.max_generators),
    }
}

fn lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

/// A simplicial complex on the vertices `1..=n`, given by its facets.
#[pyclass(name = "SimplicialComplex", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyComplex(SimplicialComplex);

#[pymethods]
impl PyComplex {
    #[new]
    fn new(n: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        SimplicialComplex::from_facets(n, &facets).map(PyComplex).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.0.facet_lists()
    }

    #[getter]
    fn dimension(&self) -> isize {
        self.0.dimension()
    }

    fn f_vector(&self) -> Vec<u64> {
        self.0.f_vector()
    }

    fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        lists(&self.0.minimal_nonfaces())
    }

    fn is_pure(&self) -> bool {
        self.0.is_pure()
    }

    fn is_matroid(&self) -> bool {
        is_matroid(&self.0)
    }

    fn is_shifted(&self) -> bool {
        is_shifted(&self.0)
    }

    fn is_clique_complex(&self) -> bool {
        is_clique_complex(&self.0)
    }

    /// A shelling order, or `None` when the complex is not shellable.
    #[pyo3(signature = (max_facets=None))]
    fn shelling(&self, max_facets: Option<usize>) -> PyResult<Option<Vec<Vec<usize>>>> {
        let order = is_shellable(&self.0, &limits(max_facets, None)).map_err(to_py)?;
        Ok(order.map(|o| lists(&o)))
    }

    #[pyo3(signature = (max_facets=None))]
    fn is_tree_complex(&self, max_facets: Option<usize>) -> PyResult<bool> {
        Ok(is_tree_complex(&self.0, &limits(max_facets, None)).map_err(to_py)?.is_some())
    }

    fn stanley_reisner(&self) -> PyIdeal {
        PyIdeal(stanley_reisner(&self.0))
    }

    /// Generic deformation of the Stanley-Reisner ideal; `method` is one of
    /// `"matroid"`, `"shifted"`, `"tree"` or `None` for automatic choice.
    #[pyo3(signature = (method=None, max_facets=None, max_generators=None))]
    fn deform(
        &self,
        method: Option<&str>,
        max_facets: Option<usize>,
        max_generators: Option<usize>,
    ) -> PyResult<PyReport> {
        let method = match method {
            None | Some("auto") => None,
            Some(name) => Some(name.parse::<DeformMethod>().map_err(|e| PyValueError::new_err(e.to_string()))?),
        };
        deform_with(&self.0, method, &limits(max_facets, max_generators)).map(PyReport).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex(n={}, facets={:?})", self.0.n(), self.0.facet_lists())
    }
}

/// A monomial ideal in `n` variables, given by exponent vectors.
#[pyclass(name = "MonomialIdeal", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIdeal(gcm_core::MonomialIdeal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(n: usize, generators: Vec<Vec<u32>>) -> PyResult<Self> {
        gcm_core::MonomialIdeal::from_exponents(n, &generators).map(PyIdeal).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<u32>> {
        self.0.generators().iter().map(|g| g.exponents().to_vec()).collect()
    }

    fn contains(&self, exponents: Vec<u32>) -> PyResult<bool> {
        if exponents.len() != self.0.n() {
            return Err(to_py(Error::DimensionMismatch { left: exponents.len(), right: self.0.n() }));
        }
        Ok(self.0.contains(&Monomial::new(exponents)))
    }

    fn is_generic(&self) -> bool {
        self.0.is_generic()
    }

    fn radical(&self) -> PyIdeal {
        PyIdeal(self.0.radical())
    }

    fn is_deformation_of(&self, base: &PyIdeal) -> PyResult<bool> {
        self.0.is_deformation_of(&base.0).map_err(to_py)
    }

    /// The Scarf complex as JSON text; `extended` adjoins the powers `x_i^D`.
    #[pyo3(signature = (extended=false, max_generators=None))]
    fn scarf_json(&self, extended: bool, max_generators: Option<usize>) -> PyResult<String> {
        let l = limits(None, max_generators);
        let s =
            if extended { gcm_core::extended_scarf_complex(&self.0, &l) } else { gcm_core::scarf_complex(&self.0, &l) }
                .map_err(to_py)?;
        Ok(scarf_json(&s).to_string())
    }

    /// Faces of the Scarf complex as 1-based generator indices.
    #[pyo3(signature = (extended=false, max_generators=None))]
    fn scarf_faces(&self, extended: bool, max_generators: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
        let l = limits(None, max_generators);
        let s =
            if extended { gcm_core::extended_scarf_complex(&self.0, &l) } else { gcm_core::scarf_complex(&self.0, &l) }
                .map_err(to_py)?;
        Ok(s.faces().iter().map(|f| f.iter().map(|l| l + 1).collect()).collect())
    }

    /// Irreducible components as exponent vectors (0 marks an absent variable).
    /// `oracle` selects the splitting algorithm, which also accepts
    /// non-generic ideals.
    #[pyo3(signature = (oracle=false, max_generators=None))]
    fn irreducible_decomposition(&self, oracle: bool, max_generators: Option<usize>) -> PyResult<Vec<Vec<u32>>> {
        let components = if oracle {
            brute_irreducible_decomposition(&self.0).map(|c| c.components)
        } else {
            gcm_core::irreducible_decomposition(&self.0, &limits(None, max_generators))
        }
        .map_err(to_py)?;
        Ok(components.iter().map(|c| c.exponents().to_vec()).collect())
    }

    /// `(is_cm, dim_scarf, dim_v)` for a generic ideal.
    #[pyo3(signature = (max_generators=None))]
    fn cm_test(&self, max_generators: Option<usize>) -> PyResult<(bool, isize, isize)> {
        let v = gcm_core::cm_test(&self.0, &limits(None, max_generators)).map_err(to_py)?;
        Ok((v.is_cm, v.dim_scarf, v.dim_v))
    }

    fn has_embedded_primes(&self) -> PyResult<bool> {
        has_embedded_primes(&self.0).map_err(to_py)
    }

    fn v_complex(&self) -> PyResult<PyComplex> {
        v_complex(&self.0).map(PyComplex).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({:?})", self.0)
    }
}

/// The outcome of a deformation construction with its verification checks.
#[pyclass(name = "DeformationReport", frozen)]
struct PyReport(DeformationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn method(&self) -> &'static str {
        self.0.method.name()
    }

    #[getter]
    fn ideal(&self) -> PyIdeal {
        PyIdeal(self.0.ideal.clone())
    }

    #[getter]
    fn relabeling(&self) -> Vec<usize> {
        self.0.relabeling.clone()
    }

    /// `(index, exponent, nonfaces)` for each block of the partition.
    #[getter]
    fn blocks(&self) -> Vec<(usize, u32, Vec<Vec<usize>>)> {
        self.0.blocks.iter().map(|b| (b.index, b.exponent, lists(&b.nonfaces))).collect()
    }

    fn all_passed(&self) -> bool {
        self.0.all_passed()
    }

    fn to_json(&self) -> String {
        report_json(&self.0).to_string()
    }

    fn __repr__(&self) -> String {
        format!("DeformationReport(method={:?}, all_passed={})", self.0.method.name(), self.0.all_passed())
    }
}

/// Intersection of irreducible components given as exponent vectors.
#[pyfunction]
fn intersect(n: usize, components: Vec<Vec<u32>>) -> PyResult<PyIdeal> {
    if let Some(c) = components.iter().find(|c| c.len() != n) {
        return Err(to_py(Error::DimensionMismatch { left: c.len(), right: n }));
    }
    let cs: Vec<_> = components.into_iter().map(gcm_core::IrreducibleComponent::new).collect();
    intersect_components(&cs, n).map(PyIdeal).map_err(to_py)
}

#[pymodule]
pub fn gcm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(intersect, m)?)?;
    m.add("GcmError", m.py().get_type::<GcmError>())?;
    Ok(())
}
