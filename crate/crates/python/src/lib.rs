//! Python bindings for `symsemi`.
//!
//! Validation errors surface as `ValueError`, internal defects as `RuntimeError`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use symsemi::bounds::SymmetricFunctionData;
use symsemi::survey::SurveyRecord;
use symsemi::{Error, SemigroupClass, SummaryStats, SurveyConfig};

fn py_err(e: Error) -> PyErr {
    if e.is_defect() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn five(a_list: Vec<u64>) -> PyResult<[u64; 5]> {
    a_list.try_into().map_err(|v: Vec<u64>| {
        PyValueError::new_err(format!("expected 5 exponents, got {}", v.len()))
    })
}

/// Validated generator set.
#[pyclass(name = "GeneratorSet", frozen)]
struct PyGeneratorSet {
    inner: symsemi::GeneratorSet,
}

#[pymethods]
impl PyGeneratorSet {
    #[new]
    fn new(generators: Vec<u64>) -> PyResult<Self> {
        Ok(Self {
            inner: symsemi::GeneratorSet::new(&generators).map_err(py_err)?,
        })
    }

    #[getter]
    fn elements(&self) -> Vec<u64> {
        self.inner.elements().to_vec()
    }

    #[getter]
    fn sigma(&self) -> u64 {
        self.inner.sigma()
    }

    #[getter]
    fn pi(&self) -> u128 {
        self.inner.pi()
    }

    fn apery_set(&self) -> PyResult<Vec<u64>> {
        Ok(symsemi::apery_set(&self.inner)
            .map_err(py_err)?
            .entries()
            .to_vec())
    }

    fn frobenius(&self) -> PyResult<u64> {
        symsemi::frobenius(&self.inner).map_err(py_err)
    }

    fn genus(&self) -> PyResult<u64> {
        symsemi::genus(&self.inner).map_err(py_err)
    }

    fn contains(&self, n: i64) -> PyResult<bool> {
        symsemi::is_member(&self.inner, n).map_err(py_err)
    }

    fn is_symmetric(&self) -> PyResult<bool> {
        symsemi::is_symmetric(&self.inner).map_err(py_err)
    }

    fn is_minimal(&self) -> bool {
        symsemi::is_minimal_generating_set(&self.inner)
    }

    /// Numerator terms as `(exponent, coefficient)` pairs.
    fn numerator(&self) -> PyResult<Vec<(u64, i64)>> {
        Ok(symsemi::numerator(&self.inner)
            .map_err(py_err)?
            .terms()
            .collect())
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        class_dict(py, symsemi::classify(&self.inner).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("GeneratorSet({:?})", self.inner.elements())
    }
}

fn gens(generators: Vec<u64>) -> PyResult<symsemi::GeneratorSet> {
    symsemi::GeneratorSet::new(&generators).map_err(py_err)
}

fn class_dict(py: Python<'_>, class: SemigroupClass) -> PyResult<Bound<'_, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("class", class.tag())?;
    match class {
        SemigroupClass::SymmetricNotCi { a_list, c } => {
            d.set_item("c", c)?;
            d.set_item("a_list", a_list.to_vec())?;
        }
        SemigroupClass::SymmetricCi { degrees } => {
            d.set_item("relation_degrees", degrees.to_vec())?
        }
        SemigroupClass::NonSymmetric => {}
    }
    Ok(d)
}

#[pyfunction]
fn frobenius(generators: Vec<u64>) -> PyResult<u64> {
    symsemi::frobenius(&gens(generators)?).map_err(py_err)
}

#[pyfunction]
fn genus(generators: Vec<u64>) -> PyResult<u64> {
    symsemi::genus(&gens(generators)?).map_err(py_err)
}

#[pyfunction]
fn numerator(generators: Vec<u64>) -> PyResult<Vec<(u64, i64)>> {
    Ok(symsemi::numerator(&gens(generators)?)
        .map_err(py_err)?
        .terms()
        .collect())
}

#[pyfunction]
fn classify(py: Python<'_>, generators: Vec<u64>) -> PyResult<Bound<'_, PyDict>> {
    class_dict(py, symsemi::classify(&gens(generators)?).map_err(py_err)?)
}

#[pyfunction]
fn power_sums(a_list: Vec<u64>) -> PyResult<(i128, i128, i128)> {
    let [i1, i2, i3] = symsemi::power_sums(&five(a_list)?).map_err(py_err)?;
    Ok((i1, i2, i3))
}

#[pyfunction]
fn elementary_symmetric(a_list: Vec<u64>) -> PyResult<Vec<i128>> {
    Ok(symsemi::elementary_symmetric(&five(a_list)?)
        .map_err(py_err)?
        .to_vec())
}

#[pyfunction]
fn maclaurin_chain(a_list: Vec<u64>) -> PyResult<bool> {
    let data = SymmetricFunctionData::new(five(a_list)?).map_err(py_err)?;
    Ok(symsemi::maclaurin_chain(&data))
}

#[pyfunction]
fn verify_key_identity(a_list: Vec<u64>, c: u64, pi4: u128) -> PyResult<bool> {
    symsemi::verify_key_identity(&five(a_list)?, c, pi4).map_err(py_err)
}

#[pyfunction]
fn verify_intermediate_inequalities(a_list: Vec<u64>, c: u64, pi4: u128) -> PyResult<bool> {
    symsemi::verify_intermediate_inequalities(&five(a_list)?, c, pi4).map_err(py_err)
}

#[pyfunction]
fn exact_threshold_check(c: u64, pi4: u128) -> PyResult<bool> {
    symsemi::exact_threshold_check(c, pi4).map_err(py_err)
}

#[pyfunction]
fn bound_symmetric_not_ci(generators: Vec<u64>) -> PyResult<f64> {
    symsemi::bound_symmetric_not_ci(&gens(generators)?).map_err(py_err)
}

#[pyfunction]
fn bound_ci(generators: Vec<u64>) -> PyResult<f64> {
    symsemi::bound_ci(&gens(generators)?).map_err(py_err)
}

#[pyfunction]
fn bound_ns4(generators: Vec<u64>) -> PyResult<f64> {
    symsemi::bound_ns4(&gens(generators)?).map_err(py_err)
}

#[pyfunction]
fn bound_ns3(generators: Vec<u64>) -> PyResult<f64> {
    symsemi::bound_ns3(&gens(generators)?).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (generators, compute_exact = true))]
fn bound_report(
    py: Python<'_>,
    generators: Vec<u64>,
    compute_exact: bool,
) -> PyResult<Bound<'_, PyDict>> {
    let r = symsemi::bound_report(&generators, compute_exact).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("generators", r.generators)?;
    d.set_item("frobenius", r.exact_f)?;
    d.set_item("class", r.class.map(|c| c.tag()))?;
    d.set_item("bound_not_ci", r.bound_not_ci)?;
    d.set_item("bound_ci", r.bound_ci)?;
    d.set_item("bound_ns", r.bound_ns)?;
    d.set_item("sigma", r.sigma)?;
    d.set_item("pi", r.pi)?;
    d.set_item("tightness", r.tightness)?;
    Ok(d)
}

fn record_dict<'py>(py: Python<'py>, r: &SurveyRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = match r.class {
        Some(class) => class_dict(py, class)?,
        None => {
            let d = PyDict::new(py);
            d.set_item("class", "non_minimal")?;
            d
        }
    };
    d.set_item("generators", r.generators.to_vec())?;
    d.set_item("frobenius", r.frobenius)?;
    d.set_item("genus", r.genus)?;
    d.set_item("bound_not_ci", r.bound_not_ci)?;
    d.set_item("bound_ci", r.bound_ci)?;
    d.set_item("bound_ns", r.bound_ns)?;
    d.set_item("tightness", r.tightness)?;
    d.set_item("identity_ok", r.identity_ok)?;
    d.set_item("maclaurin_ok", r.maclaurin_ok)?;
    d.set_item("threshold_ok", r.threshold_ok)?;
    Ok(d)
}

fn stats_dict<'py>(py: Python<'py>, s: &SummaryStats) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("total", s.total)?;
    d.set_item("gcd_not_one", s.gcd_not_one)?;
    d.set_item("non_minimal", s.non_minimal)?;
    d.set_item("non_symmetric", s.non_symmetric)?;
    d.set_item("symmetric_ci", s.symmetric_ci)?;
    d.set_item("symmetric_not_ci", s.symmetric_not_ci)?;
    d.set_item("tightness_min", s.tightness_min)?;
    d.set_item("tightness_mean", s.tightness_mean)?;
    d.set_item("tightness_max", s.tightness_max)?;
    d.set_item("worst", s.worst.map(|g| g.to_vec()))?;
    Ok(d)
}

/// Survey all quadruples in `[d_min, d_max]`; returns `(records, summary)`.
#[pyfunction]
#[pyo3(signature = (d_min, d_max, jobs = 0, emit_all = false))]
fn run_survey(
    py: Python<'_>,
    d_min: u64,
    d_max: u64,
    jobs: usize,
    emit_all: bool,
) -> PyResult<(Vec<Bound<'_, PyDict>>, Bound<'_, PyDict>)> {
    let cfg = SurveyConfig {
        jobs,
        emit_all,
        ..SurveyConfig::new(d_min, d_max)
    };
    let (records, stats) = py.detach(|| symsemi::run_survey(&cfg)).map_err(py_err)?;
    let dicts = records
        .iter()
        .map(|r| record_dict(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    Ok((dicts, stats_dict(py, &stats)?))
}

#[pymodule]
#[pyo3(name = "symsemi")]
fn symsemi_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGeneratorSet>()?;
    m.add_function(wrap_pyfunction!(frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(numerator, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(power_sums, m)?)?;
    m.add_function(wrap_pyfunction!(elementary_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(maclaurin_chain, m)?)?;
    m.add_function(wrap_pyfunction!(verify_key_identity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_intermediate_inequalities, m)?)?;
    m.add_function(wrap_pyfunction!(exact_threshold_check, m)?)?;
    m.add_function(wrap_pyfunction!(bound_symmetric_not_ci, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ci, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ns4, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ns3, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(run_survey, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::types::IntoPyDict;

    fn with_module<F: FnOnce(Python<'_>, &Bound<'_, PyDict>)>(f: F) {
        Python::initialize();
        Python::attach(|py| {
            let module = pyo3::wrap_pymodule!(symsemi_module)(py);
            let globals = [("symsemi", module)].into_py_dict(py).unwrap();
            f(py, &globals);
        });
    }

    fn eval<'py>(py: Python<'py>, globals: &Bound<'py, PyDict>, code: &str) -> Bound<'py, PyAny> {
        let code = std::ffi::CString::new(code).unwrap();
        py.eval(&code, Some(globals), None).unwrap()
    }

    #[test]
    fn exposes_core_operations() {
        with_module(|py, g| {
            let f: u64 = eval(py, g, "symsemi.GeneratorSet([5, 6, 7, 8]).frobenius()")
                .extract()
                .unwrap();
            assert_eq!(f, 9);
            let c: u64 = eval(py, g, "symsemi.classify([151, 154, 157, 158])['c']")
                .extract()
                .unwrap();
            assert_eq!(c, 4255);
            let ok: bool = eval(
                py,
                g,
                "symsemi.verify_key_identity([308, 625, 628, 3473, 3476], 4255, 576838724)",
            )
            .extract()
            .unwrap();
            assert!(ok);
            let n: usize = eval(py, g, "len(symsemi.numerator([5, 6, 7, 8]))")
                .extract()
                .unwrap();
            assert_eq!(n, 12);
        });
    }

    #[test]
    fn maps_errors_to_value_error() {
        with_module(|py, g| {
            let code = std::ffi::CString::new("symsemi.frobenius([6, 8, 10])").unwrap();
            let err = py.eval(&code, Some(g), None).unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
            assert!(err.to_string().contains("gcd is 2"));
            let code = std::ffi::CString::new("symsemi.power_sums([1, 2, 3])").unwrap();
            assert!(py
                .eval(&code, Some(g), None)
                .unwrap_err()
                .is_instance_of::<PyValueError>(py));
        });
    }
}
