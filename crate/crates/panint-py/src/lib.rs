//! Python bindings: capacities, functions, the three integrals, norms and
//! the verification suites, exposed as the `panint` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use panint::generate::Family;
use panint::json as wire;
use panint::lp_space;
use panint::pan::IntegralWitness;
use panint::verify::{self, SuiteConfig};
use panint::{Capacity, FiniteSpace, Mode, RealFunction, Value};

fn to_py_err(err: panint::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_value(v: &Bound<'_, PyAny>, mode: Mode) -> PyResult<Value> {
    if let Ok(s) = v.extract::<String>() {
        return Value::parse_exact(&s)
            .map(|x| x.into_mode(mode))
            .map_err(to_py_err);
    }
    if let Ok(x) = v.extract::<f64>() {
        if !x.is_finite() {
            return Err(PyValueError::new_err("values must be finite"));
        }
        return match mode {
            Mode::Float => Ok(Value::Float(x)),
            // go through the decimal literal so 6.5 means 13/2
            Mode::Exact => Value::parse_exact(&format!("{x}")).map_err(to_py_err),
        };
    }
    Err(PyValueError::new_err(
        "expected a number or a decimal/rational string",
    ))
}

fn mode_of(exact: bool) -> Mode {
    if exact {
        Mode::Exact
    } else {
        Mode::Float
    }
}

/// (holds, witness pair of point-index sets, slack) of one predicate.
type PredicateTuple = (bool, Option<(Vec<usize>, Vec<usize>)>, f64);

/// A monotone measure on the power set of a finite space.
#[pyclass(name = "Capacity", skip_from_py_object)]
#[derive(Clone)]
struct PyCapacity(Capacity);

#[pymethods]
impl PyCapacity {
    /// Build from point labels and a {tuple-of-indices: value} table.
    #[new]
    #[pyo3(signature = (points, mu, exact = false))]
    fn new(
        points: Vec<String>,
        mu: Vec<(Vec<usize>, Bound<'_, PyAny>)>,
        exact: bool,
    ) -> PyResult<Self> {
        let mode = mode_of(exact);
        let space = FiniteSpace::new(points).map_err(to_py_err)?;
        let table = mu
            .iter()
            .map(|(set, value)| {
                Ok((
                    panint::SubsetIndex::from_points(set, space.n()).map_err(to_py_err)?,
                    parse_value(value, mode)?,
                ))
            })
            .collect::<PyResult<Vec<_>>>()?;
        panint::validate_capacity(&space, &table)
            .map(PyCapacity)
            .map_err(to_py_err)
    }

    #[staticmethod]
    #[pyo3(signature = (text, exact = false))]
    fn from_json(text: &str, exact: bool) -> PyResult<Self> {
        let json: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        wire::capacity_from_json(&json, mode_of(exact))
            .map(PyCapacity)
            .map_err(to_py_err)
    }

    /// Deterministic random capacity from a seeded family.
    #[staticmethod]
    #[pyo3(signature = (n, seed, family, exact = false))]
    fn generate(n: usize, seed: u64, family: &str, exact: bool) -> PyResult<Self> {
        let family = Family::parse(family).map_err(to_py_err)?;
        let space = FiniteSpace::of_size(n).map_err(to_py_err)?;
        Ok(PyCapacity(panint::gen_capacity(
            &space,
            seed,
            family,
            mode_of(exact),
        )))
    }

    fn to_json(&self) -> String {
        wire::capacity_to_json(&self.0).to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn points(&self) -> Vec<String> {
        self.0.space().labels().to_vec()
    }

    /// mu(A) for a point-index set, as float.
    fn value(&self, set: Vec<usize>) -> PyResult<f64> {
        let s = panint::SubsetIndex::from_points(&set, self.0.n()).map_err(to_py_err)?;
        Ok(self.0.value(s).to_f64())
    }

    fn conjugate(&self) -> PyCapacity {
        PyCapacity(self.0.conjugate())
    }

    /// (holds, witness_pair_or_None, slack) for each predicate.
    fn is_subadditive(&self) -> PredicateTuple {
        report_tuple(self.0.is_subadditive())
    }

    fn is_submodular(&self) -> PredicateTuple {
        report_tuple(self.0.is_submodular())
    }

    fn is_supermodular(&self) -> PredicateTuple {
        report_tuple(self.0.is_supermodular())
    }

    fn is_null_additive(&self) -> PredicateTuple {
        report_tuple(self.0.is_null_additive())
    }

    fn is_additive(&self) -> bool {
        self.0.is_additive()
    }

    fn minimal_atoms(&self) -> Vec<Vec<usize>> {
        self.0
            .minimal_atoms()
            .into_iter()
            .map(|a| a.to_points())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Capacity(n={}, total={})",
            self.0.n(),
            self.0.total().to_f64()
        )
    }
}

fn report_tuple(r: panint::PropertyReport) -> PredicateTuple {
    (
        r.holds,
        r.witness.map(|(a, b)| (a.to_points(), b.to_points())),
        r.slack.to_f64(),
    )
}

/// A real-valued function on the points of a finite space.
#[pyclass(name = "RealFunction", skip_from_py_object)]
#[derive(Clone)]
struct PyRealFunction(RealFunction);

#[pymethods]
impl PyRealFunction {
    /// Values per point; numbers, or decimal/rational strings in exact mode.
    #[new]
    #[pyo3(signature = (values, exact = false))]
    fn new(values: Vec<Bound<'_, PyAny>>, exact: bool) -> PyResult<Self> {
        let mode = mode_of(exact);
        let space = FiniteSpace::of_size(values.len()).map_err(to_py_err)?;
        let parsed = values
            .iter()
            .map(|v| parse_value(v, mode))
            .collect::<PyResult<Vec<_>>>()?;
        RealFunction::new(space, parsed)
            .map(PyRealFunction)
            .map_err(to_py_err)
    }

    #[getter]
    fn values(&self) -> Vec<f64> {
        self.0.values().iter().map(Value::to_f64).collect()
    }

    fn positive_set(&self) -> Vec<usize> {
        self.0.positive_set().to_points()
    }

    fn __repr__(&self) -> String {
        format!("RealFunction({:?})", self.values())
    }
}

/// An integral value with engine provenance and optional witness (as JSON).
#[pyclass(name = "IntegralResult")]
struct PyIntegralResult {
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    exact: String,
    #[pyo3(get)]
    engine: String,
    #[pyo3(get)]
    witness: Option<String>,
}

impl PyIntegralResult {
    fn from_result(r: panint::pan::IntegralResult) -> Self {
        PyIntegralResult {
            value: r.value.to_f64(),
            exact: r.value.to_string(),
            engine: r.engine.name().to_string(),
            witness: r
                .witness
                .as_ref()
                .map(|w: &IntegralWitness| wire::witness_to_json(w).to_string()),
        }
    }
}

#[pymethods]
impl PyIntegralResult {
    fn __repr__(&self) -> String {
        format!("IntegralResult(value={}, engine={})", self.value, self.engine)
    }
}

#[pyfunction]
fn pan(f: &PyRealFunction, mu: &PyCapacity) -> PyResult<PyIntegralResult> {
    panint::pan::pan_pos(&f.0, &mu.0)
        .map(PyIntegralResult::from_result)
        .map_err(to_py_err)
}

#[pyfunction]
fn pan_signed(f: &PyRealFunction, mu: &PyCapacity) -> PyResult<PyIntegralResult> {
    panint::pan::pan_signed(&f.0, &mu.0)
        .map(PyIntegralResult::from_result)
        .map_err(to_py_err)
}

#[pyfunction]
fn pan_on_set(f: &PyRealFunction, mu: &PyCapacity, set: Vec<usize>) -> PyResult<PyIntegralResult> {
    let s = panint::SubsetIndex::from_points(&set, mu.0.n()).map_err(to_py_err)?;
    panint::pan::pan_on_set(&f.0, &mu.0, s)
        .map(PyIntegralResult::from_result)
        .map_err(to_py_err)
}

#[pyfunction]
fn choquet(f: &PyRealFunction, mu: &PyCapacity) -> PyResult<PyIntegralResult> {
    panint::choquet::choquet_pos(&f.0, &mu.0)
        .map(PyIntegralResult::from_result)
        .map_err(to_py_err)
}

#[pyfunction]
fn choquet_symmetric(f: &PyRealFunction, mu: &PyCapacity) -> PyResult<f64> {
    panint::choquet::choquet_symmetric(&f.0, &mu.0)
        .map(|v| v.to_f64())
        .map_err(to_py_err)
}

#[pyfunction]
fn choquet_asymmetric(f: &PyRealFunction, mu: &PyCapacity) -> PyResult<f64> {
    panint::choquet::choquet_asymmetric(&f.0, &mu.0)
        .map(|v| v.to_f64())
        .map_err(to_py_err)
}

#[pyfunction]
fn concave(f: &PyRealFunction, mu: &PyCapacity) -> PyResult<PyIntegralResult> {
    panint::concave::concave_integral(&f.0, &mu.0)
        .map(PyIntegralResult::from_result)
        .map_err(to_py_err)
}

#[pyfunction]
fn norm(f: &PyRealFunction, mu: &PyCapacity, p: f64) -> PyResult<f64> {
    lp_space::p_norm(&f.0, &mu.0, p)
        .map(|v| v.to_f64())
        .map_err(to_py_err)
}

#[pyfunction]
fn distance(f: &PyRealFunction, g: &PyRealFunction, mu: &PyCapacity, p: f64) -> PyResult<f64> {
    lp_space::distance(&f.0, &g.0, &mu.0, p)
        .map(|v| v.to_f64())
        .map_err(to_py_err)
}

/// Run one verification suite; returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite, trials = 100, seed = 1, n = 6, family = "clipped-additive", exact = false))]
fn run_suite(
    suite: &str,
    trials: u32,
    seed: u64,
    n: usize,
    family: &str,
    exact: bool,
) -> PyResult<String> {
    let family = Family::parse(family).map_err(to_py_err)?;
    let cfg = SuiteConfig::new(trials, seed, n, family, mode_of(exact));
    let report = match suite {
        "additivity" => verify::check_additivity(&cfg),
        "set-additivity" => verify::check_set_additivity(&cfg),
        "disjoint-superadditivity" => verify::check_disjoint_superadditivity(&cfg),
        "disjoint-additivity" => verify::check_disjoint_additivity(&cfg),
        "linearity" => verify::check_linearity(&cfg),
        "singleton" => verify::check_singleton_formula(&cfg),
        "ae" => verify::check_ae_equality(&cfg),
        "levi" => verify::check_levi(&cfg),
        "fatou" => verify::check_fatou(&cfg),
        "coincide" => verify::check_pan_equals_concave(&cfg),
        "pan-oracle" => verify::check_pan_oracle(&cfg),
        "lp-duality" => verify::check_lp_duality(&cfg),
        other => {
            return Err(PyValueError::new_err(format!("unknown suite `{other}`")));
        }
    };
    Ok(wire::report_to_json(&report).to_string())
}

/// Golden-instance report for the four-point example, as a JSON string.
#[pyfunction]
#[pyo3(signature = (exact = true))]
fn reproduce_example(exact: bool) -> String {
    wire::golden_to_json(&verify::reproduce_example_52(mode_of(exact))).to_string()
}

#[pyfunction]
#[pyo3(signature = (mu, budget = 10_000, seed = 1, signed = false))]
fn find_additivity_counterexample(
    mu: &PyCapacity,
    budget: u64,
    seed: u64,
    signed: bool,
) -> PyResult<Option<String>> {
    verify::find_additivity_counterexample(&mu.0, budget, seed, signed)
        .map(|w| w.map(|w| wire::search_witness_to_json(&w).to_string()))
        .map_err(to_py_err)
}

#[pymodule]
#[pyo3(name = "panint")]
fn panint_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCapacity>()?;
    m.add_class::<PyRealFunction>()?;
    m.add_class::<PyIntegralResult>()?;
    m.add_function(wrap_pyfunction!(pan, m)?)?;
    m.add_function(wrap_pyfunction!(pan_signed, m)?)?;
    m.add_function(wrap_pyfunction!(pan_on_set, m)?)?;
    m.add_function(wrap_pyfunction!(choquet, m)?)?;
    m.add_function(wrap_pyfunction!(choquet_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(choquet_asymmetric, m)?)?;
    m.add_function(wrap_pyfunction!(concave, m)?)?;
    m.add_function(wrap_pyfunction!(norm, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_example, m)?)?;
    m.add_function(wrap_pyfunction!(find_additivity_counterexample, m)?)?;
    Ok(())
}
