use braidkit::burau::alexander;
use braidkit::dynnikov::{act_with_matrix, cycle, loopcoords};
use braidkit::spectra::{complexity, entropy, entropy_fixed_iterates, DEFAULT_MAXIT, DEFAULT_TOL};
use braidkit::trajectory::databraid_with;
use braidkit::{props, ClosureMethod, CycleMode, LoopNorm, TrajectorySet};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: braidkit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Braid", module = "pybraidkit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyBraid(braidkit::Braid);

#[pymethods]
impl PyBraid {
    #[new]
    #[pyo3(signature = (word, n=None))]
    fn new(word: Vec<i32>, n: Option<usize>) -> PyResult<Self> {
        braidkit::Braid::new(word, n).map(PyBraid).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (word, nann=None))]
    fn annular(word: Vec<i32>, nann: Option<usize>) -> PyResult<Self> {
        let a = braidkit::AnnularBraid::new(word, nann).map_err(err)?;
        Ok(PyBraid(a.to_braid()))
    }

    #[staticmethod]
    fn halftwist(n: usize) -> PyResult<Self> {
        braidkit::Braid::half_twist(n).map(PyBraid).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (n, length, seed=None))]
    fn random(n: usize, length: usize, seed: Option<u64>) -> PyResult<Self> {
        braidkit::Braid::random(n, length, seed).map(PyBraid).map_err(err)
    }

    #[getter]
    fn word(&self) -> Vec<i32> {
        self.0.word().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __mul__(&self, other: &PyBraid) -> PyResult<Self> {
        self.0.mul(&other.0).map(PyBraid).map_err(err)
    }

    fn __pow__(&self, k: i64, _modulo: Option<i64>) -> Self {
        PyBraid(self.0.pow(k))
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    fn inverse(&self) -> Self {
        PyBraid(self.0.inverse())
    }

    fn compact(&self) -> Self {
        PyBraid(self.0.compact())
    }

    fn equals(&self, other: &PyBraid) -> PyResult<bool> {
        self.0.equals(&other.0).map_err(err)
    }

    fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    fn perm(&self) -> Vec<usize> {
        self.0.perm()
    }

    fn writhe(&self) -> i64 {
        self.0.writhe()
    }

    fn subbraid(&self, keep: Vec<usize>) -> PyResult<Self> {
        self.0.subbraid(&keep).map(PyBraid).map_err(err)
    }

    fn tensor(&self, other: &PyBraid) -> Self {
        PyBraid(self.0.tensor(&other.0))
    }

    /// Returns `(value, converged)`.
    #[pyo3(signature = (tol=DEFAULT_TOL, maxit=DEFAULT_MAXIT))]
    fn entropy(&self, tol: f64, maxit: usize) -> (f64, bool) {
        let r = entropy(&self.0, tol, maxit);
        (r.value, r.converged)
    }

    fn entropy_fixed_iterates(&self, l: &PyLoop, k: usize) -> PyResult<f64> {
        entropy_fixed_iterates(&self.0, &l.0, k).map_err(err)
    }

    fn complexity(&self) -> f64 {
        complexity(&self.0)
    }

    fn loopcoords(&self) -> PyLoop {
        PyLoop(loopcoords(&self.0))
    }

    /// Alexander polynomial as `(lowest exponent, coefficients)`.
    #[pyo3(signature = (centered=false))]
    fn alexander(&self, centered: bool) -> PyResult<(i64, Vec<BigInt>)> {
        let p = alexander(&self.0, centered).map_err(err)?;
        Ok((p.lowest(), p.coeffs().to_vec()))
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }
}

#[pyclass(name = "Loop", module = "pybraidkit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLoop(braidkit::Loop);

#[pymethods]
impl PyLoop {
    #[new]
    #[pyo3(signature = (coords, basepoint=false))]
    fn new(coords: Vec<BigInt>, basepoint: bool) -> PyResult<Self> {
        braidkit::Loop::new(coords, basepoint).map(PyLoop).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (n, basepoint=false))]
    fn canonical(n: usize, basepoint: bool) -> PyResult<Self> {
        braidkit::Loop::canonical(n, basepoint).map(PyLoop).map_err(err)
    }

    #[getter]
    fn coords(&self) -> Vec<BigInt> {
        self.0.coords()
    }

    #[getter]
    fn basepoint(&self) -> bool {
        self.0.has_basepoint()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    /// Returns `(mu, nu)`.
    fn intersec(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let x = self.0.intersec();
        (x.mu, x.nu)
    }

    fn minlength(&self) -> BigInt {
        self.0.minlength()
    }

    fn intaxis(&self) -> BigInt {
        self.0.intaxis()
    }
}

#[pyfunction]
fn act(b: &PyBraid, l: &PyLoop) -> PyResult<PyLoop> {
    braidkit::act(&b.0, &l.0).map(PyLoop).map_err(err)
}

/// Image loop together with the effective linear action as nested lists.
#[pyfunction]
fn act_matrix(b: &PyBraid, l: &PyLoop) -> PyResult<(PyLoop, Vec<Vec<BigInt>>)> {
    let (image, m) = act_with_matrix(&b.0, &l.0).map_err(err)?;
    Ok((PyLoop(image), m.rows()))
}

type Cycle = (usize, usize, Vec<Vec<Vec<BigInt>>>);

/// `(preperiod, period, matrices)` of the limit cycle, one matrix per iterate.
#[pyfunction]
#[pyo3(signature = (b, l=None, maxit=1000))]
fn limit_cycle(b: &PyBraid, l: Option<&PyLoop>, maxit: usize) -> PyResult<Cycle> {
    let r = cycle(&b.0, l.map(|l| &l.0), maxit, CycleMode::PerIterate).map_err(err)?;
    Ok((r.preperiod, r.period, r.matrices.iter().map(|m| m.rows()).collect()))
}

/// Braid word and crossing times from sampled trajectories.
///
/// `positions[k][p]` is the `(x, y)` position of particle `p` at `times[k]`.
/// `closure` is one of `"default"`, `"mindist"` or `"none"`.
#[pyfunction]
#[pyo3(signature = (times, positions, angle=0.0, closure="default"))]
fn fromdata(times: Vec<f64>, positions: Vec<Vec<[f64; 2]>>, angle: f64, closure: &str) -> PyResult<(PyBraid, Vec<f64>)> {
    let ts = TrajectorySet::new(times, positions).map_err(err)?;
    let ts = match closure {
        "default" => ts.closure(ClosureMethod::Rank),
        "mindist" => ts.closure(ClosureMethod::MinDistance),
        "none" => ts,
        other => return Err(PyValueError::new_err(format!("unknown closure '{other}'"))),
    };
    let p = props::current();
    let db = databraid_with(&ts, angle, p.braid_abs_tol, p.gen_rot_dir).map_err(err)?;
    Ok((PyBraid(db.braid().clone()), db.tcross().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (b, tcross, t=None, norm="intaxis"))]
fn ftbe(b: &PyBraid, tcross: Vec<f64>, t: Option<f64>, norm: &str) -> PyResult<f64> {
    let norm = match norm {
        "intaxis" => LoopNorm::IntAxis,
        "minlength" => LoopNorm::MinLength,
        other => return Err(PyValueError::new_err(format!("unknown norm '{other}'"))),
    };
    let db = braidkit::DataBraid::new(b.0.clone(), tcross).map_err(err)?;
    db.ftbe(t, norm).map_err(err)
}

#[pyfunction]
fn prop_get(key: &str) -> PyResult<String> {
    props::current().get(key).map_err(err)
}

#[pyfunction]
fn prop_set(key: &str, value: &str) -> PyResult<()> {
    props::set(key, value).map_err(err)
}

#[pymodule]
fn pybraidkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyLoop>()?;
    m.add_function(wrap_pyfunction!(act, m)?)?;
    m.add_function(wrap_pyfunction!(act_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(limit_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(fromdata, m)?)?;
    m.add_function(wrap_pyfunction!(ftbe, m)?)?;
    m.add_function(wrap_pyfunction!(prop_get, m)?)?;
    m.add_function(wrap_pyfunction!(prop_set, m)?)?;
    Ok(())
}
