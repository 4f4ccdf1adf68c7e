//! Python bindings: the main types and operations of the `cyclide` crate as
//! the `cyclide_py` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: cyclide::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Canonical shape of an inverted torus: the round sphere or `(R, rho)` with
/// `rho in [0, R-1)`.
#[pyclass(name = "ShapeClass", from_py_object)]
#[derive(Clone)]
struct PyShapeClass {
    #[pyo3(get)]
    kind: String,
    #[pyo3(get)]
    r_major: Option<f64>,
    #[pyo3(get)]
    rho: Option<f64>,
}

impl From<cyclide::ShapeClass> for PyShapeClass {
    fn from(s: cyclide::ShapeClass) -> Self {
        match s {
            cyclide::ShapeClass::RoundSphere => PyShapeClass {
                kind: "round_sphere".into(),
                r_major: None,
                rho: None,
            },
            cyclide::ShapeClass::Toroidal { r_major, rho } => PyShapeClass {
                kind: "toroidal".into(),
                r_major: Some(r_major),
                rho: Some(rho),
            },
        }
    }
}

impl PyShapeClass {
    fn to_core(&self) -> PyResult<cyclide::ShapeClass> {
        match self.kind.as_str() {
            "round_sphere" => Ok(cyclide::ShapeClass::RoundSphere),
            "toroidal" => Ok(cyclide::ShapeClass::Toroidal {
                r_major: self
                    .r_major
                    .ok_or_else(|| PyValueError::new_err("toroidal shape needs r_major"))?,
                rho: self
                    .rho
                    .ok_or_else(|| PyValueError::new_err("toroidal shape needs rho"))?,
            }),
            other => Err(PyValueError::new_err(format!("unknown shape kind {other}"))),
        }
    }
}

#[pymethods]
impl PyShapeClass {
    fn __repr__(&self) -> String {
        match self.kind.as_str() {
            "round_sphere" => "ShapeClass(round_sphere)".to_string(),
            _ => format!(
                "ShapeClass(toroidal, R={}, rho={})",
                self.r_major.unwrap_or(f64::NAN),
                self.rho.unwrap_or(f64::NAN)
            ),
        }
    }

    fn is_round_sphere(&self) -> bool {
        self.kind == "round_sphere"
    }
}

/// Summary of a monotonicity certification run.
#[pyclass(name = "MonotonicityReport")]
struct PyMonotonicityReport {
    #[pyo3(get)]
    r_major: f64,
    #[pyo3(get)]
    min_forward_diff: f64,
    #[pyo3(get)]
    p_positive_to: usize,
    #[pyo3(get)]
    u_positive_to: usize,
    #[pyo3(get, name = "passed")]
    pass_flag: bool,
}

#[pyfunction]
#[pyo3(signature = (a, b, c, x, tol=1e-14))]
fn eval_2f1(a: f64, b: f64, c: f64, x: f64, tol: f64) -> PyResult<f64> {
    cyclide::eval_2f1(a, b, c, x, tol).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r_major, x, tol=1e-14))]
fn eval_vol3f2(r_major: f64, x: f64, tol: f64) -> PyResult<f64> {
    cyclide::eval_vol3f2(r_major, x, tol).map_err(err)
}

#[pyfunction]
fn check_3f2_identity(r_major: f64, x: f64) -> PyResult<f64> {
    cyclide::check_3f2_identity(r_major, x).map_err(err)
}

#[pyfunction]
fn area_closed(r_major: f64, rho: f64) -> PyResult<f64> {
    cyclide::area_closed(r_major, rho).map_err(err)
}

#[pyfunction]
fn volume_closed(r_major: f64, rho: f64) -> PyResult<f64> {
    cyclide::volume_closed(r_major, rho).map_err(err)
}

#[pyfunction]
fn iso_closed(r_major: f64, rho: f64) -> PyResult<f64> {
    cyclide::iso_closed(r_major, rho).map_err(err)
}

#[pyfunction]
fn iso_full_domain(r_major: f64, rho: f64) -> PyResult<f64> {
    cyclide::iso_full_domain(r_major, rho).map_err(err)
}

fn quad_spec(n_angular: usize, n_radial: usize, target_tol: f64) -> cyclide::QuadratureSpec {
    cyclide::QuadratureSpec {
        n_angular,
        n_radial,
        target_tol,
    }
}

#[pyfunction]
#[pyo3(signature = (r_major, rho, n_angular=256, n_radial=64))]
fn area_oracle(r_major: f64, rho: f64, n_angular: usize, n_radial: usize) -> PyResult<f64> {
    let integrand = cyclide::InvertedTorusIntegrand::new(r_major, rho).map_err(err)?;
    cyclide::area_oracle(&integrand, &quad_spec(n_angular, n_radial, 1e-10)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r_major, rho, n_angular=256, n_radial=64))]
fn volume_oracle(r_major: f64, rho: f64, n_angular: usize, n_radial: usize) -> PyResult<f64> {
    let integrand = cyclide::InvertedTorusIntegrand::new(r_major, rho).map_err(err)?;
    cyclide::volume_oracle(&integrand, &quad_spec(n_angular, n_radial, 1e-10)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r_major, rho, n_angular=256, n_radial=64))]
fn iso_oracle(r_major: f64, rho: f64, n_angular: usize, n_radial: usize) -> PyResult<f64> {
    let integrand = cyclide::InvertedTorusIntegrand::new(r_major, rho).map_err(err)?;
    cyclide::iso_oracle(&integrand, &quad_spec(n_angular, n_radial, 1e-10)).map_err(err)
}

/// Oracle with angular refinement; returns `(area, volume, iso, n_angular_used)`.
#[pyfunction]
#[pyo3(signature = (r_major, rho, n_angular=256, n_radial=64, target_tol=1e-10))]
fn oracle_converged(
    r_major: f64,
    rho: f64,
    n_angular: usize,
    n_radial: usize,
    target_tol: f64,
) -> PyResult<(f64, f64, f64, usize)> {
    let integrand = cyclide::InvertedTorusIntegrand::new(r_major, rho).map_err(err)?;
    let o = cyclide::oracle_converged(&integrand, &quad_spec(n_angular, n_radial, target_tol))
        .map_err(err)?;
    Ok((o.area, o.volume, o.iso, o.n_angular_used))
}

#[pyfunction]
fn dual_params(r_major: f64, rho: f64) -> PyResult<(f64, f64)> {
    cyclide::dual_params(r_major, rho).map_err(err)
}

#[pyfunction]
fn phi(r_major: f64, rho: f64) -> PyResult<(f64, f64)> {
    cyclide::phi(r_major, rho).map_err(err)
}

#[pyfunction]
fn phi_inv(a: f64, b: f64) -> PyResult<(f64, f64)> {
    cyclide::phi_inv(a, b).map_err(err)
}

#[pyfunction]
fn alpha_to_r(alpha: f64) -> PyResult<f64> {
    cyclide::alpha_to_r(alpha).map_err(err)
}

#[pyfunction]
fn r_to_alpha(r_major: f64) -> PyResult<f64> {
    cyclide::r_to_alpha(r_major).map_err(err)
}

#[pyfunction]
fn p1_ratio_outside(r_major: f64, rho: f64) -> PyResult<(f64, f64, f64)> {
    let t = cyclide::p1_ratio_outside(r_major, rho).map_err(err)?;
    Ok((t.r1, t.r2, t.d))
}

#[pyfunction]
fn p1_ratio_inside(r_major: f64, rho: f64) -> PyResult<(f64, f64, f64)> {
    let t = cyclide::p1_ratio_inside(r_major, rho).map_err(err)?;
    Ok((t.r1, t.r2, t.d))
}

/// Maxwell ratio `(a, f, L-a)` of the canonical shape at `(R, rho)`.
#[pyfunction]
fn maxwell_ratio(r_major: f64, rho: f64) -> PyResult<(f64, f64, f64)> {
    let t = cyclide::p1_ratio_outside(r_major, rho).map_err(err)?;
    let m = cyclide::maxwell_from_p1(&t);
    Ok((m.a, m.f, m.l_minus_a))
}

#[pyfunction]
fn classify_center(x: f64, y: f64, z: f64, r_major: f64) -> PyResult<f64> {
    cyclide::classify_center([x, y, z], r_major).map_err(err)
}

#[pyfunction]
fn canonicalize(r_major: f64, rho: f64) -> PyResult<PyShapeClass> {
    Ok(cyclide::canonicalize(r_major, rho).map_err(err)?.into())
}

#[pyfunction]
#[pyo3(signature = (s1, s2, tol=1e-12))]
fn shapes_equal(s1: &PyShapeClass, s2: &PyShapeClass, tol: f64) -> PyResult<bool> {
    Ok(cyclide::shapes_equal(&s1.to_core()?, &s2.to_core()?, tol))
}

#[pyfunction]
fn overlap_lower_bound(r_major: f64) -> PyResult<f64> {
    cyclide::overlap_lower_bound(r_major).map_err(err)
}

#[pyfunction]
fn find_iso_matches(r_major: f64, v: f64) -> PyResult<(f64, f64)> {
    cyclide::find_iso_matches(r_major, v).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r_major, order=4))]
fn taylor_coeffs_area(r_major: f64, order: usize) -> PyResult<Vec<f64>> {
    cyclide::taylor_coeffs_area(r_major, order).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r_major, order=4))]
fn taylor_coeffs_volume(r_major: f64, order: usize) -> PyResult<Vec<f64>> {
    cyclide::taylor_coeffs_volume(r_major, order).map_err(err)
}

#[pyfunction]
fn p_poly(n: u64, r_major: f64) -> f64 {
    cyclide::p_poly(n, r_major)
}

#[pyfunction]
fn u_seq(r_major: f64, n_terms: usize) -> PyResult<Vec<f64>> {
    cyclide::u_seq(r_major, n_terms).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r_major, grid_size=1000))]
fn monotonicity_check(r_major: f64, grid_size: usize) -> PyResult<PyMonotonicityReport> {
    let rep = cyclide::monotonicity_check(r_major, grid_size).map_err(err)?;
    Ok(PyMonotonicityReport {
        r_major: rep.r_major,
        min_forward_diff: rep.min_forward_diff,
        p_positive_to: rep.p_positive_to,
        u_positive_to: rep.u_positive_to,
        pass_flag: rep.pass,
    })
}

/// `(rho, iso)` samples over the full center family `[0, sqrt(R^2-1)]`.
#[pyfunction]
#[pyo3(signature = (r_major, n_points=200))]
fn sweep(r_major: f64, n_points: usize) -> PyResult<Vec<(f64, f64)>> {
    Ok(cyclide::sweep_points(r_major, n_points)
        .map_err(err)?
        .into_iter()
        .map(|p| (p.rho, p.iso))
        .collect())
}

#[pymodule]
fn cyclide_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyShapeClass>()?;
    m.add_class::<PyMonotonicityReport>()?;
    m.add_function(wrap_pyfunction!(eval_2f1, m)?)?;
    m.add_function(wrap_pyfunction!(eval_vol3f2, m)?)?;
    m.add_function(wrap_pyfunction!(check_3f2_identity, m)?)?;
    m.add_function(wrap_pyfunction!(area_closed, m)?)?;
    m.add_function(wrap_pyfunction!(volume_closed, m)?)?;
    m.add_function(wrap_pyfunction!(iso_closed, m)?)?;
    m.add_function(wrap_pyfunction!(iso_full_domain, m)?)?;
    m.add_function(wrap_pyfunction!(area_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(volume_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(iso_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_converged, m)?)?;
    m.add_function(wrap_pyfunction!(dual_params, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_to_r, m)?)?;
    m.add_function(wrap_pyfunction!(r_to_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(p1_ratio_outside, m)?)?;
    m.add_function(wrap_pyfunction!(p1_ratio_inside, m)?)?;
    m.add_function(wrap_pyfunction!(maxwell_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(classify_center, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    m.add_function(wrap_pyfunction!(shapes_equal, m)?)?;
    m.add_function(wrap_pyfunction!(overlap_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(find_iso_matches, m)?)?;
    m.add_function(wrap_pyfunction!(taylor_coeffs_area, m)?)?;
    m.add_function(wrap_pyfunction!(taylor_coeffs_volume, m)?)?;
    m.add_function(wrap_pyfunction!(p_poly, m)?)?;
    m.add_function(wrap_pyfunction!(u_seq, m)?)?;
    m.add_function(wrap_pyfunction!(monotonicity_check, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
