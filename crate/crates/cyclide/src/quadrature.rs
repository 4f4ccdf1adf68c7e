//! Brute-force quadrature oracle for the area and volume of an inverted torus,
//! independent of the hypergeometric closed forms it validates.
//!
//! The surfaces are tori of revolution with major radius `R > 1` and minor
//! radius 1, inverted about a unit sphere centered at `[rho, 0, 0]` with
//! `rho in [0, R-1)`. The conformal factor contributes `1/Q^2` to the area
//! element and `1/Q^3` to the volume element, where
//! `Q(rho; x) = rho^2 - 2 x_1 rho + |x|^2 = |x - [rho,0,0]|^2`.
//!
//! Both angular directions use the periodic trapezoid rule (spectrally
//! accurate for these smooth periodic integrands); the radial direction of
//! the volume integral uses Gauss-Legendre on `[0, 1]`.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Parameters of the inverted-torus integrand: major radius `R` (minor radius
/// fixed to 1) and inversion-center distance `rho` along the x-axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvertedTorusIntegrand {
    pub r_major: f64,
    pub rho: f64,
}

impl InvertedTorusIntegrand {
    /// Requires `R > 1` and `rho in [0, R-1)` (center strictly outside the
    /// torus, so `Q >= (R-1-rho)^2 > 0` on the whole solid torus).
    pub fn new(r_major: f64, rho: f64) -> Result<Self> {
        if !(r_major > 1.0) {
            return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
        }
        if !(0.0..r_major - 1.0).contains(&rho) {
            return Err(Error::Domain(format!(
                "inversion center distance {rho} outside [0, R-1) = [0, {})",
                r_major - 1.0
            )));
        }
        Ok(InvertedTorusIntegrand { r_major, rho })
    }
}

/// Grid resolutions and refinement tolerance for the oracle.
///
/// `target_tol` is a relative tolerance on the change under grid doubling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Trapezoid nodes per periodic direction (u and v); even, >= 8.
    pub n_angular: usize,
    /// Gauss-Legendre nodes on r in [0, 1]; >= 4.
    pub n_radial: usize,
    pub target_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            n_angular: 256,
            n_radial: 64,
            target_tol: 1e-10,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_angular < 8 || self.n_angular % 2 != 0 {
            return Err(Error::Domain(format!(
                "n_angular must be an even integer >= 8, got {}",
                self.n_angular
            )));
        }
        if self.n_radial < 4 {
            return Err(Error::Domain(format!(
                "n_radial must be >= 4, got {}",
                self.n_radial
            )));
        }
        if !(self.target_tol > 0.0) {
            return Err(Error::Domain(format!(
                "target_tol must be positive, got {}",
                self.target_tol
            )));
        }
        Ok(())
    }
}

/// Gauss-Legendre nodes and weights on `[0, 1]`, by Newton iteration on the
/// Legendre polynomial from Chebyshev initial guesses.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // initial guess on [-1, 1]
        let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and P_n' by the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = t;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * t * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (t * p1 - p0) / (t * t - 1.0);
            let dt = p1 / dp;
            t -= dt;
            if dt.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - t * t) * dp * dp);
        // map [-1, 1] -> [0, 1]
        nodes[n - 1 - i] = 0.5 * (t + 1.0);
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

fn angular_nodes(n: usize) -> Vec<f64> {
    (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect()
}

/// Double integral of the inverted surface element over `[0, 2pi]^2` by the
/// periodic trapezoid rule in both angles.
pub fn area_oracle(integrand: &InvertedTorusIntegrand, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let (r, z) = (integrand.r_major, integrand.rho);
    let n = spec.n_angular;
    let cos_u: Vec<f64> = angular_nodes(n).iter().map(|u| u.cos()).collect();
    let sin_v: Vec<f64> = angular_nodes(n).iter().map(|v| v.sin()).collect();

    let mut total = 0.0;
    let mut comp = 0.0;
    for &sv in &sin_v {
        let w = r + sv;
        // Q = p - q cos u along this row
        let p = z * z + r * r + 1.0 + 2.0 * r * sv;
        let q = 2.0 * z * w;
        let mut row = 0.0;
        for &cu in &cos_u {
            let d = p - q * cu;
            row += w / (d * d);
        }
        // Kahan across rows
        let y = row - comp;
        let t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    let h = 2.0 * PI / n as f64;
    let value = total * h * h;
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::SingularIntegrand(format!(
            "area integrand degenerate at R = {r}, rho = {z}"
        )));
    }
    Ok(value)
}

/// Triple integral of the inverted volume element: trapezoid in both angles,
/// Gauss-Legendre in the radial coordinate.
pub fn volume_oracle(integrand: &InvertedTorusIntegrand, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let (r_major, z) = (integrand.r_major, integrand.rho);
    let n = spec.n_angular;
    let cos_u: Vec<f64> = angular_nodes(n).iter().map(|u| u.cos()).collect();
    let sin_v: Vec<f64> = angular_nodes(n).iter().map(|v| v.sin()).collect();
    let (r_nodes, r_weights) = gauss_legendre_unit(spec.n_radial);

    let mut total = 0.0;
    let mut comp = 0.0;
    for (&r, &wr) in r_nodes.iter().zip(&r_weights) {
        for &sv in &sin_v {
            let w = r_major + r * sv;
            let p = z * z + r_major * r_major + r * r + 2.0 * r_major * r * sv;
            let q = 2.0 * z * w;
            let numer = r * w;
            let mut row = 0.0;
            for &cu in &cos_u {
                let d = p - q * cu;
                row += numer / (d * d * d);
            }
            let y = row * wr - comp;
            let t = total + y;
            comp = (t - total) - y;
            total = t;
        }
    }
    let h = 2.0 * PI / n as f64;
    let value = total * h * h;
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::SingularIntegrand(format!(
            "volume integrand degenerate at R = {r_major}, rho = {z}"
        )));
    }
    Ok(value)
}

/// Isoperimetric ratio `6 sqrt(pi) V / A^{3/2}` from the two oracles.
pub fn iso_oracle(integrand: &InvertedTorusIntegrand, spec: &QuadratureSpec) -> Result<f64> {
    let a = area_oracle(integrand, spec)?;
    let v = volume_oracle(integrand, spec)?;
    Ok(6.0 * PI.sqrt() * v / a.powf(1.5))
}

/// One refinement level of a convergence run.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub n_angular: usize,
    pub n_radial: usize,
    pub area: f64,
    pub volume: f64,
    /// Relative change of (area, volume) against the previous level; NaN on
    /// the first row.
    pub delta_area: f64,
    pub delta_volume: f64,
}

/// Maximum number of doublings a refinement run may take beyond its starting
/// resolution.
pub const MAX_DOUBLINGS: usize = 5;

/// Doubles both resolutions until the relative deltas drop below
/// `spec.target_tol`, returning the whole trace.
pub fn convergence_report(
    integrand: &InvertedTorusIntegrand,
    spec: &QuadratureSpec,
) -> Result<Vec<ConvergenceRow>> {
    spec.validate()?;
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    let mut level = *spec;
    for _ in 0..=MAX_DOUBLINGS {
        let area = area_oracle(integrand, &level)?;
        let volume = volume_oracle(integrand, &level)?;
        let (da, dv) = match rows.last() {
            Some(prev) => (
                ((area - prev.area) / area).abs(),
                ((volume - prev.volume) / volume).abs(),
            ),
            None => (f64::NAN, f64::NAN),
        };
        rows.push(ConvergenceRow {
            n_angular: level.n_angular,
            n_radial: level.n_radial,
            area,
            volume,
            delta_area: da,
            delta_volume: dv,
        });
        if da.max(dv) < spec.target_tol {
            return Ok(rows);
        }
        level.n_angular *= 2;
        level.n_radial *= 2;
    }
    Err(Error::NoConvergence(format!(
        "deltas above {} after {MAX_DOUBLINGS} doublings from n_angular = {}",
        spec.target_tol, spec.n_angular
    )))
}

/// Converged oracle values for one parameter point.
#[derive(Debug, Clone, Copy)]
pub struct OracleValues {
    pub area: f64,
    pub volume: f64,
    pub iso: f64,
    /// Angular resolution of the accepted level.
    pub n_angular_used: usize,
}

/// Oracle run with angular refinement: starting from `spec.n_angular`, the
/// angular resolution is doubled until both area and volume change by less
/// than `spec.target_tol` relative (at most [`MAX_DOUBLINGS`] doublings);
/// the radial rule stays at `spec.n_radial`, whose Gauss-Legendre error is
/// negligible next to the angular one for this integrand family.
pub fn oracle_converged(
    integrand: &InvertedTorusIntegrand,
    spec: &QuadratureSpec,
) -> Result<OracleValues> {
    spec.validate()?;
    let mut level = *spec;
    let mut prev: Option<(f64, f64)> = None;
    for _ in 0..=MAX_DOUBLINGS {
        let area = area_oracle(integrand, &level)?;
        let volume = volume_oracle(integrand, &level)?;
        if let Some((pa, pv)) = prev {
            let da = ((area - pa) / area).abs();
            let dv = ((volume - pv) / volume).abs();
            if da.max(dv) < spec.target_tol {
                return Ok(OracleValues {
                    area,
                    volume,
                    iso: 6.0 * PI.sqrt() * volume / area.powf(1.5),
                    n_angular_used: level.n_angular,
                });
            }
        }
        prev = Some((area, volume));
        level.n_angular *= 2;
    }
    Err(Error::NoConvergence(format!(
        "oracle not converged to {} within {MAX_DOUBLINGS} angular doublings from {}",
        spec.target_tol, spec.n_angular
    )))
}
