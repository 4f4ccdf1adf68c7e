//! Closed-form area, volume and isoperimetric ratio of the inverted torus,
//! Taylor-coefficient extraction, the monotonicity certification suite and
//! the constructive non-uniqueness search.
//!
//! With `x = 4 rho^2 / (R^2 - 1 - rho^2)^2` the closed forms are
//!
//! ```text
//! A_R(rho) = 4 pi^2 R ((R^2-1)^2 - rho^4)
//!            / (((R-1)^2-rho^2)^2 ((R+1)^2-rho^2)^2) * 2F1(-1/2,-1/2;1;x)
//! V_R(rho) = 2 R pi^2 (R^2-1-rho^2)^3
//!            / (((R-1)^2-rho^2)^3 ((R+1)^2-rho^2)^3) * 3F2(...; x)
//! Iso_R(rho)^2 = 9/(4 pi R) * 3F2^2/2F1^3 * ((R^2-rho^2-1)/(R^2+rho^2-1))^3
//! ```
//!
//! and `Iso_R` rises from `3/(2 sqrt(pi R))` at the axis to exactly 1 at
//! `rho = R-1`, where `x = 1` and the kernels take their closed boundary
//! values `4/pi` and `16 R^2/(3 pi)`.

use crate::error::{Error, Result};
use crate::geometry::{canonicalize, ShapeClass};
use crate::hypergeom::{eval_2f1, eval_vol3f2, HGKernel};
use crate::series::SeriesPoly;
use std::f64::consts::PI;

/// Series tolerance used by the closed-form evaluators.
const SERIES_TOL: f64 = 1e-14;

/// Relative half-width of the snap band around `x = 1` / `rho = R-1`.
const ENDPOINT_BAND: f64 = 1e-12;

/// A point of the closed-form domain together with the derived
/// hypergeometric argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoPoint {
    pub r_major: f64,
    pub rho: f64,
    /// `x = 4 rho^2 / (R^2 - 1 - rho^2)^2`, in `[0, 1]`; exactly 1 at
    /// `rho = R - 1` and strictly increasing in `rho`.
    pub x: f64,
}

impl IsoPoint {
    /// Accepts `rho in [0, R-1]` (closed right end; the open-interval
    /// operations validate separately).
    pub fn new(r_major: f64, rho: f64) -> Result<Self> {
        if !(r_major > 1.0) {
            return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
        }
        if !(0.0..=(r_major - 1.0) * (1.0 + 1e-15)).contains(&rho) {
            return Err(Error::Domain(format!(
                "rho = {rho} outside [0, R-1] = [0, {}]",
                r_major - 1.0
            )));
        }
        let den = r_major * r_major - 1.0 - rho * rho;
        let x = (4.0 * rho * rho / (den * den)).min(1.0);
        Ok(IsoPoint { r_major, rho, x })
    }
}

/// Closed-form surface area `A_R(rho)` for `rho in [0, R-1)`.
pub fn area_closed(r_major: f64, rho: f64) -> Result<f64> {
    let p = IsoPoint::new(r_major, rho)?;
    if rho >= r_major - 1.0 {
        return Err(Error::Domain(format!(
            "area diverges at rho = R-1; need rho < {}",
            r_major - 1.0
        )));
    }
    let (r, z2) = (r_major, rho * rho);
    let c = r * r - 1.0;
    let dm = (r - 1.0) * (r - 1.0) - z2;
    let dp = (r + 1.0) * (r + 1.0) - z2;
    let pref = 4.0 * PI * PI * r * (c * c - z2 * z2) / (dm * dm * dp * dp);
    Ok(pref * HGKernel::area().eval(p.x, SERIES_TOL)?)
}

/// Closed-form enclosed volume `V_R(rho)` for `rho in [0, R-1)`.
pub fn volume_closed(r_major: f64, rho: f64) -> Result<f64> {
    let p = IsoPoint::new(r_major, rho)?;
    if rho >= r_major - 1.0 {
        return Err(Error::Domain(format!(
            "volume diverges at rho = R-1; need rho < {}",
            r_major - 1.0
        )));
    }
    let (r, z2) = (r_major, rho * rho);
    let c = r * r - 1.0 - z2;
    let dm = (r - 1.0) * (r - 1.0) - z2;
    let dp = (r + 1.0) * (r + 1.0) - z2;
    let pref = 2.0 * r * PI * PI * c * c * c / (dm * dm * dm * dp * dp * dp);
    Ok(pref * HGKernel::volume(r)?.eval(p.x, SERIES_TOL)?)
}

/// Closed-form isoperimetric ratio `Iso_R(rho)` on the closed interval
/// `rho in [0, R-1]`; the endpoint evaluates through the `x = 1` kernel
/// values and lands on 1 to roundoff.
pub fn iso_closed(r_major: f64, rho: f64) -> Result<f64> {
    let p = IsoPoint::new(r_major, rho)?;
    let r = r_major;
    let (f32v, f21v) = if 1.0 - p.x <= ENDPOINT_BAND {
        (HGKernel::volume(r)?.boundary_value(), HGKernel::area().boundary_value())
    } else {
        (eval_vol3f2(r, p.x, SERIES_TOL)?, eval_2f1(-0.5, -0.5, 1.0, p.x, SERIES_TOL)?)
    };
    let z2 = rho * rho;
    let shape_factor = (r * r - z2 - 1.0) / (r * r + z2 - 1.0);
    Ok(3.0 / (2.0 * (PI * r).sqrt()) * f32v / f21v.powf(1.5) * shape_factor.powf(1.5))
}

/// Isoperimetric ratio on the full family domain `rho in [0, sqrt(R^2-1)]`:
/// the canonical branch uses [`iso_closed`] directly, `rho = R-1` is the
/// round sphere (ratio 1), and the upper branch evaluates at the dual
/// parameters.
pub fn iso_full_domain(r_major: f64, rho: f64) -> Result<f64> {
    match canonicalize(r_major, rho)? {
        ShapeClass::RoundSphere => Ok(1.0),
        ShapeClass::Toroidal { r_major: rc, rho: pc } => iso_closed(rc, pc),
    }
}

/// Coefficient series (in `rho`) of the kernel argument
/// `x(rho) = 4 w / (c - w)^2` with `w = rho^2`, `c = R^2 - 1`, as a series
/// in `w` of the given order: coefficient of `w^{k+1}` is `4 (k+1) / c^{k+2}`.
fn arg_series(r_major: f64, order: usize) -> SeriesPoly {
    let c = r_major * r_major - 1.0;
    let mut s = SeriesPoly::zero(order);
    for k in 0..order {
        s.coeffs[k + 1] = 4.0 * (k as f64 + 1.0) / c.powi(k as i32 + 2);
    }
    s
}

/// 2F1 series coefficients in the argument, up to `order`.
fn f21_series(a: f64, b: f64, c: f64, order: usize) -> SeriesPoly {
    let mut s = SeriesPoly::zero(order);
    let mut t = 1.0;
    for n in 0..=order {
        s.coeffs[n] = t;
        let nf = n as f64;
        t *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
    }
    s
}

/// Reduced volume-kernel series coefficients `b_n (1 + n/e)`, degenerating to
/// the plain 2F1 coefficients when `e` is infinite (square torus).
fn f32_series(r_major: f64, order: usize) -> SeriesPoly {
    let e = 3.0 / (2.0 * r_major * r_major - 4.0);
    let mut s = SeriesPoly::zero(order);
    let mut base = 1.0;
    for n in 0..=order {
        let nf = n as f64;
        s.coeffs[n] = if e.is_finite() { base * (1.0 + nf / e) } else { base };
        let t = nf - 1.5;
        base *= t * t / ((nf + 1.0) * (nf + 1.0));
    }
    s
}

/// `(d - w)^p` as a polynomial in `w`, truncated.
fn linear_power(d: f64, p: usize, order: usize) -> SeriesPoly {
    let mut base = SeriesPoly::zero(order);
    base.coeffs[0] = d;
    if order >= 1 {
        base.coeffs[1] = -1.0;
    }
    let mut out = SeriesPoly::constant(1.0, order);
    for _ in 0..p {
        out = out.mul(&base);
    }
    out
}

fn even_coeffs_to_z(series_in_w: &SeriesPoly, order_z: usize) -> Vec<f64> {
    let mut out = vec![0.0; order_z + 1];
    for (k, c) in series_in_w.coeffs.iter().enumerate() {
        if 2 * k <= order_z {
            out[2 * k] = *c;
        }
    }
    out
}

/// Taylor coefficients `c_0 .. c_order` (in `rho`) of the closed-form area at
/// fixed `R`, by exact truncated-series arithmetic: the kernel series is
/// composed with the argument series and multiplied by the expanded rational
/// prefactor. Odd coefficients vanish.
pub fn taylor_coeffs_area(r_major: f64, order: usize) -> Result<Vec<f64>> {
    if !(r_major > 1.0) {
        return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
    }
    let m = (order / 2).max(4);
    let r = r_major;
    let c = r * r - 1.0;
    // numerator 4 pi^2 R (c^2 - w^2)
    let mut num = SeriesPoly::zero(m);
    num.coeffs[0] = c * c;
    if m >= 2 {
        num.coeffs[2] = -1.0;
    }
    let num = num.scale(4.0 * PI * PI * r);
    let den = linear_power((r - 1.0) * (r - 1.0), 2, m).mul(&linear_power((r + 1.0) * (r + 1.0), 2, m));
    let pref = num.mul(&den.recip());
    let kernel = f21_series(-0.5, -0.5, 1.0, m).compose(&arg_series(r, m));
    Ok(even_coeffs_to_z(&pref.mul(&kernel), order))
}

/// Taylor coefficients of the closed-form volume, analogous to
/// [`taylor_coeffs_area`].
pub fn taylor_coeffs_volume(r_major: f64, order: usize) -> Result<Vec<f64>> {
    if !(r_major > 1.0) {
        return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
    }
    let m = (order / 2).max(4);
    let r = r_major;
    let c = r * r - 1.0;
    let num = linear_power(c, 3, m).scale(2.0 * r * PI * PI);
    let den = linear_power((r - 1.0) * (r - 1.0), 3, m).mul(&linear_power((r + 1.0) * (r + 1.0), 3, m));
    let pref = num.mul(&den.recip());
    let kernel = f32_series(r, m).compose(&arg_series(r, m));
    Ok(even_coeffs_to_z(&pref.mul(&kernel), order))
}

/// `f(x) = (x+1)^{1/2} / 2F1(-1/2,-1/2;1;x)`, increasing on `(0, 1)`.
pub fn f_eval(x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("f needs x in [0, 1), got {x}")));
    }
    Ok((x + 1.0).sqrt() / eval_2f1(-0.5, -0.5, 1.0, x, SERIES_TOL)?)
}

/// `g_R(x) = 3F2(...; x) / ((1+x)^{3/4} (1+(R^2-1)x)^{3/4})`, increasing on
/// `(0, 1)` for every `R > 1`.
pub fn g_eval(r_major: f64, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("g needs x in [0, 1), got {x}")));
    }
    let f32v = eval_vol3f2(r_major, x, SERIES_TOL)?;
    Ok(f32v / ((1.0 + x).powf(0.75) * (1.0 + (r_major * r_major - 1.0) * x).powf(0.75)))
}

/// `h_R(x) = 3F2^2 / 2F1^3 * (1+(R^2-1)x)^{-3/2}`; identically `f^3 g_R^2`.
pub fn h_eval(r_major: f64, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("h needs x in [0, 1), got {x}")));
    }
    let f32v = eval_vol3f2(r_major, x, SERIES_TOL)?;
    let f21v = eval_2f1(-0.5, -0.5, 1.0, x, SERIES_TOL)?;
    Ok(f32v * f32v / f21v.powi(3) * (1.0 + (r_major * r_major - 1.0) * x).powf(-1.5))
}

/// The cubic `p_n(R) = 4(R^4+4R^2-4) n^3 + 6(R^4+R^2-2) n^2
/// + (2R^4-13R^2+10) n - 3R^2 + 3` driving the term-ratio recurrence of
/// the `u_n` sequence.
pub fn p_poly(n: u64, r_major: f64) -> f64 {
    let r2 = r_major * r_major;
    let r4 = r2 * r2;
    let nf = n as f64;
    4.0 * (r4 + 4.0 * r2 - 4.0) * nf * nf * nf
        + 6.0 * (r4 + r2 - 2.0) * nf * nf
        + (2.0 * r4 - 13.0 * r2 + 10.0) * nf
        - 3.0 * r2
        + 3.0
}

/// Lower bound `4 R^4 n^3 + (10 - 11 R^2) n + 3 - 3 R^2 < p_n(R)` for
/// `n >= 1, R > 1`; increasing in `n` there, and its value at `n = 1` is
/// exactly `(2R^2 - 7/2)^2 + 3/4 > 0`, which proves positivity of the whole
/// `p_n` family.
pub fn p_lower_bound(n: u64, r_major: f64) -> f64 {
    let r2 = r_major * r_major;
    let r4 = r2 * r2;
    let nf = n as f64;
    4.0 * r4 * nf * nf * nf + (10.0 - 11.0 * r2) * nf + 3.0 - 3.0 * r2
}

/// The coefficient sequence `u_0 .. u_N` of the normalized `g_R'` expansion,
/// built from `u_0 = 1` and the hypergeometric term ratio
/// `u_{n+1}/u_n = (2n-1)(2n+1) p_{n+1}(R) / (4 (n+2)(n+1) p_n(R))`.
pub fn u_seq(r_major: f64, n_terms: usize) -> Result<Vec<f64>> {
    if !(r_major > 1.0) {
        return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
    }
    let mut u = Vec::with_capacity(n_terms + 1);
    u.push(1.0);
    let mut cur = 1.0;
    for n in 0..n_terms {
        let pn = p_poly(n as u64, r_major);
        if pn == 0.0 {
            return Err(Error::ZeroDenominator(format!(
                "p_{n}({r_major}) = 0 in the u-sequence recurrence"
            )));
        }
        let nf = n as f64;
        cur *= (2.0 * nf - 1.0) * (2.0 * nf + 1.0) * p_poly(n as u64 + 1, r_major)
            / (4.0 * (nf + 2.0) * (nf + 1.0) * pn);
        u.push(cur);
    }
    Ok(u)
}

/// Outcome of the monotonicity certification for one major radius.
#[derive(Debug, Clone)]
pub struct MonotonicityReport {
    pub r_major: f64,
    pub grid: Vec<f64>,
    pub iso_values: Vec<f64>,
    pub min_forward_diff: f64,
    /// Largest n checked with u_n > 0.
    pub u_positive_to: usize,
    /// Largest n checked with p_n > 0 (n >= 1).
    pub p_positive_to: usize,
    pub pass: bool,
}

/// Evaluates `Iso_R` on a uniform grid of `[0, R-1-1e-6(R-1)]`, requiring
/// strictly positive forward differences, and runs the `p_n`/`u_n`
/// positivity checks to their horizons.
pub fn monotonicity_check(r_major: f64, grid_size: usize) -> Result<MonotonicityReport> {
    if grid_size < 2 {
        return Err(Error::Domain(format!("grid needs at least 2 points, got {grid_size}")));
    }
    let top = (r_major - 1.0) * (1.0 - 1e-6);
    let grid: Vec<f64> = (0..grid_size)
        .map(|i| top * i as f64 / (grid_size - 1) as f64)
        .collect();
    let iso_values = grid
        .iter()
        .map(|&z| iso_closed(r_major, z))
        .collect::<Result<Vec<f64>>>()?;
    let min_forward_diff = iso_values
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);

    const P_HORIZON: usize = 10_000;
    const U_HORIZON: usize = 1_000;
    let mut p_positive_to = 0;
    for n in 1..=P_HORIZON {
        if p_poly(n as u64, r_major) > 0.0 {
            p_positive_to = n;
        } else {
            break;
        }
    }
    let u = u_seq(r_major, U_HORIZON)?;
    let mut u_positive_to = 0;
    for (n, &v) in u.iter().enumerate() {
        if v > 0.0 {
            u_positive_to = n;
        } else {
            break;
        }
    }

    let pass = min_forward_diff > 0.0 && p_positive_to == P_HORIZON && u_positive_to == U_HORIZON;
    Ok(MonotonicityReport {
        r_major,
        grid,
        iso_values,
        min_forward_diff,
        u_positive_to,
        p_positive_to,
        pass,
    })
}

/// Guard band around `sqrt 2` for rejecting the square torus.
pub const SQUARE_GUARD: f64 = 1e-9;

/// Lower end of the ratio interval on which both branches of the full-domain
/// curve take the value: `max(3/(2 sqrt(pi R)), 3/(2 sqrt(pi R')))`.
pub fn overlap_lower_bound(r_major: f64) -> Result<f64> {
    if !(r_major > 1.0) {
        return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
    }
    let r_dual = r_major / (r_major * r_major - 1.0).sqrt();
    let lo = 3.0 / (2.0 * (PI * r_major).sqrt());
    let lo_dual = 3.0 / (2.0 * (PI * r_dual).sqrt());
    Ok(lo.max(lo_dual))
}

/// Bisection on a monotone bracket, to `1e-12` bracket width with a
/// 200-iteration cap.
fn bisect<F: Fn(f64) -> Result<f64>>(f: F, mut lo: f64, mut hi: f64) -> Result<f64> {
    let flo = f(lo)?;
    let fhi = f(hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "bisection bracket [{lo}, {hi}] has no sign change"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-12 {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Two distinct inversion-center distances whose shapes share the
/// isoperimetric ratio `v`: one on the rising branch `[0, R-1)` and one on
/// the falling branch `(R-1, sqrt(R^2-1)]`. Exists for every
/// `v in [overlap lower bound, 1)` when `R != sqrt 2`.
pub fn find_iso_matches(r_major: f64, v: f64) -> Result<(f64, f64)> {
    if (r_major - std::f64::consts::SQRT_2).abs() <= SQUARE_GUARD {
        return Err(Error::RejectSquare(format!(
            "R = {r_major} is the square torus; its shapes are uniquely determined by the ratio"
        )));
    }
    let lo = overlap_lower_bound(r_major)?;
    if !(v >= lo && v < 1.0) {
        return Err(Error::OutOfRange(format!(
            "ratio v = {v} outside the two-branch overlap [{lo}, 1)"
        )));
    }
    let top = r_major - 1.0;
    let s = (r_major * r_major - 1.0).sqrt();
    let rho1 = bisect(|z| Ok(iso_closed(r_major, z)? - v), 0.0, top)?;
    let rho2 = bisect(|z| Ok(iso_full_domain(r_major, z)? - v), top, s)?;
    Ok((rho1, rho2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{dual_params, maxwell_from_p1, p1_ratio_outside, shapes_equal};
    use crate::quadrature::{oracle_converged, InvertedTorusIntegrand, QuadratureSpec};

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    // Reference values: 50-digit direct summation of the closed forms,
    // independent of this implementation.
    const AREA_2_05: f64 = 16.93209288507468607571;
    const VOL_15_03: f64 = 82.82593633312527454943;
    const VOL_DEGEN: f64 = 178.3904329477244688537;
    const ISO_SQRT2_02: f64 = 0.8254072201579708501216;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn closed_forms_at_axis() {
        // the prefactors reach the reference expressions through different
        // float groupings, so a few ulps of slack
        for r in [1.2, SQRT2, 2.0, 5.0] {
            let c = r * r - 1.0;
            assert!(rel(area_closed(r, 0.0).unwrap(), 4.0 * PI * PI * r / (c * c)) < 5e-15);
            assert!(rel(volume_closed(r, 0.0).unwrap(), 2.0 * r * PI * PI / (c * c * c)) < 5e-15);
        }
    }

    #[test]
    fn closed_forms_interior_reference_values() {
        assert!(rel(area_closed(2.0, 0.5).unwrap(), AREA_2_05) < 1e-14);
        assert!(rel(volume_closed(1.5, 0.3).unwrap(), VOL_15_03) < 1e-14);
        // negative-integer-e degeneracy (e = -4)
        let r = (13.0_f64 / 8.0).sqrt();
        assert!(rel(volume_closed(r, 0.1).unwrap(), VOL_DEGEN) < 1e-13);
        assert!(rel(iso_closed(SQRT2, 0.2).unwrap(), ISO_SQRT2_02) < 1e-14);
    }

    #[test]
    fn iso_endpoints() {
        for r in [1.1, SQRT2, 2.0, 10.0] {
            let want = 3.0 / (2.0 * (PI * r).sqrt());
            assert!(
                (iso_closed(r, 0.0).unwrap() - want).abs() <= 1e-12,
                "axis value at R = {r}"
            );
            assert!(
                (iso_closed(r, r - 1.0).unwrap() - 1.0).abs() <= 1e-12,
                "endpoint value at R = {r}: {}",
                iso_closed(r, r - 1.0).unwrap()
            );
        }
    }

    #[test]
    fn closed_forms_match_quadrature_oracle() {
        let spec = QuadratureSpec::default();
        for (r, rho) in [(2.0, 0.5), (1.5, 0.3), (SQRT2, 0.2), ((13.0_f64 / 8.0).sqrt(), 0.1)] {
            let integrand = InvertedTorusIntegrand::new(r, rho).unwrap();
            let o = oracle_converged(&integrand, &spec).unwrap();
            assert!(rel(area_closed(r, rho).unwrap(), o.area) < 1e-8, "area ({r}, {rho})");
            assert!(rel(volume_closed(r, rho).unwrap(), o.volume) < 1e-8, "volume ({r}, {rho})");
            assert!(rel(iso_closed(r, rho).unwrap(), o.iso) < 1e-8, "iso ({r}, {rho})");
        }
    }

    #[test]
    fn full_domain_branches() {
        // (2, sqrt 3) is the dual axis point
        let want = 3.0 / (2.0 * (PI * 2.0 / 3.0_f64.sqrt()).sqrt());
        assert!(rel(iso_full_domain(2.0, 3.0_f64.sqrt()).unwrap(), want) < 1e-13);
        // self-dual square torus
        let want = 3.0 / (2.0 * (PI * SQRT2).sqrt());
        assert!(rel(iso_full_domain(SQRT2, 1.0).unwrap(), want) < 1e-13);
        assert_eq!(iso_full_domain(2.0, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn taylor_matches_printed_coefficients() {
        for r in [1.5, 2.0, 3.0_f64] {
            let c = r * r - 1.0;
            let a = taylor_coeffs_area(r, 4).unwrap();
            let want0 = 4.0 * PI * PI * r / c.powi(2);
            let want2 = 4.0 * PI * PI * r * (4.0 * r * r + 5.0) / c.powi(4);
            let want4 =
                9.0 * PI * PI * r * (4.0 * r.powi(4) + 16.0 * r * r + 5.0) / c.powi(6);
            assert!(rel(a[0], want0) < 1e-12, "area c0 at R = {r}");
            assert!(rel(a[2], want2) < 1e-12, "area c2 at R = {r}");
            assert!(rel(a[4], want4) < 1e-12, "area c4 at R = {r}");
            assert!(a[1].abs() < 1e-12 && a[3].abs() < 1e-12);

            let v = taylor_coeffs_volume(r, 4).unwrap();
            let want0 = 2.0 * r * PI * PI / c.powi(3);
            let want2 = 6.0 * r * PI * PI * (3.0 * r * r + 2.0) / c.powi(5);
            let want4 = 3.0 * r * PI * PI * (48.0 * r.powi(4) + 104.0 * r * r + 23.0)
                / (2.0 * c.powi(7));
            assert!(rel(v[0], want0) < 1e-12, "volume c0 at R = {r}");
            assert!(rel(v[2], want2) < 1e-12, "volume c2 at R = {r}");
            assert!(rel(v[4], want4) < 1e-12, "volume c4 at R = {r}");
        }
    }

    #[test]
    fn taylor_volume_example_at_2() {
        // c4 = 6 pi^2 * 1207 / 4374 at R = 2
        let v = taylor_coeffs_volume(2.0, 4).unwrap();
        assert!(rel(v[4], 6.0 * PI * PI * 1207.0 / 4374.0) < 1e-12);
        // area c2 = 168 pi^2 / 81 at R = 2
        let a = taylor_coeffs_area(2.0, 4).unwrap();
        assert!(rel(a[2], 168.0 * PI * PI / 81.0) < 1e-12);
    }

    #[test]
    fn taylor_cross_check_against_finite_differences() {
        // ill-conditioned beyond c2, so only c0/c2 with a central stencil
        let r = 2.0;
        let a = taylor_coeffs_area(r, 4).unwrap();
        let h = 1e-3;
        let f0 = area_closed(r, 0.0).unwrap();
        let fh = area_closed(r, h).unwrap();
        let f2h = area_closed(r, 2.0 * h).unwrap();
        assert!(rel(a[0], f0) < 1e-12);
        let c2_fd = (fh - f0) / (h * h);
        let c2_fd2 = (f2h - f0) / (4.0 * h * h);
        // Richardson in h^2 cancels the c4 term
        let c2_rich = (4.0 * c2_fd - c2_fd2) / 3.0;
        assert!(rel(a[2], c2_rich) < 1e-5, "{} vs {c2_rich}", a[2]);
    }

    #[test]
    fn fgh_values_and_identity() {
        assert_eq!(f_eval(0.0).unwrap(), 1.0);
        assert_eq!(g_eval(2.0, 0.0).unwrap(), 1.0);
        assert_eq!(h_eval(2.0, 0.0).unwrap(), 1.0);
        for r in [1.2, 2.0, 5.0] {
            for i in 1..10 {
                let x = i as f64 * 0.1;
                let h = h_eval(r, x).unwrap();
                let fg = f_eval(x).unwrap().powi(3) * g_eval(r, x).unwrap().powi(2);
                assert!((h - fg).abs() <= 1e-13 * h.max(1.0), "R = {r}, x = {x}");
            }
        }
        assert!(f_eval(0.5).unwrap() > f_eval(0.25).unwrap());
        assert!(g_eval(2.0, 0.5).unwrap() > g_eval(2.0, 0.25).unwrap());
    }

    #[test]
    fn p_poly_values() {
        for r in [1.3, 2.0, 4.0_f64] {
            assert!(rel(p_poly(0, r), 3.0 - 3.0 * r * r) < 1e-15);
            assert!(p_poly(0, r) < 0.0);
        }
        // the n = 1 lower bound is exactly (2R^2 - 7/2)^2 + 3/4
        for r in [1.1, SQRT2, 2.0, 3.0, 5.0_f64] {
            let want = (2.0 * r * r - 3.5) * (2.0 * r * r - 3.5) + 0.75;
            assert!(rel(p_lower_bound(1, r), want) < 1e-14, "R = {r}");
            assert!(p_poly(1, r) > p_lower_bound(1, r));
        }
        for n in 1..=10_000u64 {
            assert!(p_poly(n, 2.0) > 0.0, "p_{n}(2)");
        }
    }

    #[test]
    fn u_sequence_positive_and_matches_series_oracle() {
        let u = u_seq(2.0, 1000).unwrap();
        assert_eq!(u[0], 1.0);
        assert!(u.iter().all(|&x| x > 0.0));
        // u_1 = -p_1/(8 p_0) > 0
        assert!(rel(u[1], -p_poly(1, 2.0) / (8.0 * p_poly(0, 2.0))) < 1e-15);
        // frozen from the independent expansion of the normalized g' series
        let want = [
            1.0,
            2.791666666666666666667,
            2.255208333333333333333,
            2.146809895833333333333,
            2.09991455078125,
            2.07369232177734375,
            2.05692958831787109375,
        ];
        for (n, w) in want.iter().enumerate() {
            assert!(rel(u[n], *w) < 1e-14, "u_{n}");
        }
    }

    /// `(1 + lam x)^alpha` as a truncated series; test-only helper for the
    /// generating-function oracle below.
    fn binomial_series(alpha: f64, lam: f64, order: usize) -> SeriesPoly {
        let mut s = SeriesPoly::zero(order);
        s.coeffs[0] = 1.0;
        for n in 1..=order {
            s.coeffs[n] = s.coeffs[n - 1] * (alpha - (n as f64 - 1.0)) / n as f64 * lam;
        }
        s
    }

    #[test]
    fn u_sequence_matches_g_derivative_expansion() {
        // independent route: expand 4 g'(x) (1+x)^{7/4} (1+(R^2-1)x)^{7/4}
        //                            / (3 (1-x)^2 (R^2-1))
        // by series algebra and compare against the ratio recurrence
        for r in [1.3, 2.0_f64.sqrt(), 2.0, 4.0_f64] {
            let order = 10;
            let c = r * r - 1.0;
            let g = f32_series(r, order)
                .mul(&binomial_series(-0.75, 1.0, order))
                .mul(&binomial_series(-0.75, c, order));
            let mut g_prime = SeriesPoly::zero(order - 1);
            for n in 1..=order {
                g_prime.coeffs[n - 1] = g.coeffs[n] * n as f64;
            }
            let geom2 =
                SeriesPoly::new((0..order).map(|n| (n + 1) as f64).collect());
            let target = g_prime
                .mul(&binomial_series(1.75, 1.0, order - 1))
                .mul(&binomial_series(1.75, c, order - 1))
                .mul(&geom2)
                .scale(4.0 / (3.0 * c));
            let u = u_seq(r, 8).unwrap();
            for n in 0..=6 {
                assert!(
                    rel(target.coeff(n), u[n]) < 1e-12,
                    "R = {r}, n = {n}: {} vs {}",
                    target.coeff(n),
                    u[n]
                );
            }
        }
    }

    #[test]
    fn monotonicity_reports_pass() {
        for r in [1.05, SQRT2, 2.0] {
            let rep = monotonicity_check(r, 200).unwrap();
            assert!(rep.pass, "R = {r}: {rep:?}");
            assert!(rep.min_forward_diff > 0.0);
        }
    }

    #[test]
    fn iso_match_witnesses() {
        let (rho1, rho2) = find_iso_matches(2.0, 0.9).unwrap();
        // frozen from a 40-digit bisection run
        assert!((rho1 - 0.74524004704385231203).abs() < 1e-10);
        assert!((rho2 - 1.2765347825027825271).abs() < 1e-10);
        assert!((iso_closed(2.0, rho1).unwrap() - 0.9).abs() <= 1e-10);
        assert!((iso_full_domain(2.0, rho2).unwrap() - 0.9).abs() <= 1e-10);
        let s1 = canonicalize(2.0, rho1).unwrap();
        let s2 = canonicalize(2.0, rho2).unwrap();
        assert!(!shapes_equal(&s1, &s2, 1e-9));
        // Maxwell ratios must differ visibly
        let m = |s: &ShapeClass| match s {
            ShapeClass::Toroidal { r_major, rho } => {
                maxwell_from_p1(&p1_ratio_outside(*r_major, *rho).unwrap())
            }
            _ => unreachable!(),
        };
        let (m1, m2) = (m(&s1), m(&s2));
        assert!(
            (m1.f - m2.f).abs() > 1e-6 || (m1.l_minus_a - m2.l_minus_a).abs() > 1e-6
        );
    }

    #[test]
    fn iso_match_rejections() {
        assert!(matches!(
            find_iso_matches(2.0, 0.5),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            find_iso_matches(SQRT2, 0.9),
            Err(Error::RejectSquare(_))
        ));
        assert!(matches!(
            find_iso_matches(2.0, 1.0),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn full_domain_mirror_symmetry() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let r = 1.0 + rng.gen_range(0.05..4.0);
            let s = (r * r - 1.0_f64).sqrt();
            let rho = rng.gen_range(0.0..s);
            let (rd, rhod) = dual_params(r, rho).unwrap();
            let a = iso_full_domain(r, rho).unwrap();
            let b = iso_full_domain(rd, rhod).unwrap();
            assert!((a - b).abs() <= 1e-12, "(R={r}, rho={rho}): {a} vs {b}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(area_closed(2.0, 1.0).is_err());
        assert!(volume_closed(2.0, 1.0).is_err());
        assert!(iso_closed(2.0, 1.5).is_err());
        assert!(iso_closed(0.9, 0.0).is_err());
        assert!(f_eval(1.0).is_err());
        assert!(g_eval(2.0, -0.1).is_err());
    }
}
