//! Shape-space calculus for toroidal Dupin cyclides: symmetry-plane circle
//! ratios, Maxwell ratios, the duality map on `(R, rho)`, classification of
//! arbitrary inversion centers, and the injective map certifying that
//! canonical parameters determine the Euclidean shape.
//!
//! Conventions: `T_R` is the torus of revolution with major radius `R > 1`
//! and minor radius 1 about the z-axis; inversion centers on the x-axis at
//! distance `rho` suffice because every center is equivalent to one of them
//! (the family tori `T(rho; R)` obtained by revolving the circle through
//! `(rho, 0)` and `((R^2-1)/rho, 0)` partition space into constant-shape
//! classes).

use crate::error::{Error, Result};
use serde::Serialize;

/// Relative band around `rho = R - 1` inside which a center counts as lying
/// on the torus and the shape is the round sphere by convention.
pub const ON_TORUS_BAND: f64 = 1e-12;

/// Canonical coordinates of the Euclidean shape of an inverted torus:
/// either the round sphere (center on the torus) or `(R, rho)` with
/// `rho in [0, R-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "shape")]
pub enum ShapeClass {
    RoundSphere,
    Toroidal { r_major: f64, rho: f64 },
}

impl ShapeClass {
    pub fn is_round_sphere(&self) -> bool {
        matches!(self, ShapeClass::RoundSphere)
    }
}

/// Projective triple `(r1 : r2 : d)` of a symmetry-plane cross-section,
/// stored normalized so that `r1 = 1`. Radii satisfy `r1 >= r2 > 0`; the
/// center distance `d` is nonnegative (zero only for concentric P2 pairs).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioTriple {
    pub r1: f64,
    pub r2: f64,
    pub d: f64,
}

impl RatioTriple {
    /// Builds the normalized triple; the two radii are sorted so `r1 >= r2`.
    pub fn new(ra: f64, rb: f64, d: f64) -> Result<Self> {
        let (r1, r2) = if ra >= rb { (ra, rb) } else { (rb, ra) };
        if !(r2 > 0.0) || !(d >= 0.0) || !r1.is_finite() || !d.is_finite() {
            return Err(Error::Domain(format!(
                "invalid circle-pair triple ({ra}, {rb}, {d})"
            )));
        }
        Ok(RatioTriple {
            r1: 1.0,
            r2: r2 / r1,
            d: d / r1,
        })
    }

    pub fn approx_eq(&self, other: &RatioTriple, tol: f64) -> bool {
        (self.r2 - other.r2).abs() <= tol * self.r2.abs().max(1.0)
            && (self.d - other.d).abs() <= tol * self.d.abs().max(1.0)
    }
}

/// Maxwell ratio `(a : f : L-a)` with `a = d/2`, `f = (r1-r2)/2`,
/// `L = (r1+r2+d)/2`; normalized so `a = 1` (projective fallback on the
/// largest component when `a = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaxwellRatio {
    pub a: f64,
    pub f: f64,
    pub l_minus_a: f64,
}

impl MaxwellRatio {
    pub fn approx_eq(&self, other: &MaxwellRatio, tol: f64) -> bool {
        (self.a - other.a).abs() <= tol * self.a.abs().max(1.0)
            && (self.f - other.f).abs() <= tol * self.f.abs().max(1.0)
            && (self.l_minus_a - other.l_minus_a).abs() <= tol * self.l_minus_a.abs().max(1.0)
    }
}

/// A point `(rho, z)` of the half rho-z plane (`rho >= 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlanePoint {
    pub rho_coord: f64,
    pub z_coord: f64,
}

impl PlanePoint {
    pub fn new(rho_coord: f64, z_coord: f64) -> Result<Self> {
        if !(rho_coord >= 0.0) {
            return Err(Error::Domain(format!(
                "half-plane point needs rho >= 0, got {rho_coord}"
            )));
        }
        Ok(PlanePoint { rho_coord, z_coord })
    }
}

fn check_r_major(r_major: f64) -> Result<()> {
    if !(r_major > 1.0) || !r_major.is_finite() {
        return Err(Error::Domain(format!("major radius must exceed 1, got {r_major}")));
    }
    Ok(())
}

/// P1-ratio of the inverted torus for centers outside the tube,
/// `rho in [0, R-1)`:
/// `(R+rho)^2 - 1 : (R-rho)^2 - 1 : 2R(R^2 - rho^2 - 1)`.
pub fn p1_ratio_outside(r_major: f64, rho: f64) -> Result<RatioTriple> {
    check_r_major(r_major)?;
    if !(0.0..r_major - 1.0).contains(&rho) {
        return Err(Error::Domain(format!(
            "outside branch needs rho in [0, R-1), got {rho}"
        )));
    }
    let r = r_major;
    RatioTriple::new(
        (r + rho) * (r + rho) - 1.0,
        (r - rho) * (r - rho) - 1.0,
        2.0 * r * (r * r - rho * rho - 1.0),
    )
}

/// P1-ratio for centers inside the tube, `rho in (R-1, sqrt(R^2-1)]`:
/// `(R-1)((R+1)^2 - rho^2) : (R+1)(rho^2 - (R-1)^2) : 4 R rho`.
pub fn p1_ratio_inside(r_major: f64, rho: f64) -> Result<RatioTriple> {
    check_r_major(r_major)?;
    let hi = (r_major * r_major - 1.0).sqrt();
    if !(rho > r_major - 1.0 && rho <= hi * (1.0 + 1e-15)) {
        return Err(Error::Domain(format!(
            "inside branch needs rho in (R-1, sqrt(R^2-1)], got {rho}"
        )));
    }
    let r = r_major;
    RatioTriple::new(
        (r - 1.0) * ((r + 1.0) * (r + 1.0) - rho * rho),
        (r + 1.0) * (rho * rho - (r - 1.0) * (r - 1.0)),
        4.0 * r * rho,
    )
}

/// Which P1 construction applies for a given center distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Outside,
    Inside,
}

/// 1-D inversion `i(x, rho) = rho + 1/(x - rho)` about the point `rho`.
fn invert_1d(x: f64, rho: f64) -> f64 {
    rho + 1.0 / (x - rho)
}

/// P1-ratio rebuilt from the four inverted abscissae of the cross-section
/// circles, the construction underlying the closed triples; agrees with
/// [`p1_ratio_outside`] / [`p1_ratio_inside`] to roundoff.
pub fn ratios_from_1d_inversions(r_major: f64, rho: f64, branch: Branch) -> Result<RatioTriple> {
    check_r_major(r_major)?;
    let r = r_major;
    // abscissae of the generating circle pair on the symmetry line
    let (a1, a2, b1, b2) = (r - 1.0, r + 1.0, -(r + 1.0), -(r - 1.0));
    match branch {
        Branch::Outside => {
            if !(0.0..r - 1.0).contains(&rho) {
                return Err(Error::Domain(format!(
                    "outside branch needs rho in [0, R-1), got {rho}"
                )));
            }
            let (i1, i2, i3, i4) = (
                invert_1d(a1, rho),
                invert_1d(a2, rho),
                invert_1d(b1, rho),
                invert_1d(b2, rho),
            );
            let r1 = 0.5 * (i1 - i2);
            let r2 = 0.5 * (i3 - i4);
            let d = 0.5 * (i1 + i2) - 0.5 * (i3 + i4);
            RatioTriple::new(r1, r2, d)
        }
        Branch::Inside => {
            let hi = (r * r - 1.0).sqrt();
            if !(rho > r - 1.0 && rho <= hi * (1.0 + 1e-15)) {
                return Err(Error::Domain(format!(
                    "inside branch needs rho in (R-1, sqrt(R^2-1)], got {rho}"
                )));
            }
            let (i1, i2, i3, i4) = (
                invert_1d(a1, rho),
                invert_1d(a2, rho),
                invert_1d(b1, rho),
                invert_1d(b2, rho),
            );
            let r1 = 0.5 * (i4 - i1);
            let r2 = 0.5 * (i2 - i3);
            let d = 0.5 * (i2 + i3) - 0.5 * (i4 + i1);
            RatioTriple::new(r1, r2, d)
        }
    }
}

/// P2-ratio from a P1-ratio via the linear isomorphism
/// `r~1 = (d + r1 + r2)/2, r~2 = (d - r1 - r2)/2, d~ = r1 - r2`.
/// Requires exterior circles, `d > r1 + r2`.
pub fn p2_from_p1(t: &RatioTriple) -> Result<RatioTriple> {
    if t.d <= t.r1 + t.r2 {
        return Err(Error::DegenerateConfiguration(format!(
            "P2 circles need d > r1 + r2, got d = {}, r1 + r2 = {}",
            t.d,
            t.r1 + t.r2
        )));
    }
    RatioTriple::new(
        0.5 * (t.d + t.r1 + t.r2),
        0.5 * (t.d - (t.r1 + t.r2)),
        t.r1 - t.r2,
    )
}

/// Maxwell ratio of a P1-ratio, normalized on `a`:
/// `(a : f : L-a) = (d : r1-r2 : r1+r2) / d`.
pub fn maxwell_from_p1(t: &RatioTriple) -> MaxwellRatio {
    let a = 0.5 * t.d;
    let f = 0.5 * (t.r1 - t.r2);
    let l_minus_a = 0.5 * (t.r1 + t.r2);
    if a != 0.0 {
        MaxwellRatio {
            a: 1.0,
            f: f / a,
            l_minus_a: l_minus_a / a,
        }
    } else {
        let m = f.abs().max(l_minus_a.abs());
        MaxwellRatio {
            a: 0.0,
            f: f / m,
            l_minus_a: l_minus_a / m,
        }
    }
}

/// The duality involution on the inversion-center family:
/// `(R', rho') = (R, (sqrt(R^2-1) - rho)/(sqrt(R^2-1) + rho)) / sqrt(R^2-1)`;
/// the shapes `i_rho(T_R)` and `i_rho'(T_R')` coincide.
pub fn dual_params(r_major: f64, rho: f64) -> Result<(f64, f64)> {
    check_r_major(r_major)?;
    let s = (r_major * r_major - 1.0).sqrt();
    if !(0.0..=s * (1.0 + 1e-15)).contains(&rho) {
        return Err(Error::Domain(format!(
            "duality needs rho in [0, sqrt(R^2-1)] = [0, {s}], got {rho}"
        )));
    }
    let r_dual = r_major / s;
    let rho_dual = (s - rho) / ((s + rho) * s);
    Ok((r_dual, rho_dual.max(0.0)))
}

/// Family parameter of a half-plane point: the unique
/// `rho in [0, sqrt(R^2-1)]` whose circle through `(rho, 0)` and
/// `((R^2-1)/rho, 0)` passes through the point.
///
/// `rho` is the smaller root of `t^2 - 2 c t + (R^2 - 1) = 0` with
/// `c = (rho0^2 + z0^2 + R^2 - 1)/(2 rho0)`; the z-axis (`rho0 = 0`) belongs
/// to the `rho = 0` member. Points on the generating circle of `T_R` itself
/// (within [`ON_TORUS_BAND`] relative) map to `R - 1`, whose shape is the
/// round sphere by convention.
pub fn family_parameter(point: &PlanePoint, r_major: f64) -> Result<f64> {
    check_r_major(r_major)?;
    let (rho0, z0) = (point.rho_coord, point.z_coord);
    if !rho0.is_finite() || !z0.is_finite() {
        return Err(Error::Domain(format!("non-finite point {point:?}")));
    }
    // distance from the generating circle center (R, 0)
    let ring_dist = (rho0 - r_major).hypot(z0);
    if (ring_dist - 1.0).abs() <= ON_TORUS_BAND * r_major {
        return Ok(r_major - 1.0);
    }
    if rho0 == 0.0 {
        return Ok(0.0);
    }
    let c = (rho0 * rho0 + z0 * z0 + r_major * r_major - 1.0) / (2.0 * rho0);
    // nonnegative up to rounding, which only bites near the degenerate
    // point-circle at (sqrt(R^2-1), 0) where the double root is c itself
    let disc = (c * c - (r_major * r_major - 1.0)).max(0.0);
    // smaller root, written to avoid cancellation
    let root = (r_major * r_major - 1.0) / (c + disc.sqrt());
    Ok(root)
}

/// Family parameter of an arbitrary inversion center `x in R^3`, through its
/// cylindrical coordinates in the half rho-z plane.
pub fn classify_center(point: [f64; 3], r_major: f64) -> Result<f64> {
    if point.iter().any(|c| !c.is_finite()) {
        return Err(Error::Domain(format!("non-finite center {point:?}")));
    }
    let plane = PlanePoint::new(point[0].hypot(point[1]), point[2])?;
    family_parameter(&plane, r_major)
}

/// Canonical shape class of `i_rho(T_R)` for `rho in [0, sqrt(R^2-1)]`:
/// already-canonical parameters pass through, `rho = R-1` is the round
/// sphere, and the upper branch maps through [`dual_params`].
pub fn canonicalize(r_major: f64, rho: f64) -> Result<ShapeClass> {
    check_r_major(r_major)?;
    let s = (r_major * r_major - 1.0).sqrt();
    if !(0.0..=s * (1.0 + 1e-15)).contains(&rho) {
        return Err(Error::Domain(format!(
            "rho = {rho} outside [0, sqrt(R^2-1)] = [0, {s}]"
        )));
    }
    let band = ON_TORUS_BAND * (r_major - 1.0).max(1.0);
    if (rho - (r_major - 1.0)).abs() <= band {
        return Ok(ShapeClass::RoundSphere);
    }
    if rho < r_major - 1.0 {
        return Ok(ShapeClass::Toroidal { r_major, rho });
    }
    let (rd, rhod) = dual_params(r_major, rho)?;
    Ok(ShapeClass::Toroidal {
        r_major: rd,
        rho: rhod.min(rd - 1.0),
    })
}

/// The injective map `(R, rho) -> (a, b)` underlying shape distinctness:
/// `a = 2 rho/(R^2 - rho^2 - 1)`, `b = (R^2 + rho^2 - 1)/(R (R^2 - rho^2 - 1))`,
/// defined on `{R > 1, rho in [0, R-1)}` with image in
/// `{a in [0,1), b in (a,1)}`.
pub fn phi(r_major: f64, rho: f64) -> Result<(f64, f64)> {
    check_r_major(r_major)?;
    if !(0.0..r_major - 1.0).contains(&rho) {
        return Err(Error::Domain(format!(
            "phi needs rho in [0, R-1), got {rho}"
        )));
    }
    let den = r_major * r_major - rho * rho - 1.0;
    Ok((
        2.0 * rho / den,
        (r_major * r_major + rho * rho - 1.0) / (r_major * den),
    ))
}

/// Inverse of [`phi`]: `R = sqrt((1-a^2)/(b^2-a^2))` and `rho = (b R - 1)/a`,
/// the latter rationalized to
/// `rho = a (1-b^2) / (sqrt(b^2-a^2) (b sqrt(1-a^2) + sqrt(b^2-a^2)))`,
/// which removes both the division by `a` (the `a = 0` axis limit) and the
/// cancellation in `b R - 1`.
pub fn phi_inv(a: f64, b: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&a) || !(b > a && b < 1.0) {
        return Err(Error::Domain(format!(
            "phi_inv needs a in [0,1), b in (a,1); got ({a}, {b})"
        )));
    }
    let s = ((b - a) * (b + a)).sqrt();
    let t = (1.0 - a * a).sqrt();
    let r = t / s;
    let rho = a * (1.0 - b * b) / (s * (b * t + s));
    Ok((r, rho))
}

/// Clifford-torus parameter to major radius, `R = csc(alpha)`.
pub fn alpha_to_r(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_2) {
        return Err(Error::Domain(format!(
            "Clifford parameter must lie in (0, pi/2), got {alpha}"
        )));
    }
    Ok(1.0 / alpha.sin())
}

/// Major radius back to the Clifford-torus parameter, `alpha = arcsin(1/R)`.
pub fn r_to_alpha(r_major: f64) -> Result<f64> {
    check_r_major(r_major)?;
    Ok((1.0 / r_major).asin())
}

/// Equality of canonical shapes up to `tol`, cross-checked through the
/// Maxwell ratios of both classes.
pub fn shapes_equal(s1: &ShapeClass, s2: &ShapeClass, tol: f64) -> bool {
    match (s1, s2) {
        (ShapeClass::RoundSphere, ShapeClass::RoundSphere) => true,
        (
            ShapeClass::Toroidal { r_major: r1, rho: p1 },
            ShapeClass::Toroidal { r_major: r2, rho: p2 },
        ) => {
            let coords_match =
                (r1 - r2).abs() <= tol * r1.max(*r2) && (p1 - p2).abs() <= tol * p1.abs().max(1.0);
            if !coords_match {
                return false;
            }
            match (
                p1_ratio_outside(*r1, *p1).map(|t| maxwell_from_p1(&t)),
                p1_ratio_outside(*r2, *p2).map(|t| maxwell_from_p1(&t)),
            ) {
                (Ok(m1), Ok(m2)) => m1.approx_eq(&m2, tol.max(1e-12) * 1e3),
                _ => coords_match,
            }
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!(
            (a - b).abs() <= tol * b.abs().max(1.0),
            "{what}: {a} vs {b}"
        );
    }

    #[test]
    fn outside_ratio_at_axis_is_1_1_2r() {
        for r in [1.5, 2.0, 5.0] {
            let t = p1_ratio_outside(r, 0.0).unwrap();
            assert_close(t.r2, 1.0, 1e-15, "r2");
            assert_close(t.d, 2.0 * r, 1e-15, "d");
        }
    }

    #[test]
    fn outside_ratio_direct_substitution() {
        let t = p1_ratio_outside(2.0, 0.5).unwrap();
        // proportional to (5.25, 1.25, 11)
        assert_close(t.r2, 1.25 / 5.25, 1e-15, "r2");
        assert_close(t.d, 11.0 / 5.25, 1e-15, "d");

        let t = p1_ratio_outside(SQRT2, 0.2).unwrap();
        let want_r1 = (SQRT2 + 0.2) * (SQRT2 + 0.2) - 1.0;
        let want_r2 = (SQRT2 - 0.2) * (SQRT2 - 0.2) - 1.0;
        let want_d = 2.0 * SQRT2 * (2.0 - 0.04 - 1.0);
        assert_close(t.r2, want_r2 / want_r1, 1e-14, "r2");
        assert_close(t.d, want_d / want_r1, 1e-14, "d");
    }

    #[test]
    fn inside_ratio_direct_substitution() {
        // (2, sqrt(3)) -> (6 : 6 : 8 sqrt 3)
        let t = p1_ratio_inside(2.0, 3.0_f64.sqrt()).unwrap();
        assert_close(t.r2, 1.0, 1e-14, "r2");
        assert_close(t.d, 8.0 * 3.0_f64.sqrt() / 6.0, 1e-14, "d");

        let t = p1_ratio_inside(2.0, 1.2).unwrap();
        assert!(t.r1 > 0.0 && t.r2 > 0.0 && t.d > 0.0);

        let r = SQRT2;
        let t = p1_ratio_inside(r, 1.0).unwrap();
        let w1 = (r - 1.0) * ((r + 1.0) * (r + 1.0) - 1.0);
        let w2 = (r + 1.0) * (1.0 - (r - 1.0) * (r - 1.0));
        let wd = 4.0 * r;
        assert_close(t.r2, w2 / w1, 1e-14, "r2");
        assert_close(t.d, wd / w1, 1e-14, "d");
    }

    #[test]
    fn one_d_inversions_agree_with_closed_triples() {
        for (r, rho) in [(2.0, 0.0), (2.0, 0.5), (1.5, 0.3), (3.0, 1.7)] {
            let a = ratios_from_1d_inversions(r, rho, Branch::Outside).unwrap();
            let b = p1_ratio_outside(r, rho).unwrap();
            assert!(a.approx_eq(&b, 1e-13), "outside (R={r}, rho={rho}): {a:?} vs {b:?}");
        }
        for (r, rho) in [(2.0, 1.2), (2.0, 1.7), (1.5, 0.9)] {
            let a = ratios_from_1d_inversions(r, rho, Branch::Inside).unwrap();
            let b = p1_ratio_inside(r, rho).unwrap();
            assert!(a.approx_eq(&b, 1e-13), "inside (R={r}, rho={rho}): {a:?} vs {b:?}");
        }
    }

    #[test]
    fn p2_isomorphism() {
        // (1 : 1 : 2R) -> (R+1 : R-1 : 0)
        let r = 2.5;
        let p2 = p2_from_p1(&p1_ratio_outside(r, 0.0).unwrap()).unwrap();
        assert_close(p2.r2, (r - 1.0) / (r + 1.0), 1e-14, "r~2");
        assert_close(p2.d, 0.0, 1e-14, "d~");

        let t = RatioTriple::new(1.0, 0.5, 3.0).unwrap();
        let p2 = p2_from_p1(&t).unwrap();
        assert_close(p2.r2, 0.75 / 2.25, 1e-15, "r~2");
        assert_close(p2.d, 0.5 / 2.25, 1e-15, "d~");

        let degenerate = RatioTriple::new(1.0, 0.5, 1.5).unwrap();
        assert!(matches!(
            p2_from_p1(&degenerate),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn maxwell_values_and_projective_invariance() {
        // at rho = 0: (1 : 0 : 1/R)
        let m = maxwell_from_p1(&p1_ratio_outside(2.0, 0.0).unwrap());
        assert_close(m.f, 0.0, 1e-15, "f");
        assert_close(m.l_minus_a, 0.5, 1e-15, "L-a");

        // (2, 0.5): (1 : 2 rho / (R^2-rho^2-1) : (R^2+rho^2-1)/(R(R^2-rho^2-1)))
        //         = (1 : 4/11 : 13/22), cross-checked as (r1+r2)/d = 6.5/11
        let m = maxwell_from_p1(&p1_ratio_outside(2.0, 0.5).unwrap());
        assert_close(m.f, 4.0 / 11.0, 1e-14, "f");
        assert_close(m.l_minus_a, 13.0 / 22.0, 1e-14, "L-a");

        let t = p1_ratio_outside(2.0, 0.5).unwrap();
        let scaled = RatioTriple::new(7.0 * t.r1, 7.0 * t.r2, 7.0 * t.d).unwrap();
        assert!(maxwell_from_p1(&t).approx_eq(&maxwell_from_p1(&scaled), 1e-15));
    }

    #[test]
    fn duality_closed_values() {
        // (sqrt2, rho) -> (sqrt2, (1-rho)/(1+rho)), fixed point sqrt2 - 1
        let (rd, rhod) = dual_params(SQRT2, 0.25).unwrap();
        assert_close(rd, SQRT2, 1e-14, "R'");
        assert_close(rhod, 0.75 / 1.25, 1e-14, "rho'");
        let fix = SQRT2 - 1.0;
        let (_, rf) = dual_params(SQRT2, fix).unwrap();
        assert_close(rf, fix, 1e-14, "fixed point");

        // (2, 0) -> (2/sqrt3, 1/sqrt3)
        let (rd, rhod) = dual_params(2.0, 0.0).unwrap();
        assert_close(rd, 2.0 / 3.0_f64.sqrt(), 1e-14, "R'");
        assert_close(rhod, 1.0 / 3.0_f64.sqrt(), 1e-14, "rho'");
    }

    #[test]
    fn duality_is_involution() {
        let (rd, rhod) = dual_params(2.0, 0.4).unwrap();
        let (rb, rhob) = dual_params(rd, rhod).unwrap();
        assert_close(rb, 2.0, 1e-13, "R back");
        assert_close(rhob, 0.4, 1e-13, "rho back");
    }

    #[test]
    fn duality_maps_inside_ratio_to_outside_ratio() {
        // the inside ratio evaluated at the dual parameters reproduces the
        // outside ratio: p1_ratio_inside(dual(R, rho)) == p1_ratio_outside(R, rho)
        for (r, rho) in [(2.0, 0.0), (2.0, 0.7), (1.5, 0.2), (3.0, 1.3), (1.2, 0.15)] {
            let outside = p1_ratio_outside(r, rho).unwrap();
            let (rd, rhod) = dual_params(r, rho).unwrap();
            let inside_dual = p1_ratio_inside(rd, rhod).unwrap();
            assert!(
                outside.approx_eq(&inside_dual, 1e-12),
                "(R={r}, rho={rho}): {outside:?} vs {inside_dual:?}"
            );
        }
    }

    #[test]
    fn family_parameter_on_plane_points() {
        // diameter endpoints and the top of the family circle all classify
        // to the same parameter
        let (r, rho) = (2.0, 0.4);
        let far = (r * r - 1.0) / rho;
        let center = 0.5 * (rho + far);
        let radius = 0.5 * (far - rho);
        for p in [
            PlanePoint::new(rho, 0.0).unwrap(),
            PlanePoint::new(far, 0.0).unwrap(),
            PlanePoint::new(center, radius).unwrap(),
            PlanePoint::new(center, -radius).unwrap(),
        ] {
            assert_close(family_parameter(&p, r).unwrap(), rho, 1e-12, "family parameter");
        }
        assert!(PlanePoint::new(-0.1, 0.0).is_err());
    }

    #[test]
    fn classify_center_examples() {
        assert_close(classify_center([0.3, 0.0, 0.0], 2.0).unwrap(), 0.3, 1e-14, "x-axis");
        assert_close(classify_center([0.0, 0.0, 5.0], 2.0).unwrap(), 0.0, 1e-14, "z-axis");
        // far endpoint of the same family circle
        let far = (4.0 - 1.0) / 0.3;
        assert_close(classify_center([far, 0.0, 0.0], 2.0).unwrap(), 0.3, 1e-12, "far endpoint");
        // on the torus itself -> sentinel parameter R-1
        assert_close(classify_center([3.0, 0.0, 0.0], 2.0).unwrap(), 1.0, 1e-14, "on torus");
        // the degenerate point-circle at (sqrt(R^2-1), 0): the double root
        // costs half the digits, so only ~1e-8 is attainable there
        let s = 3.0_f64.sqrt();
        assert_close(classify_center([s, 0.0, 0.0], 2.0).unwrap(), s, 1e-7, "self-dual point");
    }

    #[test]
    fn classify_center_constant_on_family_torus() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &r in &[1.5, 2.0, 3.0] {
            let s = (r * r - 1.0_f64).sqrt();
            for _ in 0..40 {
                let rho = rng.gen_range(0.1 * s..0.95 * s);
                let far = (r * r - 1.0) / rho;
                let center = 0.5 * (rho + far);
                let radius = 0.5 * (far - rho);
                let t = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
                let theta = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
                let (pc, pz) = (center + radius * t.cos(), radius * t.sin());
                let p = [pc * theta.cos(), pc * theta.sin(), pz];
                let got = classify_center(p, r).unwrap();
                assert_close(got, rho, 1e-10, "family parameter");
            }
        }
    }

    #[test]
    fn canonicalize_branches() {
        assert_eq!(
            canonicalize(2.0, 0.5).unwrap(),
            ShapeClass::Toroidal { r_major: 2.0, rho: 0.5 }
        );
        assert!(canonicalize(2.0, 1.0).unwrap().is_round_sphere());
        match canonicalize(2.0, 1.5).unwrap() {
            ShapeClass::Toroidal { r_major, rho } => {
                let s = 3.0_f64.sqrt();
                assert_close(r_major, 2.0 / s, 1e-14, "R'");
                assert_close(rho, (s - 1.5) / ((s + 1.5) * s), 1e-14, "rho'");
                assert!(rho < r_major - 1.0);
            }
            other => panic!("expected toroidal class, got {other:?}"),
        }
    }

    #[test]
    fn phi_values_and_roundtrip() {
        let (a, b) = phi(2.0, 0.0).unwrap();
        assert_close(a, 0.0, 1e-15, "a at axis");
        assert_close(b, 0.5, 1e-15, "b at axis");

        let (a, b) = phi(2.0, 0.5).unwrap();
        assert_close(a, 4.0 / 11.0, 1e-14, "a");
        assert_close(b, 13.0 / 22.0, 1e-14, "b");
        let (r, rho) = phi_inv(a, b).unwrap();
        assert_close(r, 2.0, 1e-13, "R roundtrip");
        assert_close(rho, 0.5, 1e-13, "rho roundtrip");

        // a = 0 limit
        let (r, rho) = phi_inv(0.0, 0.5).unwrap();
        assert_close(r, 2.0, 1e-15, "R at a=0");
        assert_eq!(rho, 0.0);
    }

    #[test]
    fn phi_image_in_target_domain() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let r = 1.0 + rng.gen_range(0.01..9.0);
            let rho = rng.gen_range(0.0..1.0) * (r - 1.0) * 0.999999;
            let (a, b) = phi(r, rho).unwrap();
            assert!((0.0..1.0).contains(&a), "a = {a} for (R={r}, rho={rho})");
            assert!(b > a && b < 1.0, "b = {b}, a = {a} for (R={r}, rho={rho})");
        }
    }

    #[test]
    fn clifford_parameter_conversion() {
        assert_close(alpha_to_r(std::f64::consts::FRAC_PI_4).unwrap(), SQRT2, 1e-15, "pi/4");
        assert_close(alpha_to_r(std::f64::consts::FRAC_PI_6).unwrap(), 2.0, 1e-14, "pi/6");
        for i in 1..20 {
            let alpha = i as f64 * std::f64::consts::FRAC_PI_2 / 20.0;
            let back = r_to_alpha(alpha_to_r(alpha).unwrap()).unwrap();
            assert_close(back, alpha, 1e-13, "roundtrip");
        }
        assert!(alpha_to_r(0.0).is_err());
        assert!(alpha_to_r(std::f64::consts::FRAC_PI_2).is_err());
    }

    #[test]
    fn shape_equality() {
        // canonicalizing the dual parameters of (2, 0.5) lands back on (2, 0.5):
        // the dual rho lies on the inside branch of the dual torus, so
        // canonicalize dualizes once more
        let s1 = canonicalize(2.0, 0.5).unwrap();
        let (rd, rhod) = dual_params(2.0, 0.5).unwrap();
        assert!(rhod > rd - 1.0, "dual rho should sit on the inside branch");
        let s2 = canonicalize(rd, rhod).unwrap();
        assert!(shapes_equal(&s1, &s2, 1e-12), "{s1:?} vs {s2:?}");

        assert!(!shapes_equal(
            &canonicalize(2.0, 0.5).unwrap(),
            &canonicalize(2.0, 0.6).unwrap(),
            1e-9
        ));
        assert!(shapes_equal(
            &ShapeClass::RoundSphere,
            &ShapeClass::RoundSphere,
            1e-12
        ));
        assert!(!shapes_equal(
            &ShapeClass::RoundSphere,
            &canonicalize(2.0, 0.5).unwrap(),
            1e-9
        ));
    }
}
