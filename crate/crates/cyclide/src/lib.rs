//! Areas, volumes and isoperimetric ratios of toroidal Dupin cyclides —
//! the sphere inversions of a torus of revolution with major radius `R > 1`
//! and minor radius 1.
//!
//! The crate provides two independent computation routes and the calculus on
//! the space of shapes:
//!
//! - [`hypergeom`]: the fixed 2F1/3F2 kernels behind the closed forms,
//!   evaluated by certified direct summation on `x in [0, 1]`;
//! - [`iso`]: closed-form area/volume/ratio, Taylor coefficients, the
//!   monotonicity suite and the search for distinct shapes sharing a ratio;
//! - [`quadrature`]: a brute-force oracle integrating the conformally
//!   distorted surface and volume elements, used to validate the closed
//!   forms;
//! - [`geometry`]: symmetry-plane circle ratios, Maxwell ratios, the duality
//!   involution on `(R, rho)`, classification of arbitrary inversion centers
//!   and canonical shape classes;
//! - [`report`] / [`verify`]: machine-readable records and the invariant
//!   suites driven by the `cyclide` binary.

pub mod error;
pub mod geometry;
pub mod hypergeom;
pub mod iso;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{
    alpha_to_r, canonicalize, classify_center, dual_params, family_parameter, maxwell_from_p1,
    p1_ratio_inside, p1_ratio_outside, p2_from_p1, phi, phi_inv, r_to_alpha,
    ratios_from_1d_inversions, shapes_equal, Branch, MaxwellRatio, PlanePoint, RatioTriple,
    ShapeClass,
};
pub use hypergeom::{check_3f2_identity, eval_2f1, eval_vol3f2, HGKernel, KernelKind};
pub use iso::{
    area_closed, f_eval, find_iso_matches, g_eval, h_eval, iso_closed, iso_full_domain,
    monotonicity_check, overlap_lower_bound, p_lower_bound, p_poly, taylor_coeffs_area,
    taylor_coeffs_volume, u_seq, volume_closed, IsoPoint, MonotonicityReport,
};
pub use quadrature::{
    area_oracle, convergence_report, gauss_legendre_unit, iso_oracle, oracle_converged,
    volume_oracle, InvertedTorusIntegrand, OracleValues, QuadratureSpec,
};
pub use report::{compute_record, sweep_points, OutputFormat, OutputRecord, RunConfig, SweepPoint};
pub use verify::{run_all, SuiteResult, VerifyConfig, VerifyReport};
