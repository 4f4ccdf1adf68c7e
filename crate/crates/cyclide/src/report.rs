//! Machine-readable output: per-point records combining closed forms with
//! oracle cross-checks, and CSV/JSON emitters whose headers embed the full
//! run configuration for reproducibility.

use crate::error::Result;
use crate::geometry::{canonicalize, ShapeClass};
use crate::iso::{area_closed, iso_closed, iso_full_domain, volume_closed};
use crate::quadrature::{oracle_converged, InvertedTorusIntegrand, QuadratureSpec};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Run configuration, serialized into every report header.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunConfig {
    pub tolerance: f64,
    pub n_angular: usize,
    pub n_radial: usize,
    pub format: OutputFormat,
    /// Grid count for sweeps.
    pub n_points: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerance: 1e-10,
            n_angular: 256,
            n_radial: 64,
            format: OutputFormat::Csv,
            n_points: 200,
        }
    }
}

impl RunConfig {
    pub fn quadrature(&self) -> QuadratureSpec {
        QuadratureSpec {
            n_angular: self.n_angular,
            n_radial: self.n_radial,
            target_tol: self.tolerance,
        }
    }

    pub fn header_lines(&self) -> Vec<String> {
        vec![
            format!("# tolerance = {}", self.tolerance),
            format!("# n_angular = {}", self.n_angular),
            format!("# n_radial = {}", self.n_radial),
            format!("# n_points = {}", self.n_points),
        ]
    }
}

/// Closed-form values, oracle values and their relative errors for one
/// parameter point. Oracle fields are absent when the oracle was skipped
/// (round sphere, non-canonical input resolved by duality, or a center too
/// close to the torus); area/volume refer to the canonical representative.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub r_major: f64,
    pub rho: f64,
    pub canonical: ShapeClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub area_closed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume_closed: Option<f64>,
    pub iso_closed: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub area_oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume_oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err_area: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err_volume: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err_iso: Option<f64>,
}

/// Fraction of `R - 1` below which the oracle is skipped: the integrand peak
/// near the torus would need resolutions past the refinement cap.
pub const ORACLE_SKIP_BAND: f64 = 1e-3;

/// Full record for `i_rho(T_R)`, `rho in [0, sqrt(R^2-1)]`. The oracle runs
/// on the canonical representative unless its center sits within
/// [`ORACLE_SKIP_BAND`]`*(R-1)` of the torus.
pub fn compute_record(r_major: f64, rho: f64, config: &RunConfig) -> Result<OutputRecord> {
    let canonical = canonicalize(r_major, rho)?;
    match canonical {
        ShapeClass::RoundSphere => Ok(OutputRecord {
            r_major,
            rho,
            canonical,
            area_closed: None,
            volume_closed: None,
            iso_closed: 1.0,
            area_oracle: None,
            volume_oracle: None,
            iso_oracle: None,
            rel_err_area: None,
            rel_err_volume: None,
            rel_err_iso: None,
        }),
        ShapeClass::Toroidal { r_major: rc, rho: pc } => {
            let a = area_closed(rc, pc)?;
            let v = volume_closed(rc, pc)?;
            let iso = iso_closed(rc, pc)?;
            let run_oracle = pc < (rc - 1.0) * (1.0 - ORACLE_SKIP_BAND);
            let mut rec = OutputRecord {
                r_major,
                rho,
                canonical,
                area_closed: Some(a),
                volume_closed: Some(v),
                iso_closed: iso,
                area_oracle: None,
                volume_oracle: None,
                iso_oracle: None,
                rel_err_area: None,
                rel_err_volume: None,
                rel_err_iso: None,
            };
            if run_oracle {
                let integrand = InvertedTorusIntegrand::new(rc, pc)?;
                let o = oracle_converged(&integrand, &config.quadrature())?;
                rec.area_oracle = Some(o.area);
                rec.volume_oracle = Some(o.volume);
                rec.iso_oracle = Some(o.iso);
                rec.rel_err_area = Some((a / o.area - 1.0).abs());
                rec.rel_err_volume = Some((v / o.volume - 1.0).abs());
                rec.rel_err_iso = Some((iso / o.iso - 1.0).abs());
            }
            Ok(rec)
        }
    }
}

/// One sweep sample.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepPoint {
    pub rho: f64,
    pub iso: f64,
}

/// `(rho, iso)` samples of the full-domain curve on a uniform grid of
/// `[0, sqrt(R^2-1)]`; points evaluate independently and in parallel, output
/// order follows the grid.
pub fn sweep_points(r_major: f64, n_points: usize) -> Result<Vec<SweepPoint>> {
    if n_points < 2 {
        return Err(crate::error::Error::Domain(format!(
            "sweep needs at least 2 points, got {n_points}"
        )));
    }
    let s = (r_major * r_major - 1.0).sqrt();
    (0..n_points)
        .into_par_iter()
        .map(|i| {
            let rho = s * i as f64 / (n_points - 1) as f64;
            Ok(SweepPoint {
                rho,
                iso: iso_full_domain(r_major, rho)?,
            })
        })
        .collect()
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.17e}")).unwrap_or_default()
}

pub fn records_to_csv(config: &RunConfig, records: &[OutputRecord]) -> String {
    let mut out = config.header_lines().join("\n");
    out.push('\n');
    out.push_str(
        "r_major,rho,canonical_shape,canonical_r,canonical_rho,area_closed,volume_closed,iso_closed,area_oracle,volume_oracle,iso_oracle,rel_err_area,rel_err_volume,rel_err_iso\n",
    );
    for r in records {
        let (shape, cr, cp) = match r.canonical {
            ShapeClass::RoundSphere => ("round_sphere".to_string(), String::new(), String::new()),
            ShapeClass::Toroidal { r_major, rho } => (
                "toroidal".to_string(),
                format!("{r_major:.17e}"),
                format!("{rho:.17e}"),
            ),
        };
        out.push_str(&format!(
            "{:.17e},{:.17e},{},{},{},{},{},{:.17e},{},{},{},{},{},{}\n",
            r.r_major,
            r.rho,
            shape,
            cr,
            cp,
            opt(r.area_closed),
            opt(r.volume_closed),
            r.iso_closed,
            opt(r.area_oracle),
            opt(r.volume_oracle),
            opt(r.iso_oracle),
            opt(r.rel_err_area),
            opt(r.rel_err_volume),
            opt(r.rel_err_iso),
        ));
    }
    out
}

pub fn sweep_to_csv(config: &RunConfig, r_major: f64, points: &[SweepPoint]) -> String {
    let mut out = config.header_lines().join("\n");
    out.push_str(&format!("\n# r_major = {r_major}\n"));
    out.push_str("rho,iso\n");
    for p in points {
        out.push_str(&format!("{:.17e},{:.17e}\n", p.rho, p.iso));
    }
    out
}

#[derive(Serialize)]
struct JsonReport<'a, T: Serialize> {
    config: &'a RunConfig,
    data: &'a T,
}

pub fn to_json<T: Serialize>(config: &RunConfig, data: &T) -> String {
    serde_json::to_string_pretty(&JsonReport { config, data }).expect("serializable report")
}
