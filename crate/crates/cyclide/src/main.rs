//! Command-line interface: compute, sweep, verify, classify and the
//! non-uniqueness demonstration, with CSV or JSON output.
//!
//! Exit codes: 0 success, 1 verification/numerical failure, 2 usage error.
//! `CYCLIDE_NUM_THREADS` bounds the worker pool for sweeps and suites.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclide::{
    alpha_to_r, canonicalize, classify_center, find_iso_matches, iso_full_domain,
    maxwell_from_p1, p1_ratio_outside, report, Error, OutputFormat, RunConfig, ShapeClass,
    VerifyConfig,
};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclide", version, about = "Isoperimetric calculus of toroidal Dupin cyclides")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct CommonOpts {
    /// Relative tolerance for oracle refinement (and, for `verify`, an
    /// override of every suite threshold).
    #[arg(long)]
    tol: Option<f64>,
    /// Starting trapezoid nodes per angular direction.
    #[arg(long = "n-angular", default_value_t = 256)]
    n_angular: usize,
    /// Gauss-Legendre nodes on the radial direction.
    #[arg(long = "n-radial", default_value_t = 64)]
    n_radial: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TorusArg {
    /// Major radius R > 1 of the torus of revolution (minor radius 1).
    #[arg(long = "R", visible_alias = "r-major")]
    r_major: Option<f64>,
    /// Clifford-torus parameter alpha in (0, pi/2); R = csc(alpha).
    #[arg(long, conflicts_with = "r_major")]
    alpha: Option<f64>,
}

impl TorusArg {
    fn resolve(&self) -> Result<f64, Error> {
        match (self.r_major, self.alpha) {
            (Some(r), None) => Ok(r),
            (None, Some(a)) => alpha_to_r(a),
            _ => Err(Error::Domain(
                "exactly one of --R and --alpha is required".into(),
            )),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form and oracle values at one (R, rho).
    Compute {
        #[command(flatten)]
        torus: TorusArg,
        /// Inversion-center distance rho in [0, sqrt(R^2-1)].
        #[arg(long)]
        rho: f64,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Isoperimetric-ratio curve over the full center family.
    Sweep {
        #[command(flatten)]
        torus: TorusArg,
        /// Number of grid points.
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run every module's invariant suite; exit 0 iff all pass.
    Verify {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Canonical shape class and ratio of the inversion about (x, y, z).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true)]
        y: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[command(flatten)]
        torus: TorusArg,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Two distinct shapes sharing the isoperimetric ratio v (R != sqrt 2).
    Nonunique {
        #[command(flatten)]
        torus: TorusArg,
        /// Target isoperimetric ratio inside the two-branch overlap.
        #[arg(long)]
        v: f64,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn run_config(opts: &CommonOpts, points: usize) -> RunConfig {
    RunConfig {
        tolerance: opts.tol.unwrap_or(1e-10),
        n_angular: opts.n_angular,
        n_radial: opts.n_radial,
        format: match opts.format {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        },
        n_points: points,
    }
}

fn emit(opts: &CommonOpts, text: String) -> Result<(), Error> {
    match &opts.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn shape_summary(shape: &ShapeClass) -> String {
    match shape {
        ShapeClass::RoundSphere => "round sphere".to_string(),
        ShapeClass::Toroidal { r_major, rho } => format!("toroidal (R = {r_major}, rho = {rho})"),
    }
}

fn cmd_compute(torus: &TorusArg, rho: f64, opts: &CommonOpts) -> Result<(), Error> {
    let r = torus.resolve()?;
    let config = run_config(opts, 1);
    let rec = report::compute_record(r, rho, &config)?;
    match config.format {
        OutputFormat::Csv => emit(opts, report::records_to_csv(&config, &[rec])),
        OutputFormat::Json => emit(opts, report::to_json(&config, &rec)),
    }
}

fn cmd_sweep(torus: &TorusArg, points: usize, opts: &CommonOpts) -> Result<(), Error> {
    let r = torus.resolve()?;
    let config = run_config(opts, points);
    let pts = report::sweep_points(r, points)?;
    match config.format {
        OutputFormat::Csv => emit(opts, report::sweep_to_csv(&config, r, &pts)),
        OutputFormat::Json => emit(opts, report::to_json(&config, &pts)),
    }
}

fn cmd_verify(opts: &CommonOpts) -> Result<bool, Error> {
    let cfg = VerifyConfig {
        quadrature: cyclide::QuadratureSpec {
            n_angular: opts.n_angular,
            n_radial: opts.n_radial,
            target_tol: 1e-10,
        },
        tol_override: opts.tol,
    };
    let started = std::time::Instant::now();
    let rep = cyclide::run_all(&cfg);
    let mut lines = Vec::new();
    for s in &rep.suites {
        lines.push(format!(
            "{:<20} {}  worst {:>10.3e}  threshold {:>8.1e}  {}",
            s.name,
            if s.pass { "PASS" } else { "FAIL" },
            s.worst,
            s.threshold,
            s.detail
        ));
    }
    lines.push(format!(
        "verify: {} ({} suites, {:.1} s)",
        if rep.pass { "PASS" } else { "FAIL" },
        rep.suites.len(),
        started.elapsed().as_secs_f64()
    ));
    emit(opts, lines.join("\n"))?;
    Ok(rep.pass)
}

fn cmd_classify(x: f64, y: f64, z: f64, torus: &TorusArg, opts: &CommonOpts) -> Result<(), Error> {
    let r = torus.resolve()?;
    let rho = classify_center([x, y, z], r)?;
    let shape = canonicalize(r, rho)?;
    let iso = iso_full_domain(r, rho)?;
    let config = run_config(opts, 1);
    match config.format {
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct ClassifyOut {
                r_major: f64,
                family_rho: f64,
                canonical: ShapeClass,
                iso: f64,
            }
            emit(
                opts,
                report::to_json(
                    &config,
                    &ClassifyOut {
                        r_major: r,
                        family_rho: rho,
                        canonical: shape,
                        iso,
                    },
                ),
            )
        }
        OutputFormat::Csv => {
            let mut text = format!("family rho = {rho}\nshape: {}\niso = {iso}", shape_summary(&shape));
            if shape.is_round_sphere() {
                text.push_str("\nnote: center lies on the torus; the inversion is a round sphere by convention");
            }
            emit(opts, text)
        }
    }
}

fn cmd_nonunique(torus: &TorusArg, v: f64, opts: &CommonOpts) -> Result<(), Error> {
    let r = torus.resolve()?;
    let (rho1, rho2) = find_iso_matches(r, v)?;
    let config = run_config(opts, 1);

    #[derive(serde::Serialize)]
    struct Witness {
        rho: f64,
        iso: f64,
        canonical: ShapeClass,
        maxwell_f: f64,
        maxwell_l_minus_a: f64,
    }
    let witness = |rho: f64| -> Result<Witness, Error> {
        let canonical = canonicalize(r, rho)?;
        let m = match &canonical {
            ShapeClass::Toroidal { r_major, rho } => {
                maxwell_from_p1(&p1_ratio_outside(*r_major, *rho)?)
            }
            ShapeClass::RoundSphere => {
                return Err(Error::Domain("witness degenerated to the round sphere".into()))
            }
        };
        Ok(Witness {
            rho,
            iso: iso_full_domain(r, rho)?,
            canonical,
            maxwell_f: m.f,
            maxwell_l_minus_a: m.l_minus_a,
        })
    };
    let rows = vec![witness(rho1)?, witness(rho2)?];
    match config.format {
        OutputFormat::Json => emit(opts, report::to_json(&config, &rows)),
        OutputFormat::Csv => {
            let mut out = config.header_lines().join("\n");
            out.push_str(&format!("\n# r_major = {r}\n# v = {v}\n"));
            out.push_str("rho,iso,canonical_r,canonical_rho,maxwell_f,maxwell_l_minus_a\n");
            for w in &rows {
                let (cr, cp) = match w.canonical {
                    ShapeClass::Toroidal { r_major, rho } => (r_major, rho),
                    ShapeClass::RoundSphere => unreachable!(),
                };
                out.push_str(&format!(
                    "{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}\n",
                    w.rho, w.iso, cr, cp, w.maxwell_f, w.maxwell_l_minus_a
                ));
            }
            emit(opts, out)
        }
    }
}

fn main() -> ExitCode {
    if let Ok(n) = std::env::var("CYCLIDE_NUM_THREADS") {
        if let Ok(n) = n.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute { torus, rho, opts } => cmd_compute(torus, *rho, opts).map(|()| true),
        Command::Sweep { torus, points, opts } => cmd_sweep(torus, *points, opts).map(|()| true),
        Command::Verify { opts } => cmd_verify(opts),
        Command::Classify { x, y, z, torus, opts } => {
            cmd_classify(*x, *y, *z, torus, opts).map(|()| true)
        }
        Command::Nonunique { torus, v, opts } => cmd_nonunique(torus, *v, opts).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
