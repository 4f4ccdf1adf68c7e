//! Evaluation of the four fixed hypergeometric kernels behind the closed-form
//! area, volume and isoperimetric-ratio expressions.
//!
//! All kernels are evaluated by direct summation of the defining series with a
//! certified tail bound, so the returned value carries an absolute error of at
//! most the requested tolerance everywhere on `x in [0, 1]`, including the
//! boundary `x = 1` where the terms decay only polynomially.
//!
//! The volume kernel is a 3F2 whose top/bottom parameter pair `(e+1, e)` with
//! `e = 3/(2 R^2 - 4)` is algebraically reduced to the per-term factor
//! `(e + n)/e = 1 + n/e` before any arithmetic. This keeps the kernel
//! well-defined when `e` is a negative integer (which happens for certain
//! `R in (1, sqrt 2)`) and degrades gracefully into the plain 2F1 limit as
//! `R -> sqrt 2` (`e -> inf`).

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Hard cap on the number of series terms.
pub const TERM_CAP: usize = 10_000_000;

/// Which of the four fixed kernels a [`HGKernel`] denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    /// 2F1(-1/2, -1/2; 1; x) — the area kernel.
    Area2F1,
    /// 3F2(-3/2, -3/2, e+1; 1, e; x) with e = 3/(2R^2-4) — the volume kernel.
    Vol3F2,
    /// 2F1(-3/2, -3/2; 1; x) — first auxiliary kernel of the identity suite.
    Aux2F1_32,
    /// 2F1(-1/2, -1/2; 2; x) — second auxiliary kernel of the identity suite.
    Aux2F1_12_2,
}

/// One of the four fixed hypergeometric kernels, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HGKernel {
    pub kind: KernelKind,
    /// Major radius; present only for the volume kernel.
    pub r_major: Option<f64>,
    /// Derived parameter e = 3/(2R^2-4); `None` flags the degenerate square
    /// torus where e is undefined and the kernel is 2F1(-3/2,-3/2;1;x).
    pub e: Option<f64>,
}

impl HGKernel {
    pub fn area() -> Self {
        HGKernel {
            kind: KernelKind::Area2F1,
            r_major: None,
            e: None,
        }
    }

    pub fn aux_32() -> Self {
        HGKernel {
            kind: KernelKind::Aux2F1_32,
            r_major: None,
            e: None,
        }
    }

    pub fn aux_12_2() -> Self {
        HGKernel {
            kind: KernelKind::Aux2F1_12_2,
            r_major: None,
            e: None,
        }
    }

    pub fn volume(r_major: f64) -> Result<Self> {
        if !(r_major > 1.0) {
            return Err(Error::Domain(format!(
                "volume kernel requires R > 1, got {r_major}"
            )));
        }
        let denom = 2.0 * r_major * r_major - 4.0;
        let e = 3.0 / denom;
        Ok(HGKernel {
            kind: KernelKind::Vol3F2,
            r_major: Some(r_major),
            e: if e.is_finite() { Some(e) } else { None },
        })
    }

    /// Closed value of the kernel at `x = 1`.
    ///
    /// The three 2F1 kernels follow from the Gauss summation; the 3F2 value
    /// is `16 R^2 / (3 pi)`.
    pub fn boundary_value(&self) -> f64 {
        match self.kind {
            KernelKind::Area2F1 => 4.0 / PI,
            KernelKind::Aux2F1_32 => 32.0 / (3.0 * PI),
            KernelKind::Aux2F1_12_2 => 32.0 / (9.0 * PI),
            KernelKind::Vol3F2 => {
                let r = self.r_major.expect("volume kernel carries R");
                16.0 * r * r / (3.0 * PI)
            }
        }
    }

    /// Evaluate the kernel at `x in [0, 1]` with absolute error `<= tol`.
    ///
    /// Within `1e-12` of `x = 1` the closed boundary value is returned; the
    /// substitution error is bounded by `F'(1) * (1 - x)` and `F'(1)` is of
    /// the order of the kernel value itself, so the snap stays within a few
    /// ulps relative.
    pub fn eval(&self, x: f64, tol: f64) -> Result<f64> {
        if (0.0..=1.0).contains(&x) && 1.0 - x <= 1e-12 {
            return Ok(self.boundary_value());
        }
        match self.kind {
            KernelKind::Area2F1 => eval_2f1(-0.5, -0.5, 1.0, x, tol),
            KernelKind::Aux2F1_32 => eval_2f1(-1.5, -1.5, 1.0, x, tol),
            KernelKind::Aux2F1_12_2 => eval_2f1(-0.5, -0.5, 2.0, x, tol),
            KernelKind::Vol3F2 => eval_vol3f2(self.r_major.expect("volume kernel carries R"), x, tol),
        }
    }
}

/// Running state of a certified series summation: compensated partial sum,
/// current term, term index and the current rigorous bound on the dropped
/// tail.
#[derive(Debug, Clone)]
pub struct SeriesAccumulator {
    pub partial_sum: f64,
    compensation: f64,
    pub term: f64,
    pub n: usize,
    pub tail_bound: f64,
}

impl SeriesAccumulator {
    fn new() -> Self {
        SeriesAccumulator {
            partial_sum: 0.0,
            compensation: 0.0,
            term: 0.0,
            n: 0,
            tail_bound: f64::INFINITY,
        }
    }

    /// Kahan-compensated add of the next term.
    fn push(&mut self, term: f64) {
        self.term = term;
        let y = term - self.compensation;
        let t = self.partial_sum + y;
        self.compensation = (t - self.partial_sum) - y;
        self.partial_sum = t;
        self.n += 1;
    }
}

/// Smallest index from which `|t_{j+1}/t_j| <= j/(j+2)` holds for every later
/// index of a 2F1 term sequence with bottom parameter `c`, top parameters
/// `a, b` and argument `x <= 1`. Beyond it the telescoping majorant
/// `prod j/(j+2)` certifies `sum_{j>k} |t_j| <= |t_k| * k`.
///
/// The ratio condition amounts to the quadratic
/// `(a+b+1-c) j^2 + (ab+2a+2b-c) j + 2ab <= 0`, which for `c - a - b > 1`
/// holds from its larger root on; `None` when `c - a - b <= 1`.
fn poly_tail_start(a: f64, b: f64, c: f64) -> Option<usize> {
    let lead = a + b + 1.0 - c;
    if lead >= 0.0 {
        return None;
    }
    let lin = a * b + 2.0 * (a + b) - c;
    let cst = 2.0 * a * b;
    let disc = lin * lin - 4.0 * lead * cst;
    let root = if disc > 0.0 {
        // larger root of a downward parabola
        (-lin - disc.sqrt()) / (2.0 * lead)
    } else {
        0.0
    };
    // also need both top factors (j+a), (j+b) of fixed sign
    let start = root.max(-a).max(-b).max(1.0).ceil() + 1.0;
    Some(start as usize)
}

/// Smallest index from which `|t_{j+1}/t_j| <= q` holds for every later index,
/// with `q = (1+x)/2 < 1`; the geometric tail bound `|t_k| q/(1-q)` applies
/// beyond it. Only meaningful for `x < 1`.
fn geo_tail_start(a: f64, b: f64, c: f64, x: f64) -> Option<usize> {
    if x >= 1.0 {
        return None;
    }
    let q = 0.5 * (1.0 + x);
    // |(j+a)(j+b)| x <= q (j+c)(j+1)  for all j beyond the larger root of
    // (x-q) j^2 + (x(a+b) - q(c+1)) j + (x ab - q c) = 0
    let lead = x - q;
    let lin = x * (a + b) - q * (c + 1.0);
    let cst = x * a * b - q * c;
    let disc = lin * lin - 4.0 * lead * cst;
    let root = if disc > 0.0 {
        (-lin - disc.sqrt()) / (2.0 * lead)
    } else {
        0.0
    };
    let start = root.max(-a).max(-b).max(1.0).ceil() + 1.0;
    Some(start as usize)
}

/// Gauss hypergeometric series `2F1(a, b; c; x)` on `x in [0, 1]`, summed to
/// an absolute error of at most `tol`.
///
/// At `x = 1` the series is summed directly; the certified stopping rule
/// needs `c - a - b > 1` there (all fixed kernels satisfy it with room).
pub fn eval_2f1(a: f64, b: f64, c: f64, x: f64, tol: f64) -> Result<f64> {
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::DivergentParameters(format!(
            "2F1 bottom parameter c = {c} is a nonpositive integer"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("2F1 argument x = {x} not in [0, 1]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if x == 1.0 && c - a - b <= 0.0 {
        return Err(Error::DivergentParameters(format!(
            "2F1 diverges at x = 1 for c - a - b = {} <= 0",
            c - a - b
        )));
    }

    let poly_start = poly_tail_start(a, b, c);
    let geo_start = geo_tail_start(a, b, c, x);
    let geo_q = 0.5 * (1.0 + x);

    let mut acc = SeriesAccumulator::new();
    let mut term = 1.0_f64;
    for n in 0..TERM_CAP {
        acc.push(term);
        let nf = n as f64;
        let next = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        if next == 0.0 {
            // terminating series (a or b a nonpositive integer)
            acc.tail_bound = 0.0;
            return Ok(acc.partial_sum);
        }
        let k = n + 1;
        if let Some(s) = poly_start {
            if k >= s {
                acc.tail_bound = next.abs() * k as f64;
                if acc.tail_bound <= tol {
                    acc.push(next);
                    return Ok(acc.partial_sum);
                }
            }
        }
        if let Some(s) = geo_start {
            if k >= s {
                let bound = next.abs() * geo_q / (1.0 - geo_q);
                if bound <= tol {
                    acc.tail_bound = bound;
                    acc.push(next);
                    return Ok(acc.partial_sum);
                }
            }
        }
        term = next;
    }
    Err(Error::NoConvergence(format!(
        "2F1({a},{b};{c};{x}) did not reach tol = {tol} within {TERM_CAP} terms"
    )))
}

/// The volume kernel `3F2(-3/2, -3/2, e+1; 1, e; x)` with `e = 3/(2R^2-4)`,
/// summed via the reduced terms `b_n * (1 + n/e)` where
/// `b_n = [(-3/2)_n]^2 / ((1)_n n!) x^n`.
///
/// At `R = sqrt 2` (e undefined) this is the `e -> inf` limit
/// `2F1(-3/2, -3/2; 1; x)`.
pub fn eval_vol3f2(r_major: f64, x: f64, tol: f64) -> Result<f64> {
    if !(r_major > 1.0) {
        return Err(Error::Domain(format!(
            "volume kernel requires R > 1, got {r_major}"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("3F2 argument x = {x} not in [0, 1]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let denom = 2.0 * r_major * r_major - 4.0;
    if denom == 0.0 {
        return eval_2f1(-1.5, -1.5, 1.0, x, tol);
    }
    let e = 3.0 / denom;
    let e_abs = e.abs();

    // For j >= 4 both |b_{j+1}/b_j| <= j/(j+2) and the same for j*b_j, so
    //   sum_{j>k} b_j |1 + j/e| <= sum_{j>k} b_j (1 + j/e_abs)
    //                           <= b_k * k * (1 + k/e_abs).
    const TAIL_START: usize = 4;

    let mut acc = SeriesAccumulator::new();
    let mut base = 1.0_f64; // b_n
    for n in 0..TERM_CAP {
        let nf = n as f64;
        acc.push(base * (1.0 + nf / e));
        let next_base = base * {
            let t = nf - 1.5;
            t * t / ((nf + 1.0) * (nf + 1.0))
        } * x;
        if next_base == 0.0 {
            acc.tail_bound = 0.0;
            return Ok(acc.partial_sum);
        }
        let k = n + 1;
        if k >= TAIL_START {
            let kf = k as f64;
            acc.tail_bound = next_base * kf * (1.0 + kf / e_abs);
            if acc.tail_bound <= tol {
                acc.push(next_base * (1.0 + kf / e));
                return Ok(acc.partial_sum);
            }
        }
        base = next_base;
    }
    Err(Error::NoConvergence(format!(
        "3F2(R = {r_major}; x = {x}) did not reach tol = {tol} within {TERM_CAP} terms"
    )))
}

/// Residual `|LHS - RHS|` of the contiguous identity
/// `3F2(...; x) = 2F1(-3/2,-3/2;1;x) + (3/2)(R^2-2) x 2F1(-1/2,-1/2;2;x)`,
/// used by the verification suite.
pub fn check_3f2_identity(r_major: f64, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "identity check requires x in [0, 1), got {x}"
        )));
    }
    let tol = 1e-15;
    let lhs = eval_vol3f2(r_major, x, tol)?;
    let rhs = eval_2f1(-1.5, -1.5, 1.0, x, tol)?
        + 1.5 * (r_major * r_major - 2.0) * x * eval_2f1(-0.5, -0.5, 2.0, x, tol)?;
    Ok((lhs - rhs).abs())
}
