//! Cone-supported power series, their truncations into `P^S_m`, measured
//! uniform errors on `K` and on its hull, escape directions for exponents
//! outside the cone, and hulls of domains of convergence.

mod domain;
mod series;

pub use domain::{convergence_hull, escape_witness, ConvergenceHull, EscapeWitness, ESCAPE_TIMES};
pub use series::{ConeSeries, SeriesKind, Term, OVERFLOW_GUARD};

use num::complex::Complex64;
use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::extremal::{hull_sampler, support_a, ReinhardtBody};
use crate::polytope::RationalPolytope;
use crate::rational;

/// Angles per dimension when a torus orbit has to be sampled.
pub const TORUS_ANGLES: usize = 64;

/// Relative slack allowed between hull and `K` sup norms.
pub const NORM_TOL: f64 = 1e-6;

/// The partial sum `f_N` and the least `m` with `f_N ∈ P^S_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncation {
    pub n: u64,
    pub terms: Vec<Term>,
    pub m_n: u64,
    /// A retained exponent outside `(m_N - 1) S`, certifying minimality.
    pub witness: Option<Vec<i64>>,
}

pub fn truncate(f: &ConeSeries, n: u64) -> Result<Truncation> {
    let s = f.polytope();
    let terms = f.terms_up_to(n);
    let mut m_n = 0u64;
    let mut witness = None;
    for t in &terms {
        let t_min = s
            .ray_scaling_lp(&rational::vec_from_i64(&t.alpha))
            .ok_or_else(|| Error::ExponentOutsideCone(t.alpha.clone()))?;
        let m = t_min
            .ceil()
            .to_integer()
            .to_u64()
            .ok_or(Error::Overflow("minimal scaling"))?;
        if m > m_n {
            m_n = m;
            witness = Some(t.alpha.clone());
        }
    }
    Ok(Truncation {
        n,
        terms,
        m_n,
        witness,
    })
}

/// Points `e^{x + iθ}` of the torus orbit of `e^x` used to estimate a sup.
fn orbit(x: &[f64], full: bool) -> Vec<Vec<Complex64>> {
    let base: Vec<f64> = x.iter().map(|v| v.exp()).collect();
    if !full {
        return vec![base.iter().map(|&r| Complex64::new(r, 0.0)).collect()];
    }
    let n = x.len();
    let total = TORUS_ANGLES.pow(n as u32);
    (0..total)
        .map(|mut code| {
            base.iter()
                .map(|&r| {
                    let k = code % TORUS_ANGLES;
                    code /= TORUS_ANGLES;
                    let theta = std::f64::consts::TAU * k as f64 / TORUS_ANGLES as f64;
                    Complex64::from_polar(r, theta)
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `(sup |f|, sup |f - f_N|)` over the torus orbits of the samples. Exact on
/// the samples for nonnegative coefficients, a lower bound otherwise.
pub fn sup_norms(f: &ConeSeries, n: u64, samples: &[Vec<f64>]) -> Result<(f64, f64)> {
    let full = !f.has_nonnegative_coefficients();
    let mut sup_f: f64 = 0.0;
    let mut sup_err: f64 = 0.0;
    for (i, x) in samples.iter().enumerate() {
        if x.len() != f.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.dim(),
                found: x.len(),
            });
        }
        for z in orbit(x, full) {
            let (total, tail) = f.eval_with_tail(&z, n, i)?;
            sup_f = sup_f.max(total.norm());
            sup_err = sup_err.max(tail.norm());
        }
    }
    Ok((sup_f, sup_err))
}

pub fn sup_error(f: &ConeSeries, n: u64, samples: &[Vec<f64>]) -> Result<f64> {
    Ok(sup_norms(f, n, samples)?.1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncationReport {
    pub n: u64,
    pub m_n: u64,
    pub sup_err_k: f64,
    pub sup_err_hull: f64,
    pub sup_f_k: f64,
    pub sup_f_hull: f64,
    /// `sup_hull |f| <= sup_K |f| (1 + NORM_TOL)`.
    pub norms_agree: bool,
    pub k_samples: usize,
    pub hull_samples: usize,
}

/// Samples of `K` itself: the points of `A`, then seeded points of `ch A`.
pub fn k_samples(
    s: &RationalPolytope,
    k: &ReinhardtBody,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    let mut out = k.full_support_points()?;
    out.extend(hull_sampler(s, k, 0.0, count, seed)?);
    Ok(out)
}

pub fn hull_vs_k_gap(
    f: &ConeSeries,
    n: u64,
    k: &ReinhardtBody,
    depth: f64,
    count: usize,
    seed: u64,
) -> Result<TruncationReport> {
    let mut reports = error_curve(f, &[n], k, depth, count, seed)?;
    Ok(reports.remove(0))
}

/// Reports for several truncation degrees over one set of samples.
pub fn error_curve(
    f: &ConeSeries,
    degrees: &[u64],
    k: &ReinhardtBody,
    depth: f64,
    count: usize,
    seed: u64,
) -> Result<Vec<TruncationReport>> {
    let s = f.polytope();
    let on_k = k_samples(s, k, count, seed)?;
    // K lies in its hull, so its samples are hull samples too
    let mut on_hull = on_k.clone();
    on_hull.extend(hull_sampler(s, k, depth, count, seed.wrapping_add(1))?);
    degrees
        .iter()
        .map(|&n| {
            let trunc = truncate(f, n)?;
            let (sup_f_k, sup_err_k) = sup_norms(f, n, &on_k)?;
            let (sup_f_hull, sup_err_hull) = sup_norms(f, n, &on_hull)?;
            Ok(TruncationReport {
                n,
                m_n: trunc.m_n,
                sup_err_k,
                sup_err_hull,
                sup_f_k,
                sup_f_hull,
                norms_agree: sup_f_hull <= sup_f_k * (1.0 + NORM_TOL),
                k_samples: on_k.len(),
                hull_samples: on_hull.len(),
            })
        })
        .collect()
}

/// For `Σ c^k z^{k α0}` the ratio `ρ = |c| e^{φ_A(α0)}` bounds `|c z^{α0}|` on
/// the hull (as `α0 ∈ Γ`), and the remainder after degree `N` is at most
/// `ρ^{⌊N/|α0|⌋+1} / (1 - ρ)`. `None` when `ρ >= 1` or the series is not
/// geometric.
pub fn geometric_tail_bound(f: &ConeSeries, k: &ReinhardtBody, n: u64) -> Result<Option<f64>> {
    let SeriesKind::Geometric { alpha0, c } = f.kind() else {
        return Ok(None);
    };
    let a: Vec<f64> = alpha0.iter().map(|&v| v as f64).collect();
    let rho = c.norm() * support_a(k, &a)?.exp();
    if rho >= 1.0 {
        return Ok(None);
    }
    let degree: u64 = alpha0.iter().map(|&v| v as u64).sum();
    Ok(Some(rho.powi((n / degree + 1) as i32) / (1.0 - rho)))
}
