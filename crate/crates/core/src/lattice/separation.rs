use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polytope::RationalPolytope;
use crate::rational;

use super::monomial;

/// Numerical floor below which two monomial values count as equal.
pub const SEPARATION_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    ModulusDiffers,
    ArgumentDiffers,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::ModulusDiffers => "modulus-differs",
            WitnessKind::ArgumentDiffers => "argument-differs",
        }
    }
}

/// A lattice exponent `α ∈ R_+S ∩ N^n` whose monomial takes different values
/// at the two points.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationCertificate {
    pub alpha: Vec<i64>,
    pub kind: WitnessKind,
    /// `|z^α - w^α|` as evaluated at construction.
    pub difference: f64,
}

fn require_full_dimensional(s: &RationalPolytope) -> Result<()> {
    if s.is_full_dimensional() {
        Ok(())
    } else {
        Err(Error::EmptyInterior {
            affine_dim: s.affine_dim(),
            dim: s.dim(),
        })
    }
}

/// Lattice points of degree `d` in decreasing lexicographic order.
fn lattice_points_of_degree(n: usize, d: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            rec(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Cone lattice points by increasing degree `|α|_1`.
fn cone_lattice_points(s: &RationalPolytope) -> impl Iterator<Item = Vec<i64>> + '_ {
    let n = s.dim();
    (1..).flat_map(move |d| {
        lattice_points_of_degree(n, d)
            .into_iter()
            .filter(|a| s.cone_contains_i64(a))
    })
}

/// `n` linearly independent lattice points of `R_+ S`, chosen greedily by
/// smallest degree.
pub fn independent_exponents(s: &RationalPolytope) -> Result<Vec<Vec<i64>>> {
    require_full_dimensional(s)?;
    let n = s.dim();
    let mut chosen: Vec<Vec<i64>> = Vec::with_capacity(n);
    for alpha in cone_lattice_points(s) {
        let mut rows: Vec<Vec<rational::Rat>> =
            chosen.iter().map(|a| rational::vec_from_i64(a)).collect();
        rows.push(rational::vec_from_i64(&alpha));
        if linalg::rank(&rows) == rows.len() {
            chosen.push(alpha);
            if chosen.len() == n {
                break;
            }
        }
    }
    Ok(chosen)
}

/// A lattice point `α` with `α + e_j ∈ R_+ S` for every `j`.
fn interior_exponent(s: &RationalPolytope) -> Vec<i64> {
    let n = s.dim();
    cone_lattice_points(s)
        .find(|a| {
            (0..n).all(|j| {
                let mut b = a.clone();
                b[j] += 1;
                s.cone_contains_i64(&b)
            })
        })
        .expect("a full-dimensional cone has interior lattice points")
}

fn log_modulus(z: &[Complex64]) -> Vec<f64> {
    z.iter().map(|c| c.norm().ln()).collect()
}

pub fn separate_points(
    s: &RationalPolytope,
    z: &[Complex64],
    w: &[Complex64],
) -> Result<SeparationCertificate> {
    let n = s.dim();
    for p in [z, w] {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
        if let Some(j) = p.iter().position(|c| c.norm() == 0.0) {
            return Err(Error::ZeroCoordinate(j));
        }
    }
    if z == w {
        return Err(Error::IdenticalPoints);
    }
    require_full_dimensional(s)?;

    let diff = |alpha: &[i64]| (monomial(z, alpha) - monomial(w, alpha)).norm();
    let independent = independent_exponents(s)?;
    let (xi, eta) = (log_modulus(z), log_modulus(w));

    let (kind, primary, candidates) = if xi != eta {
        // some independent exponent sees the difference of the log moduli
        let score = |a: &Vec<i64>| {
            a.iter()
                .zip(xi.iter().zip(&eta))
                .map(|(&k, (x, e))| k as f64 * (x - e))
                .sum::<f64>()
                .abs()
        };
        let best = independent
            .iter()
            .max_by(|a, b| score(a).total_cmp(&score(b)))
            .expect("n >= 1")
            .clone();
        (WitnessKind::ModulusDiffers, best, independent)
    } else {
        let alpha = interior_exponent(s);
        let mut cands = vec![alpha.clone()];
        for j in 0..n {
            let mut b = alpha.clone();
            b[j] += 1;
            cands.push(b);
        }
        let primary = if diff(&alpha) > SEPARATION_THRESHOLD {
            alpha
        } else {
            let j = (0..n)
                .max_by(|&a, &b| (z[a] - w[a]).norm().total_cmp(&(z[b] - w[b]).norm()))
                .expect("n >= 1");
            cands[j + 1].clone()
        };
        (WitnessKind::ArgumentDiffers, primary, cands)
    };

    let alpha = if diff(&primary) > SEPARATION_THRESHOLD {
        primary
    } else {
        candidates
            .into_iter()
            .max_by(|a, b| diff(a).total_cmp(&diff(b)))
            .expect("nonempty candidates")
    };
    let difference = diff(&alpha);
    if difference > SEPARATION_THRESHOLD {
        Ok(SeparationCertificate {
            alpha,
            kind,
            difference,
        })
    } else {
        Err(Error::Inseparable {
            threshold: SEPARATION_THRESHOLD,
        })
    }
}
