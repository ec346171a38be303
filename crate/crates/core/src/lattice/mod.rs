//! Integer linear algebra for the cone `R_+ S`: independent exponents,
//! monomial separation, proper monomial maps and the fiber structure of a
//! lower-dimensional `S`.

mod fiber;
mod separation;
pub mod snf;

pub use fiber::{fiber_structure, fiber_through, LatticeMap};
pub use separation::{independent_exponents, separate_points, SeparationCertificate, WitnessKind};

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rat};

/// `z^alpha` for an integer exponent (negative powers allowed).
pub fn monomial(z: &[Complex64], alpha: &[i64]) -> Complex64 {
    z.iter()
        .zip(alpha)
        .fold(Complex64::new(1.0, 0.0), |acc, (zi, &a)| acc * zi.powi(a as i32))
}

/// The box `∏ [c_j, d_j]` in logarithmic coordinates containing the preimage
/// of the polyannulus `{r <= |w_k| <= R}` under `z -> (z^{α_1}, ..., z^{α_n})`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogBox {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Inverse of the exponent matrix (rows `α_k`).
    pub inverse: Vec<Vec<Rat>>,
}

impl LogBox {
    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(v, (lo, hi))| *v >= lo - tol && *v <= hi + tol)
    }
}

/// In logarithmic coordinates the preimage is `{x : log r <= <α_k, x> <= log R}`,
/// the image of a cube under `A^{-1}`; the box is its coordinatewise range.
pub fn proper_box_pullback(alphas: &[Vec<i64>], inner: f64, outer: f64) -> Result<LogBox> {
    if !(inner > 0.0 && inner < outer && outer.is_finite()) {
        return Err(Error::InvalidRadii { inner, outer });
    }
    let n = alphas.len();
    if let Some(a) = alphas.iter().find(|a| a.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.len(),
        });
    }
    let a: Vec<Vec<Rat>> = alphas.iter().map(|a| rational::vec_from_i64(a)).collect();
    let inverse = linalg::inverse(&a).ok_or(Error::SingularExponents)?;
    let (lo, hi) = (inner.ln(), outer.ln());
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for row in &inverse {
        let (mut l, mut u) = (0.0, 0.0);
        for c in row {
            let c = rational::to_f64(c);
            let (a, b) = (c * lo, c * hi);
            l += a.min(b);
            u += a.max(b);
        }
        lower.push(l);
        upper.push(u);
    }
    Ok(LogBox {
        lower,
        upper,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn identity_box() {
        let b = proper_box_pullback(&[vec![1, 0], vec![0, 1]], 1.0 / E, E).unwrap();
        for (l, u) in b.lower.iter().zip(&b.upper) {
            assert!((l + 1.0).abs() < 1e-15 && (u - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn sheared_box_is_tight() {
        let b = proper_box_pullback(&[vec![1, 0], vec![1, 1]], 1.0 / E, E).unwrap();
        let expect = [(-1.0, 1.0), (-2.0, 2.0)];
        for ((l, u), (el, eu)) in b.lower.iter().zip(&b.upper).zip(expect) {
            assert!((l - el).abs() < 1e-14 && (u - eu).abs() < 1e-14);
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            proper_box_pullback(&[vec![1, 0], vec![0, 1]], 2.0, 1.0),
            Err(Error::InvalidRadii { .. })
        ));
        assert_eq!(
            proper_box_pullback(&[vec![1, 1], vec![2, 2]], 0.5, 2.0),
            Err(Error::SingularExponents)
        );
    }

    #[test]
    fn monomial_negative_powers() {
        let z = [Complex64::new(2.0, 0.0), Complex64::new(0.0, 1.0)];
        let v = monomial(&z, &[-1, 2]);
        assert!((v - Complex64::new(-0.5, 0.0)).norm() < 1e-15);
    }
}
