use num::bigint::BigInt;
use num::complex::Complex64;
use num::integer::Integer;
use num::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polytope::{combinations, RationalPolytope};
use crate::rational::{self, dot, Rat};

use super::monomial;
use super::snf::{int_determinant, integer_kernel, smith_normal_form, IntMatrix};

/// Lattice coordinates on `span_R S`.
///
/// The columns `L(e_1), ..., L(e_ℓ)` form a basis of `span_R S ∩ Z^n` in
/// which every point of `S` has nonnegative coordinates; the kernel
/// generators form a basis of `(span_R S)^⊥ ∩ Z^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeMap {
    pub dim: usize,
    pub ell: usize,
    /// The `ℓ` columns of `L`, each a vector in `Z^n`.
    pub columns: Vec<Vec<i64>>,
    /// The `n - ℓ` kernel generators `β'_k`.
    pub kernel: Vec<Vec<i64>>,
    /// Vertices of `T = L^{-1}(S) ⊂ Q^ℓ_+`.
    pub t_vertices: Vec<Vec<Rat>>,
}

fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(rational::bigint_to_i64).collect()
}

fn to_rat(v: &[BigInt]) -> Vec<Rat> {
    v.iter().cloned().map(Rat::from_integer).collect()
}

/// First nonzero entry positive.
fn sign_normalize(v: Vec<BigInt>) -> Vec<BigInt> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}

pub fn fiber_structure(s: &RationalPolytope) -> Result<LatticeMap> {
    let n = s.dim();
    let rows: IntMatrix = s
        .nonzero_vertices()
        .map(|v| rational::primitive_integer(v))
        .collect();
    let kernel: Vec<Vec<BigInt>> = integer_kernel(&rows, n)
        .into_iter()
        .map(sign_normalize)
        .collect();
    let ell = n - kernel.len();
    let kernel_i64 = kernel.iter().map(|k| to_i64_vec(k)).collect::<Result<Vec<_>>>()?;

    if ell == n {
        let columns = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        return Ok(LatticeMap {
            dim: n,
            ell,
            columns,
            kernel: kernel_i64,
            t_vertices: s.vertices().to_vec(),
        });
    }

    // B: a basis of the saturated lattice span_R S ∩ Z^n
    let basis: Vec<Vec<BigInt>> = integer_kernel(&kernel, n);
    debug_assert_eq!(basis.len(), ell);
    let basis_rat: Vec<Vec<Rat>> = basis.iter().map(|b| to_rat(b)).collect();
    let as_matrix: Vec<Vec<Rat>> = linalg::transpose(&basis_rat, n);
    let coords: Vec<Vec<Rat>> = s
        .vertices()
        .iter()
        .map(|v| linalg::solve(&as_matrix, v, ell).expect("vertex lies in its own span"))
        .collect();

    // Unimodular Q with Q y >= 0 on every vertex: the first row is positive
    // on the cone, the others are shifted by multiples of it until they are.
    let q: Vec<BigInt> = {
        let raw: Vec<Rat> = basis
            .iter()
            .map(|b| Rat::from_integer(b.iter().sum()))
            .collect();
        rational::primitive_integer(&raw)
    };
    let q_rat = to_rat(&q);
    let snf = smith_normal_form(&vec![q.clone()], ell);
    let v_rat: Vec<Vec<Rat>> = snf.v.iter().map(|r| to_rat(r)).collect();
    let v_inv = linalg::inverse(&v_rat).expect("unimodular");
    let mut qmat: Vec<Vec<Rat>> = vec![q_rat.clone()];
    for r in &v_inv[1..] {
        let shift = coords
            .iter()
            .filter(|y| y.iter().any(|c| !c.is_zero()))
            .map(|y| (-dot(r, y) / dot(&q_rat, y)).ceil())
            .max()
            .unwrap_or_else(Rat::zero);
        qmat.push(r.iter().zip(&q_rat).map(|(a, b)| a + &shift * b).collect());
    }
    let q_inv = linalg::inverse(&qmat).ok_or(Error::Solver("lattice change of basis".into()))?;
    let columns = (0..ell)
        .map(|i| {
            let col: Vec<Rat> = (0..n)
                .map(|r| (0..ell).map(|k| &basis_rat[k][r] * &q_inv[k][i]).sum())
                .collect();
            col.iter()
                .map(|c| rational::bigint_to_i64(&c.to_integer()))
                .collect()
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    let t_vertices = coords.iter().map(|y| linalg::mat_vec(&qmat, y)).collect();
    Ok(LatticeMap {
        dim: n,
        ell,
        columns,
        kernel: kernel_i64,
        t_vertices,
    })
}

impl LatticeMap {
    /// `L` as an `n × ℓ` row-major matrix.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|r| self.columns.iter().map(|c| c[r]).collect())
            .collect()
    }

    /// gcd of the `ℓ × ℓ` minors of `L`; equal to 1 exactly when the columns
    /// generate the full intersection lattice.
    pub fn minor_gcd(&self) -> BigInt {
        let m = self.matrix();
        combinations(self.dim, self.ell)
            .into_iter()
            .map(|rows| {
                let sub: IntMatrix = rows
                    .iter()
                    .map(|&r| m[r].iter().map(|&x| BigInt::from(x)).collect())
                    .collect();
                int_determinant(&sub)
            })
            .fold(BigInt::zero(), |a, b| a.gcd(&b))
    }

    /// `F_L(z) = (z^{L(e_1)}, ..., z^{L(e_ℓ)})`.
    pub fn apply(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.columns.iter().map(|c| monomial(z, c)).collect()
    }

    /// `Υ_z(t)_j = z_j ∏_k t_k^{β'_k[j]}`.
    pub fn fiber_point(&self, z: &[Complex64], t: &[Complex64]) -> Result<Vec<Complex64>> {
        if self.kernel.is_empty() {
            return Err(Error::EmptyKernel);
        }
        for (p, len) in [(z.len(), self.dim), (t.len(), self.kernel.len())] {
            if p != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: p,
                });
            }
        }
        for p in [z, t] {
            if let Some(j) = p.iter().position(|c| c.norm() == 0.0) {
                return Err(Error::ZeroCoordinate(j));
            }
        }
        Ok((0..self.dim)
            .map(|j| {
                let exps: Vec<i64> = self.kernel.iter().map(|b| b[j]).collect();
                z[j] * monomial(t, &exps)
            })
            .collect())
    }

    /// Coordinates `α'` with `α = L α'`; for `α ∈ R_+S ∩ N^n` they lie in
    /// `N^ℓ` and `z^α = F_L(z)^{α'}`.
    pub fn factor_exponent(&self, alpha: &[i64]) -> Result<Vec<i64>> {
        if alpha.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: alpha.len(),
            });
        }
        let m: Vec<Vec<Rat>> = self
            .matrix()
            .iter()
            .map(|r| rational::vec_from_i64(r))
            .collect();
        let target = rational::vec_from_i64(alpha);
        let sol = linalg::solve(&m, &target, self.ell)
            .filter(|x| linalg::mat_vec(&m, x) == target)
            .ok_or_else(|| {
                Error::PreconditionViolated(format!("{alpha:?} is not in the span of S"))
            })?;
        sol.iter()
            .map(|c| {
                if rational::is_integral(c) {
                    c.to_integer().to_i64().ok_or(Error::Overflow("exponent coordinate"))
                } else {
                    Err(Error::NotIntegral)
                }
            })
            .collect()
    }
}

pub fn fiber_through(
    s: &RationalPolytope,
    z: &[Complex64],
    t: &[Complex64],
) -> Result<Vec<Complex64>> {
    fiber_structure(s)?.fiber_point(z, t)
}
