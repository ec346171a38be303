use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpScalar, Relation};
use crate::polytope::RationalPolytope;
use crate::rational::{self, Rat};

use super::{dot_f64, max_dot, ReinhardtBody};

/// Tolerance separating inside from outside in hull queries.
pub const HULL_TOL: f64 = 1e-9;

/// `V^S_K(z) = sup_{s ∈ S} (<s, x> - φ_A(s))` at `x = Log z`, with the
/// maximizing `s` and a point of `A` attaining `φ_A(s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VskValue<T = f64> {
    pub value: T,
    pub maximizer_s: Vec<T>,
    pub active_a: Vec<T>,
}

/// Membership of `x` in `ch A - Γ°`.
#[derive(Debug, Clone, PartialEq)]
pub enum HullCertificate {
    /// `x = a - t` with `a ∈ ch A` and `t ∈ Γ°`.
    Inside { a: Vec<f64>, t: Vec<f64> },
    /// `ξ ∈ Γ` with `<x, ξ> - φ_A(ξ) = margin > 0`.
    Outside { separator: Vec<f64>, margin: f64 },
}

impl HullCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullCertificate::Inside { .. })
    }
}

/// The Legendre-Fenchel formula applies when `S` meets the open orthant or
/// `K` lies in the closure of its part in `C^{*n}`.
pub fn check_precondition(s: &RationalPolytope, k: &ReinhardtBody) -> Result<()> {
    if s.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: k.dim(),
        });
    }
    if s.meets_open_orthant() || k.only_full_support_pieces() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(
            "S does not meet the open orthant R^{*n}_+ and K has a piece on a coordinate \
             subspace; the Legendre-Fenchel formula for V^S_K requires one of the two"
                .into(),
        ))
    }
}

fn tdot<T: LpScalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn argmax_dot<T: LpScalar>(points: &[Vec<T>], s: &[T]) -> (T, Vec<T>) {
    let mut best: Option<(T, &Vec<T>)> = None;
    for a in points {
        let v = tdot(a, s);
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, a));
        }
    }
    let (v, a) = best.expect("nonempty point list");
    (v, a.clone())
}

/// Variables `λ` (one per vertex of `S`) and a free `u`:
/// maximize `Σ λ_i <v_i, x> - u` with `Σ λ_i = 1` and
/// `Σ λ_i <v_i, a> <= u` for each `a ∈ A`.
fn solve_vsk<T: LpScalar>(s_vertices: &[Vec<T>], a: &[Vec<T>], x: &[T]) -> Result<VskValue<T>> {
    let k = s_vertices.len();
    let mut lp = LinearProgram::<T>::new(k + 1);
    let mut obj: Vec<T> = s_vertices.iter().map(|v| tdot(v, x)).collect();
    obj.push(-T::one());
    lp.maximize(obj).set_free(k);
    let mut simplex = vec![T::one(); k];
    simplex.push(T::zero());
    lp.constrain(simplex, Relation::Eq, T::one());
    for pt in a {
        let mut row: Vec<T> = s_vertices.iter().map(|v| tdot(v, pt)).collect();
        row.push(-T::one());
        lp.constrain(row, Relation::Le, T::zero());
    }
    let (sol, _) = lp
        .solve()
        .optimal()
        .ok_or_else(|| Error::Solver("extremal function program".into()))?;
    let n = x.len();
    let s: Vec<T> = (0..n)
        .map(|j| {
            sol[..k]
                .iter()
                .zip(s_vertices)
                .fold(T::zero(), |acc, (l, v)| acc + l.clone() * v[j].clone())
        })
        .collect();
    let (phi, active_a) = argmax_dot(a, &s);
    Ok(VskValue {
        value: tdot(&s, x) - phi,
        maximizer_s: s,
        active_a,
    })
}

pub fn eval_vsk(s: &RationalPolytope, k: &ReinhardtBody, x: &[f64]) -> Result<VskValue> {
    check_precondition(s, k)?;
    if x.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: x.len(),
        });
    }
    if let Some(&v) = x.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(v));
    }
    let a = k.full_support_points()?;
    solve_vsk(&s.vertices_f64(), &a, x)
}

/// Exact evaluation; the points of `A` are read as the dyadic rationals
/// they are.
pub fn eval_vsk_exact(s: &RationalPolytope, k: &ReinhardtBody, x: &[Rat]) -> Result<VskValue<Rat>> {
    check_precondition(s, k)?;
    if x.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: x.len(),
        });
    }
    let a = k
        .full_support_points()?
        .iter()
        .map(|p| rational::vec_from_f64(p))
        .collect::<Result<Vec<_>>>()?;
    solve_vsk(s.vertices(), &a, x)
}

/// Decides `x ∈ ch A - Γ°` by a feasibility program over `λ ∈` simplex and
/// free `t` with `<v, t> >= 0` for the vertices `v` of `S`. When infeasible,
/// the maximizer of the extremal function program serves as separator.
pub fn hull_membership(s: &RationalPolytope, k: &ReinhardtBody, x: &[f64]) -> Result<HullCertificate> {
    check_precondition(s, k)?;
    let n = s.dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let a = k.full_support_points()?;
    let m = a.len();
    let mut lp = LinearProgram::<f64>::new(m + n);
    for j in 0..n {
        lp.set_free(m + j);
        let mut row: Vec<f64> = a.iter().map(|p| p[j]).collect();
        row.extend((0..n).map(|i| if i == j { -1.0 } else { 0.0 }));
        lp.constrain(row, Relation::Eq, x[j]);
    }
    let mut simplex = vec![1.0; m];
    simplex.extend(std::iter::repeat_n(0.0, n));
    lp.constrain(simplex, Relation::Eq, 1.0);
    for v in s.nonzero_vertices() {
        let mut row = vec![0.0; m];
        row.extend(rational::vec_to_f64(v));
        lp.constrain(row, Relation::Ge, 0.0);
    }
    if let Some((sol, _)) = lp.solve().optimal() {
        let point: Vec<f64> = (0..n)
            .map(|j| sol[..m].iter().zip(&a).map(|(l, p)| l * p[j]).sum())
            .collect();
        return Ok(HullCertificate::Inside {
            a: point,
            t: sol[m..].to_vec(),
        });
    }
    let v = solve_vsk(&s.vertices_f64(), &a, x)?;
    let margin = dot_f64(x, &v.maximizer_s) - max_dot(&a, &v.maximizer_s);
    Ok(HullCertificate::Outside {
        separator: v.maximizer_s,
        margin,
    })
}

/// `V^S_K(z) = V^{S_J}_{K_J}(π_J z)`; identically zero when `S_J = {0}`.
pub fn vsk_on_axes(
    s: &RationalPolytope,
    k: &ReinhardtBody,
    indices: &[usize],
    x: &[f64],
) -> Result<f64> {
    if x.len() != indices.len() {
        return Err(Error::DimensionMismatch {
            expected: indices.len(),
            found: x.len(),
        });
    }
    let section = s.section(indices)?;
    if section.is_origin() {
        return Ok(0.0);
    }
    let projected = k.project(indices)?;
    Ok(eval_vsk(&section, &projected, x)?.value)
}
