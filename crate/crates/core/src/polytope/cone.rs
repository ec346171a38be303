use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, dot, Rat};

use super::RationalPolytope;

/// Generators of a polyhedral cone: a lineality basis plus extreme rays of
/// the pointed part. All vectors are primitive integer directions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConeGenerators {
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

impl ConeGenerators {
    /// Rays together with both orientations of every lineality vector.
    pub fn all_directions(&self) -> Vec<Vec<Rat>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|c| -c).collect());
        }
        out
    }
}

/// The cone `Γ = R_+ S` and its dual `Γ° = {x : <x, ξ> >= 0 for ξ ∈ Γ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeRep {
    pub dim: usize,
    /// Nonzero vertices of `S`; they span `Γ` and cut out `Γ°`.
    pub generators: Vec<Vec<Rat>>,
    /// Normals `h` with `Γ = {x : <h, x> >= 0 for all h}`.
    pub halfspaces: Vec<Vec<Rat>>,
    /// Extreme rays and lineality of `Γ°`, present for `n <= 3`.
    pub dual_generators: Option<ConeGenerators>,
}

pub const MAX_RAY_DIM: usize = 3;

impl ConeRep {
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.halfspaces.iter().all(|h| !dot(h, x).is_negative())
    }

    pub fn dual_contains(&self, x: &[Rat]) -> bool {
        self.generators.iter().all(|g| !dot(g, x).is_negative())
    }

    pub fn dual_contains_f64(&self, x: &[f64], tol: f64) -> bool {
        self.generators.iter().all(|g| {
            g.iter()
                .zip(x)
                .map(|(a, b)| rational::to_f64(a) * b)
                .sum::<f64>()
                >= -tol
        })
    }

    pub fn dual_rays(&self) -> Result<&ConeGenerators> {
        self.dual_generators
            .as_ref()
            .ok_or(Error::RaysUnavailable { dim: self.dim })
    }
}

pub fn dual_cone(s: &RationalPolytope) -> ConeRep {
    let dim = s.dim();
    let generators: Vec<Vec<Rat>> = s.nonzero_vertices().cloned().collect();
    let h = s.hrep();
    let mut halfspaces: Vec<Vec<Rat>> = Vec::new();
    for e in &h.equalities {
        halfspaces.push(e.normal.clone());
        halfspaces.push(e.normal.iter().map(|c| -c).collect());
    }
    for f in h.inequalities.iter().filter(|f| f.bound.is_zero()) {
        halfspaces.push(f.normal.iter().map(|c| -c).collect());
    }
    let dual_generators = (dim <= MAX_RAY_DIM).then(|| extreme_rays(&generators, dim));
    ConeRep {
        dim,
        generators,
        halfspaces,
        dual_generators,
    }
}

fn primitive(v: &[Rat]) -> Vec<Rat> {
    rational::primitive_integer(v)
        .into_iter()
        .map(Rat::from_integer)
        .collect()
}

fn tight_rows(constraints: &[Vec<Rat>], x: &[Rat]) -> Vec<Vec<Rat>> {
    constraints
        .iter()
        .filter(|g| dot(g, x).is_zero())
        .cloned()
        .collect()
}

/// Double description of `{x ∈ R^n : <g, x> >= 0 for g in constraints}`.
pub fn extreme_rays(constraints: &[Vec<Rat>], n: usize) -> ConeGenerators {
    let mut lineality: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut e = vec![Rat::zero(); n];
            e[i] = Rat::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<Vec<Rat>> = Vec::new();
    let mut processed: Vec<Vec<Rat>> = Vec::new();

    for g in constraints {
        if g.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !dot(g, l).is_zero()) {
            let mut l = lineality.remove(pos);
            let gl = dot(g, &l);
            if gl.is_negative() {
                l = l.iter().map(|c| -c).collect();
            }
            let gl = gl.abs();
            let shift = |v: &Vec<Rat>| -> Vec<Rat> {
                let f = dot(g, v) / &gl;
                v.iter().zip(&l).map(|(a, b)| a - &f * b).collect()
            };
            lineality = lineality.iter().map(shift).collect();
            rays = rays
                .iter()
                .map(shift)
                .filter(|r| r.iter().any(|c| !c.is_zero()))
                .collect();
            rays.push(l);
        } else {
            let lin_dim = lineality.len();
            let vals: Vec<Rat> = rays.iter().map(|r| dot(g, r)).collect();
            let mut next: Vec<Vec<Rat>> = rays
                .iter()
                .zip(&vals)
                .filter(|(_, v)| !v.is_negative())
                .map(|(r, _)| r.clone())
                .collect();
            for (p, vp) in rays.iter().zip(&vals).filter(|(_, v)| v.is_positive()) {
                for (q, vq) in rays.iter().zip(&vals).filter(|(_, v)| v.is_negative()) {
                    let mut common: Vec<Vec<Rat>> = tight_rows(&processed, p);
                    common.retain(|row| dot(row, q).is_zero());
                    if linalg::rank(&common) + 2 + lin_dim != n {
                        continue;
                    }
                    let combo: Vec<Rat> =
                        q.iter().zip(p).map(|(a, b)| vp * a - vq * b).collect();
                    next.push(combo);
                }
            }
            rays = next;
        }
        processed.push(g.clone());
        rays = rays.iter().map(|r| primitive(r)).collect();
        rays.sort();
        rays.dedup();
    }

    // keep only genuinely extreme rays
    let lin_dim = lineality.len();
    rays.retain(|r| linalg::rank(&tight_rows(&processed, r)) + 1 + lin_dim == n);
    let lineality = if lineality.is_empty() {
        lineality
    } else {
        let mut basis = lineality;
        linalg::rref(&mut basis, n);
        basis.iter().map(|v| primitive(v)).collect()
    };
    ConeGenerators { lineality, rays }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(x: &[i64]) -> Vec<Rat> {
        rational::vec_from_i64(x)
    }

    #[test]
    fn simplex_dual_is_orthant() {
        let c = dual_cone(&RationalPolytope::standard_simplex(2));
        let g = c.dual_rays().unwrap();
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn triangle_dual_rays() {
        let t = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 0], &[1, 1]]).unwrap();
        let c = dual_cone(&t);
        let g = c.dual_rays().unwrap();
        assert_eq!(g.rays, vec![v(&[0, 1]), v(&[1, -1])]);
        assert!(c.contains(&v(&[2, 1])));
        assert!(!c.contains(&v(&[0, 1])));
    }

    #[test]
    fn origin_dual_is_everything() {
        let o = RationalPolytope::from_i64(2, &[&[0, 0]]).unwrap();
        let c = dual_cone(&o);
        let g = c.dual_rays().unwrap();
        assert_eq!(g.lineality.len(), 2);
        assert!(g.rays.is_empty());
        assert!(c.dual_contains(&[int(-5), int(3)]));
    }

    #[test]
    fn segment_dual_has_lineality() {
        let seg = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 1]]).unwrap();
        let g = dual_cone(&seg).dual_generators.unwrap();
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
        assert!(dot(&g.lineality[0], &v(&[1, 1])).is_zero());
        assert!(dot(&g.rays[0], &v(&[1, 1])).is_positive());
    }

    #[test]
    fn rays_refused_above_three() {
        let c = dual_cone(&RationalPolytope::standard_simplex(4));
        assert_eq!(c.dual_rays(), Err(Error::RaysUnavailable { dim: 4 }));
        assert_eq!(c.generators.len(), 4);
    }
}
