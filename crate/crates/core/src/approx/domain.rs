use num::{One, Zero};

use crate::error::{Error, Result};
use crate::extremal::{hull_membership, ReinhardtBody, HULL_TOL};
use crate::lp::{LinearProgram, Relation};
use crate::polytope::{dual_cone, extreme_rays, RationalPolytope};
use crate::rational::{self, dot, Rat};

/// Ray parameters at which escape growth is reported.
pub const ESCAPE_TIMES: [f64; 5] = [0.0, 5.0, 10.0, 15.0, 20.0];

/// A direction `ξ` with `φ_S(ξ) <= 0` and `<β, ξ> >= 1`; along
/// `x0 + t ξ` the hull of `Log^{-1}(x0)` is never left while `|z^β|`
/// grows like `e^{t <β, ξ>}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EscapeWitness {
    pub beta: Vec<i64>,
    pub xi: Vec<Rat>,
    pub x0: Vec<f64>,
    /// `(t, |z^β|)` at `x = x0 + t ξ`.
    pub growth: Vec<(f64, f64)>,
}

/// Minimizes `|ξ|_1` subject to `<v, ξ> <= 0` on the vertices of `S` and
/// `<β, ξ> >= 1`, in exact arithmetic.
pub fn escape_witness(s: &RationalPolytope, beta: &[i64], x0: &[f64]) -> Result<EscapeWitness> {
    let n = s.dim();
    for len in [beta.len(), x0.len()] {
        if len != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: len,
            });
        }
    }
    let b = rational::vec_from_i64(beta);
    if s.cone_contains(&b) {
        return Err(Error::BetaInCone(beta.to_vec()));
    }
    // variables: ξ (free, n), e (n) with e >= |ξ|
    let mut lp = LinearProgram::<Rat>::new(2 * n);
    let mut obj = vec![Rat::zero(); 2 * n];
    for c in &mut obj[n..] {
        *c = Rat::one();
    }
    lp.minimize(obj);
    for j in 0..n {
        lp.set_free(j);
        for sign in [1, -1] {
            let mut row = vec![Rat::zero(); 2 * n];
            row[j] = rational::int(sign);
            row[n + j] = Rat::one();
            lp.constrain(row, Relation::Ge, Rat::zero());
        }
    }
    for v in s.nonzero_vertices() {
        let mut row = v.clone();
        row.extend(vec![Rat::zero(); n]);
        lp.constrain(row, Relation::Le, Rat::zero());
    }
    let mut row = b.clone();
    row.extend(vec![Rat::zero(); n]);
    lp.constrain(row, Relation::Ge, Rat::one());
    let (sol, _) = lp
        .solve()
        .optimal()
        .ok_or_else(|| Error::Solver("escape direction program".into()))?;
    let xi: Vec<Rat> = sol[..n].to_vec();
    let base: f64 = beta.iter().zip(x0).map(|(&b, x)| b as f64 * x).sum();
    let rate = rational::to_f64(&dot(&b, &xi));
    let growth = ESCAPE_TIMES
        .iter()
        .map(|&t| (t, (base + t * rate).exp()))
        .collect();
    Ok(EscapeWitness {
        beta: beta.to_vec(),
        xi,
        x0: x0.to_vec(),
        growth,
    })
}

/// `ch D - Γ°`, the logarithmic image of the domain to which a series
/// convergent on `Log^{-1}(ch D)` extends.
#[derive(Debug, Clone)]
pub struct ConvergenceHull {
    s: RationalPolytope,
    body: ReinhardtBody,
    /// `<normal, x> <= bound`, available when the dual cone rays are.
    pub halfspaces: Option<Vec<(Vec<Rat>, Rat)>>,
}

impl ConvergenceHull {
    pub fn points(&self) -> Result<Vec<Vec<f64>>> {
        self.body.full_support_points()
    }

    /// Half-space test when available, the feasibility program otherwise.
    pub fn contains(&self, x: &[f64]) -> Result<bool> {
        self.contains_with_tol(x, HULL_TOL)
    }

    pub fn contains_with_tol(&self, x: &[f64], tol: f64) -> Result<bool> {
        if x.len() != self.s.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.s.dim(),
                found: x.len(),
            });
        }
        match &self.halfspaces {
            Some(hs) => Ok(hs.iter().all(|(a, b)| {
                let lhs: f64 = a.iter().zip(x).map(|(c, v)| rational::to_f64(c) * v).sum();
                lhs <= rational::to_f64(b) + tol
            })),
            None => Ok(hull_membership(&self.s, &self.body, x)?.is_inside()),
        }
    }

    pub fn contains_by_program(&self, x: &[f64]) -> Result<bool> {
        Ok(hull_membership(&self.s, &self.body, x)?.is_inside())
    }
}

/// Facets of `ch D - Γ°` by double description of the homogenized cone
/// generated by `(1, d)` for `d ∈ D` and `(0, -g)` for generators `g` of
/// `Γ°`.
pub fn convergence_hull(s: &RationalPolytope, d_points: Vec<Vec<f64>>) -> Result<ConvergenceHull> {
    let n = s.dim();
    if d_points.is_empty() {
        return Err(Error::InvalidBody("empty vertex cloud".into()));
    }
    let body = ReinhardtBody::from_points(n, d_points.clone())?;
    let cone = dual_cone(s);
    let halfspaces = match cone.dual_rays() {
        Ok(gens) => {
            let mut homog: Vec<Vec<Rat>> = Vec::new();
            for d in &d_points {
                let mut row = vec![Rat::one()];
                row.extend(rational::vec_from_f64(d)?);
                homog.push(row);
            }
            for g in gens.all_directions() {
                let mut row = vec![Rat::zero()];
                row.extend(g.iter().map(|c| -c));
                homog.push(row);
            }
            // facet normals of the homogenized cone are generators of its dual
            let dual = extreme_rays(&homog, n + 1);
            let mut hs = Vec::new();
            for h in dual.all_directions() {
                if h[1..].iter().all(Zero::is_zero) {
                    continue;
                }
                // h0 + <h', x> >= 0  <=>  <-h', x> <= h0
                let normal: Vec<Rat> = h[1..].iter().map(|c| -c).collect();
                hs.push((normal, h[0].clone()));
            }
            Some(hs)
        }
        Err(_) => None,
    };
    Ok(ConvergenceHull {
        s: s.clone(),
        body,
        halfspaces,
    })
}
