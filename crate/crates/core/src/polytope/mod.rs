//! Exact rational polytopes `S ⊂ R^n_+` containing the origin.
//!
//! The vertex list is canonical. An exact half-space description (affine
//! hull equations plus facet inequalities) is derived once at construction
//! and drives membership, the cone `R_+ S` and lattice scans.

mod cone;
mod distance;
mod lattice_points;

pub use cone::{dual_cone, extreme_rays, ConeGenerators, ConeRep};
pub use distance::{
    distance_growth, integral_distance_bound, lattice_distance, lattice_distance_with,
    DistanceNorm, GrowthRow, LatticeDistance,
};
pub use lattice_points::{enumerate_exponents, refine, EnumerationBudget, ExponentSet};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, Relation};
use crate::rational::{self, dot, int, Rat};

/// `normal . x <= bound` (or `== bound` for affine-hull equations). Normals
/// are primitive integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<Rat>,
    pub bound: Rat,
}

impl Halfspace {
    fn slack(&self, x: &[Rat]) -> Rat {
        &self.bound - dot(&self.normal, x)
    }
}

/// Integer form of a constraint for fast lattice scans:
/// `den * (normal . alpha) <= m * num`.
#[derive(Debug, Clone)]
struct IntConstraint {
    normal: Vec<i128>,
    num: i128,
    den: i128,
}

impl IntConstraint {
    fn from_halfspace(h: &Halfspace) -> Option<Self> {
        use num::ToPrimitive;
        let normal = h
            .normal
            .iter()
            .map(|c| c.to_integer().to_i128())
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            normal,
            num: h.bound.numer().to_i128()?,
            den: h.bound.denom().to_i128()?,
        })
    }

    /// Returns `den * (normal . alpha) - m * num` or `None` on overflow.
    fn excess(&self, alpha: &[i64], m: i64) -> Option<i128> {
        let mut acc: i128 = 0;
        for (c, &a) in self.normal.iter().zip(alpha) {
            acc = acc.checked_add(c.checked_mul(a as i128)?)?;
        }
        acc.checked_mul(self.den)?
            .checked_sub(self.num.checked_mul(m as i128)?)
    }
}

/// Exact half-space description of a polytope.
#[derive(Debug, Clone)]
pub struct HRep {
    pub affine_dim: usize,
    pub equalities: Vec<Halfspace>,
    pub inequalities: Vec<Halfspace>,
    /// For each inequality, the indices of the vertices on it.
    pub incidence: Vec<Vec<usize>>,
    int_equalities: Option<Vec<IntConstraint>>,
    int_inequalities: Option<Vec<IntConstraint>>,
}

/// Outcome of an exact membership query.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    /// Convex weights over the vertex list reproducing the point exactly.
    Inside { weights: Vec<Rat> },
    /// A functional `xi` with `<xi, x> > support(xi)`.
    Outside { separator: Vec<Rat> },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside { .. })
    }
}

#[derive(Debug, Clone)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
    hrep: HRep,
}

impl PartialEq for RationalPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl RationalPolytope {
    /// Builds `ch(points)`, dropping duplicates and points that are convex
    /// combinations of the others.
    pub fn new(dim: usize, points: Vec<Vec<Rat>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if let Some(c) = p.iter().position(|x| x.is_negative()) {
                return Err(Error::NegativeCoordinate {
                    vertex: i,
                    coordinate: c,
                });
            }
        }
        let mut pts = points;
        pts.sort();
        pts.dedup();
        let vertices = irredundant(pts);
        let hrep = HRep::compute(dim, &vertices);
        let poly = Self {
            dim,
            vertices,
            hrep,
        };
        if !poly.is_member(&vec![Rat::zero(); dim]) {
            return Err(Error::OriginNotInPolytope);
        }
        Ok(poly)
    }

    pub fn from_i64(dim: usize, points: &[&[i64]]) -> Result<Self> {
        Self::new(dim, points.iter().map(|p| rational::vec_from_i64(p)).collect())
    }

    /// Parses vertices given as rational literals (`"p/q"`).
    pub fn from_strs(dim: usize, points: &[&[&str]]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|s| rational::parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rat>>>>()?;
        Self::new(dim, pts)
    }

    /// The standard simplex `ch{0, e_1, ..., e_n}`.
    pub fn standard_simplex(dim: usize) -> Self {
        let mut pts = vec![vec![Rat::zero(); dim]];
        for i in 0..dim {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::one();
            pts.push(e);
        }
        Self::new(dim, pts).expect("standard simplex is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn vertices_f64(&self) -> Vec<Vec<f64>> {
        self.vertices.iter().map(|v| rational::vec_to_f64(v)).collect()
    }

    /// Vertices other than the origin.
    pub fn nonzero_vertices(&self) -> impl Iterator<Item = &Vec<Rat>> {
        self.vertices.iter().filter(|v| v.iter().any(|x| !x.is_zero()))
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn affine_dim(&self) -> usize {
        self.hrep.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.hrep.affine_dim == self.dim
    }

    pub fn is_origin(&self) -> bool {
        self.vertices.len() == 1 && self.vertices[0].iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().flatten().all(rational::is_integral)
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }

    /// Supporting function `sup_{s in S} <s, xi>`.
    pub fn support(&self, xi: &[Rat]) -> Result<Rat> {
        self.check_dim(xi.len())?;
        Ok(self
            .vertices
            .iter()
            .map(|v| dot(v, xi))
            .max()
            .expect("nonempty vertex list"))
    }

    pub fn support_f64(&self, xi: &[f64]) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.iter().zip(xi).map(|(a, b)| rational::to_f64(a) * b).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Exact membership test through the half-space description.
    pub fn is_member(&self, x: &[Rat]) -> bool {
        self.hrep.equalities.iter().all(|h| h.slack(x).is_zero())
            && self
                .hrep
                .inequalities
                .iter()
                .all(|h| !h.slack(x).is_negative())
    }

    /// Membership with a certificate: convex weights when inside, a strictly
    /// separating functional when outside.
    pub fn contains(&self, x: &[Rat]) -> Result<Membership> {
        self.check_dim(x.len())?;
        for h in &self.hrep.equalities {
            let s = h.slack(x);
            if !s.is_zero() {
                // The normal is constant on S, so either sign separates.
                let separator = if s.is_negative() {
                    h.normal.clone()
                } else {
                    h.normal.iter().map(|c| -c).collect()
                };
                return Ok(Membership::Outside { separator });
            }
        }
        if let Some(h) = self
            .hrep
            .inequalities
            .iter()
            .find(|h| h.slack(x).is_negative())
        {
            return Ok(Membership::Outside {
                separator: h.normal.clone(),
            });
        }
        let weights = convex_weights(&self.vertices, x)
            .ok_or_else(|| Error::Solver("membership LP disagrees with facets".into()))?;
        Ok(Membership::Inside { weights })
    }

    /// Lattice membership `alpha ∈ m S` in integer arithmetic when possible.
    pub fn contains_scaled_lattice_point(&self, alpha: &[i64], m: i64) -> bool {
        if let (Some(eqs), Some(ineqs)) = (&self.hrep.int_equalities, &self.hrep.int_inequalities)
        {
            let fast = eqs
                .iter()
                .map(|c| c.excess(alpha, m).map(|e| e == 0))
                .chain(ineqs.iter().map(|c| c.excess(alpha, m).map(|e| e <= 0)))
                .collect::<Option<Vec<bool>>>();
            if let Some(flags) = fast {
                return flags.into_iter().all(|f| f);
            }
        }
        let x: Vec<Rat> = alpha.iter().map(|&a| rational::ratio(a, 1) / int(m)).collect();
        if m == 0 {
            return alpha.iter().all(|&a| a == 0);
        }
        self.is_member(&x)
    }

    /// Whether `alpha` lies in the cone `R_+ S`. Because `0 ∈ S`, the cone is
    /// cut out by the equations and the facets through the origin.
    pub fn cone_contains(&self, alpha: &[Rat]) -> bool {
        self.hrep
            .equalities
            .iter()
            .all(|h| dot(&h.normal, alpha).is_zero())
            && self
                .hrep
                .inequalities
                .iter()
                .filter(|h| h.bound.is_zero())
                .all(|h| !dot(&h.normal, alpha).is_positive())
    }

    pub fn cone_contains_i64(&self, alpha: &[i64]) -> bool {
        self.cone_contains(&rational::vec_from_i64(alpha))
    }

    /// Minimal `t >= 0` with `alpha ∈ t S`, or `None` when `alpha` is outside
    /// the cone `R_+ S`.
    pub fn gauge(&self, alpha: &[Rat]) -> Option<Rat> {
        if !self.cone_contains(alpha) {
            return None;
        }
        Some(
            self.hrep
                .inequalities
                .iter()
                .filter(|h| h.bound.is_positive())
                .map(|h| dot(&h.normal, alpha) / &h.bound)
                .fold(Rat::zero(), |a, b| if b > a { b } else { a }),
        )
    }

    /// Minimal integer `m >= 0` with `alpha ∈ m S`.
    pub fn minimal_scaling(&self, alpha: &[i64]) -> Option<u64> {
        let g = self.gauge(&rational::vec_from_i64(alpha))?;
        use num::ToPrimitive;
        g.ceil().to_integer().to_u64()
    }

    /// `min { Σ μ_i : α = Σ μ_i v_i, μ >= 0 }` over the nonzero vertices, the
    /// least `t` with `α ∈ t S` (as `0 ∈ S`). `None` when `α ∉ R_+ S`.
    pub fn ray_scaling_lp(&self, alpha: &[Rat]) -> Option<Rat> {
        if alpha.iter().all(Zero::is_zero) {
            return Some(Rat::zero());
        }
        let gens: Vec<&Vec<Rat>> = self.nonzero_vertices().collect();
        if gens.is_empty() {
            return None;
        }
        let mut lp = LinearProgram::<Rat>::new(gens.len());
        lp.minimize(vec![Rat::one(); gens.len()]);
        for (j, aj) in alpha.iter().enumerate() {
            lp.constrain(gens.iter().map(|g| g[j].clone()).collect(), Relation::Eq, aj.clone());
        }
        lp.solve().optimal().map(|(_, v)| v)
    }

    pub fn scale(&self, factor: &Rat) -> Result<Self> {
        if factor.is_negative() {
            return Err(Error::ZeroScaling);
        }
        Self::new(
            self.dim,
            self.vertices
                .iter()
                .map(|v| v.iter().map(|c| c * factor).collect())
                .collect(),
        )
    }

    /// `S_J = π_J(S ∩ R^J)` for an ordered, 0-based index subset `J`.
    ///
    /// `S ∩ R^J` is the face of `S` minimizing the sum of the coordinates
    /// outside `J`, so it is the hull of the vertices supported in `J`.
    pub fn section(&self, indices: &[usize]) -> Result<Self> {
        validate_index_set(indices, self.dim)?;
        let pts: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .filter(|v| {
                v.iter()
                    .enumerate()
                    .all(|(i, c)| c.is_zero() || indices.contains(&i))
            })
            .map(|v| indices.iter().map(|&i| v[i].clone()).collect())
            .collect();
        Self::new(indices.len(), pts)
    }

    /// Whether `S` meets the open orthant `R^{*n}_+`: each coordinate must be
    /// positive at some vertex, in which case the vertex average is a
    /// strictly positive point of `S`.
    pub fn meets_open_orthant(&self) -> bool {
        (0..self.dim).all(|i| self.vertices.iter().any(|v| v[i].is_positive()))
    }

    /// Integer bounding box upper corner of `m S`.
    pub fn scaled_box(&self, m: i64) -> Result<Vec<i64>> {
        (0..self.dim)
            .map(|i| {
                let max = self
                    .vertices
                    .iter()
                    .map(|v| &v[i] * int(m))
                    .max()
                    .expect("nonempty");
                rational::ceil_to_i64(&max)
            })
            .collect()
    }
}

pub fn validate_index_set(indices: &[usize], dim: usize) -> Result<()> {
    if indices.is_empty() {
        return Err(Error::InvalidIndexSet("index set is empty".into()));
    }
    for (k, &i) in indices.iter().enumerate() {
        if i >= dim {
            return Err(Error::InvalidIndexSet(format!(
                "index {} out of range for dimension {dim}",
                i + 1
            )));
        }
        if indices[..k].contains(&i) {
            return Err(Error::InvalidIndexSet(format!("index {} repeated", i + 1)));
        }
    }
    Ok(())
}

/// Exact convex weights `λ >= 0, Σλ = 1, Σ λ_i v_i = x`, if they exist.
pub(crate) fn convex_weights(points: &[Vec<Rat>], x: &[Rat]) -> Option<Vec<Rat>> {
    let k = points.len();
    let mut lp = LinearProgram::<Rat>::new(k);
    for (j, xj) in x.iter().enumerate() {
        lp.constrain(
            points.iter().map(|p| p[j].clone()).collect(),
            Relation::Eq,
            xj.clone(),
        );
    }
    lp.constrain(vec![Rat::one(); k], Relation::Eq, Rat::one());
    lp.solve().optimal().map(|(w, _)| w)
}

/// Removes points lying in the convex hull of the remaining ones.
fn irredundant(mut pts: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let mut i = 0;
    while i < pts.len() {
        if pts.len() > 1 {
            let others: Vec<Vec<Rat>> = pts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            if convex_weights(&others, &pts[i]).is_some() {
                pts.remove(i);
                continue;
            }
        }
        i += 1;
    }
    pts
}

fn to_rat_vec(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

impl HRep {
    /// Facets by enumerating affinely independent vertex subsets of the size
    /// of the affine dimension; adequate for the small vertex counts here.
    fn compute(dim: usize, vertices: &[Vec<Rat>]) -> Self {
        let p0 = &vertices[0];
        let diffs: Vec<Vec<Rat>> = vertices[1..]
            .iter()
            .map(|v| v.iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        let affine_dim = linalg::rank(&diffs);
        let eq_normals: Vec<Vec<Rat>> = linalg::nullspace(&diffs, dim)
            .iter()
            .map(|n| to_rat_vec(&rational::primitive_integer(n)))
            .collect();
        let equalities: Vec<Halfspace> = eq_normals
            .iter()
            .map(|n| Halfspace {
                bound: dot(n, p0),
                normal: n.clone(),
            })
            .collect();

        let mut inequalities: Vec<Halfspace> = Vec::new();
        let mut incidence = Vec::new();
        if affine_dim > 0 {
            for subset in combinations(vertices.len(), affine_dim) {
                let base = &vertices[subset[0]];
                let mut rows = eq_normals.clone();
                rows.extend(subset[1..].iter().map(|&i| {
                    vertices[i].iter().zip(base).map(|(a, b)| a - b).collect()
                }));
                let ns = linalg::nullspace(&rows, dim);
                if ns.len() != 1 {
                    continue;
                }
                let normal = to_rat_vec(&rational::primitive_integer(&ns[0]));
                let bound = dot(&normal, base);
                let values: Vec<Rat> = vertices.iter().map(|v| dot(&normal, v)).collect();
                let (normal, bound) = if values.iter().all(|v| v <= &bound) {
                    (normal, bound)
                } else if values.iter().all(|v| v >= &bound) {
                    (normal.iter().map(|c| -c).collect(), -bound)
                } else {
                    continue;
                };
                let h = Halfspace { normal, bound };
                if inequalities.contains(&h) {
                    continue;
                }
                incidence.push(
                    vertices
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| h.slack(v).is_zero())
                        .map(|(i, _)| i)
                        .collect(),
                );
                inequalities.push(h);
            }
        }
        let int_equalities = equalities
            .iter()
            .map(IntConstraint::from_halfspace)
            .collect();
        let int_inequalities = inequalities
            .iter()
            .map(IntConstraint::from_halfspace)
            .collect();
        Self {
            affine_dim,
            equalities,
            inequalities,
            incidence,
            int_equalities,
            int_inequalities,
        }
    }

    /// Vertex index sets of all nonempty faces (including the polytope
    /// itself), obtained by intersecting facet incidences.
    pub fn faces(&self, num_vertices: usize) -> Vec<Vec<usize>> {
        let mut faces: Vec<Vec<usize>> = vec![(0..num_vertices).collect()];
        let mut frontier: Vec<Vec<usize>> = self.incidence.clone();
        while let Some(f) = frontier.pop() {
            if f.is_empty() || faces.contains(&f) {
                continue;
            }
            for g in &self.incidence {
                let meet: Vec<usize> = f.iter().copied().filter(|i| g.contains(i)).collect();
                if !meet.is_empty() && meet.len() < f.len() {
                    frontier.push(meet);
                }
            }
            faces.push(f);
        }
        faces
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
