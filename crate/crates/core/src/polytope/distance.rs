use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, Relation};
use crate::rational::{self, dot, int, Rat};

use super::lattice_points::integer_hull;
use super::{EnumerationBudget, RationalPolytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistanceNorm {
    #[default]
    Euclidean,
    L1,
}

/// Distance from an integral polytope to the nearest lattice point outside it.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeDistance {
    pub norm: DistanceNorm,
    /// Squared distance for the Euclidean norm, plain distance for L1.
    pub exact: Rat,
    pub distance: f64,
    pub nearest: Vec<i64>,
    /// `⌈max vertex coordinate⌉`.
    pub box_size: u64,
    /// `1 / (√n (n-1)! M^{n-1})`.
    pub bound: f64,
    pub bound_holds: bool,
}

/// Lower bound `1 / (√n (n-1)! M^{n-1})` on the lattice distance of an
/// integral polytope in `[0, M]^n`.
pub fn integral_distance_bound(n: usize, box_size: f64) -> f64 {
    let fact = rational::to_f64(&Rat::from_integer(rational::factorial(n as u64 - 1)));
    1.0 / ((n as f64).sqrt() * fact * box_size.powi(n as i32 - 1))
}

pub fn lattice_distance(p: &RationalPolytope) -> Result<LatticeDistance> {
    lattice_distance_with(p, DistanceNorm::Euclidean)
}

pub fn lattice_distance_with(p: &RationalPolytope, norm: DistanceNorm) -> Result<LatticeDistance> {
    if !p.is_full_dimensional() {
        return Err(Error::EmptyInterior {
            affine_dim: p.affine_dim(),
            dim: p.dim(),
        });
    }
    if !p.is_integral() {
        return Err(Error::NotIntegral);
    }
    raw_lattice_distance(p, norm)
}

/// Brute force over `[-1, M+1]^n`, no interior requirement.
fn raw_lattice_distance(p: &RationalPolytope, norm: DistanceNorm) -> Result<LatticeDistance> {
    let n = p.dim();
    let box_size = p
        .vertices()
        .iter()
        .flatten()
        .map(rational::ceil_to_i64)
        .try_fold(0i64, |acc, c| c.map(|c| acc.max(c)))?;
    let faces = FaceProjector::new(p);
    let mut best: Option<(Rat, Vec<i64>)> = None;
    let lo = -1i64;
    let hi = box_size + 1;
    let mut q = vec![lo; n];
    'scan: loop {
        if !p.contains_scaled_lattice_point(&q, 1) {
            let qr = rational::vec_from_i64(&q);
            // facet residuals give a lower bound valid for both norms
            let lb = faces.residual_bound_sq(&qr);
            let skip = best.as_ref().is_some_and(|(b, _)| {
                let b_sq = match norm {
                    DistanceNorm::Euclidean => b.clone(),
                    DistanceNorm::L1 => b * b,
                };
                lb >= b_sq
            });
            if !skip {
                let d = match norm {
                    DistanceNorm::Euclidean => faces.squared_distance(&qr),
                    DistanceNorm::L1 => l1_distance(p, &qr)?,
                };
                if best.as_ref().is_none_or(|(b, _)| &d < b) {
                    best = Some((d, q.clone()));
                }
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                break 'scan;
            }
            k -= 1;
            if q[k] < hi {
                q[k] += 1;
                break;
            }
            q[k] = lo;
        }
    }
    let (exact, nearest) = best.expect("box boundary lies outside the polytope");
    let distance = match norm {
        DistanceNorm::Euclidean => rational::to_f64(&exact).sqrt(),
        DistanceNorm::L1 => rational::to_f64(&exact),
    };
    let box_size = box_size.max(1) as u64;
    let bound = integral_distance_bound(n, box_size as f64);
    Ok(LatticeDistance {
        norm,
        exact,
        distance,
        nearest,
        box_size,
        bound,
        bound_holds: distance >= bound,
    })
}

fn l1_distance(p: &RationalPolytope, q: &[Rat]) -> Result<Rat> {
    // variables: λ (one per vertex), then e (one per coordinate)
    let k = p.vertices().len();
    let n = p.dim();
    let mut lp = LinearProgram::<Rat>::new(k + n);
    let mut obj = vec![Rat::zero(); k + n];
    for e in &mut obj[k..] {
        *e = Rat::one();
    }
    lp.minimize(obj);
    lp.constrain(
        (0..k + n)
            .map(|i| if i < k { Rat::one() } else { Rat::zero() })
            .collect(),
        Relation::Eq,
        Rat::one(),
    );
    for j in 0..n {
        let mut upper: Vec<Rat> = p.vertices().iter().map(|v| v[j].clone()).collect();
        upper.extend((0..n).map(|i| if i == j { -Rat::one() } else { Rat::zero() }));
        lp.constrain(upper, Relation::Le, q[j].clone());
        let mut lower: Vec<Rat> = p.vertices().iter().map(|v| v[j].clone()).collect();
        lower.extend((0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }));
        lp.constrain(lower, Relation::Ge, q[j].clone());
    }
    lp.solve()
        .optimal()
        .map(|(_, v)| v)
        .ok_or_else(|| Error::Solver("L1 distance program".into()))
}

/// Exact Euclidean projection onto a polytope by trying the affine hull of
/// every face: the nearest point lies in the relative interior of some face,
/// where it coincides with the orthogonal projection onto that face's hull.
struct FaceProjector<'a> {
    poly: &'a RationalPolytope,
    faces: Vec<Vec<usize>>,
}

impl<'a> FaceProjector<'a> {
    fn new(poly: &'a RationalPolytope) -> Self {
        let faces = poly.hrep().faces(poly.vertices().len());
        Self { poly, faces }
    }

    fn residual_bound_sq(&self, q: &[Rat]) -> Rat {
        let h = self.poly.hrep();
        let mut best = Rat::zero();
        for (c, is_eq) in h
            .equalities
            .iter()
            .map(|c| (c, true))
            .chain(h.inequalities.iter().map(|c| (c, false)))
        {
            let r = dot(&c.normal, q) - &c.bound;
            if !is_eq && !r.is_positive() {
                continue;
            }
            let v = &r * &r / dot(&c.normal, &c.normal);
            if v > best {
                best = v;
            }
        }
        best
    }

    fn squared_distance(&self, q: &[Rat]) -> Rat {
        self.faces
            .iter()
            .filter_map(|face| {
                let proj = project_affine(self.poly.vertices(), face, q);
                self.poly.is_member(&proj).then(|| {
                    let diff: Vec<Rat> = proj.iter().zip(q).map(|(a, b)| a - b).collect();
                    dot(&diff, &diff)
                })
            })
            .min()
            .expect("the vertex faces always yield candidates")
    }
}

/// Orthogonal projection of `q` onto the affine hull of the listed vertices.
fn project_affine(vertices: &[Vec<Rat>], face: &[usize], q: &[Rat]) -> Vec<Rat> {
    let base = &vertices[face[0]];
    let diffs: Vec<Vec<Rat>> = face[1..]
        .iter()
        .map(|&i| vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let basis: Vec<Vec<Rat>> = linalg::independent_subset(&diffs)
        .into_iter()
        .map(|i| diffs[i].clone())
        .collect();
    if basis.is_empty() {
        return base.clone();
    }
    let r: Vec<Rat> = q.iter().zip(base).map(|(a, b)| a - b).collect();
    let gram: Vec<Vec<Rat>> = basis
        .iter()
        .map(|u| basis.iter().map(|v| dot(u, v)).collect())
        .collect();
    let rhs: Vec<Rat> = basis.iter().map(|u| dot(u, &r)).collect();
    let coef = linalg::solve(&gram, &rhs, basis.len()).expect("Gram matrix of a basis");
    let mut out = base.clone();
    for (c, u) in coef.iter().zip(&basis) {
        for (o, x) in out.iter_mut().zip(u) {
            *o += c * x;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub m: u64,
    /// Whether `m S_m` has nonempty interior; the raw distance is reported
    /// either way.
    pub full_dimensional: bool,
    pub distance: f64,
    pub root: f64,
    /// `(1 / (√n (n-1)! (m φ_S(1))^{n-1}))^{1/m}`.
    pub bound_root: f64,
    pub bound_holds: bool,
}

/// `d_m = dist(m S_m, Z^n \ m S_m)` and its m-th root for `m = 1..=m_max`.
pub fn distance_growth(
    s: &RationalPolytope,
    m_max: u64,
    budget: EnumerationBudget,
) -> Result<Vec<GrowthRow>> {
    if !s.is_full_dimensional() {
        return Err(Error::EmptyInterior {
            affine_dim: s.affine_dim(),
            dim: s.dim(),
        });
    }
    let n = s.dim();
    let phi_one = rational::to_f64(&s.support(&vec![int(1); n])?);
    (1..=m_max)
        .map(|m| {
            let hull = integer_hull(s, m, budget)?;
            let d = raw_lattice_distance(&hull, DistanceNorm::Euclidean)?;
            let big_m = m as f64 * phi_one;
            let bound = integral_distance_bound(n, big_m);
            let inv_m = 1.0 / m as f64;
            let root = d.distance.powf(inv_m);
            let bound_root = bound.powf(inv_m);
            Ok(GrowthRow {
                m,
                full_dimensional: hull.is_full_dimensional(),
                distance: d.distance,
                root,
                bound_root,
                bound_holds: root >= bound_root,
            })
        })
        .collect()
}
