//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the solver paths of the library; exact geometry is redone by hand.
#![allow(dead_code)]

use cone_hull::rational::{from_f64, int, ratio, Rat};
use cone_hull::RationalPolytope;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, dens: &[i64]) -> Rat {
    let d = dens[rng.gen_range(0..dens.len())];
    ratio(rng.gen_range(lo * d..=hi * d), d)
}

pub fn rand_point(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64, dens: &[i64]) -> Vec<Rat> {
    (0..n).map(|_| rand_rat(rng, lo, hi, dens)).collect()
}

/// The origin together with `k` random points of `[0, max]^n`.
pub fn random_polytope(rng: &mut ChaCha8Rng, n: usize, k: usize, max: i64, dens: &[i64]) -> RationalPolytope {
    let mut pts = vec![vec![int(0); n]];
    pts.extend((0..k).map(|_| rand_point(rng, n, 0, max, dens)));
    RationalPolytope::new(n, pts).expect("origin-containing point cloud")
}

pub fn random_full_polytope(rng: &mut ChaCha8Rng, n: usize, k: usize, max: i64, dens: &[i64]) -> RationalPolytope {
    loop {
        let p = random_polytope(rng, n, k, max, dens);
        if exact_rank(p.vertices()) == n {
            return p;
        }
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_f64(r: &Rat) -> f64 {
    cone_hull::rational::to_f64(r)
}

pub fn vf(v: &[Rat]) -> Vec<f64> {
    v.iter().map(to_f64).collect()
}

pub fn vr(v: &[f64]) -> Vec<Rat> {
    v.iter().map(|&x| from_f64(x).unwrap()).collect()
}

/// Row-reduces a copy; returns the rank.
pub fn exact_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Unique solution of a square system, if any.
pub fn exact_solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

pub fn exact_det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return int(0);
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// A normal to the hyperplane through `n` points of `R^n` (n = 1, 2, 3), or
/// `None` when they are affinely dependent.
fn hyperplane_normal(pts: &[&Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = pts[0].len();
    let normal = match n {
        1 => vec![int(1)],
        2 => {
            let d: Vec<Rat> = (0..2).map(|j| &pts[1][j] - &pts[0][j]).collect();
            vec![-d[1].clone(), d[0].clone()]
        }
        3 => {
            let u: Vec<Rat> = (0..3).map(|j| &pts[1][j] - &pts[0][j]).collect();
            let v: Vec<Rat> = (0..3).map(|j| &pts[2][j] - &pts[0][j]).collect();
            vec![
                &u[1] * &v[2] - &u[2] * &v[1],
                &u[2] * &v[0] - &u[0] * &v[2],
                &u[0] * &v[1] - &u[1] * &v[0],
            ]
        }
        _ => panic!("oracle hyperplanes only for n <= 3"),
    };
    (!normal.iter().all(Zero::is_zero)).then_some(normal)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Facet inequalities `<a, x> <= b` of a full-dimensional point hull, found
/// by testing every hyperplane through `n` of the points (`n <= 3`).
#[derive(Debug, Clone)]
pub struct BruteHull {
    pub ineqs: Vec<(Vec<Rat>, Rat)>,
}

impl BruteHull {
    pub fn new(points: &[Vec<Rat>]) -> Self {
        let n = points[0].len();
        let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for sub in subsets(points.len(), n) {
            let chosen: Vec<&Vec<Rat>> = sub.iter().map(|&i| &points[i]).collect();
            let Some(a) = hyperplane_normal(&chosen) else {
                continue;
            };
            let b = dot(&a, chosen[0]);
            let side: Vec<Rat> = points.iter().map(|p| dot(&a, p) - &b).collect();
            if side.iter().all(|v| !v.is_positive()) {
                ineqs.push((a, b));
            } else if side.iter().all(|v| !v.is_negative()) {
                ineqs.push((a.iter().map(|c| -c).collect(), -b));
            }
        }
        Self { ineqs }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.ineqs.iter().all(|(a, b)| dot(a, x) <= *b)
    }
}

pub fn phi_a(a: &[Vec<f64>], s: &[f64]) -> f64 {
    a.iter().map(|p| dotf(p, s)).fold(f64::NEG_INFINITY, f64::max)
}

pub fn phi_a_exact(a: &[Vec<Rat>], s: &[Rat]) -> Rat {
    a.iter().map(|p| dot(p, s)).max().expect("nonempty A")
}

/// `max_{s ∈ S} <s, x> - φ_A(s)` by enumerating the vertices of the
/// arrangement of facet hyperplanes of `S` and the kink hyperplanes
/// `<s, a_i - a_j> = 0`; the objective is concave and piecewise linear, so
/// its maximum sits on one of them. `S` full-dimensional, `n <= 3`.
pub fn arrangement_max(s_points: &[Vec<Rat>], a: &[Vec<Rat>], x: &[Rat]) -> Rat {
    let n = x.len();
    let hull = BruteHull::new(s_points);
    let mut planes: Vec<(Vec<Rat>, Rat)> = hull.ineqs.clone();
    for (i, ai) in a.iter().enumerate() {
        for aj in &a[i + 1..] {
            let d: Vec<Rat> = ai.iter().zip(aj).map(|(p, q)| p - q).collect();
            if !d.iter().all(Zero::is_zero) {
                planes.push((d, int(0)));
            }
        }
    }
    let mut best: Option<Rat> = None;
    for sub in subsets(planes.len(), n) {
        let m: Vec<Vec<Rat>> = sub.iter().map(|&i| planes[i].0.clone()).collect();
        let b: Vec<Rat> = sub.iter().map(|&i| planes[i].1.clone()).collect();
        let Some(s) = exact_solve(&m, &b) else {
            continue;
        };
        if !hull.contains(&s) {
            continue;
        }
        let v = dot(&s, x) - phi_a_exact(a, &s);
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
    }
    best.expect("a bounded polytope has vertices")
}

/// `max <s, x> - φ_A(s)` over `s = Σ λ_i v_i` with `λ` on the simplex grid of
/// resolution `g`. Returns the grid maximum and the step bound `k/g` on the
/// weight error.
pub fn grid_max(s_points: &[Vec<f64>], a: &[Vec<f64>], x: &[f64], g: usize) -> (f64, f64) {
    let k = s_points.len();
    let n = x.len();
    let mut best = f64::NEG_INFINITY;
    let mut weights = vec![0usize; k];
    fn rec(
        idx: usize,
        left: usize,
        w: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if idx + 1 == w.len() {
            w[idx] = left;
            f(w);
            return;
        }
        for v in 0..=left {
            w[idx] = v;
            rec(idx + 1, left - v, w, f);
        }
    }
    rec(0, g, &mut weights, &mut |w| {
        let s: Vec<f64> = (0..n)
            .map(|j| {
                w.iter()
                    .zip(s_points)
                    .map(|(&l, v)| l as f64 * v[j])
                    .sum::<f64>()
                    / g as f64
            })
            .collect();
        best = best.max(dotf(&s, x) - phi_a(a, &s));
    });
    (best, k as f64 / g as f64)
}

/// Euclidean distance from `p` to the segment `[a, b]`.
fn dist_segment(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    let w: Vec<f64> = a.iter().zip(p).map(|(x, y)| y - x).collect();
    let len2 = dotf(&d, &d);
    let t = if len2 == 0.0 { 0.0 } else { (dotf(&w, &d) / len2).clamp(0.0, 1.0) };
    a.iter()
        .zip(&d)
        .zip(p)
        .map(|((ai, di), pi)| (ai + t * di - pi).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Distance from `p` to the triangle `abc` in `R^3`.
fn dist_triangle(p: &[f64], a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    let u: Vec<f64> = (0..3).map(|j| b[j] - a[j]).collect();
    let v: Vec<f64> = (0..3).map(|j| c[j] - a[j]).collect();
    let w: Vec<f64> = (0..3).map(|j| p[j] - a[j]).collect();
    let (uu, uv, vv) = (dotf(&u, &u), dotf(&u, &v), dotf(&v, &v));
    let (wu, wv) = (dotf(&w, &u), dotf(&w, &v));
    let den = uu * vv - uv * uv;
    let edges = dist_segment(p, a, b)
        .min(dist_segment(p, b, c))
        .min(dist_segment(p, a, c));
    if den.abs() < 1e-14 {
        return edges;
    }
    let s = (vv * wu - uv * wv) / den;
    let t = (uu * wv - uv * wu) / den;
    if s >= 0.0 && t >= 0.0 && s + t <= 1.0 {
        let q: Vec<f64> = (0..3).map(|j| a[j] + s * u[j] + t * v[j] - p[j]).collect();
        dotf(&q, &q).sqrt()
    } else {
        edges
    }
}

/// Distance from `p` to the convex hull of `points` (`n = 2, 3`): the
/// nearest point lies in a simplex spanned by hull points.
pub fn dist_to_hull(points: &[Vec<f64>], p: &[f64]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate().skip(i) {
            best = best.min(dist_segment(p, a, b));
            if p.len() == 3 {
                for c in &points[j + 1..] {
                    best = best.min(dist_triangle(p, a, b, c));
                }
            }
        }
    }
    best
}

/// `z^α` by repeated multiplication.
pub fn monomial(z: &[num::complex::Complex64], alpha: &[i64]) -> num::complex::Complex64 {
    let mut out = num::complex::Complex64::new(1.0, 0.0);
    for (zi, &a) in z.iter().zip(alpha) {
        let base = if a >= 0 { *zi } else { zi.inv() };
        for _ in 0..a.abs() {
            out *= base;
        }
    }
    out
}

/// Least-squares slope of `ys` against `xs`.
pub fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Maximizes `f` over `{w ∈ [lo, hi] : feasible(w)}`: the best point of a
/// uniform `steps^d` grid, then seeded random refinement around the
/// incumbent, keeping the radius after an improvement and shrinking it
/// after a miss. Near a ridge the improving set is a wedge of fixed angle
/// that an aligned grid can miss at every scale; random directions do not.
pub fn grid_then_refine(
    lo: &[f64],
    hi: &[f64],
    feasible: impl Fn(&[f64]) -> bool,
    f: impl Fn(&[f64]) -> f64,
    project: impl Fn(&[f64]) -> Vec<f64>,
    steps: usize,
    seed: u64,
) -> f64 {
    let d = lo.len();
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for code in 0..steps.pow(d as u32) {
        let mut c = code;
        let w: Vec<f64> = (0..d)
            .map(|j| {
                let k = c % steps;
                c /= steps;
                lo[j] + (hi[j] - lo[j]) * k as f64 / (steps - 1) as f64
            })
            .collect();
        if feasible(&w) {
            let v = f(&w);
            if v > best.0 {
                best = (v, w);
            }
        }
    }
    let mut r = rng(seed);
    let mut radius = (hi[0] - lo[0]) / (steps - 1) as f64;
    while radius > 1e-13 {
        let mut improved = false;
        for _ in 0..2000 {
            let w: Vec<f64> = best.1.iter().map(|c| c + radius * r.gen_range(-1.0..1.0)).collect();
            let w = project(&w);
            if feasible(&w) {
                let v = f(&w);
                if v > best.0 {
                    best = (v, w);
                    improved = true;
                }
            }
        }
        if !improved {
            radius *= 0.9;
        }
    }
    best.0
}

/// Grid maximization of `<s, x> - φ_A(s)` over `S = conv(points)`, run in
/// the weights `λ_1..λ_{k-1}` (`λ_k = 1 - Σ λ_i`) so the search domain is a
/// simplex on which the objective is concave.
pub fn weight_grid_max(points: &[Vec<f64>], a: &[Vec<f64>], x: &[f64], seed: u64) -> f64 {
    let k = points.len();
    let n = x.len();
    let s_of = |w: &[f64]| -> Vec<f64> {
        let last = 1.0 - w.iter().sum::<f64>();
        (0..n)
            .map(|j| w.iter().zip(points).map(|(l, v)| l * v[j]).sum::<f64>() + last * points[k - 1][j])
            .collect()
    };
    let feasible = |w: &[f64]| w.iter().all(|&l| l >= 0.0) && w.iter().sum::<f64>() <= 1.0;
    let objective = |w: &[f64]| {
        let s = s_of(w);
        dotf(&s, x) - phi_a(a, &s)
    };
    let steps = if k <= 3 { 41 } else { 13 };
    // Clamping keeps faces of S reachable: a maximizer with some weights at
    // exactly zero is never hit by unconstrained perturbations.
    let project = |w: &[f64]| {
        let mut w: Vec<f64> = w.iter().map(|l| l.max(0.0)).collect();
        let total: f64 = w.iter().sum();
        if total > 1.0 {
            w.iter_mut().for_each(|l| *l /= total);
        }
        w
    };
    grid_then_refine(&vec![0.0; k - 1], &vec![1.0; k - 1], feasible, objective, project, steps, seed)
}
