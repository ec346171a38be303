use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::polytope::{dual_cone, RationalPolytope};
use crate::rational;

use super::{dot_f64, ReinhardtBody};

/// Default truncation of the recession directions, in log units.
pub const DEFAULT_DEPTH: f64 = 5.0;

fn normalize(v: &[f64]) -> Option<Vec<f64>> {
    let norm = dot_f64(v, v).sqrt();
    (norm > 0.0).then(|| v.iter().map(|c| c / norm).collect())
}

/// Unit directions generating `Γ°`: exact extreme rays (and both signs of
/// lineality) for `n <= 3`, otherwise seeded random directions, each
/// replaced by its coordinatewise absolute value when it leaves `Γ°`
/// (`R^n_+ ⊂ Γ°` because `S ⊂ R^n_+`).
pub fn hull_directions(s: &RationalPolytope, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let cone = dual_cone(s);
    if let Ok(gens) = cone.dual_rays() {
        return gens
            .all_directions()
            .iter()
            .filter_map(|d| normalize(&rational::vec_to_f64(d)))
            .collect();
    }
    let n = s.dim();
    let mut out: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _ in 0..8 * n {
        let u: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let u = if cone.dual_contains_f64(&u, 0.0) {
            u
        } else {
            u.iter().map(|c: &f64| c.abs()).collect()
        };
        if let Some(u) = normalize(&u) {
            out.push(u);
        }
    }
    out
}

/// Seeded points of `ch A - Γ°` with `|t| <= depth`.
///
/// The first samples are `ā - depth·g` for the barycenter `ā` of `A` and
/// each generating direction `g`; the rest combine random convex weights on
/// `A` with random nonnegative combinations of the directions.
pub fn hull_sampler(
    s: &RationalPolytope,
    k: &ReinhardtBody,
    depth: f64,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    let a = k.full_support_points()?;
    let n = s.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dirs = hull_directions(s, &mut rng);
    let bary: Vec<f64> = (0..n)
        .map(|j| a.iter().map(|p| p[j]).sum::<f64>() / a.len() as f64)
        .collect();
    let mut out = Vec::with_capacity(count);
    for d in &dirs {
        if out.len() == count {
            return Ok(out);
        }
        out.push(bary.iter().zip(d).map(|(b, g)| b - depth * g).collect());
    }
    while out.len() < count {
        let w: Vec<f64> = (0..a.len())
            .map(|_| -(1.0 - rng.gen::<f64>()).ln())
            .collect();
        let total: f64 = w.iter().sum();
        let point: Vec<f64> = (0..n)
            .map(|j| w.iter().zip(&a).map(|(wi, p)| wi * p[j]).sum::<f64>() / total)
            .collect();
        let mu: Vec<f64> = (0..dirs.len()).map(|_| rng.gen::<f64>()).collect();
        let comb: Vec<f64> = (0..n)
            .map(|j| mu.iter().zip(&dirs).map(|(m, d)| m * d[j]).sum())
            .collect();
        let r: f64 = rng.gen();
        let t = match normalize(&comb) {
            Some(u) => u.iter().map(|c| depth * r * c).collect(),
            None => vec![0.0; n],
        };
        out.push(point.iter().zip(&t).map(|(p, t)| p - t).collect());
    }
    Ok(out)
}
