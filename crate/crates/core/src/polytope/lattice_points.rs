use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::rational::{ratio, Rat};

use super::RationalPolytope;

/// Upper bound on the number of bounding-box candidates a lattice scan may
/// visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget(pub u64);

impl EnumerationBudget {
    pub const DEFAULT: EnumerationBudget = EnumerationBudget(10_000_000);
    pub const ENV_VAR: &'static str = "CONE_HULL_BUDGET";

    /// Reads `CONE_HULL_BUDGET`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(EnumerationBudget)
            .unwrap_or(Self::DEFAULT)
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// The lattice points of `m S`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSet {
    pub m: u64,
    pub points: Vec<Vec<i64>>,
}

impl ExponentSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, alpha: &[i64]) -> bool {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(alpha))
            .is_ok()
    }
}

/// Scans the box `[0, ⌈m max_i v_i⌉]^n` and keeps the members of `m S`.
pub fn enumerate_exponents(
    s: &RationalPolytope,
    m: u64,
    budget: EnumerationBudget,
) -> Result<ExponentSet> {
    if m == 0 {
        return Err(Error::ZeroScaling);
    }
    let mi = i64::try_from(m).map_err(|_| Error::Overflow("scaling factor"))?;
    let upper = s.scaled_box(mi)?;
    let candidates = upper
        .iter()
        .try_fold(1u128, |acc, &u| acc.checked_mul(u as u128 + 1))
        .unwrap_or(u128::MAX);
    if candidates > budget.0 as u128 {
        return Err(Error::BudgetExceeded {
            candidates,
            budget: budget.0,
        });
    }
    let n = s.dim();
    let mut points = Vec::new();
    let mut alpha = vec![0i64; n];
    'scan: loop {
        if s.contains_scaled_lattice_point(&alpha, mi) {
            points.push(alpha.clone());
        }
        // odometer with the last coordinate fastest keeps the output sorted
        let mut k = n;
        loop {
            if k == 0 {
                break 'scan;
            }
            k -= 1;
            if alpha[k] < upper[k] {
                alpha[k] += 1;
                break;
            }
            alpha[k] = 0;
        }
    }
    Ok(ExponentSet { m, points })
}

/// Lattice points of `m S` that can be vertices of their hull: a point that
/// is the midpoint of two others in the set is dropped.
fn hull_candidates(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let set: HashSet<&[i64]> = points.iter().map(|p| p.as_slice()).collect();
    let n = points.first().map_or(0, Vec::len);
    let steps: Vec<Vec<i64>> = (0..3usize.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % 3) as i64 - 1;
                    code /= 3;
                    d
                })
                .collect::<Vec<i64>>()
        })
        .filter(|d| d.iter().any(|&c| c != 0))
        .collect();
    points
        .iter()
        .filter(|p| {
            !steps.iter().any(|d| {
                let plus: Vec<i64> = p.iter().zip(d).map(|(a, b)| a + b).collect();
                let minus: Vec<i64> = p.iter().zip(d).map(|(a, b)| a - b).collect();
                set.contains(plus.as_slice()) && set.contains(minus.as_slice())
            })
        })
        .cloned()
        .collect()
}

/// `ch(m S ∩ N^n)`, an integral polytope.
pub(crate) fn integer_hull(
    s: &RationalPolytope,
    m: u64,
    budget: EnumerationBudget,
) -> Result<RationalPolytope> {
    let set = enumerate_exponents(s, m, budget)?;
    let pts = hull_candidates(&set.points)
        .into_iter()
        .map(|p| p.iter().map(|&c| ratio(c, 1)).collect())
        .collect();
    RationalPolytope::new(s.dim(), pts)
}

/// `S_m = ch(S ∩ (1/m) Z^n)`.
pub fn refine(s: &RationalPolytope, m: u64, budget: EnumerationBudget) -> Result<RationalPolytope> {
    let hull = integer_hull(s, m, budget)?;
    let inv = Rat::new(1.into(), m.into());
    hull.scale(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> EnumerationBudget {
        EnumerationBudget::DEFAULT
    }

    #[test]
    fn simplex_exponents() {
        let simplex = RationalPolytope::standard_simplex(2);
        let set = enumerate_exponents(&simplex, 2, budget()).unwrap();
        assert_eq!(
            set.points,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0]
            ]
        );
        assert!(set.contains(&[1, 1]));
        assert!(!set.contains(&[2, 1]));
    }

    #[test]
    fn triangle_exponents() {
        let t = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 0], &[1, 1]]).unwrap();
        let one = enumerate_exponents(&t, 1, budget()).unwrap();
        assert_eq!(one.points, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        let two = enumerate_exponents(&t, 2, budget()).unwrap();
        assert_eq!(two.len(), 6);
        assert!(two.points.iter().all(|p| 0 <= p[1] && p[1] <= p[0] && p[0] <= 2));
    }

    #[test]
    fn refine_examples() {
        let seg = RationalPolytope::from_strs(2, &[&["0", "0"], &["1", "1/2"]]).unwrap();
        assert!(refine(&seg, 1, budget()).unwrap().is_origin());
        assert_eq!(refine(&seg, 2, budget()).unwrap(), seg);
        let simplex = RationalPolytope::standard_simplex(3);
        assert_eq!(refine(&simplex, 3, budget()).unwrap(), simplex);
    }

    #[test]
    fn budget_guard() {
        let big = RationalPolytope::from_i64(2, &[&[0, 0], &[1000, 1000]]).unwrap();
        assert!(matches!(
            enumerate_exponents(&big, 100, EnumerationBudget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(
            enumerate_exponents(&big, 0, budget()),
            Err(Error::ZeroScaling)
        );
    }
}
