use crate::error::{Error, Result};
use crate::polytope::{enumerate_exponents, EnumerationBudget, RationalPolytope};

use super::{dot_f64, max_dot, ReinhardtBody};

/// `log` of the monomial Siciak approximant of degree `m`:
/// `max_{α ∈ mS ∩ N^n} (<α, x> - φ_A(α)) / m`.
///
/// Exponents and their `φ_A` values are computed once, so one instance can
/// be evaluated at many points.
#[derive(Debug, Clone)]
pub struct MonomialSiciak {
    m: u64,
    exponents: Vec<Vec<f64>>,
    phi: Vec<f64>,
}

impl MonomialSiciak {
    pub fn new(
        s: &RationalPolytope,
        k: &ReinhardtBody,
        m: u64,
        budget: EnumerationBudget,
    ) -> Result<Self> {
        if s.dim() != k.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: k.dim(),
            });
        }
        let a = k.full_support_points()?;
        let set = enumerate_exponents(s, m, budget)?;
        let exponents: Vec<Vec<f64>> = set
            .points
            .iter()
            .map(|p| p.iter().map(|&c| c as f64).collect())
            .collect();
        let phi = exponents.iter().map(|e| max_dot(&a, e)).collect();
        Ok(Self { m, exponents, phi })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn num_exponents(&self) -> usize {
        self.exponents.len()
    }

    /// Value and the maximizing exponent.
    pub fn eval(&self, x: &[f64]) -> (f64, Vec<i64>) {
        let (best, idx) = self
            .exponents
            .iter()
            .zip(&self.phi)
            .enumerate()
            .map(|(i, (e, p))| (dot_f64(e, x) - p, i))
            .fold((f64::NEG_INFINITY, 0), |acc, cur| if cur.0 > acc.0 { cur } else { acc });
        let alpha = self.exponents[idx].iter().map(|&c| c as i64).collect();
        (best / self.m as f64, alpha)
    }
}

pub fn siciak_monomial(
    s: &RationalPolytope,
    k: &ReinhardtBody,
    m: u64,
    x: &[f64],
    budget: EnumerationBudget,
) -> Result<f64> {
    if x.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: x.len(),
        });
    }
    Ok(MonomialSiciak::new(s, k, m, budget)?.eval(x).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_simplex_degree_one() {
        let s = RationalPolytope::standard_simplex(2);
        let sic = MonomialSiciak::new(&s, &ReinhardtBody::torus(2), 1, EnumerationBudget::DEFAULT)
            .unwrap();
        let (v, alpha) = sic.eval(&[1.0, -1.0]);
        assert_eq!(v, 1.0);
        assert_eq!(alpha, vec![1, 0]);
    }

    #[test]
    fn half_segment_gap_closes_at_two() {
        let s = RationalPolytope::from_strs(2, &[&["0", "0"], &["1", "1/2"]]).unwrap();
        let k = ReinhardtBody::torus(2);
        let b = EnumerationBudget::DEFAULT;
        assert_eq!(siciak_monomial(&s, &k, 1, &[1.0, 1.0], b).unwrap(), 0.0);
        assert_eq!(siciak_monomial(&s, &k, 2, &[1.0, 1.0], b).unwrap(), 1.5);
    }
}
