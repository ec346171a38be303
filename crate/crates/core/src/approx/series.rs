use std::collections::BTreeMap;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::monomial;
use crate::polytope::{dual_cone, RationalPolytope};
use crate::rational::{self, Rat};

/// Term moduli above this abort evaluation.
pub const OVERFLOW_GUARD: f64 = 1e300;

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub alpha: Vec<i64>,
    pub coeff: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesKind {
    /// Finitely many terms.
    Terms(Vec<Term>),
    /// `Σ_k c^k z^{k α0}`.
    Geometric { alpha0: Vec<i64>, c: Complex64 },
}

/// A power series whose exponents lie in `R_+ S ∩ N^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeSeries {
    s: RationalPolytope,
    kind: SeriesKind,
}

/// Exponent membership in `R_+ S`, decided twice: by the half-space form of
/// the cone and by feasibility of the ray program. The two must agree.
pub(crate) fn check_exponent(s: &RationalPolytope, alpha: &[i64]) -> Result<()> {
    if alpha.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: alpha.len(),
        });
    }
    if alpha.iter().any(|&a| a < 0) {
        return Err(Error::ExponentOutsideCone(alpha.to_vec()));
    }
    let a: Vec<Rat> = rational::vec_from_i64(alpha);
    let by_halfspaces = dual_cone(s).contains(&a);
    let by_ray = s.ray_scaling_lp(&a).is_some();
    match (by_halfspaces, by_ray) {
        (true, true) => Ok(()),
        (false, false) => Err(Error::ExponentOutsideCone(alpha.to_vec())),
        _ => Err(Error::Solver(format!(
            "cone membership of {alpha:?} disagrees between half-spaces and ray program"
        ))),
    }
}

fn degree(alpha: &[i64]) -> i64 {
    alpha.iter().sum()
}

impl ConeSeries {
    /// Repeated exponents are merged by adding their coefficients.
    pub fn from_terms(s: &RationalPolytope, terms: Vec<Term>) -> Result<Self> {
        let mut merged: BTreeMap<Vec<i64>, Complex64> = BTreeMap::new();
        for t in terms {
            check_exponent(s, &t.alpha)?;
            if !(t.coeff.re.is_finite() && t.coeff.im.is_finite()) {
                return Err(Error::NonFinite(t.coeff.norm()));
            }
            *merged.entry(t.alpha).or_default() += t.coeff;
        }
        let mut terms: Vec<Term> = merged
            .into_iter()
            .map(|(alpha, coeff)| Term { alpha, coeff })
            .collect();
        terms.sort_by(|a, b| degree(&a.alpha).cmp(&degree(&b.alpha)).then(a.alpha.cmp(&b.alpha)));
        Ok(Self {
            s: s.clone(),
            kind: SeriesKind::Terms(terms),
        })
    }

    pub fn geometric(s: &RationalPolytope, alpha0: Vec<i64>, c: Complex64) -> Result<Self> {
        check_exponent(s, &alpha0)?;
        if alpha0.iter().all(|&a| a == 0) {
            return Err(Error::PreconditionViolated(
                "geometric exponent must be nonzero".into(),
            ));
        }
        if !(c.re.is_finite() && c.im.is_finite()) {
            return Err(Error::NonFinite(c.norm()));
        }
        Ok(Self {
            s: s.clone(),
            kind: SeriesKind::Geometric { alpha0, c },
        })
    }

    pub fn polytope(&self) -> &RationalPolytope {
        &self.s
    }

    pub fn kind(&self) -> &SeriesKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.s.dim()
    }

    /// Every coefficient real and nonnegative; the modulus over a torus
    /// orbit is then largest at the positive real point.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        let nonneg = |c: &Complex64| c.im == 0.0 && c.re >= 0.0;
        match &self.kind {
            SeriesKind::Terms(ts) => ts.iter().all(|t| nonneg(&t.coeff)),
            SeriesKind::Geometric { c, .. } => nonneg(c),
        }
    }

    /// Terms with `|α|_1 <= n`.
    pub fn terms_up_to(&self, n: u64) -> Vec<Term> {
        let n = n as i64;
        match &self.kind {
            SeriesKind::Terms(ts) => ts
                .iter()
                .filter(|t| degree(&t.alpha) <= n)
                .cloned()
                .collect(),
            SeriesKind::Geometric { alpha0, c } => {
                let kmax = n / degree(alpha0);
                (0..=kmax)
                    .map(|k| Term {
                        alpha: alpha0.iter().map(|a| a * k).collect(),
                        coeff: c.powi(k as i32),
                    })
                    .collect()
            }
        }
    }

    fn guard(value: f64, index: usize) -> Result<()> {
        if value.is_finite() && value <= OVERFLOW_GUARD {
            Ok(())
        } else {
            Err(Error::DivergentOnSample {
                index,
                modulus: value,
            })
        }
    }

    /// `(f(z), f(z) - f_N(z))`; `index` labels the sample in errors.
    pub fn eval_with_tail(&self, z: &[Complex64], n: u64, index: usize) -> Result<(Complex64, Complex64)> {
        match &self.kind {
            SeriesKind::Terms(ts) => {
                let mut total = Complex64::new(0.0, 0.0);
                let mut tail = Complex64::new(0.0, 0.0);
                for t in ts {
                    let v = t.coeff * monomial(z, &t.alpha);
                    Self::guard(v.norm(), index)?;
                    total += v;
                    if degree(&t.alpha) > n as i64 {
                        tail += v;
                    }
                }
                Ok((total, tail))
            }
            SeriesKind::Geometric { alpha0, c } => {
                let w = c * monomial(z, alpha0);
                if !(w.norm() < 1.0) {
                    return Err(Error::DivergentOnSample {
                        index,
                        modulus: w.norm(),
                    });
                }
                let kmax = n as i64 / degree(alpha0);
                let one = Complex64::new(1.0, 0.0);
                let total = one / (one - w);
                // closed-form remainder avoids cancellation in f - f_N
                let tail = w.powi((kmax + 1) as i32) * total;
                Ok((total, tail))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag() -> RationalPolytope {
        RationalPolytope::from_i64(2, &[&[0, 0], &[1, 1]]).unwrap()
    }

    #[test]
    fn geometric_truncation_terms() {
        let f = ConeSeries::geometric(&diag(), vec![1, 1], Complex64::new(0.25, 0.0)).unwrap();
        let ts = f.terms_up_to(6);
        assert_eq!(ts.len(), 4);
        assert_eq!(ts[3].alpha, vec![3, 3]);
        assert!((ts[3].coeff.re - 1.0 / 64.0).abs() < 1e-18);
        assert_eq!(f.terms_up_to(0).len(), 1);
    }

    #[test]
    fn rejects_exponent_outside_cone() {
        let t = Term {
            alpha: vec![1, 0],
            coeff: Complex64::new(1.0, 0.0),
        };
        assert_eq!(
            ConeSeries::from_terms(&diag(), vec![t]),
            Err(Error::ExponentOutsideCone(vec![1, 0]))
        );
    }

    #[test]
    fn divergence_is_reported() {
        let f = ConeSeries::geometric(&diag(), vec![1, 1], Complex64::new(0.25, 0.0)).unwrap();
        let z = [Complex64::new(3.0, 0.0), Complex64::new(3.0, 0.0)];
        assert!(matches!(
            f.eval_with_tail(&z, 4, 7),
            Err(Error::DivergentOnSample { index: 7, .. })
        ));
    }
}
