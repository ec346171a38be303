//! Compact Reinhardt sets in logarithmic coordinates and their extremal
//! functions with respect to the cone `R_+ S`.
//!
//! A body is a union of pieces, each the torus-invariant preimage of a
//! polytope `ch A` under `Log_J` on a coordinate subspace `C^{*J}`.

mod sampler;
mod siciak;
mod vsk;

pub use sampler::{hull_directions, hull_sampler, DEFAULT_DEPTH};
pub use siciak::{siciak_monomial, MonomialSiciak};
pub use vsk::{
    check_precondition, eval_vsk, eval_vsk_exact, hull_membership, vsk_on_axes,
    HullCertificate, VskValue, HULL_TOL,
};

use crate::error::{Error, Result};
use crate::polytope::validate_index_set;

/// One piece `Log_J^{-1}(ch A)` of a Reinhardt body.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    /// Ordered, 0-based coordinate indices.
    pub support: Vec<usize>,
    /// Points of `R^{|J|}`, in the order of `support`.
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReinhardtBody {
    dim: usize,
    pieces: Vec<Piece>,
}

impl ReinhardtBody {
    pub fn new(dim: usize, pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidBody("no pieces".into()));
        }
        for (i, p) in pieces.iter().enumerate() {
            validate_index_set(&p.support, dim)?;
            if p.points.is_empty() {
                return Err(Error::InvalidBody(format!("piece {i} has no points")));
            }
            for a in &p.points {
                if a.len() != p.support.len() {
                    return Err(Error::DimensionMismatch {
                        expected: p.support.len(),
                        found: a.len(),
                    });
                }
                if let Some(&v) = a.iter().find(|v| !v.is_finite()) {
                    return Err(Error::NonFinite(v));
                }
            }
        }
        Ok(Self { dim, pieces })
    }

    /// `K = Log^{-1}(ch A) ⊂ C^{*n}`.
    pub fn from_points(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(
            dim,
            vec![Piece {
                support: (0..dim).collect(),
                points,
            }],
        )
    }

    /// The unit torus `T^n`, i.e. `A = {0}`.
    pub fn torus(dim: usize) -> Self {
        Self::from_points(dim, vec![vec![0.0; dim]]).expect("torus is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    fn is_full(&self, p: &Piece) -> bool {
        p.support.len() == self.dim
    }

    pub fn has_full_support_piece(&self) -> bool {
        self.pieces.iter().any(|p| self.is_full(p))
    }

    pub fn only_full_support_pieces(&self) -> bool {
        self.pieces.iter().all(|p| self.is_full(p))
    }

    /// Points of `A = Log(K ∩ C^{*n})` in standard coordinate order, gathered
    /// over all full-support pieces.
    pub fn full_support_points(&self) -> Result<Vec<Vec<f64>>> {
        let pts: Vec<Vec<f64>> = self
            .pieces
            .iter()
            .filter(|p| self.is_full(p))
            .flat_map(|p| {
                p.points.iter().map(move |a| {
                    let mut out = vec![0.0; self.dim];
                    for (&j, v) in p.support.iter().zip(a) {
                        out[j] = *v;
                    }
                    out
                })
            })
            .collect();
        if pts.is_empty() {
            Err(Error::NoFullSupportPiece)
        } else {
            Ok(pts)
        }
    }

    /// `K_J = π_J(K)`: each piece is projected onto the coordinates it shares
    /// with `J`; pieces meeting `J` in no coordinate project to the origin and
    /// are dropped.
    pub fn project(&self, indices: &[usize]) -> Result<Self> {
        validate_index_set(indices, self.dim)?;
        let pieces: Vec<Piece> = self
            .pieces
            .iter()
            .filter_map(|p| {
                let shared: Vec<(usize, usize)> = indices
                    .iter()
                    .enumerate()
                    .filter_map(|(pos, j)| {
                        p.support.iter().position(|s| s == j).map(|k| (pos, k))
                    })
                    .collect();
                if shared.is_empty() {
                    return None;
                }
                Some(Piece {
                    support: shared.iter().map(|&(pos, _)| pos).collect(),
                    points: p
                        .points
                        .iter()
                        .map(|a| shared.iter().map(|&(_, k)| a[k]).collect())
                        .collect(),
                })
            })
            .collect();
        if pieces.is_empty() {
            return Err(Error::InvalidBody(
                "projection onto the index set is empty".into(),
            ));
        }
        Self::new(indices.len(), pieces)
    }
}

/// `φ_A(s) = max_{a ∈ A} <a, s>` over the full-support log image.
pub fn support_a(k: &ReinhardtBody, s: &[f64]) -> Result<f64> {
    if s.len() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            found: s.len(),
        });
    }
    Ok(max_dot(&k.full_support_points()?, s))
}

pub(crate) fn max_dot(points: &[Vec<f64>], s: &[f64]) -> f64 {
    points
        .iter()
        .map(|a| dot_f64(a, s))
        .fold(f64::NEG_INFINITY, f64::max)
}

pub(crate) fn dot_f64(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
