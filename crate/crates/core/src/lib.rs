//! Convex-geometric and extremal-function toolkit for polynomial
//! approximation with exponents restricted to a cone `R_+ S`.
//!
//! `S ⊂ R^n_+` is a rational polytope containing the origin. Compact
//! Reinhardt sets are handled through their logarithmic images, where the
//! extremal function is a Legendre-Fenchel transform and hulls are
//! Minkowski differences with the dual cone.

pub mod approx;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rational;

pub use error::{Error, Result};
pub use polytope::{ConeRep, ExponentSet, RationalPolytope};
pub use rational::Rat;
