//! Dense two-phase primal simplex with Bland's rule.
//!
//! The solver is generic over [`LpScalar`]: over [`Rat`] every decision is
//! exact, over `f64` sign tests use a small absolute tolerance. Problems in
//! this crate have at most a few hundred columns, so a dense tableau is
//! adequate.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{Signed, Zero};

use crate::rational::Rat;

pub trait LpScalar:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Sign tests used for pivoting.
    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn is_zero_val(&self) -> bool {
        !self.is_pos() && !self.is_neg()
    }
    /// Phase-one residual above which a problem is declared infeasible.
    fn infeasible(residual: &Self) -> bool;
}

impl LpScalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as num::One>::one()
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn infeasible(residual: &Self) -> bool {
        residual.is_positive()
    }
}

pub const F64_PIVOT_TOL: f64 = 1e-11;
pub const F64_FEASIBILITY_TOL: f64 = 1e-9;

impl LpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_pos(&self) -> bool {
        *self > F64_PIVOT_TOL
    }
    fn is_neg(&self) -> bool {
        *self < -F64_PIVOT_TOL
    }
    fn infeasible(residual: &Self) -> bool {
        *residual > F64_FEASIBILITY_TOL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { x: Vec<T>, value: T },
    Infeasible,
    Unbounded,
}

impl<T> LpOutcome<T> {
    pub fn optimal(self) -> Option<(Vec<T>, T)> {
        match self {
            LpOutcome::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

/// `maximize c.x` subject to linear rows, with each variable either
/// nonnegative (default) or free.
#[derive(Debug, Clone)]
pub struct LinearProgram<T> {
    num_vars: usize,
    objective: Vec<T>,
    free: Vec<bool>,
    rows: Vec<(Vec<T>, Relation, T)>,
    minimizing: bool,
}

impl<T: LpScalar> LinearProgram<T> {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![T::zero(); num_vars],
            free: vec![false; num_vars],
            rows: Vec::new(),
            minimizing: false,
        }
    }

    pub fn maximize(&mut self, objective: Vec<T>) -> &mut Self {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
        self.minimizing = false;
        self
    }

    /// The reported optimal value is in the minimization sense.
    pub fn minimize(&mut self, objective: Vec<T>) -> &mut Self {
        self.maximize(objective.into_iter().map(|c| -c).collect());
        self.minimizing = true;
        self
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<T>, rel: Relation, rhs: T) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars);
        self.rows.push((coeffs, rel, rhs));
        self
    }

    pub fn solve(&self) -> LpOutcome<T> {
        // Column layout: structural (free vars split in two), slack/surplus,
        // artificial.
        let mut col_of = Vec::with_capacity(self.num_vars);
        let mut ns = 0;
        for &f in &self.free {
            col_of.push(ns);
            ns += if f { 2 } else { 1 };
        }
        let m = self.rows.len();
        let mut rows: Vec<(Vec<T>, Relation, T)> = Vec::with_capacity(m);
        for (coeffs, rel, rhs) in &self.rows {
            let mut r = vec![T::zero(); ns];
            for (j, c) in coeffs.iter().enumerate() {
                r[col_of[j]] = c.clone();
                if self.free[j] {
                    r[col_of[j] + 1] = -c.clone();
                }
            }
            let (r, rel, rhs) = if rhs.is_neg() {
                let flipped = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (r.into_iter().map(|v| -v).collect(), flipped, -rhs.clone())
            } else {
                (r, *rel, rhs.clone())
            };
            rows.push((r, rel, rhs));
        }
        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let width = ns + n_slack + n_art;
        let rhs_col = width;
        let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut si, mut ai) = (ns, ns + n_slack);
        for (coeffs, rel, rhs) in rows {
            let mut row = coeffs;
            row.resize(width + 1, T::zero());
            row[rhs_col] = rhs;
            match rel {
                Relation::Le => {
                    row[si] = T::one();
                    basis.push(si);
                    si += 1;
                }
                Relation::Ge => {
                    row[si] = -T::one();
                    si += 1;
                    row[ai] = T::one();
                    basis.push(ai);
                    ai += 1;
                }
                Relation::Eq => {
                    row[ai] = T::one();
                    basis.push(ai);
                    ai += 1;
                }
            }
            tab.push(row);
        }
        let art_start = ns + n_slack;
        let mut t = Tableau {
            tab,
            basis,
            width,
            allowed: vec![true; width],
        };

        if n_art > 0 {
            let cost: Vec<T> = (0..width)
                .map(|j| if j >= art_start { -T::one() } else { T::zero() })
                .collect();
            if t.run(&cost).is_err() {
                // Phase one is bounded by construction.
                return LpOutcome::Infeasible;
            }
            let residual = t
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| b >= art_start)
                .fold(T::zero(), |acc, (i, _)| acc + t.tab[i][rhs_col].clone());
            if T::infeasible(&residual) {
                return LpOutcome::Infeasible;
            }
            // Drive remaining (zero-level) artificials out of the basis.
            let mut i = 0;
            while i < t.tab.len() {
                if t.basis[i] >= art_start {
                    match (0..art_start).find(|&j| !t.tab[i][j].is_zero_val()) {
                        Some(j) => {
                            t.pivot(i, j);
                            i += 1;
                        }
                        None => {
                            t.tab.remove(i);
                            t.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
            for j in art_start..width {
                t.allowed[j] = false;
            }
        }

        let mut cost = vec![T::zero(); width];
        for (j, c) in self.objective.iter().enumerate() {
            cost[col_of[j]] = c.clone();
            if self.free[j] {
                cost[col_of[j] + 1] = -c.clone();
            }
        }
        if t.run(&cost).is_err() {
            return LpOutcome::Unbounded;
        }
        let mut values = vec![T::zero(); width];
        for (i, &b) in t.basis.iter().enumerate() {
            values[b] = t.tab[i][rhs_col].clone();
        }
        let x: Vec<T> = (0..self.num_vars)
            .map(|j| {
                let c = col_of[j];
                if self.free[j] {
                    values[c].clone() - values[c + 1].clone()
                } else {
                    values[c].clone()
                }
            })
            .collect();
        let value = self
            .objective
            .iter()
            .zip(&x)
            .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone());
        let value = if self.minimizing { -value } else { value };
        LpOutcome::Optimal { x, value }
    }
}

struct Tableau<T> {
    tab: Vec<Vec<T>>,
    basis: Vec<usize>,
    width: usize,
    allowed: Vec<bool>,
}

struct Unbounded;

impl<T: LpScalar> Tableau<T> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.tab[r][c].clone();
        for v in self.tab[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.tab[r].clone();
        for (i, row) in self.tab.iter_mut().enumerate() {
            if i == r || row[c] == T::zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if *pv != T::zero() {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
            row[c] = T::zero();
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost . x` from the current basic feasible solution.
    fn run(&mut self, cost: &[T]) -> Result<(), Unbounded> {
        let rhs = self.width;
        loop {
            let mut entering = None;
            for j in 0..self.width {
                if !self.allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let reduced = self
                    .basis
                    .iter()
                    .enumerate()
                    .fold(cost[j].clone(), |acc, (i, &b)| {
                        acc - cost[b].clone() * self.tab[i][j].clone()
                    });
                if reduced.is_pos() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.tab.len() {
                if !self.tab[i][c].is_pos() {
                    continue;
                }
                let ratio = self.tab[i][rhs].clone() / self.tab[i][c].clone();
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best
                            || (!(ratio.clone() - best.clone()).is_pos()
                                && !(best.clone() - ratio.clone()).is_pos()
                                && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Unbounded);
            };
            self.pivot(r, c);
        }
    }
}
