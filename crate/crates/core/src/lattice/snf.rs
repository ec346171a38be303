//! Smith normal form over the integers with unimodular transforms.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal with
/// nonnegative entries, each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[i][i].clone()).collect()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix, inner: usize, cols: usize) -> IntMatrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// row[target] += f * row[source]
fn add_row(m: &mut IntMatrix, target: usize, source: usize, f: &BigInt) {
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(&src) {
        *t += f * s;
    }
}

/// col[target] += f * col[source]
fn add_col(m: &mut IntMatrix, target: usize, source: usize, f: &BigInt) {
    for row in m.iter_mut() {
        let s = row[source].clone();
        row[target] += f * s;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for x in m[i].iter_mut() {
        *x = -&*x;
    }
}

pub fn smith_normal_form(a: &IntMatrix, ncols: usize) -> Smith {
    let nrows = a.len();
    let mut d = a.clone();
    let mut u = identity(nrows);
    let mut v = identity(ncols);
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let Some((pi, pj)) = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !d[i][j].is_zero())
            .min_by_key(|&(i, j)| d[i][j].abs())
        else {
            break;
        };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        let mut dirty = false;
        for i in t + 1..nrows {
            if d[i][t].is_zero() {
                continue;
            }
            let q = d[i][t].div_floor(&d[t][t]);
            add_row(&mut d, i, t, &-&q);
            add_row(&mut u, i, t, &-&q);
            dirty |= !d[i][t].is_zero();
        }
        for j in t + 1..ncols {
            if d[t][j].is_zero() {
                continue;
            }
            let q = d[t][j].div_floor(&d[t][t]);
            add_col(&mut d, j, t, &-&q);
            add_col(&mut v, j, t, &-&q);
            dirty |= !d[t][j].is_zero();
        }
        if dirty {
            // a smaller remainder appeared; restart with a new pivot
            continue;
        }
        // enforce divisibility of the rest of the block
        let bad = (t + 1..nrows)
            .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
            .find(|&(i, j)| !d[i][j].is_multiple_of(&d[t][t]));
        if let Some((i, _)) = bad {
            add_row(&mut d, t, i, &BigInt::one());
            add_row(&mut u, t, i, &BigInt::one());
            continue;
        }
        if d[t][t].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    Smith { u, d, v, rank: t }
}

/// Basis (as columns, returned as a list of vectors) of the integer kernel
/// `{x ∈ Z^n : a x = 0}`.
pub fn integer_kernel(a: &IntMatrix, ncols: usize) -> Vec<Vec<BigInt>> {
    if a.is_empty() {
        return identity(ncols);
    }
    let s = smith_normal_form(a, ncols);
    (s.rank..ncols)
        .map(|j| s.v.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Integer determinant by fraction-free elimination (Bareiss).
pub fn int_determinant(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = val / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
