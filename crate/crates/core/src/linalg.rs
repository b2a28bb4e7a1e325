//! Exact dense linear algebra: integer determinants and ranks, and
//! row reduction over a field.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::Field;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank over the rationals of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (top, lead) = (m[r][c].clone(), m[i][c].clone());
            for j in c..ncols {
                let v = &m[i][j] * &top - &m[r][j] * &lead;
                m[i][j] = v;
            }
        }
        r += 1;
    }
    r
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut [Vec<F::Elem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for j in c..ncols {
            m[r][j] = field.mul(&m[r][j], &inv);
        }
        for i in 0..m.len() {
            if i == r || field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..ncols {
                let v = field.sub(&m[i][j], &field.mul(&factor, &m[r][j]));
                m[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : M x = 0}` for an `nrows x ncols` matrix over a field.
pub fn kernel<F: Field>(field: &F, matrix: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = matrix.to_vec();
    let pivots = rref(field, &mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&m[row][free]);
        }
        basis.push(v);
    }
    basis
}

pub fn field_rank<F: Field>(field: &F, matrix: &[Vec<F::Elem>], ncols: usize) -> usize {
    let mut m = matrix.to_vec();
    rref(field, &mut m, ncols).len()
}
