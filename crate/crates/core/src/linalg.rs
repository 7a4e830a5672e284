//! Exact Gaussian elimination over any [`Field`].
//!
//! Pivots are chosen as the first nonzero entry in the column, so every
//! routine is deterministic.

use crate::error::{Error, Result};
use crate::field::Field;

/// Row-major dense matrix.
pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&m[i][c]) {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let v = field.mul(&f, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    row_reduce(field, &mut work).len()
}

pub fn transpose<E: Clone>(m: &Matrix<E>) -> Matrix<E> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Solves `A x = b` for square invertible `A`.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(field, &mut aug);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|row| row[n].clone()).collect())
}

pub fn inverse<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of `{ x : A x = 0 }`.
pub fn kernel<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut work = a.clone();
    let pivots = row_reduce(field, &mut work);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&work[r][free]);
            }
            v
        })
        .collect()
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter().zip(b).fold(field.zero(), |acc, (x, brow)| {
                        field.add(&acc, &field.mul(x, &brow[j]))
                    })
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix, `v A`.
pub fn vec_mat<F: Field>(field: &F, v: &[F::Elem], a: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter().zip(a).fold(field.zero(), |acc, (x, row)| {
                field.add(&acc, &field.mul(x, &row[j]))
            })
        })
        .collect()
}
