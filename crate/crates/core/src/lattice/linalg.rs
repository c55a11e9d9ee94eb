//! Exact rational Gauss-Jordan routines used by the polytope and cone code.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<BigRational>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<BigRational>], cols: usize) -> QMatrix {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of the square system `m x = b`, if any.
pub fn solve(m: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut aug: QMatrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

pub fn inverse(m: &[Vec<BigRational>]) -> Option<QMatrix> {
    let n = m.len();
    let mut aug: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}
