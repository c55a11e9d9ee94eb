//! Smith normal form by gcd-driven row/column reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v == s` with `u`, `v` unimodular and `s` diagonal with `d1 | d2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries of `s`, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal(&self.s)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn diagonal(s: &IntMatrix) -> Vec<BigInt> {
    (0..s.rows().min(s.cols()))
        .map(|i| s.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect()
}

/// Full decomposition with transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut red = Reducer {
        s: m.clone(),
        u: Some(IntMatrix::identity(m.rows())),
        v: Some(IntMatrix::identity(m.cols())),
    };
    red.run();
    SmithNormalForm { u: red.u.unwrap(), s: red.s, v: red.v.unwrap() }
}

/// Invariant factors only; skips transform bookkeeping.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut red = Reducer { s: m.clone(), u: None, v: None };
    red.run();
    diagonal(&red.s)
}

/// Rank over the rationals, read off the Smith form.
pub fn rank(m: &IntMatrix) -> usize {
    smith_diagonal(m).len()
}

struct Reducer {
    s: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.s.add_row_multiple(dst, src, k);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, k);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.s.add_col_multiple(dst, src, k);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, k);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.s.negate_row(r);
        if let Some(u) = &mut self.u {
            u.negate_row(r);
        }
    }

    /// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let a = self.s.get(i, j).abs();
                if a.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        let (rows, cols) = (self.s.rows(), self.s.cols());
        for t in 0..rows.min(cols) {
            let Some((i, j)) = self.min_entry(t) else {
                return;
            };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let p = self.s.get(t, t).clone();
                let mut residue = false;
                for i in t + 1..rows {
                    let q = self.s.get(i, t).div_floor(&p);
                    self.add_row(i, t, &-q);
                    residue |= !self.s.get(i, t).is_zero();
                }
                for j in t + 1..cols {
                    let q = self.s.get(t, j).div_floor(&p);
                    self.add_col(j, t, &-q);
                    residue |= !self.s.get(t, j).is_zero();
                }
                if residue {
                    // A remainder smaller than the pivot exists in row t or column t.
                    let mut best: Option<(bool, usize, BigInt)> = None;
                    for i in t + 1..rows {
                        let a = self.s.get(i, t).abs();
                        if !a.is_zero() && best.as_ref().is_none_or(|b| a < b.2) {
                            best = Some((true, i, a));
                        }
                    }
                    for j in t + 1..cols {
                        let a = self.s.get(t, j).abs();
                        if !a.is_zero() && best.as_ref().is_none_or(|b| a < b.2) {
                            best = Some((false, j, a));
                        }
                    }
                    match best {
                        Some((true, i, _)) => self.swap_rows(t, i),
                        Some((false, j, _)) => self.swap_cols(t, j),
                        None => unreachable!(),
                    }
                    continue;
                }
                // Divisibility: fold an offending row into the pivot row.
                let offender = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.s.get(i, j).is_multiple_of(&p))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.s.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}
