use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::linalg;
use super::vector::LatticeVector;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major, arbitrary precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape { rows, cols, got: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from small-integer rows; panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            entries.extend(r.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        Self { rows: rows.len(), cols, entries }
    }

    /// Matrix whose rows are the given lattice vectors.
    pub fn from_vectors(vs: &[LatticeVector], dim: usize) -> Self {
        let mut entries = Vec::with_capacity(vs.len() * dim);
        for v in vs {
            entries.extend(v.coords().iter().map(|&x| BigInt::from(x)));
        }
        Self { rows: vs.len(), cols: dim, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.entries[src * self.cols + c] * k;
            self.entries[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.entries[r * self.cols + src] * k;
            self.entries[r * self.cols + dst] += v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let i = r * self.cols + c;
            self.entries[i] = -&self.entries[i];
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let i = r * self.cols + c;
            self.entries[i] = -&self.entries[i];
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::MatrixShape { rows: self.rows, cols: self.cols, got: self.entries.len() });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect()
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let det = self.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        let inv = linalg::inverse(&self.to_rational()).expect("unimodular matrix is invertible");
        let n = self.rows;
        let entries = inv.into_iter().flatten().map(|q| q.to_integer()).collect();
        IntMatrix::new(n, n, entries)
    }

    /// Rows as small-integer lattice vectors; panics on overflow.
    pub fn row_vector(&self, r: usize) -> LatticeVector {
        LatticeVector::new(self.row(r).iter().map(|x| x.to_i64().expect("entry fits in i64")).collect())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| serde::ser::Error::custom("entry overflows i64")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        MatrixJson { rows: self.rows, cols: self.cols, entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        IntMatrix::new(m.rows, m.cols, m.entries.into_iter().map(BigInt::from).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinants() {
        assert_eq!(IntMatrix::from_rows(&[[2, 4], [6, 8]]).det().unwrap(), BigInt::from(-8));
        assert_eq!(IntMatrix::identity(4).det().unwrap(), BigInt::one());
        let m = IntMatrix::from_rows(&[[0, 1, 2], [1, 0, 3], [4, -3, 8]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-2));
        let singular = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert!(singular.det().unwrap().is_zero());
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_rows(&[[-1, 0], [-1, 1]]);
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(&m * &inv, IntMatrix::identity(2));
        assert!(IntMatrix::from_rows(&[[1, 1], [1, 3]]).inverse_unimodular().is_err());
    }

    #[test]
    fn shape_is_checked() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::one(); 3]).is_err());
        let json = r#"{"rows":2,"cols":2,"entries":[1,2,3,4]}"#;
        let m: IntMatrix = serde_json::from_str(json).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1, 2], [3, 4]]));
        assert_eq!(serde_json::to_string(&m).unwrap(), json);
    }
}
