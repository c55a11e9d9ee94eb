use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{snf, IntMatrix};

/// A simplicial complex stored as sorted vertex lists per dimension, with
/// the alternating boundary on sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<Vec<Vec<usize>>>,
}

/// `{"cells": {"0": [[v], ...], "1": [[v, w], ...], ...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub cells: BTreeMap<String, Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
}

impl HomologyProfile {
    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.betti.iter().map(|&b| b as i64))
    }

    pub fn betti(&self, i: usize) -> usize {
        self.betti.get(i).copied().unwrap_or(0)
    }

    /// `b_0 = b_d = 1` and all others zero; for `d = 0` the two points give `b_0 = 2`.
    pub fn is_sphere(&self, d: usize) -> bool {
        let mut want = vec![0; d + 1];
        want[0] += 1;
        want[d] += 1;
        self.betti == want
    }
}

fn alternating(xs: impl Iterator<Item = i64>) -> i64 {
    xs.enumerate().map(|(i, x)| if i % 2 == 0 { x } else { -x }).sum()
}

impl CellComplex {
    /// Builds the closure-checked complex from its simplices (any order,
    /// duplicates ignored). Fails if a face is missing.
    pub fn from_simplices(simplices: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            by_dim[d].insert(s);
        }
        for d in 1..by_dim.len() {
            for s in &by_dim[d] {
                for i in 0..s.len() {
                    let face = drop_index(s, i);
                    if !by_dim[d - 1].contains(&face) {
                        return Err(Error::InvalidFan(format!("complex is missing face {face:?} of {s:?}")));
                    }
                }
            }
        }
        let cx = Self { cells: by_dim.into_iter().map(|s| s.into_iter().collect()).collect() };
        cx.check_boundary_squares()?;
        Ok(cx)
    }

    /// Downward closure of the given simplices.
    pub fn closure_of(maximal: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut all = BTreeSet::new();
        for mut s in maximal {
            s.sort_unstable();
            s.dedup();
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                all.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect::<Vec<_>>());
            }
        }
        Self::from_simplices(all).expect("closure contains all faces")
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self> {
        let mut simplices = Vec::new();
        for (d, cells) in &j.cells {
            let d: usize = d.parse().map_err(|_| Error::Parse(format!("bad dimension key {d:?}")))?;
            for c in cells {
                if c.len() != d + 1 {
                    return Err(Error::Parse(format!("cell {c:?} listed under dimension {d}")));
                }
                simplices.push(c.clone());
            }
        }
        Self::from_simplices(simplices)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            cells: self.cells.iter().enumerate().map(|(d, c)| (d.to_string(), c.clone())).collect(),
        }
    }

    /// Highest dimension with a cell, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn cells(&self, d: usize) -> &[Vec<usize>] {
        self.cells.get(d).map_or(&[], |c| c.as_slice())
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        !simplex.is_empty() && self.cells(simplex.len() - 1).binary_search(&simplex.to_vec()).is_ok()
    }

    pub fn all_cells(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cells.iter().flatten()
    }

    /// Matrix of `boundary_d : C_d -> C_{d-1}` with rows indexed by
    /// `(d-1)`-cells; for `d = 0` a `0 x #C_0` matrix.
    pub fn boundary_matrix(&self, d: usize) -> IntMatrix {
        let cols = self.cells(d);
        if d == 0 {
            return IntMatrix::zeros(0, cols.len());
        }
        let rows = self.cells(d - 1);
        let index: HashMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, s) in cols.iter().enumerate() {
            for i in 0..s.len() {
                let face = drop_index(s, i);
                let r = index[&face];
                m.set(r, j, BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        m
    }

    pub fn check_boundary_squares(&self) -> Result<()> {
        for d in 2..self.cells.len() {
            if !(&self.boundary_matrix(d - 1) * &self.boundary_matrix(d)).is_zero() {
                return Err(Error::BoundarySquare(d));
            }
        }
        Ok(())
    }

    /// `b_d = #C_d - rank(boundary_d) - rank(boundary_{d+1})`, ranks from the
    /// Smith normal form.
    pub fn homology(&self) -> HomologyProfile {
        let ranks: Vec<usize> = (0..=self.cells.len()).map(|d| self.boundary_rank(d)).collect();
        let betti = (0..self.cells.len()).map(|d| self.cells[d].len() - ranks[d] - ranks[d + 1]).collect();
        HomologyProfile { betti }
    }

    fn boundary_rank(&self, d: usize) -> usize {
        if d == 0 || d >= self.cells.len() {
            0
        } else {
            snf::rank(&self.boundary_matrix(d))
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.cells.iter().map(|c| c.len() as i64))
    }
}

pub(crate) fn drop_index(s: &[usize], i: usize) -> Vec<usize> {
    s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect()
}

pub fn homology(complex: &CellComplex) -> HomologyProfile {
    complex.homology()
}
