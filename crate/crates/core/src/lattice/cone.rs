use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::vector::LatticeVector;
use crate::error::{Error, Result};
use crate::toric::Fan;

/// A cone of a fan, named by the indices of its ray generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cone(Vec<usize>);

impl Cone {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        Self(set.into_iter().collect())
    }

    pub fn rays(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn contains_ray(&self, r: usize) -> bool {
        self.0.binary_search(&r).is_ok()
    }

    pub fn contains_all(&self, rays: &[usize]) -> bool {
        rays.iter().all(|&r| self.contains_ray(r))
    }
}

/// One generator of a dual cone together with the ray it pairs to 1 with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGenerator {
    pub nu: LatticeVector,
    pub ray: usize,
}

/// Dual basis of a smooth top-dimensional cone, ordered by the index of the
/// paired ray. On `P^N` this is the usual affine chart `x_j / x_i`, j != i.
pub fn paired_dual_basis(fan: &Fan, sigma: &Cone) -> Result<Vec<DualGenerator>> {
    let n = fan.rank();
    if sigma.dim() != n {
        return Err(Error::NotTopDimensional { expected: n, got: sigma.dim() });
    }
    let gens: Vec<LatticeVector> = sigma.rays().iter().map(|&r| fan.ray(r).clone()).collect();
    // Columns are generators; rows of the inverse pair to the identity.
    let g = IntMatrix::from_vectors(&gens, n).transpose();
    let inv = g.inverse_unimodular()?;
    Ok((0..n)
        .map(|i| DualGenerator { nu: inv.row_vector(i), ray: sigma.rays()[i] })
        .collect())
}

pub fn dual_cone_basis(fan: &Fan, sigma: &Cone) -> Result<Vec<LatticeVector>> {
    Ok(paired_dual_basis(fan, sigma)?.into_iter().map(|d| d.nu).collect())
}
