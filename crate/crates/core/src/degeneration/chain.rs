use serde::{Deserialize, Serialize};

use super::{cone_membership, Component, FamilySpec, Partition};
use crate::error::{Error, Result};
use crate::lattice::Cone;
use crate::toric::Fan;

/// A maximal cone `tau` through `sigma0` and the components obtained by
/// swapping one ray of `sigma0` for a ray of `tau` in the same block. All of
/// them meet in the fixed point of `tau`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointChain {
    pub sigma0: Component,
    pub tau: Cone,
    pub chain: Vec<Component>,
    /// Rays of `tau` in chart variable order: `tau \ sigma0` ascending, then the
    /// rays of `sigma0` in block order, so the last `k` variables cut out `C_sigma0`.
    pub patch_order: Vec<usize>,
}

impl FixedPointChain {
    /// Union of all rays in the chain and `sigma0`, sorted.
    pub fn union(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.sigma0.rays().to_vec();
        for c in &self.chain {
            u.extend_from_slice(c.rays());
        }
        u.sort_unstable();
        u.dedup();
        u
    }

    /// Re-checks the chain against the fan: each member is a component, each
    /// `sigma0 cup sigma_j` is a cone, and the full union is the `N` rays of `tau`.
    pub fn verify(&self, fan: &Fan, partition: &Partition) -> bool {
        let u = self.union();
        let members_ok = self
            .chain
            .iter()
            .all(|c| c.is_transversal(partition) && cone_membership(fan, c.rays()));
        let pairs_ok = self.chain.iter().all(|c| {
            let mut pair: Vec<usize> = self.sigma0.rays().iter().chain(c.rays()).copied().collect();
            pair.sort_unstable();
            pair.dedup();
            pair.len() == partition.num_blocks() + 1 && cone_membership(fan, &pair)
        });
        let mut order = self.patch_order.clone();
        order.sort_unstable();
        members_ok
            && pairs_ok
            && u.len() == fan.rank()
            && u == self.tau.rays()
            && order == self.tau.rays()
            && self.chain.len() + partition.num_blocks() == fan.rank()
    }
}

/// Chain construction on a bare fan and partition; `sigma0` must be a
/// transversal spanning a cone. Takes `tau` as the lexicographically first
/// maximal cone containing `sigma0`.
pub fn fixed_point_chain(fan: &Fan, partition: &Partition, sigma0: &Component) -> Result<FixedPointChain> {
    if !sigma0.is_transversal(partition) {
        return Err(Error::InvalidFamily(format!("{:?} is not a transversal of the partition", sigma0.rays())));
    }
    let rays = sigma0.sorted_rays();
    let tau = fan
        .max_cones()
        .iter()
        .filter(|c| c.contains_all(&rays))
        .min()
        .cloned()
        .ok_or_else(|| Error::NoContainingCone(rays.clone()))?;
    let extra: Vec<usize> = tau.rays().iter().copied().filter(|r| !rays.contains(r)).collect();
    let chain = extra.iter().map(|&r| sigma0.replaced(partition.block_of(r), r)).collect();
    let mut patch_order = extra;
    patch_order.extend_from_slice(sigma0.rays());
    Ok(FixedPointChain { sigma0: sigma0.clone(), tau, chain, patch_order })
}

pub fn find_fixed_point_chain(spec: &FamilySpec, sigma0: &Component) -> Result<FixedPointChain> {
    fixed_point_chain(spec.fan(), spec.partition(), sigma0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::{components, projective_ci_family};

    #[test]
    fn quintic_chain() {
        let q = projective_ci_family(3, &[5]).unwrap().spec;
        let c = find_fixed_point_chain(&q, &Component::new(vec![0])).unwrap();
        assert_eq!(c.tau.rays(), &[0, 1, 2, 3]);
        let chain: Vec<&[usize]> = c.chain.iter().map(|x| x.rays()).collect();
        assert_eq!(chain, vec![&[1][..], &[2], &[3]]);
        assert_eq!(c.patch_order, vec![1, 2, 3, 0]);
        assert!(c.verify(q.fan(), q.partition()));
    }

    #[test]
    fn two_cubics_chain() {
        let tc = projective_ci_family(3, &[3, 3]).unwrap().spec;
        let c = find_fixed_point_chain(&tc, &Component::new(vec![0, 3])).unwrap();
        assert_eq!(c.tau.dim(), 5);
        assert_eq!(c.chain.len(), 3);
        assert_eq!(c.union(), c.tau.rays());
        assert!(c.verify(tc.fan(), tc.partition()));
        for s in components(&tc) {
            assert!(find_fixed_point_chain(&tc, &s).unwrap().verify(tc.fan(), tc.partition()));
        }
    }

    #[test]
    fn full_rank_partition_has_empty_chain() {
        let p2 = Fan::projective_space(2);
        let part = Partition::new(vec![vec![0], vec![1], vec![2]], 3).unwrap();
        let s = Component::new(vec![0, 1, 2]);
        assert!(fixed_point_chain(&p2, &part, &s).is_err());
        let part = Partition::new(vec![vec![0, 2], vec![1]], 3).unwrap();
        let s = Component::new(vec![0, 1]);
        let c = fixed_point_chain(&p2, &part, &s).unwrap();
        assert!(c.chain.is_empty());
        assert_eq!(c.tau.rays(), &[0, 1]);
        assert!(c.verify(&p2, &part));
    }
}
