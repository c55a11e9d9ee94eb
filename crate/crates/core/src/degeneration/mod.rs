//! The one-parameter complete-intersection family `G_i,t = t F_i - prod_{rho in pi_i} x_rho`
//! attached to a partition of the rays, and the combinatorics of its central fiber.

mod chain;
mod family;

pub use chain::{find_fixed_point_chain, fixed_point_chain, FixedPointChain};
pub use family::{projective_ci_family, FamilySpec, ProjectiveCiFamily};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::toric::Fan;

/// Disjoint blocks of ray indices covering every ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

/// `{"blocks": [[ray indices], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Blocks keep the given order; indices inside a block are sorted.
    pub fn new(blocks: Vec<Vec<usize>>, num_rays: usize) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let mut block_of = vec![usize::MAX; num_rays];
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.into_iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &r in &b {
                if r >= num_rays {
                    return Err(Error::InvalidPartition(format!("ray index {r} out of range ({num_rays} rays)")));
                }
                if block_of[r] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("ray {r} appears more than once")));
                }
                block_of[r] = i;
            }
            let mut b = b;
            b.sort_unstable();
            sorted.push(b);
        }
        if let Some(r) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("ray {r} is not covered")));
        }
        Ok(Self { blocks: sorted, block_of })
    }

    pub fn single_block(num_rays: usize) -> Self {
        Self::new(vec![(0..num_rays).collect()], num_rays).expect("one block covering all rays")
    }

    pub fn from_json(j: &PartitionJson, num_rays: usize) -> Result<Self> {
        Self::new(j.blocks.clone(), num_rays)
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson { blocks: self.blocks.clone() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_rays(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, ray: usize) -> usize {
        self.block_of[ray]
    }
}

/// A component `C_sigma = D_rho_1 cap ... cap D_rho_k`, one ray per block,
/// stored in block order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Component(Vec<usize>);

impl Component {
    pub fn new(rays: Vec<usize>) -> Self {
        Self(rays)
    }

    /// Rays in block order: `rays()[i]` lies in block `i`.
    pub fn rays(&self) -> &[usize] {
        &self.0
    }

    pub fn sorted_rays(&self) -> Vec<usize> {
        let mut r = self.0.clone();
        r.sort_unstable();
        r
    }

    pub fn ray_in_block(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Same component with the representative of `block` swapped for `ray`.
    pub fn replaced(&self, block: usize, ray: usize) -> Self {
        let mut r = self.0.clone();
        r[block] = ray;
        Self(r)
    }

    pub fn is_transversal(&self, p: &Partition) -> bool {
        self.0.len() == p.num_blocks() && self.0.iter().enumerate().all(|(i, &r)| r < p.num_rays() && p.block_of(r) == i)
    }
}

/// True iff the rays `tau` lie in a common cone of the fan.
pub fn cone_membership(fan: &Fan, tau: &[usize]) -> bool {
    fan.is_cone(tau)
}

/// Transversals of `partition` whose rays span a cone, in lexicographic order.
pub fn components_of(fan: &Fan, partition: &Partition) -> Vec<Component> {
    let blocks = partition.blocks();
    let mut out = Vec::new();
    let mut idx = vec![0usize; blocks.len()];
    loop {
        let rays: Vec<usize> = idx.iter().zip(blocks).map(|(&i, b)| b[i]).collect();
        if cone_membership(fan, &rays) {
            out.push(Component(rays));
        }
        // odometer, last block fastest
        let mut pos = blocks.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < blocks[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn components(spec: &FamilySpec) -> Vec<Component> {
    components_of(spec.fan(), spec.partition())
}

/// A nonempty intersection `C_S` of the components indexed by `members`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub members: Vec<usize>,
    /// Sorted union of the members' rays.
    pub rays: Vec<usize>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strata {
    pub components: Vec<Component>,
    /// Nonempty intersections, ordered by size then lexicographically.
    pub strata: Vec<Stratum>,
}

impl Strata {
    pub fn is_nonempty(&self, members: &[usize]) -> bool {
        self.strata.iter().any(|s| s.members == members)
    }

    pub fn dimension(&self, members: &[usize]) -> Option<usize> {
        self.strata.iter().find(|s| s.members == members).map(|s| s.dim)
    }

    pub fn max_size(&self) -> usize {
        self.strata.iter().map(|s| s.members.len()).max().unwrap_or(0)
    }
}

fn union_rays(components: &[Component], members: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = members.iter().flat_map(|&m| components[m].rays().iter().copied()).collect();
    u.sort_unstable();
    u.dedup();
    u
}

/// Every nonempty intersection of components. Subsets are grown in
/// increasing index order and a branch is cut as soon as the union of rays
/// stops being a cone, since supersets only add rays.
pub fn strata_of(fan: &Fan, components: Vec<Component>) -> Strata {
    fn grow(fan: &Fan, comps: &[Component], members: &mut Vec<usize>, out: &mut Vec<Stratum>) {
        let start = members.last().map_or(0, |m| m + 1);
        for j in start..comps.len() {
            members.push(j);
            let rays = union_rays(comps, members);
            if cone_membership(fan, &rays) {
                out.push(Stratum { members: members.clone(), dim: fan.rank() - rays.len(), rays });
                grow(fan, comps, members, out);
            }
            members.pop();
        }
    }
    let mut out = Vec::new();
    grow(fan, &components, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
    Strata { components, strata: out }
}

pub fn strata(spec: &FamilySpec) -> Strata {
    strata_of(spec.fan(), components(spec))
}
