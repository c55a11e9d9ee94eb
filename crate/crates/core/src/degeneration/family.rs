use num_traits::Zero;

use super::{components, Partition};
use crate::error::{Error, Result};
use crate::toric::{section_polytope, Fan, Section, TorusDivisor};

/// Fan, partition and one section `F_i` of `O(D_i)`, `D_i = sum_{rho in pi_i} D_rho`,
/// per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    fan: Fan,
    partition: Partition,
    sections: Vec<Section>,
}

impl FamilySpec {
    /// Checks that the fan is smooth and complete, `n = N - k >= 1`, and each
    /// section is supported on the lattice points of its `P_{D_i}`. Smoothness
    /// of the general fiber is not checked.
    pub fn new(fan: Fan, partition: Partition, sections: Vec<Section>) -> Result<Self> {
        let spec = Self::unchecked(fan, partition, sections)?;
        if spec.n_checked()? == 0 {
            return Err(Error::InvalidFamily(format!(
                "n = N - k must be at least 1 (N = {}, k = {})",
                spec.fan.rank(),
                spec.partition.num_blocks()
            )));
        }
        Ok(spec)
    }

    /// Same checks as [`FamilySpec::new`] except the bound on `n`; used for the
    /// `k = N` edge case of the chain construction.
    pub fn unchecked(fan: Fan, partition: Partition, sections: Vec<Section>) -> Result<Self> {
        if partition.num_rays() != fan.num_rays() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} rays, fan has {}",
                partition.num_rays(),
                fan.num_rays()
            )));
        }
        if !fan.is_smooth() {
            return Err(Error::NotSmooth);
        }
        if !fan.is_complete()? {
            return Err(Error::InvalidFan("fan is not complete".into()));
        }
        if sections.len() != partition.num_blocks() {
            return Err(Error::InvalidFamily(format!(
                "{} sections for {} blocks",
                sections.len(),
                partition.num_blocks()
            )));
        }
        for (i, s) in sections.iter().enumerate() {
            if s.support().any(|nu| nu.dim() != fan.rank()) {
                return Err(Error::InvalidFamily(format!("section {i} has characters of the wrong rank")));
            }
            let d = TorusDivisor::sum_of(&fan, partition.block(i));
            let p = section_polytope(&fan, &d)?;
            if !s.supported_in(&p) {
                return Err(Error::InvalidFamily(format!("section {i} is not supported in P_D of its block")));
            }
        }
        Ok(Self { fan, partition, sections })
    }

    /// Every section has all coefficients equal to 1.
    pub fn generic(fan: Fan, partition: Partition) -> Result<Self> {
        let sections = (0..partition.num_blocks())
            .map(|i| Section::generic(&fan, &TorusDivisor::sum_of(&fan, partition.block(i))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(fan, partition, sections)
    }

    /// Fermat-type sections `F_i = sum_{rho in pi_i} x_rho^{|pi_i|}`.
    pub fn fermat(fan: Fan, partition: Partition) -> Result<Self> {
        let sections =
            partition.blocks().iter().map(|b| Section::fermat(&fan, b)).collect::<Result<Vec<_>>>()?;
        if let Some(i) = sections.iter().position(|s| s.is_empty()) {
            return Err(Error::InvalidFamily(format!("block {i} has no pure-power sections")));
        }
        Self::new(fan, partition, sections)
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn rank(&self) -> usize {
        self.fan.rank()
    }

    /// Number of blocks `k`.
    pub fn k(&self) -> usize {
        self.partition.num_blocks()
    }

    /// Fiber dimension `n = N - k`.
    pub fn n(&self) -> usize {
        self.rank().saturating_sub(self.k())
    }

    fn n_checked(&self) -> Result<usize> {
        self.rank().checked_sub(self.k()).ok_or_else(|| {
            Error::InvalidFamily(format!("{} blocks exceed the rank {}", self.k(), self.rank()))
        })
    }

    pub fn is_hypersurface(&self) -> bool {
        self.k() == 1
    }

    pub fn with_sections(&self, sections: Vec<Section>) -> Result<Self> {
        Self::new(self.fan.clone(), self.partition.clone(), sections)
    }
}

/// A complete intersection of degrees `n_1, ..., n_k` in `P^{n+k}` with Fermat sections.
#[derive(Debug, Clone)]
pub struct ProjectiveCiFamily {
    pub spec: FamilySpec,
    pub degrees: Vec<usize>,
    /// Count obtained by enumerating transversals.
    pub components: usize,
    /// `prod (n_i - 1)`, the count stated alongside the definition of the family.
    pub claimed_components: usize,
}

impl ProjectiveCiFamily {
    pub fn count_warning(&self) -> Option<String> {
        (self.components != self.claimed_components).then(|| {
            format!(
                "component count {} differs from the product formula prod(n_i - 1) = {}; the enumerated count is reported",
                self.components, self.claimed_components
            )
        })
    }
}

/// Blocks are consecutive runs of rays of sizes `degrees`, in ray order.
pub fn projective_ci_family(n: usize, degrees: &[usize]) -> Result<ProjectiveCiFamily> {
    if n == 0 {
        return Err(Error::InvalidFamily("n must be at least 1".into()));
    }
    if degrees.is_empty() {
        return Err(Error::InvalidFamily("at least one degree is required".into()));
    }
    if let Some(d) = degrees.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidFamily(format!("degree {d} is below 2")));
    }
    let k = degrees.len();
    let total: usize = degrees.iter().sum();
    if total != n + k + 1 {
        return Err(Error::DegreeSum { expected: n + k + 1, got: total });
    }
    let fan = Fan::projective_space(n + k);
    let mut blocks = Vec::with_capacity(k);
    let mut next = 0;
    for &d in degrees {
        blocks.push((next..next + d).collect());
        next += d;
    }
    let partition = Partition::new(blocks, n + k + 1)?;
    let spec = FamilySpec::fermat(fan, partition)?;
    debug_assert!(spec.sections().iter().all(|s| s.coeffs().values().all(|c| !c.is_zero())));
    Ok(ProjectiveCiFamily {
        components: components(&spec).len(),
        claimed_components: degrees.iter().map(|d| d - 1).product(),
        degrees: degrees.to_vec(),
        spec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeVector;
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn projective_families() {
        let q = projective_ci_family(3, &[5]).unwrap();
        assert_eq!(q.components, 5);
        assert_eq!(q.claimed_components, 4);
        assert!(q.count_warning().is_some());
        assert_eq!(q.spec.n(), 3);

        let tc = projective_ci_family(3, &[3, 3]).unwrap();
        assert_eq!(tc.components, 9);
        assert_eq!(tc.spec.partition().blocks(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(tc.spec.sections()[0].len(), 3);

        let c = projective_ci_family(1, &[3]).unwrap();
        assert_eq!(c.components, 3);
        assert_eq!(c.spec.rank(), 2);
    }

    #[test]
    fn projective_family_errors() {
        assert_eq!(projective_ci_family(3, &[4]).unwrap_err(), Error::DegreeSum { expected: 5, got: 4 });
        assert!(projective_ci_family(0, &[2]).is_err());
        assert!(projective_ci_family(2, &[1, 4]).is_err());
        assert!(projective_ci_family(2, &[]).is_err());
    }

    #[test]
    fn rank_bound() {
        let p2 = Fan::projective_space(2);
        let three = Partition::new(vec![vec![0], vec![1], vec![2]], 3).unwrap();
        assert!(FamilySpec::generic(p2.clone(), three.clone()).is_err());
        let two = Partition::new(vec![vec![0], vec![1, 2]], 3).unwrap();
        assert!(FamilySpec::generic(p2.clone(), two.clone()).is_err());
        let sections = vec![Section::new([(LatticeVector::from([3, 0]), BigRational::one())])];
        assert!(FamilySpec::new(p2, Partition::single_block(3), sections).is_err());
    }
}
