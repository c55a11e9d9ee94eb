use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::polytope::combinations;
use crate::lattice::{smith_diagonal, Cone, IntMatrix, LatticePolytope, LatticeVector};

/// A rational polyhedral fan given by primitive rays and its maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Cone>,
}

/// `{"rank": N, "rays": [[int, ...], ...], "max_cones": [[ray indices], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanJson {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

/// The class group `A_{N-1}(V)` as `Z^free_rank + sum Z/d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGroup {
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl Fan {
    pub fn new(rank: usize, rays: Vec<LatticeVector>, max_cones: Vec<Cone>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidFan("rank must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, r) in rays.iter().enumerate() {
            if r.dim() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: r.dim() });
            }
            if !r.is_primitive() {
                return Err(Error::InvalidFan(format!("ray {i} = {r} is not primitive")));
            }
            if !seen.insert(r.clone()) {
                return Err(Error::InvalidFan(format!("ray {i} = {r} is repeated")));
            }
        }
        let mut used = vec![false; rays.len()];
        for (c, cone) in max_cones.iter().enumerate() {
            if cone.dim() == 0 {
                return Err(Error::InvalidFan(format!("maximal cone {c} is empty")));
            }
            for &r in cone.rays() {
                if r >= rays.len() {
                    return Err(Error::InvalidFan(format!("maximal cone {c} references missing ray {r}")));
                }
                used[r] = true;
            }
        }
        if let Some(r) = used.iter().position(|u| !u) {
            return Err(Error::InvalidFan(format!("ray {r} lies in no maximal cone")));
        }
        Ok(Self { rank, rays, max_cones })
    }

    pub fn from_json(j: &FanJson) -> Result<Self> {
        Fan::new(
            j.rank,
            j.rays.iter().map(|r| LatticeVector::new(r.clone())).collect(),
            j.max_cones.iter().map(|c| Cone::new(c.iter().copied())).collect(),
        )
    }

    pub fn to_json(&self) -> FanJson {
        FanJson {
            rank: self.rank,
            rays: self.rays.iter().map(|r| r.coords().to_vec()).collect(),
            max_cones: self.max_cones.iter().map(|c| c.rays().to_vec()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticeVector {
        &self.rays[i]
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    fn generator_matrix(&self, cone: &Cone) -> IntMatrix {
        let gens: Vec<LatticeVector> = cone.rays().iter().map(|&r| self.rays[r].clone()).collect();
        IntMatrix::from_vectors(&gens, self.rank)
    }

    /// Every maximal cone is spanned by a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.max_cones.iter().all(|c| {
            c.dim() == self.rank && self.generator_matrix(c).det().is_ok_and(|d| d.abs().is_one())
        })
    }

    /// Every ridge of a maximal cone borders exactly two maximal cones and the
    /// cones form a connected chamber graph.
    pub fn is_complete(&self) -> Result<bool> {
        let n = self.rank;
        for (i, c) in self.max_cones.iter().enumerate() {
            if c.dim() != n {
                return Err(Error::NonPureFan { cone: i, expected: n, got: c.dim() });
            }
        }
        let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.max_cones.iter().enumerate() {
            for drop in 0..n {
                let ridge: Vec<usize> =
                    c.rays().iter().enumerate().filter(|&(j, _)| j != drop).map(|(_, &r)| r).collect();
                ridges.entry(ridge).or_default().push(i);
            }
        }
        if ridges.values().any(|owners| owners.len() != 2) {
            return Ok(false);
        }
        let m = self.max_cones.len();
        if m == 0 {
            return Ok(false);
        }
        let mut adj = vec![Vec::new(); m];
        for owners in ridges.values() {
            adj[owners[0]].push(owners[1]);
            adj[owners[1]].push(owners[0]);
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// True when some maximal cone contains all of `rays`.
    pub fn is_cone(&self, rays: &[usize]) -> bool {
        self.max_cones.iter().any(|c| c.contains_all(rays))
    }

    /// First maximal cone (in fan order) containing all of `rays`.
    pub fn containing_max_cone(&self, rays: &[usize]) -> Option<&Cone> {
        self.max_cones.iter().find(|c| c.contains_all(rays))
    }

    /// All cones of the fan except the zero cone, each as a sorted ray set.
    pub fn all_cones(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in &self.max_cones {
            let r = c.rays();
            for k in 1..=r.len() {
                for sub in combinations(r.len(), k) {
                    out.insert(sub.iter().map(|&i| r[i]).collect());
                }
            }
        }
        out
    }

    /// Convex hull of the ray generators.
    pub fn delta_polytope(&self) -> Result<LatticePolytope> {
        LatticePolytope::from_lattice_points(&self.rays)
    }

    /// Cokernel of `Z^N -> Z^S, m -> (<m, rho>)_rho`, via Smith normal form.
    pub fn class_group(&self) -> ClassGroup {
        let m = IntMatrix::from_vectors(&self.rays, self.rank);
        let d = smith_diagonal(&m);
        ClassGroup {
            free_rank: self.rays.len() - d.len(),
            torsion: d.iter().filter(|x| **x != BigInt::one()).map(ToString::to_string).collect(),
        }
    }

    /// Fan of `P^N`: rays `e_0 = -(e_1 + ... + e_N), e_1, ..., e_N` (in that index
    /// order) and all N-subsets as maximal cones.
    pub fn projective_space(n: usize) -> Fan {
        assert!(n >= 1, "projective space needs N >= 1");
        let mut rays = vec![LatticeVector::new(vec![-1; n])];
        rays.extend((0..n).map(|i| LatticeVector::unit(n, i)));
        // Cone i omits ray i, so cone i is the affine chart x_i != 0.
        let cones = (0..=n).map(|skip| Cone::new((0..=n).filter(|&r| r != skip))).collect();
        Fan::new(n, rays, cones).expect("projective fan is valid")
    }

    /// Face fan of a 2-dimensional polygon over the given boundary points:
    /// points are sorted by angle and consecutive pairs span the cones.
    pub fn polygon_face_fan(points: &[LatticeVector]) -> Result<Fan> {
        if points.iter().any(|p| p.dim() != 2) {
            return Err(Error::InvalidFan("polygon face fan needs points in Z^2".into()));
        }
        let mut rays = points.to_vec();
        rays.sort_by(angle_order);
        let m = rays.len();
        let cones = (0..m).map(|i| Cone::new([i, (i + 1) % m])).collect();
        Fan::new(2, rays, cones)
    }

    /// Product fan in `Z^(N1 + N2)`; rays of `self` come first.
    pub fn product(&self, other: &Fan) -> Fan {
        let n = self.rank + other.rank;
        let mut rays = Vec::with_capacity(self.rays.len() + other.rays.len());
        for r in &self.rays {
            let mut v = r.coords().to_vec();
            v.extend(std::iter::repeat_n(0, other.rank));
            rays.push(LatticeVector::new(v));
        }
        for r in &other.rays {
            let mut v = vec![0; self.rank];
            v.extend_from_slice(r.coords());
            rays.push(LatticeVector::new(v));
        }
        let off = self.rays.len();
        let mut cones = Vec::new();
        for a in &self.max_cones {
            for b in &other.max_cones {
                cones.push(Cone::new(a.rays().iter().copied().chain(b.rays().iter().map(|r| r + off))));
            }
        }
        Fan::new(n, rays, cones).expect("product of fans is valid")
    }
}

/// Counterclockwise order starting from the positive x-axis.
fn angle_order(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    let half = |v: &LatticeVector| {
        let (x, y) = (v.coords()[0], v.coords()[1]);
        u8::from(!(y > 0 || (y == 0 && x > 0)))
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.coords()[0] * b.coords()[1] - a.coords()[1] * b.coords()[0];
        0.cmp(&cross)
    })
}
