use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{build_clemens_complex, CellComplex};
use crate::degeneration::FamilySpec;
use crate::error::{Error, Result};
use crate::lattice::linalg::{rref, QMatrix};
use crate::lattice::{LatticePolytope, LatticeVector};
use crate::toric::Fan;

/// Comparison of the hypersurface complex (nerve of the divisors `D_rho`)
/// with the decomposition of the boundary of the ray hull into the simplices
/// `conv(tau)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereReport {
    pub rank: usize,
    /// Cells per dimension of the nerve.
    pub nerve_cells: Vec<usize>,
    /// Cells per dimension of the boundary decomposition.
    pub boundary_cells: Vec<usize>,
    /// Each nerve cell `tau` spans a simplex `conv(tau)` inside a facet, and
    /// the barycenter of that simplex locates back to exactly `tau`.
    pub bijective: bool,
    /// `tau' subset tau` iff `conv(tau') subset conv(tau)` for every pair,
    /// reversing the inclusion of the strata `D_tau`.
    pub order_reversing: bool,
    /// Nerve cells failing the location check.
    pub mismatches: Vec<Vec<usize>>,
    pub betti: Vec<usize>,
    pub sphere_betti: bool,
}

impl SphereReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.order_reversing && self.sphere_betti
    }
}

/// `lambda >= 0` with `sum lambda = 1` and `sum lambda_i p_i = x`, when the
/// points are affinely independent and `x` lies in their hull.
pub fn convex_coordinates(points: &[&LatticeVector], x: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = points.len();
    let dim = x.len();
    let q = |v: i64| BigRational::from_integer(v.into());
    let mut aug: QMatrix = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = points.iter().map(|p| q(p.coords()[i])).collect();
            row.push(x[i].clone());
            row
        })
        .collect();
    let mut ones = vec![BigRational::one(); m];
    ones.push(BigRational::one());
    aug.push(ones);
    let pivots = rref(&mut aug);
    if pivots.len() != m || pivots.contains(&m) {
        return None;
    }
    let lambda: Vec<BigRational> = (0..m).map(|i| aug[i][m].clone()).collect();
    lambda.iter().all(|l| !l.is_negative()).then_some(lambda)
}

/// Rays of the smallest cone containing `x`, found by solving for its
/// coordinates in each maximal cone.
pub fn minimal_cone_of_point(fan: &Fan, x: &[BigRational]) -> Option<Vec<usize>> {
    fan.max_cones().iter().find_map(|c| {
        let gens: Vec<&LatticeVector> = c.rays().iter().map(|&r| fan.ray(r)).collect();
        let m: QMatrix = (0..fan.rank())
            .map(|i| gens.iter().map(|g| BigRational::from_integer(g.coords()[i].into())).collect())
            .collect();
        let lambda = crate::lattice::linalg::solve(&m, x)?;
        if lambda.iter().any(|l| l.is_negative()) {
            return None;
        }
        Some(c.rays().iter().zip(&lambda).filter(|(_, l)| !l.is_zero()).map(|(&r, _)| r).collect())
    })
}

fn barycenter(points: &[&LatticeVector]) -> Vec<BigRational> {
    let dim = points[0].dim();
    let k = BigRational::from_integer(points.len().into());
    (0..dim)
        .map(|i| points.iter().map(|p| BigRational::from_integer(p.coords()[i].into())).sum::<BigRational>() / &k)
        .collect()
}

fn on_common_facet(delta: &LatticePolytope, points: &[&LatticeVector]) -> bool {
    delta.facets().iter().any(|f| points.iter().all(|p| f.is_tight(&p.to_rational())))
}

/// Hypersurface case: compares the nerve of the `D_rho` with the boundary of
/// the ray hull and checks that its Betti numbers are those of `S^{N-1}`.
pub fn verify_sphere_theorem(fan: &Fan) -> Result<SphereReport> {
    if !fan.is_smooth() {
        return Err(Error::NotSmooth);
    }
    if !fan.is_complete()? {
        return Err(Error::InvalidFan("fan is not complete".into()));
    }
    let delta = fan.delta_polytope()?;
    let nerve: CellComplex = build_clemens_complex(fan.num_rays(), |s| fan.is_cone(s))?;

    let cells: Vec<&Vec<usize>> = nerve.all_cells().collect();
    let mut mismatches = Vec::new();
    let mut boundary_cells = vec![0; nerve.cell_counts().len()];
    for tau in &cells {
        let pts: Vec<&LatticeVector> = tau.iter().map(|&r| fan.ray(r)).collect();
        let located = minimal_cone_of_point(fan, &barycenter(&pts));
        if on_common_facet(&delta, &pts) && located.as_deref() == Some(tau.as_slice()) {
            boundary_cells[tau.len() - 1] += 1;
        } else {
            mismatches.push(tau.to_vec());
        }
    }

    let mut order_reversing = true;
    'outer: for small in &cells {
        for big in &cells {
            let combinatorial = small.iter().all(|r| big.contains(r));
            let pts: Vec<&LatticeVector> = big.iter().map(|&r| fan.ray(r)).collect();
            let geometric = small.iter().all(|&r| convex_coordinates(&pts, &fan.ray(r).to_rational()).is_some());
            if combinatorial != geometric {
                order_reversing = false;
                break 'outer;
            }
        }
    }

    let betti = nerve.homology().betti;
    let sphere_betti = nerve.homology().is_sphere(fan.rank() - 1);
    Ok(SphereReport {
        rank: fan.rank(),
        nerve_cells: nerve.cell_counts(),
        bijective: mismatches.is_empty(),
        boundary_cells,
        order_reversing,
        mismatches,
        betti,
        sphere_betti,
    })
}

/// [`verify_sphere_theorem`] for a family, which must have a single block.
pub fn sphere_theorem_for(spec: &FamilySpec) -> Result<SphereReport> {
    if !spec.is_hypersurface() {
        return Err(Error::NotHypersurface(spec.k()));
    }
    verify_sphere_theorem(spec.fan())
}
