//! Affine charts `U_sigma` of a smooth toric variety and the local form of
//! anticanonical sections on them.

use num_rational::BigRational;
use num_traits::Signed;

use super::fan::Fan;
use super::sections::Section;
use crate::error::{Error, Result};
use crate::lattice::{paired_dual_basis, Cone, DualGenerator, IntMatrix, LatticeVector};
use crate::residue::laurent::{LaurentPolynomial, TPoly};

/// Ordered coordinates `z_1..z_N` on the chart of a smooth maximal cone:
/// `z_j` is the character of the j-th dual generator and vanishes exactly
/// on the divisor of the ray it pairs with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchCoordinates {
    cone: Cone,
    vars: Vec<DualGenerator>,
}

impl PatchCoordinates {
    /// Canonical ordering (by paired ray index).
    pub fn canonical(fan: &Fan, cone: &Cone) -> Result<Self> {
        Ok(Self { cone: cone.clone(), vars: paired_dual_basis(fan, cone)? })
    }

    /// Canonical chart reordered so the variables paired with `rays` come in
    /// the given order.
    pub fn with_ray_order(fan: &Fan, cone: &Cone, rays: &[usize]) -> Result<Self> {
        let base = Self::canonical(fan, cone)?;
        if rays.len() != base.vars.len() || !cone.contains_all(rays) {
            return Err(Error::InvalidFan(format!("{rays:?} is not an ordering of the rays of {cone:?}")));
        }
        let vars = rays
            .iter()
            .map(|r| base.vars.iter().find(|d| d.ray == *r).cloned().expect("ray of cone"))
            .collect();
        Ok(Self { cone: cone.clone(), vars })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn vars(&self) -> &[DualGenerator] {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// Ray paired with each variable, in variable order.
    pub fn ray_order(&self) -> Vec<usize> {
        self.vars.iter().map(|d| d.ray).collect()
    }

    /// Exponent vector of the character `nu` in these coordinates:
    /// `v_j = <nu, rho_j>`.
    pub fn exponent_of(&self, fan: &Fan, nu: &LatticeVector) -> Vec<i64> {
        self.vars.iter().map(|d| nu.dot(fan.ray(d.ray))).collect()
    }

    /// Matrix with the dual generators as rows.
    pub fn basis_matrix(&self) -> IntMatrix {
        let rows: Vec<LatticeVector> = self.vars.iter().map(|d| d.nu.clone()).collect();
        IntMatrix::from_vectors(&rows, self.vars.len())
    }

    /// The Laurent polynomial `sum c_nu z^v` of a section divided by the frame.
    pub fn character_sum(&self, fan: &Fan, s: &Section) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero(self.dim());
        for (nu, c) in s.coeffs() {
            p.add_term(self.exponent_of(fan, nu), TPoly::constant(c.clone()));
        }
        p
    }
}

/// `f_sigma(z) = z_1 ... z_N sum_v c_v z^v` on the canonical chart of `sigma`.
pub fn local_section(fan: &Fan, f: &Section, sigma: &Cone) -> Result<LaurentPolynomial> {
    if !fan.delta_polytope()?.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let chart = PatchCoordinates::canonical(fan, sigma)?;
    local_section_on(fan, f, &chart)
}

pub fn local_section_on(fan: &Fan, f: &Section, chart: &PatchCoordinates) -> Result<LaurentPolynomial> {
    Ok(&LaurentPolynomial::product_of_vars(chart.dim()) * &chart.character_sum(fan, f))
}

/// `A` with `nu_i = sum_j a_ij mu_j`, where `nu` is the canonical dual basis of
/// `sigma` and `mu` that of `tau`.
pub fn transition_matrix(fan: &Fan, sigma: &Cone, tau: &Cone) -> Result<IntMatrix> {
    let s = PatchCoordinates::canonical(fan, sigma)?.basis_matrix();
    let t = PatchCoordinates::canonical(fan, tau)?.basis_matrix();
    Ok(&s * &t.inverse_unimodular()?)
}

/// Exponent-level gluing check between the charts of `sigma` and `tau`: every
/// support exponent `v` on `sigma` maps under `B = A^T` to the exponent of the
/// same character on `tau`, which must lie in the image of the polar dual and
/// carry the same coefficient in `f_tau`.
pub fn verify_gluing(fan: &Fan, f: &Section, sigma: &Cone, tau: &Cone) -> Result<bool> {
    let delta = fan.delta_polytope()?;
    let nabla = match delta.polar_dual() {
        Ok(n) => n,
        Err(_) => return Ok(false),
    };
    let cs = PatchCoordinates::canonical(fan, sigma)?;
    let ct = PatchCoordinates::canonical(fan, tau)?;
    let a = transition_matrix(fan, sigma, tau)?;
    let b: Vec<Vec<i64>> = (0..a.cols()).map(|j| a.transpose().row_vector(j).into_coords()).collect();
    let f_tau = local_section_on(fan, f, &ct)?;
    for (nu, c) in f.coeffs() {
        if !nabla.contains_lattice(nu) {
            return Ok(false);
        }
        let v = cs.exponent_of(fan, nu);
        let u: Vec<i64> = b.iter().map(|row| row.iter().zip(&v).map(|(x, y)| x * y).sum()).collect();
        if u != ct.exponent_of(fan, nu) {
            return Ok(false);
        }
        let shifted: Vec<i64> = u.iter().map(|x| x + 1).collect();
        if shifted.iter().any(|x| x.is_negative()) || f_tau.coefficient(&shifted).at_zero() != *c {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn determinant_sign(a: &IntMatrix) -> Result<i64> {
    let d = a.det()?;
    Ok(if d.is_negative() { -1 } else { 1 })
}

#[allow(dead_code)]
fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::sections::{section_basis, TorusDivisor};

    fn fermat_cubic(fan: &Fan) -> Section {
        Section::fermat(fan, &[0, 1, 2]).unwrap()
    }

    #[test]
    fn fermat_cubic_on_standard_chart() {
        let p2 = Fan::projective_space(2);
        // Cone 0 omits e_0, so it is cone(e_1, e_2).
        let sigma = p2.max_cones()[0].clone();
        assert_eq!(sigma.rays(), &[1, 2]);
        let generic = Section::generic(&p2, &TorusDivisor::anticanonical(&p2)).unwrap();
        let local = local_section(&p2, &generic, &sigma).unwrap();
        assert_eq!(local.len(), 10);
        assert!(local.terms().all(|(e, _)| e.iter().all(|&k| (0..=3).contains(&k))));
        let f = local_section(&p2, &fermat_cubic(&p2), &sigma).unwrap();
        // x1^3, x2^3, x0^3 -> z1^3, z2^3, 1.
        let exps: Vec<Vec<i64>> = f.terms().map(|(e, _)| e.clone()).collect();
        assert_eq!(exps, vec![vec![0, 0], vec![0, 3], vec![3, 0]]);
    }

    #[test]
    fn distinguished_section_is_product_of_coordinates() {
        for n in 1..=4 {
            let fan = Fan::projective_space(n);
            let f = Section::distinguished(n);
            for sigma in fan.max_cones() {
                assert_eq!(local_section(&fan, &f, sigma).unwrap(), LaurentPolynomial::product_of_vars(n));
            }
        }
    }

    #[test]
    fn transition_examples() {
        let p2 = Fan::projective_space(2);
        let sigma = Cone::new([1, 2]);
        let tau = Cone::new([0, 2]);
        assert_eq!(transition_matrix(&p2, &sigma, &sigma).unwrap(), IntMatrix::identity(2));
        let a = transition_matrix(&p2, &sigma, &tau).unwrap();
        assert_eq!(a.det().unwrap(), (-1).into());
        let ups = Cone::new([0, 1]);
        let ab = &a * &transition_matrix(&p2, &tau, &ups).unwrap();
        assert_eq!(ab, transition_matrix(&p2, &sigma, &ups).unwrap());
    }

    #[test]
    fn gluing_on_the_plane() {
        let p2 = Fan::projective_space(2);
        let f = Section::generic(&p2, &TorusDivisor::anticanonical(&p2)).unwrap();
        for s in p2.max_cones() {
            for t in p2.max_cones() {
                assert!(verify_gluing(&p2, &f, s, t).unwrap());
            }
        }
        let mut outside = f.clone();
        outside.add(LatticeVector::from([3, 0]), q(1));
        assert!(!verify_gluing(&p2, &outside, &p2.max_cones()[0], &p2.max_cones()[1]).unwrap());
    }

    #[test]
    fn non_reflexive_is_rejected() {
        // Hirzebruch F_3 is smooth and complete but its ray hull is not reflexive.
        let rays = [[1, 0], [0, 1], [-1, 3], [0, -1]].map(LatticeVector::from).to_vec();
        let cones = vec![Cone::new([0, 1]), Cone::new([1, 2]), Cone::new([2, 3]), Cone::new([3, 0])];
        let f3 = Fan::new(2, rays, cones).unwrap();
        assert!(f3.is_smooth() && f3.is_complete().unwrap());
        let f = Section::distinguished(2);
        assert_eq!(local_section(&f3, &f, &f3.max_cones()[0]).unwrap_err(), Error::NotReflexive);
        assert!(!section_basis(&f3, &TorusDivisor::anticanonical(&f3)).unwrap().is_empty());
    }
}
