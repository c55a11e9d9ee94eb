use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::fan::Fan;
use crate::error::{Error, Result};
use crate::lattice::{parse_rational, rational_json, Facet, LatticePolytope, LatticeVector};

/// A torus-invariant Weil divisor `D = sum a_rho D_rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusDivisor {
    coefficients: Vec<i64>,
}

impl TorusDivisor {
    pub fn new(fan: &Fan, coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch { expected: fan.num_rays(), got: coefficients.len() });
        }
        Ok(Self { coefficients })
    }

    /// `-K = sum_rho D_rho`.
    pub fn anticanonical(fan: &Fan) -> Self {
        Self { coefficients: vec![1; fan.num_rays()] }
    }

    /// `sum_{rho in rays} D_rho`.
    pub fn sum_of(fan: &Fan, rays: &[usize]) -> Self {
        let mut c = vec![0; fan.num_rays()];
        for &r in rays {
            c[r] = 1;
        }
        Self { coefficients: c }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }
}

/// A character `nu` of the torus and the monomial `prod x_rho^(<nu,rho> + a_rho)`
/// it corresponds to in the homogeneous coordinate ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SectionBasisElement {
    pub nu: LatticeVector,
    pub exponents: Vec<i64>,
}

impl SectionBasisElement {
    pub fn degree(&self) -> i64 {
        self.exponents.iter().sum()
    }
}

/// `P_D = {nu : <nu, rho> >= -a_rho for all rho}`.
pub fn section_polytope(fan: &Fan, d: &TorusDivisor) -> Result<LatticePolytope> {
    let ineqs = fan
        .rays()
        .iter()
        .zip(d.coefficients())
        .map(|(rho, &a)| Facet::new(rho.clone(), BigRational::from_integer((-a).into())))
        .collect();
    LatticePolytope::from_inequalities(fan.rank(), ineqs)
}

/// Monomial basis of `H^0(V, O(D))`, one element per lattice point of `P_D`.
pub fn section_basis(fan: &Fan, d: &TorusDivisor) -> Result<Vec<SectionBasisElement>> {
    let poly = match section_polytope(fan, d) {
        Ok(p) => p,
        Err(Error::EmptyPolytope) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(poly
        .lattice_points()
        .into_iter()
        .map(|nu| {
            let exponents =
                fan.rays().iter().zip(d.coefficients()).map(|(rho, a)| nu.dot(rho) + a).collect();
            SectionBasisElement { nu, exponents }
        })
        .collect())
}

/// A section given by rational coefficients on characters `nu`. For the
/// anticanonical bundle the support should lie in the polar dual of the ray hull.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Section {
    coeffs: BTreeMap<LatticeVector, BigRational>,
}

pub type AnticanonicalSection = Section;

impl Section {
    pub fn new(coeffs: impl IntoIterator<Item = (LatticeVector, BigRational)>) -> Self {
        let mut s = Self::default();
        for (nu, c) in coeffs {
            s.add(nu, c);
        }
        s
    }

    pub fn add(&mut self, nu: LatticeVector, c: BigRational) {
        let entry = self.coeffs.entry(nu).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    /// Every basis element of `O(D)` with coefficient 1.
    pub fn generic(fan: &Fan, d: &TorusDivisor) -> Result<Self> {
        Ok(Self::new(section_basis(fan, d)?.into_iter().map(|b| (b.nu, BigRational::one()))))
    }

    /// The section `prod_rho x_rho`, i.e. the character 0 with coefficient 1.
    pub fn distinguished(rank: usize) -> Self {
        Self::new([(LatticeVector::zero(rank), BigRational::one())])
    }

    /// `sum_{rho in rays} x_rho^deg` for a divisor `D = sum_{rho in rays} D_rho`
    /// of degree `deg`: keeps the basis elements whose exponent vector is a
    /// pure power `deg * e_rho` with `rho` among `rays`.
    pub fn fermat(fan: &Fan, rays: &[usize]) -> Result<Self> {
        let d = TorusDivisor::sum_of(fan, rays);
        let deg = rays.len() as i64;
        let basis = section_basis(fan, &d)?;
        let mut s = Self::default();
        for b in basis {
            let mut nonzero = b.exponents.iter().enumerate().filter(|(_, &e)| e != 0);
            let pure = match (nonzero.next(), nonzero.next()) {
                (Some((i, &e)), None) => e == deg && rays.contains(&i),
                _ => false,
            };
            if pure {
                s.add(b.nu, BigRational::one());
            }
        }
        Ok(s)
    }

    pub fn coeffs(&self) -> &BTreeMap<LatticeVector, BigRational> {
        &self.coeffs
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticeVector> {
        self.coeffs.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, nu: &LatticeVector) -> BigRational {
        self.coeffs.get(nu).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Support contained in the given polytope.
    pub fn supported_in(&self, p: &LatticePolytope) -> bool {
        self.coeffs.keys().all(|nu| p.contains_lattice(nu))
    }

    pub fn to_json(&self) -> SectionJson {
        SectionJson {
            coeffs: self
                .coeffs
                .iter()
                .map(|(nu, c)| CoeffJson { nu: nu.coords().to_vec(), c: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &SectionJson, rank: usize) -> Result<Self> {
        let mut s = Self::default();
        for e in &j.coeffs {
            if e.nu.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: e.nu.len() });
            }
            s.add(LatticeVector::new(e.nu.clone()), parse_rational(&e.c)?);
        }
        Ok(s)
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(nu, c)| serde_json::json!({"nu": nu.coords(), "c": rational_json(c)}))
                .collect(),
        )
    }
}

/// `{"coeffs": [{"nu": [int, ...], "c": "p/q"}, ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionJson {
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub nu: Vec<i64>,
    pub c: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn cubic_monomials_on_the_plane() {
        let p2 = Fan::projective_space(2);
        let basis = section_basis(&p2, &TorusDivisor::anticanonical(&p2)).unwrap();
        assert_eq!(basis.len(), 10);
        let monomials: BTreeSet<Vec<i64>> = basis.iter().map(|b| b.exponents.clone()).collect();
        let mut degree3 = BTreeSet::new();
        for a in 0..=3 {
            for b in 0..=3 - a {
                degree3.insert(vec![a, b, 3 - a - b]);
            }
        }
        assert_eq!(monomials, degree3);
        assert!(basis.iter().all(|b| b.degree() == 3));
    }

    #[test]
    fn single_divisor_has_coordinate_section() {
        let p2 = Fan::projective_space(2);
        let d = TorusDivisor::sum_of(&p2, &[1]);
        let basis = section_basis(&p2, &d).unwrap();
        assert_eq!(basis.len(), 3);
        let zero = basis.iter().find(|b| b.nu.is_zero()).unwrap();
        assert_eq!(zero.exponents, vec![0, 1, 0]);
    }

    #[test]
    fn trivial_divisor_has_constants_only() {
        let p2 = Fan::projective_space(2);
        let d = TorusDivisor::new(&p2, vec![0, 0, 0]).unwrap();
        let basis = section_basis(&p2, &d).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].nu.is_zero());
    }

    #[test]
    fn negative_divisor_has_no_sections() {
        let p2 = Fan::projective_space(2);
        let d = TorusDivisor::new(&p2, vec![-1, 0, 0]).unwrap();
        assert!(section_basis(&p2, &d).unwrap().is_empty());
    }

    #[test]
    fn incomplete_fan_gives_unbounded_polytope() {
        let p2 = Fan::projective_space(2);
        let partial = Fan::new(2, p2.rays()[1..].to_vec(), vec![crate::lattice::Cone::new([0, 1])]).unwrap();
        let d = TorusDivisor::anticanonical(&partial);
        let err = section_basis(&partial, &d).unwrap_err();
        assert_eq!(err.to_string(), "divisor not globally generated at desk scale: section polytope is unbounded");
    }

    #[test]
    fn fermat_quintic() {
        let p4 = Fan::projective_space(4);
        let f = Section::fermat(&p4, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.coefficient(&LatticeVector::zero(4)).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let s = Section::new([(LatticeVector::from([1, -1]), BigRational::new(3.into(), 4.into()))]);
        let text = serde_json::to_string(&s.to_json()).unwrap();
        assert_eq!(text, r#"{"coeffs":[{"nu":[1,-1],"c":"3/4"}]}"#);
        let back: SectionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Section::from_json(&back, 2).unwrap(), s);
        assert!(Section::from_json(&back, 3).is_err());
    }
}
