use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer point of a rank-N lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn dot(&self, other: &LatticeVector) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing with a rational point.
    pub fn dot_rational(&self, x: &[BigRational]) -> BigRational {
        debug_assert_eq!(self.dim(), x.len());
        self.0
            .iter()
            .zip(x)
            .fold(BigRational::zero(), |acc, (&a, b)| acc + b * BigInt::from(a))
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.0.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    }

    /// Returns `Some` when every coordinate of `x` is an integer.
    pub fn from_rational(x: &[BigRational]) -> Option<Self> {
        x.iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }
}

/// Divides `v` by the gcd of its entries.
pub fn primitive(v: &[i64]) -> Result<LatticeVector> {
    let g = v.iter().fold(0i64, |g, &c| g.gcd(&c));
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(LatticeVector(v.iter().map(|c| c / g).collect()))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_from_rational(v: &[BigRational]) -> Result<LatticeVector> {
    let lcm = v
        .iter()
        .fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let coords = ints
        .iter()
        .map(|c| {
            i64::try_from(c / &g).map_err(|_| Error::Parse("coordinate overflows i64".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeVector(coords))
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}
