//! Laurent polynomials in `z_1..z_N` whose coefficients are polynomials in a
//! formal parameter `t` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{parse_rational, rational_json};

/// Univariate polynomial in `t`, ascending powers, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly(Vec<BigRational>);

impl TPoly {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Value at `t = 0`.
    pub fn at_zero(&self) -> BigRational {
        self.0.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_coeffs(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.0.len().max(rhs.0.len());
        let z = BigRational::zero();
        TPoly::from_coeffs(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + rhs.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(" + "))
        }
    }
}

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, TPoly>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], TPoly::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], TPoly::constant(c))
    }

    /// The parameter `t` as a polynomial of degree zero in `z`.
    pub fn t(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], TPoly::t())
    }

    /// The coordinate `z_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, TPoly::one())
    }

    pub fn monomial(exp: Vec<i64>, coeff: TPoly) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    /// `z_1 * ... * z_N`.
    pub fn product_of_vars(nvars: usize) -> Self {
        Self::monomial(vec![1; nvars], TPoly::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, TPoly)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableCount(nvars, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, coeff: TPoly) {
        debug_assert_eq!(exp.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &TPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i64]) -> TPoly {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Coefficient of `z^0`, still a polynomial in `t`.
    pub fn constant_term(&self) -> TPoly {
        self.coefficient(&vec![0; self.nvars])
    }

    /// Smallest exponent of any variable in any term.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().flat_map(|e| e.iter().copied()).min()
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|m| m >= 0)
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.values().all(|c| c.degree() == Some(0))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        Ok(self * rhs)
    }

    fn check_vars(&self, rhs: &Self) -> Result<()> {
        if self.nvars != rhs.nvars {
            return Err(Error::VariableCount(self.nvars, rhs.nvars));
        }
        Ok(())
    }

    /// `d/dz_i`, mapping `z^v` to `v_i z^(v - e_i)`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.scale(&BigRational::from_integer(BigInt::from(k))));
        }
        out
    }

    /// Literal substitution `t = 0`.
    pub fn set_t_zero(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), TPoly::constant(c.at_zero()));
        }
        out
    }

    pub fn scale(&self, k: &TPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    /// Monomial substitution `z^v -> w^(B v)` for an integer matrix `B`.
    pub fn substitute_monomials(&self, b: &[Vec<i64>]) -> Self {
        let mut out = Self::zero(b.len());
        for (e, c) in &self.terms {
            let img: Vec<i64> = b.iter().map(|row| row.iter().zip(e).map(|(x, y)| x * y).sum()).collect();
            out.add_term(img, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            vars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coeff_t: c.coeffs().iter().map(|q| q.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &LaurentJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let coeffs = t.coeff_t.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            terms.push((t.exp.clone(), TPoly::from_coeffs(coeffs)));
        }
        Self::from_terms(j.vars, terms)
    }

    /// Rational coefficients at `t = 0`, keyed by exponent; JSON friendly.
    pub fn t_zero_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.set_t_zero()
                .terms
                .iter()
                .map(|(e, c)| serde_json::json!({"exp": e, "c": rational_json(&c.at_zero())}))
                .collect(),
        )
    }
}

/// `{"vars": N, "terms": [{"exp": [...], "coeff_t": ["p/q", ...]}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coeff_t: Vec<String>,
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*z{}", i + 1)?,
                    _ => write!(f, "*z{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}
