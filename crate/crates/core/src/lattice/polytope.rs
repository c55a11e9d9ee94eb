//! Rational polytopes in double description (vertices and facet inequalities).
//!
//! Hulls are computed by brute force over affinely independent point subsets
//! and vertices by brute force over subsets of inequalities. That is adequate for
//! the dimensions handled here (N <= 6, a few dozen points) and keeps every step
//! exact.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::linalg;
use super::matrix::IntMatrix;
use super::vector::{primitive_from_rational, LatticeVector};
use crate::error::{Error, Result};

pub type RationalPoint = Vec<BigRational>;

/// The half-space `<normal, x> >= offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: LatticeVector,
    pub offset: BigRational,
}

impl Facet {
    pub fn new(normal: LatticeVector, offset: BigRational) -> Self {
        Self { normal, offset }
    }

    pub fn value(&self, x: &[BigRational]) -> BigRational {
        self.normal.dot_rational(x) - &self.offset
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        !self.value(x).is_negative()
    }

    pub fn is_tight(&self, x: &[BigRational]) -> bool {
        self.value(x).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<Facet>,
}

pub fn rational_point(v: &[i64]) -> RationalPoint {
    v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
}

fn affine_rank(points: &[RationalPoint]) -> usize {
    let Some(p0) = points.first() else { return 0 };
    let diffs: Vec<RationalPoint> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&diffs)
}

/// Every subset of size `k` of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn hull_facets(points: &[RationalPoint], dim: usize) -> Vec<Facet> {
    let mut found = BTreeSet::new();
    for subset in combinations(points.len(), dim) {
        let p0 = &points[subset[0]];
        let diffs: Vec<RationalPoint> = subset[1..]
            .iter()
            .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        let ns = linalg::nullspace(&diffs, dim);
        if ns.len() != 1 {
            continue;
        }
        let normal = primitive_from_rational(&ns[0]).expect("nonzero normal");
        let offset = normal.dot_rational(p0);
        let values: Vec<BigRational> = points.iter().map(|p| normal.dot_rational(p) - &offset).collect();
        if values.iter().all(|v| !v.is_negative()) {
            found.insert(Facet::new(normal, offset));
        } else if values.iter().all(|v| !v.is_positive()) {
            found.insert(Facet::new(-&normal, -offset));
        }
    }
    found.into_iter().collect()
}

fn extreme_points(points: &[RationalPoint], facets: &[Facet], dim: usize) -> Vec<RationalPoint> {
    let unique: BTreeSet<RationalPoint> = points.iter().cloned().collect();
    unique
        .into_iter()
        .filter(|p| {
            let tight: Vec<RationalPoint> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| f.normal.to_rational())
                .collect();
            linalg::rank(&tight) == dim
        })
        .collect()
}

/// Vertices of `{x : <n_i, x> >= b_i}` by solving every square subsystem.
fn enumerate_vertices(dim: usize, ineqs: &[Facet]) -> Vec<RationalPoint> {
    let mut out = BTreeSet::new();
    for subset in combinations(ineqs.len(), dim) {
        let m: Vec<RationalPoint> = subset.iter().map(|&i| ineqs[i].normal.to_rational()).collect();
        let b: Vec<BigRational> = subset.iter().map(|&i| ineqs[i].offset.clone()).collect();
        if let Some(x) = linalg::solve(&m, &b) {
            if ineqs.iter().all(|f| f.contains(&x)) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

/// True when `{x : <n_i, x> >= b_i}` has no recession direction.
pub fn inequalities_bounded(dim: usize, normals: &[LatticeVector]) -> bool {
    let rows: Vec<RationalPoint> = normals.iter().map(LatticeVector::to_rational).collect();
    if linalg::rank(&rows) < dim {
        return false;
    }
    // Extreme rays of the pointed cone {d : <n_i, d> >= 0} lie on dim-1 tight normals.
    for subset in combinations(normals.len(), dim - 1) {
        let m: Vec<RationalPoint> = subset.iter().map(|&i| rows[i].clone()).collect();
        let ns = linalg::nullspace(&m, dim);
        if ns.len() != 1 {
            continue;
        }
        for d in [ns[0].clone(), ns[0].iter().map(|x| -x).collect::<Vec<_>>()] {
            if rows.iter().all(|r| !linalg::dot(r, &d).is_negative()) {
                return false;
            }
        }
    }
    true
}

impl LatticePolytope {
    /// Convex hull of full-dimensional rational points.
    pub fn from_vertices(points: Vec<RationalPoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyPolytope);
        };
        let dim = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: bad.len() });
        }
        let rank = affine_rank(&points);
        if rank < dim {
            return Err(Error::NotFullDimensional { rank, dim });
        }
        let facets = hull_facets(&points, dim);
        let vertices = extreme_points(&points, &facets, dim);
        Ok(Self { dim, vertices, facets })
    }

    pub fn from_lattice_points(points: &[LatticeVector]) -> Result<Self> {
        Self::from_vertices(points.iter().map(LatticeVector::to_rational).collect())
    }

    pub fn from_integer_vertices<R: AsRef<[i64]>>(points: &[R]) -> Result<Self> {
        Self::from_vertices(points.iter().map(|p| rational_point(p.as_ref())).collect())
    }

    /// Bounded region cut out by inequalities. Lower-dimensional regions keep the
    /// given inequalities; full-dimensional ones get their irredundant facets.
    pub fn from_inequalities(dim: usize, ineqs: Vec<Facet>) -> Result<Self> {
        if let Some(bad) = ineqs.iter().find(|f| f.normal.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: bad.normal.dim() });
        }
        let normals: Vec<LatticeVector> = ineqs.iter().map(|f| f.normal.clone()).collect();
        if !inequalities_bounded(dim, &normals) {
            return Err(Error::UnboundedSectionPolytope);
        }
        let vertices = enumerate_vertices(dim, &ineqs);
        if vertices.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if affine_rank(&vertices) == dim {
            return Self::from_vertices(vertices);
        }
        let facets: BTreeSet<Facet> = ineqs.into_iter().collect();
        Ok(Self { dim, vertices, facets: facets.into_iter().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_full_dimensional(&self) -> bool {
        affine_rank(&self.vertices) == self.dim
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.facets.iter().all(|f| f.contains(x))
    }

    pub fn contains_lattice(&self, v: &LatticeVector) -> bool {
        self.contains(&v.to_rational())
    }

    pub fn strictly_contains(&self, x: &[BigRational]) -> bool {
        self.facets.iter().all(|f| f.value(x).is_positive())
    }

    pub fn integral_vertices(&self) -> Option<Vec<LatticeVector>> {
        self.vertices.iter().map(|v| LatticeVector::from_rational(v)).collect()
    }

    pub fn has_integral_vertices(&self) -> bool {
        self.integral_vertices().is_some()
    }

    /// Vertex set as a sorted set, for order-independent comparison.
    pub fn vertex_set(&self) -> BTreeSet<RationalPoint> {
        self.vertices.iter().cloned().collect()
    }

    /// `{nu : <nu, v> >= -1 for every vertex v}`.
    pub fn polar_dual(&self) -> Result<LatticePolytope> {
        let origin = vec![BigRational::zero(); self.dim];
        if !self.is_full_dimensional() || !self.strictly_contains(&origin) {
            return Err(Error::OriginNotInterior);
        }
        let dual_vertices = self
            .facets
            .iter()
            .map(|f| {
                let scale = -f.offset.clone();
                f.normal.to_rational().into_iter().map(|c| c / &scale).collect()
            })
            .collect();
        LatticePolytope::from_vertices(dual_vertices)
    }

    /// Integral vertices, the origin as the only interior lattice point, and an
    /// integral polar dual.
    pub fn is_reflexive(&self) -> bool {
        if !self.has_integral_vertices() || !self.is_full_dimensional() {
            return false;
        }
        let origin = vec![BigRational::zero(); self.dim];
        if !self.strictly_contains(&origin) {
            return false;
        }
        let interior = self
            .lattice_points()
            .into_iter()
            .filter(|p| self.strictly_contains(&p.to_rational()))
            .count();
        if interior != 1 {
            return false;
        }
        self.polar_dual().map(|d| d.has_integral_vertices()).unwrap_or(false)
    }

    /// All integer points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let min = self.vertices.iter().map(|v| v[i].clone()).min().expect("nonempty");
            let max = self.vertices.iter().map(|v| v[i].clone()).max().expect("nonempty");
            lo.push(min.ceil().to_integer().to_i64().expect("bounded coordinate"));
            hi.push(max.floor().to_integer().to_i64().expect("bounded coordinate"));
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let v = LatticeVector::new(cur.clone());
            if self.contains_lattice(&v) {
                out.push(v);
            }
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    cur[i + 1..].clone_from_slice(&lo[i + 1..]);
                    break;
                }
            }
        }
    }

    /// Image under `x -> U x` for unimodular `U`; facet normals map by `U^{-T}`.
    pub fn transformed(&self, u: &IntMatrix) -> Result<LatticePolytope> {
        let inv_t = u.inverse_unimodular()?.transpose();
        let apply = |m: &IntMatrix, x: &[BigRational]| -> RationalPoint {
            (0..m.rows())
                .map(|r| {
                    m.row(r)
                        .iter()
                        .zip(x)
                        .fold(BigRational::zero(), |acc, (a, b)| acc + b * a)
                })
                .collect()
        };
        let vertices = self.vertices.iter().map(|v| apply(u, v)).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let n = apply(&inv_t, &f.normal.to_rational());
                let n = LatticeVector::from_rational(&n).expect("unimodular image is integral");
                Facet::new(n, f.offset.clone())
            })
            .collect();
        Ok(LatticePolytope { dim: self.dim, vertices, facets })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|v| v.iter().map(rational_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "facets": self.facets.iter().map(|f| json!({
                "normal": f.normal.coords(),
                "offset": rational_json(&f.offset),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Integers as JSON numbers, other rationals as "p/q" strings.
pub fn rational_json(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Some(i) = q.to_integer().to_i64() {
            return json!(i);
        }
    }
    json!(q.to_string())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Input form: `{"vertices": [[int, ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<i64>>,
}

impl TryFrom<PolytopeJson> for LatticePolytope {
    type Error = Error;
    fn try_from(p: PolytopeJson) -> Result<Self> {
        LatticePolytope::from_integer_vertices(&p.vertices)
    }
}
