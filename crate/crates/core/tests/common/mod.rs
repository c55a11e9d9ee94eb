// Test oracles written independently of the library's algorithms, and the
// generated corpora the property tests draw from.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_degen::builtin;
use toric_degen::clemens::{clemens_complex, clemens_complex_of, CellComplex};
use toric_degen::degeneration::{components_of, Component, Partition};
use toric_degen::lattice::{smith_normal_form, IntMatrix, LatticePolytope, LatticeVector};
use toric_degen::toric::Fan;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---- linear algebra ----

/// Rank over Q by plain fraction-valued row reduction.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| i64::try_from(x).expect("small entry")).collect())
        .collect()
}

/// Betti numbers of the simplicial complex generated by `cells` (all faces
/// listed), from oriented boundary ranks over Q.
pub fn betti_oracle(cells: &[Vec<Vec<usize>>]) -> Vec<usize> {
    let boundary_rank = |d: usize| -> usize {
        if d == 0 || d >= cells.len() {
            return 0;
        }
        let index: BTreeMap<&Vec<usize>, usize> = cells[d - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rows = vec![vec![0i64; cells[d].len()]; cells[d - 1].len()];
        for (j, s) in cells[d].iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                rows[index[&face]][j] = if i % 2 == 0 { 1 } else { -1 };
            }
        }
        rational_rank(&rows)
    };
    (0..cells.len())
        .map(|d| cells[d].len() - boundary_rank(d) - boundary_rank(d + 1))
        .collect()
}

/// Betti numbers of `S^d`; `S^0` has two points.
pub fn sphere_betti(d: usize) -> Vec<usize> {
    if d == 0 {
        return vec![2];
    }
    let mut b = vec![0; d + 1];
    b[0] = 1;
    b[d] = 1;
    b
}

// ---- constant terms ----

/// `f^m` multiplied out term by term; `f` is a sum of monomials with
/// coefficient one. Returns the coefficient of `x^0`.
pub fn constant_term_oracle(monomials: &[Vec<i64>], m: usize) -> BigInt {
    let n = monomials.first().map_or(0, Vec::len);
    let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    acc.insert(vec![0; n], BigInt::one());
    for _ in 0..m {
        let mut next: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in &acc {
            for mono in monomials {
                let key: Vec<i64> = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                *next.entry(key).or_insert_with(BigInt::zero) += c;
            }
        }
        acc = next;
    }
    acc.remove(&vec![0; n]).unwrap_or_default()
}

/// `(d a)! / (a!)^d`.
pub fn multinomial_diagonal(d: u32, a: u32) -> BigInt {
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    fact(d * a) / fact(a).pow(d)
}

// ---- fans and partitions ----

/// Transversals of `blocks` whose rays lie in one maximal cone, by checking
/// every element of the full product against every maximal cone.
pub fn brute_force_components(fan: &Fan, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = vec![vec![]];
    for b in blocks {
        all = all
            .into_iter()
            .flat_map(|prefix| {
                b.iter().map(move |&r| {
                    let mut p = prefix.clone();
                    p.push(r);
                    p
                })
            })
            .collect();
    }
    all.into_iter()
        .filter(|t| fan.max_cones().iter().any(|c| t.iter().all(|r| c.rays().contains(r))))
        .collect()
}

pub fn random_partition(rng: &mut ChaCha8Rng, num_rays: usize, k: usize) -> Vec<Vec<usize>> {
    let mut rays: Vec<usize> = (0..num_rays).collect();
    rays.shuffle(rng);
    let mut blocks = vec![Vec::new(); k];
    for (i, r) in rays.into_iter().enumerate() {
        let b = if i < k { i } else { rng.gen_range(0..k) };
        blocks[b].push(r);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks
}

/// Builtin fans, face fans of the corpus polygons and a few products; all
/// smooth and complete with at most 12 rays.
pub fn fan_corpus() -> Vec<(String, Fan)> {
    let mut out: Vec<(String, Fan)> = (1..=5).map(|n| (format!("P{n}"), Fan::projective_space(n))).collect();
    out.push(("example2".into(), builtin::example2()));
    out.push(("p9611".into(), builtin::p9611()));
    let p1 = Fan::projective_space(1);
    out.push(("P1^3".into(), p1.product(&p1).product(&p1)));
    out.push(("P2xP2".into(), Fan::projective_space(2).product(&Fan::projective_space(2))));
    out.push(("P1xexample2".into(), p1.product(&builtin::example2())));
    for (i, poly) in polygon_classes().iter().enumerate() {
        let boundary: Vec<LatticeVector> =
            poly.lattice_points().into_iter().filter(|p| !p.is_zero()).collect();
        let fan = Fan::polygon_face_fan(&boundary).expect("face fan");
        if boundary.len() <= 6 {
            out.push((format!("polygon{i}xP1"), fan.product(&p1)));
        }
        out.push((format!("polygon{i}"), fan));
    }
    out
}

// ---- reflexive polytopes ----

/// Every reflexive hull of a subset of boundary points of the three maximal
/// reflexive polygons; every class of reflexive polygon occurs.
pub fn reflexive_polygons() -> Vec<LatticePolytope> {
    let maximal: [&[[i64; 2]]; 3] = [
        &[[-1, -1], [2, -1], [-1, 2]],
        &[[-1, -1], [1, -1], [1, 1], [-1, 1]],
        &[[-1, -1], [3, -1], [-1, 1]],
    ];
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for verts in maximal {
        let big = LatticePolytope::from_integer_vertices(verts).unwrap();
        let boundary: Vec<LatticeVector> = big.lattice_points().into_iter().filter(|p| !p.is_zero()).collect();
        for mask in 1u32..(1 << boundary.len()) {
            let pts: Vec<LatticeVector> =
                (0..boundary.len()).filter(|i| mask >> i & 1 == 1).map(|i| boundary[i].clone()).collect();
            let Ok(p) = LatticePolytope::from_lattice_points(&pts) else { continue };
            let origin = vec![BigRational::zero(); 2];
            if !p.is_full_dimensional() || !p.strictly_contains(&origin) || !p.is_reflexive() {
                continue;
            }
            if seen.insert(p.vertex_set()) {
                out.push(p);
            }
        }
    }
    out
}

/// Boundary lattice points, vertex count and sorted edge lengths; all
/// invariant under GL(2, Z).
pub fn polygon_signature(p: &LatticePolytope) -> (usize, usize, Vec<usize>) {
    let points = p.lattice_points();
    let mut edges: Vec<usize> = p
        .facets()
        .iter()
        .map(|f| points.iter().filter(|x| f.is_tight(&x.to_rational())).count() - 1)
        .collect();
    edges.sort_unstable();
    (points.len() - 1, p.vertices().len(), edges)
}

/// One polygon per signature.
pub fn polygon_classes() -> Vec<LatticePolytope> {
    let mut seen = BTreeSet::new();
    reflexive_polygons().into_iter().filter(|p| seen.insert(polygon_signature(p))).collect()
}

fn segment_product(p: &LatticePolytope) -> LatticePolytope {
    let mut pts = Vec::new();
    for v in p.integral_vertices().unwrap() {
        for s in [-1, 1] {
            let mut c = v.coords().to_vec();
            c.push(s);
            pts.push(c);
        }
    }
    LatticePolytope::from_integer_vertices(&pts).unwrap()
}

fn bipyramid(p: &LatticePolytope) -> LatticePolytope {
    let mut pts: Vec<Vec<i64>> = p
        .integral_vertices()
        .unwrap()
        .iter()
        .map(|v| {
            let mut c = v.coords().to_vec();
            c.push(0);
            c
        })
        .collect();
    pts.push(vec![0, 0, 1]);
    pts.push(vec![0, 0, -1]);
    LatticePolytope::from_integer_vertices(&pts).unwrap()
}

/// Reflexive 3-polytopes: prisms and bipyramids over the polygons plus the
/// simplex of P^3.
pub fn reflexive_3_polytopes() -> Vec<LatticePolytope> {
    let mut out = vec![LatticePolytope::from_integer_vertices(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap()];
    for p in reflexive_polygons() {
        out.push(segment_product(&p));
        out.push(bipyramid(&p));
    }
    out
}

/// Random element of GL(n, Z) as a product of elementary moves, entries
/// kept small.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let k: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                m.add_row_multiple(i, j, &k.into());
            }
            1 => m.swap_rows(i, j),
            _ => m.negate_row(i),
        }
    }
    m
}

/// Random integer matrix with entries in `-range..=range`; sometimes of
/// deficient rank.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, range: i64) -> IntMatrix {
    let mut data: Vec<Vec<i64>> =
        (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-range..=range)).collect()).collect();
    if rows > 1 && rng.gen_bool(0.3) {
        let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
        let k = rng.gen_range(-2..=2);
        let copy: Vec<i64> = data[b].iter().map(|x| k * x).collect();
        data[a] = copy;
    }
    IntMatrix::from_rows(&data)
}

pub fn divides_chain(d: &[BigInt]) -> bool {
    d.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}

// ---- checks shared by the acceptance run and the property suite ----

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}
#[allow(unused_imports)]
pub(crate) use ensure;

pub fn check_snf(m: &IntMatrix) -> Result<(), String> {
    let snf = smith_normal_form(m);
    ensure!(&(&snf.u * m) * &snf.v == snf.s, "U M V != S for {m:?}");
    ensure!(snf.u.is_unimodular() && snf.v.is_unimodular(), "transform not unimodular for {m:?}");
    for r in 0..snf.s.rows() {
        for c in 0..snf.s.cols() {
            ensure!(r == c || snf.s.get(r, c).is_zero(), "S not diagonal for {m:?}");
        }
    }
    let d = snf.invariant_factors();
    ensure!(d.iter().all(|x| x > &BigInt::zero()), "negative invariant factor for {m:?}");
    ensure!(divides_chain(&d), "divisibility chain broken: {d:?}");
    let diag_len = snf.s.rows().min(snf.s.cols());
    ensure!((d.len()..diag_len).all(|i| snf.s.get(i, i).is_zero()), "zero before nonzero on the diagonal");
    ensure!(d.len() == rational_rank(&to_i64_rows(m)), "rank {} disagrees with rational rank", d.len());
    Ok(())
}

pub fn check_polar(p: &LatticePolytope) -> Result<(), String> {
    ensure!(p.is_reflexive(), "input not reflexive");
    let dual = p.polar_dual().map_err(|e| e.to_string())?;
    ensure!(dual.is_reflexive(), "dual not reflexive");
    let back = dual.polar_dual().map_err(|e| e.to_string())?;
    ensure!(back.vertex_set() == p.vertex_set(), "polar dual is not an involution");
    // <u, v> >= -1 for every lattice point pair
    let pp = p.lattice_points();
    let dp = dual.lattice_points();
    ensure!(
        pp.iter().all(|u| dp.iter().all(|v| u.dot(v) >= -1)),
        "pairing below -1 between a polytope and its dual"
    );
    Ok(())
}

pub fn check_complex(cx: &CellComplex) -> Result<(), String> {
    cx.check_boundary_squares().map_err(|e| e.to_string())?;
    let dim = cx.cell_counts().len();
    for d in 1..dim.saturating_sub(1) {
        let prod = &cx.boundary_matrix(d) * &cx.boundary_matrix(d + 1);
        ensure!(prod.is_zero(), "boundary of boundary nonzero in degree {}", d + 1);
    }
    let cells: Vec<Vec<Vec<usize>>> = (0..dim).map(|d| cx.cells(d).to_vec()).collect();
    let betti = cx.homology().betti;
    ensure!(betti == betti_oracle(&cells), "Betti {betti:?} vs oracle {:?}", betti_oracle(&cells));
    let chi_cells: i64 = cx.cell_counts().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
    let chi_betti: i64 = betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    ensure!(chi_cells == chi_betti && chi_cells == cx.euler_characteristic(), "Euler characteristics differ");
    Ok(())
}

pub fn check_components(fan: &Fan, blocks: &[Vec<usize>]) -> Result<usize, String> {
    let p = Partition::new(blocks.to_vec(), fan.num_rays()).map_err(|e| e.to_string())?;
    let got: BTreeSet<Vec<usize>> = components_of(fan, &p).iter().map(|c| c.rays().to_vec()).collect();
    let want: BTreeSet<Vec<usize>> = brute_force_components(fan, blocks).into_iter().collect();
    ensure!(got == want, "components {got:?} vs brute force {want:?} for blocks {blocks:?}");
    Ok(got.len())
}

/// Complexes built by the library: hypersurface nerves over the fan corpus,
/// the builtin families, and closures of random simplex lists.
pub fn complex_corpus(rng: &mut ChaCha8Rng, random: usize) -> Vec<(String, CellComplex)> {
    let mut out = Vec::new();
    for (name, fan) in fan_corpus() {
        let comps: Vec<Component> = (0..fan.num_rays()).map(|r| Component::new(vec![r])).collect();
        out.push((name, clemens_complex_of(&fan, &comps).unwrap()));
    }
    for name in builtin::FAMILY_NAMES {
        let spec = builtin::family(name).unwrap();
        if let Ok((comps, cx)) = clemens_complex(&spec) {
            if !comps.is_empty() {
                out.push((name.to_string(), cx));
            }
        }
    }
    for i in 0..random {
        let vertices = rng.gen_range(3..9);
        let count = rng.gen_range(1..7);
        let simplices: Vec<Vec<usize>> = (0..count)
            .map(|_| {
                let size = rng.gen_range(1..=4.min(vertices));
                let mut v: Vec<usize> = (0..vertices).collect();
                v.shuffle(rng);
                v.truncate(size);
                v
            })
            .collect();
        out.push((format!("random{i}"), CellComplex::closure_of(simplices)));
    }
    out
}
