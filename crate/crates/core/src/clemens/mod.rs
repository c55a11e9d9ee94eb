//! Clemens' complex of the central fiber (realized as the nerve of the
//! component cover), its rational homology and the checks built on it.

mod complex;
mod sphere;

pub use complex::{homology, CellComplex, ComplexJson, HomologyProfile};
pub use sphere::{convex_coordinates, minimal_cone_of_point, sphere_theorem_for, verify_sphere_theorem, SphereReport};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::degeneration::{components, cone_membership, Component, FamilySpec};
use crate::error::{Error, Result};
use crate::report::Verdict;

/// The nerve on `num_vertices` components: one simplex per subset the oracle
/// reports as having nonempty common intersection. Subsets are explored one
/// dimension at a time, so every face of an accepted subset has already been
/// decided; an accepted subset with a rejected face is an error.
pub fn build_clemens_complex(num_vertices: usize, mut oracle: impl FnMut(&[usize]) -> bool) -> Result<CellComplex> {
    let mut levels: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    let mut current: BTreeSet<Vec<usize>> = (0..num_vertices).map(|v| vec![v]).filter(|s| oracle(s)).collect();
    while !current.is_empty() {
        let mut next = BTreeSet::new();
        for s in &current {
            let last = *s.last().expect("nonempty simplex");
            for v in last + 1..num_vertices {
                let mut t = s.clone();
                t.push(v);
                if !oracle(&t) {
                    continue;
                }
                for i in 0..t.len() {
                    let face: Vec<usize> = complex::drop_index(&t, i);
                    if !current.contains(&face) {
                        return Err(Error::InconsistentOracle { nonempty: t, empty_face: face });
                    }
                }
                next.insert(t);
            }
        }
        levels.push(std::mem::replace(&mut current, next));
    }
    CellComplex::from_simplices(levels.into_iter().flatten())
}

/// Lines of comma-separated component indices, each a maximal subset with
/// nonempty common intersection. Blank lines and `#` comments are skipped.
pub fn parse_incidence(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let set = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad component index {:?}", lineno + 1, t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(set);
    }
    Ok(out)
}

/// Nerve of an incidence file: a subset is nonempty iff it lies in a listed set.
pub fn complex_from_incidence(text: &str) -> Result<CellComplex> {
    let maximal = parse_incidence(text)?;
    let n = maximal.iter().flatten().max().map_or(0, |m| m + 1);
    let sets: Vec<BTreeSet<usize>> = maximal.into_iter().map(|s| s.into_iter().collect()).collect();
    build_clemens_complex(n, |s| sets.iter().any(|m| s.iter().all(|v| m.contains(v))))
}

/// Nerve of the components of a toric family; the oracle is cone membership
/// of the union of the components' rays.
pub fn clemens_complex_of(fan: &crate::toric::Fan, comps: &[Component]) -> Result<CellComplex> {
    build_clemens_complex(comps.len(), |s| {
        let mut rays: Vec<usize> = s.iter().flat_map(|&i| comps[i].rays().iter().copied()).collect();
        rays.sort_unstable();
        rays.dedup();
        cone_membership(fan, &rays)
    })
}

pub fn clemens_complex(spec: &FamilySpec) -> Result<(Vec<Component>, CellComplex)> {
    let comps = components(spec);
    let cx = clemens_complex_of(spec.fan(), &comps)?;
    Ok((comps, cx))
}

/// `b_n` of the complex, `n = N - k`: the number of Jordan blocks of size `n + 1`.
pub fn max_jordan_block_count(spec: &FamilySpec) -> Result<usize> {
    let (comps, cx) = clemens_complex(spec)?;
    if comps.is_empty() {
        return Err(Error::EmptyDegeneration);
    }
    Ok(cx.homology().betti(spec.n()))
}

/// `p_g(X_t) = sum p_g(C_i) + sum h^0(C_I, Omega^{n-k}) + b_n`, with the first
/// two sums set to zero because every stratum is a smooth complete toric variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub n: usize,
    pub component_term: usize,
    pub stratum_term: usize,
    pub top_betti: usize,
    pub geometric_genus: usize,
    pub expected: usize,
    pub toric_strata: Verdict,
    pub verdict: Verdict,
}

pub fn reduced_genus_check(spec: &FamilySpec) -> Result<GenusReport> {
    let (comps, cx) = clemens_complex(spec)?;
    let top = if comps.is_empty() { 0 } else { cx.homology().betti(spec.n()) };
    let expected = 1;
    let pg = top;
    let verdict = if comps.is_empty() {
        Verdict::fail("central fiber is empty")
    } else {
        Verdict::check(
            pg == expected,
            format!("p_g = 0 + 0 + {top} = {pg}, matching the Calabi-Yau value"),
            format!("p_g = 0 + 0 + {top} = {pg}, expected {expected}"),
        )
    };
    Ok(GenusReport {
        n: spec.n(),
        component_term: 0,
        stratum_term: 0,
        top_betti: top,
        geometric_genus: pg,
        expected,
        toric_strata: Verdict::assumed("strata are smooth complete toric varieties, which carry no holomorphic q-forms for q > 0"),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::projective_ci_family;

    #[test]
    fn nerve_examples() {
        let q = projective_ci_family(3, &[5]).unwrap().spec;
        let (_, cx) = clemens_complex(&q).unwrap();
        assert_eq!(cx.cell_counts(), vec![5, 10, 10, 5]);
        assert_eq!(cx.homology().betti, vec![1, 0, 0, 1]);

        let c = projective_ci_family(1, &[3]).unwrap().spec;
        let (_, cx) = clemens_complex(&c).unwrap();
        assert_eq!(cx.cell_counts(), vec![3, 3]);

        let single = build_clemens_complex(1, |_| true).unwrap();
        assert_eq!(single.cell_counts(), vec![1]);
    }

    #[test]
    fn jordan_block_counts() {
        for (n, d) in [(3, vec![5]), (1, vec![3]), (3, vec![3, 3])] {
            let spec = projective_ci_family(n, &d).unwrap().spec;
            assert_eq!(max_jordan_block_count(&spec).unwrap(), 1);
            let g = reduced_genus_check(&spec).unwrap();
            assert_eq!(g.geometric_genus, 1);
            assert!(g.verdict.is_pass());
        }
    }

    #[test]
    fn inconsistent_oracle() {
        // {0,1,2} nonempty while {1,2} is empty
        let err = build_clemens_complex(3, |s| s != [1, 2]).unwrap_err();
        assert_eq!(err, Error::InconsistentOracle { nonempty: vec![0, 1, 2], empty_face: vec![1, 2] });
    }

    #[test]
    fn incidence_file() {
        let cx = complex_from_incidence("0,1\n1,2\n# comment\n2,0\n").unwrap();
        assert_eq!(cx.homology().betti, vec![1, 1]);
        assert!(parse_incidence("0,x").is_err());
        let solid = complex_from_incidence("0, 1, 2").unwrap();
        assert_eq!(solid.homology().betti, vec![1, 0, 0]);
    }

    #[test]
    fn monotone_in_components() {
        let q = projective_ci_family(3, &[5]).unwrap().spec;
        let comps = components(&q);
        let small = clemens_complex_of(q.fan(), &comps[..3]).unwrap();
        let big = clemens_complex_of(q.fan(), &comps).unwrap();
        assert!(small.all_cells().all(|c| big.contains(c)));
    }
}
