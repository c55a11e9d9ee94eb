use serde::Serialize;
use serde_json::{json, Value};

use super::laurent::{LaurentPolynomial, TPoly};
use crate::degeneration::{components, find_fixed_point_chain, Component, FamilySpec};
use crate::error::{Error, Result};
use crate::lattice::Cone;
use crate::report::Verdict;
use crate::toric::PatchCoordinates;

/// `f_i = sum c_nu z^nu` for each block's section on the given chart.
pub fn block_laurent(spec: &FamilySpec, chart: &PatchCoordinates) -> Vec<LaurentPolynomial> {
    spec.sections().iter().map(|s| chart.character_sum(spec.fan(), s)).collect()
}

/// `g_t = z_1 ... z_N (1 - t f_1) ... (1 - t f_k)` on the chart.
pub fn family_polynomial(spec: &FamilySpec, chart: &PatchCoordinates) -> Result<LaurentPolynomial> {
    if !spec.fan().delta_polytope()?.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let n = chart.dim();
    let one = LaurentPolynomial::one(n);
    let t = TPoly::t();
    let mut g = LaurentPolynomial::product_of_vars(n);
    for f in block_laurent(spec, chart) {
        g = &g * &(&one - &f.scale(&t));
    }
    debug_assert!(g.is_polynomial());
    Ok(g)
}

/// Outcome of differentiating `g_t` along the last `k` chart variables and
/// setting `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCheck {
    pub sigma0: Component,
    pub tau: Cone,
    pub order: Vec<usize>,
    pub g_t: LaurentPolynomial,
    pub limit: LaurentPolynomial,
    pub expected: LaurentPolynomial,
    pub holds: bool,
}

impl ResidueCheck {
    pub fn to_value(&self) -> Value {
        json!({
            "sigma0": self.sigma0.rays(),
            "tau": self.tau.rays(),
            "variable_rays": self.order,
            "g_t_terms": self.g_t.len(),
            "limit": self.limit.t_zero_json(),
            "expected": self.expected.t_zero_json(),
            "holds": self.holds,
        })
    }
}

/// `order` lists the rays of `tau` in chart variable order; its last `k`
/// entries must be the rays of `sigma0`.
pub fn residue_limit_check(spec: &FamilySpec, sigma0: &Component, tau: &Cone, order: &[usize]) -> Result<ResidueCheck> {
    let big_n = spec.rank();
    let k = spec.k();
    if order.len() != big_n {
        return Err(Error::DimensionMismatch { expected: big_n, got: order.len() });
    }
    let foreign: Vec<usize> = (0..big_n).filter(|&i| !tau.contains_ray(order[i])).collect();
    if !foreign.is_empty() {
        return Err(Error::CoordinateOrdering { positions: foreign });
    }
    let misplaced: Vec<usize> = (0..big_n)
        .filter(|&i| (i >= big_n - k) != sigma0.rays().contains(&order[i]))
        .collect();
    if !misplaced.is_empty() {
        return Err(Error::CoordinateOrdering { positions: misplaced });
    }
    let chart = PatchCoordinates::with_ray_order(spec.fan(), tau, order)?;
    let g = family_polynomial(spec, &chart)?;
    let mut d = g.clone();
    for j in big_n - k..big_n {
        d = d.partial_derivative(j);
    }
    let limit = d.set_t_zero();
    let mut exp = vec![1; big_n - k];
    exp.extend(std::iter::repeat_n(0, k));
    let expected = LaurentPolynomial::monomial(exp, TPoly::one());
    Ok(ResidueCheck {
        sigma0: sigma0.clone(),
        tau: tau.clone(),
        order: order.to_vec(),
        holds: limit == expected,
        g_t: g,
        limit,
        expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub id: String,
    pub description: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub n: usize,
    pub k: usize,
    pub components: usize,
    pub conditions: Vec<Condition>,
    pub satisfied: bool,
    pub verdict: String,
}

fn condition(id: &str, description: &str, verdict: Verdict) -> Condition {
    Condition { id: id.into(), description: description.into(), verdict }
}

/// One entry per condition of the maximal-unipotent-monodromy criterion;
/// the analytic ones are recorded as input obligations.
pub fn verify_max_monodromy_criterion(spec: &FamilySpec) -> CriterionReport {
    let comps = components(spec);
    let reflexive = spec.fan().delta_polytope().map(|d| d.is_reflexive()).unwrap_or(false);
    let mut conds = vec![condition(
        "reflexive",
        "ray hull is a reflexive polytope",
        Verdict::check(reflexive, "ray hull is reflexive", "ray hull is not reflexive"),
    )];

    conds.push(condition(
        "1-components",
        "central fiber is a nonempty union of components C_sigma",
        Verdict::check(
            !comps.is_empty(),
            format!("{} components", comps.len()),
            "X₀ empty: every transversal of the partition contains a primitive collection",
        ),
    ));
    conds.push(condition(
        "1-smooth-fiber",
        "general fiber X_t is smooth and the components meet transversally",
        Verdict::assumed("input obligation; transversality of the sections is not checked"),
    ));
    conds.push(condition(
        "2-hodge",
        "h^{n,0}(X_t) >= 1",
        Verdict::assumed("input obligation; not computed"),
    ));
    conds.push(condition(
        "3-strata",
        "every nonempty stratum C_S is irreducible",
        if comps.is_empty() {
            Verdict::skipped("no components")
        } else {
            Verdict::pass("each nonempty stratum is the closure of a single torus orbit")
        },
    ));

    let mut chains = Vec::new();
    let chain_verdict = if comps.is_empty() {
        Verdict::fail("no components, so no point stratum C_0 cap ... cap C_n exists")
    } else {
        let mut bad = None;
        for c in &comps {
            match find_fixed_point_chain(spec, c) {
                Ok(ch) if ch.verify(spec.fan(), spec.partition()) => chains.push(ch),
                Ok(_) => bad = Some(format!("chain from {:?} fails verification", c.rays())),
                Err(e) => bad = Some(format!("chain from {:?}: {e}", c.rays())),
            }
            if bad.is_some() {
                break;
            }
        }
        match bad {
            None => Verdict::pass(format!(
                "every component starts a chain of {} further components meeting in a torus-fixed point",
                spec.n()
            )),
            Some(reason) => Verdict::fail(reason),
        }
    };
    let chain_ok = chain_verdict.is_pass();
    conds.push(condition("4-fixed-point", "n + 1 components meet in a point stratum", chain_verdict));

    let residue_verdict = if !chain_ok {
        Verdict::skipped("no fixed-point chain")
    } else if !reflexive {
        Verdict::fail("local form needs a reflexive ray hull")
    } else {
        let mut failure = None;
        for ch in &chains {
            match residue_limit_check(spec, &ch.sigma0, &ch.tau, &ch.patch_order) {
                Ok(r) if r.holds => {}
                Ok(r) => failure = Some(format!("limit on the chart of {:?} is not z_1...z_n", r.tau.rays())),
                Err(e) => failure = Some(e.to_string()),
            }
            if failure.is_some() {
                break;
            }
        }
        match failure {
            None => Verdict::pass(format!(
                "d_(n+1)...d_N g_t at t = 0 equals z_1...z_n on all {} charts",
                chains.len()
            )),
            Some(r) => Verdict::fail(r),
        }
    };
    conds.push(condition("5-residue", "residue limit is dz_1...dz_n / (z_1...z_n)", residue_verdict));

    let failed: Vec<&Condition> = conds.iter().filter(|c| c.verdict.is_failure()).collect();
    let (satisfied, verdict) = if failed.is_empty() {
        (true, "criterion satisfied (combinatorial+symbolic parts)".to_string())
    } else {
        let ids: Vec<&str> = failed.iter().map(|c| c.id.as_str()).collect();
        let last = failed.last().expect("nonempty");
        (false, format!("criterion fails at {}: {}", ids.join(", "), last.verdict.reason))
    };
    CriterionReport { n: spec.n(), k: spec.k(), components: comps.len(), conditions: conds, satisfied, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::projective_ci_family;

    #[test]
    fn quintic_family_polynomial() {
        let q = projective_ci_family(3, &[5]).unwrap().spec;
        let chart = PatchCoordinates::canonical(q.fan(), &q.fan().max_cones()[0]).unwrap();
        let g = family_polynomial(&q, &chart).unwrap();
        // z1z2z3z4 - t (z1^5 + ... + z4^5 + 1)
        assert_eq!(g.len(), 6);
        assert!(g.is_polynomial());
        assert_eq!(g.set_t_zero(), LaurentPolynomial::product_of_vars(4));
    }

    #[test]
    fn residue_limits() {
        for (n, d) in [(3, vec![5]), (1, vec![3]), (3, vec![3, 3])] {
            let spec = projective_ci_family(n, &d).unwrap().spec;
            let s0 = components(&spec)[0].clone();
            let ch = find_fixed_point_chain(&spec, &s0).unwrap();
            let r = residue_limit_check(&spec, &s0, &ch.tau, &ch.patch_order).unwrap();
            assert!(r.holds, "{n} {d:?}");
            let mut exp = vec![1; n];
            exp.extend(vec![0; d.len()]);
            assert_eq!(r.limit, LaurentPolynomial::monomial(exp, TPoly::one()));
        }
    }

    #[test]
    fn ordering_errors() {
        let spec = projective_ci_family(1, &[3]).unwrap().spec;
        let s0 = Component::new(vec![0]);
        let ch = find_fixed_point_chain(&spec, &s0).unwrap();
        let mut swapped = ch.patch_order.clone();
        swapped.reverse();
        let err = residue_limit_check(&spec, &s0, &ch.tau, &swapped).unwrap_err();
        assert_eq!(err, Error::CoordinateOrdering { positions: vec![0, 1] });
    }

    #[test]
    fn criterion_reports() {
        for (n, d) in [(3, vec![5]), (1, vec![3]), (3, vec![3, 3])] {
            let spec = projective_ci_family(n, &d).unwrap().spec;
            let r = verify_max_monodromy_criterion(&spec);
            assert!(r.satisfied, "{:?}", r);
        }
    }
}
