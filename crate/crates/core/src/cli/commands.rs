use serde_json::{json, Value};

use super::report::RunReport;
use crate::clemens::{clemens_complex_of, max_jordan_block_count, reduced_genus_check, verify_sphere_theorem};
use crate::degeneration::{components, find_fixed_point_chain, strata_of, FamilySpec};
use crate::error::{Error, Result};
use crate::lattice::{rational_json, IntMatrix, LatticePolytope, LatticeVector, RationalPoint};
use crate::report::Verdict;
use crate::residue::{hypersurface_laurent, period_series, residue_limit_check, verify_max_monodromy_criterion};
use crate::toric::{section_basis, Fan, TorusDivisor};

pub const EMPTY_DIAGNOSTIC: &str =
    "X₀ empty: every transversal of the partition contains a primitive collection, so all C_sigma are empty";

fn points_json(points: &[RationalPoint]) -> Value {
    Value::Array(points.iter().map(|p| Value::Array(p.iter().map(rational_json).collect())).collect())
}

fn smoothness(fan: &Fan) -> Verdict {
    for (i, c) in fan.max_cones().iter().enumerate() {
        if c.dim() != fan.rank() {
            return Verdict::fail(format!("maximal cone {i} has {} rays in rank {}", c.dim(), fan.rank()));
        }
        let gens: Vec<LatticeVector> = c.rays().iter().map(|&r| fan.ray(r).clone()).collect();
        let det = IntMatrix::from_vectors(&gens, fan.rank()).det().expect("square");
        if det != 1.into() && det != (-1).into() {
            return Verdict::fail(format!("maximal cone {i} {:?} has determinant {det}", c.rays()));
        }
    }
    Verdict::pass(format!("all {} maximal cones are unimodular", fan.max_cones().len()))
}

/// Smoothness, completeness, the ray hull, reflexivity and the lattice points
/// of the polar dual.
pub fn fan_check(fan: &Fan) -> RunReport {
    let mut r = RunReport::new("fan-check");
    r.value("rank", fan.rank())
        .value("rays", fan.num_rays())
        .value("max_cones", fan.max_cones().len())
        .value("class_group", fan.class_group());
    r.check("smooth", smoothness(fan));
    let complete = match fan.is_complete() {
        Ok(true) => Verdict::pass("every ridge lies in exactly two maximal cones and the cone graph is connected"),
        Ok(false) => Verdict::fail("some ridge lies in only one maximal cone, or the cone graph is disconnected"),
        Err(e) => Verdict::fail(e.to_string()),
    };
    let is_complete = complete.is_pass();
    r.check("complete", complete);

    let delta: Result<LatticePolytope> = fan.delta_polytope();
    match &delta {
        Ok(d) => {
            r.value("delta_vertices", points_json(d.vertices()));
            r.check("delta", Verdict::pass(format!("{} vertices, {} facets", d.vertices().len(), d.facets().len())));
        }
        Err(e) => {
            r.check("delta", Verdict::fail(e.to_string()));
        }
    }
    let Ok(delta) = delta else {
        r.check("reflexive", Verdict::skipped("no ray hull"));
        r.check("nabla", Verdict::skipped("no ray hull"));
        return r;
    };
    let reflexive = delta.is_reflexive();
    r.check(
        "reflexive",
        Verdict::check(reflexive, "ray hull is reflexive", "ray hull is not reflexive"),
    );
    match delta.polar_dual() {
        Ok(nabla) => {
            let pts = nabla.lattice_points();
            r.value("nabla_vertices", points_json(nabla.vertices()));
            r.value("nabla_lattice_points", pts.len());
            r.check("nabla", Verdict::pass(format!("{} lattice points", pts.len())));
        }
        Err(e) => {
            r.check("nabla", Verdict::fail(e.to_string()));
        }
    }
    if is_complete {
        if let Ok(basis) = section_basis(fan, &TorusDivisor::anticanonical(fan)) {
            r.value("anticanonical_sections", basis.len());
        }
    }
    r
}

fn projective_count_warning(spec: &FamilySpec) -> Option<String> {
    let fan = spec.fan();
    if *fan != Fan::projective_space(fan.rank()) {
        return None;
    }
    let claimed: usize = spec.partition().blocks().iter().map(|b| b.len() - 1).product();
    let actual = components(spec).len();
    (claimed != actual).then(|| {
        format!("component count {actual} differs from the product formula prod(n_i - 1) = {claimed}; the enumerated count is reported")
    })
}

fn family_values(r: &mut RunReport, spec: &FamilySpec) {
    r.value("N", spec.rank()).value("k", spec.k()).value("n", spec.n()).value("blocks", spec.partition().blocks());
}

/// Components, strata, the nerve model of the Clemens complex and its
/// homology, the Jordan block count, the genus check and (single block) the
/// comparison with the boundary of the ray hull.
pub fn degenerate(spec: &FamilySpec) -> RunReport {
    let mut r = RunReport::new("degenerate");
    family_values(&mut r, spec);
    if let Some(w) = projective_count_warning(spec) {
        r.warn(w);
    }
    let comps = components(spec);
    r.value("components", &comps);
    if comps.is_empty() {
        r.check("components", Verdict::fail(EMPTY_DIAGNOSTIC));
        r.warn(EMPTY_DIAGNOSTIC);
        for name in ["complex", "euler", "jordan_blocks", "genus"] {
            r.check(name, Verdict::skipped("central fiber is empty"));
        }
        return r;
    }
    r.check("components", Verdict::pass(format!("{} components", comps.len())));

    let st = strata_of(spec.fan(), comps.clone());
    r.value("strata_count", st.strata.len());
    r.value(
        "strata",
        st.strata.iter().map(|s| json!({"members": s.members, "dim": s.dim})).collect::<Vec<_>>(),
    );

    let cx = match clemens_complex_of(spec.fan(), &comps) {
        Ok(cx) => cx,
        Err(e) => {
            r.check("complex", Verdict::fail(e.to_string()));
            return r;
        }
    };
    r.check(
        "complex",
        match cx.check_boundary_squares() {
            Ok(()) => Verdict::pass("nerve model; boundary of boundary is zero"),
            Err(e) => Verdict::fail(e.to_string()),
        },
    );
    r.value("complex_model", "nerve model").value("complex_cells", cx.cell_counts());
    let h = cx.homology();
    r.value("betti", &h.betti);
    r.check(
        "euler",
        Verdict::check(
            h.euler_characteristic() == cx.euler_characteristic(),
            format!("chi = {}", cx.euler_characteristic()),
            format!("Betti numbers give {}, cells give {}", h.euler_characteristic(), cx.euler_characteristic()),
        ),
    );
    let blocks = h.betti(spec.n());
    r.value("max_jordan_block_count", blocks).value("jordan_block_size", spec.n() + 1);
    r.check(
        "jordan_blocks",
        Verdict::check(
            blocks == 1,
            format!("b_{} = 1: one Jordan block of size {}", spec.n(), spec.n() + 1),
            format!("b_{} = {blocks}, expected 1", spec.n()),
        ),
    );
    match reduced_genus_check(spec) {
        Ok(g) => {
            r.check("genus", g.verdict.clone());
            r.value("genus", g);
        }
        Err(e) => {
            r.check("genus", Verdict::fail(e.to_string()));
        }
    }
    if spec.is_hypersurface() {
        match verify_sphere_theorem(spec.fan()) {
            Ok(s) => {
                r.check(
                    "sphere",
                    Verdict::check(
                        s.holds(),
                        format!("isomorphic to the boundary of the ray hull, Betti numbers of S^{}", spec.rank() - 1),
                        format!(
                            "bijective {}, order reversing {}, sphere Betti {}",
                            s.bijective, s.order_reversing, s.sphere_betti
                        ),
                    ),
                );
                r.value("sphere", s);
            }
            Err(e) => {
                r.check("sphere", Verdict::fail(e.to_string()));
            }
        }
    }
    r
}

/// Per-condition verdicts of the maximal-unipotent-monodromy criterion.
pub fn monodromy(spec: &FamilySpec) -> RunReport {
    let mut r = RunReport::new("monodromy");
    family_values(&mut r, spec);
    let report = verify_max_monodromy_criterion(spec);
    for c in &report.conditions {
        r.check(&c.id, c.verdict.clone());
    }
    r.value("components", report.components).value("verdict", &report.verdict);
    if report.components == 0 {
        r.warn(EMPTY_DIAGNOSTIC);
    } else {
        if let Ok(b) = max_jordan_block_count(spec) {
            r.value("max_jordan_block_count", b);
        }
        let s0 = &components(spec)[0];
        if let Ok(ch) = find_fixed_point_chain(spec, s0) {
            r.value("fixed_point_chain", &ch);
            if let Ok(res) = residue_limit_check(spec, s0, &ch.tau, &ch.patch_order) {
                r.value("residue", res.to_value());
            }
        }
    }
    r
}

/// Constant terms of the powers of the section's Laurent representative.
pub fn period(spec: &FamilySpec, order: usize) -> Result<RunReport> {
    if !spec.is_hypersurface() {
        return Err(Error::NotHypersurface(spec.k()));
    }
    let mut r = RunReport::new("period");
    let f = hypersurface_laurent(spec.fan(), &spec.sections()[0])?;
    let series = period_series(&f, order)?;
    r.value("order", order)
        .value("normalization", series.normalization())
        .value("coeffs", series.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>());
    r.check("period", Verdict::pass(format!("{} coefficients by exact constant-term extraction", order + 1)));
    Ok(r)
}
