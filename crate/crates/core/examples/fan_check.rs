// Smoothness, completeness, the ray hull and its polar dual for the two
// plane examples, plus the monomial basis of the anticanonical sections.
//
//     cargo run --example fan_check

use toric_degen::builtin;
use toric_degen::toric::{section_basis, Fan, TorusDivisor};

fn describe(name: &str, fan: &Fan) -> usize {
    let delta = fan.delta_polytope().expect("full-dimensional ray hull");
    let nabla = delta.polar_dual().expect("origin is interior");
    let points = nabla.lattice_points();
    println!("{name}: {} rays, {} maximal cones", fan.num_rays(), fan.max_cones().len());
    println!("  smooth {}  complete {}", fan.is_smooth(), fan.is_complete().unwrap());
    println!("  reflexive {}  nabla has {} lattice points", delta.is_reflexive(), points.len());
    let basis = section_basis(fan, &TorusDivisor::anticanonical(fan)).unwrap();
    for b in &basis {
        println!("    nu = {}  ->  x^{:?}", b.nu, b.exponents);
    }
    basis.len()
}

fn main() {
    assert_eq!(describe("P2", &Fan::projective_space(2)), 10);
    assert_eq!(describe("resolved P2/Z3", &builtin::example2()), 4);
}
