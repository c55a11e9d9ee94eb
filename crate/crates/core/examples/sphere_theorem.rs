// For hypersurfaces the Clemens complex is the boundary of the ray hull:
// checks the cell correspondence and the sphere homology.
//
//     cargo run --example sphere_theorem

use toric_degen::builtin;
use toric_degen::clemens::verify_sphere_theorem;
use toric_degen::toric::Fan;

fn main() {
    let mut fans: Vec<(String, Fan)> = (1..=5).map(|n| (format!("P{n}"), Fan::projective_space(n))).collect();
    fans.push(("example2".into(), builtin::example2()));
    fans.push(("P1 x P1 x P1".into(), Fan::projective_space(1).product(&Fan::projective_space(1)).product(&Fan::projective_space(1))));
    for (name, fan) in fans {
        let r = verify_sphere_theorem(&fan).unwrap();
        println!(
            "{name:>14}: cells {:?}  bijective {}  order-reversing {}  Betti {:?}",
            r.nerve_cells, r.bijective, r.order_reversing, r.betti
        );
        assert!(r.holds());
    }
}
