// Dual cone bases, the local form of an anticanonical section on each chart
// of P^2, and the transition matrices between charts.
//
//     cargo run --example local_charts

use toric_degen::lattice::dual_cone_basis;
use toric_degen::toric::{local_section, transition_matrix, verify_gluing, Fan, Section, TorusDivisor};

fn main() {
    let p2 = Fan::projective_space(2);
    let f = Section::generic(&p2, &TorusDivisor::anticanonical(&p2)).unwrap();
    for sigma in p2.max_cones() {
        let basis = dual_cone_basis(&p2, sigma).unwrap();
        let local = local_section(&p2, &f, sigma).unwrap();
        println!("chart {:?}: dual basis {:?}", sigma.rays(), basis);
        println!("  f = {local}");
        assert!(local.is_polynomial());
    }
    let cones = p2.max_cones();
    for s in cones {
        for t in cones {
            let a = transition_matrix(&p2, s, t).unwrap();
            println!("A({:?}, {:?}) = {:?}, det {}", s.rays(), t.rays(), a, a.det().unwrap());
            assert!(verify_gluing(&p2, &f, s, t).unwrap());
        }
    }
}
