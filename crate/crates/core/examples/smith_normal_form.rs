// Smith normal form with its transforms, and the class group of a fan read
// off from the invariant factors.
//
//     cargo run --example smith_normal_form

use toric_degen::builtin;
use toric_degen::lattice::{smith_normal_form, IntMatrix};
use toric_degen::toric::Fan;

fn main() {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M = {:?}", m);
    println!("S = {:?}", snf.s);
    println!("invariant factors {:?}, rank {}", snf.invariant_factors(), snf.rank());
    assert_eq!(&(&snf.u * &m) * &snf.v, snf.s);
    let d: Vec<i64> = snf.invariant_factors().iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(d, vec![2, 6, 12]);

    for (name, fan) in [("P4", Fan::projective_space(4)), ("example2", builtin::example2()), ("index-2 cone", builtin::index2_cone())] {
        let cg = fan.class_group();
        println!("{name}: class group Z^{} + torsion {:?}", cg.free_rank, cg.torsion);
    }
}
