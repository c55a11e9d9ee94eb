// A resolution of P[9,6,1,1,1] with a partition whose transversals are all
// non-faces: the central fiber is empty.
//
//     cargo run --example empty_degeneration

use toric_degen::builtin;
use toric_degen::clemens::max_jordan_block_count;
use toric_degen::degeneration::{components, cone_membership};

fn main() {
    let spec = builtin::family("empty").unwrap();
    let fan = spec.fan();
    println!("{} rays, {} maximal cones, smooth {}", fan.num_rays(), fan.max_cones().len(), fan.is_smooth());
    println!("blocks {:?}", spec.partition().blocks());
    for &a in spec.partition().block(0) {
        for &b in spec.partition().block(1) {
            println!("  rays {a} and {b} share a cone: {}", cone_membership(fan, &[a, b]));
        }
    }
    let comps = components(&spec);
    println!("{} components", comps.len());
    assert!(comps.is_empty());
    println!("{}", max_jordan_block_count(&spec).unwrap_err());
}
