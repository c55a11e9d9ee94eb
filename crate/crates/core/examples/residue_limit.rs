// g_t = z_1...z_N (1 - t f_1)(1 - t f_2) for two cubics in P^5 on the chart
// of a fixed point, and its derivative limit along the last two variables.
//
//     cargo run --example residue_limit

use toric_degen::degeneration::{components, find_fixed_point_chain, projective_ci_family};
use toric_degen::residue::residue_limit_check;

fn main() {
    let spec = projective_ci_family(3, &[3, 3]).unwrap().spec;
    let sigma0 = &components(&spec)[0];
    let chain = find_fixed_point_chain(&spec, sigma0).unwrap();
    let r = residue_limit_check(&spec, sigma0, &chain.tau, &chain.patch_order).unwrap();
    println!("chart variables pair with rays {:?}", r.order);
    println!("g_t has {} terms:", r.g_t.len());
    println!("  {}", r.g_t);
    println!("limit    {}", r.limit);
    println!("expected {}", r.expected);
    assert!(r.holds);
}
