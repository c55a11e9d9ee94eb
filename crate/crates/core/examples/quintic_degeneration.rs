// The quintic family t F - x_0 x_1 x_2 x_3 x_4 in P^4: components, strata,
// a fixed-point chain, the Clemens complex and its homology.
//
//     cargo run --example quintic_degeneration

use toric_degen::clemens::{clemens_complex, max_jordan_block_count, reduced_genus_check};
use toric_degen::degeneration::{components, find_fixed_point_chain, projective_ci_family, strata};

fn main() {
    let family = projective_ci_family(3, &[5]).unwrap();
    if let Some(w) = family.count_warning() {
        println!("note: {w}");
    }
    let spec = family.spec;
    let comps = components(&spec);
    println!("{} components: {:?}", comps.len(), comps.iter().map(|c| c.rays()).collect::<Vec<_>>());

    let st = strata(&spec);
    for size in 1..=st.max_size() {
        let dims: Vec<usize> = st.strata.iter().filter(|s| s.members.len() == size).map(|s| s.dim).collect();
        println!("  {} nonempty {size}-fold intersections, dimension {:?}", dims.len(), dims.first());
    }

    let chain = find_fixed_point_chain(&spec, &comps[0]).unwrap();
    println!("chain from {:?} inside {:?}: {:?}", chain.sigma0.rays(), chain.tau.rays(), chain.chain);
    assert!(chain.verify(spec.fan(), spec.partition()));

    let (_, cx) = clemens_complex(&spec).unwrap();
    let h = cx.homology();
    println!("Clemens complex cells {:?}, Betti {:?}", cx.cell_counts(), h.betti);
    assert_eq!(h.betti, vec![1, 0, 0, 1]);
    let blocks = max_jordan_block_count(&spec).unwrap();
    println!("Jordan blocks of size {}: {blocks}", spec.n() + 1);
    let g = reduced_genus_check(&spec).unwrap();
    println!("p_g = {} ({})", g.geometric_genus, g.verdict.reason);
}
