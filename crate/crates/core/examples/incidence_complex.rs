// Nerve of an explicitly listed cover and its homology.
//
//     cargo run --example incidence_complex

use toric_degen::clemens::complex_from_incidence;

const OCTAHEDRON: &str = "\
# maximal nonempty intersections, one per line
0,2,4
0,2,5
0,3,4
0,3,5
1,2,4
1,2,5
1,3,4
1,3,5
";

fn main() {
    let cx = complex_from_incidence(OCTAHEDRON).unwrap();
    let h = cx.homology();
    println!("cells {:?}, Betti {:?}, chi {}", cx.cell_counts(), h.betti, cx.euler_characteristic());
    assert_eq!(h.betti, vec![1, 0, 1]);
    println!("{}", serde_json::to_string(&cx.to_json()).unwrap());
}
