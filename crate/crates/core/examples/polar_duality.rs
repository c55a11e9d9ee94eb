// Polar duals, reflexivity and lattice points.
//
//     cargo run --example polar_duality

use toric_degen::lattice::LatticePolytope;

fn show(label: &str, p: &LatticePolytope) {
    let verts: Vec<String> = p.vertices().iter().map(|v| format!("{:?}", v.iter().map(|c| c.to_string()).collect::<Vec<_>>())).collect();
    println!("{label}: vertices {}", verts.join(" "));
}

fn main() {
    let cases: [&[[i64; 2]]; 4] = [
        &[[1, 0], [0, 1], [-1, -1]],
        &[[2, -1], [-1, 2], [-1, -1]],
        &[[1, 0], [0, 1], [-2, -3]],
        &[[2, 0], [0, 2], [-2, -2]],
    ];
    for verts in cases {
        let p = LatticePolytope::from_integer_vertices(verts).unwrap();
        let dual = p.polar_dual().unwrap();
        show("P", &p);
        show("  dual", &dual);
        println!("  reflexive {}, {} lattice points, dual has {}", p.is_reflexive(), p.lattice_points().len(), dual.lattice_points().len());
        if p.is_reflexive() {
            assert_eq!(dual.polar_dual().unwrap().vertex_set(), p.vertex_set());
        }
    }
    let octahedron = LatticePolytope::from_integer_vertices(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]).unwrap();
    let cube = octahedron.polar_dual().unwrap();
    show("cube", &cube);
    assert_eq!(cube.lattice_points().len(), 27);
}
