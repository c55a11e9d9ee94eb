//! Exact lattice geometry: vectors, integer matrices, Smith normal form,
//! simplicial cones and rational polytopes.

pub mod cone;
pub mod linalg;
pub mod matrix;
pub mod polytope;
pub mod snf;
pub mod vector;

pub use cone::{dual_cone_basis, paired_dual_basis, Cone, DualGenerator};
pub use matrix::IntMatrix;
pub use polytope::{parse_rational, rational_json, Facet, LatticePolytope, PolytopeJson, RationalPoint};
pub use snf::{smith_diagonal, smith_normal_form, SmithNormalForm};
pub use vector::{primitive, LatticeVector};
