//! Fans, divisors, sections and affine charts of smooth complete toric varieties.

pub mod fan;
pub mod patch;
pub mod sections;

pub use fan::{ClassGroup, Fan, FanJson};
pub use patch::{local_section, local_section_on, transition_matrix, verify_gluing, PatchCoordinates};
pub use sections::{
    section_basis, section_polytope, AnticanonicalSection, Section, SectionBasisElement, SectionJson, TorusDivisor,
};
