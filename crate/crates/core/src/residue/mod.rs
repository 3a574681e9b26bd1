//! The residue system of a graph representation and its certificates.
//!
//! Every cylinder end and every pole of higher order carries an unknown
//! residue. The two ends of a cylinder carry opposite residues, and the
//! residues around each vertex sum to zero. The coefficients are real, so
//! real and imaginary parts solve the same rational system independently.

mod certificate;
mod linalg;
mod system;

pub use certificate::{
    realize_residues, ComplexQ, ResidueCertificate, VertexCondition, MAX_ATTEMPTS,
};
pub use system::{
    build_system, classify_variables, solution_space, ResidueSystem, VariableClass, VariableKind,
};
