//! Combinatorics of strata of meromorphic k-differentials with poles of
//! higher order.
//!
//! The crate models a stratum by its singularity pattern, enumerates the
//! graph representations of a stratum (decompositions of a flat surface
//! along finite-volume cylinders), computes the reducibility index, builds
//! and solves the residue system attached to a representation in exact
//! rational arithmetic, and evaluates the counting identities and bounds on
//! saddle connections and maximal geodesic arc systems.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod residue;
pub mod stratum;

pub use error::{Error, Result};
pub use graph::{
    enumerate_reps, gcd_obstruction, is_irreducible, kappa, purify, validate, EnumerateOptions,
    GraphRepresentation, Irreducibility, KappaMethod, Multigraph, Violation,
};
pub use residue::{
    build_system, classify_variables, realize_residues, solution_space, ComplexQ,
    ResidueCertificate, ResidueSystem, VariableClass, VariableKind,
};
pub use stratum::{Nonemptiness, Stratum};
