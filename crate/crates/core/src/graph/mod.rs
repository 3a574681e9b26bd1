//! Graph representations of a stratum: validation, purification,
//! enumeration up to isomorphism, and the reducibility index.

mod canon;
mod enumerate;
mod kappa;
mod multigraph;
mod partition;
mod rep;

pub use enumerate::{enumerate_reps, EnumerateOptions};
pub use kappa::{gcd_obstruction, is_irreducible, kappa, Irreducibility, KappaMethod};
pub use multigraph::Multigraph;
pub use rep::{purify, validate, GraphRepresentation, Violation};
