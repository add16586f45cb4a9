//! Quadratic embedding constants of finite connected graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It covers graph families and
//! exact distance matrices ([`graph`], [`distance`]), a dense symmetric
//! eigensolver and the numeric QE constant ([`spectral`]), closed-form values
//! for almost complete bipartite graphs and paths ([`closed_form`]), Tanaka and
//! modified Tanaka quintuples ([`quintuple`]), QE classification, Djoković
//! convexity and primary non-QE checks ([`classify`]), and the band matrix
//! decomposition used for `Θ(1,2,n-1)` ([`decomp`]).
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod closed_form;
pub mod decomp;
pub mod distance;
pub mod graph;
pub mod linalg;
pub mod quintuple;
pub mod spectral;

pub use classify::{classify, ClassificationReport, QeClass};
pub use distance::DistanceMatrix;
pub use graph::{FamilySpec, Graph, GraphError};
pub use quintuple::{Quintuple, QuintupleKind};
pub use spectral::{qec_numeric, QecResult};

/// Default eigen-residual tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default QE classification threshold: QE iff `qec <= DEFAULT_CLASS_TOL`.
pub const DEFAULT_CLASS_TOL: f64 = 1e-8;
