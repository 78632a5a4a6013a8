//! Spectral statistics of random n-covers of a compact hyperbolic surface.
//!
//! The crate evaluates smooth linear statistics of twisted Laplacians on
//! random covers through the trace-formula geodesic side, compares finite
//! covers against the Poisson-divisor limit model, computes the exact
//! limit moments by partition expansion, and drives the CLT and
//! energy-variance experiments.

pub mod analysis;
pub mod group;
pub mod moments;
pub mod perm;
pub mod quad;
pub mod spectrum;

pub use group::{
    canonical_class, free_reduce, primitive_root, Character, ConjClassKey, GeneratorSymbol,
    GroupError, SurfaceGroupPresentation, SymmetryClass, Word,
};
