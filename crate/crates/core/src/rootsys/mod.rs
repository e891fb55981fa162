//! Affine root systems, affine Weyl groups and standard-parahoric
//! combinatorics for the untwisted types A1 and A2.
//!
//! Affine roots are written beta = gamma + n*delta with gamma a nonzero
//! finite root; evaluation against a point x of the standard apartment sends
//! delta to 1. Standard parahorics are indexed by proper subsets J of the
//! affine simple roots, with the barycentric facet point x_J normalized by
//! the marks so that delta(x_J) = 1.

mod datum;
mod sset;
mod weyl;

pub use datum::{AffineRoot, FiniteRootDatum, ParahoricLabel, Rat, RootKind};
pub use sset::{
    member_length_bound, s_set, verify_decomposition_roots, y_of, DecompositionOutcome,
    SSetResult,
};
pub use weyl::{LowerSetY, WeylEl, WeylGroup};
