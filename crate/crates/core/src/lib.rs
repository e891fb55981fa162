//! Desk-scale verification workbench for parahoric Hecke algebras and stable
//! functions.
//!
//! The library is organized around the objects it checks:
//!
//! - [`rootsys`]: affine root systems and affine Weyl groups for types A1/A2,
//!   filtration membership of root subgroups, the sets `S(Q_n^+)` and their
//!   Bruhat lower closures, and the root-level decomposition claims behind the
//!   averaging-operator stabilization.
//! - [`algcore`]: prime fields, residue rings, the additive character psi and
//!   the fixed square root of q.
//! - [`grpfin`]: finite matrix groups (SL2/SL3 over F_p and Z/p^N), conjugacy
//!   classes, class-function convolution, and Dixon-Burnside character tables.
//! - [`liestable`]: finite reductive Lie algebras, the Fourier transform and
//!   Chevalley map, the stable-function algebra, parabolic restriction and the
//!   Lie-side vanishing theorem.
//! - [`dlstable`]: the dual chart for SL2(F_q), Deligne-Lusztig virtual
//!   characters pinned by orthogonality constraints, geometric Lusztig series,
//!   and the group-side vanishing theorem.
//! - [`hecke`]: an exact p-adic window model of SL2(Q_p): parahoric
//!   descriptors, coset functions, averaging operators and their
//!   stabilization, the maps between stable functions and the truncated
//!   Bernstein center, and depth-r Deligne-Lusztig parameters of minimal
//!   K-types.
//! - [`checks`] / [`report`]: the named verification suites and their
//!   machine-readable reports.

pub mod algcore;
pub mod checks;
pub mod dlstable;
pub mod error;
pub mod grpfin;
pub mod hecke;
pub mod liestable;
pub mod par;
pub mod report;
pub mod rootsys;
pub mod tol;

pub use error::Error;
