//! Tolerances used by the verification suites.
//!
//! All verified identities are exact in exact arithmetic; the tolerances below
//! only absorb floating-point roundoff of complex character values and of the
//! additive character psi. Residuals observed in practice sit many orders of
//! magnitude below these bounds.

/// Default tolerance for identities between complex-valued functions.
pub const RESIDUAL: f64 = 1e-8;

/// Fast transform vs naive double-sum transform (same data, same field).
pub const FAST_VS_NAIVE: f64 = 1e-10;

/// Scalars expected to be exact (small) integers: gamma values, inner
/// products of virtual characters, multiplicities.
pub const INTEGRALITY: f64 = 1e-6;

/// Coset-function value comparisons where the coset structure is exact and
/// only the complex weights carry roundoff.
pub const COSET_VALUE: f64 = 1e-10;

/// Homomorphism checks of the additive character.
pub const CHARACTER: f64 = 1e-12;
