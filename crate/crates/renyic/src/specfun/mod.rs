//! Overflow-safe special functions for the quantum-state densities:
//! log-gamma, associated Laguerre and Gegenbauer polynomials, and the
//! squared modulus of normalized spherical harmonics.
//!
//! Factorial-ratio prefactors are assembled in log space ([`LogScaled`])
//! and exponentiated once per evaluation; direct factorial arithmetic
//! overflows f64 well before the quantum numbers this crate targets.

mod gamma;
mod log_scaled;
mod poly;
mod sph;

pub use gamma::log_gamma;
pub use log_scaled::LogScaled;
pub use poly::{assoc_laguerre, gegenbauer};
pub use sph::sph_harmonic_modsq;
