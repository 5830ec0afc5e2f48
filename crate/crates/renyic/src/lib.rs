//! Two-parameter generalized statistical complexity of probability
//! densities, exp(R^(α) - R^(β)) built from Rényi entropies, together with
//! the exact quantum-system densities (hydrogen atom, isotropic harmonic
//! oscillator, infinite square well) it is evaluated on in both position
//! and momentum space.
//!
//! The α = 1, β = 2 member recovers the LMC complexity; the β → ∞ limit
//! multiplies the Rényi entropy power by the density supremum. All
//! integrals reduce to 1-D adaptive Gauss-Legendre quadrature through the
//! separable structure of the densities.
//!
//! # Layout
//!
//! - [`specfun`]: log-gamma, Laguerre / Gegenbauer recurrences, |Y_lm|².
//! - [`quadrature`]: adaptive panels, semi-infinite truncation with a
//!   divergence guard, golden-section maximization.
//! - [`density`]: the density data model, analytic reference densities and
//!   the scaling / replication transforms.
//! - [`quantum`]: hydrogen, oscillator and square-well densities.
//! - [`complexity`]: the entropy and complexity engine for all extended
//!   orders (0, finite, Shannon, ∞).
//! - [`sweep`]: parallel figure sweeps over (l, |m|) state grids.
//! - [`verify`]: the named property-check suites.

pub mod complexity;
pub mod density;
pub mod error;
pub mod order;
pub mod par;
pub mod quadrature;
pub mod quantum;
pub mod specfun;
pub mod sweep;
pub mod verify;

pub use complexity::{complexity, renyi, sup_norm, ComplexityResult, EntropyResult};
pub use density::{Density, StepDensity};
pub use error::{Error, Result};
pub use order::OrderParam;
pub use quadrature::QuadratureSpec;
