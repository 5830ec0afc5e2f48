//! Exact position- and momentum-space probability densities for the
//! hydrogen atom, the 3-D isotropic harmonic oscillator and the infinite
//! square well, built as separable [`crate::density::Density`] instances.
//! Atomic units throughout.

mod hydrogen;
mod oscillator;
mod well;

pub use hydrogen::{
    hydrogen_density, hydrogen_radial_momentum, hydrogen_radial_position, HydrogenState,
};
pub use oscillator::{
    oscillator_density, oscillator_radial_momentum, oscillator_radial_position, oscillator_shell,
    OscillatorState,
};
pub use well::{box_complexity, square_well_density, square_well_g, SquareWellState};

/// Which conjugate space a quantum density lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Position,
    Momentum,
}
