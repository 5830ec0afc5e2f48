use std::sync::Arc;

use crate::complexity::renyi;
use crate::density::{Density, Shape, Support};
use crate::error::{Error, Result};
use crate::order::OrderParam;
use crate::quadrature::QuadratureSpec;

/// The k-th eigenstate of a particle in a box of width L, optionally in
/// d dimensions (the complexity generalizes as a d-th power; only d = 1 is
/// evaluable as a density).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareWellState {
    pub k: u32,
    pub width: f64,
    pub d: u32,
}

impl SquareWellState {
    pub fn new(k: u32, width: f64, d: u32) -> Result<SquareWellState> {
        if k < 1 {
            return Err(Error::Domain("square well requires k >= 1".into()));
        }
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::Domain(format!(
                "square well width must be positive, got {width}"
            )));
        }
        if d < 1 {
            return Err(Error::Domain("square well requires d >= 1".into()));
        }
        Ok(SquareWellState { k, width, d })
    }
}

/// The 1-D density (2/L) sin²(kπx/L) on [0, L].
pub fn square_well_density(state: &SquareWellState) -> Result<Density> {
    let s = SquareWellState::new(state.k, state.width, state.d)?;
    if s.d != 1 {
        return Err(Error::Unsupported(
            "evaluable square-well density exists for d = 1 only; \
             use box_complexity for d > 1"
                .into(),
        ));
    }
    let width = s.width;
    let k = f64::from(s.k);
    let profile: crate::density::ProfileFn = Arc::new(move |x: f64| {
        2.0 / width * (k * std::f64::consts::PI * x / width).sin().powi(2)
    });
    Ok(Density {
        dimension: 1,
        support: Support::Interval { lo: 0.0, hi: width },
        length_scale: width,
        breakpoints: vec![],
        center: vec![0.0],
        shape: Shape::Line(profile),
    })
}

/// g(α) = e^{R^(α)} of the width-1 well; the complexity is 2 g(α) and is
/// the same for every k. The zero and infinity limits are exact
/// (support measure 1, supremum 2); everything else goes through the
/// entropy pipeline.
pub fn square_well_g(alpha: OrderParam, spec: &QuadratureSpec) -> Result<f64> {
    match alpha {
        OrderParam::ZeroLimit => Ok(1.0),
        OrderParam::InfinityLimit => Ok(0.5),
        _ => {
            let density = square_well_density(&SquareWellState::new(1, 1.0, 1)?)?;
            Ok(renyi(&density, alpha, spec)?.value.exp())
        }
    }
}

/// Complexity of the d-dimensional box, (2 g(α))^d; degenerate across all
/// eigenstates.
pub fn box_complexity(alpha: OrderParam, d: u32, spec: &QuadratureSpec) -> Result<f64> {
    if d < 1 {
        return Err(Error::Domain("box dimension must be >= 1".into()));
    }
    Ok((2.0 * square_well_g(alpha, spec)?).powi(d as i32))
}
