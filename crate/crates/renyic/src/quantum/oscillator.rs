use std::sync::Arc;

use crate::density::{Density, Shape, Support};
use crate::error::{Error, Result};
use crate::quantum::Space;
use crate::specfun::{assoc_laguerre, log_gamma};

const MAX_N: u32 = 20;
const MAX_L: u32 = 40;

/// An isotropic harmonic-oscillator state (n, l, m) with potential
/// strength λ (V = λ²r²/2), in one of the conjugate spaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorState {
    pub n: u32,
    pub l: u32,
    pub m: i64,
    pub lambda: f64,
    pub space: Space,
}

impl OscillatorState {
    pub fn new(n: u32, l: u32, m: i64, lambda: f64, space: Space) -> Result<OscillatorState> {
        if n > MAX_N || l > MAX_L {
            return Err(Error::Domain(format!(
                "oscillator quantum numbers capped at n <= {MAX_N}, l <= {MAX_L}; \
                 got n = {n}, l = {l}"
            )));
        }
        if m.unsigned_abs() > l as u64 {
            return Err(Error::Domain(format!(
                "oscillator m must satisfy |m| <= l, got l = {l}, m = {m}"
            )));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Domain(format!(
                "oscillator strength must be positive, got {lambda}"
            )));
        }
        Ok(OscillatorState {
            n,
            l,
            m,
            lambda,
            space,
        })
    }

    /// Reduced energy index e = 2n + l.
    pub fn energy_index(&self) -> u32 {
        2 * self.n + self.l
    }
}

/// Position-space radial wavefunction
/// R_{n,l}(r) = [2 n! λ^{l+3/2} / Γ(n+l+3/2)]^{1/2} r^l e^{-λr²/2} L_n^{l+1/2}(λr²).
pub fn oscillator_radial_position(n: u32, l: u32, lambda: f64, r: f64) -> Result<f64> {
    check_params(n, l, lambda)?;
    if r.is_nan() || r < 0.0 {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    if r == 0.0 && l > 0 {
        return Ok(0.0);
    }
    let x = lambda * r * r;
    let poly = assoc_laguerre(n as usize, f64::from(l) + 0.5, x)?;
    if poly == 0.0 {
        return Ok(0.0);
    }
    let ln_pre = 0.5
        * ((2.0f64).ln() + log_gamma(f64::from(n) + 1.0)?
            + (f64::from(l) + 1.5) * lambda.ln()
            - log_gamma(f64::from(n + l) + 1.5)?);
    let ln_r_pow = if l == 0 { 0.0 } else { f64::from(l) * r.ln() };
    let magnitude = (ln_pre + ln_r_pow - 0.5 * x + poly.abs().ln()).exp();
    Ok(poly.signum() * magnitude)
}

/// Momentum-space radial wavefunction: identical to the position form with
/// λ replaced by 1/λ.
pub fn oscillator_radial_momentum(n: u32, l: u32, lambda: f64, p: f64) -> Result<f64> {
    check_params(n, l, lambda)?;
    oscillator_radial_position(n, l, 1.0 / lambda, p)
}

/// The full |Ψ|² oscillator density as a separable 3-D density.
/// Length scale: the classical turning radius √((2e+3)/λ) in position
/// space and √((2e+3)λ) in momentum space, with e = 2n + l.
pub fn oscillator_density(state: &OscillatorState) -> Result<Density> {
    let s = OscillatorState::new(state.n, state.l, state.m, state.lambda, state.space)?;
    let (n, l, m, lambda) = (s.n, s.l, s.m, s.lambda);
    let radial: crate::density::ProfileFn = match s.space {
        Space::Position => Arc::new(move |r: f64| {
            let v = oscillator_radial_position(n, l, lambda, r).expect("validated state");
            v * v
        }),
        Space::Momentum => Arc::new(move |p: f64| {
            let v = oscillator_radial_momentum(n, l, lambda, p).expect("validated state");
            v * v
        }),
    };
    let angular: crate::density::ProfileFn = Arc::new(move |theta: f64| {
        crate::specfun::sph_harmonic_modsq(l as usize, m, theta).expect("validated state")
    });
    let e = f64::from(s.energy_index());
    let length_scale = match s.space {
        Space::Position => ((2.0 * e + 3.0) / lambda).sqrt(),
        Space::Momentum => ((2.0 * e + 3.0) * lambda).sqrt(),
    };
    Ok(Density {
        dimension: 3,
        support: Support::RadialHalfLine,
        length_scale,
        breakpoints: vec![],
        center: vec![0.0; 3],
        shape: Shape::Separable { radial, angular },
    })
}

/// All (n, l) pairs sharing the reduced energy e = 2n + l, ordered by
/// descending l.
pub fn oscillator_shell(e: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut l = e;
    loop {
        out.push(((e - l) / 2, l));
        if l < 2 {
            break;
        }
        l -= 2;
    }
    out
}

fn check_params(n: u32, l: u32, lambda: f64) -> Result<()> {
    if n > MAX_N || l > MAX_L || !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::Domain(format!(
            "invalid oscillator parameters n = {n}, l = {l}, lambda = {lambda}"
        )));
    }
    Ok(())
}
