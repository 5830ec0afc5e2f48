use std::sync::Arc;

use crate::density::{Density, Shape, Support};
use crate::error::{Error, Result};
use crate::quantum::Space;
use crate::specfun::{assoc_laguerre, gegenbauer, log_gamma, sph_harmonic_modsq};

const MAX_N: u32 = 20;

/// A bound hydrogen state (n, l, m) in one of the conjugate spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HydrogenState {
    pub n: u32,
    pub l: u32,
    pub m: i64,
    pub space: Space,
}

impl HydrogenState {
    pub fn new(n: u32, l: u32, m: i64, space: Space) -> Result<HydrogenState> {
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::Domain(format!(
                "hydrogen n must lie in 1..={MAX_N}, got {n}"
            )));
        }
        if l >= n {
            return Err(Error::Domain(format!(
                "hydrogen l must satisfy l <= n-1, got n = {n}, l = {l}"
            )));
        }
        if m.unsigned_abs() > l as u64 {
            return Err(Error::Domain(format!(
                "hydrogen m must satisfy |m| <= l, got l = {l}, m = {m}"
            )));
        }
        Ok(HydrogenState { n, l, m, space })
    }
}

/// Position-space radial wavefunction
/// R_{n,l}(r) = (2/n²) [(n-l-1)!/(n+l)!]^{1/2} (2r/n)^l e^{-r/n} L_{n-l-1}^{2l+1}(2r/n),
/// with the factorial-ratio prefactor assembled in log space.
pub fn hydrogen_radial_position(n: u32, l: u32, r: f64) -> Result<f64> {
    check_nl(n, l)?;
    if r.is_nan() || r < 0.0 {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    if r == 0.0 && l > 0 {
        return Ok(0.0);
    }
    let nf = f64::from(n);
    let x = 2.0 * r / nf;
    let ln_pre = (2.0f64).ln() - 2.0 * nf.ln()
        + 0.5 * (log_gamma(f64::from(n - l))? - log_gamma(f64::from(n + l) + 1.0)?);
    let poly = assoc_laguerre((n - l - 1) as usize, f64::from(2 * l + 1), x)?;
    if poly == 0.0 {
        return Ok(0.0);
    }
    let ln_x_pow = if l == 0 { 0.0 } else { f64::from(l) * x.ln() };
    let magnitude = (ln_pre + ln_x_pow - r / nf + poly.abs().ln()).exp();
    Ok(poly.signum() * magnitude)
}

/// Momentum-space radial wavefunction
/// R̂_{n,l}(p) = [2/π (n-l-1)!/(n+l)!]^{1/2} n² 2^{2l+2} l!
///              (n p)^l / (n²p²+1)^{l+2} · G_{n-l-1}^{l+1}((n²p²-1)/(n²p²+1)).
pub fn hydrogen_radial_momentum(n: u32, l: u32, p: f64) -> Result<f64> {
    check_nl(n, l)?;
    if p.is_nan() || p < 0.0 {
        return Err(Error::Domain(format!(
            "momentum must be nonnegative, got {p}"
        )));
    }
    if p == 0.0 && l > 0 {
        return Ok(0.0);
    }
    let nf = f64::from(n);
    let np2 = nf * nf * p * p;
    let t = (np2 - 1.0) / (np2 + 1.0);
    let poly = gegenbauer((n - l - 1) as usize, f64::from(l) + 1.0, t)?;
    if poly == 0.0 {
        return Ok(0.0);
    }
    let ln_pre = 0.5
        * ((2.0 / std::f64::consts::PI).ln() + log_gamma(f64::from(n - l))?
            - log_gamma(f64::from(n + l) + 1.0)?)
        + 2.0 * nf.ln()
        + f64::from(2 * l + 2) * (2.0f64).ln()
        + log_gamma(f64::from(l) + 1.0)?;
    let ln_p_pow = if l == 0 { 0.0 } else { f64::from(l) * (nf * p).ln() };
    let magnitude =
        (ln_pre + ln_p_pow - f64::from(l + 2) * (np2 + 1.0).ln() + poly.abs().ln()).exp();
    Ok(poly.signum() * magnitude)
}

/// The full |Ψ|² density of a hydrogen state, separable into radial and
/// angular factors. Length scales: 2n² in position space (outer turning
/// point), 2/n in momentum space.
pub fn hydrogen_density(state: &HydrogenState) -> Result<Density> {
    let s = HydrogenState::new(state.n, state.l, state.m, state.space)?;
    let (n, l, m) = (s.n, s.l, s.m);
    let radial: crate::density::ProfileFn = match s.space {
        Space::Position => Arc::new(move |r: f64| {
            let v = hydrogen_radial_position(n, l, r).expect("validated state");
            v * v
        }),
        Space::Momentum => Arc::new(move |p: f64| {
            let v = hydrogen_radial_momentum(n, l, p).expect("validated state");
            v * v
        }),
    };
    let angular: crate::density::ProfileFn = Arc::new(move |theta: f64| {
        sph_harmonic_modsq(l as usize, m, theta).expect("validated state")
    });
    let length_scale = match s.space {
        Space::Position => 2.0 * f64::from(n * n),
        Space::Momentum => 2.0 / f64::from(n),
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

fn check_nl(n: u32, l: u32) -> Result<()> {
    if !(1..=MAX_N).contains(&n) || l >= n {
        return Err(Error::Domain(format!(
            "invalid hydrogen quantum numbers n = {n}, l = {l}"
        )));
    }
    Ok(())
}
