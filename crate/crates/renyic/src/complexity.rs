//! The measure engine: Rényi entropy of any [`Density`] for any extended
//! order, and the generalized complexity exp(R^(α) - R^(β)) with all limit
//! cases.

use crate::density::{Density, Shape, Support};
use crate::error::{Error, Result};
use crate::order::OrderParam;
use crate::quadrature::{integrate, integrate_semi_infinite, maximize, IntegrationResult, QuadratureSpec};

const MAXIMIZE_GRID: usize = 2048;

#[derive(Debug, Clone)]
pub struct EntropyResult {
    /// Entropy in nats; +∞ for the zero-order limit on unbounded support.
    pub value: f64,
    pub error_estimate: f64,
    pub order: OrderParam,
}

#[derive(Debug, Clone)]
pub struct ComplexityResult {
    pub value: f64,
    pub r_alpha: EntropyResult,
    pub r_beta: EntropyResult,
}

/// Rényi entropy R^(α) of a density.
///
/// Finite orders integrate f^α by quadrature; the Shannon limit integrates
/// -f ln f (with 0·ln 0 = 0); the infinity limit is -ln sup f from the
/// maximizer; the zero limit is the log of the support measure taken from
/// the support descriptor, +∞ when the support is unbounded.
pub fn renyi(f: &Density, order: OrderParam, spec: &QuadratureSpec) -> Result<EntropyResult> {
    match order {
        OrderParam::ZeroLimit => {
            let measure = f.support.measure(f.dimension);
            Ok(EntropyResult {
                value: measure.ln(),
                error_estimate: 0.0,
                order,
            })
        }
        OrderParam::InfinityLimit => {
            let sup = sup_norm(f)?;
            Ok(EntropyResult {
                value: -sup.ln(),
                error_estimate: 0.0,
                order,
            })
        }
        OrderParam::Finite(alpha) => {
            let integral = integral_of_power(f, alpha, spec)?;
            let value = integral.value.ln() / (1.0 - alpha);
            Ok(EntropyResult {
                value,
                error_estimate: integral.error_estimate
                    / (integral.value.abs() * (1.0 - alpha).abs()).max(f64::MIN_POSITIVE),
                order,
            })
        }
        OrderParam::ShannonLimit => {
            let (value, err) = shannon(f, spec)?;
            Ok(EntropyResult {
                value,
                error_estimate: err,
                order,
            })
        }
    }
}

/// Generalized complexity exp(R^(α) - R^(β)).
///
/// Equal orders short-circuit to exactly 1. A zero-limit β on unbounded
/// support gives exactly 0 (the entropy difference is -∞).
pub fn complexity(
    f: &Density,
    alpha: OrderParam,
    beta: OrderParam,
    spec: &QuadratureSpec,
) -> Result<ComplexityResult> {
    if alpha == beta {
        let r = renyi(f, alpha, spec)?;
        return Ok(ComplexityResult {
            value: 1.0,
            r_alpha: r.clone(),
            r_beta: r,
        });
    }
    let r_alpha = renyi(f, alpha, spec)?;
    let r_beta = renyi(f, beta, spec)?;
    let value = (r_alpha.value - r_beta.value).exp();
    Ok(ComplexityResult {
        value,
        r_alpha,
        r_beta,
    })
}

/// Propagated error estimate for a complexity value.
pub fn complexity_error(c: &ComplexityResult) -> f64 {
    if c.value.is_finite() {
        c.value * (c.r_alpha.error_estimate + c.r_beta.error_estimate)
    } else {
        0.0
    }
}

/// sup f over the support: the density supremum entering the α → ∞ limit.
///
/// Separable densities factor as (max over r of u)·(max over θ of w); both
/// factors are nonnegative so the product of maxima is the maximum of the
/// product.
pub fn sup_norm(f: &Density) -> Result<f64> {
    match &f.shape {
        Shape::Line(p) => {
            let (lo, hi) = line_bounds(f)?;
            let tol = 1e-10 * (hi - lo);
            let (_, v) = maximize(&|x| p(x), lo, hi, MAXIMIZE_GRID, tol)?;
            Ok(v)
        }
        Shape::RadialSymmetric(p) => {
            let hi = radial_cut(f);
            let (_, v) = maximize(&|r| p(r), 0.0, hi, MAXIMIZE_GRID, 1e-10 * hi)?;
            Ok(v)
        }
        Shape::Separable { radial, angular } => {
            let hi = radial_cut(f);
            let (_, u_max) = maximize(&|r| radial(r), 0.0, hi, MAXIMIZE_GRID, 1e-10 * hi)?;
            let (_, w_max) = maximize(
                &|t| angular(t),
                0.0,
                std::f64::consts::PI,
                MAXIMIZE_GRID,
                1e-12,
            )?;
            Ok(u_max * w_max)
        }
    }
}

/// ∫ f dV; 1 within tolerance for a valid density.
pub fn normalization(f: &Density, spec: &QuadratureSpec) -> Result<IntegrationResult> {
    integral_of_power(f, 1.0, spec)
}

/// ∫ f^α dV, reduced to 1-D quadrature through the density's structure.
pub fn integral_of_power(
    f: &Density,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<IntegrationResult> {
    match &f.shape {
        Shape::Line(p) => {
            let p = p.clone();
            line_integral(f, spec, move |x| p(x).powf(alpha))
        }
        Shape::RadialSymmetric(p) => {
            let omega = f.dimension as f64 * crate::density::unit_ball_volume(f.dimension);
            let dm1 = (f.dimension - 1) as i32;
            let p = p.clone();
            let mut out = radial_integral(f, spec, move |r| p(r).powf(alpha) * r.powi(dm1))?;
            out.value *= omega;
            out.error_estimate *= omega;
            Ok(out)
        }
        Shape::Separable { radial, angular } => {
            let u = radial.clone();
            let rad = radial_integral(f, spec, move |r| u(r).powf(alpha) * r * r)?;
            let ang = angular_integral(angular.clone(), spec, move |w| w.powf(alpha))?;
            Ok(combine_product(rad, ang))
        }
    }
}

/// -∫ f ln f with 0·ln 0 = 0; separable densities split into radial and
/// angular Shannon terms because each factor is individually normalized.
fn shannon(f: &Density, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    match &f.shape {
        Shape::Line(p) => {
            let p = p.clone();
            let r = line_integral(f, spec, move |x| neg_plogp(p(x)))?;
            Ok((r.value, r.error_estimate))
        }
        Shape::RadialSymmetric(p) => {
            let omega = f.dimension as f64 * crate::density::unit_ball_volume(f.dimension);
            let dm1 = (f.dimension - 1) as i32;
            let p = p.clone();
            let r = radial_integral(f, spec, move |r| neg_plogp(p(r)) * r.powi(dm1))?;
            Ok((omega * r.value, omega * r.error_estimate))
        }
        Shape::Separable { radial, angular } => {
            let u = radial.clone();
            let s_rad = radial_integral(f, spec, move |r| neg_plogp(u(r)) * r * r)?;
            let s_ang = angular_integral(angular.clone(), spec, neg_plogp)?;
            Ok((
                s_rad.value + s_ang.value,
                s_rad.error_estimate + s_ang.error_estimate,
            ))
        }
    }
}

fn neg_plogp(v: f64) -> f64 {
    if v > 0.0 {
        -v * v.ln()
    } else {
        0.0
    }
}

fn line_bounds(f: &Density) -> Result<(f64, f64)> {
    match f.support {
        Support::Interval { lo, hi } => Ok((lo, hi)),
        Support::RealLine => Err(Error::Unsupported(
            "entropy of a 1-D density with unbounded support".into(),
        )),
        _ => Err(Error::Unsupported("line shape with radial support".into())),
    }
}

fn radial_cut(f: &Density) -> f64 {
    match f.support {
        Support::Ball { radius } => radius,
        _ => 8.0 * f.length_scale,
    }
}

/// Integrates over the (bounded) 1-D support, splitting panels at the
/// declared discontinuities.
fn line_integral<G: Fn(f64) -> f64>(
    f: &Density,
    spec: &QuadratureSpec,
    g: G,
) -> Result<IntegrationResult> {
    let (lo, hi) = line_bounds(f)?;
    piecewise(&g, lo, hi, &f.breakpoints, spec)
}

/// Radial integral over [0, R] (split at breakpoints) for bounded supports,
/// or over [0, ∞) by geometric truncation for half-line supports.
fn radial_integral<G: Fn(f64) -> f64>(
    f: &Density,
    spec: &QuadratureSpec,
    g: G,
) -> Result<IntegrationResult> {
    match f.support {
        Support::Ball { radius } => piecewise(&g, 0.0, radius, &f.breakpoints, spec),
        Support::RadialHalfLine => integrate_semi_infinite(&g, f.length_scale, spec),
        _ => Err(Error::Unsupported("radial integral on a 1-D support".into())),
    }
}

fn angular_integral<G: Fn(f64) -> f64 + Clone>(
    w: crate::density::ProfileFn,
    spec: &QuadratureSpec,
    g: G,
) -> Result<IntegrationResult> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut out = integrate(
        &move |t: f64| g(w(t)) * t.sin(),
        0.0,
        std::f64::consts::PI,
        spec,
    )?;
    out.value *= two_pi;
    out.error_estimate *= two_pi;
    Ok(out)
}

fn piecewise<G: Fn(f64) -> f64>(
    g: &G,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    spec: &QuadratureSpec,
) -> Result<IntegrationResult> {
    let mut cuts: Vec<f64> = vec![lo];
    for &x in breakpoints {
        if x > lo && x < hi {
            cuts.push(x);
        }
    }
    cuts.push(hi);
    cuts.sort_by(f64::total_cmp);
    let mut out = IntegrationResult {
        value: 0.0,
        error_estimate: 0.0,
        panels_used: 0,
        converged: true,
    };
    for pair in cuts.windows(2) {
        if pair[1] <= pair[0] {
            continue;
        }
        let r = integrate(g, pair[0], pair[1], spec)?;
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.panels_used += r.panels_used;
        out.converged &= r.converged;
    }
    Ok(out)
}

fn combine_product(a: IntegrationResult, b: IntegrationResult) -> IntegrationResult {
    IntegrationResult {
        value: a.value * b.value,
        error_estimate: a.error_estimate * b.value.abs() + b.error_estimate * a.value.abs(),
        panels_used: a.panels_used + b.panels_used,
        converged: a.converged && b.converged,
    }
}
