//! Adaptive Gauss-Legendre integration on finite and semi-infinite
//! intervals, and bracketed 1-D maximization, with explicit error
//! estimates.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Smallest magnitude used when turning relative tolerances into
/// absolute ones, so integrals that are exactly zero still converge.
const TINY: f64 = 1e-300;

/// Integration policy: panel order, tolerance, budget, tail handling.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    /// Gauss-Legendre nodes per panel.
    pub panel_order: usize,
    /// Relative tolerance on the summed error estimate.
    pub rel_tol: f64,
    /// Total panel budget per integral.
    pub max_panels: usize,
    /// A tail segment contributing less than this (relative to the running
    /// total) terminates semi-infinite truncation.
    pub tail_rel_bound: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            panel_order: 32,
            rel_tol: 1e-10,
            max_panels: 4096,
            tail_rel_bound: 1e-14,
        }
    }
}

impl QuadratureSpec {
    fn validate(&self) -> Result<()> {
        if self.panel_order < 2 || self.max_panels < 1 || self.rel_tol.is_nan() || self.rel_tol <= 0.0 {
            return Err(Error::Domain(format!(
                "invalid quadrature spec: order {}, rel_tol {}, max_panels {}",
                self.panel_order, self.rel_tol, self.max_panels
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panels_used: usize,
    pub converged: bool,
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    /// Newton iteration on P_n, seeded with the Chebyshev-like estimate.
    fn new(n: usize) -> GaussRule {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_deriv(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussRule { nodes, weights }
    }
}

/// (P_n(x), P_n'(x)) by the standard recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

static RULE_CACHE: Lazy<Mutex<HashMap<usize, Arc<GaussRule>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn gauss_rule(n: usize) -> Arc<GaussRule> {
    let mut cache = RULE_CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(GaussRule::new(n)))
        .clone()
}

fn apply_rule<F: Fn(f64) -> f64>(rule: &GaussRule, f: &F, a: f64, b: f64) -> Result<f64> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let t = mid + half * x;
        let v = f(t);
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { at: t });
        }
        sum += w * v;
    }
    Ok(half * sum)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

/// Adaptive Gauss-Legendre integration of `f` over [a, b].
///
/// The per-panel error estimate compares the panel_order rule against the
/// doubled-order rule; panels are bisected worst-first until the summed
/// estimate meets `rel_tol` or the panel budget runs out (reported via
/// `converged`, not as an error).
pub fn integrate<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegrationResult> {
    spec.validate()?;
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
        return Err(Error::Domain(format!(
            "integrate requires a < b, got [{a}, {b}]"
        )));
    }
    let coarse = gauss_rule(spec.panel_order);
    let fine = gauss_rule(2 * spec.panel_order);

    let eval_panel = |lo: f64, hi: f64| -> Result<Panel> {
        let c = apply_rule(&coarse, f, lo, hi)?;
        let v = apply_rule(&fine, f, lo, hi)?;
        Ok(Panel {
            a: lo,
            b: hi,
            value: v,
            err: (v - c).abs(),
        })
    };

    let mut panels = vec![eval_panel(a, b)?];
    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let target = spec.rel_tol * total.abs().max(TINY);
        if err <= target {
            return Ok(IntegrationResult {
                value: total,
                error_estimate: err,
                panels_used: panels.len(),
                converged: true,
            });
        }
        if panels.len() >= spec.max_panels {
            return Ok(IntegrationResult {
                value: total,
                error_estimate: err,
                panels_used: panels.len(),
                converged: false,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, p), (_, q)| p.err.total_cmp(&q.err))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let Panel { a: lo, b: hi, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval no longer bisectable in f64; accept what we have.
            panels.push(eval_panel(lo, hi)?);
            let total: f64 = panels.iter().map(|p| p.value).sum();
            let err: f64 = panels.iter().map(|p| p.err).sum();
            return Ok(IntegrationResult {
                value: total,
                error_estimate: err,
                panels_used: panels.len(),
                converged: false,
            });
        }
        panels.push(eval_panel(lo, mid)?);
        panels.push(eval_panel(mid, hi)?);
    }
}

/// Number of consecutive non-decreasing tail segments that trips the
/// divergence guard.
const DIVERGENCE_STREAK: usize = 3;
/// Hard cap on truncation-radius doublings.
const MAX_EXTENSIONS: usize = 48;

/// Integrates `f` over [0, ∞) by truncation: [0, R] with R starting at
/// 8·decay_scale and doubling until the last segment contributes less than
/// `tail_rel_bound` relative to the running total.
///
/// Segments whose contributions keep growing under successive doublings
/// trip the suspected-divergence error instead of returning a number.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: &F,
    decay_scale: f64,
    spec: &QuadratureSpec,
) -> Result<IntegrationResult> {
    spec.validate()?;
    if decay_scale.is_nan() || decay_scale <= 0.0 {
        return Err(Error::Domain(format!(
            "decay_scale must be positive, got {decay_scale}"
        )));
    }
    let mut cut = 8.0 * decay_scale;
    let first = integrate(f, 0.0, cut, spec)?;
    let mut value = first.value;
    let mut err = first.error_estimate;
    let mut panels = first.panels_used;
    let mut converged_panels = first.converged;

    let mut prev_seg = f64::INFINITY;
    let mut growth_streak = 0usize;
    for _ in 0..MAX_EXTENSIONS {
        let seg = integrate(f, cut, 2.0 * cut, spec)?;
        cut *= 2.0;
        value += seg.value;
        err += seg.error_estimate;
        panels += seg.panels_used;
        converged_panels &= seg.converged;

        let seg_mag = seg.value.abs();
        if seg_mag <= spec.tail_rel_bound * value.abs().max(TINY) {
            return Ok(IntegrationResult {
                value,
                error_estimate: err,
                panels_used: panels,
                converged: converged_panels,
            });
        }
        if seg_mag >= prev_seg {
            growth_streak += 1;
            if growth_streak >= DIVERGENCE_STREAK {
                return Err(Error::Divergent {
                    context: format!(
                        "tail segments non-decreasing through R = {cut:.3e} \
                         (last segment {seg_mag:.3e} of total {value:.3e})"
                    ),
                });
            }
        } else {
            growth_streak = 0;
        }
        prev_seg = seg_mag;
    }
    Ok(IntegrationResult {
        value,
        error_estimate: err,
        panels_used: panels,
        converged: false,
    })
}

const GOLDEN_FRAC: f64 = 0.381_966_011_250_105_1; // 2 - φ

/// Maximizes a continuous `f` on [a, b]: uniform grid scan for the best
/// bracket, then golden-section refinement to abscissa tolerance `tol`.
/// Returns `(argmax, max_value)`; the value is never below the best grid
/// sample.
pub fn maximize<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    grid_points: usize,
    tol: f64,
) -> Result<(f64, f64)> {
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) || grid_points < 3 || tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "maximize requires a < b, grid_points >= 3, tol > 0; \
             got [{a}, {b}], {grid_points}, {tol}"
        )));
    }
    let h = (b - a) / (grid_points - 1) as f64;
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..grid_points {
        let x = a + h * i as f64;
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { at: x });
        }
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let grid_best_x = a + h * best_i as f64;
    let mut lo = if best_i == 0 { a } else { grid_best_x - h };
    let mut hi = if best_i == grid_points - 1 {
        b
    } else {
        grid_best_x + h
    };

    let mut x1 = lo + GOLDEN_FRAC * (hi - lo);
    let mut x2 = hi - GOLDEN_FRAC * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if !f1.is_finite() {
            return Err(Error::NonFiniteSample { at: x1 });
        }
        if !f2.is_finite() {
            return Err(Error::NonFiniteSample { at: x2 });
        }
        if f1 > f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + GOLDEN_FRAC * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - GOLDEN_FRAC * (hi - lo);
            f2 = f(x2);
        }
    }
    let (mut argmax, mut max_v) = if f1 > f2 { (x1, f1) } else { (x2, f2) };
    if best_v > max_v {
        argmax = grid_best_x;
        max_v = best_v;
    }
    Ok((argmax, max_v))
}
