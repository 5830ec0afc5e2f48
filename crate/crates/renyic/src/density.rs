//! The density data model: evaluable D-dimensional probability densities
//! with enough structure (support descriptor, radial symmetry, separable
//! radial x angular factorization, discontinuity breakpoints) for the
//! entropy pipeline to run on 1-D quadrature only. Also the analytic
//! reference densities (rectangular, two-level ring, step densities) and
//! the scaling / translation / replication transforms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::OrderParam;
use crate::specfun::log_gamma;

/// A 1-D profile closure; all densities in this crate reduce to these.
pub type ProfileFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Support descriptor, in coordinates centered on [`Density::center`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Support {
    /// Bounded 1-D interval.
    Interval { lo: f64, hi: f64 },
    /// Unbounded 1-D support.
    RealLine,
    /// Ball of the given radius around the center (any dimension).
    Ball { radius: f64 },
    /// Radial support on [0, ∞) around the center.
    RadialHalfLine,
}

impl Support {
    /// Lebesgue measure of the support in `dim` dimensions
    /// (+∞ for unbounded supports).
    pub fn measure(&self, dim: u32) -> f64 {
        match *self {
            Support::Interval { lo, hi } => hi - lo,
            Support::Ball { radius } => unit_ball_volume(dim) * radius.powi(dim as i32),
            Support::RealLine | Support::RadialHalfLine => f64::INFINITY,
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, Support::Interval { .. } | Support::Ball { .. })
    }
}

/// How the density value is produced from a point.
#[derive(Clone)]
pub enum Shape {
    /// 1-D density value at x.
    Line(ProfileFn),
    /// Radially symmetric density value at r = |x - center|.
    RadialSymmetric(ProfileFn),
    /// Separable 3-D density u(r)·w(θ), with ∫ u r² dr = 1 and
    /// 2π ∫ w sin θ dθ = 1 individually.
    Separable {
        radial: ProfileFn,
        angular: ProfileFn,
    },
}

/// An evaluable D-dimensional probability density.
#[derive(Clone)]
pub struct Density {
    pub dimension: u32,
    pub support: Support,
    /// Decay / extent hint used to seed quadrature truncation.
    pub length_scale: f64,
    /// Radial (or 1-D) discontinuity abscissae, in centered coordinates;
    /// quadrature splits panels here.
    pub breakpoints: Vec<f64>,
    /// Support center; evaluation shifts points by this before the radial
    /// reduction. Entropy is translation invariant so the pipeline works
    /// in centered coordinates.
    pub center: Vec<f64>,
    pub shape: Shape,
}

impl Density {
    /// Pointwise density value; zero outside the support.
    pub fn evaluate(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.dimension as usize, "point dimension");
        match &self.shape {
            Shape::Line(f) => {
                let x = point[0];
                match self.support {
                    Support::Interval { lo, hi } if !(lo..=hi).contains(&x) => 0.0,
                    _ => f(x),
                }
            }
            Shape::RadialSymmetric(f) => {
                let r = self.centered_radius(point);
                match self.support {
                    Support::Ball { radius } if r > radius => 0.0,
                    _ => f(r),
                }
            }
            Shape::Separable { radial, angular } => {
                let dx: Vec<f64> = point
                    .iter()
                    .zip(self.center.iter().chain(std::iter::repeat(&0.0)))
                    .map(|(p, c)| p - c)
                    .collect();
                let r = dx.iter().map(|v| v * v).sum::<f64>().sqrt();
                let theta = if r == 0.0 { 0.0 } else { (dx[2] / r).acos() };
                match self.support {
                    Support::Ball { radius } if r > radius => 0.0,
                    _ => radial(r) * angular(theta),
                }
            }
        }
    }

    fn centered_radius(&self, point: &[f64]) -> f64 {
        point
            .iter()
            .zip(self.center.iter().chain(std::iter::repeat(&0.0)))
            .map(|(p, c)| (p - c) * (p - c))
            .sum::<f64>()
            .sqrt()
    }
}

/// Volume c_D = 2 π^{D/2} / (D Γ(D/2)) of the unit D-ball.
///
/// The low dimensions every pipeline density lives in are returned exactly;
/// higher ones go through log-gamma.
pub fn unit_ball_volume(dim: u32) -> f64 {
    match dim {
        0 => panic!("dimension must be at least 1"),
        1 => 2.0,
        2 => std::f64::consts::PI,
        3 => 4.0 * std::f64::consts::PI / 3.0,
        _ => ln_unit_ball_volume(dim).exp(),
    }
}

/// ln c_D, assembled through log-gamma.
pub fn ln_unit_ball_volume(dim: u32) -> f64 {
    assert!(dim >= 1, "dimension must be at least 1");
    if dim <= 3 {
        return unit_ball_volume(dim).ln();
    }
    let d = dim as f64;
    (2.0f64).ln() + 0.5 * d * std::f64::consts::PI.ln()
        - d.ln()
        - log_gamma(0.5 * d).expect("positive argument")
}

/// Uniform density on the unit D-ball, D in {1, 2, 3}.
pub fn make_rectangular(dim: u32) -> Result<Density> {
    if !(1..=3).contains(&dim) {
        return Err(Error::Domain(format!(
            "rectangular density supports D in {{1,2,3}}, got {dim}"
        )));
    }
    let value = 1.0 / unit_ball_volume(dim);
    let shape = if dim == 1 {
        Shape::Line(Arc::new(move |_x| value))
    } else {
        Shape::RadialSymmetric(Arc::new(move |_r| value))
    };
    Ok(Density {
        dimension: dim,
        support: if dim == 1 {
            Support::Interval { lo: -1.0, hi: 1.0 }
        } else {
            Support::Ball { radius: 1.0 }
        },
        length_scale: 1.0,
        breakpoints: vec![],
        center: vec![0.0; dim as usize],
        shape,
    })
}

/// Two-level radial density: (1-δ)/c_D inside the unit ball, δ/(c_D(B^D-1))
/// in the shell 1 < |r| < B. Normalized to 1 by construction.
pub fn make_ring(delta: f64, big_b: f64, dim: u32) -> Result<Density> {
    if delta.is_nan() || delta <= 0.0 || delta >= 1.0 || big_b.is_nan() || big_b <= 1.0 || dim < 1 {
        return Err(Error::Domain(format!(
            "ring density requires 0 < delta < 1, B > 1, D >= 1; \
             got delta = {delta}, B = {big_b}, D = {dim}"
        )));
    }
    let c_d = unit_ball_volume(dim);
    let inner = (1.0 - delta) / c_d;
    let outer = delta / (c_d * (big_b.powi(dim as i32) - 1.0));
    let shape_fn: ProfileFn = Arc::new(move |r: f64| if r < 1.0 { inner } else { outer });
    let shape = if dim == 1 {
        // 1-D: symmetric profile in |x|.
        let f = shape_fn.clone();
        Shape::Line(Arc::new(move |x: f64| f(x.abs())))
    } else {
        Shape::RadialSymmetric(shape_fn)
    };
    Ok(Density {
        dimension: dim,
        support: if dim == 1 {
            Support::Interval {
                lo: -big_b,
                hi: big_b,
            }
        } else {
            Support::Ball { radius: big_b }
        },
        length_scale: big_b,
        breakpoints: if dim == 1 {
            vec![-1.0, 1.0]
        } else {
            vec![1.0]
        },
        center: vec![0.0; dim as usize],
        shape,
    })
}

/// Closed-form Rényi entropy of the two-level ring density,
/// R = (1/(1-α)) ln[(1-δ)^α + δ^α/(B^D-1)^{α-1}] + ln c_D.
/// Used as the oracle against the quadrature pipeline.
pub fn ring_renyi_closed(alpha: f64, delta: f64, big_b: f64, dim: u32) -> Result<f64> {
    if delta.is_nan() || delta <= 0.0 || delta >= 1.0 || big_b.is_nan() || big_b <= 1.0 || dim < 1 {
        return Err(Error::Domain("invalid ring parameters".into()));
    }
    if alpha.is_nan() || alpha <= 0.0 || (alpha - 1.0).abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "closed form needs finite alpha != 1, got {alpha}; \
             use the Shannon-limit pipeline at alpha = 1"
        )));
    }
    let shell = big_b.powi(dim as i32) - 1.0;
    let sum = (1.0 - delta).powf(alpha) + delta.powf(alpha) / shell.powf(alpha - 1.0);
    Ok(sum.ln() / (1.0 - alpha) + ln_unit_ball_volume(dim))
}

/// Piecewise-constant density described by its (level, measure) pairs
/// alone; the geometry of the underlying sets never enters the entropy.
#[derive(Debug, Clone, PartialEq)]
pub struct StepDensity {
    steps: Vec<(f64, f64)>,
}

impl StepDensity {
    /// `steps` are (level λ_k, measure μ_k) pairs; Σ λ_k μ_k must be 1
    /// within 1e-12.
    pub fn new(steps: Vec<(f64, f64)>) -> Result<StepDensity> {
        if steps.is_empty() {
            return Err(Error::Domain("step density needs at least one step".into()));
        }
        for &(level, measure) in &steps {
            if !(level > 0.0 && level.is_finite() && measure > 0.0 && measure.is_finite()) {
                return Err(Error::Domain(format!(
                    "step levels and measures must be positive finite, \
                     got ({level}, {measure})"
                )));
            }
        }
        let total: f64 = steps.iter().map(|(l, m)| l * m).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "step density must normalize to 1, got {total}"
            )));
        }
        Ok(StepDensity { steps })
    }

    pub fn steps(&self) -> &[(f64, f64)] {
        &self.steps
    }

    /// Rényi entropy from the closed form ∫ f^α = Σ λ_k^α μ_k, with the
    /// zero, Shannon and infinity limits handled directly.
    pub fn renyi(&self, order: OrderParam) -> f64 {
        match order {
            OrderParam::Finite(alpha) => {
                let sum: f64 = self
                    .steps
                    .iter()
                    .map(|&(l, m)| l.powf(alpha) * m)
                    .sum();
                sum.ln() / (1.0 - alpha)
            }
            OrderParam::ShannonLimit => {
                -self.steps.iter().map(|&(l, m)| l * l.ln() * m).sum::<f64>()
            }
            OrderParam::InfinityLimit => {
                let max = self
                    .steps
                    .iter()
                    .map(|&(l, _)| l)
                    .fold(f64::NEG_INFINITY, f64::max);
                -max.ln()
            }
            OrderParam::ZeroLimit => self.steps.iter().map(|&(_, m)| m).sum::<f64>().ln(),
        }
    }

    /// An explicit 1-D realization on [0, Σ μ_k]: step k occupies a
    /// contiguous interval of width μ_k. Used to cross-check the closed
    /// form against the quadrature pipeline.
    pub fn realize_line(&self) -> Density {
        let mut edges = vec![0.0];
        for &(_, m) in &self.steps {
            edges.push(edges.last().unwrap() + m);
        }
        let total = *edges.last().unwrap();
        let levels: Vec<f64> = self.steps.iter().map(|&(l, _)| l).collect();
        let edges_c = edges.clone();
        let profile: ProfileFn = Arc::new(move |x: f64| {
            if !(0.0..=total).contains(&x) {
                return 0.0;
            }
            let i = edges_c.partition_point(|&e| e <= x).min(levels.len());
            levels[i.saturating_sub(1).min(levels.len() - 1)]
        });
        Density {
            dimension: 1,
            support: Support::Interval { lo: 0.0, hi: total },
            length_scale: total,
            breakpoints: edges[1..edges.len() - 1].to_vec(),
            center: vec![0.0],
            shape: Shape::Line(profile),
        }
    }
}

/// The transform f_{ab}(r) = a^D f[a(r - b)]: rescale by a > 0 and
/// translate by b.
///
/// For 1-D densities the translation shifts the support interval and the
/// quadrature genuinely runs over the moved interval. For radial shapes the
/// translation moves the stored center; evaluation honors it, and the
/// entropy pipeline integrates in centered coordinates.
pub fn scale_translate(f: &Density, a: f64, b: &[f64]) -> Result<Density> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("scale factor must be positive, got {a}")));
    }
    if b.len() != f.dimension as usize {
        return Err(Error::Domain(format!(
            "translation has {} components for a {}-D density",
            b.len(),
            f.dimension
        )));
    }
    let d = f.dimension as i32;
    let ad = a.powi(d);
    match &f.shape {
        Shape::Line(p) => {
            let (lo, hi) = match f.support {
                Support::Interval { lo, hi } => (lo, hi),
                Support::RealLine => (f64::NEG_INFINITY, f64::INFINITY),
                _ => unreachable!("line shape has 1-D support"),
            };
            let b0 = b[0];
            let p = p.clone();
            Ok(Density {
                dimension: 1,
                support: if lo.is_finite() {
                    Support::Interval {
                        lo: lo / a + b0,
                        hi: hi / a + b0,
                    }
                } else {
                    Support::RealLine
                },
                length_scale: f.length_scale / a,
                breakpoints: f.breakpoints.iter().map(|&x| x / a + b0).collect(),
                center: vec![0.0],
                shape: Shape::Line(Arc::new(move |x: f64| ad * p(a * (x - b0)))),
            })
        }
        Shape::RadialSymmetric(p) => {
            let p = p.clone();
            Ok(Density {
                dimension: f.dimension,
                support: scale_radial_support(f.support, a),
                length_scale: f.length_scale / a,
                breakpoints: f.breakpoints.iter().map(|&x| x / a).collect(),
                center: f.center.iter().zip(b).map(|(c, t)| c + t).collect(),
                shape: Shape::RadialSymmetric(Arc::new(move |r: f64| ad * p(a * r))),
            })
        }
        Shape::Separable { radial, angular } => {
            // a^3 u(ar) w(θ): the radial factor absorbs the whole Jacobian.
            let u = radial.clone();
            Ok(Density {
                dimension: f.dimension,
                support: scale_radial_support(f.support, a),
                length_scale: f.length_scale / a,
                breakpoints: f.breakpoints.iter().map(|&x| x / a).collect(),
                center: f.center.iter().zip(b).map(|(c, t)| c + t).collect(),
                shape: Shape::Separable {
                    radial: Arc::new(move |r: f64| ad * u(a * r)),
                    angular: angular.clone(),
                },
            })
        }
    }
}

fn scale_radial_support(s: Support, a: f64) -> Support {
    match s {
        Support::Ball { radius } => Support::Ball { radius: radius / a },
        other => other,
    }
}

/// n disjoint copies f_m(x) = n^{D/2-1} f[n^{1/2}(x - b_m)] summed into a
/// normalized density q. Implemented for bounded 1-D densities, which is
/// what the replica-invariance checks integrate; each copy carries mass 1/n.
pub fn replicate(f: &Density, centers: &[f64]) -> Result<Density> {
    let n = centers.len();
    if n == 0 {
        return Err(Error::Domain("replicate needs at least one center".into()));
    }
    let (profile, lo, hi) = match (&f.shape, f.support) {
        (Shape::Line(p), Support::Interval { lo, hi }) => (p.clone(), lo, hi),
        _ => {
            return Err(Error::Unsupported(
                "replicate is implemented for bounded 1-D densities".into(),
            ))
        }
    };
    let s = (n as f64).sqrt();
    let amp = (n as f64).powf(0.5 - 1.0); // n^{D/2-1}, D = 1

    // Disjointness from the support descriptor: conservative bounding
    // intervals of the rescaled copies.
    let mut spans: Vec<(f64, f64)> = centers.iter().map(|&b| (lo / s + b, hi / s + b)).collect();
    spans.sort_by(|x, y| x.0.total_cmp(&y.0));
    for w in spans.windows(2) {
        if w[0].1 > w[1].0 {
            return Err(Error::Domain(format!(
                "replica supports overlap: [{:.6}, {:.6}] and [{:.6}, {:.6}]",
                w[0].0, w[0].1, w[1].0, w[1].1
            )));
        }
    }

    let centers_v = centers.to_vec();
    let q: ProfileFn = Arc::new(move |x: f64| {
        let mut sum = 0.0;
        for &b in &centers_v {
            let y = s * (x - b);
            if (lo..=hi).contains(&y) {
                sum += amp * profile(y);
            }
        }
        sum
    });

    let mut breakpoints = Vec::new();
    for &b in centers {
        breakpoints.push(lo / s + b);
        breakpoints.push(hi / s + b);
        for &x in &f.breakpoints {
            breakpoints.push(x / s + b);
        }
    }
    breakpoints.sort_by(f64::total_cmp);
    let cover_lo = spans.first().unwrap().0;
    let cover_hi = spans.last().unwrap().1;
    breakpoints.retain(|&x| x > cover_lo && x < cover_hi);

    Ok(Density {
        dimension: 1,
        support: Support::Interval {
            lo: cover_lo,
            hi: cover_hi,
        },
        length_scale: f.length_scale / s,
        breakpoints,
        center: vec![0.0],
        shape: Shape::Line(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_ball_volumes() {
        assert!((unit_ball_volume(1) - 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-14);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-13);
        assert!((unit_ball_volume(3) - 4.1887902).abs() < 1e-7);
    }

    #[test]
    fn rectangular_pointwise() {
        let rect = make_rectangular(3).unwrap();
        let at_origin = rect.evaluate(&[0.0, 0.0, 0.0]);
        assert!((at_origin - 3.0 / (4.0 * PI)).abs() < 1e-14);
        assert!((at_origin - 0.2387324).abs() < 1e-7);
        assert_eq!(rect.evaluate(&[2.0, 0.0, 0.0]), 0.0);
    }

    #[test]
    fn ring_levels_and_closed_form() {
        let ring = make_ring(0.1, 2.0, 3).unwrap();
        let c3 = unit_ball_volume(3);
        assert!((ring.evaluate(&[0.5, 0.0, 0.0]) - 0.9 / c3).abs() < 1e-15);
        assert!((ring.evaluate(&[0.0, 1.5, 0.0]) - 0.1 / (c3 * 7.0)).abs() < 1e-15);
        assert_eq!(ring.evaluate(&[0.0, 0.0, 2.5]), 0.0);

        // Frozen from direct evaluation of the closed form.
        let r2 = ring_renyi_closed(2.0, 0.1, 2.0, 3).unwrap();
        let expect = c3.ln() - (0.81 + 0.01 / 7.0f64).ln();
        assert!((r2 - expect).abs() < 1e-14);
        assert!((r2 - 1.6413709).abs() < 1e-7);

        // Symmetric two-level case: B^D - 1 = 1.
        let b = 2.0f64.powf(1.0 / 3.0);
        let r = ring_renyi_closed(2.0, 0.5, b, 3).unwrap();
        assert!((r - (c3.ln() + 2.0f64.ln())).abs() < 1e-12);

        // δ → 0 recovers ln c_D.
        let r = ring_renyi_closed(2.0, 1e-13, 2.0, 3).unwrap();
        assert!((r - c3.ln()).abs() < 1e-11);

        assert!(ring_renyi_closed(1.0, 0.1, 2.0, 3).is_err());
    }

    #[test]
    fn step_density_closed_forms() {
        // Single step at λ = 1/μ is the rectangular case: R = ln μ for any α.
        let mu = 3.5;
        let sd = StepDensity::new(vec![(1.0 / mu, mu)]).unwrap();
        for order in [
            OrderParam::Finite(0.5),
            OrderParam::Finite(2.0),
            OrderParam::ShannonLimit,
            OrderParam::InfinityLimit,
            OrderParam::ZeroLimit,
        ] {
            assert!((sd.renyi(order) - mu.ln()).abs() < 1e-12, "{order:?}");
        }

        let sd = StepDensity::new(vec![(1.5, 0.5), (0.5, 0.5)]).unwrap();
        let r2 = sd.renyi(OrderParam::Finite(2.0));
        assert!((r2 - -(1.25f64.ln())).abs() < 1e-14);
        assert!((r2 - -0.2231436).abs() < 1e-7);
        let s = sd.renyi(OrderParam::ShannonLimit);
        let expect = -(0.5 * 1.5 * 1.5f64.ln() + 0.5 * 0.5 * 0.5f64.ln());
        assert!((s - expect).abs() < 1e-14);
        assert!((s - -0.1308120).abs() < 1e-7);
        assert!((sd.renyi(OrderParam::InfinityLimit) - -(1.5f64.ln())).abs() < 1e-14);
        assert!((sd.renyi(OrderParam::ZeroLimit) - 1.0f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn step_density_rejects_bad_input() {
        assert!(StepDensity::new(vec![]).is_err());
        assert!(StepDensity::new(vec![(1.0, 1.0), (1.0, 1.0)]).is_err()); // sums to 2
        assert!(StepDensity::new(vec![(-1.0, -1.0)]).is_err());
    }

    #[test]
    fn step_realization_matches_levels() {
        let sd = StepDensity::new(vec![(1.5, 0.5), (0.5, 0.5)]).unwrap();
        let d = sd.realize_line();
        assert_eq!(d.evaluate(&[0.25]), 1.5);
        assert_eq!(d.evaluate(&[0.75]), 0.5);
        assert_eq!(d.evaluate(&[1.5]), 0.0);
    }

    #[test]
    fn scale_translate_identity_and_pointwise() {
        let rect = make_rectangular(1).unwrap();
        let same = scale_translate(&rect, 1.0, &[0.0]).unwrap();
        for x in [-0.9, 0.0, 0.3, 1.4] {
            assert_eq!(same.evaluate(&[x]), rect.evaluate(&[x]));
        }
        let moved = scale_translate(&rect, 2.0, &[5.0]).unwrap();
        // a^D f(a(x-b)): support [4.5, 5.5], value 1.
        assert!((moved.evaluate(&[5.0]) - 1.0).abs() < 1e-15);
        assert_eq!(moved.evaluate(&[4.0]), 0.0);
    }

    #[test]
    fn replicate_masses_and_overlap_check() {
        let rect = make_rectangular(1).unwrap();
        let q = replicate(&rect, &[-3.0, 3.0]).unwrap();
        // Each copy has value n^{-1/2}·(1/2) on width 2/√2.
        let v = q.evaluate(&[3.0]);
        assert!((v - 0.5 / 2.0f64.sqrt()).abs() < 1e-15);
        assert_eq!(q.evaluate(&[0.0]), 0.0);

        assert!(replicate(&rect, &[0.0, 0.5]).is_err());

        let single = replicate(&rect, &[1.0]).unwrap();
        for x in [0.5, 1.0, 1.7] {
            assert!((single.evaluate(&[x]) - rect.evaluate(&[x - 1.0])).abs() < 1e-15);
        }
    }
}
