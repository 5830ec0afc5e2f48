//! The property-verification suites: each suite turns one family of
//! mathematical properties of the complexity measure into named
//! pass/fail checks over a fixed density corpus.

use crate::complexity::{complexity, normalization, renyi};
use crate::density::{
    make_rectangular, make_ring, replicate, ring_renyi_closed, scale_translate, Density,
    StepDensity,
};
use crate::error::Result;
use crate::order::OrderParam;
use crate::par;
use crate::quadrature::QuadratureSpec;
use crate::quantum::{
    hydrogen_density, oscillator_density, square_well_density, HydrogenState, OscillatorState,
    Space, SquareWellState,
};
use crate::sweep::{figure_rows, FigureId};

/// One verification check: `pass` iff `measured <= tol`.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckResult {
    fn new(name: impl Into<String>, measured: f64, tol: f64) -> CheckResult {
        CheckResult {
            name: name.into(),
            measured,
            tol,
            pass: measured.is_finite() && measured <= tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Symmetry,
    Bounds,
    Scaling,
    Replica,
    NearCont,
    Extremal,
    Quantum,
    All,
}

impl Suite {
    pub fn parse(token: &str) -> crate::error::Result<Suite> {
        match token {
            "symmetry" => Ok(Suite::Symmetry),
            "bounds" => Ok(Suite::Bounds),
            "scaling" => Ok(Suite::Scaling),
            "replica" => Ok(Suite::Replica),
            "nearcont" => Ok(Suite::NearCont),
            "extremal" => Ok(Suite::Extremal),
            "quantum" => Ok(Suite::Quantum),
            "all" => Ok(Suite::All),
            other => Err(crate::error::Error::Domain(format!(
                "unknown suite {other:?}"
            ))),
        }
    }
}

/// Runs a suite; `tol_override` replaces every check's default tolerance
/// when set.
pub fn run_suite(
    suite: Suite,
    tol_override: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<Vec<CheckResult>> {
    let mut checks = match suite {
        Suite::Symmetry => symmetry_suite(spec)?,
        Suite::Bounds => bounds_suite(spec)?,
        Suite::Scaling => scaling_suite(spec)?,
        Suite::Replica => replica_suite(spec)?,
        Suite::NearCont => nearcont_suite(spec)?,
        Suite::Extremal => extremal_suite(spec)?,
        Suite::Quantum => quantum_suite(spec)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Symmetry,
                Suite::Bounds,
                Suite::Scaling,
                Suite::Replica,
                Suite::NearCont,
                Suite::Extremal,
                Suite::Quantum,
            ] {
                all.extend(run_suite(s, None, spec)?);
            }
            all
        }
    };
    if let Some(tol) = tol_override {
        for c in &mut checks {
            c.tol = tol;
            c.pass = c.measured.is_finite() && c.measured <= tol;
        }
    }
    Ok(checks)
}

/// The shared verification corpus: analytic references plus sampled
/// quantum states, all with bounded entropies at every tested order.
pub fn corpus() -> Result<Vec<(String, Density)>> {
    Ok(vec![
        ("rect1".into(), make_rectangular(1)?),
        ("rect3".into(), make_rectangular(3)?),
        ("ring-0.1".into(), make_ring(0.1, 2.0, 3)?),
        ("ring-0.01".into(), make_ring(0.01, 2.0, 3)?),
        (
            "hyd-1s".into(),
            hydrogen_density(&HydrogenState::new(1, 0, 0, Space::Position)?)?,
        ),
        (
            "hyd-210".into(),
            hydrogen_density(&HydrogenState::new(2, 1, 0, Space::Position)?)?,
        ),
        (
            "osc-000".into(),
            oscillator_density(&OscillatorState::new(0, 0, 0, 1.0, Space::Position)?)?,
        ),
        (
            "well-k2".into(),
            square_well_density(&SquareWellState::new(2, 1.0, 1)?)?,
        ),
    ])
}

fn order_pairs() -> Vec<(OrderParam, OrderParam)> {
    vec![
        (OrderParam::Finite(0.5), OrderParam::Finite(2.0)),
        (OrderParam::ShannonLimit, OrderParam::Finite(2.0)),
        (OrderParam::Finite(2.0), OrderParam::InfinityLimit),
    ]
}

fn symmetry_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let work: Vec<(String, Density, OrderParam, OrderParam)> = corpus()?
        .into_iter()
        .flat_map(|(name, d)| {
            order_pairs()
                .into_iter()
                .map(move |(a, b)| (name.clone(), d.clone(), a, b))
        })
        .collect();
    par::map_collect(work, |(name, d, a, b)| {
        let fwd = complexity(&d, a, b, spec)?;
        let rev = complexity(&d, b, a, spec)?;
        Ok(CheckResult::new(
            format!("symmetry/{name}/({},{})", a.label(), b.label()),
            (fwd.value * rev.value - 1.0).abs(),
            1e-10,
        ))
    })
    .into_iter()
    .collect()
}

fn bounds_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let orders = [
        OrderParam::Finite(0.5),
        OrderParam::ShannonLimit,
        OrderParam::Finite(2.0),
        OrderParam::InfinityLimit,
    ];
    let mut work = Vec::new();
    for (name, d) in corpus()? {
        for i in 0..orders.len() {
            for j in (i + 1)..orders.len() {
                work.push((name.clone(), d.clone(), orders[i], orders[j]));
            }
        }
    }
    let mut checks: Vec<CheckResult> = par::map_collect(work, |(name, d, lo, hi)| {
        let below = complexity(&d, lo, hi, spec)?;
        let above = complexity(&d, hi, lo, spec)?;
        Ok::<_, crate::error::Error>(vec![
            CheckResult::new(
                format!("bounds/{name}/({},{})>=1", lo.label(), hi.label()),
                1.0 - below.value,
                1e-9,
            ),
            CheckResult::new(
                format!("bounds/{name}/({},{})<=1", hi.label(), lo.label()),
                above.value - 1.0,
                1e-9,
            ),
        ])
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?
    .into_iter()
    .flatten()
    .collect();

    // Monotonicity: nonincreasing in α at fixed β = 2, nondecreasing in β
    // at fixed α = 2.
    let ladder = [0.25, 0.5, 0.75, 2.0, 4.0, 8.0];
    let mono_corpus = ["rect3", "ring-0.1", "hyd-1s", "well-k2"];
    let densities: Vec<(String, Density)> = corpus()?
        .into_iter()
        .filter(|(n, _)| mono_corpus.contains(&n.as_str()))
        .collect();
    let mono: Vec<CheckResult> = par::map_collect(densities, |(name, d)| {
        let fixed = OrderParam::Finite(2.0);
        let mut worst_alpha = f64::NEG_INFINITY;
        let mut worst_beta = f64::NEG_INFINITY;
        let mut prev_a: Option<f64> = None;
        let mut prev_b: Option<f64> = None;
        for &x in &ladder {
            let va = complexity(&d, OrderParam::finite(x)?, fixed, spec)?.value;
            let vb = complexity(&d, fixed, OrderParam::finite(x)?, spec)?.value;
            if let Some(p) = prev_a {
                worst_alpha = worst_alpha.max(va - p); // must not increase
            }
            if let Some(p) = prev_b {
                worst_beta = worst_beta.max(p - vb); // must not decrease
            }
            prev_a = Some(va);
            prev_b = Some(vb);
        }
        Ok::<_, crate::error::Error>(vec![
            CheckResult::new(format!("bounds/{name}/alpha-nonincreasing"), worst_alpha, 1e-9),
            CheckResult::new(format!("bounds/{name}/beta-nondecreasing"), worst_beta, 1e-9),
        ])
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?
    .into_iter()
    .flatten()
    .collect();
    checks.extend(mono);
    Ok(checks)
}

fn scaling_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let alpha = OrderParam::Finite(0.5);
    let beta = OrderParam::Finite(2.0);
    let mut work: Vec<(String, Density, f64, Vec<f64>)> = Vec::new();
    for (name, d) in corpus()? {
        match name.as_str() {
            // 1-D: real translated-interval quadrature.
            "rect1" | "well-k2" => {
                for &(a, b) in &[(0.5, 0.7), (3.0, -1.2)] {
                    work.push((name.clone(), d.clone(), a, vec![b]));
                }
            }
            "hyd-1s" | "osc-000" => {
                for &a in &[0.5, 3.0] {
                    work.push((name.clone(), d.clone(), a, vec![0.2, -0.1, 0.3]));
                }
            }
            _ => {}
        }
    }
    par::map_collect(work, |(name, d, a, b)| {
        let base = complexity(&d, alpha, beta, spec)?.value;
        let transformed = scale_translate(&d, a, &b)?;
        let moved = complexity(&transformed, alpha, beta, spec)?.value;
        // Eq check on the entropy shift as well: R' = R - D ln a.
        let r_base = renyi(&d, beta, spec)?.value;
        let r_moved = renyi(&transformed, beta, spec)?.value;
        let shift = r_base - f64::from(d.dimension) * a.ln();
        let worst = (moved - base).abs().max((r_moved - shift).abs());
        Ok(CheckResult::new(
            format!("scaling/{name}/a={a}"),
            worst,
            1e-8,
        ))
    })
    .into_iter()
    .collect()
}

fn replica_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let bases = [
        ("rect1".to_string(), make_rectangular(1)?),
        (
            "well-k1".to_string(),
            square_well_density(&SquareWellState::new(1, 1.0, 1)?)?,
        ),
    ];
    let mut work = Vec::new();
    for (name, d) in bases {
        work.push((name.clone(), d.clone(), vec![-2.0, 2.0]));
        work.push((name, d, vec![-4.0, 0.0, 4.0]));
    }
    par::map_collect(work, |(name, d, centers)| {
        let n = centers.len() as f64;
        let q = replicate(&d, &centers)?;
        let mut worst = 0.0f64;
        for &alpha in &[0.5, 2.0] {
            let r_f = renyi(&d, OrderParam::finite(alpha)?, spec)?.value;
            let r_q = renyi(&q, OrderParam::finite(alpha)?, spec)?.value;
            // Eq shift at D = 1: R_q = R_f + (1/2) ln n.
            worst = worst.max((r_q - (r_f + 0.5 * n.ln())).abs());
        }
        let c_f = complexity(&d, OrderParam::Finite(0.5), OrderParam::Finite(2.0), spec)?.value;
        let c_q = complexity(&q, OrderParam::Finite(0.5), OrderParam::Finite(2.0), spec)?.value;
        worst = worst.max((c_q - c_f).abs());
        Ok(CheckResult::new(
            format!("replica/{name}/n={}", centers.len()),
            worst,
            1e-7,
        ))
    })
    .into_iter()
    .collect()
}

fn nearcont_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let deltas = [0.1, 0.01, 0.001];
    let mut checks = Vec::new();
    let mut complexities = Vec::new();
    for &delta in &deltas {
        let ring = make_ring(delta, 2.0, 3)?;
        for &alpha in &[0.5, 2.0] {
            let numeric = renyi(&ring, OrderParam::finite(alpha)?, spec)?.value;
            let closed = ring_renyi_closed(alpha, delta, 2.0, 3)?;
            checks.push(CheckResult::new(
                format!("nearcont/ring-closed-form/delta={delta}/alpha={alpha}"),
                (numeric - closed).abs(),
                1e-8,
            ));
        }
        let c = complexity(&ring, OrderParam::Finite(0.5), OrderParam::Finite(2.0), spec)?;
        complexities.push(c.value);
        checks.push(CheckResult::new(
            format!("nearcont/above-one/delta={delta}"),
            1.0 - c.value,
            1e-9,
        ));
    }
    // Monotone convergence to the rectangular value 1 as δ shrinks.
    let mut worst = f64::NEG_INFINITY;
    for w in complexities.windows(2) {
        worst = worst.max(w[1] - w[0]);
    }
    checks.push(CheckResult::new(
        "nearcont/monotone-to-one",
        worst,
        1e-12,
    ));
    checks.push(CheckResult::new(
        "nearcont/final-gap",
        complexities[2] - 1.0,
        (complexities[0] - 1.0) * 0.5,
    ));
    Ok(checks)
}

/// splitmix64: tiny deterministic generator for the random step corpora.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in (0, 1].
    pub fn next_f64(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 1.0) / (1u64 << 53) as f64
    }
}

/// A random normalized step density with `n_steps` distinct levels.
pub fn random_step_density(rng: &mut SplitMix64, n_steps: usize) -> StepDensity {
    let mut raw: Vec<(f64, f64)> = (0..n_steps)
        .map(|_| (0.1 + 3.0 * rng.next_f64(), 0.1 + 2.0 * rng.next_f64()))
        .collect();
    let total: f64 = raw.iter().map(|(l, m)| l * m).sum();
    for s in &mut raw {
        s.0 /= total;
    }
    StepDensity::new(raw).expect("normalized by construction")
}

fn extremal_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let mut rng = SplitMix64::new(0x5eed_0001);
    let alpha = OrderParam::Finite(0.5);
    let beta = OrderParam::Finite(2.0);

    // 200 random multi-level instances: ln C̃ strictly positive for α < β.
    let mut min_log_c = f64::INFINITY;
    for i in 0..200 {
        let sd = random_step_density(&mut rng, 2 + (i % 5));
        let log_c = sd.renyi(alpha) - sd.renyi(beta);
        min_log_c = min_log_c.min(log_c);
    }
    let mut checks = vec![CheckResult::new(
        "extremal/random-steps-strictly-above-one",
        -min_log_c, // pass iff min ln C̃ > 0
        -1e-15,
    )];

    // Equal levels force ln C̃ = 0 exactly (the rectangular case).
    let mut worst_equal = 0.0f64;
    for _ in 0..20 {
        let n = 2 + (rng.next_u64() % 4) as usize;
        let measures: Vec<f64> = (0..n).map(|_| 0.1 + 2.0 * rng.next_f64()).collect();
        let total: f64 = measures.iter().sum();
        let level = 1.0 / total;
        let sd = StepDensity::new(measures.into_iter().map(|m| (level, m)).collect()).unwrap();
        worst_equal = worst_equal.max((sd.renyi(alpha) - sd.renyi(beta)).abs());
    }
    checks.push(CheckResult::new(
        "extremal/equal-levels-reach-one",
        worst_equal,
        1e-12,
    ));

    // Closed form vs the quadrature pipeline on explicit 1-D realizations.
    let mut rng = SplitMix64::new(0x5eed_0002);
    let instances: Vec<StepDensity> = (0..50)
        .map(|i| random_step_density(&mut rng, 2 + (i % 5)))
        .collect();
    let diffs: Vec<Result<f64>> = par::map_collect(instances, |sd| {
        let line = sd.realize_line();
        let mut worst = 0.0f64;
        for order in [
            OrderParam::Finite(0.5),
            OrderParam::ShannonLimit,
            OrderParam::Finite(2.0),
            OrderParam::InfinityLimit,
        ] {
            let numeric = renyi(&line, order, spec)?.value;
            worst = worst.max((numeric - sd.renyi(order)).abs());
        }
        Ok(worst)
    });
    let worst = diffs
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    checks.push(CheckResult::new(
        "extremal/step-quadrature-oracle",
        worst,
        1e-9,
    ));
    Ok(checks)
}

fn quantum_suite(spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();

    // Normalization of constructed densities.
    let states: Vec<(String, Density)> = vec![
        (
            "hyd-1s-pos".into(),
            hydrogen_density(&HydrogenState::new(1, 0, 0, Space::Position)?)?,
        ),
        (
            "hyd-1s-mom".into(),
            hydrogen_density(&HydrogenState::new(1, 0, 0, Space::Momentum)?)?,
        ),
        (
            "hyd-15-5-3-pos".into(),
            hydrogen_density(&HydrogenState::new(15, 5, 3, Space::Position)?)?,
        ),
        (
            "hyd-15-14-7-mom".into(),
            hydrogen_density(&HydrogenState::new(15, 14, 7, Space::Momentum)?)?,
        ),
        (
            "osc-000-pos".into(),
            oscillator_density(&OscillatorState::new(0, 0, 0, 1.0, Space::Position)?)?,
        ),
        (
            "osc-1-13-5-pos".into(),
            oscillator_density(&OscillatorState::new(1, 13, 5, 1.0, Space::Position)?)?,
        ),
        (
            "well-k3".into(),
            square_well_density(&SquareWellState::new(3, 1.0, 1)?)?,
        ),
    ];
    let norm_checks: Vec<CheckResult> = par::map_collect(states, |(name, d)| {
        let n = normalization(&d, spec)?;
        Ok::<_, crate::error::Error>(CheckResult::new(
            format!("quantum/normalization/{name}"),
            (n.value - 1.0).abs(),
            1e-9,
        ))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    checks.extend(norm_checks);

    // Square-well degeneracy: identical complexity for k = 1..5.
    let values: Vec<f64> = (1..=5u32)
        .map(|k| {
            let d = square_well_density(&SquareWellState::new(k, 1.0, 1)?)?;
            Ok(complexity(&d, OrderParam::Finite(2.0), OrderParam::InfinityLimit, spec)?.value)
        })
        .collect::<Result<Vec<_>>>()?;
    let spread = values.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b))
        - values.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    checks.push(CheckResult::new("quantum/well-degeneracy-k1..5", spread, 1e-9));

    // Oscillator: position vs momentum, and λ-invariance.
    let pairs = [(0.5, 2.0), (2.0, 0.5)];
    for (n, l, m) in [(0u32, 0u32, 0i64), (1, 2, 1)] {
        for &(a, b) in &pairs {
            let pos = oscillator_density(&OscillatorState::new(n, l, m, 1.0, Space::Position)?)?;
            let mom = oscillator_density(&OscillatorState::new(n, l, m, 1.0, Space::Momentum)?)?;
            let ca = complexity(&pos, OrderParam::finite(a)?, OrderParam::finite(b)?, spec)?;
            let cb = complexity(&mom, OrderParam::finite(a)?, OrderParam::finite(b)?, spec)?;
            checks.push(CheckResult::new(
                format!("quantum/osc-space-agreement/({n},{l},{m})/alpha={a}"),
                (ca.value - cb.value).abs(),
                1e-7,
            ));
        }
    }
    let lambdas = [0.5, 1.0, 4.0];
    let vals: Vec<f64> = lambdas
        .iter()
        .map(|&lam| {
            let d = oscillator_density(&OscillatorState::new(1, 2, 1, lam, Space::Position)?)?;
            Ok(complexity(&d, OrderParam::Finite(2.0), OrderParam::InfinityLimit, spec)?.value)
        })
        .collect::<Result<Vec<_>>>()?;
    let rel_spread = (vals.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b))
        - vals.iter().fold(f64::INFINITY, |a, &b| a.min(b)))
        / vals[1];
    checks.push(CheckResult::new(
        "quantum/osc-lambda-invariance",
        rel_spread,
        1e-8,
    ));

    // Hydrogen n = 15: the sweep minimum sits at the highest l in both
    // spaces and at both α; oscillator shell e = 15 bottoms out at l = 15.
    for id in FigureId::ALL {
        let rows = figure_rows(id, spec)?;
        let top_l = rows.iter().map(|r| r.l).max().unwrap();
        let min_top = rows
            .iter()
            .filter(|r| r.l == top_l)
            .map(|r| r.value)
            .fold(f64::INFINITY, f64::min);
        let min_rest = rows
            .iter()
            .filter(|r| r.l != top_l)
            .map(|r| r.value)
            .fold(f64::INFINITY, f64::min);
        checks.push(CheckResult::new(
            format!("quantum/{}-min-at-l={top_l}", id.name()),
            min_top - min_rest, // negative when the top-l branch is lowest
            0.0,
        ));
        let worst_bound = rows.iter().map(|r| 1.0 - r.value).fold(f64::NEG_INFINITY, f64::max);
        checks.push(CheckResult::new(
            format!("quantum/{}-all-above-one", id.name()),
            worst_bound,
            0.0,
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_tokens_parse() {
        for s in ["symmetry", "bounds", "scaling", "replica", "nearcont", "extremal", "quantum", "all"] {
            assert!(Suite::parse(s).is_ok());
        }
        assert!(Suite::parse("bogus").is_err());
    }

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn random_step_densities_are_valid() {
        let mut rng = SplitMix64::new(7);
        for i in 0..50 {
            let sd = random_step_density(&mut rng, 2 + i % 5);
            let total: f64 = sd.steps().iter().map(|(l, m)| l * m).sum();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }
}
