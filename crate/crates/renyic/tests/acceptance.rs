//! Acceptance suite: one test per acceptance criterion, each printing a
//! single `PASS criterion-N <summary>` / `FAIL criterion-N <summary>` line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::f64::consts::PI;
use std::time::Instant;

use renyic::complexity::{complexity, renyi};
use renyic::density::{ln_unit_ball_volume, make_rectangular};
use renyic::error::Error;
use renyic::order::OrderParam;
use renyic::quadrature::QuadratureSpec;
use renyic::quantum::{
    box_complexity, hydrogen_density, oscillator_density, square_well_density, square_well_g,
    HydrogenState, OscillatorState, Space, SquareWellState,
};
use renyic::specfun::log_gamma;
use renyic::sweep::{figure_rows, FigureId};
use renyic::verify::{random_step_density, run_suite, SplitMix64, Suite};

fn report(criterion: &str, pass: bool, summary: &str) {
    println!(
        "{} {criterion} {summary}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion}: {summary}");
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

#[test]
fn criterion_1_hydrogen_ground_state_closed_forms() {
    let d = hydrogen_density(&HydrogenState::new(1, 0, 0, Space::Position).unwrap()).unwrap();
    let mut worst_rel = 0.0f64;
    let mut worst_secs = 0.0f64;
    for (alpha, expect) in [(2.0, 8.0), (0.5, 64.0)] {
        let start = Instant::now();
        let c = complexity(
            &d,
            OrderParam::Finite(alpha),
            OrderParam::InfinityLimit,
            &spec(),
        )
        .unwrap();
        worst_secs = worst_secs.max(start.elapsed().as_secs_f64());
        worst_rel = worst_rel.max(((c.value - expect) / expect).abs());
    }
    report(
        "criterion-1",
        worst_rel <= 1e-6 && worst_secs < 1.0,
        &format!("hydrogen-1s {{8, 64}} worst rel err {worst_rel:.3e}, worst {worst_secs:.3}s"),
    );
}

#[test]
fn criterion_2_oscillator_ground_state() {
    let expect = 2.0f64.powf(1.5);
    let mut values = Vec::new();
    for lambda in [0.5, 1.0, 4.0] {
        for space in [Space::Position, Space::Momentum] {
            let d =
                oscillator_density(&OscillatorState::new(0, 0, 0, lambda, space).unwrap()).unwrap();
            let c = complexity(
                &d,
                OrderParam::Finite(2.0),
                OrderParam::InfinityLimit,
                &spec(),
            )
            .unwrap();
            values.push(c.value);
        }
    }
    let rel_err = values
        .iter()
        .map(|v| ((v - expect) / expect).abs())
        .fold(0.0, f64::max);
    let spread = values
        .iter()
        .flat_map(|a| values.iter().map(move |b| ((a - b) / expect).abs()))
        .fold(0.0, f64::max);
    report(
        "criterion-2",
        rel_err <= 1e-6 && spread <= 1e-8,
        &format!("oscillator 2^(3/2): rel err {rel_err:.3e}, lambda/space spread {spread:.3e}"),
    );
}

#[test]
fn criterion_3_square_well() {
    let s = spec();
    let g2 = square_well_g(OrderParam::Finite(2.0), &s).unwrap();
    let g2_err = (2.0 * g2 - 4.0 / 3.0).abs();

    // Degeneracy across excitation index.
    let mut k_spread = 0.0f64;
    let mut first = None;
    for k in 1..=5 {
        let d = square_well_density(&SquareWellState::new(k, 1.0, 1).unwrap()).unwrap();
        let c = complexity(
            &d,
            OrderParam::Finite(2.0),
            OrderParam::InfinityLimit,
            &s,
        )
        .unwrap()
        .value;
        let base = *first.get_or_insert(c);
        k_spread = k_spread.max((c - base).abs());
    }

    // Endpoint and monotone decrease of 2g(α) toward 1.
    let g0 = square_well_g(OrderParam::ZeroLimit, &s).unwrap();
    let ladder: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0]
        .iter()
        .map(|&a| {
            let order = if a == 0.0 {
                OrderParam::ZeroLimit
            } else {
                OrderParam::finite(a).unwrap()
            };
            2.0 * square_well_g(order, &s).unwrap()
        })
        .collect();
    let monotone = ladder.windows(2).all(|w| w[1] < w[0]) && ladder.iter().all(|&v| v > 1.0);

    let boxed = box_complexity(OrderParam::Finite(2.0), 3, &s).unwrap();
    let box_err = (boxed - (4.0f64 / 3.0).powi(3)).abs();

    report(
        "criterion-3",
        g2_err <= 1e-8 && k_spread <= 1e-9 && (g0 - 1.0).abs() <= 1e-12 && monotone
            && box_err <= 1e-7,
        &format!(
            "square well: |2g(2)-4/3|={g2_err:.3e}, k-spread={k_spread:.3e}, \
             g(0)-1={:.3e}, monotone={monotone}, |box-(4/3)^3|={box_err:.3e}",
            g0 - 1.0
        ),
    );
}

#[test]
fn criterion_4_rectangular_extremizer() {
    let s = spec();
    let orders = [
        OrderParam::Finite(0.5),
        OrderParam::ShannonLimit,
        OrderParam::Finite(2.0),
        OrderParam::InfinityLimit,
    ];
    let mut worst_c = 0.0f64;
    let mut worst_r = 0.0f64;
    for dim in [1u32, 3] {
        let d = make_rectangular(dim).unwrap();
        let ln_c_d = ln_unit_ball_volume(dim);
        for &a in &orders {
            worst_r = worst_r.max((renyi(&d, a, &s).unwrap().value - ln_c_d).abs());
            for &b in &orders {
                let c = complexity(&d, a, b, &s).unwrap().value;
                worst_c = worst_c.max((c - 1.0).abs());
            }
        }
    }
    report(
        "criterion-4",
        worst_c <= 1e-9 && worst_r <= 1e-10,
        &format!("rectangular D in {{1,3}}: |C-1| {worst_c:.3e}, |R - ln c_D| {worst_r:.3e}"),
    );
}

#[test]
fn criterion_5_property_suites() {
    let s = spec();
    let mut failed = Vec::new();
    let mut total = 0usize;
    for suite in [
        Suite::Symmetry,
        Suite::Bounds,
        Suite::Scaling,
        Suite::Replica,
        Suite::NearCont,
        Suite::Extremal,
    ] {
        for check in run_suite(suite, None, &s).unwrap() {
            total += 1;
            if !check.pass {
                failed.push(check.name);
            }
        }
    }
    report(
        "criterion-5",
        failed.is_empty(),
        &format!(
            "property suites: {}/{total} checks pass{}",
            total - failed.len(),
            if failed.is_empty() {
                String::new()
            } else {
                format!(", failing: {failed:?}")
            }
        ),
    );
}

#[test]
fn criterion_6_figure_reproduction() {
    let s = spec();
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for id in [
        FigureId::Fig1a,
        FigureId::Fig1b,
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig3a,
        FigureId::Fig3b,
    ] {
        let rows = figure_rows(id, &s).unwrap();
        let highest_l = rows.iter().map(|r| r.l).max().unwrap();
        let min_row = rows
            .iter()
            .min_by(|a, b| a.value.total_cmp(&b.value))
            .unwrap();
        let all_above_one = rows.iter().all(|r| r.value > 1.0);
        if min_row.l != highest_l || !all_above_one {
            ok = false;
            detail.push_str(&format!(
                " {}: min at l={} (expect {highest_l}), above-one={all_above_one};",
                id.name(),
                min_row.l
            ));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 120.0 {
        ok = false;
    }
    report(
        "criterion-6",
        ok,
        &format!("figures: min at highest l, all values > 1, {secs:.1}s total{detail}"),
    );
}

#[test]
fn criterion_7_oracle_equivalence() {
    let s = spec();

    // Closed-form step entropies vs the quadrature pipeline.
    let mut rng = SplitMix64::new(0x5eed_cafe_f00d_0001);
    let mut worst_step = 0.0f64;
    for _ in 0..50 {
        let sd = random_step_density(&mut rng, 4);
        let d = sd.realize_line();
        for order in [
            OrderParam::Finite(0.5),
            OrderParam::ShannonLimit,
            OrderParam::Finite(2.0),
        ] {
            let closed = sd.renyi(order);
            let numeric = renyi(&d, order, &s).unwrap().value;
            worst_step = worst_step.max((closed - numeric).abs() / closed.abs().max(1.0));
        }
    }

    // Wallis closed form ∫₀^π sin^{2α} = √π Γ(α+1/2)/Γ(α+1) vs quadrature.
    let mut worst_wallis = 0.0f64;
    for alpha in [0.5, 1.5, 2.0, 3.0] {
        let int_f_alpha = (2.0f64.powf(alpha) / PI)
            * PI.sqrt()
            * (log_gamma(alpha + 0.5).unwrap() - log_gamma(alpha + 1.0).unwrap()).exp();
        let closed = int_f_alpha.powf(1.0 / (1.0 - alpha));
        let g = square_well_g(OrderParam::Finite(alpha), &s).unwrap();
        worst_wallis = worst_wallis.max((g - closed).abs());
    }

    report(
        "criterion-7",
        worst_step <= 1e-9 && worst_wallis <= 1e-10,
        &format!("oracles: step worst {worst_step:.3e}, Wallis worst {worst_wallis:.3e}"),
    );
}

#[test]
fn criterion_8_divergence_guard() {
    let d = hydrogen_density(&HydrogenState::new(1, 0, 0, Space::Momentum).unwrap()).unwrap();
    let result = complexity(
        &d,
        OrderParam::Finite(0.3),
        OrderParam::Finite(2.0),
        &spec(),
    );
    let diverged = matches!(result, Err(Error::Divergent { .. }));
    report(
        "criterion-8",
        diverged,
        &format!(
            "hydrogen momentum alpha=0.3: {}",
            match &result {
                Err(e) => format!("typed error: {e}"),
                Ok(c) => format!("unexpected value {}", c.value),
            }
        ),
    );
}
