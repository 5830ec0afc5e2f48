//! Figure-style sweeps over quantum-state grids: C̃^(α,∞) versus |m| for
//! families of l, evaluated in parallel and assembled in a fixed order.

use crate::complexity::complexity;
use crate::error::{Error, Result};
use crate::order::OrderParam;
use crate::par;
use crate::quadrature::QuadratureSpec;
use crate::quantum::{
    hydrogen_density, oscillator_density, oscillator_shell, square_well_g, HydrogenState,
    OscillatorState, Space,
};

/// The six state-sweep figures: hydrogen n = 15 in position (1) and
/// momentum (2) space, and the oscillator shell e = 15 (3), each at
/// α = 0.5 (a) and α = 2 (b).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3b,
}

impl FigureId {
    pub const ALL: [FigureId; 6] = [
        FigureId::Fig1a,
        FigureId::Fig1b,
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig3a,
        FigureId::Fig3b,
    ];

    pub fn parse(token: &str) -> Result<FigureId> {
        match token {
            "fig1a" => Ok(FigureId::Fig1a),
            "fig1b" => Ok(FigureId::Fig1b),
            "fig2a" => Ok(FigureId::Fig2a),
            "fig2b" => Ok(FigureId::Fig2b),
            "fig3a" => Ok(FigureId::Fig3a),
            "fig3b" => Ok(FigureId::Fig3b),
            other => Err(Error::Domain(format!("unknown figure id {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::Fig1a => "fig1a",
            FigureId::Fig1b => "fig1b",
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
        }
    }

    pub fn alpha(&self) -> f64 {
        match self {
            FigureId::Fig1a | FigureId::Fig2a | FigureId::Fig3a => 0.5,
            FigureId::Fig1b | FigureId::Fig2b | FigureId::Fig3b => 2.0,
        }
    }
}

/// One (l, |m|) sweep point: the complexity C̃^(α,∞), its Rényi factor and
/// the density supremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub l: u32,
    pub abs_m: u32,
    pub value: f64,
    pub r_alpha: f64,
    pub sup_norm: f64,
}

const HYDROGEN_N: u32 = 15;
const HYDROGEN_L: [u32; 3] = [5, 10, 14];
const SHELL_E: u32 = 15;

/// Computes all rows of a figure. Rows come back sorted ascending by
/// (l, |m|) regardless of how the parallel evaluation interleaved.
pub fn figure_rows(id: FigureId, spec: &QuadratureSpec) -> Result<Vec<FigureRow>> {
    let alpha = OrderParam::finite(id.alpha())?;
    let states: Vec<(u32, u32, u32)> = match id {
        FigureId::Fig1a | FigureId::Fig1b | FigureId::Fig2a | FigureId::Fig2b => HYDROGEN_L
            .iter()
            .flat_map(|&l| (0..=l).map(move |m| (HYDROGEN_N, l, m)))
            .collect(),
        FigureId::Fig3a | FigureId::Fig3b => oscillator_shell(SHELL_E)
            .into_iter()
            .flat_map(|(n, l)| (0..=l).map(move |m| (n, l, m)))
            .collect(),
    };
    let space = match id {
        FigureId::Fig2a | FigureId::Fig2b => Space::Momentum,
        _ => Space::Position,
    };

    let results: Vec<Result<FigureRow>> = par::map_collect(states, move |(n, l, m)| {
        figure_point(id, space, n, l, m, alpha, spec)
    });
    let mut rows = results.into_iter().collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.l, r.abs_m));
    Ok(rows)
}

/// Sequential reference sweep for benchmarking against [`figure_rows`].
pub fn figure_rows_seq(id: FigureId, spec: &QuadratureSpec) -> Result<Vec<FigureRow>> {
    let alpha = OrderParam::finite(id.alpha())?;
    let space = match id {
        FigureId::Fig2a | FigureId::Fig2b => Space::Momentum,
        _ => Space::Position,
    };
    let states: Vec<(u32, u32, u32)> = match id {
        FigureId::Fig1a | FigureId::Fig1b | FigureId::Fig2a | FigureId::Fig2b => HYDROGEN_L
            .iter()
            .flat_map(|&l| (0..=l).map(move |m| (HYDROGEN_N, l, m)))
            .collect(),
        FigureId::Fig3a | FigureId::Fig3b => oscillator_shell(SHELL_E)
            .into_iter()
            .flat_map(|(n, l)| (0..=l).map(move |m| (n, l, m)))
            .collect(),
    };
    let results: Vec<Result<FigureRow>> = par::map_collect_seq(states, move |(n, l, m)| {
        figure_point(id, space, n, l, m, alpha, spec)
    });
    let mut rows = results.into_iter().collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.l, r.abs_m));
    Ok(rows)
}

fn figure_point(
    id: FigureId,
    space: Space,
    n: u32,
    l: u32,
    m: u32,
    alpha: OrderParam,
    spec: &QuadratureSpec,
) -> Result<FigureRow> {
    let density = match id {
        FigureId::Fig3a | FigureId::Fig3b => {
            oscillator_density(&OscillatorState::new(n, l, m as i64, 1.0, space)?)?
        }
        _ => hydrogen_density(&HydrogenState::new(n, l, m as i64, space)?)?,
    };
    let c = complexity(&density, alpha, OrderParam::InfinityLimit, spec)?;
    Ok(FigureRow {
        l,
        abs_m: m,
        value: c.value,
        r_alpha: c.r_alpha.value,
        sup_norm: (-c.r_beta.value).exp(),
    })
}

/// The square-well table α ↦ 2g(α) on the grid α ∈ {0, 0.25, …, 8}.
pub fn sqwell_table(spec: &QuadratureSpec) -> Result<Vec<(f64, f64)>> {
    let alphas: Vec<f64> = (0..=32).map(|i| 0.25 * i as f64).collect();
    let rows: Vec<Result<(f64, f64)>> = par::map_collect(alphas, move |a| {
        let g = square_well_g(OrderParam::finite(a)?, spec)?;
        Ok((a, 2.0 * g))
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_state_counts() {
        // Row counts follow from the state-set enumeration alone; use a
        // loose spec to keep this quick.
        let spec = QuadratureSpec {
            rel_tol: 1e-6,
            ..QuadratureSpec::default()
        };
        let rows = figure_rows(FigureId::Fig1b, &spec).unwrap();
        assert_eq!(rows.len(), 6 + 11 + 15);
        assert!(rows.windows(2).all(|w| (w[0].l, w[0].abs_m) < (w[1].l, w[1].abs_m)));
    }

    #[test]
    fn parse_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(FigureId::parse(id.name()).unwrap(), id);
        }
        assert!(FigureId::parse("fig9").is_err());
    }
}
