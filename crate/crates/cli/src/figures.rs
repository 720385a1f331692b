//! Fixed grids behind the published figures.

use std::f64::consts::PI;
use std::str::FromStr;

use hawking_cv::horizon::{survives_at_infinite_squeezing, vanishing_expression};
use hawking_cv::KruskalSqueezing;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::output::{Table, Value};
use crate::sweep::{Axis, GridPoint, Param, Spacing, SweepSpec};

/// Points per axis on the two-axis figures.
pub const GRID: usize = 60;
/// Points per axis on the three-axis critical-surface grid.
pub const INSET_GRID: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// Outer contangle over `(λ, ν)` at `M = 1/(2π)`, `ξ → ∞`.
    Fig1a,
    /// Sign of the vanishing expression over `(λ, ν, M)`.
    Fig1aInset,
    /// Outer contangle and `4ξ²` over `(ξ, M)` at `λ = 1`, `ν = 2`.
    Fig1b,
    /// Outer mutual information and `S_ξ` over `(M, ξ)` at `λ = 1`, `ν = 2`.
    Fig2,
    /// Residual contangle and `4ξ²` over `(ξ, M)` at `λ = ν = 1/(8π)`.
    Fig3,
}

impl Figure {
    pub const ALL: [Figure; 5] = [
        Self::Fig1a,
        Self::Fig1aInset,
        Self::Fig1b,
        Self::Fig2,
        Self::Fig3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Fig1a => "fig1a",
            Self::Fig1aInset => "fig1a-inset",
            Self::Fig1b => "fig1b",
            Self::Fig2 => "fig2",
            Self::Fig3 => "fig3",
        }
    }

    /// The sweep behind every figure except the inset.
    pub fn sweep(self) -> Option<SweepSpec> {
        let lin = |p, a, b| Axis::new(p, a, b, GRID, Spacing::Linear).expect("static axis");
        let point = |xi, mass, lambda, nu| GridPoint {
            xi,
            mass,
            lambda,
            nu,
        };
        let finite = KruskalSqueezing::Finite(0.0);
        let (axes, base) = match self {
            Self::Fig1a => (
                vec![lin(Param::Lambda, 0.1, 4.0), lin(Param::Nu, 0.1, 4.0)],
                point(KruskalSqueezing::Infinite, 1.0 / (2.0 * PI), 1.0, 1.0),
            ),
            Self::Fig1aInset => return None,
            Self::Fig1b => (
                vec![lin(Param::Xi, 0.0, 3.0), lin(Param::Mass, 0.01, 1.0)],
                point(finite, 1.0, 1.0, 2.0),
            ),
            Self::Fig2 => (
                vec![lin(Param::Mass, 0.01, 1.0), lin(Param::Xi, 0.1, 3.0)],
                point(finite, 1.0, 1.0, 2.0),
            ),
            Self::Fig3 => {
                let lambda = 1.0 / (8.0 * PI);
                (
                    vec![lin(Param::Xi, 0.1, 3.0), lin(Param::Mass, 0.01, 1.0)],
                    point(finite, 1.0, lambda, lambda),
                )
            }
        };
        Some(SweepSpec::new(axes, base).expect("static sweep"))
    }

    pub fn evaluate(self) -> Result<Table> {
        let mut table = match self.sweep() {
            Some(spec) => spec.evaluate()?,
            None => inset_table()?,
        };
        table.comment = format!("{} figure={}", table.comment, self.name());
        Ok(table)
    }
}

impl FromStr for Figure {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|f| f.name()).collect();
                CliError::usage(format!(
                    "unknown figure '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

fn inset_table() -> Result<Table> {
    let freq = Axis::new(Param::Lambda, 0.1, 4.0, INSET_GRID, Spacing::Linear)?.values();
    let mass = Axis::new(Param::Mass, 0.01, 0.5, INSET_GRID, Spacing::Linear)?.values();
    let mut points = Vec::with_capacity(freq.len() * freq.len() * mass.len());
    for &lambda in &freq {
        for &nu in &freq {
            for &m in &mass {
                points.push((lambda, nu, m));
            }
        }
    }
    let rows = points
        .into_par_iter()
        .map(|(lambda, nu, m)| -> Result<Vec<Value>> {
            Ok(vec![
                lambda.into(),
                nu.into(),
                m.into(),
                vanishing_expression(m, lambda, nu).into(),
                survives_at_infinite_squeezing(m, lambda, nu)?.into(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        comment: format!(
            "hawking-cv {} critical surface axes=lambda:0.1:4:{n}:lin;nu:0.1:4:{n}:lin;mass:0.01:0.5:{n}:lin",
            env!("CARGO_PKG_VERSION"),
            n = INSET_GRID
        ),
        columns: vec!["lambda", "nu", "mass", "vanishing_expression", "survives"],
        rows,
    })
}
