//! Parameter grids over `(ξ, M, λ, ν)` and their evaluation.

use std::fmt;
use std::str::FromStr;

use hawking_cv::correlations::{CorrelationReport, LimitContangle, Report};
use hawking_cv::{KruskalSqueezing, SqueezingTriple};
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::output::{Table, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    Xi,
    Mass,
    Lambda,
    Nu,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Self::Xi => "xi",
            Self::Mass => "mass",
            Self::Lambda => "lambda",
            Self::Nu => "nu",
        }
    }
}

impl FromStr for Param {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xi" => Ok(Self::Xi),
            "mass" => Ok(Self::Mass),
            "lambda" => Ok(Self::Lambda),
            "nu" => Ok(Self::Nu),
            other => Err(CliError::usage(format!(
                "unknown sweep parameter '{other}' (expected xi, mass, lambda or nu)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    param: Param,
    start: f64,
    stop: f64,
    count: usize,
    spacing: Spacing,
}

impl Axis {
    pub fn new(
        param: Param,
        start: f64,
        stop: f64,
        count: usize,
        spacing: Spacing,
    ) -> Result<Self> {
        if count < 2 {
            return Err(CliError::usage(format!(
                "axis {}: count must be at least 2",
                param.name()
            )));
        }
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(CliError::usage(format!(
                "axis {}: need finite start < stop, got {start}..{stop}",
                param.name()
            )));
        }
        let positive_start = spacing == Spacing::Log || param != Param::Xi;
        if (positive_start && start <= 0.0) || start < 0.0 {
            return Err(CliError::usage(format!(
                "axis {}: start {start} is outside the parameter domain",
                param.name()
            )));
        }
        Ok(Self {
            param,
            start,
            stop,
            count,
            spacing,
        })
    }

    pub fn param(&self) -> Param {
        self.param
    }

    /// Grid values; the first and last equal `start` and `stop` exactly.
    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| {
                if k + 1 == self.count {
                    return self.stop;
                }
                let t = k as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.start + (self.stop - self.start) * t,
                    Spacing::Log => {
                        (self.start.ln() + (self.stop.ln() - self.start.ln()) * t).exp()
                    }
                }
            })
            .collect()
    }
}

/// `name:start:stop:count[:lin|log]`.
impl FromStr for Axis {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(4..=5).contains(&parts.len()) {
            return Err(CliError::usage(format!(
                "axis '{s}': expected name:start:stop:count[:lin|log]"
            )));
        }
        let num = |p: &str| {
            p.parse::<f64>()
                .map_err(|_| CliError::usage(format!("axis '{s}': bad number '{p}'")))
        };
        let count = parts[3]
            .parse::<usize>()
            .map_err(|_| CliError::usage(format!("axis '{s}': bad count '{}'", parts[3])))?;
        let spacing = match parts.get(4).copied() {
            None | Some("lin") => Spacing::Linear,
            Some("log") => Spacing::Log,
            Some(other) => {
                return Err(CliError::usage(format!(
                    "axis '{s}': unknown spacing '{other}'"
                )))
            }
        };
        Self::new(
            parts[0].parse()?,
            num(parts[1])?,
            num(parts[2])?,
            count,
            spacing,
        )
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spacing = match self.spacing {
            Spacing::Linear => "lin",
            Spacing::Log => "log",
        };
        write!(
            f,
            "{}:{}:{}:{}:{}",
            self.param.name(),
            self.start,
            self.stop,
            self.count,
            spacing
        )
    }
}

/// Parses a Kruskal squeezing, accepting `inf` for the limit.
pub fn parse_xi(s: &str) -> Result<KruskalSqueezing<f64>> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
        return Ok(KruskalSqueezing::Infinite);
    }
    let xi: f64 = s
        .parse()
        .map_err(|_| CliError::usage(format!("xi: cannot parse '{s}'")))?;
    if !(xi >= 0.0 && xi.is_finite()) {
        return Err(CliError::usage(format!("xi must be non-negative, got {s}")));
    }
    Ok(KruskalSqueezing::Finite(xi))
}

pub fn xi_to_string(xi: KruskalSqueezing<f64>) -> String {
    match xi {
        KruskalSqueezing::Finite(x) => x.to_string(),
        KruskalSqueezing::Infinite => "inf".into(),
    }
}

/// One grid point in physical parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridPoint {
    pub xi: KruskalSqueezing<f64>,
    pub mass: f64,
    pub lambda: f64,
    pub nu: f64,
}

impl GridPoint {
    fn with(mut self, param: Param, value: f64) -> Self {
        match param {
            Param::Xi => self.xi = KruskalSqueezing::Finite(value),
            Param::Mass => self.mass = value,
            Param::Lambda => self.lambda = value,
            Param::Nu => self.nu = value,
        }
        self
    }
}

/// One or two axes over a base point. The first axis varies slowest.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    axes: Vec<Axis>,
    base: GridPoint,
}

impl SweepSpec {
    pub fn new(axes: Vec<Axis>, base: GridPoint) -> Result<Self> {
        if axes.is_empty() || axes.len() > 2 {
            return Err(CliError::usage(format!(
                "a sweep needs 1 or 2 axes, got {}",
                axes.len()
            )));
        }
        if axes.len() == 2 && axes[0].param == axes[1].param {
            return Err(CliError::usage(
                "the two axes must sweep different parameters",
            ));
        }
        let swept = |p: Param| axes.iter().any(|a| a.param == p);
        if swept(Param::Xi) && base.xi.is_infinite() {
            return Err(CliError::usage("cannot sweep xi together with xi = inf"));
        }
        for (p, v) in [
            (Param::Mass, base.mass),
            (Param::Lambda, base.lambda),
            (Param::Nu, base.nu),
        ] {
            if !swept(p) && !(v > 0.0 && v.is_finite()) {
                return Err(CliError::usage(format!(
                    "{} must be positive, got {v}",
                    p.name()
                )));
            }
        }
        Ok(Self { axes, base })
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn points(&self) -> Vec<GridPoint> {
        let outer = self.axes[0].values();
        match self.axes.get(1) {
            None => outer
                .iter()
                .map(|&v| self.base.with(self.axes[0].param, v))
                .collect(),
            Some(inner_axis) => {
                let inner = inner_axis.values();
                outer
                    .iter()
                    .flat_map(|&u| {
                        let row = self.base.with(self.axes[0].param, u);
                        inner.iter().map(move |&v| row.with(inner_axis.param, v))
                    })
                    .collect()
            }
        }
    }

    /// Human-readable summary for the CSV comment line.
    pub fn describe(&self) -> String {
        let axes: Vec<String> = self.axes.iter().map(ToString::to_string).collect();
        let swept = |p: Param| self.axes.iter().any(|a| a.param == p);
        let mut fixed = Vec::new();
        if !swept(Param::Xi) {
            fixed.push(format!("xi={}", xi_to_string(self.base.xi)));
        }
        for (p, v) in [
            (Param::Mass, self.base.mass),
            (Param::Lambda, self.base.lambda),
            (Param::Nu, self.base.nu),
        ] {
            if !swept(p) {
                fixed.push(format!("{}={v}", p.name()));
            }
        }
        format!("axes={} fixed={}", axes.join(";"), fixed.join(";"))
    }

    pub fn evaluate(&self) -> Result<Table> {
        let rows = self
            .points()
            .into_par_iter()
            .map(sweep_row)
            .collect::<Result<Vec<_>>>()?;
        let mut comment = format!(
            "hawking-cv {} sweep {}",
            env!("CARGO_PKG_VERSION"),
            self.describe()
        );
        if self.base.xi.is_infinite() {
            comment.push_str(INFINITE_XI_NOTE);
        }
        Ok(Table {
            comment,
            columns: SWEEP_COLUMNS.to_vec(),
            rows,
        })
    }
}

pub const SWEEP_COLUMNS: [&str; 15] = [
    "xi",
    "mass",
    "lambda",
    "nu",
    "l",
    "n",
    "s_kruskal",
    "i_kruskal",
    "tau_kruskal",
    "tau_out",
    "i_out",
    "tau_1v3",
    "tau_residual",
    "tau_tri_upper",
    "entangled_out",
];

pub const INFINITE_XI_NOTE: &str = "; xi=inf: tau_out is the limit value and entangled_out its sign, \
s_kruskal/i_kruskal/tau_kruskal are inf, i_out/tau_1v3/tau_residual/tau_tri_upper are not evaluated (nan)";

fn sweep_row(p: GridPoint) -> Result<Vec<Value>> {
    let t = SqueezingTriple::from_horizon(p.xi, p.mass, p.lambda, p.nu)?;
    let head = [
        p.xi.finite().unwrap_or(f64::INFINITY),
        p.mass,
        p.lambda,
        p.nu,
        t.l(),
        t.n(),
    ];
    let mut row: Vec<Value> = head.iter().map(|&x| Value::Num(x)).collect();
    match Report::evaluate(&t)? {
        Report::Finite(r) => {
            let xi = p.xi.finite().expect("finite report");
            row.extend(
                [
                    r.s_kruskal,
                    r.i_kruskal,
                    4.0 * xi * xi,
                    r.tau_out,
                    r.i_out,
                    r.tau_1v3,
                    r.tau_residual,
                    r.tau_tri_upper,
                ]
                .map(Value::Num),
            );
            row.push(Value::Bool(r.entangled_out));
        }
        Report::KruskalLimit(r) => {
            let inf = f64::INFINITY;
            row.extend([inf, inf, inf, limit_value(r.tau_out)].map(Value::Num));
            row.extend([f64::NAN; 4].map(Value::Num));
            row.push(Value::Bool(r.entangled_out));
        }
    }
    Ok(row)
}

pub fn limit_value(tau: LimitContangle<f64>) -> f64 {
    tau.finite().unwrap_or(f64::INFINITY)
}

/// The full report at one point as a single-row table keyed by the
/// report field names.
pub fn report_table(t: &SqueezingTriple, comment: String) -> Result<Table> {
    let row = match Report::evaluate(t)? {
        Report::Finite(r) => vec![
            r.s_kruskal.into(),
            r.i_kruskal.into(),
            r.tau_out.into(),
            r.i_out.into(),
            r.tau_in_out_lambda.into(),
            r.tau_in_out_nu.into(),
            r.tau_1v3.into(),
            r.tau_residual.into(),
            r.tau_tri_upper.into(),
            r.entangled_out.into(),
        ],
        Report::KruskalLimit(r) => vec![
            f64::INFINITY.into(),
            f64::INFINITY.into(),
            limit_value(r.tau_out).into(),
            f64::NAN.into(),
            (4.0 * t.l() * t.l()).into(),
            (4.0 * t.n() * t.n()).into(),
            f64::NAN.into(),
            f64::NAN.into(),
            f64::NAN.into(),
            r.entangled_out.into(),
        ],
    };
    Ok(Table {
        comment,
        columns: CorrelationReport::<f64>::FIELDS.to_vec(),
        rows: vec![row],
    })
}
