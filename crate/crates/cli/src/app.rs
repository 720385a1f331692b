//! Argument parsing and command dispatch.
//!
//! Values resolve as flag, then config file, then built-in default.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hawking_cv::fock::truncated_tms;
use hawking_cv::horizon::critical_mass;
use hawking_cv::state::schwarzschild_state_blocks;
use hawking_cv::{KruskalSqueezing, SqueezingTriple};
use serde_json::{Map, Value as Json};

use crate::config::Config;
use crate::error::{CliError, Result};
use crate::figures::Figure;
use crate::output::{Table, Value};
use crate::sweep::{parse_xi, report_table, xi_to_string, Axis, GridPoint, SweepSpec};

/// Correlations of a two-mode squeezed field across a black-hole horizon.
#[derive(Debug, Parser)]
#[command(name = "hawking-cv", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every correlation quantity at one parameter point
    Measure {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a one- or two-axis grid
    Sweep {
        /// Axis as name:start:stop:count[:lin|log], name in {xi, mass, lambda, nu}; the first varies slowest
        #[arg(long = "axis")]
        axes: Vec<String>,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Regenerate the data behind a figure
    Figure {
        /// fig1a, fig1a-inset, fig1b, fig2 or fig3
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Mass below which outer entanglement vanishes for any Kruskal squeezing
    CriticalMass {
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convergence table of the truncated number-basis squeezer
    Oracle {
        /// Squeezing parameter
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        /// Truncations to tabulate
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,60,80")]
        d: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The four-mode covariance matrix, mode order (lambda_in, lambda_out, nu_out, nu_in)
    State {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct PointArgs {
    /// Kruskal squeezing; `inf` for the infinite-squeezing limit
    #[arg(long)]
    pub xi: Option<String>,
    /// Black-hole mass
    #[arg(long)]
    pub mass: Option<f64>,
    /// First mode frequency
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Second mode frequency
    #[arg(long)]
    pub nu: Option<f64>,
    /// Horizon squeezing of the first frequency (instead of mass/lambda)
    #[arg(long)]
    pub l: Option<f64>,
    /// Horizon squeezing of the second frequency (instead of mass/nu)
    #[arg(long)]
    pub n: Option<f64>,
    /// key = value file supplying any option not given as a flag
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output if absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Rendered text and where it goes.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub path: Option<PathBuf>,
}

impl Output {
    pub fn emit(&self) -> Result<()> {
        match &self.path {
            Some(path) => std::fs::write(path, &self.text).map_err(|source| CliError::Output {
                path: path.clone(),
                source,
            }),
            None => std::io::stdout()
                .lock()
                .write_all(self.text.as_bytes())
                .map_err(|source| CliError::Output {
                    path: PathBuf::from("<stdout>"),
                    source,
                }),
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    path.map_or_else(|| Ok(Config::default()), Config::load)
}

fn pick<T: std::str::FromStr>(flag: Option<T>, cfg: &Config, key: &str) -> Result<Option<T>> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => cfg.parsed(key),
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::usage(format!("{name} must be positive, got {v}")))
    }
}

fn non_negative(name: &str, v: f64) -> Result<f64> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::usage(format!(
            "{name} must be non-negative, got {v}"
        )))
    }
}

fn resolve_format(output: &OutputArgs, cfg: &Config, default: Format) -> Result<Format> {
    if let Some(f) = output.format {
        return Ok(f);
    }
    match cfg.get("format") {
        None => Ok(default),
        Some(s) => {
            Format::from_str(s, true).map_err(|_| CliError::usage(format!("unknown format '{s}'")))
        }
    }
}

fn resolve_out(flag: &Option<PathBuf>, cfg: &Config) -> Option<PathBuf> {
    flag.clone().or_else(|| cfg.get("out").map(PathBuf::from))
}

fn resolve_xi(point: &PointArgs, cfg: &Config) -> Result<Option<KruskalSqueezing<f64>>> {
    point
        .xi
        .as_deref()
        .or_else(|| cfg.get("xi"))
        .map(parse_xi)
        .transpose()
}

/// `(ξ, l, n)` from either `(M, λ, ν)` or direct `(l, n)`, never both.
pub fn resolve_triple(point: &PointArgs, cfg: &Config) -> Result<SqueezingTriple> {
    let xi = resolve_xi(point, cfg)?.ok_or_else(|| CliError::usage("--xi is required"))?;
    let mass = pick(point.mass, cfg, "mass")?;
    let lambda = pick(point.lambda, cfg, "lambda")?;
    let nu = pick(point.nu, cfg, "nu")?;
    let l = pick(point.l, cfg, "l")?;
    let n = pick(point.n, cfg, "n")?;
    let horizon = mass.is_some() || lambda.is_some() || nu.is_some();
    let direct = l.is_some() || n.is_some();
    match (horizon, direct) {
        (true, true) => Err(CliError::usage(
            "give either --mass/--lambda/--nu or --l/--n, not both",
        )),
        (false, false) => Err(CliError::usage("give --mass/--lambda/--nu or --l/--n")),
        (true, false) => {
            let (Some(m), Some(a), Some(b)) = (mass, lambda, nu) else {
                return Err(CliError::usage(
                    "--mass, --lambda and --nu must all be given",
                ));
            };
            Ok(SqueezingTriple::from_horizon(
                xi,
                positive("mass", m)?,
                positive("lambda", a)?,
                positive("nu", b)?,
            )?)
        }
        (false, true) => {
            let (Some(l), Some(n)) = (l, n) else {
                return Err(CliError::usage("--l and --n must both be given"));
            };
            Ok(SqueezingTriple::with_kruskal(
                xi,
                non_negative("l", l)?,
                non_negative("n", n)?,
            )?)
        }
    }
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

fn triple_comment(command: &str, t: &SqueezingTriple) -> String {
    format!(
        "hawking-cv {} {command} xi={} l={} n={}",
        env!("CARGO_PKG_VERSION"),
        xi_to_string(t.xi()),
        t.l(),
        t.n()
    )
}

/// Runs one command and returns its rendered output without writing it.
pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Measure { point, output } => {
            let cfg = load_config(point.config.as_deref())?;
            let t = resolve_triple(point, &cfg)?;
            let table = report_table(&t, triple_comment("measure", &t))?;
            Ok(Output {
                text: render(&table, resolve_format(output, &cfg, Format::Json)?),
                path: resolve_out(&output.out, &cfg),
            })
        }
        Command::Sweep {
            axes,
            point,
            output,
        } => {
            let cfg = load_config(point.config.as_deref())?;
            if point.l.is_some()
                || point.n.is_some()
                || cfg.get("l").is_some()
                || cfg.get("n").is_some()
            {
                return Err(CliError::usage(
                    "sweeps run over mass and frequencies; --l/--n are not accepted",
                ));
            }
            let axis_specs: Vec<&str> = if axes.is_empty() {
                cfg.axes().iter().map(String::as_str).collect()
            } else {
                axes.iter().map(String::as_str).collect()
            };
            let axes = axis_specs
                .iter()
                .map(|s| s.parse::<Axis>())
                .collect::<Result<Vec<_>>>()?;
            let base = GridPoint {
                xi: resolve_xi(point, &cfg)?.unwrap_or(KruskalSqueezing::Finite(1.0)),
                mass: pick(point.mass, &cfg, "mass")?.unwrap_or(1.0),
                lambda: pick(point.lambda, &cfg, "lambda")?.unwrap_or(1.0),
                nu: pick(point.nu, &cfg, "nu")?.unwrap_or(2.0),
            };
            let table = SweepSpec::new(axes, base)?.evaluate()?;
            Ok(Output {
                text: render(&table, resolve_format(output, &cfg, Format::Csv)?),
                path: resolve_out(&output.out, &cfg),
            })
        }
        Command::Figure { name, output } => {
            let table = name.parse::<Figure>()?.evaluate()?;
            Ok(Output {
                text: render(&table, output.format.unwrap_or(Format::Csv)),
                path: output.out.clone(),
            })
        }
        Command::CriticalMass {
            lambda,
            nu,
            config,
            out,
        } => {
            let cfg = load_config(config.as_deref())?;
            let lambda = pick(*lambda, &cfg, "lambda")?
                .ok_or_else(|| CliError::usage("--lambda is required"))?;
            let nu = pick(*nu, &cfg, "nu")?.ok_or_else(|| CliError::usage("--nu is required"))?;
            let m = critical_mass(positive("lambda", lambda)?, positive("nu", nu)?)?;
            let mut obj = Map::new();
            obj.insert("critical_mass".into(), Value::Num(m).to_json());
            let mut text =
                serde_json::to_string_pretty(&Json::Object(obj)).expect("json serializes");
            text.push('\n');
            Ok(Output {
                text,
                path: resolve_out(out, &cfg),
            })
        }
        Command::Oracle { r, d, output } => {
            let table = oracle_table(non_negative("r", *r)?, d)?;
            Ok(Output {
                text: render(&table, output.format.unwrap_or(Format::Csv)),
                path: output.out.clone(),
            })
        }
        Command::State { point, out } => {
            let cfg = load_config(point.config.as_deref())?;
            let t = resolve_triple(point, &cfg)?;
            let sigma = schwarzschild_state_blocks(&t)?;
            let text = format!(
                "# {} modes=lambda_in,lambda_out,nu_out,nu_in order=x1,p1,...,x4,p4\n{}",
                triple_comment("state", &t),
                sigma.matrix().to_csv()
            );
            Ok(Output {
                text,
                path: resolve_out(out, &cfg),
            })
        }
    }
}

/// Truncated-basis entropy, occupation and covariance errors against the
/// Gaussian values, one row per truncation.
pub fn oracle_table(r: f64, truncations: &[usize]) -> Result<Table> {
    if truncations.is_empty() {
        return Err(CliError::usage("--d needs at least one truncation"));
    }
    let exact_entropy = hawking_cv::correlations::entropy_f((2.0 * r).cosh())?;
    let exact_cm = hawking_cv::state::kruskal_state(r)?;
    let rows = truncations
        .iter()
        .map(|&d| {
            let s = truncated_tms(r, d)?;
            let cm = s.second_moment_matrix();
            Ok(vec![
                Value::Num(d as f64),
                r.into(),
                s.reduced_entropy().into(),
                (s.reduced_entropy() - exact_entropy).abs().into(),
                (s.mean_occupation() - r.sinh().powi(2)).abs().into(),
                cm.max_abs_diff(exact_cm.matrix()).into(),
                s.norm_defect().into(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        comment: format!("hawking-cv {} oracle r={r}", env!("CARGO_PKG_VERSION")),
        columns: vec![
            "d",
            "r",
            "entropy",
            "entropy_error",
            "occupation_error",
            "cm_error",
            "norm_defect",
        ],
        rows,
    })
}

/// Parses, runs and writes; the process exit code on failure.
pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli).and_then(|out| out.emit()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("hawking-cv: {e}");
            e.exit_code()
        }
    }
}
