//! End-to-end runs of the `hawking-cv` binary.

use std::path::Path;
use std::process::{Command, Output};

use hawking_cv::correlations::{entropy_f, CorrelationReport};
use serde_json::Value;

fn hawking(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hawking-cv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&hawking(args))).unwrap()
}

fn num(v: &Value, key: &str) -> f64 {
    v[key]
        .as_f64()
        .unwrap_or_else(|| panic!("{key} is not a number: {}", v[key]))
}

#[test]
fn measure_json_has_exactly_the_report_fields() {
    let v = json(&["measure", "--xi", "1", "--l", "0.3", "--n", "0.4"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, CorrelationReport::<f64>::FIELDS);
    assert!((num(&v, "tau_out") - 1.625_973_366_907_07).abs() < 1e-11);
}

#[test]
fn measure_at_zero_squeezing_is_uncorrelated() {
    let v = json(&[
        "measure", "--xi", "0", "--mass", "0.3", "--lambda", "1", "--nu", "2",
    ]);
    for key in [
        "s_kruskal",
        "i_kruskal",
        "tau_out",
        "i_out",
        "tau_tri_upper",
    ] {
        assert_eq!(num(&v, key), 0.0, "{key}");
    }
    assert_eq!(v["entangled_out"], Value::Bool(false));
}

#[test]
fn measure_without_horizon_squeezing_passes_kruskal_values() {
    let v = json(&["measure", "--xi", "1", "--l", "0", "--n", "0"]);
    assert!((num(&v, "tau_out") - 4.0).abs() < 1e-11);
    let expected = 2.0 * entropy_f(2.0_f64.cosh()).unwrap();
    assert!((num(&v, "i_out") - expected).abs() < 1e-11);
}

#[test]
fn measure_below_critical_mass_at_infinite_squeezing() {
    let v = json(&[
        "measure", "--xi", "inf", "--mass", "0.05", "--lambda", "1", "--nu", "2",
    ]);
    assert_eq!(num(&v, "tau_out"), 0.0);
    assert_eq!(v["entangled_out"], Value::Bool(false));
    assert_eq!(v["s_kruskal"], Value::String("inf".into()));
    assert_eq!(v["i_out"], Value::String("nan".into()));
    let above = json(&[
        "measure", "--xi", "inf", "--mass", "1", "--lambda", "1", "--nu", "2",
    ]);
    assert!(num(&above, "tau_out") > 0.0);
}

#[test]
fn measure_routes_agree_field_by_field() {
    let t = hawking_cv::SqueezingTriple::from_horizon(
        hawking_cv::KruskalSqueezing::Finite(0.9),
        0.2,
        1.0,
        2.0,
    )
    .unwrap();
    let (l, n) = (t.l().to_string(), t.n().to_string());
    for format in ["json", "csv"] {
        let a = hawking(&[
            "measure", "--format", format, "--xi", "0.9", "--mass", "0.2", "--lambda", "1", "--nu",
            "2",
        ]);
        let b = hawking(&[
            "measure", "--format", format, "--xi", "0.9", "--l", &l, "--n", &n,
        ]);
        assert_eq!(stdout(&a), stdout(&b));
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &[
            "measure", "--xi", "1", "--mass", "1", "--lambda", "1", "--nu", "1", "--n", "0.1",
        ],
        &["measure", "--xi", "1", "--mass", "1"],
        &["measure", "--xi", "-1", "--l", "0", "--n", "0"],
        &["figure", "fig4"],
        &["critical-mass", "--lambda", "-1", "--nu", "1"],
        &["sweep", "--axis", "xi:1:0:3"],
        &["sweep"],
        &["bogus"],
        &[
            "measure",
            "--xi",
            "1",
            "--l",
            "0",
            "--n",
            "0",
            "--config",
            "/nonexistent/recipe.cfg",
        ],
    ];
    for args in cases {
        assert_eq!(hawking(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn degenerate_limit_exits_3() {
    // sinh l · sinh n = 1 exactly at l = n = asinh 1
    let l = 1.0_f64.asinh().to_string();
    let out = hawking(&["measure", "--xi", "inf", "--l", &l, "--n", &l]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unwritable_output_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("missing").join("out.csv");
    let out = hawking(&[
        "sweep",
        "--axis",
        "xi:0:1:3",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

fn data_rows(csv: &str) -> Vec<&str> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect()
}

#[test]
fn sweep_grid_shape_and_determinism() {
    let args = [
        "sweep",
        "--axis",
        "xi:0.1:1:3",
        "--axis",
        "mass:0.05:0.5:3:log",
        "--lambda",
        "1",
        "--nu",
        "2",
    ];
    let first = stdout(&hawking(&args));
    let second = stdout(&hawking(&args));
    assert_eq!(first, second);
    let mut lines = first.lines();
    assert!(lines.next().unwrap().starts_with("# hawking-cv"));
    assert_eq!(
        lines.next().unwrap(),
        "xi,mass,lambda,nu,l,n,s_kruskal,i_kruskal,tau_kruskal,tau_out,i_out,tau_1v3,tau_residual,tau_tri_upper,entangled_out"
    );
    let rows = data_rows(&first);
    assert_eq!(rows.len(), 9);
    // outer axis slowest
    let xi: Vec<&str> = rows.iter().map(|r| r.split(',').next().unwrap()).collect();
    assert_eq!(xi[0], xi[2]);
    assert_ne!(xi[2], xi[3]);
}

#[test]
fn csv_numbers_carry_twelve_significant_digits() {
    let csv = stdout(&hawking(&[
        "sweep",
        "--axis",
        "mass:0.1:1:4",
        "--xi",
        "0.7",
    ]));
    for row in data_rows(&csv) {
        for cell in row.split(',') {
            if matches!(cell, "true" | "false" | "inf" | "nan") {
                continue;
            }
            let mantissa = cell.split('e').next().unwrap();
            let digits = mantissa.chars().filter(char::is_ascii_digit).count();
            assert!(digits >= 12, "{cell}");
            assert!(!cell.contains(' ') && cell.parse::<f64>().is_ok(), "{cell}");
        }
    }
}

#[test]
fn infinite_sweep_documents_tokens() {
    let csv = stdout(&hawking(&[
        "sweep",
        "--xi",
        "inf",
        "--axis",
        "mass:0.05:1:5",
    ]));
    assert!(csv.lines().next().unwrap().contains("xi=inf"));
    for row in data_rows(&csv) {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[0], "inf");
        assert_eq!(cells[8], "inf");
        assert_eq!(cells[10], "nan");
        assert!(cells[9].parse::<f64>().is_ok());
    }
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn config_file_sits_between_flags_and_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("recipe.cfg");
    write(
        &cfg,
        "# recipe\nxi = 0.8\nmass = 0.3\nlambda = 1\nnu = 2\naxis = mass:0.1:0.5:2\n",
    );
    let cfg = cfg.to_str().unwrap();

    let from_cfg = stdout(&hawking(&["measure", "--config", cfg]));
    let explicit = stdout(&hawking(&[
        "measure", "--xi", "0.8", "--mass", "0.3", "--lambda", "1", "--nu", "2",
    ]));
    assert_eq!(from_cfg, explicit);

    let overridden = stdout(&hawking(&["measure", "--config", cfg, "--mass", "0.6"]));
    let direct = stdout(&hawking(&[
        "measure", "--xi", "0.8", "--mass", "0.6", "--lambda", "1", "--nu", "2",
    ]));
    assert_eq!(overridden, direct);

    let swept = stdout(&hawking(&["sweep", "--config", cfg]));
    assert_eq!(data_rows(&swept).len(), 2);
    let flag_axes = stdout(&hawking(&["sweep", "--config", cfg, "--axis", "xi:0:1:3"]));
    assert_eq!(data_rows(&flag_axes).len(), 3);

    let bad = dir.path().join("bad.cfg");
    write(&bad, "temperature = 3\n");
    assert_eq!(
        hawking(&["measure", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn critical_mass_values_and_scaling() {
    let equal = json(&["critical-mass", "--lambda", "1", "--nu", "1"]);
    assert!((num(&equal, "critical_mass") - 0.110_317_800_076).abs() < 1e-12);
    let mixed = json(&["critical-mass", "--lambda", "1", "--nu", "2"]);
    assert!((num(&mixed, "critical_mass") - 0.076_587_240_632_5).abs() < 1e-12);
    let scaled = json(&["critical-mass", "--lambda", "2", "--nu", "4"]);
    assert!((num(&scaled, "critical_mass") - num(&mixed, "critical_mass") / 2.0).abs() < 1e-12);
}

#[test]
fn figure_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let fig1a = dir.path().join("fig1a.csv");
    stdout(&hawking(&[
        "figure",
        "fig1a",
        "--out",
        fig1a.to_str().unwrap(),
    ]));
    let text = std::fs::read_to_string(&fig1a).unwrap();
    assert_eq!(data_rows(&text).len(), 3600);
    assert!(text.lines().next().unwrap().contains("figure=fig1a"));

    let inset = stdout(&hawking(&["figure", "fig1a-inset"]));
    assert_eq!(data_rows(&inset).len(), 8000);
    assert!(inset
        .lines()
        .nth(1)
        .unwrap()
        .ends_with("vanishing_expression,survives"));
}

#[test]
fn oracle_and_state_commands() {
    let table = stdout(&hawking(&["oracle", "--r", "0.5", "--d", "20,40"]));
    assert_eq!(data_rows(&table).len(), 2);
    let state = stdout(&hawking(&[
        "state", "--xi", "1", "--l", "0.5", "--n", "0.8",
    ]));
    let rows: Vec<&str> = state.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.split(',').count() == 8));
    let first: f64 = rows[0].split(',').next().unwrap().parse().unwrap();
    let (c, s) = (0.5_f64.cosh(), 0.5_f64.sinh());
    assert!((first - (c * c + 2.0_f64.cosh() * s * s)).abs() < 1e-12);
}
