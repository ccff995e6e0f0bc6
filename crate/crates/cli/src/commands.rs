//! Deterministic experiment drivers behind the CLI subcommands.

use num_complex::Complex64;
use thiserror::Error;

use lab_core::ball::{BallFunction, BallPoint, SpherePoint};
use lab_core::boundary::{approach_paths, cluster_estimate, orbit_paths_from_seeds, PathKind};
use lab_core::grid::BoundaryGrid;
use lab_core::outer::{cap_oscillator, halfcircle_separator, OuterFunction};
use lab_core::parts::{harnack_bracket, part_metric};
use lab_core::product::{build_product, convergence_table};
use lab_core::verify::{run_all, Assertion};
use lab_core::{orbit, LabError};

use crate::config::LabConfig;
use crate::report::{Report, Value};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{command}: {source}")]
    Lab {
        command: &'static str,
        #[source]
        source: LabError,
    },
}

fn ctx(command: &'static str) -> impl FnOnce(LabError) -> CommandError {
    move |source| CommandError::Lab { command, source }
}

/// The orbit of the origin toward 𝟏 under dyadic iterate exponents.
pub fn run_orbit(cfg: &LabConfig) -> Result<Report, CommandError> {
    let n = cfg.dimension;
    let start = BallPoint::origin(n);
    let exponents: Vec<i64> = (0..=10).map(|k| 1i64 << k).collect();
    let record = orbit(&start, &exponents).map_err(ctx("orbit"))?;

    let mut columns = vec!["j".to_string(), "distance_to_one".to_string()];
    for k in 0..n {
        columns.push(format!("z{}_re", k + 1));
        columns.push(format!("z{}_im", k + 1));
    }
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut report = Report::new("orbit", cfg, &column_refs);
    for ((j, point), dist) in record
        .exponents
        .iter()
        .zip(&record.points)
        .zip(&record.distances_to_one)
    {
        let mut row = vec![Value::Int(*j), Value::Number(*dist)];
        for c in point.coords() {
            row.push(Value::Number(c.re));
            row.push(Value::Number(c.im));
        }
        report.push_row(row);
    }

    let max_increase = record
        .distances_to_one
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::NEG_INFINITY, f64::max);
    report.assertions.push(Assertion::le(
        "max increase of distance to 1 along the orbit",
        max_increase,
        0.0,
    ));
    report.assertions.push(Assertion::le(
        "final distance to 1",
        *record.distances_to_one.last().expect("nonempty"),
        0.01,
    ));
    Ok(report)
}

/// The embedding-identity convergence table for λ = 0.5·e₁.
pub fn run_product(cfg: &LabConfig) -> Result<Report, CommandError> {
    let n = cfg.dimension;
    let product = build_product(n, cfg.truncation, cfg.working_radius);
    let lambda = BallPoint::scaled_basis(n, 0, 0.5).expect("interior seed");
    let table = convergence_table(&product, &lambda, 10).map_err(ctx("product"))?;

    let mut report = Report::new("product", cfg, &["k", "observed_error", "rate_bound"]);
    for row in &table.rows {
        report.push_row(vec![
            Value::Int(row.k as i64),
            Value::Number(row.observed_error),
            Value::Number(row.rate_bound),
        ]);
        report.assertions.push(Assertion::le(
            format!("observed error at k = {}", row.k),
            row.observed_error,
            row.rate_bound + table.truncation_bound,
        ));
    }
    Ok(report)
}

/// Cluster estimates: a polynomial with a continuous extension and the
/// product function's fiber values at 𝟏.
pub fn run_cluster(cfg: &LabConfig) -> Result<Report, CommandError> {
    let n = cfg.dimension;
    let eps = cfg.cluster_epsilon;
    let mut report = Report::new(
        "cluster",
        cfg,
        &["experiment", "kind", "path", "index", "re", "im"],
    );

    let coordinate = BallFunction::coordinate(n, 0);
    let e1 = SpherePoint::basis(n, 0);
    let mut paths = approach_paths(&e1, PathKind::Radial, 2, 1e-5).map_err(ctx("cluster"))?;
    paths.extend(approach_paths(&e1, PathKind::Tangential, 2, 1e-5).map_err(ctx("cluster"))?);
    let est = cluster_estimate(&coordinate, &e1, &paths, eps).map_err(ctx("cluster"))?;
    push_cluster_rows(&mut report, "z1 at e1", &est.values, &est.tails);
    report.assertions.push(Assertion::eq(
        "cluster count for z1 at e1",
        est.values.len() as f64,
        1.0,
    ));
    let dev = est
        .values
        .first()
        .map(|v| (v - Complex64::ONE).norm())
        .unwrap_or(f64::INFINITY);
    report
        .assertions
        .push(Assertion::le("deviation of the z1 cluster from 1", dev, eps));

    let product = build_product(n, cfg.truncation, cfg.working_radius);
    let f = product.to_ball_function();
    let one = SpherePoint::one(n);
    let seeds = vec![
        BallPoint::scaled_basis(n, 0, 0.3).expect("interior"),
        BallPoint::scaled_basis(n, 0, 0.6).expect("interior"),
    ];
    let orbit_paths = orbit_paths_from_seeds(&one, &seeds, 2e-4).map_err(ctx("cluster"))?;
    let est = cluster_estimate(&f, &one, &orbit_paths, eps).map_err(ctx("cluster"))?;
    push_cluster_rows(&mut report, "product at 1", &est.values, &est.tails);
    report.assertions.push(Assertion::ge(
        "distinct product cluster values",
        est.values.len() as f64,
        2.0,
    ));
    for target in [0.3, 0.6] {
        let nearest = est
            .values
            .iter()
            .map(|v| (v - Complex64::new(target, 0.0)).norm())
            .fold(f64::INFINITY, f64::min);
        report.assertions.push(Assertion::le(
            format!("nearest product cluster value to {target}"),
            nearest,
            1e-2,
        ));
    }
    Ok(report)
}

fn push_cluster_rows(
    report: &mut Report,
    experiment: &str,
    values: &[Complex64],
    tails: &[Vec<Complex64>],
) {
    for (i, v) in values.iter().enumerate() {
        report.push_row(vec![
            Value::Text(experiment.to_string()),
            Value::Text("value".to_string()),
            Value::Int(-1),
            Value::Int(i as i64),
            Value::Number(v.re),
            Value::Number(v.im),
        ]);
    }
    for (p, tail) in tails.iter().enumerate() {
        for (i, v) in tail.iter().enumerate() {
            report.push_row(vec![
                Value::Text(experiment.to_string()),
                Value::Text("tail".to_string()),
                Value::Int(p as i64),
                Value::Int(i as i64),
                Value::Number(v.re),
                Value::Number(v.im),
            ]);
        }
    }
}

/// Harnack brackets against the disc oracle and the part-metric matrix.
pub fn run_harnack(cfg: &LabConfig) -> Result<Report, CommandError> {
    let grid = BoundaryGrid::circle(cfg.circle_grid).map_err(ctx("harnack"))?;
    let mut report = Report::new(
        "harnack",
        cfg,
        &["record", "a", "b", "lower", "upper", "oracle"],
    );

    let origin = BallPoint::origin(1);
    for i in 1..=9usize {
        let r = i as f64 / 10.0;
        let oracle = (1.0 + r) / (1.0 - r);
        let mu = BallPoint::scaled_basis(1, 0, r).expect("interior");
        let est = harnack_bracket(&origin, &mu, &grid, 32);
        report.push_row(vec![
            Value::Text("bracket".to_string()),
            Value::Number(0.0),
            Value::Number(r),
            Value::Number(est.lower),
            Value::Number(est.upper),
            Value::Number(oracle),
        ]);
        report.assertions.push(Assertion::le(
            format!("bracket lower at r = {r}"),
            est.lower,
            oracle * (1.0 + 1e-12),
        ));
        report.assertions.push(Assertion::ge(
            format!("bracket upper at r = {r}"),
            est.upper,
            oracle * (1.0 - 1e-12),
        ));
        report.assertions.push(Assertion::le(
            format!("bracket upper accuracy at r = {r}"),
            est.upper / oracle,
            1.01,
        ));
        report.assertions.push(Assertion::ge(
            format!("bracket lower accuracy at r = {r}"),
            est.lower / oracle,
            0.9,
        ));
    }

    // part metric on a deterministic interior fan
    let points: Vec<BallPoint> = (0..12)
        .map(|i| {
            let r = 0.15 + 0.06 * i as f64;
            let theta = 0.7 * i as f64;
            BallPoint::new(vec![Complex64::from_polar(r, theta)]).expect("interior")
        })
        .collect();
    let metric = part_metric(&points, &grid, 32);
    for i in 0..points.len() {
        for j in 0..points.len() {
            report.push_row(vec![
                Value::Text("part_metric".to_string()),
                Value::Number(i as f64),
                Value::Number(j as f64),
                Value::Number(metric.log_upper[i][j]),
                Value::Number(metric.width_log[i][j]),
                Value::Number(0.0),
            ]);
        }
    }
    report.assertions.push(Assertion::le(
        "part-metric max relative asymmetry",
        metric.max_relative_asymmetry(),
        0.02,
    ));
    report.assertions.push(Assertion::eq(
        "part-metric triangle violations",
        metric.triangle_violations() as f64,
        0.0,
    ));
    Ok(report)
}

/// Outer-function modulus recovery table.
pub fn run_outer(cfg: &LabConfig) -> Result<Report, CommandError> {
    let mut report = Report::new(
        "outer",
        cfg,
        &["curve", "theta", "target", "observed", "relative_error"],
    );
    let separator = halfcircle_separator();
    let caps: Vec<(f64, f64)> = (0..4)
        .map(|j| (0.2 + 1.5 * j as f64, 0.7 + 1.5 * j as f64))
        .collect();
    let oscillator = cap_oscillator(&caps).map_err(ctx("outer"))?;

    let push_recovery = |report: &mut Report, name: &str, f: &OuterFunction, theta: f64, target: f64| {
        let observed = f.eval(Complex64::from_polar(0.999, theta)).norm();
        let rel = (observed - target).abs() / target;
        report.push_row(vec![
            Value::Text(name.to_string()),
            Value::Number(theta),
            Value::Number(target),
            Value::Number(observed),
            Value::Number(rel),
        ]);
        report.assertions.push(Assertion::le(
            format!("{name}: recovery at θ = {theta}"),
            rel,
            0.02,
        ));
    };
    push_recovery(&mut report, "separator", &separator, std::f64::consts::FRAC_PI_2, 1.0);
    push_recovery(
        &mut report,
        "separator",
        &separator,
        1.5 * std::f64::consts::PI,
        std::f64::consts::E,
    );
    for (j, &(a, b)) in caps.iter().enumerate() {
        let target = if j % 2 == 0 {
            std::f64::consts::E
        } else {
            1.0 / std::f64::consts::E
        };
        push_recovery(&mut report, "oscillator", &oscillator, 0.5 * (a + b), target);
    }

    for (name, f) in [("separator", &separator), ("oscillator", &oscillator)] {
        let center = f.eval(Complex64::ZERO).norm();
        let expected = f.modulus().log_mean().exp();
        report.push_row(vec![
            Value::Text(format!("{name} center")),
            Value::Number(0.0),
            Value::Number(expected),
            Value::Number(center),
            Value::Number((center - expected).abs()),
        ]);
        report.assertions.push(Assertion::le(
            format!("{name}: center identity defect"),
            (center - expected).abs(),
            1e-6,
        ));
    }
    Ok(report)
}

/// The full verification suite, one row per criterion.
pub fn run_verify(cfg: &LabConfig) -> Result<Report, CommandError> {
    let results = run_all(&cfg.to_verify_config());
    let mut report = Report::new("verify", cfg, &["criterion", "name", "passed"]);
    for c in &results {
        report.push_row(vec![
            Value::Int(c.index as i64),
            Value::Text(c.name.to_string()),
            Value::Bool(c.passed),
        ]);
        for a in &c.assertions {
            report.assertions.push(Assertion {
                label: format!("C{}: {}", c.index, a.label),
                lhs: a.lhs,
                relation: a.relation,
                rhs: a.rhs,
                pass: a.pass,
            });
        }
    }
    Ok(report)
}

/// Dispatches a named command.
pub fn run_command(name: &str, cfg: &LabConfig) -> Result<Report, CommandError> {
    match name {
        "orbit" => run_orbit(cfg),
        "product" => run_product(cfg),
        "cluster" => run_cluster(cfg),
        "harnack" => run_harnack(cfg),
        "outer" => run_outer(cfg),
        "verify" => run_verify(cfg),
        other => unreachable!("subcommand {other} is constrained by the parser"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_report_has_nine_rows_within_bounds() {
        let cfg = LabConfig::default();
        let report = run_product(&cfg).unwrap();
        assert_eq!(report.rows.len(), 9);
        assert!(report.all_pass());
    }

    #[test]
    fn orbit_report_converges() {
        let cfg = LabConfig::default();
        let report = run_orbit(&cfg).unwrap();
        assert_eq!(report.rows.len(), 11);
        assert!(report.all_pass());
    }

    #[test]
    fn cluster_report_passes() {
        let cfg = LabConfig::default();
        let report = run_cluster(&cfg).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn outer_report_passes() {
        let cfg = LabConfig::default();
        let report = run_outer(&cfg).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn harnack_report_passes() {
        let cfg = LabConfig::default();
        let report = run_harnack(&cfg).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn reports_are_byte_deterministic() {
        let cfg = LabConfig::default();
        let a = run_product(&cfg).unwrap().to_json();
        let b = run_product(&cfg).unwrap().to_json();
        assert_eq!(a, b);
    }
}
