//! The property- and oracle-based verification suite behind `lab verify`.
//!
//! Each criterion returns the numerical assertions it evaluated so reports
//! can carry both sides of every inequality. Wall-clock limits are asserted
//! by the acceptance test harness, not here, so that reports stay
//! byte-deterministic.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{iterate_first_coordinate, ParabolicMap};
use crate::ball::{euclidean_norm, BallFunction, BallPoint, SpherePoint};
use crate::boundary::{approach_paths, cluster_estimate, orbit_paths_from_seeds, PathKind};
use crate::grid::BoundaryGrid;
use crate::outer::{cap_oscillator, halfcircle_separator, OuterFunction};
use crate::parts::{
    dual_norm_estimate, harnack_bracket, part_dichotomy_suite, part_metric,
    representing_measures, transported_measure,
};
use crate::product::{build_product, convergence_table};

/// Configuration knobs the suite takes from the laboratory config.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub dimension: usize,
    pub truncation: u32,
    pub working_radius: f64,
    pub circle_grid: usize,
    pub sphere_grid: usize,
    pub cluster_epsilon: f64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            dimension: 2,
            truncation: 48,
            working_radius: 0.9,
            circle_grid: 4096,
            sphere_grid: 16384,
            cluster_epsilon: 1e-3,
            seed: 42,
        }
    }
}

/// Direction of a numerical assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "==",
        }
    }
}

/// A checked inequality with both sides recorded.
#[derive(Debug, Clone)]
pub struct Assertion {
    pub label: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub pass: bool,
}

impl Assertion {
    pub fn le(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self {
            label: label.into(),
            lhs,
            relation: Relation::Le,
            rhs,
            pass: lhs <= rhs,
        }
    }

    pub fn ge(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self {
            label: label.into(),
            lhs,
            relation: Relation::Ge,
            rhs,
            pass: lhs >= rhs,
        }
    }

    pub fn eq(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self {
            label: label.into(),
            lhs,
            relation: Relation::Eq,
            rhs,
            pass: lhs == rhs,
        }
    }
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
}

fn finish(index: usize, name: &'static str, assertions: Vec<Assertion>) -> CriterionResult {
    let passed = assertions.iter().all(|a| a.pass);
    CriterionResult {
        index,
        name,
        assertions,
        passed,
    }
}

fn random_interior(rng: &mut ChaCha8Rng, n: usize, max_norm: f64) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = euclidean_norm(&v);
        if norm < max_norm {
            return v;
        }
    }
}

fn vec_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Criterion 1: j-fold composition matches the closed-form iterate to
/// relative 1e-9 on seeded interior points in dimensions 1, 2, 3.
pub fn criterion_1(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    for n in 1..=3usize {
        let map = ParabolicMap::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(n as u64));
        let mut worst = 0.0f64;
        for _ in 0..1000 {
            let z = random_interior(&mut rng, n, 0.95);
            let mut composed = z.clone();
            for j in 1..=64i64 {
                composed = map.apply(&composed).expect("interior stays in the ball");
                let direct = map.iterate(&z, j).expect("interior input");
                let scale = euclidean_norm(&direct).max(1.0);
                worst = worst.max(vec_distance(&composed, &direct) / scale);
            }
        }
        assertions.push(Assertion::le(
            format!("max relative deviation, composition vs closed form (n={n})"),
            worst,
            1e-9,
        ));
    }
    finish(1, "iterate-law", assertions)
}

/// Criterion 2: the map preserves the interior and the sphere, moves every
/// grid point off a 0.05-cap at 𝟏 by more than 1e-3, and moves -𝟏 by at
/// least 0.1.
pub fn criterion_2(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let map = ParabolicMap::new(2);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(100));
    let mut max_interior_norm = 0.0f64;
    for _ in 0..1000 {
        let z = random_interior(&mut rng, 2, 0.95);
        for j in [-64i64, -13, -1, 1, 17, 64] {
            let out = map.iterate(&z, j).expect("interior input");
            max_interior_norm = max_interior_norm.max(euclidean_norm(&out));
        }
    }
    assertions.push(Assertion::le(
        "max norm of iterates of interior points".to_string(),
        max_interior_norm,
        1.0 - 1e-9,
    ));

    let grid = BoundaryGrid::sphere_c2(cfg.sphere_grid.max(10_000)).expect("supported dimension");
    let one = SpherePoint::one(2);
    let mut max_sphere_defect = 0.0f64;
    let mut min_displacement = f64::INFINITY;
    for node in grid.nodes() {
        let image = map.apply(node.coords()).expect("sphere point");
        max_sphere_defect = max_sphere_defect.max((euclidean_norm(&image) - 1.0).abs());
        if one.distance_to(node.coords()) > 0.05 {
            min_displacement = min_displacement.min(vec_distance(&image, node.coords()));
        }
    }
    assertions.push(Assertion::le(
        "max | |L(ζ)| - 1 | over the sphere grid".to_string(),
        max_sphere_defect,
        1e-9,
    ));
    assertions.push(Assertion::ge(
        "min |L(ζ) - ζ| off the 0.05-cap at 1".to_string(),
        min_displacement,
        1e-3,
    ));

    let minus_one = vec![-Complex64::ONE, Complex64::ZERO];
    let image = map.apply(&minus_one).expect("sphere point");
    assertions.push(Assertion::ge(
        "displacement of -1".to_string(),
        vec_distance(&image, &minus_one),
        0.1,
    ));
    finish(2, "self-map-fixed-point", assertions)
}

/// Criterion 3: the factor bound, certified boundedness, and Cauchy
/// differences of the truncated product on 500 points of the 0.9-ball.
pub fn criterion_3(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let n = cfg.dimension;
    let product = build_product(n, cfg.truncation, 0.9);
    let k_const = product.tail_constant().k;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(300));

    let mut max_factor_ratio = 0.0f64;
    let mut max_modulus = 0.0f64;
    let mut max_cauchy_excess = f64::NEG_INFINITY;
    let cauchy_bound = product.tail_bound_at(cfg.truncation) + 1e-15;
    for _ in 0..500 {
        let z = random_interior(&mut rng, n, 0.9);
        for j in 0..=cfg.truncation {
            let exp = 2.0f64.powi(j as i32);
            let dev = (iterate_first_coordinate(z[0], -exp) - Complex64::ONE).norm();
            max_factor_ratio = max_factor_ratio.max(dev * exp / k_const);
        }
        max_modulus = max_modulus.max(product.eval_truncated(&z).norm());
        let a = product.eval_truncated_at(&z, cfg.truncation);
        let b = product.eval_truncated_at(&z, cfg.truncation + 8);
        max_cauchy_excess = max_cauchy_excess.max((a - b).norm());
    }
    assertions.push(Assertion::le(
        "max of |⟨L^{-2^j}(λ),e1⟩ - 1| · 2^j / K".to_string(),
        max_factor_ratio,
        1.0,
    ));
    assertions.push(Assertion::le(
        "max |f| over the 0.9-ball sample".to_string(),
        max_modulus,
        1.0 + product.tail_bound(),
    ));
    assertions.push(Assertion::le(
        "max Cauchy difference between truncations N and N+8".to_string(),
        max_cauchy_excess,
        cauchy_bound,
    ));
    finish(3, "certified-product", assertions)
}

/// Criterion 4: the embedding-identity table respects the stated rate on
/// every row, and the observed errors decay by at least 1.8x per unit k on
/// average over k = 4..10.
pub fn criterion_4(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let product = build_product(2, cfg.truncation.max(26), cfg.working_radius);
    let seeds: Vec<(&str, BallPoint)> = vec![
        ("0.5e1", BallPoint::scaled_basis(2, 0, 0.5).expect("interior")),
        (
            "0.3e1+0.4e2",
            BallPoint::new(vec![Complex64::new(0.3, 0.0), Complex64::new(0.4, 0.0)])
                .expect("interior"),
        ),
        ("0.5e2", BallPoint::scaled_basis(2, 1, 0.5).expect("interior")),
    ];
    for (name, lambda) in &seeds {
        let table = convergence_table(&product, lambda, 10).expect("valid table");
        let mut max_excess = f64::NEG_INFINITY;
        for row in &table.rows {
            max_excess =
                max_excess.max(row.observed_error - row.rate_bound - table.truncation_bound);
        }
        assertions.push(Assertion::le(
            format!("max row excess over rate bound (λ = {name})"),
            max_excess,
            0.0,
        ));
        let err4 = table.rows.iter().find(|r| r.k == 4).expect("row k=4").observed_error;
        let err10 = table
            .rows
            .iter()
            .find(|r| r.k == 10)
            .expect("row k=10")
            .observed_error;
        if err4 <= 1e-14 {
            assertions.push(Assertion::le(
                format!("identically vanishing errors (λ = {name})"),
                err4,
                1e-14,
            ));
        } else {
            let mean_ratio = (err4 / err10).powf(1.0 / 6.0);
            assertions.push(Assertion::ge(
                format!("average error decay per unit k over k = 4..10 (λ = {name})"),
                mean_ratio,
                1.8,
            ));
        }
    }
    finish(4, "embedding-rate", assertions)
}

/// Criterion 5: singleton clusters for polynomials, two well-separated
/// cluster values for the product function at 𝟏.
pub fn criterion_5(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let eps = cfg.cluster_epsilon;

    // polynomial probes with continuous extensions
    let polys: Vec<(&str, BallFunction, SpherePoint)> = vec![
        (
            "z1 at e1",
            BallFunction::coordinate(2, 0),
            SpherePoint::basis(2, 0),
        ),
        (
            "z1^2 + z2/2 at a generic target",
            BallFunction::new(2, |z| z[0] * z[0] + 0.5 * z[1]).with_sup_bound(1.5),
            SpherePoint::normalized(vec![
                Complex64::new(0.6, 0.3),
                Complex64::new(0.2, -0.5),
            ])
            .expect("nonzero"),
        ),
    ];
    for (name, f, alpha) in &polys {
        let mut paths = approach_paths(alpha, PathKind::Radial, 2, 1e-5).expect("paths");
        paths.extend(approach_paths(alpha, PathKind::Tangential, 2, 1e-5).expect("paths"));
        let est = cluster_estimate(f, alpha, &paths, eps).expect("nonempty paths");
        assertions.push(Assertion::eq(
            format!("cluster count ({name})"),
            est.values.len() as f64,
            1.0,
        ));
        let expected = f.eval(alpha.coords());
        let dev = est
            .values
            .first()
            .map(|v| (v - expected).norm())
            .unwrap_or(f64::INFINITY);
        assertions.push(Assertion::le(
            format!("cluster deviation from boundary value ({name})"),
            dev,
            eps,
        ));
    }

    // the product function's fiber values at 1
    let product = build_product(2, cfg.truncation, cfg.working_radius);
    let f = product.to_ball_function();
    let one = SpherePoint::one(2);
    let seeds = vec![
        BallPoint::scaled_basis(2, 0, 0.3).expect("interior"),
        BallPoint::scaled_basis(2, 0, 0.6).expect("interior"),
    ];
    let paths = orbit_paths_from_seeds(&one, &seeds, 2e-4).expect("orbit paths");
    let est = cluster_estimate(&f, &one, &paths, eps).expect("nonempty paths");
    assertions.push(Assertion::ge(
        "distinct product cluster values at 1".to_string(),
        est.values.len() as f64,
        2.0,
    ));
    for target in [0.3, 0.6] {
        let dev = est
            .values
            .iter()
            .map(|v| (v - Complex64::new(target, 0.0)).norm())
            .fold(f64::INFINITY, f64::min);
        assertions.push(Assertion::le(
            format!("nearest cluster value to {target}"),
            dev,
            1e-2,
        ));
    }
    let max_dev = est
        .values
        .iter()
        .map(|v| {
            [0.3, 0.6]
                .iter()
                .map(|t| (v - Complex64::new(*t, 0.0)).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    assertions.push(Assertion::le(
        "max distance of any cluster value to its target".to_string(),
        max_dev,
        1e-2,
    ));
    finish(5, "cluster-sets", assertions)
}

/// Criterion 6: the center identity, near-boundary modulus recovery for
/// the separator and a 4-cap oscillator, and zero-freeness on a disc
/// sample.
pub fn criterion_6(_cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let separator = halfcircle_separator();
    let caps: Vec<(f64, f64)> = (0..4)
        .map(|j| (0.2 + 1.5 * j as f64, 0.7 + 1.5 * j as f64))
        .collect();
    let oscillator = cap_oscillator(&caps).expect("disjoint caps");

    let center_defect = |f: &OuterFunction| {
        (f.eval(Complex64::ZERO).norm() - f.modulus().log_mean().exp()).abs()
    };
    assertions.push(Assertion::le(
        "center identity defect (separator)".to_string(),
        center_defect(&separator),
        1e-6,
    ));
    assertions.push(Assertion::le(
        "center identity defect (oscillator)".to_string(),
        center_defect(&oscillator),
        1e-6,
    ));

    let mut max_rel = 0.0f64;
    for (theta, target) in [
        (std::f64::consts::FRAC_PI_2, 1.0),
        (1.5 * std::f64::consts::PI, std::f64::consts::E),
    ] {
        let v = separator.eval(Complex64::from_polar(0.999, theta)).norm();
        max_rel = max_rel.max((v - target).abs() / target);
    }
    for (j, &(a, b)) in caps.iter().enumerate() {
        let target = if j % 2 == 0 {
            std::f64::consts::E
        } else {
            1.0 / std::f64::consts::E
        };
        let v = oscillator
            .eval(Complex64::from_polar(0.999, 0.5 * (a + b)))
            .norm();
        max_rel = max_rel.max((v - target).abs() / target);
    }
    assertions.push(Assertion::le(
        "max relative recovery error at arc midpoints (0.999 dilation)".to_string(),
        max_rel,
        0.02,
    ));

    let mut min_modulus = f64::INFINITY;
    for ir in 0..100 {
        let r = 0.999 * (ir as f64 + 0.5) / 100.0;
        for ia in 0..100 {
            let w = Complex64::from_polar(r, std::f64::consts::TAU * ia as f64 / 100.0);
            min_modulus = min_modulus.min(separator.eval(w).norm());
            min_modulus = min_modulus.min(oscillator.eval(w).norm());
        }
    }
    assertions.push(Assertion::ge(
        "min |F| over a 10^4-point disc sample".to_string(),
        min_modulus,
        1e-9,
    ));
    finish(6, "outer-recovery", assertions)
}

/// Criterion 7: the n = 1 bracket contains the closed-form constant with
/// the stated upper/lower accuracy, and n = 2 brackets are finite and
/// ordered.
pub fn criterion_7(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let grid = BoundaryGrid::circle(cfg.circle_grid).expect("circle grid");
    let origin = BallPoint::origin(1);

    let mut worst_upper_rel = 0.0f64;
    let mut worst_lower_rel = f64::INFINITY;
    let mut contains_all = true;
    for i in 1..=9usize {
        let r = i as f64 / 10.0;
        let oracle = (1.0 + r) / (1.0 - r);
        let mu = BallPoint::scaled_basis(1, 0, r).expect("interior");
        let est = harnack_bracket(&origin, &mu, &grid, 32);
        contains_all &= est.lower <= oracle * (1.0 + 1e-12) && oracle <= est.upper * (1.0 + 1e-12);
        worst_upper_rel = worst_upper_rel.max(est.upper / oracle);
        worst_lower_rel = worst_lower_rel.min(est.lower / oracle);
    }
    assertions.push(Assertion::eq(
        "brackets containing (1+r)/(1-r) for r = 0.1..0.9".to_string(),
        contains_all as u8 as f64,
        1.0,
    ));
    assertions.push(Assertion::le(
        "max upper/oracle over r".to_string(),
        worst_upper_rel,
        1.01,
    ));
    assertions.push(Assertion::ge(
        "min lower/oracle over r".to_string(),
        worst_lower_rel,
        0.9,
    ));

    let sphere = BoundaryGrid::sphere_c2(cfg.sphere_grid).expect("supported dimension");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(700));
    let mut finite_ordered = 0usize;
    for _ in 0..5 {
        let a = BallPoint::new(random_interior(&mut rng, 2, 0.8)).expect("interior");
        let b = BallPoint::new(random_interior(&mut rng, 2, 0.8)).expect("interior");
        let est = harnack_bracket(&a, &b, &sphere, 16);
        if est.upper.is_finite() && est.lower >= 1.0 - 1e-12 && est.lower <= est.upper + 1e-12 {
            finite_ordered += 1;
        }
    }
    assertions.push(Assertion::eq(
        "finite ordered brackets on random n=2 pairs".to_string(),
        finite_ordered as f64,
        5.0,
    ));
    finish(7, "harnack-bracket", assertions)
}

/// Criterion 8: the part-metric axioms on 20 seeded disc points.
pub fn criterion_8(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let grid = BoundaryGrid::circle(cfg.circle_grid).expect("circle grid");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(800));
    let points: Vec<BallPoint> = (0..20)
        .map(|_| BallPoint::new(random_interior(&mut rng, 1, 0.9)).expect("interior"))
        .collect();
    let metric = part_metric(&points, &grid, 32);

    let max_diag = (0..20)
        .map(|i| metric.log_upper[i][i].abs())
        .fold(0.0, f64::max);
    assertions.push(Assertion::le("max |diagonal| entry".to_string(), max_diag, 0.0));
    assertions.push(Assertion::le(
        "max relative asymmetry".to_string(),
        metric.max_relative_asymmetry(),
        0.02,
    ));
    assertions.push(Assertion::eq(
        "triangle-inequality violations within bracket slack".to_string(),
        metric.triangle_violations() as f64,
        0.0,
    ));
    finish(8, "part-metric-axioms", assertions)
}

/// Criterion 9: representing measures for (0, 1/2) with b = 3 on the
/// 4096-node circle.
pub fn criterion_9(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let grid = BoundaryGrid::circle(cfg.circle_grid).expect("circle grid");
    let origin = BallPoint::origin(1);
    let half = BallPoint::scaled_basis(1, 0, 0.5).expect("interior");
    let pair = representing_measures(&origin, &half, &grid, 3.0).expect("b = 3 dominates");

    let (m_mass, n_mass) = pair.masses();
    assertions.push(Assertion::le(
        "max probability-mass defect".to_string(),
        (m_mass - 1.0).abs().max((n_mass - 1.0).abs()),
        1e-10,
    ));
    let (lo, hi) = pair.rn_ratio_range();
    assertions.push(Assertion::ge(
        "min Radon-Nikodym ratio".to_string(),
        lo,
        (1.0 / 3.0) * (1.0 - 1e-12),
    ));
    assertions.push(Assertion::le(
        "max Radon-Nikodym ratio".to_string(),
        hi,
        3.0 * (1.0 + 1e-12),
    ));

    let mut max_dev = 0.0f64;
    for (density, point) in [(&pair.density_mu, &origin), (&pair.density_nu, &half)] {
        for ell in 0..=8u32 {
            let moment: Complex64 = grid
                .iter()
                .zip(density.iter())
                .map(|((node, w), d)| node.coords()[0].powu(ell) * (w * d))
                .sum();
            let expected = point.coords()[0].powu(ell);
            max_dev = max_dev.max((moment - expected).norm());
        }
    }
    assertions.push(Assertion::le(
        "max harmonic-polynomial representation defect (degree ≤ 8)".to_string(),
        max_dev,
        1e-6,
    ));

    let uniform = vec![1.0; grid.len()];
    match transported_measure(&uniform, &pair) {
        Ok(out) => {
            let min_out = out.iter().copied().fold(f64::INFINITY, f64::min);
            assertions.push(Assertion::ge(
                "min transported density".to_string(),
                min_out,
                0.0,
            ));
            let max_rn = uniform
                .iter()
                .zip(&out)
                .filter(|(_, o)| **o > 0.0)
                .map(|(e, o)| e / o)
                .fold(0.0, f64::max);
            assertions.push(Assertion::le(
                "max dη/d(transported) ratio".to_string(),
                max_rn,
                3.0 * (1.0 + 1e-12),
            ));
        }
        Err(_) => {
            assertions.push(Assertion::eq(
                "transported measure construction succeeded".to_string(),
                0.0,
                1.0,
            ));
        }
    }
    finish(9, "representing-measures", assertions)
}

/// Criterion 10: dual-norm monotonicity, bounds and the peaking-family
/// dichotomy on interior pairs.
pub fn criterion_10(cfg: &VerifyConfig) -> CriterionResult {
    let mut assertions = Vec::new();
    let origin = BallPoint::origin(1);
    let radii = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];
    let estimates: Vec<f64> = radii
        .iter()
        .map(|r| {
            let mu = BallPoint::scaled_basis(1, 0, *r).expect("interior");
            dual_norm_estimate(&origin, &mu, 256)
        })
        .collect();

    let max_decrease = estimates
        .windows(2)
        .map(|w| w[0] - w[1])
        .fold(f64::NEG_INFINITY, f64::max);
    assertions.push(Assertion::le(
        "max decrease along increasing r (monotonicity)".to_string(),
        max_decrease,
        1e-12,
    ));
    let max_est = estimates.iter().copied().fold(0.0, f64::max);
    assertions.push(Assertion::le("max estimate".to_string(), max_est, 2.0));
    let min_margin = radii
        .iter()
        .zip(&estimates)
        .map(|(r, e)| e - r)
        .fold(f64::INFINITY, f64::min);
    assertions.push(Assertion::ge(
        "min margin over the coordinate witness".to_string(),
        min_margin,
        0.0,
    ));
    assertions.push(Assertion::ge(
        "estimate at r = 0.99".to_string(),
        *estimates.last().expect("nonempty"),
        1.7,
    ));

    let circle = BoundaryGrid::circle(1024).expect("circle grid");
    let sphere = BoundaryGrid::sphere_c2(4096).expect("supported dimension");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1000));
    let mut pairs_n1: Vec<(BallPoint, BallPoint)> = (0..5)
        .map(|_| {
            (
                BallPoint::new(random_interior(&mut rng, 1, 0.9)).expect("interior"),
                BallPoint::new(random_interior(&mut rng, 1, 0.9)).expect("interior"),
            )
        })
        .collect();
    pairs_n1.push((
        BallPoint::origin(1),
        BallPoint::scaled_basis(1, 0, 0.99).expect("interior"),
    ));
    let pairs_n2: Vec<(BallPoint, BallPoint)> = (0..5)
        .map(|_| {
            (
                BallPoint::new(random_interior(&mut rng, 2, 0.9)).expect("interior"),
                BallPoint::new(random_interior(&mut rng, 2, 0.9)).expect("interior"),
            )
        })
        .collect();

    let mut consistent = 0usize;
    let mut total = 0usize;
    for row in part_dichotomy_suite(&pairs_n1, 12, &circle) {
        total += 1;
        if row.consistent && row.converged_lambda && row.converged_mu {
            consistent += 1;
        }
    }
    for row in part_dichotomy_suite(&pairs_n2, 12, &sphere) {
        total += 1;
        if row.consistent && row.converged_lambda && row.converged_mu {
            consistent += 1;
        }
    }
    assertions.push(Assertion::eq(
        "consistent peaking-dichotomy rows".to_string(),
        consistent as f64,
        total as f64,
    ));
    finish(10, "part-dichotomy", assertions)
}

/// Runs the ten computational criteria in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    vec![
        criterion_1(cfg),
        criterion_2(cfg),
        criterion_3(cfg),
        criterion_4(cfg),
        criterion_5(cfg),
        criterion_6(cfg),
        criterion_7(cfg),
        criterion_8(cfg),
        criterion_9(cfg),
        criterion_10(cfg),
    ]
}
