//! Approach paths to boundary points, cluster-set estimation, the
//! continuity dichotomy, peak functions, zero-approach search, and
//! boundary-grid sup-norm estimates.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::automorphism::ParabolicMap;
use crate::ball::{
    hermitian_inner, unitary_moving, BallFunction, BallPoint, SpherePoint, TOL_BOUNDARY,
};
use crate::error::{LabError, Result};
use crate::grid::BoundaryGrid;

/// How a path approaches its boundary target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Radial,
    Orbit,
    Tangential,
    Custom,
}

/// A finite interior path approaching a boundary point, with nonincreasing
/// distances to the target.
#[derive(Debug, Clone)]
pub struct ApproachPath {
    pub target: SpherePoint,
    pub kind: PathKind,
    pub points: Vec<BallPoint>,
}

impl ApproachPath {
    /// Validates interiority, monotone distances, and the final resolution.
    pub fn new(
        target: SpherePoint,
        kind: PathKind,
        points: Vec<BallPoint>,
        resolution: f64,
    ) -> Self {
        assert!(!points.is_empty(), "an approach path needs at least one point");
        let mut last = f64::INFINITY;
        for p in &points {
            let d = target.distance_to(p.coords());
            assert!(
                d <= last + 1e-15,
                "approach-path distances must be nonincreasing"
            );
            last = d;
        }
        assert!(
            last <= resolution,
            "final distance {last} exceeds the path resolution {resolution}"
        );
        Self { target, kind, points }
    }

    pub fn final_distance(&self) -> f64 {
        self.target
            .distance_to(self.points.last().expect("nonempty").coords())
    }

    /// The trailing quarter of the path (at least one point).
    pub fn tail(&self) -> &[BallPoint] {
        let n = self.points.len();
        let take = n.div_ceil(4);
        &self.points[n - take..]
    }
}

fn radial_path(alpha: &SpherePoint, index: usize, resolution: f64) -> ApproachPath {
    let scale = 1.0 / (index as f64 + 1.0);
    let mut points = Vec::new();
    let mut k = 1;
    loop {
        let gap = 0.5f64.powi(k) * scale;
        if gap < 1e-8 {
            break;
        }
        let r = 1.0 - gap;
        let coords: Vec<Complex64> = alpha.coords().iter().map(|c| c * r).collect();
        points.push(BallPoint::new(coords).expect("radial points are interior"));
        if gap <= resolution {
            break;
        }
        k += 1;
    }
    ApproachPath::new(alpha.clone(), PathKind::Radial, points, resolution.max(1e-8))
}

/// A unit vector orthogonal to α (dimension ≥ 2).
fn orthogonal_direction(alpha: &SpherePoint) -> Vec<Complex64> {
    let n = alpha.dimension();
    // start from the basis vector least aligned with α
    let (k, _) = alpha
        .coords()
        .iter()
        .enumerate()
        .map(|(k, c)| (k, c.norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty");
    let mut v = vec![Complex64::ZERO; n];
    v[k] = Complex64::ONE;
    let overlap = hermitian_inner(&v, alpha.coords()).expect("same dimension");
    for (vi, ai) in v.iter_mut().zip(alpha.coords()) {
        *vi -= overlap * ai;
    }
    let norm = crate::ball::euclidean_norm(&v);
    v.into_iter().map(|c| c / norm).collect()
}

fn tangential_path(alpha: &SpherePoint, index: usize, resolution: f64) -> ApproachPath {
    let n = alpha.dimension();
    let tau = if n >= 2 {
        Some(orthogonal_direction(alpha))
    } else {
        None
    };
    let mut points = Vec::new();
    let mut k = 1;
    loop {
        // tangential displacement 2^{-k}, radial depth theta^{4/3}: the
        // approach direction turns into the tangent plane while the
        // interior margin stays polynomial in the distance
        let theta = 0.5f64.powi(k);
        let delta = theta.powf(4.0 / 3.0);
        if theta < 1e-7 {
            break;
        }
        let coords: Vec<Complex64> = match &tau {
            Some(t) => {
                let phase = Complex64::from_polar(theta, index as f64);
                alpha
                    .coords()
                    .iter()
                    .zip(t)
                    .map(|(a, ti)| a * (1.0 - delta) + ti * phase)
                    .collect()
            }
            None => {
                // angular approach along the circle
                let sign = if index % 2 == 0 { 1.0 } else { -1.0 };
                let rot = Complex64::from_polar(1.0 - delta, sign * theta);
                alpha.coords().iter().map(|c| c * rot).collect()
            }
        };
        let point = BallPoint::new(coords).expect("tangential points are interior");
        let dist = alpha.distance_to(point.coords());
        points.push(point);
        if dist <= resolution {
            break;
        }
        k += 1;
    }
    ApproachPath::new(alpha.clone(), PathKind::Tangential, points, resolution.max(1e-6))
}

/// Orbit paths L^{2^k}(seed) toward 𝟏, transported by a unitary when the
/// target is a different boundary point.
pub fn orbit_paths_from_seeds(
    alpha: &SpherePoint,
    seeds: &[BallPoint],
    resolution: f64,
) -> Result<Vec<ApproachPath>> {
    let n = alpha.dimension();
    let one = SpherePoint::one(n);
    let transport = if one.distance_to(alpha.coords()) < TOL_BOUNDARY {
        None
    } else {
        Some(unitary_moving(&one, alpha)?)
    };
    let map = ParabolicMap::new(n);
    let mut paths = Vec::with_capacity(seeds.len());
    for seed in seeds {
        let mut points = Vec::new();
        let mut last = f64::INFINITY;
        for k in 0..=45u32 {
            let coords = map.iterate(seed.coords(), 1i64 << k)?;
            let coords = match &transport {
                Some(sigma) => sigma.apply(&coords),
                None => coords,
            };
            let d = alpha.distance_to(&coords);
            if d > last {
                continue;
            }
            // the orbit's interior margin decays like the squared distance
            // to 1, so stop once the strict-interior tolerance is at risk
            let point = match BallPoint::new(coords) {
                Ok(p) => p,
                Err(_) => break,
            };
            last = d;
            points.push(point);
            if d <= resolution {
                break;
            }
        }
        paths.push(ApproachPath::new(
            alpha.clone(),
            PathKind::Orbit,
            points,
            resolution.max(last),
        ));
    }
    Ok(paths)
}

fn default_orbit_seeds(n: usize) -> Vec<BallPoint> {
    vec![
        BallPoint::scaled_basis(n, 0, 0.3).expect("interior"),
        BallPoint::scaled_basis(n, 0, 0.6).expect("interior"),
    ]
}

/// Builds `m` approach paths of the requested kind toward α.
pub fn approach_paths(
    alpha: &SpherePoint,
    kind: PathKind,
    m: usize,
    resolution: f64,
) -> Result<Vec<ApproachPath>> {
    assert!(m >= 1);
    assert!(resolution > 0.0);
    match kind {
        PathKind::Radial => Ok((0..m).map(|i| radial_path(alpha, i, resolution)).collect()),
        PathKind::Tangential => Ok((0..m)
            .map(|i| tangential_path(alpha, i, resolution))
            .collect()),
        PathKind::Orbit => {
            let n = alpha.dimension();
            let seeds: Vec<BallPoint> = (0..m)
                .map(|i| {
                    let t = 0.3 + 0.4 * i as f64 / m.max(2).saturating_sub(1) as f64;
                    BallPoint::scaled_basis(n, 0, t).expect("interior")
                })
                .collect();
            orbit_paths_from_seeds(alpha, &seeds, resolution)
        }
        PathKind::Custom => Ok(Vec::new()),
    }
}

/// An ε-net of limiting values of a function along approach paths.
#[derive(Debug, Clone)]
pub struct ClusterEstimate {
    pub target: SpherePoint,
    pub values: Vec<Complex64>,
    pub epsilon: f64,
    pub paths_used: Vec<ApproachPath>,
    /// Tail values per path, in path order.
    pub tails: Vec<Vec<Complex64>>,
}

/// Collects tail values of `f` along each path and agglomerates them into
/// an ε-net (first-representative rule, deterministic in path order).
pub fn cluster_estimate(
    f: &BallFunction,
    alpha: &SpherePoint,
    paths: &[ApproachPath],
    epsilon: f64,
) -> Result<ClusterEstimate> {
    if paths.is_empty() {
        return Err(LabError::EmptyPaths);
    }
    assert!(epsilon > 0.0);
    let mut tails = Vec::with_capacity(paths.len());
    let mut reps: Vec<Complex64> = Vec::new();
    for path in paths {
        let tail: Vec<Complex64> = path.tail().iter().map(|p| f.eval_ball(p)).collect();
        for &v in &tail {
            if !reps.iter().any(|r| (r - v).norm() <= epsilon) {
                reps.push(v);
            }
        }
        tails.push(tail);
    }
    reps.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(ClusterEstimate {
        target: alpha.clone(),
        values: reps,
        epsilon,
        paths_used: paths.to_vec(),
        tails,
    })
}

/// Outcome of probing whether a function extends continuously to α.
#[derive(Debug, Clone)]
pub enum ContinuityProbe {
    /// All standard path families agree on a limit.
    SingleValue(Complex64),
    /// Two paths with separated tail values.
    Oscillation {
        path_a: ApproachPath,
        path_b: ApproachPath,
        value_a: Complex64,
        value_b: Complex64,
    },
}

/// Probes the continuity dichotomy: a single fiber value iff the standard
/// path families (radial, tangential, orbit) agree within `tol`.
pub fn continuity_probe(
    f: &BallFunction,
    alpha: &SpherePoint,
    tol: f64,
) -> Result<ContinuityProbe> {
    let resolution = 1e-5;
    let mut paths = approach_paths(alpha, PathKind::Radial, 2, resolution)?;
    paths.extend(approach_paths(alpha, PathKind::Tangential, 2, resolution)?);
    paths.extend(orbit_paths_from_seeds(
        alpha,
        &default_orbit_seeds(alpha.dimension()),
        2e-4,
    )?);

    let tail_means: Vec<Complex64> = paths
        .iter()
        .map(|p| {
            let tail = p.tail();
            tail.iter().map(|q| f.eval_ball(q)).sum::<Complex64>() / tail.len() as f64
        })
        .collect();

    let mut worst = (0usize, 0usize, 0.0f64);
    for i in 0..tail_means.len() {
        for j in i + 1..tail_means.len() {
            let sep = (tail_means[i] - tail_means[j]).norm();
            if sep > worst.2 {
                worst = (i, j, sep);
            }
        }
    }
    if worst.2 <= tol {
        let mean = tail_means.iter().sum::<Complex64>() / tail_means.len() as f64;
        Ok(ContinuityProbe::SingleValue(mean))
    } else {
        Ok(ContinuityProbe::Oscillation {
            path_a: paths[worst.0].clone(),
            path_b: paths[worst.1].clone(),
            value_a: tail_means[worst.0],
            value_b: tail_means[worst.1],
        })
    }
}

/// The peak function g(z) = (1 + ⟨z, α⟩)/2: g(α) = 1 and |g| < 1 on the
/// rest of the closed ball.
pub fn peak_function(alpha: &SpherePoint) -> BallFunction {
    let a = alpha.coords().to_vec();
    BallFunction::new(alpha.dimension(), move |z| {
        (Complex64::ONE + hermitian_inner(z, &a).expect("matching dimensions")) * 0.5
    })
    .with_sup_bound(1.0)
}

/// Outcome of searching for a zero-approach sequence at α.
#[derive(Debug, Clone)]
pub enum ZeroApproachOutcome {
    /// A path along which |f| falls below δ at every scale.
    Sequence(ApproachPath),
    /// |f| ≥ δ at every sampled point of the shrinking neighborhoods.
    Certificate {
        delta: f64,
        samples: usize,
        min_observed: f64,
    },
    /// Mixed evidence within the sampling budget.
    Inconclusive {
        scales_below: usize,
        scales_total: usize,
    },
}

/// Minimizes |f| over shrinking interior neighborhoods of α.
///
/// The k-th neighborhood is sampled by a shell of probes at scale 2^{-k};
/// since the neighborhoods nest, the infimum estimate for scale k is the
/// minimum over all shells at scale ≥ k. A sequence is returned when that
/// estimate falls below δ at every scale, a certificate when no sampled
/// point goes below δ, and an explicit inconclusive status otherwise.
pub fn zero_approach_search(
    f: &BallFunction,
    alpha: &SpherePoint,
    delta: f64,
    budget: usize,
) -> ZeroApproachOutcome {
    assert!(delta > 0.0);
    let n = alpha.dimension();
    let scales = budget.clamp(4, 26);
    let tau = if n >= 2 {
        Some(orthogonal_direction(alpha))
    } else {
        None
    };

    let mut shell_minima: Vec<(f64, BallPoint)> = Vec::new();
    let mut samples = 0usize;
    for k in 1..=scales {
        let s = 0.5f64.powi(k as i32);
        let mut best: Option<(f64, BallPoint)> = None;
        let mut consider = |coords: Vec<Complex64>| {
            if let Ok(p) = BallPoint::new(coords) {
                let v = f.eval_ball(&p).norm();
                samples += 1;
                if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
                    best = Some((v, p));
                }
            }
        };
        // radial probes at depth s and s/2
        for depth in [s, 0.5 * s] {
            consider(alpha.coords().iter().map(|c| c * (1.0 - depth)).collect());
        }
        // ring of non-radial probes at the same scale
        for phase in 0..8 {
            let angle = std::f64::consts::TAU * phase as f64 / 8.0;
            let coords: Vec<Complex64> = match &tau {
                Some(t) => {
                    let offset = Complex64::from_polar(0.5 * s, angle);
                    alpha
                        .coords()
                        .iter()
                        .zip(t)
                        .map(|(a, ti)| a * (1.0 - s) + ti * offset)
                        .collect()
                }
                None => {
                    let rot = Complex64::from_polar(1.0 - s, 0.5 * s * angle.sin());
                    alpha.coords().iter().map(|c| c * rot).collect()
                }
            };
            consider(coords);
        }
        shell_minima.push(best.expect("every scale samples at least one interior point"));
    }

    let min_observed = shell_minima
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::INFINITY, f64::min);
    let finest = shell_minima.last().expect("at least four scales").0;

    if finest < delta {
        // every nested-neighborhood estimate is below δ; the path walks the
        // sub-δ shell minimizers with distance-monotone filtering
        let mut points = Vec::new();
        let mut last = f64::INFINITY;
        for (v, p) in &shell_minima {
            if *v >= delta {
                continue;
            }
            let d = alpha.distance_to(p.coords());
            if d <= last {
                last = d;
                points.push(p.clone());
            }
        }
        ZeroApproachOutcome::Sequence(ApproachPath::new(
            alpha.clone(),
            PathKind::Custom,
            points,
            last.max(1e-7),
        ))
    } else if min_observed >= delta {
        ZeroApproachOutcome::Certificate {
            delta,
            samples,
            min_observed,
        }
    } else {
        ZeroApproachOutcome::Inconclusive {
            scales_below: shell_minima.iter().filter(|(v, _)| *v < delta).count(),
            scales_total: scales,
        }
    }
}

/// Max of |f| over the grid dilated to radius r: a lower bound for the sup
/// norm, nondecreasing in r and under grid refinement.
pub fn sup_norm_boundary_estimate(f: &BallFunction, grid: &BoundaryGrid, r: f64) -> f64 {
    assert!((0.9..1.0).contains(&r), "dilation radius must lie in [0.9, 1)");
    grid.nodes()
        .par_iter()
        .map(|zeta| {
            let scaled: Vec<Complex64> = zeta.coords().iter().map(|c| c * r).collect();
            f.eval(&scaled).norm()
        })
        .reduce(|| 0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::rotate_function;
    use crate::product::build_product;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn radial_path_is_dyadic() {
        let e1 = SpherePoint::basis(2, 0);
        let paths = approach_paths(&e1, PathKind::Radial, 1, 1e-4).unwrap();
        let p = &paths[0];
        // points (1 - 2^{-k}) e1
        assert!((p.points[0].coords()[0] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((p.points[1].coords()[0] - c(0.75, 0.0)).norm() < 1e-15);
        assert!(p.final_distance() <= 1e-4);
    }

    #[test]
    fn orbit_path_approaches_one() {
        let one = SpherePoint::one(2);
        let seeds = vec![BallPoint::origin(2)];
        let paths = orbit_paths_from_seeds(&one, &seeds, 2e-4).unwrap();
        assert!(paths[0].final_distance() <= 2e-4);
        for w in paths[0].points.windows(2) {
            assert!(one.distance_to(w[1].coords()) <= one.distance_to(w[0].coords()));
        }
    }

    #[test]
    fn orbit_path_transports_to_other_targets() {
        let e2 = SpherePoint::basis(2, 1);
        let seeds = vec![BallPoint::scaled_basis(2, 0, 0.3).unwrap()];
        let paths = orbit_paths_from_seeds(&e2, &seeds, 2e-4).unwrap();
        assert!(paths[0].final_distance() <= 2e-4);
    }

    #[test]
    fn tangential_path_stays_interior() {
        let e1 = SpherePoint::basis(2, 0);
        let paths = approach_paths(&e1, PathKind::Tangential, 2, 1e-4).unwrap();
        for p in &paths {
            assert!(p.final_distance() <= 1e-4);
            for q in &p.points {
                assert!(q.norm() < 1.0);
            }
        }
    }

    #[test]
    fn cluster_of_coordinate_at_e1_is_one() {
        let f = BallFunction::coordinate(2, 0);
        let e1 = SpherePoint::basis(2, 0);
        let mut paths = approach_paths(&e1, PathKind::Radial, 2, 1e-5).unwrap();
        paths.extend(approach_paths(&e1, PathKind::Tangential, 2, 1e-5).unwrap());
        let est = cluster_estimate(&f, &e1, &paths, 1e-3).unwrap();
        assert_eq!(est.values.len(), 1);
        assert!((est.values[0] - Complex64::ONE).norm() < 1e-3);
    }

    #[test]
    fn cluster_estimate_requires_paths() {
        let f = BallFunction::coordinate(2, 0);
        let e1 = SpherePoint::basis(2, 0);
        assert!(matches!(
            cluster_estimate(&f, &e1, &[], 1e-3),
            Err(LabError::EmptyPaths)
        ));
    }

    #[test]
    fn product_cluster_contains_both_orbit_targets() {
        let product = build_product(2, 48, 0.9);
        let f = product.to_ball_function();
        let one = SpherePoint::one(2);
        let seeds = vec![
            BallPoint::scaled_basis(2, 0, 0.3).unwrap(),
            BallPoint::scaled_basis(2, 0, 0.6).unwrap(),
        ];
        let paths = orbit_paths_from_seeds(&one, &seeds, 2e-4).unwrap();
        let est = cluster_estimate(&f, &one, &paths, 1e-3).unwrap();
        assert!(est.values.len() >= 2);
        let near = |t: f64| {
            est.values
                .iter()
                .any(|v| (v - Complex64::new(t, 0.0)).norm() < 1e-2)
        };
        assert!(near(0.3) && near(0.6));
    }

    #[test]
    fn continuity_probe_single_for_polynomials() {
        let f = BallFunction::new(2, |z| z[0] * z[0] + 0.5 * z[1]).with_sup_bound(1.5);
        let alpha = SpherePoint::normalized(vec![c(0.6, 0.3), c(0.2, -0.5)]).unwrap();
        let expected = {
            let a = alpha.coords();
            a[0] * a[0] + 0.5 * a[1]
        };
        match continuity_probe(&f, &alpha, 1e-2).unwrap() {
            ContinuityProbe::SingleValue(v) => assert!((v - expected).norm() < 1e-3),
            ContinuityProbe::Oscillation { .. } => panic!("polynomial should be continuous"),
        }
    }

    #[test]
    fn continuity_probe_detects_product_oscillation() {
        let product = build_product(2, 48, 0.9);
        let f = product.to_ball_function();
        let one = SpherePoint::one(2);
        match continuity_probe(&f, &one, 1e-2).unwrap() {
            ContinuityProbe::Oscillation { value_a, value_b, .. } => {
                assert!((value_a - value_b).norm() > 0.25);
            }
            ContinuityProbe::SingleValue(_) => panic!("product oscillates at 1"),
        }
    }

    #[test]
    fn continuity_probe_single_for_peak_at_target() {
        let alpha = SpherePoint::basis(2, 0);
        let g = peak_function(&alpha);
        match continuity_probe(&g, &alpha, 1e-2).unwrap() {
            ContinuityProbe::SingleValue(v) => assert!((v - Complex64::ONE).norm() < 1e-2),
            ContinuityProbe::Oscillation { .. } => panic!("peak extends continuously"),
        }
    }

    #[test]
    fn peak_values() {
        let alpha = SpherePoint::basis(2, 0);
        let g = peak_function(&alpha);
        assert!((g.eval(alpha.coords()) - Complex64::ONE).norm() < 1e-15);
        assert!((g.eval(&[Complex64::ZERO, Complex64::ZERO]) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn peak_strictly_below_one_off_cap() {
        let alpha = SpherePoint::basis(2, 0);
        let g = peak_function(&alpha);
        let grid = BoundaryGrid::sphere_c2(10_000).unwrap();
        let max_off_cap = grid
            .nodes()
            .iter()
            .filter(|z| alpha.distance_to(z.coords()) > 0.05)
            .map(|z| g.eval(z.coords()).norm())
            .fold(0.0, f64::max);
        assert!(max_off_cap < 1.0 - 3e-4, "max off cap = {max_off_cap}");
    }

    #[test]
    fn zero_search_finds_vanishing_sequence() {
        let alpha = SpherePoint::basis(2, 0);
        let a = alpha.coords().to_vec();
        let f = BallFunction::new(2, move |z| {
            Complex64::ONE - hermitian_inner(z, &a).expect("dims")
        })
        .with_sup_bound(2.0);
        match zero_approach_search(&f, &alpha, 1e-3, 20) {
            ZeroApproachOutcome::Sequence(path) => {
                let last = path.points.last().unwrap();
                assert!(f.eval_ball(last).norm() < 1e-3);
            }
            other => panic!("expected a sequence, got {other:?}"),
        }
    }

    #[test]
    fn zero_search_certifies_constants() {
        let f = BallFunction::constant(2, Complex64::ONE);
        let alpha = SpherePoint::basis(2, 0);
        match zero_approach_search(&f, &alpha, 0.5, 20) {
            ZeroApproachOutcome::Certificate { min_observed, .. } => {
                assert!((min_observed - 1.0).abs() < 1e-12);
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn zero_search_on_shifted_peak() {
        let alpha = SpherePoint::basis(2, 0);
        let g = peak_function(&alpha);
        let f = BallFunction::new(2, move |z| g.eval(z) - Complex64::ONE).with_sup_bound(2.0);
        assert!(matches!(
            zero_approach_search(&f, &alpha, 1e-2, 20),
            ZeroApproachOutcome::Sequence(_)
        ));
    }

    #[test]
    fn sup_norm_estimate_of_coordinate_and_peak() {
        let grid = BoundaryGrid::sphere_c2(16384).unwrap();
        let f = BallFunction::coordinate(2, 0);
        let est = sup_norm_boundary_estimate(&f, &grid, 0.95);
        assert!((est - 0.95).abs() < 5e-3);

        // the offset phase grid keeps nodes away from the exact peak
        // direction, so the estimate sits slightly below (1+r)/2
        let g = peak_function(&SpherePoint::basis(2, 0));
        let est_peak = sup_norm_boundary_estimate(&g, &grid, 0.95);
        assert!(est_peak <= 0.975 && est_peak > 0.975 - 0.02);
    }

    #[test]
    fn cluster_commutes_with_rotation_transport() {
        let alpha = SpherePoint::basis(2, 0);
        let beta = SpherePoint::normalized(vec![c(0.0, 0.6), c(0.8, 0.0)]).unwrap();
        // sigma maps beta to alpha, so (R_sigma f)(z) = f(sigma z) approaches
        // f's fiber at alpha along paths to beta = sigma^{-1} alpha.
        let sigma = unitary_moving(&beta, &alpha).unwrap();
        let f = BallFunction::new(2, |z| z[0] * z[0] - 0.3 * z[1]).with_sup_bound(1.3);
        let rf = rotate_function(&f, &sigma);

        let paths_a = approach_paths(&alpha, PathKind::Radial, 2, 1e-5).unwrap();
        let est_a = cluster_estimate(&f, &alpha, &paths_a, 1e-3).unwrap();
        let paths_b = approach_paths(&beta, PathKind::Radial, 2, 1e-5).unwrap();
        let est_b = cluster_estimate(&rf, &beta, &paths_b, 1e-3).unwrap();

        assert_eq!(est_a.values.len(), est_b.values.len());
        for (u, v) in est_a.values.iter().zip(&est_b.values) {
            assert!((u - v).norm() < 2e-3);
        }
    }
}
