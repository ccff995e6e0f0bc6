//! The Harnack inequality constant for pairs of point evaluations, its
//! certified bracket, the part pseudo-metric, representing measures on the
//! discretized circle, and the dual-norm dichotomy.
//!
//! Upper bounds come from the kernel-ratio supremum over a boundary grid:
//! every positive real part of a bounded holomorphic function is dominated
//! by a kernel representation (Herglotz at n = 1, invariant Poisson–Szegő
//! at n ≥ 2), so the grid sup bounds the Harnack constant from above. At
//! n ≥ 2 the kernel-representable class is larger than Re H∞, so the upper
//! bound is conservative and the artifact always reports brackets.
//!
//! Lower bounds come from positive trigonometric-polynomial boundary
//! densities (or their slice lifts): their Poisson extensions are real
//! parts of polynomials, hence genuinely admissible, so any attained ratio
//! bounds the constant from below. The density is optimized by power
//! iteration on the whitened moment-matrix pencil, starting from the Fejér
//! density.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::ball::{hermitian_inner, BallPoint, SpherePoint};
use crate::boundary::peak_function;
use crate::error::{LabError, Result};
use crate::grid::BoundaryGrid;

/// Poisson kernel of the disc (n = 1) or invariant Poisson–Szegő kernel of
/// the ball (n ≥ 2), normalized to integrate to one against σ.
pub fn poisson_kernel(lambda: &BallPoint, zeta: &SpherePoint) -> f64 {
    let n = lambda.dimension();
    assert_eq!(n, zeta.dimension());
    let one_minus = 1.0 - lambda.norm() * lambda.norm();
    if n == 1 {
        let diff = zeta.coords()[0] - lambda.coords()[0];
        one_minus / diff.norm_sqr()
    } else {
        let inner = hermitian_inner(lambda.coords(), zeta.coords()).expect("equal dimensions");
        let den = (Complex64::ONE - inner).norm_sqr();
        (one_minus / den).powi(n as i32)
    }
}

/// Max over grid nodes of P_λ/P_μ: an upper bound for sup u(λ)/u(μ) over
/// positive kernel-representable u.
pub fn harnack_upper(lambda: &BallPoint, mu: &BallPoint, grid: &BoundaryGrid) -> f64 {
    grid.nodes()
        .par_iter()
        .map(|zeta| poisson_kernel(lambda, zeta) / poisson_kernel(mu, zeta))
        .reduce(|| 0.0, f64::max)
}

/// Grid node attaining the kernel-ratio supremum.
fn harnack_upper_witness(lambda: &BallPoint, mu: &BallPoint, grid: &BoundaryGrid) -> (f64, usize) {
    let mut best = (0.0f64, 0usize);
    for (idx, zeta) in grid.nodes().iter().enumerate() {
        let ratio = poisson_kernel(lambda, zeta) / poisson_kernel(mu, zeta);
        if ratio > best.0 {
            best = (ratio, idx);
        }
    }
    best
}

/// Harmonic basis value p_ℓ(z): z^ℓ for ℓ ≥ 0 and conj(z)^{-ℓ} for ℓ < 0.
fn harmonic_moment(z: Complex64, ell: i64) -> Complex64 {
    if ell >= 0 {
        z.powu(ell as u32)
    } else {
        z.conj().powu((-ell) as u32)
    }
}

fn moment_matrix(z: Complex64, degree: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(degree + 1, degree + 1, |r, c| {
        harmonic_moment(z, c as i64 - r as i64)
    })
}

/// Forward substitution L X = B for lower-triangular L.
fn solve_lower(l: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = l.nrows();
    let mut x = b.clone();
    for col in 0..x.ncols() {
        for r in 0..n {
            let mut acc = x[(r, col)];
            for k in 0..r {
                acc -= l[(r, k)] * x[(k, col)];
            }
            x[(r, col)] = acc / l[(r, r)];
        }
    }
    x
}

/// Best ratio u(a)/u(b) over positive trig-polynomial densities |K|² with
/// deg K ≤ degree, for disc points a, b. Any Rayleigh quotient along the
/// power iteration corresponds to an attained density, so the running
/// maximum is an unconditional lower bound for the disc Harnack constant.
fn disc_density_ratio(a: Complex64, b: Complex64, degree: usize) -> f64 {
    let m_a = moment_matrix(a, degree);
    let m_b = moment_matrix(b, degree);
    let chol = match nalgebra::Cholesky::new(m_b) {
        Some(c) => c,
        None => return 1.0,
    };
    let l = chol.l();
    // whitened pencil: B = L^{-1} M_a L^{-H}
    let y = solve_lower(&l, &m_a);
    let b_mat = solve_lower(&l, &y.adjoint()).adjoint();

    // uniform density (the constant function u ≡ 1) seeds the bound at 1
    let mut best = 1.0f64;
    let dim = degree + 1;
    // all-ones start: the Fejér density
    let mut v = DVector::from_element(dim, Complex64::ONE / (dim as f64).sqrt());
    for _ in 0..400 {
        let w = &b_mat * &v;
        let num = v.dotc(&w).re;
        let den = v.dotc(&v).re;
        if den > 0.0 && num.is_finite() {
            best = best.max(num / den);
        }
        let norm = w.norm();
        if !norm.is_finite() || norm == 0.0 {
            break;
        }
        v = w / Complex64::new(norm, 0.0);
    }
    best
}

fn nonzero_direction(p: &BallPoint) -> Option<SpherePoint> {
    if p.norm() < 1e-9 {
        None
    } else {
        SpherePoint::normalized(p.coords().to_vec()).ok()
    }
}

/// Candidate slice directions for a pair of ball points.
fn slice_directions(lambda: &BallPoint, mu: &BallPoint) -> Vec<SpherePoint> {
    let n = lambda.dimension();
    let mut dirs: Vec<SpherePoint> = (0..n).map(|k| SpherePoint::basis(n, k)).collect();
    let diff: Vec<Complex64> = lambda
        .coords()
        .iter()
        .zip(mu.coords())
        .map(|(a, b)| a - b)
        .collect();
    if let Ok(d) = SpherePoint::normalized(diff) {
        dirs.push(d);
    }
    if let Some(d) = nonzero_direction(lambda) {
        dirs.push(d);
    }
    if let Some(d) = nonzero_direction(mu) {
        dirs.push(d);
    }
    dirs
}

/// Max of u(λ)/u(μ) over a family of strictly positive members of
/// Re H∞(B): positive trig-polynomial densities at n = 1, their slice
/// lifts at n ≥ 2. Always a valid lower bound for the Harnack constant.
pub fn harnack_lower(lambda: &BallPoint, mu: &BallPoint, family_degree: usize) -> f64 {
    assert_eq!(lambda.dimension(), mu.dimension());
    if lambda.dimension() == 1 {
        return disc_density_ratio(lambda.coords()[0], mu.coords()[0], family_degree);
    }
    slice_directions(lambda, mu)
        .iter()
        .map(|d| {
            let a = hermitian_inner(lambda.coords(), d.coords()).expect("dims");
            let b = hermitian_inner(mu.coords(), d.coords()).expect("dims");
            disc_density_ratio(a, b, family_degree)
        })
        .fold(1.0, f64::max)
}

/// A certified bracket around the two-sided Harnack constant b(λ, μ).
#[derive(Debug, Clone)]
pub struct HarnackEstimate {
    pub lower: f64,
    pub upper: f64,
    pub lower_witness: String,
    pub upper_witness: usize,
}

impl HarnackEstimate {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Brackets b(λ, μ) with the kernel-ratio sup from above (both
/// orientations) and the density family from below.
pub fn harnack_bracket(
    lambda: &BallPoint,
    mu: &BallPoint,
    grid: &BoundaryGrid,
    family_degree: usize,
) -> HarnackEstimate {
    let (up_ab, node_ab) = harnack_upper_witness(lambda, mu, grid);
    let (up_ba, node_ba) = harnack_upper_witness(mu, lambda, grid);
    let (upper, upper_witness) = if up_ab >= up_ba {
        (up_ab, node_ab)
    } else {
        (up_ba, node_ba)
    };
    let lo_ab = harnack_lower(lambda, mu, family_degree);
    let lo_ba = harnack_lower(mu, lambda, family_degree);
    let lower = lo_ab.max(lo_ba).min(upper);
    HarnackEstimate {
        lower,
        upper,
        lower_witness: format!(
            "positive trig-polynomial density of degree {family_degree} (Fejér-seeded power iteration)"
        ),
        upper_witness,
    }
}

/// The log-upper part pseudo-metric on a finite point set, with the
/// bracket widths needed to budget the triangle-inequality slack.
#[derive(Debug, Clone)]
pub struct PartMetric {
    pub log_upper: Vec<Vec<f64>>,
    pub width_log: Vec<Vec<f64>>,
}

impl PartMetric {
    pub fn len(&self) -> usize {
        self.log_upper.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log_upper.is_empty()
    }

    /// Largest relative asymmetry |d(i,j) - d(j,i)| / max entry.
    pub fn max_relative_asymmetry(&self) -> f64 {
        let n = self.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                let a = self.log_upper[i][j];
                let b = self.log_upper[j][i];
                let scale = a.abs().max(b.abs()).max(1e-12);
                worst = worst.max((a - b).abs() / scale);
            }
        }
        worst
    }

    /// Count of ordered triples violating d(i,k) ≤ d(i,j) + d(j,k) + slack,
    /// where the slack is the sum of the two bracket widths involved.
    pub fn triangle_violations(&self) -> usize {
        let n = self.len();
        let mut violations = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let slack = self.width_log[i][j] + self.width_log[j][k];
                    if self.log_upper[i][k] > self.log_upper[i][j] + self.log_upper[j][k] + slack {
                        violations += 1;
                    }
                }
            }
        }
        violations
    }
}

/// Pairwise log-upper matrix d(i,j) = log harnack_upper(p_i, p_j) with
/// bracket widths from the degree-`degree` density family.
pub fn part_metric(points: &[BallPoint], grid: &BoundaryGrid, degree: usize) -> PartMetric {
    let n = points.len();
    let index_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let entries: Vec<(usize, usize, f64, f64, f64)> = index_pairs
        .into_par_iter()
        .map(|(i, j)| {
            let up_ij = harnack_upper(&points[i], &points[j], grid);
            let up_ji = harnack_upper(&points[j], &points[i], grid);
            let lo = harnack_lower(&points[i], &points[j], degree)
                .max(harnack_lower(&points[j], &points[i], degree));
            let upper_sym = up_ij.max(up_ji);
            let width = (upper_sym / lo.min(upper_sym)).ln().max(0.0);
            (i, j, up_ij.ln(), up_ji.ln(), width)
        })
        .collect();

    let mut log_upper = vec![vec![0.0; n]; n];
    let mut width_log = vec![vec![0.0; n]; n];
    for (i, j, d_ij, d_ji, width) in entries {
        log_upper[i][j] = d_ij;
        log_upper[j][i] = d_ji;
        width_log[i][j] = width;
        width_log[j][i] = width;
    }
    PartMetric {
        log_upper,
        width_log,
    }
}

/// Mutually absolutely continuous representing measures for a pair of
/// interior points, as densities against the grid's quadrature weights.
#[derive(Debug, Clone)]
pub struct MeasurePair {
    pub lambda: BallPoint,
    pub mu: BallPoint,
    pub grid: BoundaryGrid,
    pub density_mu: Vec<f64>,
    pub density_nu: Vec<f64>,
    pub b_used: f64,
}

/// Degree of the harmonic-polynomial representation checks.
const REPRESENTATION_DEGREE: u32 = 8;
const REPRESENTATION_TOL: f64 = 1e-6;

/// ∫ ζ^ℓ density dσ over the grid.
fn density_moment(grid: &BoundaryGrid, density: &[f64], ell: u32) -> Complex64 {
    grid.iter()
        .zip(density)
        .map(|((node, w), d)| harmonic_moment(node.coords()[0], ell as i64) * (w * d))
        .sum()
}

/// Checks that a density reproduces point values of harmonic polynomials
/// z^ℓ, ℓ ≤ 8, at the given point.
fn check_represents(
    grid: &BoundaryGrid,
    density: &[f64],
    point: &BallPoint,
    label: &str,
) -> Result<()> {
    for ell in 0..=REPRESENTATION_DEGREE {
        let moment = density_moment(grid, density, ell);
        let expected = harmonic_moment(point.coords()[0], ell as i64);
        let deviation = (moment - expected).norm();
        if deviation > REPRESENTATION_TOL {
            return Err(LabError::NotRepresenting {
                test: format!("{label}: z^{ell}"),
                deviation,
            });
        }
    }
    Ok(())
}

/// Builds the representing-measure pair from the Harnack-cone decomposition
///
/// ```text
/// α = b·P_μ - P_λ,   β = b·P_λ - P_μ,
/// density_mu = (b·β + α)/(b² - 1),   density_nu = (b·α + β)/(b² - 1)
/// ```
///
/// valid whenever b dominates both kernel ratios (n = 1).
pub fn representing_measures(
    lambda: &BallPoint,
    mu: &BallPoint,
    grid: &BoundaryGrid,
    b: f64,
) -> Result<MeasurePair> {
    if lambda.dimension() != 1 || mu.dimension() != 1 {
        return Err(LabError::MeasuresUnsupportedDimension {
            dimension: lambda.dimension().max(mu.dimension()),
        });
    }
    assert!(b > 1.0, "the Harnack bound must exceed 1");
    let nodes = grid.len();
    let mut density_mu = Vec::with_capacity(nodes);
    let mut density_nu = Vec::with_capacity(nodes);
    for (idx, (node, _)) in grid.iter().enumerate() {
        let p_lambda = poisson_kernel(lambda, node);
        let p_mu = poisson_kernel(mu, node);
        let alpha = b * p_mu - p_lambda;
        let beta = b * p_lambda - p_mu;
        if alpha < -1e-12 {
            return Err(LabError::HarnackBoundTooSmall {
                b,
                node: idx,
                density: alpha,
            });
        }
        if beta < -1e-12 {
            return Err(LabError::HarnackBoundTooSmall {
                b,
                node: idx,
                density: beta,
            });
        }
        let alpha = alpha.max(0.0);
        let beta = beta.max(0.0);
        density_mu.push((b * beta + alpha) / (b * b - 1.0));
        density_nu.push((b * alpha + beta) / (b * b - 1.0));
    }
    let pair = MeasurePair {
        lambda: lambda.clone(),
        mu: mu.clone(),
        grid: grid.clone(),
        density_mu,
        density_nu,
        b_used: b,
    };
    check_represents(grid, &pair.density_mu, lambda, "density_mu")?;
    check_represents(grid, &pair.density_nu, mu, "density_nu")?;
    Ok(pair)
}

impl MeasurePair {
    /// ∫ density dσ for both densities.
    pub fn masses(&self) -> (f64, f64) {
        let mass = |d: &[f64]| {
            self.grid
                .weights()
                .iter()
                .zip(d)
                .map(|(w, v)| w * v)
                .sum::<f64>()
        };
        (mass(&self.density_mu), mass(&self.density_nu))
    }

    /// Pointwise Radon–Nikodym ratio range over nodes where ν > 0.
    pub fn rn_ratio_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for (m, n) in self.density_mu.iter().zip(&self.density_nu) {
            if *n > 0.0 {
                let r = m / n;
                lo = lo.min(r);
                hi = hi.max(r);
            }
        }
        (lo, hi)
    }
}

/// Transports a representing measure for λ to one for μ through the pair:
/// output = η/b + ν - μ/b. The result is nonnegative, represents μ, and
/// satisfies dη/d(output) ≤ b.
pub fn transported_measure(eta: &[f64], pair: &MeasurePair) -> Result<Vec<f64>> {
    assert_eq!(eta.len(), pair.grid.len());
    check_represents(&pair.grid, eta, &pair.lambda, "eta")?;
    let b = pair.b_used;
    let mut out = Vec::with_capacity(eta.len());
    for (idx, ((e, nu), mu)) in eta
        .iter()
        .zip(&pair.density_nu)
        .zip(&pair.density_mu)
        .enumerate()
    {
        let v = e / b + nu - mu / b;
        if v < -1e-12 {
            return Err(LabError::TransportNegativity { node: idx, value: v });
        }
        out.push(v.max(0.0));
    }
    check_represents(&pair.grid, &out, &pair.mu, "transported")?;
    Ok(out)
}

/// Low-discrepancy van der Corput sequence in [0, 1), base 2.
fn van_der_corput(mut index: usize) -> f64 {
    let mut factor = 1.0;
    let mut value = 0.0;
    while index > 0 {
        factor /= 2.0;
        value += factor * (index % 2) as f64;
        index /= 2;
    }
    value
}

/// Pseudo-hyperbolic distance of two disc points.
fn pseudo_hyperbolic(a: Complex64, b: Complex64) -> f64 {
    ((a - b) / (Complex64::ONE - a.conj() * b)).norm()
}

/// Best |f(0) - f(ρ)| over unimodular multiples of Blaschke factors and
/// degree-2 Blaschke products, after Möbius normalization of the pair.
fn disc_dual_norm(rho: f64, budget: usize) -> f64 {
    let mut best = rho; // the Möbius witness itself (c = 0)
    for i in 1..=budget {
        let c = van_der_corput(i);
        best = best.max(rho * (1.0 - c * c) / (1.0 - c * rho));
        // degree-2 product paired with an earlier sample
        let c2 = van_der_corput(i / 2);
        let v = (c * c2
            - (rho - c) * (rho - c2) / ((1.0 - c * rho) * (1.0 - c2 * rho)))
            .abs();
        best = best.max(v);
    }
    best
}

/// Lower bound on sup{|f(λ) - f(μ)| : sup-norm ≤ 1} over coordinate
/// witnesses, slice Möbius factors, and degree-2 Blaschke products;
/// monotone nondecreasing in the search budget and never above 2.
pub fn dual_norm_estimate(lambda: &BallPoint, mu: &BallPoint, search_budget: usize) -> f64 {
    assert_eq!(lambda.dimension(), mu.dimension());
    let mut best = 0.0f64;
    // coordinate witnesses, including |<λ-μ, e1>|
    for (a, b) in lambda.coords().iter().zip(mu.coords()) {
        best = best.max((a - b).norm());
    }
    for d in slice_directions(lambda, mu) {
        let a = hermitian_inner(lambda.coords(), d.coords()).expect("dims");
        let b = hermitian_inner(mu.coords(), d.coords()).expect("dims");
        let rho = pseudo_hyperbolic(a, b);
        best = best.max(disc_dual_norm(rho, search_budget));
    }
    best.min(2.0)
}

/// One pair's record in the part-dichotomy consistency suite.
#[derive(Debug, Clone)]
pub struct DichotomyRow {
    pub lambda: BallPoint,
    pub mu: BallPoint,
    /// |f_j(λ)| and |f_j(μ)| along the peaking family f_j = g^{1/j}.
    pub peaks_lambda: Vec<f64>,
    pub peaks_mu: Vec<f64>,
    pub converged_lambda: bool,
    pub converged_mu: bool,
    pub dual_norm: f64,
    pub log_upper: f64,
    pub consistent: bool,
}

const PEAK_CONVERGENCE_TOL: f64 = 0.01;

/// Runs the peaking family f_j = g^{1/j} (g the peak function at the
/// radial projection of λ) over j = 1, 2, 4, …, 2^levels and records
/// whether |f_j(μ)| → 1 whenever |f_j(λ)| → 1, cross-checked against the
/// dual-norm estimate < 2 and a finite kernel-ratio upper bound.
pub fn part_dichotomy_suite(
    pairs: &[(BallPoint, BallPoint)],
    levels: u32,
    grid: &BoundaryGrid,
) -> Vec<DichotomyRow> {
    pairs
        .iter()
        .map(|(lambda, mu)| {
            let n = lambda.dimension();
            let alpha = nonzero_direction(lambda).unwrap_or_else(|| SpherePoint::basis(n, 0));
            let g = peak_function(&alpha);
            let g_lambda = g.eval_ball(lambda).norm();
            let g_mu = g.eval_ball(mu).norm();
            // |g^{1/j}| = |g|^{1/j}, computed through the log-modulus
            let mut peaks_lambda = Vec::new();
            let mut peaks_mu = Vec::new();
            for level in 0..=levels {
                let j = 2.0f64.powi(level as i32);
                peaks_lambda.push((g_lambda.ln() / j).exp());
                peaks_mu.push((g_mu.ln() / j).exp());
            }
            let converged = |peaks: &[f64]| {
                peaks.windows(2).all(|w| w[1] >= w[0] - 1e-15)
                    && 1.0 - peaks.last().expect("nonempty") <= PEAK_CONVERGENCE_TOL
            };
            let converged_lambda = converged(&peaks_lambda);
            let converged_mu = converged(&peaks_mu);
            let dual_norm = dual_norm_estimate(lambda, mu, 256);
            let log_upper = harnack_upper(lambda, mu, grid).ln();
            let consistent =
                (!converged_lambda || converged_mu) && dual_norm < 2.0 && log_upper.is_finite();
            DichotomyRow {
                lambda: lambda.clone(),
                mu: mu.clone(),
                peaks_lambda,
                peaks_mu,
                converged_lambda,
                converged_mu,
                dual_norm,
                log_upper,
                consistent,
            }
        })
        .collect()
}
