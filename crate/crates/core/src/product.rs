//! The dyadic infinite product embedding a disc direction into the fiber
//! over 𝟏, truncated with a certified tail bound.
//!
//! The function is
//!
//! ```text
//! f(λ) = [ Π_{j=0}^{N} ⟨L^{-2^j}(λ), e₁⟩ ] · ⟨λ, e₁⟩
//! ```
//!
//! with the factors taken along e₁ (the factors converge to 1 only in the
//! e₁ direction). Each omitted factor differs from 1 by at most K/2^j on
//! the working ball, so the omitted tail telescopes to Σ_{j>N} K/2^j =
//! K·2^{-N}; every factor has modulus at most one, which also keeps the
//! truncated product bounded by 1 on the closed ball.

use num_complex::Complex64;

use crate::automorphism::{iterate_first_coordinate, tail_constant, TailConstant};
use crate::ball::{BallFunction, BallPoint};
use crate::error::{LabError, Result};

/// Truncated dyadic product with its certified tail data.
#[derive(Debug, Clone)]
pub struct ProductFunction {
    dimension: usize,
    truncation: u32,
    working_radius: f64,
    tail: TailConstant,
}

/// A certified evaluation: the truncated value and the advertised bound on
/// |true value - value|.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: Complex64,
    pub truncation_bound: f64,
}

/// One row of the embedding-identity convergence table.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub k: u32,
    pub observed_error: f64,
    pub rate_bound: f64,
}

/// Table of |f(L^{2^k}(λ)) - ⟨λ, e₁⟩| against the rate |λ|·K·(k+2)/2^{k-1}.
#[derive(Debug, Clone)]
pub struct ConvergenceTable {
    pub target: Complex64,
    pub truncation_bound: f64,
    pub rows: Vec<ConvergenceRow>,
}

/// Builds the truncated product with a tail constant validated at the
/// working radius.
pub fn build_product(dimension: usize, truncation: u32, working_radius: f64) -> ProductFunction {
    assert!(dimension >= 1);
    assert!(truncation >= 1);
    assert!(
        (0.0..=0.99).contains(&working_radius),
        "working radius must lie in [0, 0.99]"
    );
    ProductFunction {
        dimension,
        truncation,
        working_radius,
        tail: tail_constant(working_radius, 64),
    }
}

impl ProductFunction {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn working_radius(&self) -> f64 {
        self.working_radius
    }

    pub fn tail_constant(&self) -> TailConstant {
        self.tail
    }

    /// Σ_{j>N} K/2^j for the configured truncation.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound_at(self.truncation)
    }

    /// Σ_{j>n} K/2^j = K·2^{-n}.
    pub fn tail_bound_at(&self, n: u32) -> f64 {
        self.tail.k * 0.5f64.powi(n as i32)
    }

    /// Raw truncated product at any closed-ball point; the certification
    /// applies only inside the working radius.
    pub fn eval_truncated(&self, coords: &[Complex64]) -> Complex64 {
        self.eval_truncated_at(coords, self.truncation)
    }

    /// Raw truncated product with an explicit factor count; factors are
    /// accumulated in index order so nested truncations share a prefix.
    pub fn eval_truncated_at(&self, coords: &[Complex64], truncation: u32) -> Complex64 {
        let lambda1 = coords[0];
        let mut value = Complex64::ONE;
        for j in 0..=truncation {
            value *= iterate_first_coordinate(lambda1, -(2.0f64.powi(j as i32)));
        }
        value * lambda1
    }

    /// Certified evaluation inside the working ball.
    pub fn eval(&self, lambda: &BallPoint) -> Result<EvalResult> {
        if lambda.norm() > self.working_radius {
            return Err(LabError::OutsideWorkingRadius {
                norm: lambda.norm(),
                radius: self.working_radius,
            });
        }
        Ok(EvalResult {
            value: self.eval_truncated(lambda.coords()),
            truncation_bound: self.tail_bound(),
        })
    }

    /// The truncated product as an evaluation callback on the closed ball;
    /// every factor has modulus at most one, so 1 is a sup bound.
    pub fn to_ball_function(&self) -> BallFunction {
        let this = self.clone();
        BallFunction::new(self.dimension, move |z| this.eval_truncated(z)).with_sup_bound(1.0)
    }

    /// f(L^{2^k}(λ)) computed through the closed-form iterate exponents
    /// 2^k - 2^j, so the orbit never has to re-enter the working radius.
    pub fn eval_along_orbit(&self, lambda: &BallPoint, k: u32) -> Complex64 {
        let lambda1 = lambda.coords()[0];
        let base = 2.0f64.powi(k as i32);
        let mut value = iterate_first_coordinate(lambda1, base);
        for j in 0..=self.truncation {
            value *= iterate_first_coordinate(lambda1, base - 2.0f64.powi(j as i32));
        }
        value
    }
}

/// Margin of retained factors beyond k_max required by the table.
const TABLE_MARGIN: u32 = 8;

/// Tabulates the embedding identity f(L^{2^k}(λ)) → ⟨λ, e₁⟩ for
/// k = 2..=k_max, against the rate bound |λ|·K·(k+2)/2^{k-1}.
pub fn convergence_table(
    product: &ProductFunction,
    lambda: &BallPoint,
    k_max: u32,
) -> Result<ConvergenceTable> {
    if lambda.norm() > product.working_radius {
        return Err(LabError::OutsideWorkingRadius {
            norm: lambda.norm(),
            radius: product.working_radius,
        });
    }
    if product.truncation < k_max + TABLE_MARGIN {
        return Err(LabError::InsufficientTruncation {
            k_max,
            needed: k_max + TABLE_MARGIN,
            actual: product.truncation,
        });
    }
    let target = lambda.coords()[0];
    let k_const = product.tail.k;
    let rows = (2..=k_max)
        .map(|k| {
            let value = product.eval_along_orbit(lambda, k);
            ConvergenceRow {
                k,
                observed_error: (value - target).norm(),
                rate_bound: lambda.norm() * k_const * (k as f64 + 2.0)
                    / 2.0f64.powi(k as i32 - 1),
            }
        })
        .collect();
    // omitted factors at exponent 2^k - 2^j, j > N ≥ k, are within
    // K/2^{j-1} of one, so the composed tail is Σ_{j>N} K/2^{j-1}
    let truncation_bound = 2.0 * product.tail_bound();
    Ok(ConvergenceTable {
        target,
        truncation_bound,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_ball_point(rng: &mut ChaCha8Rng, n: usize, max_norm: f64) -> BallPoint {
        loop {
            let v: Vec<Complex64> = (0..n)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            if let Ok(p) = BallPoint::new(v) {
                if p.norm() < max_norm {
                    return p;
                }
            }
        }
    }

    #[test]
    fn vanishes_at_the_origin() {
        let f = build_product(2, 16, 0.9);
        let v = f.eval(&BallPoint::origin(2)).unwrap();
        assert_eq!(v.value, Complex64::ZERO);
    }

    #[test]
    fn bounded_by_one_plus_tail_on_working_ball() {
        let f = build_product(2, 32, 0.9);
        let bound = 1.0 + f.tail_bound();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let p = random_ball_point(&mut rng, 2, 0.9);
            let v = f.eval(&p).unwrap();
            assert!(v.value.norm() <= bound);
        }
    }

    #[test]
    fn refusal_outside_working_radius() {
        let f = build_product(1, 16, 0.5);
        let p = BallPoint::scaled_basis(1, 0, 0.8).unwrap();
        assert!(matches!(
            f.eval(&p),
            Err(LabError::OutsideWorkingRadius { .. })
        ));
    }

    #[test]
    fn bounded_at_second_coordinate_point() {
        let f = build_product(2, 32, 0.9);
        let p = BallPoint::scaled_basis(2, 1, 0.3).unwrap();
        let v = f.eval(&p).unwrap();
        assert!(v.value.norm() <= 1.0 + v.truncation_bound);
    }

    #[test]
    fn tail_bound_halves_per_extra_factor() {
        let f = build_product(1, 16, 0.9);
        for n in 16..24 {
            assert!((f.tail_bound_at(n + 1) - 0.5 * f.tail_bound_at(n)).abs() < 1e-18);
        }
    }

    #[test]
    fn cauchy_difference_respects_advertised_bound() {
        let f = build_product(2, 32, 0.9);
        let bound = f.tail_bound_at(32);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let p = random_ball_point(&mut rng, 2, 0.9);
            let a = f.eval_truncated_at(p.coords(), 32);
            let b = f.eval_truncated_at(p.coords(), 40);
            assert!((a - b).norm() <= bound + 1e-15);
        }
    }

    #[test]
    fn factor_estimate_on_working_ball() {
        let f = build_product(2, 48, 0.9);
        let k = f.tail_constant().k;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let p = random_ball_point(&mut rng, 2, 0.9);
            for j in 0..=48u32 {
                let exp = 2.0f64.powi(j as i32);
                let dev = (iterate_first_coordinate(p.coords()[0], -exp) - Complex64::ONE).norm();
                assert!(dev <= k / exp, "factor deviation {dev} exceeds {k}/2^{j}");
            }
        }
    }

    #[test]
    fn convergence_table_zero_seed_is_exact() {
        let f = build_product(2, 32, 0.9);
        let table = convergence_table(&f, &BallPoint::origin(2), 10).unwrap();
        for row in &table.rows {
            assert_eq!(row.observed_error, 0.0);
        }
    }

    #[test]
    fn convergence_table_respects_rate_bound() {
        let f = build_product(2, 32, 0.9);
        for lam in [
            BallPoint::scaled_basis(2, 0, 0.5).unwrap(),
            BallPoint::scaled_basis(2, 1, 0.5).unwrap(),
        ] {
            let table = convergence_table(&f, &lam, 10).unwrap();
            assert_eq!(table.rows.len(), 9);
            for row in &table.rows {
                assert!(
                    row.observed_error <= row.rate_bound + table.truncation_bound,
                    "k = {}: {} > {}",
                    row.k,
                    row.observed_error,
                    row.rate_bound
                );
            }
        }
    }

    #[test]
    fn convergence_table_frozen_oracle_values() {
        // expected errors computed independently from the closed-form
        // factors (λ₁ = 0.5, truncation 26)
        let f = build_product(1, 26, 0.9);
        let lam = BallPoint::scaled_basis(1, 0, 0.5).unwrap();
        let table = convergence_table(&f, &lam, 10).unwrap();
        let expected = [
            (2u32, 2.667081e-01),
            (10u32, 5.370527e-03),
        ];
        for (k, err) in expected {
            let row = table.rows.iter().find(|r| r.k == k).unwrap();
            assert!(
                (row.observed_error - err).abs() < 1e-6,
                "k = {k}: observed {} vs frozen {err}",
                row.observed_error
            );
        }
    }

    #[test]
    fn embedding_separates_first_coordinates() {
        let f = build_product(2, 32, 0.9);
        let a = BallPoint::scaled_basis(2, 0, 0.3).unwrap();
        let b = BallPoint::scaled_basis(2, 0, 0.6).unwrap();
        let ta = convergence_table(&f, &a, 10).unwrap();
        let tb = convergence_table(&f, &b, 10).unwrap();
        assert!((ta.target - tb.target).norm() > 0.29);
        let va = f.eval_along_orbit(&a, 10);
        let vb = f.eval_along_orbit(&b, 10);
        assert!((va - vb).norm() > 0.25);
    }

    #[test]
    fn insufficient_truncation_is_an_error() {
        let f = build_product(1, 10, 0.9);
        let lam = BallPoint::scaled_basis(1, 0, 0.5).unwrap();
        assert!(matches!(
            convergence_table(&f, &lam, 10),
            Err(LabError::InsufficientTruncation { .. })
        ));
    }
}
