//! Discretized circle and sphere carrying quadrature weights for the
//! rotationally invariant probability measure σ.
//!
//! Dimension 1 uses the uniform angular grid with trapezoid weights.
//! Dimension 2 uses a product grid in Hopf-type coordinates
//! ζ = (cos θ e^{iφ₁}, sin θ e^{iφ₂}) with Gauss–Legendre nodes in
//! t = sin²θ and midpoint-offset uniform grids in both phases; monomials
//! ∫ |ζ₁|^{2p} |ζ₂|^{2q} dσ = p! q! / (p+q+1)! integrate exactly up to the
//! node counts.

use num_complex::Complex64;

use crate::ball::SpherePoint;
use crate::error::{LabError, Result};

/// Gauss–Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_eval(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Sphere (or circle) nodes with quadrature weights summing to one.
#[derive(Debug, Clone)]
pub struct BoundaryGrid {
    dimension: usize,
    nodes: Vec<SpherePoint>,
    weights: Vec<f64>,
}

impl BoundaryGrid {
    /// Uniform angular grid on the circle, weights 1/m.
    pub fn circle(m: usize) -> Result<Self> {
        if m < 16 {
            return Err(LabError::GridTooSmall { size: m, minimum: 16 });
        }
        let nodes: Vec<SpherePoint> = (0..m)
            .map(|k| SpherePoint::circle(2.0 * std::f64::consts::PI * k as f64 / m as f64))
            .collect();
        Ok(Self {
            dimension: 1,
            weights: vec![1.0 / m as f64; m],
            nodes,
        })
    }

    /// Hopf-coordinate product grid on the unit sphere of ℂ², at least
    /// `target` nodes. The phase grids carry a half-cell offset so no node
    /// has Im ζ₁ = 0 near the pole at 𝟏.
    pub fn sphere_c2(target: usize) -> Result<Self> {
        if target < 16 {
            return Err(LabError::GridTooSmall { size: target, minimum: 16 });
        }
        let n_t = ((target as f64).powf(1.0 / 3.0).round() as usize).max(2);
        let n_phi = ((target as f64 / n_t as f64).sqrt().ceil() as usize).max(2);
        let (x, w) = gauss_legendre(n_t);
        let tau = std::f64::consts::TAU;
        let mut nodes = Vec::with_capacity(n_t * n_phi * n_phi);
        let mut weights = Vec::with_capacity(n_t * n_phi * n_phi);
        for (xi, wi) in x.iter().zip(&w) {
            let t = 0.5 * (xi + 1.0);
            let wt = 0.5 * wi;
            let c = (1.0 - t).sqrt();
            let s = t.sqrt();
            for b in 0..n_phi {
                let phi1 = tau * (b as f64 + 0.5) / n_phi as f64;
                let z1 = Complex64::from_polar(c, phi1);
                for d in 0..n_phi {
                    let phi2 = tau * (d as f64 + 0.5) / n_phi as f64;
                    let z2 = Complex64::from_polar(s, phi2);
                    nodes.push(SpherePoint::new(vec![z1, z2])?);
                    weights.push(wt / (n_phi * n_phi) as f64);
                }
            }
        }
        // kill accumulated rounding so constants integrate exactly
        let total: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= total;
        }
        Ok(Self {
            dimension: 2,
            nodes,
            weights,
        })
    }

    /// Grid for the boundary sphere of ℂⁿ with at least `target` nodes.
    pub fn new(dimension: usize, target: usize) -> Result<Self> {
        match dimension {
            1 => Self::circle(target),
            2 => Self::sphere_c2(target),
            _ => Err(LabError::GridUnsupportedDimension { dimension }),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SpherePoint] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpherePoint, f64)> {
        self.nodes.iter().zip(self.weights.iter().copied())
    }

    /// ∫ f dσ by the grid weights.
    pub fn integrate<F: Fn(&SpherePoint) -> Complex64>(&self, f: F) -> Complex64 {
        self.iter().map(|(node, w)| f(node) * w).sum()
    }

    pub fn integrate_real<F: Fn(&SpherePoint) -> f64>(&self, f: F) -> f64 {
        self.iter().map(|(node, w)| f(node) * w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(8);
        // ∫_{-1}^{1} x^4 dx = 2/5
        let s: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(4)).sum();
        assert!((s - 0.4).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn circle_weights_and_moments() {
        let g = BoundaryGrid::circle(256).unwrap();
        let total: f64 = g.weights().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        let mean = g.integrate(|z| z.coords()[0]);
        assert!(mean.norm() < 1e-10);
    }

    #[test]
    fn sphere_weights_and_first_moment() {
        let g = BoundaryGrid::sphere_c2(4096).unwrap();
        assert!(g.len() >= 4096);
        let total: f64 = g.weights().iter().sum();
        assert!((total - 1.0).abs() < 1e-13);
        let mean = g.integrate(|z| z.coords()[0]);
        assert!(mean.norm() < 1e-10);
    }

    #[test]
    fn sphere_monomial_moments_match_beta_integrals() {
        // ∫ |ζ₁|^{2p} |ζ₂|^{2q} dσ = p! q! / (p+q+1)!
        let g = BoundaryGrid::sphere_c2(4096).unwrap();
        let cases = [((1, 0), 0.5), ((2, 0), 1.0 / 3.0), ((1, 1), 1.0 / 6.0), ((3, 1), 1.0 / 20.0)];
        for ((p, q), expected) in cases {
            let m = g.integrate_real(|z| {
                z.coords()[0].norm_sqr().powi(p) * z.coords()[1].norm_sqr().powi(q)
            });
            assert!(
                (m - expected).abs() < 1e-12,
                "moment ({p},{q}) = {m}, expected {expected}"
            );
        }
    }

    #[test]
    fn unsupported_dimension_is_an_error() {
        assert!(BoundaryGrid::new(3, 1000).is_err());
    }
}
