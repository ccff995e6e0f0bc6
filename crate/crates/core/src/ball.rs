//! Complex-vector geometry of the unit ball and sphere: points, unitary
//! rotations, complex-line slices, and evaluation-callback functions.
//!
//! Every construction downstream is evaluation based, so functions are
//! represented as callbacks together with an optional declared sup-norm
//! bound; there is no symbolic algebra.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{LabError, Result};

/// Default tolerance for sphere-membership checks. Double-precision
/// arithmetic on iterated Möbius maps drifts at roughly 1e-12 per step.
pub const TOL_BOUNDARY: f64 = 1e-9;

/// Euclidean norm of a complex vector.
pub fn euclidean_norm(z: &[Complex64]) -> f64 {
    z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian pairing Σ_k z_k · conj(w_k).
///
/// Conjugate-symmetric and positive on the nonzero diagonal.
pub fn hermitian_inner(z: &[Complex64], w: &[Complex64]) -> Result<Complex64> {
    if z.len() != w.len() {
        return Err(LabError::DimensionMismatch {
            expected: z.len(),
            actual: w.len(),
        });
    }
    Ok(z.iter().zip(w).map(|(a, b)| a * b.conj()).sum())
}

/// Location of a point relative to the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Interior,
    Boundary,
    Exterior,
}

/// Classifies a point as interior, boundary, or exterior at tolerance `tol`.
pub fn classify_point(z: &[Complex64], tol: f64) -> PointClass {
    assert!((0.0..=0.1).contains(&tol), "classification tolerance must lie in [0, 0.1]");
    let norm = euclidean_norm(z);
    if norm < 1.0 - tol {
        PointClass::Interior
    } else if (norm - 1.0).abs() <= tol {
        PointClass::Boundary
    } else {
        PointClass::Exterior
    }
}

/// A point strictly interior to the unit ball, with its norm cached.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint {
    coords: Vec<Complex64>,
    norm: f64,
}

impl BallPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        let norm = euclidean_norm(&coords);
        if norm >= 1.0 - TOL_BOUNDARY {
            return Err(LabError::NotInterior { norm });
        }
        Ok(Self { coords, norm })
    }

    /// The origin of ℂⁿ.
    pub fn origin(dimension: usize) -> Self {
        Self {
            coords: vec![Complex64::ZERO; dimension],
            norm: 0.0,
        }
    }

    /// Real multiple `t·e_k` of a standard basis vector, |t| < 1.
    pub fn scaled_basis(dimension: usize, k: usize, t: f64) -> Result<Self> {
        let mut coords = vec![Complex64::ZERO; dimension];
        coords[k] = Complex64::new(t, 0.0);
        Self::new(coords)
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    /// Euclidean distance to another point of ℂⁿ.
    pub fn distance_to(&self, other: &[Complex64]) -> f64 {
        self.coords
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// A point of the unit sphere S = ∂B.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    coords: Vec<Complex64>,
}

impl SpherePoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        let norm = euclidean_norm(&coords);
        if (norm - 1.0).abs() > TOL_BOUNDARY {
            return Err(LabError::NotOnSphere { norm });
        }
        Ok(Self { coords })
    }

    /// Rescales a nonzero vector onto the sphere.
    pub fn normalized(coords: Vec<Complex64>) -> Result<Self> {
        let norm = euclidean_norm(&coords);
        if norm == 0.0 {
            return Err(LabError::NotOnSphere { norm });
        }
        Ok(Self {
            coords: coords.into_iter().map(|c| c / norm).collect(),
        })
    }

    /// Standard basis vector e_k.
    pub fn basis(dimension: usize, k: usize) -> Self {
        let mut coords = vec![Complex64::ZERO; dimension];
        coords[k] = Complex64::ONE;
        Self { coords }
    }

    /// The distinguished boundary point 𝟏 = (1, 0, …, 0).
    pub fn one(dimension: usize) -> Self {
        Self::basis(dimension, 0)
    }

    /// Circle point e^{iθ} (dimension 1).
    pub fn circle(theta: f64) -> Self {
        Self {
            coords: vec![Complex64::from_polar(1.0, theta)],
        }
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn distance_to(&self, other: &[Complex64]) -> f64 {
        self.coords
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// An element of U(n) acting on column vectors.
#[derive(Debug, Clone)]
pub struct UnitaryRotation {
    matrix: DMatrix<Complex64>,
}

impl UnitaryRotation {
    /// Wraps a matrix, checking σσ* = I entrywise to 1e-12.
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let n = matrix.nrows();
        let residual = (&matrix * matrix.adjoint() - DMatrix::<Complex64>::identity(n, n))
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if residual > 1e-12 {
            return Err(LabError::NotUnitary { residual });
        }
        Ok(Self { matrix })
    }

    pub fn identity(dimension: usize) -> Self {
        Self {
            matrix: DMatrix::identity(dimension, dimension),
        }
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Applies the rotation to a coordinate slice.
    pub fn apply(&self, z: &[Complex64]) -> Vec<Complex64> {
        let n = self.dimension();
        let mut out = vec![Complex64::ZERO; n];
        for (r, item) in out.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for c in 0..n {
                acc += self.matrix[(r, c)] * z[c];
            }
            *item = acc;
        }
        out
    }

    pub fn apply_sphere(&self, z: &SpherePoint) -> SpherePoint {
        SpherePoint {
            coords: self.apply(z.coords()),
        }
    }

    /// Composition: `self ∘ other` acts as z ↦ self(other(z)).
    pub fn compose(&self, other: &UnitaryRotation) -> UnitaryRotation {
        UnitaryRotation {
            matrix: &self.matrix * &other.matrix,
        }
    }

    /// Inverse rotation (the adjoint).
    pub fn inverse(&self) -> UnitaryRotation {
        UnitaryRotation {
            matrix: self.matrix.adjoint(),
        }
    }

    /// Rescales by det^{-1/n} so the determinant becomes 1. The action on
    /// points then differs from the original by a unimodular phase, so this
    /// is off by default everywhere fiber transport is the goal.
    pub fn normalize_determinant(&self) -> UnitaryRotation {
        let n = self.dimension() as f64;
        let det = self.matrix.determinant();
        let phase = Complex64::from_polar(1.0, -det.arg() / n);
        UnitaryRotation {
            matrix: self.matrix.map(|c| c * phase),
        }
    }
}

/// Builds a unitary σ with σα = β.
///
/// A Householder reflection carries α onto the phase-aligned multiple of β,
/// and a rank-one phase correction in the β direction removes the phase.
pub fn unitary_moving(alpha: &SpherePoint, beta: &SpherePoint) -> Result<UnitaryRotation> {
    let n = alpha.dimension();
    if beta.dimension() != n {
        return Err(LabError::DimensionMismatch {
            expected: n,
            actual: beta.dimension(),
        });
    }
    let a = alpha.coords();
    let b = beta.coords();
    let inner = hermitian_inner(a, b)?;
    let theta = inner.arg();
    let phase = Complex64::from_polar(1.0, theta);
    // β' = e^{iθ} β has real, nonnegative pairing with α.
    let b_aligned: Vec<Complex64> = b.iter().map(|c| c * phase).collect();

    let mut matrix = DMatrix::<Complex64>::identity(n, n);
    let diff: Vec<Complex64> = a.iter().zip(&b_aligned).map(|(x, y)| x - y).collect();
    let diff_norm = euclidean_norm(&diff);
    if diff_norm > 1e-14 {
        // H = I - 2 u u* with u = (α - β')/|α - β'| reflects α onto β'.
        let u: Vec<Complex64> = diff.iter().map(|c| c / diff_norm).collect();
        for r in 0..n {
            for c in 0..n {
                matrix[(r, c)] -= 2.0 * u[r] * u[c].conj();
            }
        }
    }
    // Multiply the β component by e^{-iθ}: U = I + (e^{-iθ} - 1) β β*.
    let corr = Complex64::from_polar(1.0, -theta) - Complex64::ONE;
    let mut correction = DMatrix::<Complex64>::identity(n, n);
    for r in 0..n {
        for c in 0..n {
            correction[(r, c)] += corr * b[r] * b[c].conj();
        }
    }
    UnitaryRotation::new(correction * matrix)
}

type EvalFn = dyn Fn(&[Complex64]) -> Complex64 + Send + Sync;

/// An n-variable function represented by an evaluation callback plus an
/// optional declared sup-norm bound.
#[derive(Clone)]
pub struct BallFunction {
    dimension: usize,
    sup_bound: Option<f64>,
    eval: Arc<EvalFn>,
}

impl std::fmt::Debug for BallFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BallFunction")
            .field("dimension", &self.dimension)
            .field("sup_bound", &self.sup_bound)
            .finish()
    }
}

impl BallFunction {
    pub fn new<F>(dimension: usize, eval: F) -> Self
    where
        F: Fn(&[Complex64]) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            dimension,
            sup_bound: None,
            eval: Arc::new(eval),
        }
    }

    pub fn with_sup_bound(mut self, bound: f64) -> Self {
        self.sup_bound = Some(bound);
        self
    }

    /// The k-th coordinate function, sup norm 1.
    pub fn coordinate(dimension: usize, k: usize) -> Self {
        assert!(k < dimension);
        Self::new(dimension, move |z| z[k]).with_sup_bound(1.0)
    }

    pub fn constant(dimension: usize, value: Complex64) -> Self {
        Self::new(dimension, move |_| value).with_sup_bound(value.norm())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn sup_bound(&self) -> Option<f64> {
        self.sup_bound
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        (self.eval)(z)
    }

    pub fn eval_ball(&self, z: &BallPoint) -> Complex64 {
        (self.eval)(z.coords())
    }
}

/// Rotated function z ↦ f(σz). Sup norms are preserved.
pub fn rotate_function(f: &BallFunction, sigma: &UnitaryRotation) -> BallFunction {
    let dimension = f.dimension();
    let sup = f.sup_bound;
    let inner = f.clone();
    let sigma = sigma.clone();
    let mut out = BallFunction::new(dimension, move |z| inner.eval(&sigma.apply(z)));
    out.sup_bound = sup;
    out
}

/// Restriction of an n-variable function to the complex line through α.
#[derive(Debug, Clone)]
pub struct SliceFunction {
    direction: SpherePoint,
    parent: BallFunction,
}

impl SliceFunction {
    pub fn direction(&self) -> &SpherePoint {
        &self.direction
    }

    /// g(w) = f(w·α) on the unit disc.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let scaled: Vec<Complex64> = self.direction.coords().iter().map(|c| c * w).collect();
        self.parent.eval(&scaled)
    }
}

/// Slices an n-variable function along the complex line through α.
pub fn slice_restrict(f: &BallFunction, alpha: &SpherePoint) -> SliceFunction {
    SliceFunction {
        direction: alpha.clone(),
        parent: f.clone(),
    }
}
