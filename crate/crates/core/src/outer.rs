//! Outer functions with prescribed piecewise-constant boundary modulus,
//! reconstructed through the Herglotz integral of the log-modulus.
//!
//! For a step modulus the integral is evaluated arc by arc from the closed
//! form ∫ (e^{iθ}+w)/(e^{iθ}-w) dθ = [-θ + 2·arg(e^{iθ}-w)] - 2i·ln|e^{iθ}-w|.
//! The argument of e^{iθ} - w is strictly increasing in θ for |w| < 1 and
//! gains exactly 2π per revolution, so the continuous branch over an arc is
//! the principal difference lifted into [0, 2π). Uniform grid quadrature
//! cannot resolve the kernel at the 0.999-dilations the recovery checks
//! use, which is why the arcs are integrated exactly.

use num_complex::Complex64;

use crate::ball::BallFunction;
use crate::error::{LabError, Result};
use crate::grid::BoundaryGrid;

const TAU: f64 = std::f64::consts::TAU;

/// One constant-level arc of a step modulus.
#[derive(Debug, Clone, Copy)]
pub struct StepArc {
    pub start: f64,
    pub end: f64,
    pub level: f64,
}

/// A positive piecewise-constant boundary modulus covering the circle.
#[derive(Debug, Clone)]
pub struct StepModulus {
    arcs: Vec<StepArc>,
}

fn check_level(level: f64) -> Result<()> {
    if !(level > 0.0) {
        return Err(LabError::NonpositiveLevel { level });
    }
    if !(1e-6..=1e6).contains(&level) {
        return Err(LabError::LevelOutOfRange { level });
    }
    Ok(())
}

impl StepModulus {
    /// Builds a modulus from arcs that partition [0, 2π) up to endpoints.
    pub fn from_arcs(mut arcs: Vec<StepArc>) -> Result<Self> {
        assert!(!arcs.is_empty());
        for arc in &arcs {
            check_level(arc.level)?;
            assert!(arc.end > arc.start, "arcs must have positive length");
        }
        arcs.sort_by(|a, b| a.start.total_cmp(&b.start));
        let mut cursor = 0.0;
        for arc in &arcs {
            if (arc.start - cursor).abs() > 1e-12 {
                return Err(LabError::OverlappingArcs { angle: arc.start });
            }
            cursor = arc.end;
        }
        if (cursor - TAU).abs() > 1e-12 {
            return Err(LabError::OverlappingArcs { angle: cursor });
        }
        Ok(Self { arcs })
    }

    pub fn constant(level: f64) -> Result<Self> {
        check_level(level)?;
        Ok(Self {
            arcs: vec![StepArc {
                start: 0.0,
                end: TAU,
                level,
            }],
        })
    }

    /// Caps at the given angular intervals with prescribed levels, a
    /// constant background elsewhere. Caps must be disjoint inside [0, 2π).
    pub fn with_caps(caps: &[(f64, f64)], levels: &[f64], background: f64) -> Result<Self> {
        assert_eq!(caps.len(), levels.len());
        check_level(background)?;
        let mut tagged: Vec<(f64, f64, f64)> = caps
            .iter()
            .zip(levels)
            .map(|(&(a, b), &lv)| (a, b, lv))
            .collect();
        tagged.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut arcs = Vec::new();
        let mut cursor = 0.0;
        for &(a, b, lv) in &tagged {
            check_level(lv)?;
            assert!(b > a && (0.0..=TAU).contains(&a) && b <= TAU);
            if a < cursor - 1e-12 {
                return Err(LabError::OverlappingArcs { angle: a });
            }
            if a > cursor {
                arcs.push(StepArc {
                    start: cursor,
                    end: a,
                    level: background,
                });
            }
            arcs.push(StepArc {
                start: a,
                end: b,
                level: lv,
            });
            cursor = b;
        }
        if cursor < TAU {
            arcs.push(StepArc {
                start: cursor,
                end: TAU,
                level: background,
            });
        }
        Self::from_arcs(arcs)
    }

    pub fn arcs(&self) -> &[StepArc] {
        &self.arcs
    }

    /// ψ(θ) for θ normalized into [0, 2π).
    pub fn value_at(&self, theta: f64) -> f64 {
        let t = theta.rem_euclid(TAU);
        self.arcs
            .iter()
            .find(|arc| t >= arc.start && t < arc.end)
            .map(|arc| arc.level)
            .unwrap_or_else(|| self.arcs.last().expect("nonempty").level)
    }

    /// Arc-length weighted mean of log ψ, the exact value of log |F(0)|.
    pub fn log_mean(&self) -> f64 {
        self.arcs
            .iter()
            .map(|arc| arc.level.ln() * (arc.end - arc.start))
            .sum::<f64>()
            / TAU
    }
}

/// ∫_{t1}^{t2} (e^{iθ}+w)/(e^{iθ}-w) dθ from the closed-form antiderivative.
fn arc_kernel_integral(w: Complex64, t1: f64, t2: f64) -> Complex64 {
    let z1 = Complex64::from_polar(1.0, t1) - w;
    let z2 = Complex64::from_polar(1.0, t2) - w;
    let dln = (z2.norm() / z1.norm()).ln();
    let length = t2 - t1;
    let darg = if length >= TAU - 1e-12 {
        TAU
    } else {
        (z2 / z1).arg().rem_euclid(TAU)
    };
    Complex64::new(-length + 2.0 * darg, -2.0 * dln)
}

/// A zero-free bounded holomorphic function on the disc with boundary
/// modulus ψ, evaluated through the exponentiated Herglotz integral.
#[derive(Debug, Clone)]
pub struct OuterFunction {
    modulus: StepModulus,
    grid: BoundaryGrid,
}

impl OuterFunction {
    pub fn modulus(&self) -> &StepModulus {
        &self.modulus
    }

    pub fn grid(&self) -> &BoundaryGrid {
        &self.grid
    }

    /// F(w) for |w| < 1. Never zero: the Herglotz exponent stays between
    /// the extreme log levels.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        assert!(w.norm() < 1.0, "outer functions are evaluated inside the disc");
        let herglotz: Complex64 = self
            .modulus
            .arcs()
            .iter()
            .map(|arc| arc.level.ln() * arc_kernel_integral(w, arc.start, arc.end))
            .sum();
        (herglotz / TAU).exp()
    }

    /// Harmonic measure of the j-th arc seen from w.
    pub fn harmonic_measure(&self, j: usize, w: Complex64) -> f64 {
        let arc = self.modulus.arcs()[j];
        arc_kernel_integral(w, arc.start, arc.end).re / TAU
    }

    /// The prescribed boundary modulus at angle θ.
    pub fn boundary_modulus_at(&self, theta: f64) -> f64 {
        self.modulus.value_at(theta)
    }

    /// The outer function as a one-variable evaluation callback; the sup
    /// bound is the largest level.
    pub fn to_ball_function(&self) -> BallFunction {
        let this = self.clone();
        let sup = this
            .modulus
            .arcs()
            .iter()
            .map(|a| a.level)
            .fold(0.0, f64::max);
        BallFunction::new(1, move |z| this.eval(z[0])).with_sup_bound(sup)
    }
}

/// Builds the outer function with prescribed step modulus. The grid is the
/// sampling carrier for boundary estimates; the Herglotz integral itself is
/// exact over each arc.
pub fn outer_from_modulus(modulus: StepModulus, grid_size: usize) -> Result<OuterFunction> {
    if grid_size < 256 {
        return Err(LabError::GridTooSmall {
            size: grid_size,
            minimum: 256,
        });
    }
    Ok(OuterFunction {
        modulus,
        grid: BoundaryGrid::circle(grid_size)?,
    })
}

/// Boundary modulus 1 on the upper half-circle, e on the lower: the
/// separator of the upper and lower fiber unions.
pub fn halfcircle_separator() -> OuterFunction {
    let modulus = StepModulus::from_arcs(vec![
        StepArc {
            start: 0.0,
            end: std::f64::consts::PI,
            level: 1.0,
        },
        StepArc {
            start: std::f64::consts::PI,
            end: TAU,
            level: std::f64::consts::E,
        },
    ])
    .expect("half circles partition the circle");
    outer_from_modulus(modulus, 4096).expect("default grid is large enough")
}

/// Boundary modulus e^{(-1)^j} on the j-th cap (in input order), 1 off the
/// caps. A vanishing off-cap modulus would force the outer function to be
/// identically zero in one variable, so the off-cap level is 1; the
/// even/odd alternation between e and 1/e is what the oscillation argument
/// uses.
pub fn cap_oscillator(caps: &[(f64, f64)]) -> Result<OuterFunction> {
    let levels: Vec<f64> = (0..caps.len())
        .map(|j| {
            if j % 2 == 0 {
                std::f64::consts::E
            } else {
                1.0 / std::f64::consts::E
            }
        })
        .collect();
    let modulus = StepModulus::with_caps(caps, &levels, 1.0)?;
    outer_from_modulus(modulus, 4096)
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: f64 = std::f64::consts::E;
    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn constant_modulus_gives_constant_function() {
        let f = outer_from_modulus(StepModulus::constant(1.0).unwrap(), 256).unwrap();
        for w in [
            Complex64::ZERO,
            Complex64::new(0.4, 0.3),
            Complex64::new(-0.9, 0.0),
        ] {
            assert!((f.eval(w) - Complex64::ONE).norm() < 1e-12);
        }
    }

    #[test]
    fn center_value_is_exp_of_log_mean() {
        let f = halfcircle_separator();
        let expected = E.sqrt();
        assert!((f.eval(Complex64::ZERO).norm() - expected).abs() < 1e-12);
        assert!((f.modulus().log_mean() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn separator_recovers_levels_at_arc_midpoints() {
        let f = halfcircle_separator();
        let upper = f.eval(Complex64::from_polar(0.999, PI / 2.0)).norm();
        let lower = f.eval(Complex64::from_polar(0.999, 1.5 * PI)).norm();
        assert!((upper - 1.0).abs() < 0.02);
        assert!((lower - E).abs() / E < 0.02);
    }

    #[test]
    fn oscillator_alternates_between_e_and_inverse_e() {
        let caps: Vec<(f64, f64)> = (0..4).map(|j| (0.2 + 1.5 * j as f64, 0.7 + 1.5 * j as f64)).collect();
        let f = cap_oscillator(&caps).unwrap();
        for (j, &(a, b)) in caps.iter().enumerate() {
            let mid = 0.5 * (a + b);
            let v = f.eval(Complex64::from_polar(0.999, mid)).norm();
            let target = if j % 2 == 0 { E } else { 1.0 / E };
            assert!(
                (v - target).abs() / target < 0.02,
                "cap {j}: |F| = {v}, target {target}"
            );
        }
    }

    #[test]
    fn single_cap_reduces_to_one_arc_outer() {
        let f = cap_oscillator(&[(1.0, 2.0)]).unwrap();
        // center modulus exp(1/(2π)·(2-1)) from the single level-e arc
        let expected = (1.0 / TAU).exp();
        assert!((f.eval(Complex64::ZERO).norm() - expected).abs() < 1e-12);
    }

    #[test]
    fn no_caps_is_the_constant_one() {
        let f = cap_oscillator(&[]).unwrap();
        assert!((f.eval(Complex64::new(0.3, -0.5)) - Complex64::ONE).norm() < 1e-12);
    }

    #[test]
    fn overlapping_caps_are_rejected() {
        assert!(matches!(
            cap_oscillator(&[(0.5, 1.5), (1.0, 2.0)]),
            Err(LabError::OverlappingArcs { .. })
        ));
    }

    #[test]
    fn nonpositive_level_is_rejected() {
        assert!(matches!(
            StepModulus::constant(0.0),
            Err(LabError::NonpositiveLevel { .. })
        ));
        assert!(matches!(
            StepModulus::constant(1e9),
            Err(LabError::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn harmonic_measures_sum_to_one() {
        let f = halfcircle_separator();
        for w in [Complex64::ZERO, Complex64::new(0.6, -0.7)] {
            let total: f64 = (0..2).map(|j| f.harmonic_measure(j, w)).sum();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_free_on_disc_sample() {
        let f = halfcircle_separator();
        let mut min = f64::INFINITY;
        for ir in 0..100 {
            let r = 0.999 * (ir as f64 + 0.5) / 100.0;
            for ia in 0..100 {
                let w = Complex64::from_polar(r, TAU * ia as f64 / 100.0);
                min = min.min(f.eval(w).norm());
            }
        }
        // bounded below by the smallest level up to the harmonic average
        assert!(min > 0.9);
    }

    #[test]
    fn modulus_lookup_matches_arcs() {
        let m = StepModulus::with_caps(&[(1.0, 2.0)], &[E], 1.0).unwrap();
        assert!((m.value_at(1.5) - E).abs() < 1e-15);
        assert!((m.value_at(0.5) - 1.0).abs() < 1e-15);
        assert!((m.value_at(1.5 + TAU) - E).abs() < 1e-15);
    }
}
