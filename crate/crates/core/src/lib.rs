//! Numerical laboratory for bounded holomorphic functions on the unit ball
//! of ℂⁿ: the parabolic automorphism and its closed-form iterates, the
//! certified dyadic infinite product embedding a disc direction into the
//! fiber over 𝟏, cluster-set probes of boundary behavior, outer functions
//! with prescribed step modulus, and the Harnack part metric with
//! representing measures on discretized boundaries.
//!
//! Everything is evaluation based and deterministic: functions are
//! callbacks with declared sup-norm bounds, randomness is seeded, and
//! certified quantities (tail constants, truncation bounds, Harnack
//! brackets) always come with the inequality they promise.

pub mod automorphism;
pub mod ball;
pub mod boundary;
pub mod error;
pub mod grid;
pub mod outer;
pub mod parts;
pub mod product;
pub mod verify;

pub use automorphism::{orbit, tail_constant, OrbitRecord, ParabolicMap, TailConstant};
pub use ball::{
    classify_point, hermitian_inner, rotate_function, slice_restrict, unitary_moving,
    BallFunction, BallPoint, PointClass, SliceFunction, SpherePoint, UnitaryRotation,
    TOL_BOUNDARY,
};
pub use boundary::{
    approach_paths, cluster_estimate, continuity_probe, orbit_paths_from_seeds, peak_function,
    sup_norm_boundary_estimate, zero_approach_search, ApproachPath, ClusterEstimate,
    ContinuityProbe, PathKind, ZeroApproachOutcome,
};
pub use error::{LabError, Result};
pub use grid::BoundaryGrid;
pub use outer::{
    cap_oscillator, halfcircle_separator, outer_from_modulus, OuterFunction, StepArc, StepModulus,
};
pub use parts::{
    dual_norm_estimate, harnack_bracket, harnack_lower, harnack_upper, part_dichotomy_suite,
    part_metric, poisson_kernel, representing_measures, transported_measure, DichotomyRow,
    HarnackEstimate, MeasurePair, PartMetric,
};
pub use product::{
    build_product, convergence_table, ConvergenceRow, ConvergenceTable, EvalResult,
    ProductFunction,
};
pub use verify::{run_all, Assertion, CriterionResult, Relation, VerifyConfig};
