use thiserror::Error;

/// Errors surfaced by the laboratory's operations.
#[derive(Debug, Error)]
pub enum LabError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("point is not interior to the unit ball (norm {norm})")]
    NotInterior { norm: f64 },

    #[error("point is not on the unit sphere (norm {norm})")]
    NotOnSphere { norm: f64 },

    #[error("point lies outside the closed unit ball (norm {norm})")]
    OutsideClosedBall { norm: f64 },

    #[error("matrix is not unitary (max residual {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("evaluation point has norm {norm} beyond the certified working radius {radius}")]
    OutsideWorkingRadius { norm: f64, radius: f64 },

    #[error("truncation {actual} is insufficient for k_max {k_max}; need at least {needed}")]
    InsufficientTruncation { k_max: u32, needed: u32, actual: u32 },

    #[error("cluster estimation requires at least one approach path")]
    EmptyPaths,

    #[error("step modulus level {level} is not positive")]
    NonpositiveLevel { level: f64 },

    #[error("step-modulus levels must lie in [1e-6, 1e6]; got {level}")]
    LevelOutOfRange { level: f64 },

    #[error("arcs overlap near angle {angle}")]
    OverlappingArcs { angle: f64 },

    #[error("quadrature grid size {size} is below the minimum {minimum}")]
    GridTooSmall { size: usize, minimum: usize },

    #[error("boundary grids are implemented for dimensions 1 and 2 only; got {dimension}")]
    GridUnsupportedDimension { dimension: usize },

    #[error("representing measures are implemented at dimension 1 only; got {dimension}")]
    MeasuresUnsupportedDimension { dimension: usize },

    #[error("Harnack bound {b} is too small: density {density} turns negative at node {node}")]
    HarnackBoundTooSmall { b: f64, node: usize, density: f64 },

    #[error("transported density turns negative at node {node} (value {value:e})")]
    TransportNegativity { node: usize, value: f64 },

    #[error("input density does not represent the point: test '{test}' deviates by {deviation:e}")]
    NotRepresenting { test: String, deviation: f64 },
}

pub type Result<T> = std::result::Result<T, LabError>;
