//! Crate-wide error type.

use crate::solver::IterationReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("tail exponent {exponent} must exceed 1")]
    InvalidTailExponent { exponent: f64 },
    #[error("integral extends to infinity but the profile carries no tail model")]
    MissingTail,
    #[error("tail closure diverges: exponent {exponent} against weight power {weight_re}")]
    DivergentTail { exponent: f64, weight_re: f64 },
    #[error("integration bounds [{a}, {b}] are invalid")]
    InvalidBounds { a: f64, b: f64 },
    #[error("weight power {re} is not integrable at the origin")]
    SingularWeight { re: f64 },
    #[error("derivative data of order {order} is missing")]
    MissingDerivative { order: u8 },
    #[error("derivative order {order} unsupported (must be 1 or 2)")]
    UnsupportedOrder { order: u8 },
    #[error("index must have positive real part, got {re}{im:+}i")]
    InvalidIndex { re: f64, im: f64 },
    #[error("angular grid has {points} points, need at least {required} for cutoff {n_max}")]
    InsufficientAngularResolution {
        points: usize,
        required: usize,
        n_max: usize,
    },
    #[error("conjugate symmetry violated: {0}")]
    SymmetryViolation(String),
    #[error("invalid background flow: {0}")]
    InvalidBackground(String),
    #[error("invalid norm spec: {0}")]
    InvalidNormSpec(String),
    #[error("profiles live on different grids")]
    GridMismatch,
    #[error("mode {0} is outside the stored band")]
    ModeOutOfBand(i32),
    #[error("iteration diverged at step {step}: increment ratios {ratios:?}")]
    Diverged {
        step: usize,
        ratios: Vec<f64>,
        report: Box<IterationReport>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
