//! Spectral fixed-point solver for the planar stationary flow problem.
//!
//! The library decomposes fields into angular Fourier modes over a graded
//! radial grid, applies radial Green-type integral operators to invert the
//! mode-wise Laplacians, assembles the advection sources, and runs a Picard
//! iteration whose fixed point is the perturbation vorticity around a
//! compactly supported radial swirl. The `verify` module measures weighted
//! sup norms, residuals, matching gaps and the far-field decay rate of the
//! reconstructed velocity; `oracle` holds the closed-form quadrature battery.

pub mod error;
pub mod grid;
pub mod nonlinear;
pub mod operators;
pub mod oracle;
pub mod solver;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{build_grid, differentiate, integrate, Grading, RadialGrid, RadialProfile, TailModel};
pub use operators::{laplacian_mode, map_l, op_i, op_j, ComplexIndex, ModeIndex, UpperBound};
pub use solver::{
    background_from_phi, map_phi, map_s, picard_solve, reconstruct_solution, BackgroundFlow,
    ContractionBudget, IterationReport, PicardOutcome, Solution, SolverParams,
};
pub use spectral::{decompose_angular, decompose_samples, synthesize_angular, FourierVector, ZeroMode};
pub use verify::{
    consistency_gstar_h, decay_metric, matching_gap, norm_weighted, residual_system, DecayMetric,
    NormFamily, ResidualReport, WeightedNormSpec,
};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
