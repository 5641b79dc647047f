//! Numeric tolerances and size caps shared across the crate.

/// Tolerance for probability validation: row sums, nonnegativity, total mass.
/// Deviations below this are renormalized away; larger ones are errors.
pub const VALIDATION_TOL: f64 = 1e-9;

/// Absolute tolerance used when comparing entropies and exponents.
pub const ENTROPY_CMP_TOL: f64 = 1e-9;

/// Slack subtracted before taking the ceiling of `2^C`, so that exponents
/// sitting exactly on an integer power do not round up spuriously.
pub const DIM_CEIL_SLACK: f64 = 1e-9;

/// Hermiticity tolerance for density matrices and POVM elements.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Trace-one tolerance for density matrices; identity-sum tolerance for POVMs.
pub const TRACE_TOL: f64 = 1e-10;

/// Eigenvalues of a density matrix may dip this far below zero before the
/// matrix is rejected; smaller dips are clamped to zero in entropy sums.
pub const PSD_TOL: f64 = 1e-10;

/// Default eigenvalue threshold when counting rank.
pub const RANK_THRESHOLD: f64 = 1e-9;

/// Largest matrix dimension the dense desk-scale linear algebra accepts.
pub const MAX_MATRIX_DIM: usize = 16;

/// Default certified duality-gap tolerance for the guessing-probability solver.
pub const GUESS_TOL: f64 = 1e-8;

/// Default iteration cap for the guessing-probability solver.
pub const GUESS_MAX_ITER: usize = 100_000;

/// Default capacity-bracket tolerance for Blahut–Arimoto.
pub const BA_TOL: f64 = 1e-9;

/// Default iteration cap for Blahut–Arimoto.
pub const BA_MAX_ITER: usize = 100_000;

/// Default cap on the number of assignments enumerated exhaustively.
pub const MAX_ENUMERATION: u64 = 1_000_000;
