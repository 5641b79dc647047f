//! Certified lower bounds on the Hilbert-space dimension of a quantum system,
//! computed from nothing more than the observed outcome statistics
//! `p(a|j,r)` of `m` measurements on `l` preparations.
//!
//! The toolkit treats the preparations as a generalized random access code:
//! strings over the outcome alphabet are associated with preparations, each
//! string position is decoded by one of the available measurements, and
//! entropic counting arguments then force a minimum dimension on any quantum
//! model reproducing the statistics. The same machinery converts two-player
//! non-local games into the encoding picture via the states steered on one
//! party's side, and the `quantum` module provides desk-scale linear algebra
//! to verify explicit models and to compute certified min-entropies.
//!
//! Entry points:
//!
//! * [`table::ProbabilityTable`] — the observed data, validated.
//! * [`bounds::search_bound`] — maximizes the dimension exponent over
//!   encodings, decodings, relabelings and priors.
//! * [`nonlocal::game_dim_bound`] — the bound for unique non-local games.
//! * [`quantum::guessing_probability`] — certified state-discrimination
//!   values backing the min-entropy computations.
//!
//! All logarithms are base 2 and all entropies are reported in bits.

pub mod bounds;
pub mod dist;
pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod nonlocal;
pub mod quantum;
pub mod table;
pub mod tol;

pub use bounds::{
    blahut_arimoto, capacity_bound, decoding_joint, dim_from_exponent, fano_bound, proto_bound,
    search_bound, Assignment, BoundReport, PriorMode, SearchConfig, SearchMode,
};
pub use dist::{Channel, Distribution, JointDistribution};
pub use entropy::{
    binary_entropy, conditional_entropy, fano_penalty, mutual_information, shannon_entropy,
};
pub use error::{Error, Result};
pub use nonlocal::{Game, ObservedStats, WinningAnswerMap};
pub use quantum::{
    guessing_probability, helstrom, min_entropy, verify_model, von_neumann_entropy, ComplexMatrix,
    CqEnsemble, DensityMatrix, Povm, QuantumModel,
};
pub use table::{DitString, ProbabilityTable};
