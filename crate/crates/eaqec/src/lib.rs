//! Construction, verification and noise analysis of entanglement-assisted
//! quantum error-correcting codes built from graph states.
//!
//! A code here is a subspace spanned by graph-basis states
//! `|Γ_C⟩ = Z_C |Γ⟩` of a graph state whose vertices split into noisy and
//! perfectly protected ("pure") qubits. The crate provides:
//!
//! * [`bits`] / [`pauli`]: bit-level GF(2) linear algebra and exact
//!   Pauli-group arithmetic;
//! * [`graph`] / [`statevec`]: graphs with protected vertices, graph-state
//!   stabilizer algebra, and an exact state-vector realization used as the
//!   ground-truth oracle;
//! * [`search`]: purity sets, coverable families, and the coding-clique /
//!   coding-group search with stabilizer extraction;
//! * [`verify`]: symplectic and state-vector correctness oracles, syndrome
//!   tables, degeneracy analysis and the quantum Hamming bound;
//! * [`noise`]: effective-coding probability (exact polynomial and Monte
//!   Carlo), infidelity and curve emission;
//! * [`catalog`]: the built-in star family, reconstruction of the 10-qubit
//!   code from its printed stabilizer table, the best-known-parameters
//!   regression, and JSON record persistence.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything is safe to share across threads.

pub mod bits;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod noise;
pub mod pauli;
pub mod poly;
pub mod search;
pub mod statevec;
pub mod verify;

pub use bits::{in_span, BinaryMatrix, Gf2Span, VertexSet};
pub use catalog::{
    coffeepot_code, reconstruct_adjacency, star_code, table1_regression, CodeParams, CodeRecord,
    StabilizerRow,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use noise::{
    decoder_table, effective_coding_probability, infidelity, infidelity_curve, monte_carlo_pc,
    AbstractProfile, CorrectabilityProfile, DecoderProfile, DecodingRule, NoiseModel,
};
pub use pauli::PauliOperator;
pub use poly::{Polynomial, Rational};
pub use search::{
    candidate_subsets, codeword_basis, coverable_family, extract_stabilizer, purity_set, search,
    CodingClique, SearchMode, SearchProblem, SearchTarget,
};
pub use statevec::{basis_overlap, build_graph_state, StateVector};
pub use verify::{
    degenerate_pairs, hamming_bound, hamming_bound_one_error, kl_verify_statevector,
    symplectic_verify, syndrome, BoundCheck, Syndrome, VerificationReport,
};
