//! Numerical toolkit for two-qubit Hamiltonians and gates.
//!
//! The crate classifies, decomposes and analyzes two-qubit systems:
//!
//! - [`linalg`]: dense complex matrices, Hermitian eigendecomposition,
//!   matrix exponentials, joint orthogonal diagonalization;
//! - [`pauli`]: the Pauli-product coefficient form of a two-qubit
//!   Hamiltonian and its Cartan split into local and entangling sectors;
//! - [`entanglement`]: antiunitary operators, the magic basis, concurrence
//!   and concurrence dynamics;
//! - [`kak`]: the constructive Cartan (KAK) factorization of U(4) into
//!   local x canonical-entangler x local;
//! - [`tenfold`]: antiunitary symmetry detection, the ten symmetry classes,
//!   flattened-Hamiltonian signatures, Clifford bookkeeping and the stable
//!   and finite homotopy tables;
//! - [`graph`]: the four-site quantum-graph form of the canonical
//!   interaction Hamiltonian, its Weyl symbol, topological invariants and
//!   zero-mode scans;
//! - [`json`]: the `f64` wire formats used by the command-line front end.
//!
//! All numerical types are generic over the scalar through
//! [`scalar::Real`] and default to `f64`.

pub mod entanglement;
pub mod error;
pub mod graph;
pub mod json;
pub mod kak;
pub mod linalg;
pub mod pauli;
pub mod random;
pub mod scalar;
pub mod tenfold;

pub use entanglement::{
    concurrence, concurrence_trajectory, magic_basis_transform, magic_matrix,
    make_kane_mele_theta, make_particle_hole_4, make_time_reversal_2q, Antiunitary, BellState,
    PureState, Sign,
};
pub use error::ToolkitError;
pub use graph::{
    canonical_hamiltonian, graph_hamiltonian, invariant_nu, phase_scan, scan_to_csv, spectrum,
    weyl_symbol, GraphParams, InvariantReport, LineLabel, ScanCell, ScanRow, SymbolBlocks,
};
pub use kak::{kak_decompose, kak_decompose_seeded, kak_rebuild, phi_inverse, KakFactors};
pub use linalg::{
    eig_hermitian, expm_i, joint_orthogonal_diagonalize, joint_orthogonal_diagonalize_seeded,
    tensor, CMatrix, EigenSystem,
};
pub use pauli::{
    cartan_split, is_local_hamiltonian, pauli_1q, pauli_2q, theta_conjugation_check, CartanSplit,
    PauliDecomposition, ThetaSector,
};
pub use scalar::{default_tol, Real};
pub use tenfold::{
    classify, clifford_signature, detect_symmetry, finite_homotopy, flatten,
    search_pauli_antiunitaries, signature_invariant, stable_homotopy, ClassName,
    CliffordSignature, FiniteSpace, FlattenResult, HomotopyGroup, SymmetryClass, SymmetryKind,
};

/// Concrete `f64` aliases for the core types.
pub type CMatrix64 = linalg::CMatrix<f64>;
pub type EigenSystem64 = linalg::EigenSystem<f64>;
pub type PauliDecomposition64 = pauli::PauliDecomposition<f64>;
pub type PureState64 = entanglement::PureState<f64>;
pub type Antiunitary64 = entanglement::Antiunitary<f64>;
pub type KakFactors64 = kak::KakFactors<f64>;
pub type GraphParams64 = graph::GraphParams<f64>;
