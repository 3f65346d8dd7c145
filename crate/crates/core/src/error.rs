//! Crate-wide error type aggregating the per-module errors.

use thiserror::Error;

use crate::entanglement::EntanglementError;
use crate::graph::GraphError;
use crate::kak::KakError;
use crate::linalg::LinalgError;
use crate::pauli::PauliError;
use crate::tenfold::TenfoldError;

#[derive(Debug, Error)]
pub enum ToolkitError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
    #[error(transparent)]
    Kak(#[from] KakError),
    #[error(transparent)]
    Tenfold(#[from] TenfoldError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
