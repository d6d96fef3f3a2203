//! Numeric invariants of colored graphs and checkers for the identities and
//! bounds relating them.

pub mod bounds;
pub mod checks;
pub mod genus;
pub mod permutation;
pub mod report;

use serde::Serializer;
use thiserror::Error;

use crate::boundary::BoundaryError;
use crate::graph::GraphError;
use crate::moves::MoveError;
use crate::Genus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("graph has boundary; a regular graph is required")]
    NotRegular,
    #[error("graph is regular; a graph with boundary is required")]
    NoBoundary,
    #[error("bipartite graph gave a non-integral genus for {permutation}")]
    NonIntegralGenusForBipartite { permutation: String },
    #[error("expected dimension {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("residue counts do not match: {0}")]
    ResidueShape(String),
    #[error("number of boundary components must be at least 1, got {0}")]
    InvalidBoundaryCount(i64),
    #[error("{name} must be non-negative, got {value}")]
    NegativeRank { name: &'static str, value: i64 },
    #[error(transparent)]
    Boundary(BoundaryError),
    #[error(transparent)]
    Move(MoveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<BoundaryError> for InvariantError {
    fn from(e: BoundaryError) -> Self {
        match e {
            BoundaryError::NoBoundary => InvariantError::NoBoundary,
            BoundaryError::Graph(g) => InvariantError::Graph(g),
            other => InvariantError::Boundary(other),
        }
    }
}

impl From<MoveError> for InvariantError {
    fn from(e: MoveError) -> Self {
        match e {
            MoveError::NoBoundary => InvariantError::NoBoundary,
            MoveError::Boundary(b) => b.into(),
            MoveError::Graph(g) => InvariantError::Graph(g),
            other => InvariantError::Move(other),
        }
    }
}

/// Genus values are written as strings (`"1/2"`, `"3"`).
pub(crate) fn serialize_genus<S: Serializer>(g: &Genus, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(g)
}

pub(crate) fn serialize_opt_genus<S: Serializer>(
    g: &Option<Genus>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.collect_str(g),
        None => s.serialize_none(),
    }
}

pub use bounds::{
    check_bound_on_gem, check_dehn_sommerville, check_semisimple, gem_complexity_relation,
    lower_bound_thm, BoundReport, DehnSommervilleReport, GemComplexityReport, LowerBound,
    SemisimpleReport,
};
pub use checks::{
    check_omega_pairing, check_regularization_identities, LemmaCheck, OmegaPair,
    OmegaPairingReport, RegularizationReport, TransferCase, TransferCheck,
};
pub use genus::{
    euler_characteristic, f_vector, gurau_degree, regular_genus, rho_boundary, rho_closed,
    rho_table, BoundaryGenusData, RegularGenus,
};
pub use permutation::CyclicPermutation;
pub use report::{GEntry, InvariantReport, RhoEntry};
