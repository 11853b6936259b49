//! Algebraic derived completions: exact linear algebra, cosimplicial modules
//! and their cochain complexes, total complexes and spectral sequence pages.

mod bridge;
mod complex;
mod cosimplicial;
mod matrix;
mod spectral;

pub use bridge::{
    cosimplicial_map_failures, derived_completion_report, induced_map, linearize, resolution_to_additive, CompletionReport,
    ReportColumn,
};
pub use complex::{CochainComplex, CohomologyGroup};
pub use cosimplicial::{amitsur, Algebra, CosimplicialModule, MAX_LEVEL_DIM};
pub use matrix::{Matrix, Ring};
pub use spectral::{amitsur_chain, ss_pages, tot_truncated, Block, CosimplicialChainComplex, DoubleComplex, FilteredComplex, Page, SpectralSequence};

use crate::adjres::AdjError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompletionError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("d² ≠ 0 starting in degree {0}")]
    NotAComplex(i64),
    #[error("identity fails: {0}")]
    Identity(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Adj(#[from] AdjError),
}
