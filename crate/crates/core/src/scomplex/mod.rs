//! Finite simplicial sets: presentation, maps, colimits, products and
//! levelwise mapping spaces.

mod build;
pub mod constructions;
pub mod maps;
pub mod op;
pub mod sset;

pub use constructions::{
    boundary, boundary_inclusion, coequalizer, coproduct, coproduct_named, horn, horn_inclusion, inclusion, point,
    product, product_map, pushout, pushout_named, rebound, standard_simplex, Coproduct, Product, Pushout,
};
pub use maps::{enumerate_maps, hom_level, operator_map, square_space, squares_at_level, MapSearch, SquareLevel, SquareSpace, DEFAULT_BUDGET};
pub use op::{all_monotone, surjections, Monotone, SimplexOp};
pub use sset::{Simplex, SimplicialMap, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScomplexError {
    #[error("dimension {n} exceeds dim_bound {dim_bound}")]
    DimensionOutOfRange { n: usize, dim_bound: usize },
    #[error("horn index {k} out of range for dimension {n}")]
    HornIndex { n: usize, k: usize },
    #[error("dim_bound mismatch: {0} vs {1}")]
    DimBoundMismatch(usize, usize),
    #[error("maps do not share the required endpoints")]
    EndpointMismatch,
    #[error("maps are not composable")]
    NotComposable,
    #[error("enumeration budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid simplicial data: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}
