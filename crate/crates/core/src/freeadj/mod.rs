//! The free adjunction: pasting words, their normal forms as ordinal maps,
//! and interpretation in a concrete adjunction.

mod classify;
mod ordinal;
mod realize;
mod word;

pub use classify::{
    canonical_word, classify, classify_text, equal_2cells, regions_from_normal_form, standard_path, Classified, HomTag,
};
pub use ordinal::{all_ordinal_maps, glued_sum, ordinal_sum, OrdinalMap};
pub use realize::{apply_path, apply_path_map, realize, side_discrepancy, MorOf, ObjOf, Side};
pub use word::{parse_word, Letter, Node, NodeKind, Obj, PastingWord, Path};

pub use crate::adjres::check_homotopical_laxity;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeAdjError {
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ill-typed at column {pos}: {msg}")]
    IllTyped { pos: usize, msg: String },
    #[error("boundaries differ: {0}")]
    BoundaryMismatch(String),
}

impl FreeAdjError {
    pub fn position(&self) -> Option<usize> {
        match self {
            Self::Parse { pos, .. } | Self::IllTyped { pos, .. } => Some(*pos),
            Self::BoundaryMismatch(_) => None,
        }
    }
}
