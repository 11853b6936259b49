//! Deformable adjunctions: an adjunction `F ⊣ G` together with a comonad
//! `(Q, q, δ)` deforming `F` and a monad `(R, r, μ)` deforming `G`, the
//! transformations `ι`, `π` built from them, and the resolutions they define.
//!
//! Functors are executable assignments; everything that is claimed is checked
//! as a literal equality of maps on sampled objects.

mod checks;
mod derived;
mod diagram;
pub mod finvect;
mod resolutions;
pub mod sset;

use std::fmt::Debug;

use serde_json::Value;

use crate::scomplex::ScomplexError;
use crate::soa::SoaError;

pub use checks::{check_adjunction, check_associativity, check_deformation, check_lemma_identities, check_naturality, Check, CheckReport};
pub use derived::{iota, left_derived, pi, qgrf, rfqg, right_derived, t_map, t_obj};
pub use diagram::{Splitting, TruncatedDiagram, Variance};
pub use resolutions::{
    algebra_bar, algebra_bar_q_image, bar_resolution, check_algebra_map, check_homotopical_laxity, cobar_resolution, free_algebra,
    homotopy_algebra_check, split_backward, split_forward,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjError {
    #[error(transparent)]
    Soa(#[from] SoaError),
    #[error(transparent)]
    Scomplex(#[from] ScomplexError),
    #[error("object too large for this instance: {0}")]
    TooLarge(String),
    #[error("maps are not composable: {0}")]
    NotComposable(String),
    #[error("{0}")]
    Invalid(String),
}

pub trait Category {
    type Obj: Clone + Debug;
    type Mor: Clone + Debug;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, AdjError>;
    /// `None` when equal, otherwise the first place where the maps differ.
    fn discrepancy(&self, a: &Self::Mor, b: &Self::Mor) -> Option<String>;
    fn describe(&self, x: &Self::Obj) -> Value;
    fn map_json(&self, f: &Self::Mor) -> Value;
}

pub type CObj<A> = <<A as DeformableAdjunction>::C as Category>::Obj;
pub type CMor<A> = <<A as DeformableAdjunction>::C as Category>::Mor;
pub type DObj<A> = <<A as DeformableAdjunction>::D as Category>::Obj;
pub type DMor<A> = <<A as DeformableAdjunction>::D as Category>::Mor;

/// `F : C ⇄ D : G` with its deformations. `Q` lives on `C`, `R` on `D`.
pub trait DeformableAdjunction {
    type C: Category;
    type D: Category;

    fn name(&self) -> String;
    fn c(&self) -> &Self::C;
    fn d(&self) -> &Self::D;

    fn f(&self, x: &CObj<Self>) -> Result<DObj<Self>, AdjError>;
    fn f_map(&self, h: &CMor<Self>) -> Result<DMor<Self>, AdjError>;
    fn g(&self, y: &DObj<Self>) -> Result<CObj<Self>, AdjError>;
    fn g_map(&self, k: &DMor<Self>) -> Result<CMor<Self>, AdjError>;
    /// `η_X : X -> GFX`.
    fn eta(&self, x: &CObj<Self>) -> Result<CMor<Self>, AdjError>;
    /// `ε_Y : FGY -> Y`.
    fn eps(&self, y: &DObj<Self>) -> Result<DMor<Self>, AdjError>;

    fn q(&self, x: &CObj<Self>) -> Result<CObj<Self>, AdjError>;
    fn q_map(&self, h: &CMor<Self>) -> Result<CMor<Self>, AdjError>;
    /// `q_X : QX -> X`.
    fn q_counit(&self, x: &CObj<Self>) -> Result<CMor<Self>, AdjError>;
    /// `δ_X : QX -> QQX`.
    fn delta(&self, x: &CObj<Self>) -> Result<CMor<Self>, AdjError>;

    fn r(&self, y: &DObj<Self>) -> Result<DObj<Self>, AdjError>;
    fn r_map(&self, k: &DMor<Self>) -> Result<DMor<Self>, AdjError>;
    /// `r_Y : Y -> RY`.
    fn r_unit(&self, y: &DObj<Self>) -> Result<DMor<Self>, AdjError>;
    /// `μ_Y : RRY -> RY`.
    fn mu(&self, y: &DObj<Self>) -> Result<DMor<Self>, AdjError>;

    /// True when `Q` and `R` are identity deformations.
    fn is_strict(&self) -> bool {
        false
    }
}
