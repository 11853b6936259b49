//! The algebraic small object argument for sets of monomorphisms of finite
//! simplicial sets.
//!
//! Because generators are monomorphisms, the step-two coequalizer reduces to
//! bookkeeping: a square is filled at most once, keyed by its attaching data.

mod enriched;
mod garner;
mod replace;

use std::sync::Arc;

use serde_json::Value;

use crate::scomplex::{boundary_inclusion, horn_inclusion, ScomplexError, SimplicialMap};

pub use enriched::{enriched_step_one, EnrichedStepOne};
pub use garner::{exhaustive_lift_check, garner_iterate, step_one, AttachedCell, FactorizationState, LiftReport, NamedMap, Status};
pub use replace::{Replacement, Replacer, Side};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SoaError {
    #[error("generator {0} is not a monomorphism")]
    NotMono(String),
    #[error("duplicate generator identifier {0}")]
    DuplicateId(String),
    #[error("factorization did not converge within {stages} stages; laws cannot be certified")]
    NotConverged { stages: usize },
    #[error("no registered filler for a square of generator {0}")]
    MissingFiller(String),
    #[error("generator dim_bound {0} does not match object dim_bound {1}")]
    DimBound(usize, usize),
    #[error(transparent)]
    Scomplex(#[from] ScomplexError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Boundaries,
    Horns,
    InnerHorns,
    Custom,
}

impl GeneratorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Boundaries => "boundaries",
            Self::Horns => "horns",
            Self::InnerHorns => "inner-horns",
            Self::Custom => "custom",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub map: SimplicialMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub kind: GeneratorKind,
    pub dim_bound: usize,
    generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new(kind: GeneratorKind, dim_bound: usize, generators: Vec<Generator>) -> Result<Self, SoaError> {
        let mut ids = std::collections::HashSet::new();
        for g in &generators {
            if !ids.insert(g.id.clone()) {
                return Err(SoaError::DuplicateId(g.id.clone()));
            }
            if !g.map.is_monomorphism() {
                return Err(SoaError::NotMono(g.id.clone()));
            }
            for x in [g.map.source(), g.map.target()] {
                if x.dim_bound() != dim_bound {
                    return Err(SoaError::DimBound(x.dim_bound(), dim_bound));
                }
            }
        }
        Ok(Self { kind, dim_bound, generators })
    }

    /// `∂Δⁿ -> Δⁿ` for `0 ≤ n ≤ max_dim`.
    pub fn boundaries(max_dim: usize, dim_bound: usize) -> Result<Self, SoaError> {
        let gens = (0..=max_dim.min(dim_bound))
            .map(|n| Ok(Generator { id: format!("boundary{n}"), map: boundary_inclusion(n, dim_bound)? }))
            .collect::<Result<Vec<_>, SoaError>>()?;
        Self::new(GeneratorKind::Boundaries, dim_bound, gens)
    }

    /// `Λⁿ_k -> Δⁿ` for `1 ≤ n ≤ max_dim`, all `k` (or only inner ones).
    pub fn horns(max_dim: usize, dim_bound: usize, inner_only: bool) -> Result<Self, SoaError> {
        let mut gens = Vec::new();
        for n in 1..=max_dim.min(dim_bound) {
            for k in 0..=n {
                if inner_only && (k == 0 || k == n) {
                    continue;
                }
                gens.push(Generator { id: format!("horn{n}.{k}"), map: horn_inclusion(n, k, dim_bound)? });
            }
        }
        let kind = if inner_only { GeneratorKind::InnerHorns } else { GeneratorKind::Horns };
        Self::new(kind, dim_bound, gens)
    }

    pub fn custom(generators: Vec<Generator>, dim_bound: usize) -> Result<Self, SoaError> {
        Self::new(GeneratorKind::Custom, dim_bound, generators)
    }

    /// `{"generators": [{"id": .., "map": <SimplicialMap>}, ..]}`.
    pub fn from_json(value: &Value, dim_bound: usize) -> Result<Self, SoaError> {
        let list = value["generators"]
            .as_array()
            .ok_or_else(|| ScomplexError::Parse("expected a `generators` list".into()))?;
        let gens = list
            .iter()
            .map(|g| {
                let id = g["id"].as_str().ok_or_else(|| ScomplexError::Parse("generator without id".into()))?;
                Ok(Generator { id: id.to_string(), map: SimplicialMap::from_json(&g["map"])? })
            })
            .collect::<Result<Vec<_>, SoaError>>()?;
        Self::custom(gens, dim_bound)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }
}
