//! Cochain complexes and their cohomology.

use serde_json::{json, Value};

use super::matrix::{Matrix, Ring};
use super::CompletionError;

/// Degrees `start, start+1, …`; `diffs[i]` maps degree `start+i` to the next.
/// When `truncated`, the top degree has no known outgoing differential and
/// its cohomology is not reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    pub ring: Ring,
    pub start: i64,
    pub dims: Vec<usize>,
    pub diffs: Vec<Matrix>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub degree: i64,
    /// Dimension over a field, free rank over `ℤ`.
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<i64>,
}

impl CohomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({"degree": self.degree, "rank": self.rank, "torsion": self.torsion})
    }
}

impl CochainComplex {
    pub fn new(ring: Ring, start: i64, dims: Vec<usize>, diffs: Vec<Matrix>, truncated: bool) -> Result<Self, CompletionError> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(CompletionError::Shape(format!("{} degrees need {} differentials", dims.len(), dims.len().saturating_sub(1))));
        }
        for (i, d) in diffs.iter().enumerate() {
            if (d.cols, d.rows) != (dims[i], dims[i + 1]) || d.ring != ring {
                return Err(CompletionError::Shape(format!("differential from degree {} has the wrong shape", start + i as i64)));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].mul(&diffs[i - 1])?.is_zero() {
                return Err(CompletionError::NotAComplex(start + i as i64 - 1));
            }
        }
        Ok(Self { ring, start, dims, diffs, truncated })
    }

    /// Degrees whose cohomology is determined.
    pub fn reported_degrees(&self) -> std::ops::Range<usize> {
        0..self.dims.len() - usize::from(self.truncated && !self.dims.is_empty())
    }

    pub fn cohomology(&self) -> Vec<CohomologyGroup> {
        let ranks: Vec<usize> = self.diffs.iter().map(Matrix::rank).collect();
        self.reported_degrees()
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks[i - 1] };
                let torsion = match (self.ring, i) {
                    (Ring::Z, i) if i > 0 => self.diffs[i - 1].smith_invariants().into_iter().filter(|&d| d > 1).collect(),
                    _ => Vec::new(),
                };
                CohomologyGroup { degree: self.start + i as i64, rank: self.dims[i] - out - inc, torsion }
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(i, &d)| if (self.start + i as i64) % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.to_string(),
            "start": self.start,
            "dims": self.dims,
            "truncated": self.truncated,
            "cohomology": self.cohomology().iter().map(CohomologyGroup::to_json).collect::<Vec<_>>(),
        })
    }
}
