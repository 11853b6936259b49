//! Finite truncated simplicial sets in Eilenberg–Zilber presentation.
//!
//! A simplex of dimension `n` is written uniquely as `σ* x` with `x` a
//! nondegenerate cell of dimension `k` and `σ : [n] -> [k]` a surjection.
//! Everything lives below a global `dim_bound`; levels above it simply do
//! not exist.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde_json::{json, Value};

use super::op::{surjections, Monotone, SimplexOp};
use super::ScomplexError;

/// `epi* cell`, with `epi : [dim] -> [cell_dim]` stored by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    epi: Vec<u8>,
    cell: usize,
}

impl Simplex {
    pub fn cell_of(dim: usize, cell: usize) -> Self {
        Self { epi: (0..=dim as u8).collect(), cell }
    }

    /// `None` unless `epi` is a surjection.
    pub fn new(epi: &Monotone, cell: usize) -> Option<Self> {
        epi.is_surjective()
            .then(|| Self { epi: epi.values().iter().map(|&v| v as u8).collect(), cell })
    }

    pub(crate) fn from_raw(epi: Vec<u8>, cell: usize) -> Self {
        Self { epi, cell }
    }

    pub fn dim(&self) -> usize {
        self.epi.len() - 1
    }

    pub fn cell_dim(&self) -> usize {
        *self.epi.last().unwrap() as usize
    }

    pub fn cell(&self) -> usize {
        self.cell
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.dim() == self.cell_dim()
    }

    pub fn epi(&self) -> Monotone {
        Monotone::new(self.cell_dim(), self.epi.iter().map(|&v| v as usize).collect()).unwrap()
    }

    pub(crate) fn epi_raw(&self) -> &[u8] {
        &self.epi
    }

    pub fn op(&self) -> SimplexOp {
        self.epi().normal_form()
    }

    /// Apply a further surjection `τ : [m] -> [dim]`.
    pub(crate) fn degenerate_by(&self, tau: &[u8]) -> Simplex {
        Simplex { epi: tau.iter().map(|&t| self.epi[t as usize]).collect(), cell: self.cell }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialSet {
    dim_bound: usize,
    cells: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Simplex>>>,
}

impl SimplicialSet {
    /// `cells[n]` must be strictly increasing; `faces[n][c]` lists
    /// `d_0 .. d_n` of cell `c` (empty for `n = 0`).
    pub fn new(dim_bound: usize, cells: Vec<Vec<String>>, faces: Vec<Vec<Vec<Simplex>>>) -> Result<Self, ScomplexError> {
        let bad = |msg: String| Err(ScomplexError::Invalid(msg));
        if cells.len() != dim_bound + 1 || faces.len() != dim_bound + 1 {
            return bad(format!("expected {} levels", dim_bound + 1));
        }
        let mut seen = HashSet::new();
        for (n, level) in cells.iter().enumerate() {
            if level.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("cells of dimension {n} are not strictly sorted"));
            }
            for name in level {
                if !seen.insert(name.as_str()) {
                    return bad(format!("duplicate cell identifier {name:?}"));
                }
            }
            if faces[n].len() != level.len() {
                return bad(format!("face table of dimension {n} has wrong length"));
            }
            for (c, fs) in faces[n].iter().enumerate() {
                let want = if n == 0 { 0 } else { n + 1 };
                if fs.len() != want {
                    return bad(format!("cell {} has {} faces, expected {want}", level[c], fs.len()));
                }
                for s in fs {
                    let ok = s.dim() + 1 == n
                        && s.epi().is_surjective()
                        && s.cell < cells.get(s.cell_dim()).map_or(0, Vec::len);
                    if !ok {
                        return bad(format!("malformed face of {}", level[c]));
                    }
                }
            }
        }
        let set = Self { dim_bound, cells, faces };
        set.check_face_identities()?;
        Ok(set)
    }

    pub fn empty(dim_bound: usize) -> Self {
        Self { dim_bound, cells: vec![Vec::new(); dim_bound + 1], faces: vec![Vec::new(); dim_bound + 1] }
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn cells(&self, n: usize) -> &[String] {
        self.cells.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total_cells() == 0
    }

    pub fn cell_index(&self, n: usize, name: &str) -> Option<usize> {
        self.cells.get(n)?.binary_search_by(|c| c.as_str().cmp(name)).ok()
    }

    pub fn find_cell(&self, name: &str) -> Option<(usize, usize)> {
        (0..=self.dim_bound).find_map(|n| self.cell_index(n, name).map(|c| (n, c)))
    }

    pub fn name(&self, n: usize, c: usize) -> &str {
        &self.cells[n][c]
    }

    /// `d_i` of the nondegenerate cell `c` of dimension `n`.
    pub fn cell_face(&self, n: usize, c: usize, i: usize) -> &Simplex {
        &self.faces[n][c][i]
    }

    pub fn cell_faces(&self, n: usize, c: usize) -> &[Simplex] {
        &self.faces[n][c]
    }

    /// `θ* s` for `θ : [m] -> [s.dim()]`.
    pub fn act(&self, s: &Simplex, theta: &Monotone) -> Simplex {
        assert_eq!(theta.target_dim(), s.dim(), "operator does not apply");
        let comp: Vec<u8> = theta.values().iter().map(|&t| s.epi[t]).collect();
        self.act_raw(s.cell_dim(), s.cell, comp)
    }

    // `comp : [m] -> [k]` applied to cell `cell` of dimension `k`.
    fn act_raw(&self, k: usize, cell: usize, comp: Vec<u8>) -> Simplex {
        let mut hit = vec![false; k + 1];
        for &v in &comp {
            hit[v as usize] = true;
        }
        match hit.iter().position(|h| !h) {
            None => Simplex { epi: comp, cell },
            Some(r) => {
                let r = r as u8;
                let face = &self.faces[k][cell][r as usize];
                let lowered: Vec<u8> = comp.iter().map(|&v| if v > r { v - 1 } else { v }).collect();
                let next: Vec<u8> = lowered.iter().map(|&t| face.epi[t as usize]).collect();
                self.act_raw(face.cell_dim(), face.cell, next)
            }
        }
    }

    pub fn face(&self, s: &Simplex, i: usize) -> Simplex {
        self.act(s, &Monotone::coface(s.dim(), i))
    }

    pub fn degeneracy(&self, s: &Simplex, j: usize) -> Simplex {
        self.act(s, &Monotone::codegeneracy(s.dim(), j))
    }

    /// All simplices of dimension `n`, grouped by cell dimension, then by
    /// surjection, then by cell.
    pub fn simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        if n > self.dim_bound {
            return out;
        }
        for k in 0..=n {
            let epis = surjections(n, k);
            for e in &epis {
                for c in 0..self.cells[k].len() {
                    out.push(Simplex::new(e, c).unwrap());
                }
            }
        }
        out
    }

    pub fn level_size(&self, n: usize) -> usize {
        (0..=n.min(self.dim_bound))
            .map(|k| surjections(n, k).len() * self.cells[k].len())
            .sum()
    }

    fn check_face_identities(&self) -> Result<(), ScomplexError> {
        for n in 2..=self.dim_bound {
            for c in 0..self.cells[n].len() {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = self.face(&self.faces[n][c][j], i);
                        let rhs = self.face(&self.faces[n][c][i], j - 1);
                        if lhs != rhs {
                            return Err(ScomplexError::Invalid(format!(
                                "d{i}d{j} != d{}d{i} on cell {}",
                                j - 1,
                                self.cells[n][c]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive functoriality check `(θφ)* = φ* θ*` on every simplex.
    pub fn check_functoriality(&self) -> Result<(), ScomplexError> {
        use super::op::all_monotone;
        for n in 0..=self.dim_bound {
            for s in self.simplices(n) {
                for m in 0..=self.dim_bound {
                    for theta in all_monotone(m, n) {
                        let t = self.act(&s, &theta);
                        for l in 0..=self.dim_bound {
                            for phi in all_monotone(l, m) {
                                if self.act(&t, &phi) != self.act(&s, &theta.after(&phi)) {
                                    return Err(ScomplexError::Invalid(format!("functoriality fails at {s:?}")));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn simplex_label(&self, s: &Simplex) -> String {
        let name = &self.cells[s.cell_dim()][s.cell];
        if s.is_nondegenerate() {
            return name.clone();
        }
        let degs: Vec<String> = s.op().degeneracies.iter().map(usize::to_string).collect();
        format!("s{}({name})", degs.join(","))
    }

    fn simplex_json(&self, s: &Simplex) -> Value {
        let op = s.op();
        json!({"op": {"deg": op.degeneracies, "face": op.faces}, "target": self.cells[s.cell_dim()][s.cell]})
    }

    pub fn to_json(&self) -> Value {
        let mut cells = BTreeMap::new();
        let mut faces = BTreeMap::new();
        for n in 0..=self.dim_bound {
            cells.insert(n.to_string(), json!(self.cells[n]));
            for (c, name) in self.cells[n].iter().enumerate() {
                let fs: Vec<Value> = self.faces[n][c].iter().map(|s| self.simplex_json(s)).collect();
                faces.insert(name.clone(), Value::Array(fs));
            }
        }
        json!({"cells": cells, "dim_bound": self.dim_bound, "faces": faces})
    }

    /// Compact serialization with sorted keys.
    pub fn canonical_json(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(value: &Value) -> Result<Self, ScomplexError> {
        let err = |m: &str| ScomplexError::Parse(m.to_string());
        let dim_bound = value["dim_bound"].as_u64().ok_or_else(|| err("missing dim_bound"))? as usize;
        let mut cells: Vec<Vec<String>> = vec![Vec::new(); dim_bound + 1];
        if let Some(map) = value["cells"].as_object() {
            for (k, v) in map {
                let n: usize = k.parse().map_err(|_| err("bad dimension key"))?;
                if n > dim_bound {
                    return Err(err("cell above dim_bound"));
                }
                let list = v.as_array().ok_or_else(|| err("cells must be lists"))?;
                for name in list {
                    cells[n].push(name.as_str().ok_or_else(|| err("cell names must be strings"))?.to_string());
                }
                cells[n].sort();
            }
        }
        let probe = Self { dim_bound, cells: cells.clone(), faces: vec![Vec::new(); dim_bound + 1] };
        let mut faces = vec![Vec::new(); dim_bound + 1];
        for n in 0..=dim_bound {
            for name in &cells[n] {
                let list = match value["faces"].get(name) {
                    Some(Value::Array(a)) => a.clone(),
                    None if n == 0 => Vec::new(),
                    _ => return Err(ScomplexError::Parse(format!("missing faces of {name}"))),
                };
                let mut fs = Vec::new();
                for entry in &list {
                    if n == 0 {
                        return Err(err("vertices have no faces"));
                    }
                    fs.push(probe.parse_simplex(entry, n - 1)?);
                }
                faces[n].push(fs);
            }
        }
        Self::new(dim_bound, cells, faces)
    }

    pub(crate) fn parse_simplex(&self, entry: &Value, dim: usize) -> Result<Simplex, ScomplexError> {
        let op: SimplexOp = serde_json::from_value(entry["op"].clone()).map_err(|e| ScomplexError::Parse(e.to_string()))?;
        if !op.faces.is_empty() {
            return Err(ScomplexError::Parse("face part must be empty".into()));
        }
        let target = entry["target"].as_str().ok_or_else(|| ScomplexError::Parse("missing target".into()))?;
        let p = op.degeneracies.len();
        if p > dim {
            return Err(ScomplexError::Parse(format!("too many degeneracies for {target}")));
        }
        let k = dim - p;
        let cell = self
            .cell_index(k, target)
            .ok_or_else(|| ScomplexError::Parse(format!("unknown cell {target:?} in dimension {k}")))?;
        let epi = op
            .to_monotone(k)
            .ok_or_else(|| ScomplexError::Parse(format!("malformed operator for {target}")))?;
        Ok(Simplex::new(&epi, cell).unwrap())
    }
}

/// A map of simplicial sets, given on nondegenerate cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    assignment: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    pub fn new(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        assignment: Vec<Vec<Simplex>>,
    ) -> Result<Self, ScomplexError> {
        let map = Self::new_unchecked(source, target, assignment);
        map.validate()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, assignment: Vec<Vec<Simplex>>) -> Self {
        Self { source, target, assignment }
    }

    pub fn identity(x: &Arc<SimplicialSet>) -> Self {
        let assignment = (0..=x.dim_bound)
            .map(|n| (0..x.cells[n].len()).map(|c| Simplex::cell_of(n, c)).collect())
            .collect();
        Self { source: x.clone(), target: x.clone(), assignment }
    }

    /// The unique map out of an empty set.
    pub fn from_empty(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>) -> Result<Self, ScomplexError> {
        if !source.is_empty() {
            return Err(ScomplexError::Invalid("source is not empty".into()));
        }
        Self::new(source.clone(), target.clone(), vec![Vec::new(); source.dim_bound + 1])
    }

    /// The unique map to a point.
    pub fn to_point(source: &Arc<SimplicialSet>, point: &Arc<SimplicialSet>) -> Result<Self, ScomplexError> {
        if point.counts().iter().enumerate().any(|(n, &c)| c != usize::from(n == 0)) {
            return Err(ScomplexError::Invalid("target is not a point".into()));
        }
        let assignment = (0..=source.dim_bound)
            .map(|n| vec![Simplex::from_raw(vec![0; n + 1], 0); source.cells[n].len()])
            .collect();
        Self::new(source.clone(), point.clone(), assignment)
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn image_of_cell(&self, n: usize, c: usize) -> &Simplex {
        &self.assignment[n][c]
    }

    pub fn assignment(&self) -> &[Vec<Simplex>] {
        &self.assignment
    }

    pub fn apply(&self, s: &Simplex) -> Simplex {
        let image = &self.assignment[s.cell_dim()][s.cell];
        image.degenerate_by(&s.epi)
    }

    pub fn validate(&self) -> Result<(), ScomplexError> {
        let (src, tgt) = (&self.source, &self.target);
        if src.dim_bound > tgt.dim_bound {
            return Err(ScomplexError::DimBoundMismatch(src.dim_bound, tgt.dim_bound));
        }
        if self.assignment.len() != src.dim_bound + 1 {
            return Err(ScomplexError::Invalid("assignment has wrong number of levels".into()));
        }
        for n in 0..=src.dim_bound {
            if self.assignment[n].len() != src.cells[n].len() {
                return Err(ScomplexError::Invalid(format!("assignment of dimension {n} has wrong length")));
            }
            for (c, image) in self.assignment[n].iter().enumerate() {
                if image.dim() != n || image.cell >= tgt.cells[image.cell_dim()].len() || !image.epi().is_surjective() {
                    return Err(ScomplexError::Invalid(format!("bad image for {}", src.cells[n][c])));
                }
                if n == 0 {
                    continue;
                }
                for i in 0..=n {
                    if self.apply(&src.faces[n][c][i]) != tgt.face(image, i) {
                        return Err(ScomplexError::Invalid(format!(
                            "map does not commute with d{i} on {}",
                            src.cells[n][c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> Result<SimplicialMap, ScomplexError> {
        if first.target != self.source {
            return Err(ScomplexError::NotComposable);
        }
        let assignment = first.assignment.iter().map(|lvl| lvl.iter().map(|s| self.apply(s)).collect()).collect();
        Ok(Self { source: first.source.clone(), target: self.target.clone(), assignment })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == Self::identity(&self.source)
    }

    /// Nondegenerate cells go injectively to nondegenerate cells.
    pub fn is_monomorphism(&self) -> bool {
        let mut seen = HashSet::new();
        self.assignment.iter().flatten().all(|s| s.is_nondegenerate() && seen.insert((s.dim(), s.cell)))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_monomorphism() && self.source.counts() == self.target.counts()
    }

    pub fn to_json(&self) -> Value {
        let mut assignment = BTreeMap::new();
        for n in 0..=self.source.dim_bound {
            for (c, s) in self.assignment[n].iter().enumerate() {
                assignment.insert(self.source.cells[n][c].clone(), self.target.simplex_json(s));
            }
        }
        json!({"assignment": assignment, "source": self.source.to_json(), "target": self.target.to_json()})
    }

    /// Key used to identify a map once its endpoints are fixed.
    pub fn assignment_json(&self) -> String {
        let mut assignment = BTreeMap::new();
        for n in 0..=self.source.dim_bound {
            for (c, s) in self.assignment[n].iter().enumerate() {
                assignment.insert(self.source.cells[n][c].clone(), self.target.simplex_json(s));
            }
        }
        Value::Object(assignment.into_iter().collect()).to_string()
    }

    pub fn canonical_json(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(value: &Value) -> Result<Self, ScomplexError> {
        let source = Arc::new(SimplicialSet::from_json(&value["source"])?);
        let target = Arc::new(SimplicialSet::from_json(&value["target"])?);
        let mut assignment = Vec::new();
        for n in 0..=source.dim_bound {
            let mut level = Vec::new();
            for name in &source.cells[n] {
                let entry = value["assignment"]
                    .get(name)
                    .ok_or_else(|| ScomplexError::Parse(format!("no image for {name}")))?;
                level.push(target.parse_simplex(entry, n)?);
            }
            assignment.push(level);
        }
        Self::new(source, target, assignment)
    }
}
