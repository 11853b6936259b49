//! The strict free/forgetful adjunction between finite sets and finite
//! dimensional F₂-vector spaces, with identity deformations.
//!
//! A set is its cardinality; a space is its dimension with the standard
//! basis. `G(V)` enumerates the vectors of `V` by bitmask, so `|GF X| = 2^|X|`.

use serde_json::{json, Value};

use super::{AdjError, Category, DeformableAdjunction};

/// Largest dimension whose underlying set is enumerated.
pub const MAX_ENUMERATED_DIM: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FnMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl FnMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self, AdjError> {
        if values.len() != source || values.iter().any(|&v| v >= target) {
            return Err(AdjError::Invalid(format!("not a function {source} -> {target}")));
        }
        Ok(Self { source, target, values })
    }
}

/// Columns are images of basis vectors, packed as bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<u64>>,
}

fn words(rows: usize) -> usize {
    rows.div_ceil(64)
}

impl LinMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, columns: vec![vec![0; words(rows)]; cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// From a dense row-major 0/1 table.
    pub fn from_rows(rows: &[Vec<u8>], cols: usize) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                m.set(r, c, e & 1 == 1);
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c][r / 64] >> (r % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.columns[c][r / 64];
        if v {
            *w |= 1 << (r % 64);
        } else {
            *w &= !(1 << (r % 64));
        }
    }

    /// Row indices of the nonzero entries of column `c`.
    pub fn support(&self, c: usize) -> Vec<usize> {
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &LinMap) -> Result<LinMap, AdjError> {
        if first.rows != self.cols {
            return Err(AdjError::NotComposable(format!("{}x{} after {}x{}", self.rows, self.cols, first.rows, first.cols)));
        }
        let mut out = LinMap::zero(self.rows, first.cols);
        for (c, col) in first.columns.iter().enumerate() {
            for (wi, &w) in col.iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let i = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for (o, x) in out.columns[c].iter_mut().zip(&self.columns[i]) {
                        *o ^= x;
                    }
                }
            }
        }
        Ok(out)
    }
}

pub struct FinSets;
pub struct F2Vect;

impl Category for FinSets {
    type Obj = usize;
    type Mor = FnMap;

    fn source(&self, f: &FnMap) -> usize {
        f.source
    }

    fn target(&self, f: &FnMap) -> usize {
        f.target
    }

    fn identity(&self, x: &usize) -> FnMap {
        FnMap { source: *x, target: *x, values: (0..*x).collect() }
    }

    fn compose(&self, g: &FnMap, f: &FnMap) -> Result<FnMap, AdjError> {
        if f.target != g.source {
            return Err(AdjError::NotComposable(format!("{} -> {} then {} -> {}", f.source, f.target, g.source, g.target)));
        }
        Ok(FnMap { source: f.source, target: g.target, values: f.values.iter().map(|&v| g.values[v]).collect() })
    }

    fn discrepancy(&self, a: &FnMap, b: &FnMap) -> Option<String> {
        if (a.source, a.target) != (b.source, b.target) {
            return Some(format!("maps {} -> {} and {} -> {}", a.source, a.target, b.source, b.target));
        }
        let i = (0..a.source).find(|&i| a.values[i] != b.values[i])?;
        Some(format!("element {i}: {} vs {}", a.values[i], b.values[i]))
    }

    fn describe(&self, x: &usize) -> Value {
        json!({ "set": x })
    }

    fn map_json(&self, f: &FnMap) -> Value {
        json!({ "source": f.source, "target": f.target, "values": f.values })
    }
}

impl Category for F2Vect {
    type Obj = usize;
    type Mor = LinMap;

    fn source(&self, f: &LinMap) -> usize {
        f.cols
    }

    fn target(&self, f: &LinMap) -> usize {
        f.rows
    }

    fn identity(&self, x: &usize) -> LinMap {
        LinMap::identity(*x)
    }

    fn compose(&self, g: &LinMap, f: &LinMap) -> Result<LinMap, AdjError> {
        g.after(f)
    }

    fn discrepancy(&self, a: &LinMap, b: &LinMap) -> Option<String> {
        if (a.rows, a.cols) != (b.rows, b.cols) {
            return Some(format!("shapes {}x{} and {}x{}", a.rows, a.cols, b.rows, b.cols));
        }
        let c = (0..a.cols).find(|&c| a.columns[c] != b.columns[c])?;
        Some(format!("column {c}: {:?} vs {:?}", a.support(c), b.support(c)))
    }

    fn describe(&self, x: &usize) -> Value {
        json!({ "dim": x })
    }

    fn map_json(&self, f: &LinMap) -> Value {
        json!({ "rows": f.rows, "cols": f.cols, "columns": (0..f.cols).map(|c| f.support(c)).collect::<Vec<_>>() })
    }
}

/// `F₂[−] : FinSet ⇄ F₂-Vect : U` with `Q = R = 1`.
pub struct FreeForget {
    sets: FinSets,
    spaces: F2Vect,
}

impl Default for FreeForget {
    fn default() -> Self {
        Self::new()
    }
}

impl FreeForget {
    pub fn new() -> Self {
        Self { sets: FinSets, spaces: F2Vect }
    }
}

fn enumerable(dim: usize) -> Result<usize, AdjError> {
    if dim > MAX_ENUMERATED_DIM {
        return Err(AdjError::TooLarge(format!("the underlying set of a {dim}-dimensional space")));
    }
    Ok(1 << dim)
}

impl DeformableAdjunction for FreeForget {
    type C = FinSets;
    type D = F2Vect;

    fn name(&self) -> String {
        "free-forget-F2".into()
    }

    fn c(&self) -> &FinSets {
        &self.sets
    }

    fn d(&self) -> &F2Vect {
        &self.spaces
    }

    fn f(&self, x: &usize) -> Result<usize, AdjError> {
        Ok(*x)
    }

    fn f_map(&self, h: &FnMap) -> Result<LinMap, AdjError> {
        let mut m = LinMap::zero(h.target, h.source);
        for (c, &v) in h.values.iter().enumerate() {
            m.set(v, c, true);
        }
        Ok(m)
    }

    fn g(&self, y: &usize) -> Result<usize, AdjError> {
        enumerable(*y)
    }

    fn g_map(&self, k: &LinMap) -> Result<FnMap, AdjError> {
        let source = enumerable(k.cols)?;
        let target = enumerable(k.rows)?;
        let mut values = vec![0usize; source];
        for m in 1..source {
            let low = m.trailing_zeros() as usize;
            values[m] = values[m & (m - 1)] ^ k.columns[low].first().copied().unwrap_or(0) as usize;
        }
        Ok(FnMap { source, target, values })
    }

    fn eta(&self, x: &usize) -> Result<FnMap, AdjError> {
        Ok(FnMap { source: *x, target: enumerable(*x)?, values: (0..*x).map(|i| 1 << i).collect() })
    }

    fn eps(&self, y: &usize) -> Result<LinMap, AdjError> {
        let n = enumerable(*y)?;
        let mut m = LinMap::zero(*y, n);
        if *y > 0 {
            for v in 0..n {
                m.columns[v][0] = v as u64;
            }
        }
        Ok(m)
    }

    fn q(&self, x: &usize) -> Result<usize, AdjError> {
        Ok(*x)
    }

    fn q_map(&self, h: &FnMap) -> Result<FnMap, AdjError> {
        Ok(h.clone())
    }

    fn q_counit(&self, x: &usize) -> Result<FnMap, AdjError> {
        Ok(self.sets.identity(x))
    }

    fn delta(&self, x: &usize) -> Result<FnMap, AdjError> {
        Ok(self.sets.identity(x))
    }

    fn r(&self, y: &usize) -> Result<usize, AdjError> {
        Ok(*y)
    }

    fn r_map(&self, k: &LinMap) -> Result<LinMap, AdjError> {
        Ok(k.clone())
    }

    fn r_unit(&self, y: &usize) -> Result<LinMap, AdjError> {
        Ok(LinMap::identity(*y))
    }

    fn mu(&self, y: &usize) -> Result<LinMap, AdjError> {
        Ok(LinMap::identity(*y))
    }

    fn is_strict(&self) -> bool {
        true
    }
}
