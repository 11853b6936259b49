//! Double complexes from cosimplicial chain complexes, their truncated total
//! complexes, and the spectral sequence of the column filtration.
//!
//! Bidegrees are `(s, t)`: `s` the cosimplicial (filtration) degree, `t` the
//! internal chain degree. The total complex is graded by `k = s − t` with
//! `D = d_h + (−1)^s d_v`, so `d_r` has bidegree `(r, r − 1)`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::complex::CochainComplex;
use super::cosimplicial::{amitsur, Algebra, CosimplicialModule};
use super::matrix::{Matrix, Ring};
use super::CompletionError;

/// `dh[s][t] : (s,t) -> (s+1,t)` for `s < S−1`; `dv[s][t] : (s,t) -> (s,t−1)`
/// for `t ≥ 1` (`dv[s][0]` is the zero map to nothing and is omitted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleComplex {
    pub ring: Ring,
    pub dims: Vec<Vec<usize>>,
    pub dh: Vec<Vec<Matrix>>,
    pub dv: Vec<Vec<Matrix>>,
}

impl DoubleComplex {
    pub fn new(ring: Ring, dims: Vec<Vec<usize>>, dh: Vec<Vec<Matrix>>, dv: Vec<Vec<Matrix>>) -> Result<Self, CompletionError> {
        let cols = dims.len();
        let rows = dims.first().map_or(0, Vec::len);
        if dims.iter().any(|c| c.len() != rows) || dh.len() + 1 != cols.max(1) || dv.len() != cols {
            return Err(CompletionError::Shape("double complex is not rectangular".into()));
        }
        for s in 0..cols {
            if dv[s].len() != rows.saturating_sub(1) {
                return Err(CompletionError::Shape(format!("column {s} needs {} vertical maps", rows.saturating_sub(1))));
            }
            for t in 1..rows {
                let m = &dv[s][t - 1];
                if (m.cols, m.rows) != (dims[s][t], dims[s][t - 1]) {
                    return Err(CompletionError::Shape(format!("vertical map at ({s},{t}) has the wrong shape")));
                }
                if t >= 2 && !dv[s][t - 2].mul(m)?.is_zero() {
                    return Err(CompletionError::Invalid(format!("d_v² ≠ 0 at ({s},{t})")));
                }
            }
            if s + 1 < cols {
                if dh[s].len() != rows {
                    return Err(CompletionError::Shape(format!("column {s} needs {rows} horizontal maps")));
                }
                for t in 0..rows {
                    let m = &dh[s][t];
                    if (m.cols, m.rows) != (dims[s][t], dims[s + 1][t]) {
                        return Err(CompletionError::Shape(format!("horizontal map at ({s},{t}) has the wrong shape")));
                    }
                    if s + 2 < cols && !dh[s + 1][t].mul(m)?.is_zero() {
                        return Err(CompletionError::Invalid(format!("d_h² ≠ 0 at ({s},{t})")));
                    }
                    if t >= 1 && dv[s + 1][t - 1].mul(m)? != dh[s][t - 1].mul(&dv[s][t - 1])? {
                        return Err(CompletionError::Invalid(format!("d_h and d_v do not commute at ({s},{t})")));
                    }
                }
            }
        }
        Ok(Self { ring, dims, dh, dv })
    }

    pub fn columns(&self) -> usize {
        self.dims.len()
    }

    pub fn rows(&self) -> usize {
        self.dims.first().map_or(0, Vec::len)
    }

    /// Column `s` as a cochain complex in degrees `−t`.
    pub fn column(&self, s: usize) -> Result<CochainComplex, CompletionError> {
        let rows = self.rows();
        let dims: Vec<usize> = (0..rows).rev().map(|t| self.dims[s][t]).collect();
        let diffs: Vec<Matrix> = (1..rows).rev().map(|t| self.dv[s][t - 1].clone()).collect();
        CochainComplex::new(self.ring, -(rows as i64 - 1), dims, diffs, false)
    }

    pub fn total(&self) -> Result<FilteredComplex, CompletionError> {
        let (cols, rows) = (self.columns(), self.rows());
        let (kmin, kmax) = (-(rows as i64 - 1), cols as i64 - 1);
        let mut blocks = Vec::new();
        for k in kmin..=kmax {
            let mut here = Vec::new();
            let mut offset = 0;
            for s in 0..cols {
                let t = s as i64 - k;
                if (0..rows as i64).contains(&t) {
                    let len = self.dims[s][t as usize];
                    here.push(Block { s, t: t as usize, offset, len });
                    offset += len;
                }
            }
            blocks.push(here);
        }
        let dims: Vec<usize> = blocks.iter().map(|b| b.iter().map(|x| x.len).sum()).collect();
        let mut diffs = Vec::new();
        for i in 0..dims.len().saturating_sub(1) {
            let mut m = Matrix::zeros(self.ring, dims[i + 1], dims[i]);
            let find = |s: usize, t: usize| blocks[i + 1].iter().find(|b| b.s == s && b.t == t).copied();
            for b in &blocks[i] {
                let mut put = |target: Block, piece: &Matrix, sign: i64| {
                    for r in 0..piece.rows {
                        for c in 0..piece.cols {
                            let x = piece.get(r, c);
                            if x != 0 {
                                m.add_to(target.offset + r, b.offset + c, sign * x);
                            }
                        }
                    }
                };
                if b.s + 1 < cols {
                    if let Some(tb) = find(b.s + 1, b.t) {
                        put(tb, &self.dh[b.s][b.t], 1);
                    }
                }
                if b.t >= 1 {
                    if let Some(tb) = find(b.s, b.t - 1) {
                        put(tb, &self.dv[b.s][b.t - 1], if b.s % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            diffs.push(m);
        }
        let complex = CochainComplex::new(self.ring, kmin, dims, diffs, false)?;
        Ok(FilteredComplex { complex, blocks })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub s: usize,
    pub t: usize,
    pub offset: usize,
    pub len: usize,
}

/// A total complex whose basis in each degree is partitioned into `(s, t)` blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredComplex {
    pub complex: CochainComplex,
    pub blocks: Vec<Vec<Block>>,
}

/// One cosimplicial module per internal degree, with chain maps between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialChainComplex {
    pub rows: Vec<CosimplicialModule>,
    /// `vertical[t-1][s] : (s,t) -> (s,t−1)`.
    pub vertical: Vec<Vec<Matrix>>,
}

impl CosimplicialChainComplex {
    pub fn validate(&self) -> Result<(), CompletionError> {
        for row in &self.rows {
            row.validate()?;
        }
        for (t, maps) in self.vertical.iter().enumerate() {
            let (lo, hi) = (&self.rows[t], &self.rows[t + 1]);
            for n in 0..hi.top() {
                for i in 0..=n + 1 {
                    if maps[n + 1].mul(&hi.cofaces[n][i])? != lo.cofaces[n][i].mul(&maps[n])? {
                        return Err(CompletionError::Identity(format!("coface d{i} is not a chain map at ({n},{})", t + 1)));
                    }
                }
            }
            for n in 1..=hi.top() {
                for j in 0..n {
                    if maps[n - 1].mul(&hi.codegeneracies[n][j])? != lo.codegeneracies[n][j].mul(&maps[n])? {
                        return Err(CompletionError::Identity(format!("codegeneracy s{j} is not a chain map at ({n},{})", t + 1)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The normalized double complex on columns `0..=n`, totalized.
pub fn tot_truncated(cc: &CosimplicialChainComplex, n: usize) -> Result<(DoubleComplex, FilteredComplex), CompletionError> {
    cc.validate()?;
    let ring = cc.rows.first().ok_or_else(|| CompletionError::Invalid("no rows".into()))?.ring;
    if cc.rows.iter().any(|r| r.top() < n) {
        return Err(CompletionError::Invalid(format!("rows are truncated below level {n}")));
    }
    let normal: Vec<(CochainComplex, Vec<Matrix>)> = cc.rows.iter().map(|r| r.normalized_cochain()).collect::<Result<_, _>>()?;
    let rows = cc.rows.len();
    let dims: Vec<Vec<usize>> = (0..=n).map(|s| (0..rows).map(|t| normal[t].1[s].cols).collect()).collect();
    let dh = (0..n).map(|s| (0..rows).map(|t| normal[t].0.diffs[s].clone()).collect()).collect();
    let dv = (0..=n)
        .map(|s| {
            (1..rows)
                .map(|t| {
                    let image = cc.vertical[t - 1][s].mul(&normal[t].1[s])?;
                    normal[t - 1].1[s].solve(&image).ok_or_else(|| CompletionError::Identity(format!("vertical map leaves the normalized part at ({s},{t})")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let double = DoubleComplex::new(ring, dims, dh, dv)?;
    let total = double.total()?;
    Ok((double, total))
}

/// Levelwise Amitsur complex of a chain complex `V_T -> … -> V_0`
/// (`boundaries[t-1] : V_t -> V_{t−1}`).
pub fn amitsur_chain(alg: &Algebra, v_dims: &[usize], boundaries: &[Matrix], n_top: usize) -> Result<CosimplicialChainComplex, CompletionError> {
    let rows = v_dims.iter().map(|&v| amitsur(alg, v, n_top)).collect::<Result<Vec<_>, _>>()?;
    let mut vertical = Vec::new();
    for (t, b) in boundaries.iter().enumerate() {
        if (b.cols, b.rows) != (v_dims[t + 1], v_dims[t]) {
            return Err(CompletionError::Shape(format!("boundary from degree {} has the wrong shape", t + 1)));
        }
        let maps = (0..=n_top)
            .map(|n| {
                let words = alg.dim().pow(n as u32 + 1);
                let mut m = Matrix::zeros(alg.ring, words * b.rows, words * b.cols);
                for w in 0..words {
                    for r in 0..b.rows {
                        for c in 0..b.cols {
                            m.set(w * b.rows + r, w * b.cols + c, b.get(r, c));
                        }
                    }
                }
                m
            })
            .collect();
        vertical.push(maps);
    }
    let out = CosimplicialChainComplex { rows, vertical };
    out.validate()?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Page {
    pub r: usize,
    /// `E_r^{s,t}` dimensions.
    pub dims: BTreeMap<(usize, usize), usize>,
    /// Rank of `d_r` out of `(s, t)`.
    pub ranks: BTreeMap<(usize, usize), usize>,
}

impl Page {
    pub fn dim(&self, s: usize, t: usize) -> usize {
        self.dims.get(&(s, t)).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let table: Vec<Value> = self
            .dims
            .iter()
            .map(|(&(s, t), &d)| json!({"s": s, "t": t, "dim": d, "d_rank": self.ranks.get(&(s, t)).copied().unwrap_or(0)}))
            .collect();
        json!({"r": self.r, "table": table})
    }

    /// Rows `t` descending, columns `s`.
    pub fn to_text(&self) -> String {
        let smax = self.dims.keys().map(|k| k.0).max().unwrap_or(0);
        let tmax = self.dims.keys().map(|k| k.1).max().unwrap_or(0);
        let mut out = format!("E_{}\n", self.r);
        for t in (0..=tmax).rev() {
            out.push_str(&format!("t={t:<3}"));
            for s in 0..=smax {
                out.push_str(&format!("{:>6}", self.dim(s, t)));
            }
            out.push('\n');
        }
        out.push_str("     ");
        for s in 0..=smax {
            out.push_str(&format!("{:>6}", format!("s={s}")));
        }
        out.push('\n');
        out
    }
}

/// A certified run of the spectral sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralSequence {
    pub pages: Vec<Page>,
    /// Human-readable failures of the page invariants (empty when certified).
    pub failures: Vec<String>,
}

impl SpectralSequence {
    pub fn certified(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({"certified": self.certified(), "failures": self.failures, "pages": self.pages.iter().map(Page::to_json).collect::<Vec<_>>()})
    }
}

struct Filtered<'a> {
    fc: &'a FilteredComplex,
}

impl Filtered<'_> {
    fn degrees(&self) -> usize {
        self.fc.complex.dims.len()
    }

    fn ring(&self) -> Ring {
        self.fc.complex.ring
    }

    fn indices(&self, i: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        self.fc.blocks[i].iter().filter(|b| keep(b.s)).flat_map(|b| b.offset..b.offset + b.len).collect()
    }

    /// `Z_r^q` in degree `i`: elements of `F^q` whose boundary lies in `F^{q+r}`.
    fn z(&self, r: usize, q: i64, i: usize) -> Matrix {
        let cols = self.indices(i, |s| s as i64 >= q);
        let dim = self.fc.complex.dims[i];
        let basis = match self.fc.complex.diffs.get(i) {
            Some(d) => {
                let rows = self.indices(i + 1, |s| (s as i64) < q + r as i64);
                d.select_rows(&rows).select_columns(&cols).kernel()
            }
            None => Matrix::identity(self.ring(), cols.len()),
        };
        let mut out = Matrix::zeros(self.ring(), dim, basis.cols);
        for (k, &row) in cols.iter().enumerate() {
            for c in 0..basis.cols {
                out.set(row, c, basis.get(k, c));
            }
        }
        out
    }

    fn boundary_of(&self, i: usize, z: &Matrix) -> Matrix {
        self.fc.complex.diffs[i].mul(z).expect("shapes")
    }

    /// `Z_{r−1}^{q+1} + D Z_{r−1}^{q−r+1}` in degree `i`.
    fn denominator(&self, r: usize, q: i64, i: usize) -> Matrix {
        let inner = self.z(r - 1, q + 1, i);
        if i == 0 {
            return inner;
        }
        inner.hstack(&self.boundary_of(i - 1, &self.z(r - 1, q - r as i64 + 1, i - 1)))
    }

    fn e(&self, r: usize, q: i64, i: usize) -> usize {
        self.z(r, q, i).cols - self.denominator(r, q, i).rank()
    }

    fn d_rank(&self, r: usize, q: i64, i: usize) -> usize {
        if i + 1 >= self.degrees() {
            return 0;
        }
        let den = self.denominator(r, q + r as i64, i + 1);
        let image = self.boundary_of(i, &self.z(r, q, i));
        image.hstack(&den).rank() - den.rank()
    }
}

/// Pages `E_1 ..= E_{r_max}` of the column filtration, each certified
/// against the homology of the previous page and the Euler characteristic.
pub fn ss_pages(fc: &FilteredComplex, r_max: usize) -> Result<SpectralSequence, CompletionError> {
    if r_max == 0 {
        return Err(CompletionError::Invalid("pages start at r = 1".into()));
    }
    if !matches!(fc.complex.ring, Ring::Fp(_)) {
        return Err(CompletionError::Invalid("spectral sequences are computed over F_p".into()));
    }
    let f = Filtered { fc };
    let kmin = fc.complex.start;
    let cells: Vec<(usize, usize, usize)> = fc.blocks.iter().enumerate().flat_map(|(i, bs)| bs.iter().map(move |b| (i, b.s, b.t))).collect();
    let mut pages = Vec::new();
    for r in 1..=r_max + 1 {
        let mut dims = BTreeMap::new();
        let mut ranks = BTreeMap::new();
        for &(i, s, t) in &cells {
            dims.insert((s, t), f.e(r, s as i64, i));
            ranks.insert((s, t), f.d_rank(r, s as i64, i));
        }
        pages.push(Page { r, dims, ranks });
    }
    let mut failures = Vec::new();
    // E_1 is the vertical cohomology and keeps each column's Euler characteristic.
    let columns: std::collections::BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
    for &s in &columns {
        let chi0: i64 = cells.iter().filter(|c| c.1 == s).map(|&(i, _, t)| sign(t) * block_len(fc, i, s, t) as i64).sum();
        let chi1: i64 = cells.iter().filter(|c| c.1 == s).map(|&(_, _, t)| sign(t) * pages[0].dim(s, t) as i64).sum();
        if chi0 != chi1 {
            failures.push(format!("column {s}: Euler characteristic {chi0} on E_0 but {chi1} on E_1"));
        }
    }
    let total_chi = fc.complex.euler_characteristic();
    for w in pages.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let r = cur.r;
        for &(_, s, t) in &cells {
            let out = cur.ranks[&(s, t)];
            let inc = if s >= r && t + 1 >= r { cur.ranks.get(&(s - r, t + 1 - r)).copied().unwrap_or(0) } else { 0 };
            if out + inc > cur.dim(s, t) {
                failures.push(format!("E_{r} at ({s},{t}): d_r∘d_r ≠ 0 (ranks {inc} in, {out} out of {})", cur.dim(s, t)));
            } else if next.dim(s, t) != cur.dim(s, t) - out - inc {
                failures.push(format!("E_{} at ({s},{t}) is {} but H(E_{r}, d_{r}) has dimension {}", r + 1, next.dim(s, t), cur.dim(s, t) - out - inc));
            }
        }
    }
    for p in &pages {
        let chi: i64 = p.dims.iter().map(|(&(s, t), &d)| sign(s + t) * d as i64).sum();
        if chi != total_chi {
            failures.push(format!("E_{}: Euler characteristic {chi}, total complex {total_chi}", p.r));
        }
    }
    // Past the width of the filtration the sequence has converged.
    let width = columns.len();
    if r_max >= width {
        let last = pages.last().unwrap();
        for (i, h) in fc.complex.cohomology().iter().enumerate() {
            let k = kmin + i as i64;
            let graded: usize = cells.iter().filter(|c| c.0 == i).map(|&(_, s, t)| last.dim(s, t)).sum();
            if graded != h.rank {
                failures.push(format!("E_inf in total degree {k} has dimension {graded}, H^{k} has {}", h.rank));
            }
        }
    }
    pages.pop();
    Ok(SpectralSequence { pages, failures })
}

fn sign(x: usize) -> i64 {
    if x % 2 == 0 {
        1
    } else {
        -1
    }
}

fn block_len(fc: &FilteredComplex, i: usize, s: usize, t: usize) -> usize {
    fc.blocks[i].iter().find(|b| b.s == s && b.t == t).map_or(0, |b| b.len)
}
