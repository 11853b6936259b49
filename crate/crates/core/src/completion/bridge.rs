//! From the strict resolution of the free/forget adjunction to cosimplicial
//! `F₂`-modules, and a completion report for it.
//!
//! The classical resolution lives in finite sets, where the cofaces are not
//! linear; applying the free functor `F` turns it into a cosimplicial vector
//! space on the bases `T^{n+1} X`.

use serde_json::{json, Value};

use super::complex::{CochainComplex, CohomologyGroup};
use super::cosimplicial::{CosimplicialModule, MAX_LEVEL_DIM};
use super::matrix::{Matrix, Ring};
use super::CompletionError;
use crate::adjres::finvect::{FnMap, FreeForget};
use crate::adjres::{cobar_resolution, t_map};

pub fn linearize(f: &FnMap) -> Matrix {
    let mut m = Matrix::zeros(Ring::Fp(2), f.target, f.source);
    for (c, &v) in f.values.iter().enumerate() {
        m.set(v, c, 1);
    }
    m
}

/// `F` applied to the coaugmented cobar resolution of the set `x`: levels
/// `F T^{n+1} x` for `n = 0..=n_top`, coaugmented by `F x`.
pub fn resolution_to_additive(adj: &FreeForget, x: usize, n_top: usize) -> Result<CosimplicialModule, CompletionError> {
    let diag = cobar_resolution(adj, &x, n_top + 1)?;
    if diag.levels.iter().any(|&d| d > MAX_LEVEL_DIM) {
        return Err(CompletionError::TooLarge(format!("levels {:?}", diag.levels)));
    }
    let dims = diag.levels[1..].to_vec();
    let cofaces = (0..=n_top).map(|n| if n < n_top { diag.faces[n + 1].iter().map(linearize).collect() } else { Vec::new() }).collect();
    let codegeneracies = (0..=n_top).map(|n| diag.degeneracies[n + 1].iter().map(linearize).collect()).collect();
    let out = CosimplicialModule { ring: Ring::Fp(2), dims, cofaces, codegeneracies, augmentation: Some(linearize(&diag.faces[0][0])) };
    out.validate()?;
    Ok(out)
}

/// Levelwise `F T^{n+1} h`, a map of cosimplicial modules.
pub fn induced_map(h: &FnMap, n_top: usize) -> Result<(Matrix, Vec<Matrix>), CompletionError> {
    let adj = FreeForget::new();
    let mut cur = h.clone();
    let aug = linearize(&cur);
    let mut maps = Vec::new();
    for _ in 0..=n_top {
        cur = t_map(&adj, &cur)?;
        maps.push(linearize(&cur));
    }
    Ok((aug, maps))
}

/// Failures of `φ` to commute with the structure maps of `a -> b`.
pub fn cosimplicial_map_failures(a: &CosimplicialModule, b: &CosimplicialModule, aug: &Matrix, maps: &[Matrix]) -> Result<Vec<String>, CompletionError> {
    let mut bad = Vec::new();
    for n in 0..a.top() {
        for i in 0..=n + 1 {
            if maps[n + 1].mul(&a.cofaces[n][i])? != b.cofaces[n][i].mul(&maps[n])? {
                bad.push(format!("d{i} @ {n}"));
            }
        }
    }
    for n in 1..=a.top() {
        for j in 0..n {
            if maps[n - 1].mul(&a.codegeneracies[n][j])? != b.codegeneracies[n][j].mul(&maps[n])? {
                bad.push(format!("s{j} @ {n}"));
            }
        }
    }
    if let (Some(ea), Some(eb)) = (&a.augmentation, &b.augmentation) {
        if maps[0].mul(ea)? != eb.mul(aug)? {
            bad.push("coaugmentation".into());
        }
    }
    Ok(bad)
}

/// Column `s` of the one-row page table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportColumn {
    pub s: usize,
    pub level_dim: usize,
    /// `E_1^{s,0}`: the normalized part.
    pub e1: usize,
    /// `E_2^{s,0} = E_∞^{s,0}`; `None` on the truncated top column.
    pub e2: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    pub x: usize,
    pub n_top: usize,
    pub augmentation_dim: usize,
    pub columns: Vec<ReportColumn>,
    pub cohomology: Vec<CohomologyGroup>,
    pub identity_failures: Vec<String>,
}

impl CompletionReport {
    /// Split input: `H⁰` is the coaugmentation source and all else vanishes.
    pub fn collapses_to_edge(&self) -> bool {
        self.cohomology.iter().all(|h| if h.degree == 0 { h.rank == self.augmentation_dim } else { h.is_zero() })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "instance": "a",
            "x": self.x,
            "n_top": self.n_top,
            "augmentation_dim": self.augmentation_dim,
            "identity_failures": self.identity_failures,
            "cohomology": self.cohomology.iter().map(CohomologyGroup::to_json).collect::<Vec<_>>(),
            "columns": self.columns.iter().map(|c| json!({"s": c.s, "level_dim": c.level_dim, "E1": c.e1, "E2": c.e2})).collect::<Vec<_>>(),
            "collapses_to_edge": self.collapses_to_edge(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("instance a, |X| = {}, levels 0..={}\n", self.x, self.n_top);
        out.push_str(&format!("{:>4}{:>8}{:>8}{:>8}\n", "s", "C^s", "E1", "E2"));
        for c in &self.columns {
            let e2 = c.e2.map_or("-".to_string(), |d| d.to_string());
            out.push_str(&format!("{:>4}{:>8}{:>8}{:>8}\n", c.s, c.level_dim, c.e1, e2));
        }
        out
    }
}

/// Cochains of a one-row filtration: `E_1` is the normalized complex (whose
/// dimension is read off the codegeneracies), `E_2 = E_∞` its cohomology.
fn one_row_columns(m: &CosimplicialModule, moore: &CochainComplex) -> Vec<ReportColumn> {
    let h = moore.cohomology();
    (0..=m.top())
        .map(|s| {
            let killed = if s == 0 {
                0
            } else {
                let mut stacked = Matrix::zeros(m.ring, 0, m.dims[s]);
                for c in &m.codegeneracies[s] {
                    stacked = stacked.vstack(c);
                }
                stacked.rank()
            };
            ReportColumn { s, level_dim: m.dims[s], e1: m.dims[s] - killed, e2: h.get(s).map(|g| g.rank) }
        })
        .collect()
}

pub fn derived_completion_report(adj: &FreeForget, x: usize, n_top: usize) -> Result<CompletionReport, CompletionError> {
    let m = resolution_to_additive(adj, x, n_top)?;
    let moore = m.moore_cochain()?;
    Ok(CompletionReport {
        x,
        n_top,
        augmentation_dim: x,
        columns: one_row_columns(&m, &moore),
        cohomology: moore.cohomology(),
        identity_failures: m.identity_failures()?,
    })
}
