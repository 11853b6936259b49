//! Fibrant replacement monad `R` (factor `X -> *`) and cofibrant replacement
//! comonad `Q` (factor `∅ -> X`), with functoriality and structure maps
//! defined by induction over attached cells.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::garner::{garner_iterate, AttachedCell, FactorizationState};
use super::{GeneratorSet, SoaError};
use crate::scomplex::{point, Simplex, SimplicialMap, SimplicialSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Factor `X -> *`; the middle object is `RX`.
    Fibrant,
    /// Factor `∅ -> X`; the middle object is `QX`.
    Cofibrant,
}

/// A replacement of one object, i.e. a factorization state viewed from `X`.
#[derive(Clone, Debug)]
pub struct Replacement {
    pub side: Side,
    pub state: Arc<FactorizationState>,
}

impl Replacement {
    pub fn object(&self) -> &Arc<SimplicialSet> {
        &self.state.object
    }

    /// `r : X -> RX` or `q : QX -> X`.
    pub fn structure_map(&self) -> &SimplicialMap {
        match self.side {
            Side::Fibrant => &self.state.left,
            Side::Cofibrant => &self.state.right,
        }
    }
}

/// Memoizing evaluator for `R` or `Q` at fixed generators and bounds.
pub struct Replacer {
    pub generators: Arc<GeneratorSet>,
    pub side: Side,
    pub max_stages: usize,
    pub budget: u64,
    point: Arc<SimplicialSet>,
    empty: Arc<SimplicialSet>,
    cache: Mutex<HashMap<String, Arc<FactorizationState>>>,
}

impl Replacer {
    pub fn new(generators: Arc<GeneratorSet>, side: Side, max_stages: usize, budget: u64) -> Self {
        let d = generators.dim_bound;
        Self {
            generators,
            side,
            max_stages,
            budget,
            point: Arc::new(point(d)),
            empty: Arc::new(SimplicialSet::empty(d)),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn dim_bound(&self) -> usize {
        self.generators.dim_bound
    }

    pub fn point(&self) -> &Arc<SimplicialSet> {
        &self.point
    }

    /// Factorization state for `x` (possibly unconverged; see `status`).
    pub fn state(&self, x: &Arc<SimplicialSet>) -> Result<Arc<FactorizationState>, SoaError> {
        let key = x.canonical_json();
        if let Some(s) = self.cache.lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let f = match self.side {
            Side::Fibrant => SimplicialMap::to_point(x, &self.point)?,
            Side::Cofibrant => SimplicialMap::from_empty(&self.empty, x)?,
        };
        let state = Arc::new(garner_iterate(self.generators.clone(), &f, self.max_stages, self.budget)?);
        self.cache.lock().unwrap().insert(key, state.clone());
        Ok(state)
    }

    pub fn replace(&self, x: &Arc<SimplicialSet>) -> Result<Replacement, SoaError> {
        Ok(Replacement { side: self.side, state: self.state(x)? })
    }

    fn converged(&self, x: &Arc<SimplicialSet>) -> Result<Arc<FactorizationState>, SoaError> {
        let s = self.state(x)?;
        if !s.converged() {
            return Err(SoaError::NotConverged { stages: s.stage });
        }
        Ok(s)
    }

    pub fn object(&self, x: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, SoaError> {
        Ok(self.state(x)?.object.clone())
    }

    /// `r_X : X -> RX` (fibrant side) or `q_X : QX -> X` (cofibrant side).
    pub fn structure_map(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, SoaError> {
        Ok(self.replace(x)?.structure_map().clone())
    }

    /// `R(h)` or `Q(h)` for `h : X -> X'`.
    pub fn map(&self, h: &SimplicialMap) -> Result<SimplicialMap, SoaError> {
        let src = self.converged(h.source())?;
        let tgt = self.converged(h.target())?;
        match self.side {
            Side::Fibrant => {
                let r = &tgt.left;
                induced_map(&src, &tgt.object, |n, c| r.apply(h.image_of_cell(n, c)), |cell, u| {
                    filler_for(&tgt, cell, u, &cell.bottom)
                })
            }
            Side::Cofibrant => induced_map(&src, &tgt.object, |_, _| unreachable!("no base cells"), |cell, u| {
                let v = h.after(&cell.bottom)?;
                filler_for(&tgt, cell, u, &v)
            }),
        }
    }

    /// `μ_X : RRX -> RX`.
    pub fn mu(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, SoaError> {
        assert_eq!(self.side, Side::Fibrant, "μ is part of the monad");
        let rx = self.converged(x)?;
        let rrx = self.converged(&rx.object)?;
        induced_map(&rrx, &rx.object, |n, c| Simplex::cell_of(n, c), |cell, u| filler_for(&rx, cell, u, &cell.bottom))
    }

    /// `δ_X : QX -> QQX`.
    pub fn delta(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, SoaError> {
        assert_eq!(self.side, Side::Cofibrant, "δ is part of the comonad");
        let qx = self.converged(x)?;
        let qqx = self.converged(&qx.object)?;
        induced_map(&qx, &qqx.object, |_, _| unreachable!("no base cells"), |cell, u| {
            let own = cell.filler.realize(&qx.object)?;
            filler_for(&qqx, cell, u, &own)
        })
    }
}

fn filler_for(
    state: &FactorizationState,
    cell: &AttachedCell,
    u: &SimplicialMap,
    v: &SimplicialMap,
) -> Result<SimplicialMap, SoaError> {
    let key = FactorizationState::key(&cell.generator_id, u, v);
    let found = state.registered(&key).ok_or_else(|| SoaError::MissingFiller(cell.generator_id.clone()))?;
    Ok(found.filler.realize(&state.object)?)
}

/// A map out of `E` defined on the cells coming from `X` by `base`, and on
/// each attached cell by the filler that `lookup` assigns to the image of its
/// attaching square.
fn induced_map(
    src: &FactorizationState,
    target: &Arc<SimplicialSet>,
    base: impl Fn(usize, usize) -> Simplex,
    mut lookup: impl FnMut(&AttachedCell, &SimplicialMap) -> Result<SimplicialMap, SoaError>,
) -> Result<SimplicialMap, SoaError> {
    let e = &src.object;
    let d = e.dim_bound();
    let mut table: Vec<Vec<Option<Simplex>>> = (0..=d).map(|n| vec![None; e.cells(n).len()]).collect();
    for (n, lvl) in src.left.assignment().iter().enumerate() {
        for (c, s) in lvl.iter().enumerate() {
            table[n][s.cell()] = Some(base(n, c));
        }
    }
    let grow = |table: &Vec<Vec<Option<Simplex>>>, s: &Simplex| -> Simplex {
        table[s.cell_dim()][s.cell()].as_ref().expect("attached in stage order").degenerate_by(s.epi_raw())
    };
    for cell in &src.cells {
        let u = cell.attaching.realize(e)?;
        let images = u.assignment().iter().map(|lvl| lvl.iter().map(|s| grow(&table, s)).collect()).collect();
        let u_img = SimplicialMap::new(u.source().clone(), target.clone(), images)?;
        let w = lookup(cell, &u_img)?;
        for (n, b, name) in &cell.new_cells {
            let c = e.cell_index(*n, name).expect("attached cell present");
            table[*n][c] = Some(w.image_of_cell(*n, *b).clone());
        }
    }
    let assignment = table.into_iter().map(|lvl| lvl.into_iter().map(|s| s.expect("every cell assigned")).collect()).collect();
    Ok(SimplicialMap::new(e.clone(), target.clone(), assignment)?)
}
