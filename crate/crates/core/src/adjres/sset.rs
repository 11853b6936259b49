//! Instances on truncated simplicial sets, deformed by the small object
//! argument for boundary inclusions: the identity adjunction, and the
//! cylinder/path adjunction `(−) × Δ¹ ⊣ (−)^{Δ¹}` in dimension 0.

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{AdjError, Category, DeformableAdjunction};
use crate::scomplex::{product, product_map, rebound, standard_simplex, Simplex, SimplicialMap, SimplicialSet};
use crate::soa::{GeneratorSet, Replacer, Side};

pub struct SSet {
    pub dim_bound: usize,
}

impl Category for SSet {
    type Obj = Arc<SimplicialSet>;
    type Mor = SimplicialMap;

    fn source(&self, f: &SimplicialMap) -> Arc<SimplicialSet> {
        f.source().clone()
    }

    fn target(&self, f: &SimplicialMap) -> Arc<SimplicialSet> {
        f.target().clone()
    }

    fn identity(&self, x: &Arc<SimplicialSet>) -> SimplicialMap {
        SimplicialMap::identity(x)
    }

    fn compose(&self, g: &SimplicialMap, f: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
        Ok(g.after(f)?)
    }

    fn discrepancy(&self, a: &SimplicialMap, b: &SimplicialMap) -> Option<String> {
        if a.source() != b.source() {
            return Some(format!("sources differ: {:?} vs {:?}", a.source().counts(), b.source().counts()));
        }
        if a.target() != b.target() {
            return Some(format!("targets differ: {:?} vs {:?}", a.target().counts(), b.target().counts()));
        }
        let x = a.source();
        for n in 0..=x.dim_bound() {
            for c in 0..x.cells(n).len() {
                let (u, v) = (a.image_of_cell(n, c), b.image_of_cell(n, c));
                if u != v {
                    let t = a.target();
                    return Some(format!("cell {}: {} vs {}", x.name(n, c), t.simplex_label(u), t.simplex_label(v)));
                }
            }
        }
        None
    }

    fn describe(&self, x: &Arc<SimplicialSet>) -> Value {
        json!({ "cells": x.counts() })
    }

    fn map_json(&self, f: &SimplicialMap) -> Value {
        f.to_json()
    }
}

/// Cofibrant replacement `Q` and fibrant replacement `R`, both generated by
/// the boundary inclusions up to the dimension bound.
pub struct Deformations {
    pub q: Replacer,
    pub r: Replacer,
}

impl Deformations {
    pub fn boundaries(dim_bound: usize, max_stages: usize, budget: u64) -> Result<Self, AdjError> {
        let gens = GeneratorSet::boundaries(dim_bound, dim_bound)?.shared();
        Ok(Self {
            q: Replacer::new(gens.clone(), Side::Cofibrant, max_stages, budget),
            r: Replacer::new(gens, Side::Fibrant, max_stages, budget),
        })
    }
}

macro_rules! deformations {
    () => {
        fn q(&self, x: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, AdjError> {
            Ok(self.deform.q.object(x)?)
        }

        fn q_map(&self, h: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
            Ok(self.deform.q.map(h)?)
        }

        fn q_counit(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
            Ok(self.deform.q.structure_map(x)?)
        }

        fn delta(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
            Ok(self.deform.q.delta(x)?)
        }

        fn r(&self, y: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, AdjError> {
            Ok(self.deform.r.object(y)?)
        }

        fn r_map(&self, k: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
            Ok(self.deform.r.map(k)?)
        }

        fn r_unit(&self, y: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
            Ok(self.deform.r.structure_map(y)?)
        }

        fn mu(&self, y: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
            Ok(self.deform.r.mu(y)?)
        }
    };
}

/// `1 ⊣ 1` on `sSet_{≤D}`, so that `T = RQ` and `ι = Q(r_Q) ∘ δ`.
pub struct IdentityAdjunction {
    cat: SSet,
    pub deform: Deformations,
}

impl IdentityAdjunction {
    pub fn new(dim_bound: usize, max_stages: usize, budget: u64) -> Result<Self, AdjError> {
        Ok(Self { cat: SSet { dim_bound }, deform: Deformations::boundaries(dim_bound, max_stages, budget)? })
    }
}

impl DeformableAdjunction for IdentityAdjunction {
    type C = SSet;
    type D = SSet;

    fn name(&self) -> String {
        format!("sset-identity-d{}", self.cat.dim_bound)
    }

    fn c(&self) -> &SSet {
        &self.cat
    }

    fn d(&self) -> &SSet {
        &self.cat
    }

    fn f(&self, x: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, AdjError> {
        Ok(x.clone())
    }

    fn f_map(&self, h: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
        Ok(h.clone())
    }

    fn g(&self, y: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, AdjError> {
        Ok(y.clone())
    }

    fn g_map(&self, k: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
        Ok(k.clone())
    }

    fn eta(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
        Ok(SimplicialMap::identity(x))
    }

    fn eps(&self, y: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
        Ok(SimplicialMap::identity(y))
    }

    deformations!();
}

/// `(−) × Δ¹ ⊣ (−)^{Δ¹}` on 0-truncated simplicial sets: `X × Δ¹` has
/// vertices `(x|i)` and `Y^{Δ¹}` has vertices `<a,b>`, the pairs of vertices of `Y`.
pub struct CylinderPath {
    cat: SSet,
    interval: Arc<SimplicialSet>,
    pub deform: Deformations,
}

impl CylinderPath {
    pub fn new(max_stages: usize, budget: u64) -> Result<Self, AdjError> {
        let interval = Arc::new(rebound(&standard_simplex(1, 1)?, 0));
        Ok(Self { cat: SSet { dim_bound: 0 }, interval, deform: Deformations::boundaries(0, max_stages, budget)? })
    }

    fn path_name(y: &SimplicialSet, a: usize, b: usize) -> String {
        format!("<{},{}>", y.name(0, a), y.name(0, b))
    }

    /// The path object with the vertex pair behind each of its vertices.
    fn paths(&self, y: &Arc<SimplicialSet>) -> Result<(Arc<SimplicialSet>, Vec<(usize, usize)>), AdjError> {
        let n = y.cells(0).len();
        let mut named: Vec<(String, (usize, usize))> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (Self::path_name(y, a, b), (a, b))).collect();
        named.sort();
        let pairs = named.iter().map(|e| e.1).collect();
        let cells = vec![named.into_iter().map(|e| e.0).collect()];
        let set = SimplicialSet::new(0, cells, vec![vec![Vec::new(); n * n]])?;
        Ok((Arc::new(set), pairs))
    }

    fn vertex(x: &SimplicialSet, name: &str) -> Result<Simplex, AdjError> {
        x.cell_index(0, name).map(|c| Simplex::cell_of(0, c)).ok_or_else(|| AdjError::Invalid(format!("no vertex {name}")))
    }
}

impl DeformableAdjunction for CylinderPath {
    type C = SSet;
    type D = SSet;

    fn name(&self) -> String {
        "cylinder-path-d0".into()
    }

    fn c(&self) -> &SSet {
        &self.cat
    }

    fn d(&self) -> &SSet {
        &self.cat
    }

    fn f(&self, x: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, AdjError> {
        Ok(product(x, &self.interval)?.set)
    }

    fn f_map(&self, h: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
        let src = product(h.source(), &self.interval)?;
        let tgt = product(h.target(), &self.interval)?;
        Ok(product_map(h, &SimplicialMap::identity(&self.interval), &src, &tgt)?)
    }

    fn g(&self, y: &Arc<SimplicialSet>) -> Result<Arc<SimplicialSet>, AdjError> {
        Ok(self.paths(y)?.0)
    }

    fn g_map(&self, k: &SimplicialMap) -> Result<SimplicialMap, AdjError> {
        let (src, pairs) = self.paths(k.source())?;
        let (tgt, _) = self.paths(k.target())?;
        let t = k.target();
        let images = pairs
            .iter()
            .map(|&(a, b)| {
                let (ka, kb) = (k.image_of_cell(0, a).cell(), k.image_of_cell(0, b).cell());
                Self::vertex(&tgt, &Self::path_name(t, ka, kb))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SimplicialMap::new(src, tgt, vec![images])?)
    }

    fn eta(&self, x: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
        let cyl = product(x, &self.interval)?;
        let (gfx, _) = self.paths(&cyl.set)?;
        let images = (0..x.cells(0).len())
            .map(|v| {
                let s = Simplex::cell_of(0, v);
                let ends: Vec<usize> = (0..2).map(|i| cyl.pair(&s, &Simplex::cell_of(0, i)).cell()).collect();
                Self::vertex(&gfx, &Self::path_name(&cyl.set, ends[0], ends[1]))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SimplicialMap::new(x.clone(), gfx, vec![images])?)
    }

    fn eps(&self, y: &Arc<SimplicialSet>) -> Result<SimplicialMap, AdjError> {
        let (gy, pairs) = self.paths(y)?;
        let cyl = product(&gy, &self.interval)?;
        let index: HashMap<usize, (usize, usize)> = pairs.into_iter().enumerate().collect();
        let images = (0..cyl.set.cells(0).len())
            .map(|c| {
                let (p, i) = cyl.components(0, c);
                let (a, b) = index[&p.cell()];
                Simplex::cell_of(0, if i.cell() == 0 { a } else { b })
            })
            .collect();
        Ok(SimplicialMap::new(cyl.set.clone(), y.clone(), vec![images])?)
    }

    deformations!();
}
