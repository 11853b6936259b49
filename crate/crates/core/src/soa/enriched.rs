//! Step one with the set of squares replaced by the simplicial set of
//! squares: attach `Sq(i, f) ⊗ i` instead of `∐_{Sq(i,f)} i`.

use std::collections::HashMap;
use std::sync::Arc;

use super::{GeneratorSet, SoaError};
use crate::scomplex::{
    coproduct, coproduct_named, product, product_map, pushout_named, square_space, Simplex, SimplicialMap, SimplicialSet,
};

pub struct EnrichedStepOne {
    pub object: Arc<SimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    /// The square space of each generator.
    pub square_spaces: Vec<Arc<SimplicialSet>>,
}

pub fn enriched_step_one(gens: &GeneratorSet, f: &SimplicialMap, budget: u64) -> Result<EnrichedStepOne, SoaError> {
    let x = f.source();
    let d = x.dim_bound();
    if gens.dim_bound != d {
        return Err(SoaError::DimBound(gens.dim_bound, d));
    }
    let mut tensors_a = Vec::new();
    let mut tensors_b = Vec::new();
    let mut one_times_i = Vec::new();
    let mut ev_a = Vec::new();
    let mut ev_b = Vec::new();
    let mut spaces = Vec::new();
    for g in gens.generators() {
        let i = &g.map;
        let space = square_space(i, f, budget)?;
        let k = space.set.clone();
        let pa = product(&k, i.source())?;
        let pb = product(&k, i.target())?;
        let element: Vec<HashMap<&Simplex, usize>> =
            space.decomposition.iter().map(|lvl| lvl.iter().enumerate().map(|(e, s)| (s, e)).collect()).collect();
        // (k, a) ↦ u_k(ι_n, a), and likewise for v on the B side.
        let evaluate = |p: &crate::scomplex::Product, use_top: bool| -> Vec<Vec<Simplex>> {
            (0..=d)
                .map(|n| {
                    (0..p.set.cells(n).len())
                        .map(|c| {
                            let (sk, sa) = p.components(n, c);
                            let lvl = &space.levels[n];
                            let (u, v) = &lvl.squares[element[n][sk]];
                            let top = Simplex::cell_of(n, 0);
                            if use_top {
                                u.apply(&lvl.over_a.pair(&top, sa))
                            } else {
                                v.apply(&lvl.over_b.pair(&top, sa))
                            }
                        })
                        .collect()
                })
                .collect()
        };
        ev_a.push(SimplicialMap::new(pa.set.clone(), x.clone(), evaluate(&pa, true))?);
        ev_b.push(SimplicialMap::new(pb.set.clone(), f.target().clone(), evaluate(&pb, false))?);
        one_times_i.push(product_map(&SimplicialMap::identity(&k), i, &pa, &pb)?);
        tensors_a.push(pa.set.clone());
        tensors_b.push(pb.set.clone());
        spaces.push(k);
    }
    let sum_a = coproduct(&tensors_a, d)?;
    let sum_b = coproduct_named(&tensors_b, d, |g, name| format!("~1.{g}:{name}"))?;
    let along = |table: &dyn Fn(usize, usize, usize) -> Simplex| -> Vec<Vec<Simplex>> {
        (0..=d).map(|n| sum_a.origin[n].iter().map(|&(g, c)| table(n, g, c)).collect()).collect()
    };
    let sum_i = SimplicialMap::new(
        sum_a.set.clone(),
        sum_b.set.clone(),
        along(&|n, g, c| sum_b.injections[g].apply(one_times_i[g].image_of_cell(n, c))),
    )?;
    let u_tot = SimplicialMap::new(sum_a.set.clone(), x.clone(), along(&|n, g, c| ev_a[g].image_of_cell(n, c).clone()))?;
    let po = pushout_named(&sum_i, &u_tot, str::to_string, str::to_string)?;
    let e = po.set.clone();
    let right = (0..=d)
        .map(|n| {
            e.cells(n)
                .iter()
                .map(|name| match x.cell_index(n, name) {
                    Some(c) => f.image_of_cell(n, c).clone(),
                    None => {
                        let cb = sum_b.set.cell_index(n, name).expect("new cell comes from a tensor");
                        let (g, b) = sum_b.origin[n][cb];
                        ev_b[g].image_of_cell(n, b).clone()
                    }
                })
                .collect()
        })
        .collect();
    let right = SimplicialMap::new(e.clone(), f.target().clone(), right)?;
    Ok(EnrichedStepOne { left: po.from_c.clone(), right, object: e, square_spaces: spaces })
}
