use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{GeneratorSet, SoaError};
use crate::scomplex::{
    coproduct, coproduct_named, pushout_named, MapSearch, ScomplexError, Simplex, SimplicialMap, SimplicialSet,
};

/// A map whose images are recorded by target cell *name*, so that it can be
/// re-read into any later stage (stages only ever add cells).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    source: Arc<SimplicialSet>,
    images: Vec<Vec<(Vec<u8>, String)>>,
}

impl NamedMap {
    pub fn of(map: &SimplicialMap) -> Self {
        let t = map.target();
        let images = map
            .assignment()
            .iter()
            .map(|lvl| lvl.iter().map(|s| (s.epi_raw().to_vec(), t.name(s.cell_dim(), s.cell()).to_string())).collect())
            .collect();
        Self { source: map.source().clone(), images }
    }

    pub fn realize(&self, target: &Arc<SimplicialSet>) -> Result<SimplicialMap, ScomplexError> {
        let assignment = self
            .images
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|(epi, name)| {
                        let k = *epi.last().unwrap() as usize;
                        target
                            .cell_index(k, name)
                            .map(|c| Simplex::from_raw(epi.clone(), c))
                            .ok_or_else(|| ScomplexError::Invalid(format!("cell {name} not present")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialMap::new(self.source.clone(), target.clone(), assignment)
    }
}

/// One filler attached along one square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachedCell {
    pub generator: usize,
    pub generator_id: String,
    pub stage: usize,
    pub square: usize,
    pub key: String,
    /// Top of the square, `A -> E` at the stage it was attached along.
    pub attaching: NamedMap,
    /// Bottom of the square, `B -> Y`.
    pub bottom: SimplicialMap,
    /// The characteristic map `B -> E` of the attached cell.
    pub filler: NamedMap,
    /// Cells of `B` outside the image of the generator, with their names in `E`.
    pub new_cells: Vec<(usize, usize, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Running,
    Converged,
    StageLimit,
    BudgetExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Running => "running",
            Self::Converged => "converged",
            Self::StageLimit => "stage-limit",
            Self::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FactorizationState {
    pub generators: Arc<GeneratorSet>,
    pub input: SimplicialMap,
    pub stage: usize,
    pub object: Arc<SimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    pub cells: Vec<AttachedCell>,
    registry: BTreeMap<String, usize>,
    pub status: Status,
    /// Prefix of attached-cell names, chosen so they cannot clash with `X`.
    pub marker: String,
    /// Number of squares enumerated at each completed stage.
    pub square_counts: Vec<usize>,
    /// Number of fillers attached at each completed stage.
    pub attached_counts: Vec<usize>,
}

/// Commutative squares from `i : A -> B` to `f : E -> Y`.
pub(crate) fn squares(i: &SimplicialMap, f: &SimplicialMap, budget: u64) -> Result<Vec<(SimplicialMap, SimplicialMap)>, ScomplexError> {
    let mut out = Vec::new();
    let mut inner = 0u64;
    let mut failure = None;
    let outer = MapSearch::new(i.target(), f.target(), budget).run(|v| {
        let filter = |n: usize, c: usize, cand: &Simplex| f.apply(cand) == v.apply(i.image_of_cell(n, c));
        let mut us = MapSearch::new(i.source(), f.source(), budget.saturating_sub(inner));
        us.filter = Some(&filter);
        match us.run(|u| {
            out.push((u, v.clone()));
            ControlFlow::Continue(())
        }) {
            Ok(used) => {
                inner += used;
                ControlFlow::Continue(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    if outer + inner > budget {
        return Err(ScomplexError::BudgetExceeded { budget });
    }
    Ok(out)
}

/// Search for a diagonal `w : B -> E` with `w i = u` and `f w = v`.
pub(crate) fn find_lift(
    i: &SimplicialMap,
    f: &SimplicialMap,
    u: &SimplicialMap,
    v: &SimplicialMap,
    budget: u64,
) -> Result<Option<SimplicialMap>, ScomplexError> {
    let b = i.target();
    let mut prescribed: Vec<Vec<Option<Simplex>>> = (0..=b.dim_bound()).map(|n| vec![None; b.cells(n).len()]).collect();
    for (n, lvl) in i.assignment().iter().enumerate() {
        for (c, s) in lvl.iter().enumerate() {
            prescribed[n][s.cell()] = Some(u.image_of_cell(n, c).clone());
        }
    }
    let filter = |n: usize, c: usize, cand: &Simplex| f.apply(cand) == *v.image_of_cell(n, c);
    let mut search = MapSearch::new(b, f.source(), budget);
    search.prescribed = Some(&prescribed);
    search.filter = Some(&filter);
    search.first()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LiftReport {
    pub squares: usize,
    pub lifted: usize,
    pub failures: Vec<String>,
}

impl LiftReport {
    pub fn all_lift(&self) -> bool {
        self.squares == self.lifted && self.failures.is_empty()
    }
}

/// Does `f` lift against every square from every generator? Exhaustive.
pub fn exhaustive_lift_check(gens: &GeneratorSet, f: &SimplicialMap, budget: u64) -> Result<LiftReport, SoaError> {
    let mut report = LiftReport::default();
    for g in gens.generators() {
        for (u, v) in squares(&g.map, f, budget)? {
            report.squares += 1;
            if find_lift(&g.map, f, &u, &v, budget)?.is_some() {
                report.lifted += 1;
            } else {
                report.failures.push(format!("{}: {}", g.id, u.assignment_json()));
            }
        }
    }
    Ok(report)
}

impl FactorizationState {
    /// Stage zero: `X -> X -> Y`.
    pub fn start(generators: Arc<GeneratorSet>, f: &SimplicialMap) -> Result<Self, SoaError> {
        let d = f.source().dim_bound();
        if generators.dim_bound != d || f.target().dim_bound() != d {
            return Err(SoaError::DimBound(generators.dim_bound, d));
        }
        let depth = (0..=d)
            .flat_map(|n| f.source().cells(n).iter())
            .map(|name| name.chars().take_while(|&ch| ch == '~').count())
            .max()
            .unwrap_or(0);
        Ok(Self {
            marker: "~".repeat(depth + 1),
            generators,
            input: f.clone(),
            stage: 0,
            object: f.source().clone(),
            left: SimplicialMap::identity(f.source()),
            right: f.clone(),
            cells: Vec::new(),
            registry: BTreeMap::new(),
            status: Status::Running,
            square_counts: Vec::new(),
            attached_counts: Vec::new(),
        })
    }

    pub fn converged(&self) -> bool {
        self.status == Status::Converged
    }

    pub fn key(generator_id: &str, u: &SimplicialMap, v: &SimplicialMap) -> String {
        format!("{generator_id}|{}|{}", u.assignment_json(), v.assignment_json())
    }

    pub fn registry_keys(&self) -> impl Iterator<Item = &String> {
        self.registry.keys()
    }

    pub fn registered(&self, key: &str) -> Option<&AttachedCell> {
        self.registry.get(key).map(|&k| &self.cells[k])
    }

    /// The chosen filler for a square against the current right factor.
    pub fn chosen_lift(&self, generator: usize, u: &SimplicialMap, v: &SimplicialMap) -> Result<Option<SimplicialMap>, SoaError> {
        let id = &self.generators.generators()[generator].id;
        match self.registered(&Self::key(id, u, v)) {
            Some(cell) => Ok(Some(cell.filler.realize(&self.object)?)),
            None => Ok(None),
        }
    }

    /// One Garner stage. Returns the number of fillers attached.
    pub fn step(&mut self, budget: u64) -> Result<usize, SoaError> {
        let gens = self.generators.clone();
        let mut fresh: Vec<(usize, SimplicialMap, SimplicialMap, String)> = Vec::new();
        let mut count = 0;
        for (g, gen) in gens.generators().iter().enumerate() {
            for (u, v) in squares(&gen.map, &self.right, budget)? {
                count += 1;
                let key = Self::key(&gen.id, &u, &v);
                if !self.registry.contains_key(&key) {
                    fresh.push((g, u, v, key));
                }
            }
        }
        self.stage += 1;
        self.square_counts.push(count);
        self.attached_counts.push(fresh.len());
        if fresh.is_empty() {
            self.status = Status::Converged;
            return Ok(0);
        }
        let stage = self.stage;
        let d = self.object.dim_bound();
        let gen_of = |p: usize| &gens.generators()[fresh[p].0].map;
        let sources: Vec<_> = (0..fresh.len()).map(|p| gen_of(p).source().clone()).collect();
        let targets: Vec<_> = (0..fresh.len()).map(|p| gen_of(p).target().clone()).collect();
        let sum_a = coproduct(&sources, d)?;
        let marker = self.marker.clone();
        let prefix = |p: usize| format!("{marker}{stage}.{}.{p}:", fresh[p].0);
        let sum_b = coproduct_named(&targets, d, |p, name| format!("{}{name}", prefix(p)))?;
        let along = |table: &dyn Fn(usize, usize, usize) -> Simplex| -> Vec<Vec<Simplex>> {
            (0..=d)
                .map(|n| sum_a.origin[n].iter().map(|&(p, c)| table(n, p, c)).collect())
                .collect()
        };
        let sum_i = SimplicialMap::new(
            sum_a.set.clone(),
            sum_b.set.clone(),
            along(&|n, p, c| sum_b.injections[p].apply(gen_of(p).image_of_cell(n, c))),
        )?;
        let u_tot = SimplicialMap::new(sum_a.set.clone(), self.object.clone(), along(&|n, p, c| fresh[p].1.image_of_cell(n, c).clone()))?;
        let po = pushout_named(&sum_i, &u_tot, str::to_string, str::to_string)?;
        let e_next = po.set.clone();

        let mut right = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut lvl = Vec::with_capacity(e_next.cells(n).len());
            for name in e_next.cells(n) {
                let image = match self.object.cell_index(n, name) {
                    Some(c) => self.right.image_of_cell(n, c).clone(),
                    None => {
                        let cb = sum_b.set.cell_index(n, name).expect("new cell comes from a filler");
                        let (p, b) = sum_b.origin[n][cb];
                        fresh[p].2.image_of_cell(n, b).clone()
                    }
                };
                lvl.push(image);
            }
            right.push(lvl);
        }
        let right = SimplicialMap::new(e_next.clone(), self.right.target().clone(), right)?;
        let left = po.from_c.after(&self.left)?;

        for (p, (g, u, v, key)) in fresh.into_iter().enumerate() {
            let gen = &gens.generators()[g];
            let filler = po.from_b.after(&sum_b.injections[p])?;
            let b = gen.map.target();
            let mut hit: Vec<Vec<bool>> = (0..=d).map(|n| vec![false; b.cells(n).len()]).collect();
            for s in gen.map.assignment().iter().flatten() {
                hit[s.dim()][s.cell()] = true;
            }
            let new_cells = (0..=d)
                .flat_map(|n| (0..b.cells(n).len()).map(move |c| (n, c)))
                .filter(|&(n, c)| !hit[n][c])
                .map(|(n, c)| (n, c, format!("{marker}{stage}.{g}.{p}:{}", b.name(n, c))))
                .collect();
            self.registry.insert(key.clone(), self.cells.len());
            self.cells.push(AttachedCell {
                generator: g,
                generator_id: gen.id.clone(),
                stage,
                square: p,
                key,
                attaching: NamedMap::of(&u),
                bottom: v,
                filler: NamedMap::of(&filler),
                new_cells,
            });
        }
        self.object = e_next;
        self.left = left;
        self.right = right;
        debug_assert_eq!(self.right.after(&self.left).ok().as_ref(), Some(&self.input));
        Ok(self.attached_counts[stage - 1])
    }

    /// Run further stages until convergence, `max_stages` total, or budget.
    pub fn resume(&mut self, max_stages: usize, budget: u64) -> Result<(), SoaError> {
        if self.status != Status::Converged {
            self.status = Status::Running;
        }
        while self.status == Status::Running && self.stage < max_stages {
            match self.step(budget) {
                Ok(_) => {}
                Err(SoaError::Scomplex(ScomplexError::BudgetExceeded { .. })) => self.status = Status::BudgetExceeded,
                Err(e) => return Err(e),
            }
        }
        if self.status == Status::Running {
            self.status = Status::StageLimit;
        }
        Ok(())
    }

    /// Every square against the right factor that has a registered filler
    /// is checked to commute; squares without one are counted as failures.
    pub fn verify_chosen_lifts(&self, budget: u64) -> Result<LiftReport, SoaError> {
        let mut report = LiftReport::default();
        for (g, gen) in self.generators.generators().iter().enumerate() {
            for (u, v) in squares(&gen.map, &self.right, budget)? {
                report.squares += 1;
                match self.chosen_lift(g, &u, &v)? {
                    Some(w) if w.after(&gen.map)? == u && self.right.after(&w)? == v => report.lifted += 1,
                    Some(_) => report.failures.push(format!("{}: filler does not commute", gen.id)),
                    None => report.failures.push(format!("{}: unfilled square {}", gen.id, u.assignment_json())),
                }
            }
        }
        Ok(report)
    }

    /// Chosen fillers recorded in the provenance commute with their squares.
    pub fn verify_provenance(&self) -> Result<Vec<String>, SoaError> {
        let mut bad = Vec::new();
        for cell in &self.cells {
            let gen = &self.generators.generators()[cell.generator].map;
            let w = cell.filler.realize(&self.object)?;
            let u = cell.attaching.realize(&self.object)?;
            if w.after(gen)? != u || self.right.after(&w)? != cell.bottom {
                bad.push(cell.key.clone());
            }
        }
        Ok(bad)
    }

    pub fn to_json(&self) -> Value {
        let provenance: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                json!({
                    "generator": c.generator_id,
                    "stage": c.stage,
                    "square": c.square,
                    "key": c.key,
                    "cells": c.new_cells.iter().map(|(_, _, n)| n.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "generators": self.generators.kind.as_str(),
            "input": self.input.to_json(),
            "stage": self.stage,
            "status": self.status.as_str(),
            "converged": self.converged(),
            "object": self.object.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "square_counts": self.square_counts,
            "attached_counts": self.attached_counts,
            "provenance": provenance,
            "registry": self.registry.keys().collect::<Vec<_>>(),
        })
    }
}

pub fn step_one(generators: Arc<GeneratorSet>, f: &SimplicialMap, budget: u64) -> Result<FactorizationState, SoaError> {
    let mut state = FactorizationState::start(generators, f)?;
    state.step(budget)?;
    if state.status == Status::Running {
        state.status = Status::StageLimit;
    }
    Ok(state)
}

/// Iterate until a stage attaches nothing, or `max_stages` stages have run,
/// or the budget is exhausted. The last two are reported in `status`.
pub fn garner_iterate(generators: Arc<GeneratorSet>, f: &SimplicialMap, max_stages: usize, budget: u64) -> Result<FactorizationState, SoaError> {
    let mut state = FactorizationState::start(generators, f)?;
    state.resume(max_stages, budget)?;
    Ok(state)
}
