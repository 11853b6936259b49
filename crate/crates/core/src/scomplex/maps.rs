//! Enumerating maps of finite simplicial sets, levelwise mapping spaces and
//! spaces of commutative squares.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use super::build::Presented;
use super::constructions::{product, product_map, rebound, standard_simplex, subset_name, Product};
use super::op::Monotone;
use super::sset::{Simplex, SimplicialMap, SimplicialSet};
use super::ScomplexError;

/// Default cap on candidate assignments examined by one enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Constraints for a map search. `prescribed[n][c]` fixes the image of a cell;
/// `filter` vetoes candidates for a cell.
pub struct MapSearch<'a> {
    pub source: &'a Arc<SimplicialSet>,
    pub target: &'a Arc<SimplicialSet>,
    pub budget: u64,
    pub prescribed: Option<&'a [Vec<Option<Simplex>>]>,
    pub filter: Option<&'a dyn Fn(usize, usize, &Simplex) -> bool>,
}

impl<'a> MapSearch<'a> {
    pub fn new(source: &'a Arc<SimplicialSet>, target: &'a Arc<SimplicialSet>, budget: u64) -> Self {
        Self { source, target, budget, prescribed: None, filter: None }
    }

    /// Visit maps in lexicographic order of their assignments until `visit`
    /// breaks. Returns the number of candidates examined.
    pub fn run(&self, mut visit: impl FnMut(SimplicialMap) -> ControlFlow<()>) -> Result<u64, ScomplexError> {
        let (src, tgt) = (self.source, self.target);
        let d = src.dim_bound();
        if d > tgt.dim_bound() {
            return Err(ScomplexError::DimBoundMismatch(d, tgt.dim_bound()));
        }
        // Target simplices of each dimension, keyed by their tuple of faces.
        let mut by_faces: Vec<HashMap<Vec<Simplex>, Vec<Simplex>>> = Vec::with_capacity(d + 1);
        for n in 0..=d {
            if src.cells(n).is_empty() {
                by_faces.push(HashMap::new());
                continue;
            }
            let mut index: HashMap<Vec<Simplex>, Vec<Simplex>> = HashMap::new();
            for s in tgt.simplices(n) {
                let key = if n == 0 { Vec::new() } else { (0..=n).map(|i| tgt.face(&s, i)).collect() };
                index.entry(key).or_default().push(s);
            }
            for list in index.values_mut() {
                list.sort();
            }
            by_faces.push(index);
        }
        let order: Vec<(usize, usize)> = (0..=d).flat_map(|n| (0..src.cells(n).len()).map(move |c| (n, c))).collect();
        let mut assignment: Vec<Vec<Simplex>> = (0..=d).map(|n| vec![Simplex::cell_of(0, 0); src.cells(n).len()]).collect();
        let mut examined = 0u64;
        let mut state = Search { this: self, by_faces: &by_faces, order: &order, examined: &mut examined };
        let _ = state.go(0, &mut assignment, &mut visit)?;
        Ok(examined)
    }

    pub fn all(&self) -> Result<Vec<SimplicialMap>, ScomplexError> {
        let mut out = Vec::new();
        self.run(|m| {
            out.push(m);
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn first(&self) -> Result<Option<SimplicialMap>, ScomplexError> {
        let mut out = None;
        self.run(|m| {
            out = Some(m);
            ControlFlow::Break(())
        })?;
        Ok(out)
    }
}

struct Search<'s, 'a> {
    this: &'s MapSearch<'a>,
    by_faces: &'s [HashMap<Vec<Simplex>, Vec<Simplex>>],
    order: &'s [(usize, usize)],
    examined: &'s mut u64,
}

impl Search<'_, '_> {
    fn go(
        &mut self,
        pos: usize,
        assignment: &mut Vec<Vec<Simplex>>,
        visit: &mut impl FnMut(SimplicialMap) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>, ScomplexError> {
        let this = self.this;
        if pos == self.order.len() {
            let map = SimplicialMap::new_unchecked(this.source.clone(), this.target.clone(), assignment.clone());
            return Ok(visit(map));
        }
        let (n, c) = self.order[pos];
        let key: Vec<Simplex> = if n == 0 {
            Vec::new()
        } else {
            this.source
                .cell_faces(n, c)
                .iter()
                .map(|f| assignment[f.cell_dim()][f.cell()].degenerate_by(f.epi_raw()))
                .collect()
        };
        let Some(candidates) = self.by_faces[n].get(&key) else {
            return Ok(ControlFlow::Continue(()));
        };
        let fixed = this.prescribed.and_then(|p| p[n][c].as_ref());
        for cand in candidates {
            if fixed.is_some_and(|f| f != cand) {
                continue;
            }
            *self.examined += 1;
            if *self.examined > this.budget {
                return Err(ScomplexError::BudgetExceeded { budget: this.budget });
            }
            if this.filter.is_some_and(|f| !f(n, c, cand)) {
                continue;
            }
            assignment[n][c] = cand.clone();
            if self.go(pos + 1, assignment, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

pub fn enumerate_maps(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>, budget: u64) -> Result<Vec<SimplicialMap>, ScomplexError> {
    MapSearch::new(source, target, budget).all()
}

/// The map `Δᵐ -> Δⁿ` induced by a monotone `θ`.
pub fn operator_map(theta: &Monotone, src: &Arc<SimplicialSet>, tgt: &Arc<SimplicialSet>) -> Result<SimplicialMap, ScomplexError> {
    let (m, n) = (theta.source_dim(), theta.target_dim());
    let d = src.dim_bound();
    let assignment = (0..=d)
        .map(|k| {
            src.cells(k)
                .iter()
                .map(|name| {
                    let verts = parse_subset(name, m);
                    let images: Vec<usize> = verts.iter().map(|&v| theta.apply(v)).collect();
                    let mut distinct = images.clone();
                    distinct.dedup();
                    let cell = tgt
                        .cell_index(distinct.len() - 1, &subset_name(&distinct, n))
                        .ok_or_else(|| ScomplexError::Invalid("operator target is not a standard simplex".into()))?;
                    let epi: Vec<u8> = images.iter().map(|v| distinct.binary_search(v).unwrap() as u8).collect();
                    Ok(Simplex::from_raw(epi, cell))
                })
                .collect::<Result<Vec<_>, ScomplexError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialMap::new(src.clone(), tgt.clone(), assignment)
}

fn parse_subset(name: &str, n: usize) -> Vec<usize> {
    if n < 10 {
        name.chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect()
    } else {
        name.split(',').map(|p| p.parse().unwrap()).collect()
    }
}

/// `Δⁿ × A`, truncated at `dim_bound`.
pub fn simplex_times(n: usize, a: &Arc<SimplicialSet>, dim_bound: usize) -> Result<(Arc<SimplicialSet>, Product), ScomplexError> {
    let delta = Arc::new(standard_simplex(n, dim_bound)?);
    let a = Arc::new(rebound(a, dim_bound));
    let p = product(&delta, &a)?;
    Ok((delta, p))
}

/// Maps `Δⁿ × A -> B`, in deterministic order.
pub fn hom_level(a: &Arc<SimplicialSet>, b: &Arc<SimplicialSet>, n: usize, budget: u64) -> Result<Vec<SimplicialMap>, ScomplexError> {
    if a.dim_bound() > b.dim_bound() {
        return Err(ScomplexError::DimBoundMismatch(a.dim_bound(), b.dim_bound()));
    }
    let (_, p) = simplex_times(n, a, b.dim_bound())?;
    enumerate_maps(&p.set, b, budget)
}

/// Levelwise data for `Δⁿ ⊗ (A -> B)` over each level `n`.
pub struct SquareLevel {
    pub delta: Arc<SimplicialSet>,
    pub over_a: Product,
    pub over_b: Product,
    /// `1 × i : Δⁿ × A -> Δⁿ × B`.
    pub one_times_i: SimplicialMap,
    /// Every commutative square `(u, v)` at this level.
    pub squares: Vec<(SimplicialMap, SimplicialMap)>,
}

/// Simplicial set whose `n`-simplices are the commutative squares from
/// `Δⁿ ⊗ i` to `f`.
pub struct SquareSpace {
    pub set: Arc<SimplicialSet>,
    pub levels: Vec<SquareLevel>,
    /// Normal form of each square of each level in `set`.
    pub decomposition: Vec<Vec<Simplex>>,
    /// For each nondegenerate cell, the square it is.
    pub cell_square: Vec<Vec<usize>>,
}

/// All commutative squares `(u : Δⁿ×A -> X, v : Δⁿ×B -> Y)` with
/// `f u = v (1 × i)`, in a fixed level.
pub fn squares_at_level(
    i: &SimplicialMap,
    f: &SimplicialMap,
    n: usize,
    budget: u64,
) -> Result<SquareLevel, ScomplexError> {
    let d = f.source().dim_bound();
    for x in [i.source(), i.target(), f.target()] {
        if x.dim_bound() != d {
            return Err(ScomplexError::DimBoundMismatch(x.dim_bound(), d));
        }
    }
    let (delta, over_a) = simplex_times(n, i.source(), d)?;
    let (_, over_b) = simplex_times(n, i.target(), d)?;
    let one_times_i = product_map(&SimplicialMap::identity(&delta), i, &over_a, &over_b)?;
    let mut squares = Vec::new();
    let mut inner = 0u64;
    let mut inner_err = None;
    let vs = MapSearch::new(&over_b.set, f.target(), budget);
    let outer = vs.run(|v| {
        let bottom = |k: usize, c: usize| v.apply(one_times_i.image_of_cell(k, c));
        let filter = |k: usize, c: usize, cand: &Simplex| f.apply(cand) == bottom(k, c);
        let mut us = MapSearch::new(&over_a.set, f.source(), budget.saturating_sub(inner));
        us.filter = Some(&filter);
        let found = us.run(|u| {
            squares.push((u, v.clone()));
            ControlFlow::Continue(())
        });
        match found {
            Ok(used) => {
                inner += used;
                ControlFlow::Continue(())
            }
            Err(e) => {
                inner_err = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = inner_err {
        return Err(e);
    }
    if outer + inner > budget {
        return Err(ScomplexError::BudgetExceeded { budget });
    }
    Ok(SquareLevel { delta, over_a, over_b, one_times_i, squares })
}

pub fn square_space(i: &SimplicialMap, f: &SimplicialMap, budget: u64) -> Result<SquareSpace, ScomplexError> {
    let d = f.source().dim_bound();
    let levels: Vec<SquareLevel> = (0..=d).map(|n| squares_at_level(i, f, n, budget)).collect::<Result<_, _>>()?;
    let index: Vec<HashMap<(Vec<Vec<Simplex>>, Vec<Vec<Simplex>>), usize>> = levels
        .iter()
        .map(|lvl| {
            lvl.squares
                .iter()
                .enumerate()
                .map(|(k, (u, v))| ((u.assignment().to_vec(), v.assignment().to_vec()), k))
                .collect()
        })
        .collect();
    // Precompose a square at level `from` with `θ × 1`.
    let pull = |theta: &Monotone, from: usize, k: usize| -> Result<usize, ScomplexError> {
        let to = theta.source_dim();
        let (src, tgt) = (&levels[to], &levels[from]);
        let ta = product_map(&operator_map(theta, &src.delta, &tgt.delta)?, &SimplicialMap::identity(i.source()), &src.over_a, &tgt.over_a)?;
        let tb = product_map(&operator_map(theta, &src.delta, &tgt.delta)?, &SimplicialMap::identity(i.target()), &src.over_b, &tgt.over_b)?;
        let (u, v) = &tgt.squares[k];
        let key = (u.after(&ta)?.assignment().to_vec(), v.after(&tb)?.assignment().to_vec());
        index[to].get(&key).copied().ok_or_else(|| ScomplexError::Invalid("square space is not closed".into()))
    };
    let sizes: Vec<usize> = levels.iter().map(|l| l.squares.len()).collect();
    let mut faces = vec![Vec::new(); d + 1];
    let mut degens = vec![Vec::new(); d];
    for n in 0..=d {
        for k in 0..sizes[n] {
            if n > 0 {
                faces[n].push((0..=n).map(|j| pull(&Monotone::coface(n, j), n, k)).collect::<Result<Vec<_>, _>>()?);
            } else {
                faces[n].push(Vec::new());
            }
            if n < d {
                degens[n].push((0..=n).map(|j| pull(&Monotone::codegeneracy(n, j), n, k)).collect::<Result<Vec<_>, _>>()?);
            }
        }
    }
    let width = sizes.iter().max().copied().unwrap_or(0).max(1).to_string().len();
    let built = Presented { dim_bound: d, sizes: sizes.clone(), faces, degens }.build(|n, k| format!("{n}.{k:0width$}"))?;
    let set = Arc::new(built.set);
    let mut cell_square: Vec<Vec<usize>> = (0..=d).map(|n| vec![0; set.cells(n).len()]).collect();
    for n in 0..=d {
        for (k, s) in built.decomposition[n].iter().enumerate() {
            if s.is_nondegenerate() {
                cell_square[n][s.cell()] = k;
            }
        }
    }
    Ok(SquareSpace { set, levels, decomposition: built.decomposition, cell_square })
}
