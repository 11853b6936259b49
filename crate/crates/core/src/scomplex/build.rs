//! Building presented simplicial sets from explicit levels.
//!
//! Colimits, products and mapping spaces are all computed on full levels
//! (every simplex, degenerate or not) and then compressed back to the
//! Eilenberg–Zilber presentation here.

use std::collections::HashMap;
use std::sync::Arc;

use super::op::Monotone;
use super::sset::{Simplex, SimplicialSet};
use super::ScomplexError;

/// A truncated simplicial set given by complete face and degeneracy tables.
pub(crate) struct Presented {
    pub dim_bound: usize,
    pub sizes: Vec<usize>,
    /// `faces[n][x][i]`, an element of level `n - 1`.
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][x][j]`, an element of level `n + 1` (for `n < dim_bound`).
    pub degens: Vec<Vec<Vec<usize>>>,
}

pub(crate) struct Built {
    pub set: SimplicialSet,
    /// Normal form of every element of every level.
    pub decomposition: Vec<Vec<Simplex>>,
}

fn codegeneracy_raw(n: usize, j: usize) -> Vec<u8> {
    Monotone::codegeneracy(n - 1, j).values().iter().map(|&v| v as u8).collect()
}

impl Presented {
    pub fn build(&self, mut name: impl FnMut(usize, usize) -> String) -> Result<Built, ScomplexError> {
        let d = self.dim_bound;
        let mut decomposition: Vec<Vec<Simplex>> = Vec::with_capacity(d + 1);
        let mut cells = Vec::with_capacity(d + 1);
        let mut faces = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut origin: Vec<Option<(usize, usize)>> = vec![None; self.sizes[n]];
            if n > 0 {
                for (z, js) in self.degens[n - 1].iter().enumerate() {
                    for (j, &y) in js.iter().enumerate() {
                        origin[y].get_or_insert((z, j));
                    }
                }
            }
            let mut named: Vec<(String, usize)> =
                (0..self.sizes[n]).filter(|&y| origin[y].is_none()).map(|y| (name(n, y), y)).collect();
            named.sort();
            let mut slot = vec![usize::MAX; self.sizes[n]];
            for (c, (_, y)) in named.iter().enumerate() {
                slot[*y] = c;
            }
            let level: Vec<Simplex> = (0..self.sizes[n])
                .map(|y| match origin[y] {
                    None => Simplex::cell_of(n, slot[y]),
                    Some((z, j)) => decomposition[n - 1][z].degenerate_by(&codegeneracy_raw(n, j)),
                })
                .collect();
            let level_faces: Vec<Vec<Simplex>> = named
                .iter()
                .map(|(_, y)| {
                    if n == 0 {
                        Vec::new()
                    } else {
                        self.faces[n][*y].iter().map(|&f| decomposition[n - 1][f].clone()).collect()
                    }
                })
                .collect();
            decomposition.push(level);
            cells.push(named.into_iter().map(|(s, _)| s).collect());
            faces.push(level_faces);
        }
        let set = SimplicialSet::new(d, cells, faces)?;
        Ok(Built { set, decomposition })
    }
}

/// Every simplex of a set, level by level, with a reverse index.
pub(crate) struct Levels {
    pub simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl Levels {
    pub fn of(x: &SimplicialSet, dim_bound: usize) -> Self {
        let simplices: Vec<Vec<Simplex>> = (0..=dim_bound).map(|n| x.simplices(n)).collect();
        let index = simplices
            .iter()
            .map(|lvl| lvl.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        Self { simplices, index }
    }

    pub fn idx(&self, s: &Simplex) -> usize {
        self.index[s.dim()][s]
    }

    pub fn presented(&self, x: &SimplicialSet) -> Presented {
        let d = self.simplices.len() - 1;
        let sizes = self.simplices.iter().map(Vec::len).collect();
        let faces = (0..=d)
            .map(|n| {
                self.simplices[n]
                    .iter()
                    .map(|s| if n == 0 { Vec::new() } else { (0..=n).map(|i| self.idx(&x.face(s, i))).collect() })
                    .collect()
            })
            .collect();
        let degens = (0..d)
            .map(|n| self.simplices[n].iter().map(|s| (0..=n).map(|j| self.idx(&x.degeneracy(s, j))).collect()).collect())
            .collect();
        Presented { dim_bound: d, sizes, faces, degens }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Quotient of `x` by the levelwise relation generated by `pairs`.
///
/// The relation must already be closed under simplicial operators (it is
/// whenever it is the image of all simplices of some set under two maps).
/// `name` receives the members of a nondegenerate class, sorted.
pub(crate) fn quotient(
    x: &Arc<SimplicialSet>,
    pairs: &[(Simplex, Simplex)],
    mut name: impl FnMut(usize, &[Simplex]) -> String,
) -> Result<(SimplicialSet, Vec<Vec<Simplex>>), ScomplexError> {
    let d = x.dim_bound();
    let levels = Levels::of(x, d);
    let full = levels.presented(x);
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    let mut members: Vec<Vec<Vec<Simplex>>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut uf = UnionFind((0..full.sizes[n]).collect());
        for (a, b) in pairs.iter().filter(|(a, _)| a.dim() == n) {
            uf.union(levels.idx(a), levels.idx(b));
        }
        let mut class_of_root = HashMap::new();
        let mut class = vec![0; full.sizes[n]];
        let mut mem: Vec<Vec<Simplex>> = Vec::new();
        for y in 0..full.sizes[n] {
            let root = uf.find(y);
            let next = class_of_root.len();
            let k = *class_of_root.entry(root).or_insert(next);
            if k == mem.len() {
                mem.push(Vec::new());
            }
            class[y] = k;
            mem[k].push(levels.simplices[n][y].clone());
        }
        for m in &mut mem {
            m.sort();
        }
        classes.push(class);
        members.push(mem);
    }
    let rep = |n: usize, k: usize| levels.idx(&members[n][k][0]);
    let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
    let faces = (0..=d)
        .map(|n| {
            (0..sizes[n])
                .map(|k| if n == 0 { Vec::new() } else { full.faces[n][rep(n, k)].iter().map(|&f| classes[n - 1][f]).collect() })
                .collect()
        })
        .collect();
    let degens = (0..d)
        .map(|n| (0..sizes[n]).map(|k| full.degens[n][rep(n, k)].iter().map(|&g| classes[n + 1][g]).collect()).collect())
        .collect();
    let presented = Presented { dim_bound: d, sizes, faces, degens };
    let built = presented.build(|n, k| {
        let nondeg: Vec<Simplex> = members[n][k].iter().filter(|s| s.is_nondegenerate()).cloned().collect();
        name(n, &nondeg)
    })?;
    let map = (0..=d)
        .map(|n| {
            (0..x.cells(n).len())
                .map(|c| built.decomposition[n][classes[n][levels.idx(&Simplex::cell_of(n, c))]].clone())
                .collect()
        })
        .collect();
    Ok((built.set, map))
}
