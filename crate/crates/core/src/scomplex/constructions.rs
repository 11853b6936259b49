//! Standard simplices, horns, boundaries and the finite (co)limits used by
//! the small object argument.

use std::collections::HashMap;
use std::sync::Arc;

use super::build::{quotient, Levels, Presented};
use super::sset::{Simplex, SimplicialMap, SimplicialSet};
use super::ScomplexError;

pub(crate) fn subset_name(vertices: &[usize], n: usize) -> String {
    let parts: Vec<String> = vertices.iter().map(usize::to_string).collect();
    parts.join(if n < 10 { "" } else { "," })
}

/// The downward-closed family of faces of `Δⁿ` accepted by `keep`.
fn simplex_part(n: usize, dim_bound: usize, keep: impl Fn(&[usize]) -> bool) -> Result<SimplicialSet, ScomplexError> {
    let mut levels: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim_bound + 1];
    for mask in 1u64..(1u64 << (n + 1)) {
        let verts: Vec<usize> = (0..=n).filter(|&v| mask >> v & 1 == 1).collect();
        let k = verts.len() - 1;
        if k <= dim_bound && keep(&verts) {
            levels[k].push(verts);
        }
    }
    for lvl in &mut levels {
        lvl.sort_by_key(|v| subset_name(v, n));
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = levels
        .iter()
        .map(|lvl| lvl.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect())
        .collect();
    let cells = levels.iter().map(|lvl| lvl.iter().map(|v| subset_name(v, n)).collect()).collect();
    let mut faces = Vec::with_capacity(dim_bound + 1);
    for (k, lvl) in levels.iter().enumerate() {
        let level_faces = lvl
            .iter()
            .map(|verts| {
                if k == 0 {
                    return Ok(Vec::new());
                }
                (0..=k)
                    .map(|i| {
                        let mut f = verts.clone();
                        f.remove(i);
                        index[k - 1]
                            .get(&f)
                            .map(|&c| Simplex::cell_of(k - 1, c))
                            .ok_or_else(|| ScomplexError::Invalid("face family is not downward closed".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        faces.push(level_faces);
    }
    SimplicialSet::new(dim_bound, cells, faces)
}

/// Name-preserving inclusion of a subcomplex.
pub fn inclusion(sub: &Arc<SimplicialSet>, whole: &Arc<SimplicialSet>) -> Result<SimplicialMap, ScomplexError> {
    let assignment = (0..=sub.dim_bound())
        .map(|n| {
            sub.cells(n)
                .iter()
                .map(|name| {
                    whole
                        .cell_index(n, name)
                        .map(|c| Simplex::cell_of(n, c))
                        .ok_or_else(|| ScomplexError::Invalid(format!("cell {name} missing from target")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialMap::new(sub.clone(), whole.clone(), assignment)
}

pub fn standard_simplex(n: usize, dim_bound: usize) -> Result<SimplicialSet, ScomplexError> {
    if n > dim_bound {
        return Err(ScomplexError::DimensionOutOfRange { n, dim_bound });
    }
    simplex_part(n, dim_bound, |_| true)
}

/// `∂Δⁿ`; for `n = 0` this is empty.
pub fn boundary(n: usize, dim_bound: usize) -> Result<SimplicialSet, ScomplexError> {
    if n > dim_bound {
        return Err(ScomplexError::DimensionOutOfRange { n, dim_bound });
    }
    simplex_part(n, dim_bound, |v| v.len() <= n)
}

/// `Λⁿ_k`: the boundary without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize, dim_bound: usize) -> Result<SimplicialSet, ScomplexError> {
    if n == 0 || k > n {
        return Err(ScomplexError::HornIndex { n, k });
    }
    if n > dim_bound {
        return Err(ScomplexError::DimensionOutOfRange { n, dim_bound });
    }
    simplex_part(n, dim_bound, |v| v.len() < n || (v.len() == n && v.contains(&k)))
}

pub fn boundary_inclusion(n: usize, dim_bound: usize) -> Result<SimplicialMap, ScomplexError> {
    let whole = Arc::new(standard_simplex(n, dim_bound)?);
    inclusion(&Arc::new(boundary(n, dim_bound)?), &whole)
}

pub fn horn_inclusion(n: usize, k: usize, dim_bound: usize) -> Result<SimplicialMap, ScomplexError> {
    let whole = Arc::new(standard_simplex(n, dim_bound)?);
    inclusion(&Arc::new(horn(n, k, dim_bound)?), &whole)
}

pub fn point(dim_bound: usize) -> SimplicialSet {
    standard_simplex(0, dim_bound).expect("point")
}

/// Same cells below `dim_bound`; cells above it are dropped.
pub fn rebound(x: &SimplicialSet, dim_bound: usize) -> SimplicialSet {
    let cells = (0..=dim_bound).map(|n| x.cells(n).to_vec()).collect();
    let faces = (0..=dim_bound)
        .map(|n| (0..x.cells(n).len()).map(|c| x.cell_faces(n, c).to_vec()).collect())
        .collect();
    SimplicialSet::new(dim_bound, cells, faces).expect("truncation of a valid set")
}

pub struct Coproduct {
    pub set: Arc<SimplicialSet>,
    pub injections: Vec<SimplicialMap>,
    /// For each cell of the sum, the summand and cell it comes from.
    pub origin: Vec<Vec<(usize, usize)>>,
}

/// Disjoint union with caller-chosen cell names.
pub fn coproduct_named(
    parts: &[Arc<SimplicialSet>],
    dim_bound: usize,
    name: impl Fn(usize, &str) -> String,
) -> Result<Coproduct, ScomplexError> {
    if let Some(p) = parts.iter().find(|p| p.dim_bound() != dim_bound) {
        return Err(ScomplexError::DimBoundMismatch(p.dim_bound(), dim_bound));
    }
    let mut cells = Vec::new();
    let mut origin = Vec::new();
    let mut slot: Vec<Vec<Vec<usize>>> = parts.iter().map(|p| vec![Vec::new(); p.dim_bound() + 1]).collect();
    for n in 0..=dim_bound {
        let mut named: Vec<(String, usize, usize)> = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            for (c, cell) in p.cells(n).iter().enumerate() {
                named.push((name(i, cell), i, c));
            }
            slot[i][n] = vec![0; p.cells(n).len()];
        }
        named.sort();
        for (idx, (_, i, c)) in named.iter().enumerate() {
            slot[*i][n][*c] = idx;
        }
        origin.push(named.iter().map(|&(_, i, c)| (i, c)).collect::<Vec<_>>());
        cells.push(named.into_iter().map(|(s, _, _)| s).collect::<Vec<_>>());
    }
    let relabel = |i: usize, s: &Simplex| Simplex::from_raw(s.epi_raw().to_vec(), slot[i][s.cell_dim()][s.cell()]);
    let faces = (0..=dim_bound)
        .map(|n| {
            origin[n]
                .iter()
                .map(|&(i, c)| parts[i].cell_faces(n, c).iter().map(|s| relabel(i, s)).collect())
                .collect()
        })
        .collect();
    let set = Arc::new(SimplicialSet::new(dim_bound, cells, faces)?);
    let injections = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let assignment = (0..=dim_bound)
                .map(|n| (0..p.cells(n).len()).map(|c| Simplex::cell_of(n, slot[i][n][c])).collect())
                .collect();
            SimplicialMap::new(p.clone(), set.clone(), assignment)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coproduct { set, injections, origin })
}

pub fn coproduct(parts: &[Arc<SimplicialSet>], dim_bound: usize) -> Result<Coproduct, ScomplexError> {
    coproduct_named(parts, dim_bound, |i, name| format!("{i}:{name}"))
}

pub struct Pushout {
    pub set: Arc<SimplicialSet>,
    pub from_b: SimplicialMap,
    pub from_c: SimplicialMap,
}

/// Pushout of `B ← A → C`. A nondegenerate class is named after its
/// smallest `C`-cell when it has one, otherwise after its smallest `B`-cell.
pub fn pushout_named(
    f: &SimplicialMap,
    g: &SimplicialMap,
    name_b: impl Fn(&str) -> String,
    name_c: impl Fn(&str) -> String,
) -> Result<Pushout, ScomplexError> {
    if f.source() != g.source() {
        return Err(ScomplexError::EndpointMismatch);
    }
    let (b, c) = (f.target(), g.target());
    if b.dim_bound() != c.dim_bound() {
        return Err(ScomplexError::DimBoundMismatch(b.dim_bound(), c.dim_bound()));
    }
    let d = b.dim_bound();
    let sum = coproduct_named(&[b.clone(), c.clone()], d, |i, name| format!("{i}:{name}"))?;
    let (ib, ic) = (&sum.injections[0], &sum.injections[1]);
    let a = f.source();
    let mut pairs = Vec::new();
    for n in 0..=a.dim_bound().min(d) {
        for s in a.simplices(n) {
            pairs.push((ib.apply(&f.apply(&s)), ic.apply(&g.apply(&s))));
        }
    }
    let (set, q) = quotient(&sum.set, &pairs, |n, members| {
        let origins: Vec<(usize, usize)> = members.iter().map(|s| sum.origin[n][s.cell()]).collect();
        let pick = |side: usize, src: &Arc<SimplicialSet>| {
            origins.iter().filter(|o| o.0 == side).map(|o| src.name(n, o.1).to_string()).min()
        };
        match pick(1, c) {
            Some(nm) => name_c(&nm),
            None => name_b(&pick(0, b).expect("nonempty class")),
        }
    })?;
    let set = Arc::new(set);
    let along = |inj: &SimplicialMap| -> Result<SimplicialMap, ScomplexError> {
        let assignment = inj
            .assignment()
            .iter()
            .map(|lvl| lvl.iter().map(|s| q[s.dim()][s.cell()].clone()).collect())
            .collect();
        SimplicialMap::new(inj.source().clone(), set.clone(), assignment)
    };
    Ok(Pushout { from_b: along(ib)?, from_c: along(ic)?, set })
}

pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout, ScomplexError> {
    pushout_named(f, g, |n| format!("b:{n}"), |n| format!("c:{n}"))
}

/// Coequalizer of `f, g : A ⇉ B`; surviving cells keep their smallest name.
pub fn coequalizer(f: &SimplicialMap, g: &SimplicialMap) -> Result<(Arc<SimplicialSet>, SimplicialMap), ScomplexError> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(ScomplexError::EndpointMismatch);
    }
    let b = f.target();
    let mut pairs = Vec::new();
    for n in 0..=f.source().dim_bound() {
        for s in f.source().simplices(n) {
            pairs.push((f.apply(&s), g.apply(&s)));
        }
    }
    let (set, q) = quotient(b, &pairs, |n, members| b.name(n, members[0].cell()).to_string())?;
    let set = Arc::new(set);
    let map = SimplicialMap::new(b.clone(), set.clone(), q)?;
    Ok((set, map))
}

pub struct Product {
    pub set: Arc<SimplicialSet>,
    pub pi1: SimplicialMap,
    pub pi2: SimplicialMap,
    pairs: HashMap<(Simplex, Simplex), Simplex>,
}

impl Product {
    /// The simplex `(a, b)` of the product.
    pub fn pair(&self, a: &Simplex, b: &Simplex) -> Simplex {
        self.pairs[&(a.clone(), b.clone())].clone()
    }

    /// Components of the nondegenerate cell `c` of dimension `n`.
    pub fn components(&self, n: usize, c: usize) -> (&Simplex, &Simplex) {
        (self.pi1.image_of_cell(n, c), self.pi2.image_of_cell(n, c))
    }
}

/// Cartesian product, truncated at the common bound.
pub fn product(a: &Arc<SimplicialSet>, b: &Arc<SimplicialSet>) -> Result<Product, ScomplexError> {
    if a.dim_bound() != b.dim_bound() {
        return Err(ScomplexError::DimBoundMismatch(a.dim_bound(), b.dim_bound()));
    }
    let d = a.dim_bound();
    let (la, lb) = (Levels::of(a, d), Levels::of(b, d));
    let size = |n: usize| la.simplices[n].len() * lb.simplices[n].len();
    let split = |n: usize, y: usize| (y / lb.simplices[n].len(), y % lb.simplices[n].len());
    let join = |sa: &Simplex, sb: &Simplex| la.idx(sa) * lb.simplices[sa.dim()].len() + lb.idx(sb);
    let elem = |n: usize, y: usize| {
        let (ia, ib) = split(n, y);
        (&la.simplices[n][ia], &lb.simplices[n][ib])
    };
    let sizes: Vec<usize> = (0..=d).map(size).collect();
    let faces = (0..=d)
        .map(|n| {
            (0..sizes[n])
                .map(|y| {
                    let (sa, sb) = elem(n, y);
                    if n == 0 { Vec::new() } else { (0..=n).map(|i| join(&a.face(sa, i), &b.face(sb, i))).collect() }
                })
                .collect()
        })
        .collect();
    let degens = (0..d)
        .map(|n| {
            (0..sizes[n])
                .map(|y| {
                    let (sa, sb) = elem(n, y);
                    (0..=n).map(|j| join(&a.degeneracy(sa, j), &b.degeneracy(sb, j))).collect()
                })
                .collect()
        })
        .collect();
    let presented = Presented { dim_bound: d, sizes: sizes.clone(), faces, degens };
    let built = presented.build(|n, y| {
        let (sa, sb) = elem(n, y);
        format!("({}|{})", a.simplex_label(sa), b.simplex_label(sb))
    })?;
    let set = Arc::new(built.set);
    let mut pi1 = vec![Vec::new(); d + 1];
    let mut pi2 = vec![Vec::new(); d + 1];
    let mut pairs = HashMap::new();
    for n in 0..=d {
        pi1[n] = vec![Simplex::cell_of(0, 0); set.cells(n).len()];
        pi2[n] = pi1[n].clone();
        for y in 0..sizes[n] {
            let s = &built.decomposition[n][y];
            let (sa, sb) = elem(n, y);
            if s.is_nondegenerate() {
                pi1[n][s.cell()] = sa.clone();
                pi2[n][s.cell()] = sb.clone();
            }
            pairs.insert((sa.clone(), sb.clone()), s.clone());
        }
    }
    Ok(Product {
        pi1: SimplicialMap::new(set.clone(), a.clone(), pi1)?,
        pi2: SimplicialMap::new(set.clone(), b.clone(), pi2)?,
        set,
        pairs,
    })
}

/// `f × g` between chosen products.
pub fn product_map(f: &SimplicialMap, g: &SimplicialMap, src: &Product, tgt: &Product) -> Result<SimplicialMap, ScomplexError> {
    let d = src.set.dim_bound();
    let assignment = (0..=d)
        .map(|n| {
            (0..src.set.cells(n).len())
                .map(|c| {
                    let (sa, sb) = src.components(n, c);
                    tgt.pair(&f.apply(sa), &g.apply(sb))
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(src.set.clone(), tgt.set.clone(), assignment)
}
