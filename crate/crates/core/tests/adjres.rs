use std::sync::Arc;

use homres::adjres::finvect::{FnMap, FreeForget, LinMap};
use homres::adjres::sset::{CylinderPath, IdentityAdjunction};
use homres::adjres::*;
use homres::scomplex::*;

const BUDGET: u64 = 1_000_000;

fn arc(x: SimplicialSet) -> Arc<SimplicialSet> {
    Arc::new(x)
}

fn assert_pass(rep: &CheckReport) {
    assert!(!rep.is_empty(), "nothing was checked");
    for f in rep.failures() {
        panic!("{} on {} failed: {:?}", f.name, f.object, f.witness);
    }
}

fn fn_map(source: usize, target: usize, values: &[usize]) -> FnMap {
    FnMap::new(source, target, values.to_vec()).unwrap()
}

fn lin(rows: &[&[u8]], cols: usize) -> LinMap {
    LinMap::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols)
}

fn strict_maps() -> (Vec<FnMap>, Vec<LinMap>) {
    let hs = vec![fn_map(2, 1, &[0, 0]), fn_map(1, 2, &[1]), fn_map(2, 2, &[1, 0]), fn_map(0, 2, &[])];
    let ks = vec![lin(&[&[1], &[1]], 1), lin(&[&[1, 1]], 2), lin(&[&[1, 1], &[0, 1]], 2)];
    (hs, ks)
}

fn sset_samples(d: usize) -> Vec<Arc<SimplicialSet>> {
    vec![arc(SimplicialSet::empty(d)), arc(point(d)), arc(boundary(1, d).unwrap()), arc(standard_simplex(1, d).unwrap())]
}

fn discrete(n: usize) -> Arc<SimplicialSet> {
    let names = (0..n).map(|i| format!("v{i}")).collect();
    arc(SimplicialSet::new(0, vec![names], vec![vec![Vec::new(); n]]).unwrap())
}

// Free/forget over F₂.

#[test]
fn free_forget_is_an_adjunction() {
    let adj = FreeForget::new();
    let (hs, ks) = strict_maps();
    assert_pass(&check_adjunction(&adj, &[0, 1, 2, 3], &[0, 1, 2, 3], &hs, &ks));
    assert_pass(&check_deformation(&adj, &[0, 1, 2], &[0, 1, 2]));
}

#[test]
fn strict_iota_and_pi_are_unit_and_counit() {
    let adj = FreeForget::new();
    for x in 0..4 {
        assert_eq!(iota(&adj, &x).unwrap(), adj.eta(&x).unwrap());
        assert_eq!(pi(&adj, &x).unwrap(), adj.eps(&x).unwrap());
    }
}

#[test]
fn strict_lemma_and_associativity() {
    let adj = FreeForget::new();
    let (hs, ks) = strict_maps();
    assert_pass(&check_lemma_identities(&adj, &[0, 1, 2, 3], &[0, 1, 2, 3]));
    assert_pass(&check_associativity(&adj, &[0, 1, 2], &[0, 1, 2]));
    assert_pass(&check_naturality(&adj, &hs, &ks));
}

#[test]
fn strict_derived_functors_are_trivial() {
    let adj = FreeForget::new();
    let (fqx, fq) = left_derived(&adj, &2).unwrap();
    assert_eq!((fqx, fq), (2, LinMap::identity(2)));
    let (gry, gr) = right_derived(&adj, &2).unwrap();
    assert_eq!(gry, 4);
    assert_eq!(gr.values, (0..4).collect::<Vec<_>>());
}

/// `|T^k X|` by iterating `n ↦ 2^n` on explicit bases.
fn tower(x: usize, n: usize) -> Vec<usize> {
    let mut out = vec![x];
    for _ in 0..n {
        out.push(1 << out.last().unwrap());
    }
    out
}

#[test]
fn strict_cobar_level_sizes() {
    let adj = FreeForget::new();
    let cobar = cobar_resolution(&adj, &2, 2).unwrap();
    assert_eq!(cobar.levels, vec![2, 4, 16]);
    assert_eq!(cobar.levels, tower(2, 2));
    let cobar = cobar_resolution(&adj, &1, 3).unwrap();
    assert_eq!(cobar.levels, tower(1, 3));
}

// The classical monad resolution of `GF`, written with bitmasks: an element
// of `(GF)^{k+1} X` is a subset of `(GF)^k X`.

fn classical_eta(n: usize) -> FnMap {
    fn_map(n, 1 << n, &(0..n).map(|i| 1 << i).collect::<Vec<_>>())
}

fn classical_gf(h: &FnMap) -> FnMap {
    let values = (0..1usize << h.source)
        .map(|m| (0..h.source).filter(|b| m >> b & 1 == 1).fold(0usize, |acc, b| acc ^ (1 << h.values[b])))
        .collect::<Vec<_>>();
    fn_map(1 << h.source, 1 << h.target, &values)
}

/// `Gε_{FZ} : GFGFZ -> GFZ`, a set of subsets summed to one subset.
fn classical_mult(z: usize) -> FnMap {
    let values = (0..1usize << (1usize << z))
        .map(|m| (0..1usize << z).filter(|b| m >> b & 1 == 1).fold(0usize, |acc, b| acc ^ b))
        .collect::<Vec<_>>();
    fn_map(1 << (1 << z), 1 << z, &values)
}

fn power(h: FnMap, j: usize) -> FnMap {
    (0..j).fold(h, |h, _| classical_gf(&h))
}

#[test]
fn strict_cobar_matches_the_classical_resolution() {
    let adj = FreeForget::new();
    for x in [0, 1, 2] {
        let n = 3;
        let cobar = cobar_resolution(&adj, &x, n).unwrap();
        let t = tower(x, n);
        let mut oracle = TruncatedDiagram::new("classical", Variance::Cosimplicial, true, t.clone());
        for k in 0..n {
            oracle.faces[k] = (0..=k).map(|j| power(classical_eta(t[k - j]), j)).collect();
        }
        for k in 2..=n {
            oracle.degeneracies[k] = (0..k - 1).map(|j| power(classical_mult(t[k - 2 - j]), j)).collect();
        }
        assert_eq!(cobar.discrepancy(adj.c(), &oracle), None);
        assert_pass(&oracle.check_identities(adj.c()));
        assert_pass(&cobar.check_identities(adj.c()));
    }
}

#[test]
fn strict_resolutions_satisfy_identities_at_level_three() {
    let adj = FreeForget::new();
    for x in [0, 1, 2] {
        assert_pass(&cobar_resolution(&adj, &x, 3).unwrap().check_identities(adj.c()));
        assert_pass(&split_forward(&adj, &x, 3).unwrap().check_identities(adj.d()));
    }
    for y in [0, 1, 2] {
        assert_pass(&bar_resolution(&adj, &y, 3).unwrap().check_identities(adj.d()));
    }
    for y in [0, 1] {
        assert_pass(&split_backward(&adj, &y, 3).unwrap().check_identities(adj.c()));
    }
    assert!(split_backward(&adj, &2, 3).is_err());
}

#[test]
fn strict_bar_matches_the_classical_resolution() {
    let adj = FreeForget::new();
    let bar = bar_resolution(&adj, &1, 3).unwrap();
    assert_eq!(bar.levels, vec![1, 2, 4, 16]);
    // Last face `(FG)^{k-1} ε` and first face `ε_{(FG)^{k-1}}` at level 2.
    let eps4 = adj.eps(&4).unwrap();
    assert_eq!(bar.faces[3][0], eps4);
    assert_eq!(bar.levels[2], 4);
    for k in 1..=3 {
        assert_eq!(bar.faces[k][0], adj.eps(&bar.levels[k - 1]).unwrap());
    }
}

#[test]
fn strict_extra_degeneracies_are_units() {
    let adj = FreeForget::new();
    let split = split_forward(&adj, &2, 2).unwrap();
    let (side, extra) = split.extra.clone().unwrap();
    assert_eq!(side, Splitting::Forward);
    assert_eq!(extra[0], adj.f_map(&adj.eta(&2).unwrap()).unwrap());
    let back = split_backward(&adj, &1, 2).unwrap();
    assert_eq!(back.extra.unwrap().1[0], adj.eta(&2).unwrap());
}

#[test]
fn strict_algebras() {
    let adj = FreeForget::new();
    for x in [0, 1, 2] {
        let (tx, h) = free_algebra(&adj, &x).unwrap();
        assert_pass(&homotopy_algebra_check(&adj, &tx, &h));
        // A genuine algebra: the underlying set of a space, summing subsets.
        assert_pass(&homotopy_algebra_check(&adj, &(1 << x), &classical_mult(x)));
    }
    // Corrupt one value of a free algebra's action.
    let (tx, mut h) = free_algebra(&adj, &1).unwrap();
    h.values[1] ^= 1;
    let rep = homotopy_algebra_check(&adj, &tx, &h);
    let bad = rep.failures();
    assert_eq!(bad[0].name, "Qh∘ι = 1");
    assert!(bad[0].witness.as_ref().unwrap().starts_with("element"));
    assert!(algebra_bar(&adj, &tx, &h, 2).is_err());
    // Tf is an algebra map between free algebras.
    let f = fn_map(2, 1, &[0, 0]);
    let (_, h2) = free_algebra(&adj, &2).unwrap();
    let (_, h1) = free_algebra(&adj, &1).unwrap();
    assert_pass(&check_algebra_map(&adj, &t_map(&adj, &f).unwrap(), &h2, &h1));
    assert!(!check_algebra_map(&adj, &fn_map(4, 2, &[1, 1, 1, 1]), &h2, &h1).all_pass());
}

#[test]
fn strict_algebra_bar() {
    let adj = FreeForget::new();
    for x in [0, 1] {
        let (tx, h) = free_algebra(&adj, &x).unwrap();
        assert_pass(&algebra_bar(&adj, &tx, &h, 2).unwrap().check_identities(adj.d()));
        assert_pass(&algebra_bar_q_image(&adj, &tx, &h, 2).unwrap().check_identities(adj.c()));
    }
    let bar = algebra_bar(&adj, &2, &classical_mult(1), 2).unwrap();
    assert_eq!(bar.levels, vec![2, 4, 16]);
    assert_pass(&bar.check_identities(adj.d()));
}

#[test]
fn strict_laxity_cells_are_identities() {
    let adj = FreeForget::new();
    for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let rep = check_homotopical_laxity(&adj, m, n, &1, &1);
        assert_pass(&rep);
        assert!(rep.checks.iter().any(|c| c.name == format!("c({m},{n}) = 1")));
    }
}

#[test]
fn strict_reports_serialize() {
    let adj = FreeForget::new();
    let cobar = cobar_resolution(&adj, &1, 2).unwrap();
    let v = cobar.to_json(adj.c(), true);
    assert_eq!(v["levels"][2]["set"], 4);
    assert_eq!(v["faces"][0][0]["values"], serde_json::json!([1]));
    assert_eq!(cobar.check_identities(adj.c()).to_json()["all_pass"], true);
}

// Identity adjunction on simplicial sets with small object argument deformations.

#[test]
fn sset_identity_iota_is_q_of_r_after_delta() {
    let adj = IdentityAdjunction::new(1, 8, BUDGET).unwrap();
    let x = arc(boundary(1, 1).unwrap());
    let qx = adj.q(&x).unwrap();
    let oracle = adj.q_map(&adj.r_unit(&qx).unwrap()).unwrap().after(&adj.delta(&x).unwrap()).unwrap();
    assert_eq!(iota(&adj, &x).unwrap(), oracle);
    let rx = adj.r(&x).unwrap();
    let p = adj.mu(&x).unwrap().after(&adj.r_map(&adj.q_counit(&rx).unwrap()).unwrap()).unwrap();
    assert_eq!(pi(&adj, &x).unwrap(), p);
}

#[test]
fn sset_identity_lemmas() {
    let adj = IdentityAdjunction::new(1, 8, BUDGET).unwrap();
    let xs = sset_samples(1);
    assert_pass(&check_lemma_identities(&adj, &xs, &xs));
    assert_pass(&check_associativity(&adj, &xs, &xs));
    assert_pass(&check_deformation(&adj, &xs, &xs));
    let c = SimplicialMap::to_point(&xs[3], &xs[1]).unwrap();
    let i = boundary_inclusion(1, 1).unwrap();
    assert_pass(&check_naturality(&adj, &[c.clone(), i.clone()], &[c, i]));
}

#[test]
fn sset_identity_lemmas_on_a_horn() {
    let adj = IdentityAdjunction::new(2, 8, BUDGET).unwrap();
    let horn = arc(horn(2, 1, 2).unwrap());
    assert_pass(&check_lemma_identities(&adj, &[horn.clone()], &[horn]));
}

#[test]
fn sset_identity_resolutions() {
    let adj = IdentityAdjunction::new(1, 8, BUDGET).unwrap();
    let x = arc(boundary(1, 1).unwrap());
    let cobar = cobar_resolution(&adj, &x, 2).unwrap();
    let rep = cobar.check_identities(adj.c());
    assert!(rep.checks.iter().any(|c| c.name == "d1d0 = d0d0 @ [-1]" && c.pass));
    assert_pass(&rep);
    assert_pass(&bar_resolution(&adj, &x, 2).unwrap().check_identities(adj.d()));
    assert_pass(&split_forward(&adj, &x, 2).unwrap().check_identities(adj.d()));
    assert_pass(&split_backward(&adj, &x, 2).unwrap().check_identities(adj.c()));
}

#[test]
fn sset_identity_algebras_and_laxity() {
    let adj = IdentityAdjunction::new(1, 8, BUDGET).unwrap();
    let x = arc(boundary(1, 1).unwrap());
    let (tx, h) = free_algebra(&adj, &x).unwrap();
    assert_pass(&homotopy_algebra_check(&adj, &tx, &h));
    assert_pass(&algebra_bar_q_image(&adj, &tx, &h, 1).unwrap().check_identities(adj.c()));
    for (m, n) in [(0, 0), (1, 1)] {
        assert_pass(&check_homotopical_laxity(&adj, m, n, &x, &x));
    }
}

#[test]
fn sset_left_derived_components() {
    let adj = IdentityAdjunction::new(1, 8, BUDGET).unwrap();
    let xs = sset_samples(1);
    for x in &xs {
        let (fqx, fq) = left_derived(&adj, x).unwrap();
        assert_eq!(&fqx, fq.source());
        assert_eq!(fq, adj.q_counit(x).unwrap());
    }
    // Naturality of F(q) along Δ¹ -> Δ⁰.
    let c = SimplicialMap::to_point(&xs[3], &xs[1]).unwrap();
    let lhs = c.after(&adj.q_counit(&xs[3]).unwrap()).unwrap();
    let rhs = adj.q_counit(&xs[1]).unwrap().after(&adj.q_map(&c).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

// Cylinder/path adjunction in dimension 0.

#[test]
fn cylinder_path_is_an_adjunction() {
    let adj = CylinderPath::new(8, BUDGET).unwrap();
    let xs = vec![discrete(0), discrete(1), discrete(2)];
    let h = SimplicialMap::to_point(&xs[2], &xs[1]).unwrap();
    assert_pass(&check_adjunction(&adj, &xs, &xs, &[h.clone()], &[h]));
    assert_eq!(adj.g(&xs[2]).unwrap().counts(), vec![4]);
    assert_eq!(adj.f(&xs[2]).unwrap().counts(), vec![4]);
}

#[test]
fn cylinder_path_lemmas() {
    let adj = CylinderPath::new(8, BUDGET).unwrap();
    let xs = vec![discrete(0), discrete(1), discrete(2)];
    assert_pass(&check_lemma_identities(&adj, &xs, &xs));
    assert_pass(&check_associativity(&adj, &xs[..2], &xs[..2]));
    let cobar = cobar_resolution(&adj, &xs[1], 2).unwrap();
    assert_eq!(cobar.levels.iter().map(|l| l.counts()[0]).collect::<Vec<_>>(), vec![1, 9, 361]);
    assert_pass(&cobar.check_identities(adj.c()));
}
