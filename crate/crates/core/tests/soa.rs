use std::collections::HashSet;
use std::sync::Arc;

use homres::scomplex::*;
use homres::soa::*;
use proptest::prelude::*;

const BUDGET: u64 = DEFAULT_BUDGET;

fn arc(x: SimplicialSet) -> Arc<SimplicialSet> {
    Arc::new(x)
}

fn to_point(x: &Arc<SimplicialSet>) -> SimplicialMap {
    SimplicialMap::to_point(x, &arc(point(x.dim_bound()))).unwrap()
}

fn from_empty(x: &Arc<SimplicialSet>) -> SimplicialMap {
    SimplicialMap::from_empty(&arc(SimplicialSet::empty(x.dim_bound())), x).unwrap()
}

fn single(map: SimplicialMap, id: &str) -> Arc<GeneratorSet> {
    let d = map.source().dim_bound();
    GeneratorSet::custom(vec![Generator { id: id.into(), map }], d).unwrap().shared()
}

#[test]
fn generators_must_be_monomorphisms() {
    let d1 = arc(standard_simplex(1, 1).unwrap());
    let collapse = to_point(&d1);
    let err = GeneratorSet::custom(vec![Generator { id: "c".into(), map: collapse }], 1).unwrap_err();
    assert_eq!(err, SoaError::NotMono("c".into()));
}

#[test]
fn step_one_point_filling() {
    let gens = single(boundary_inclusion(0, 1).unwrap(), "b0");
    let f = from_empty(&arc(point(1)));
    let s = step_one(gens, &f, BUDGET).unwrap();
    assert_eq!(s.square_counts, vec![1]);
    assert_eq!(s.object.counts(), vec![1, 0]);
    assert!(s.right.is_isomorphism());
}

#[test]
fn step_one_over_an_isomorphism() {
    let x = arc(standard_simplex(1, 1).unwrap());
    let f = SimplicialMap::identity(&x);
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let s = step_one(gens.clone(), &f, BUDGET).unwrap();
    let squares = s.square_counts[0];
    assert_eq!(s.object.total_cells(), x.total_cells() + squares);
    // Every square against f now has a chosen filler in E1.
    for (g, gen) in gens.generators().iter().enumerate() {
        for (u, v) in self::squares(&gen.map, &f) {
            let w = s.chosen_lift(g, &s.left.after(&u).unwrap(), &v).unwrap().expect("filled at stage one");
            assert_eq!(s.right.after(&w).unwrap(), v);
        }
    }

    let none = GeneratorSet::custom(vec![], 1).unwrap().shared();
    let s = step_one(none, &f, BUDGET).unwrap();
    assert_eq!(*s.object, *x);
    assert!(s.left.is_identity());
    assert!(s.converged());
}

#[test]
fn step_one_inner_horn_on_a_point() {
    let gens = single(horn_inclusion(2, 1, 2).unwrap(), "h21");
    let pt = arc(point(2));
    let s = step_one(gens, &SimplicialMap::identity(&pt), BUDGET).unwrap();
    assert_eq!(s.square_counts, vec![1]);
    let h = horn_inclusion(2, 1, 2).unwrap();
    let oracle = pushout(&h, &to_point(h.source())).unwrap();
    assert_eq!(s.object.counts(), oracle.set.counts());
    assert_eq!(s.object.counts(), vec![1, 1, 1]);
}

#[test]
fn cofibrant_point_stages() {
    // Hand enumeration, boundaries of dimension ≤ 1 over ∅ -> Δ⁰:
    // stage 1 fills the vertex sphere; stage 2 sees it again (already filled)
    // and fills the one new 1-sphere (the vertex twice); stage 3 adds nothing.
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let mut s = garner_iterate(gens, &from_empty(&arc(point(1))), 8, BUDGET).unwrap();
    assert!(s.converged());
    assert_eq!(s.square_counts, vec![1, 2, 2]);
    assert_eq!(s.attached_counts, vec![1, 1, 0]);
    assert_eq!(s.stage, 3);
    assert_eq!(s.object.counts(), vec![1, 1]);

    let before = s.object.total_cells();
    s.resume(20, BUDGET).unwrap();
    assert_eq!(s.object.total_cells(), before);

    // Truncated at dimension 0 the same run produces the point at stage 2.
    let gens0 = GeneratorSet::boundaries(1, 0).unwrap().shared();
    let s0 = garner_iterate(gens0, &from_empty(&arc(point(0))), 8, BUDGET).unwrap();
    assert!(s0.converged());
    assert_eq!(s0.stage, 2);
    assert_eq!(s0.object.counts(), vec![1]);
    assert!(s0.right.is_isomorphism());
}

#[test]
fn dedup_against_the_registry() {
    let gens = single(horn_inclusion(2, 1, 2).unwrap(), "h21");
    let x = arc(horn(2, 1, 2).unwrap());
    let s = garner_iterate(gens, &to_point(&x), 2, BUDGET).unwrap();
    assert_eq!(s.status, Status::StageLimit);
    assert!(s.square_counts[1] > s.square_counts[0]);
    let first: HashSet<&String> = s.cells.iter().filter(|c| c.stage == 1).map(|c| &c.key).collect();
    assert!(s.cells.iter().filter(|c| c.stage == 2).all(|c| !first.contains(&c.key)));
    assert_eq!(s.attached_counts[1], s.square_counts[1] - s.square_counts[0]);
}

#[test]
fn horn_replacement_of_a_simplex() {
    let gens = single(horn_inclusion(2, 1, 2).unwrap(), "h21");
    let x = arc(standard_simplex(2, 2).unwrap());
    let s = garner_iterate(gens.clone(), &to_point(&x), 2, BUDGET).unwrap();
    // Inner horn filling never closes up: each filler adds a new long edge.
    assert_eq!(s.status, Status::StageLimit);
    assert!(s.verify_provenance().unwrap().is_empty());
    // Squares missing a chosen filler are exactly those touching the
    // newest stage.
    let report = s.verify_chosen_lifts(BUDGET).unwrap();
    assert!(report.lifted > 0);
    let frontier = format!("~{}.", s.stage);
    let g = &gens.generators()[0].map;
    let sq = homres::soa::FactorizationState::key;
    let mut unfilled = 0;
    for (u, v) in squares(g, &s.right) {
        if s.registered(&sq("h21", &u, &v)).is_none() {
            unfilled += 1;
            assert!(u.assignment().iter().flatten().any(|t| s.object.name(t.cell_dim(), t.cell()).starts_with(&frontier)));
        }
    }
    assert_eq!(unfilled, report.failures.len());
}

fn squares(i: &SimplicialMap, f: &SimplicialMap) -> Vec<(SimplicialMap, SimplicialMap)> {
    let mut out = Vec::new();
    for v in enumerate_maps(i.target(), f.target(), BUDGET).unwrap() {
        for u in enumerate_maps(i.source(), f.source(), BUDGET).unwrap() {
            if f.after(&u).unwrap() == v.after(i).unwrap() {
                out.push((u, v.clone()));
            }
        }
    }
    out
}

#[test]
fn outer_horns_on_a_point_diverge() {
    let gens = GeneratorSet::horns(1, 1, false).unwrap().shared();
    let x = arc(point(1));
    let s = garner_iterate(gens, &to_point(&x), 3, BUDGET).unwrap();
    // Both 1-horns are a single vertex; each filler brings an edge *and* a
    // new vertex, which creates fresh squares at the next stage.
    assert_eq!(s.attached_counts[0], 2);
    assert_eq!(s.cells[0].new_cells.len(), 2);
    assert!(s.attached_counts[1] > 0);
    assert_eq!(s.status, Status::StageLimit);
}

#[test]
fn cofibrant_replacements() {
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let q = Replacer::new(gens.clone(), Side::Cofibrant, 8, BUDGET);
    let empty = arc(SimplicialSet::empty(1));
    assert!(q.object(&empty).unwrap().is_empty());

    let q0 = Replacer::new(GeneratorSet::boundaries(0, 0).unwrap().shared(), Side::Cofibrant, 8, BUDGET);
    let pt0 = arc(point(0));
    assert_eq!(q0.object(&pt0).unwrap().counts(), vec![1]);
    assert!(q0.structure_map(&pt0).unwrap().is_isomorphism());

    let x = arc(boundary(1, 1).unwrap());
    let rep = q.replace(&x).unwrap();
    assert!(rep.state.converged());
    let report = exhaustive_lift_check(&gens, rep.structure_map(), BUDGET).unwrap();
    assert!(report.squares > 0);
    assert!(report.all_lift());
    assert!(rep.state.verify_chosen_lifts(BUDGET).unwrap().all_lift());
}

fn samples() -> Vec<Arc<SimplicialSet>> {
    vec![arc(point(1)), arc(boundary(1, 1).unwrap()), arc(standard_simplex(1, 1).unwrap())]
}

#[test]
fn monad_laws() {
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let r = Replacer::new(gens.clone(), Side::Fibrant, 8, BUDGET);
    for x in samples() {
        let rx = r.object(&x).unwrap();
        let mu = r.mu(&x).unwrap();
        let r_rx = r.structure_map(&rx).unwrap();
        let big_r_r = r.map(&r.structure_map(&x).unwrap()).unwrap();
        assert!(mu.after(&r_rx).unwrap().is_identity());
        assert!(mu.after(&big_r_r).unwrap().is_identity());
        let mu_r = r.mu(&rx).unwrap();
        let r_mu = r.map(&mu).unwrap();
        assert_eq!(mu.after(&mu_r).unwrap(), mu.after(&r_mu).unwrap());
        // r is a levelwise injection and RX lifts against every generator.
        assert!(r.structure_map(&x).unwrap().is_monomorphism());
        assert!(exhaustive_lift_check(&gens, &to_point(&rx), BUDGET).unwrap().all_lift());
    }
}

#[test]
fn comonad_laws() {
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let q = Replacer::new(gens.clone(), Side::Cofibrant, 8, BUDGET);
    for x in samples() {
        let qx = q.object(&x).unwrap();
        let delta = q.delta(&x).unwrap();
        let q_qx = q.structure_map(&qx).unwrap();
        let big_q_q = q.map(&q.structure_map(&x).unwrap()).unwrap();
        assert!(q_qx.after(&delta).unwrap().is_identity());
        assert!(big_q_q.after(&delta).unwrap().is_identity());
        let delta_q = q.delta(&qx).unwrap();
        let q_delta = q.map(&delta).unwrap();
        assert_eq!(delta_q.after(&delta).unwrap(), q_delta.after(&delta).unwrap());
        assert!(exhaustive_lift_check(&gens, &q.structure_map(&x).unwrap(), BUDGET).unwrap().all_lift());
    }
}

#[test]
fn functoriality_of_replacements() {
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let r = Replacer::new(gens, Side::Fibrant, 8, BUDGET);
    let d1 = arc(standard_simplex(1, 1).unwrap());
    let i = boundary_inclusion(1, 1).unwrap();
    let pt = arc(point(1));
    let c = to_point(&d1);
    assert!(r.map(&SimplicialMap::identity(&d1)).unwrap().is_identity());
    assert_eq!(r.map(&c.after(&i).unwrap()).unwrap(), r.map(&c).unwrap().after(&r.map(&i).unwrap()).unwrap());
    // Naturality of r.
    assert_eq!(r.map(&c).unwrap().after(&r.structure_map(&d1).unwrap()).unwrap(), r.structure_map(&pt).unwrap().after(&c).unwrap());
}

#[test]
fn horn_monad_is_not_certified() {
    let gens = single(horn_inclusion(2, 1, 2).unwrap(), "h21");
    let r = Replacer::new(gens, Side::Fibrant, 3, BUDGET);
    assert!(matches!(r.mu(&arc(point(2))), Err(SoaError::NotConverged { .. })));
}

#[test]
fn budget_exhaustion_is_reported() {
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let x = arc(standard_simplex(1, 1).unwrap());
    let s = garner_iterate(gens, &to_point(&x), 8, 3).unwrap();
    assert_eq!(s.status, Status::BudgetExceeded);
    assert!(!s.converged());
}

#[test]
fn enriched_step_one_examples() {
    let pt = arc(point(1));
    let gens = single(boundary_inclusion(0, 1).unwrap(), "b0");
    let f = SimplicialMap::identity(&pt);
    let e = enriched_step_one(&gens, &f, BUDGET).unwrap();
    assert_eq!(e.square_spaces[0].counts(), vec![1, 0]);
    assert_eq!(e.object.counts(), vec![2, 0]);
    assert!(e.right.after(&e.left).unwrap().is_identity());
    assert_eq!(e.right.assignment()[0], vec![Simplex::cell_of(0, 0); 2]);

    // A discrete square space gives back the ordinary step one.
    let all = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let g = from_empty(&arc(boundary(1, 1).unwrap()));
    let plain = step_one(all.clone(), &g, BUDGET).unwrap();
    let enriched = enriched_step_one(&all, &g, BUDGET).unwrap();
    assert!(enriched.square_spaces.iter().all(|k| k.counts()[1..].iter().all(|&c| c == 0)));
    assert_eq!(enriched.object.counts(), plain.object.counts());

    let none = GeneratorSet::custom(vec![], 1).unwrap();
    let e = enriched_step_one(&none, &f, BUDGET).unwrap();
    assert!(e.left.is_identity());
}

#[test]
fn state_serializes() {
    let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
    let s = garner_iterate(gens, &from_empty(&arc(point(1))), 8, BUDGET).unwrap();
    let v = s.to_json();
    assert_eq!(v["converged"], serde_json::json!(true));
    assert_eq!(v["provenance"].as_array().unwrap().len(), 2);
    assert_eq!(v["registry"].as_array().unwrap().len(), 2);
}

fn small_object() -> impl Strategy<Value = Arc<SimplicialSet>> {
    prop_oneof![
        Just(arc(point(1))),
        Just(arc(boundary(1, 1).unwrap())),
        Just(arc(standard_simplex(1, 1).unwrap())),
        Just(arc(horn(1, 0, 1).unwrap())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn factorization_invariants(x in small_object(), fibrant in any::<bool>(), stages in 0usize..4) {
        let gens = GeneratorSet::boundaries(1, 1).unwrap().shared();
        let f = if fibrant { to_point(&x) } else { from_empty(&x) };
        let s = garner_iterate(gens, &f, stages, BUDGET).unwrap();
        prop_assert_eq!(s.right.after(&s.left).unwrap(), f.clone());
        prop_assert!(s.left.is_monomorphism());
        let keys: HashSet<&String> = s.cells.iter().map(|c| &c.key).collect();
        prop_assert_eq!(keys.len(), s.cells.len());
        prop_assert!(s.verify_provenance().unwrap().is_empty());
        if stages == 0 {
            prop_assert_eq!(&s.object, f.source());
        }
    }
}
