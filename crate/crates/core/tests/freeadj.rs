mod common;

use std::collections::BTreeMap;

use common::Op;
use homres::adjres::finvect::{FnMap, FreeForget};
use homres::freeadj::*;
use proptest::prelude::*;

fn om(n: usize, m: usize, v: &[usize]) -> OrdinalMap {
    OrdinalMap::new(n, m, v.to_vec()).unwrap()
}

fn cls(text: &str) -> Classified {
    classify_text(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn eq(a: &str, b: &str) -> bool {
    equal_2cells(&parse_word(a).unwrap(), &parse_word(b).unwrap()).unwrap()
}

#[test]
fn ordinal_sum_examples() {
    let a = om(2, 1, &[0, 0]);
    let b = OrdinalMap::identity(1);
    let s = ordinal_sum(&a, &b);
    assert_eq!((s.source_size, s.target_size, s.values.clone()), (3, 2, vec![0, 0, 1]));
    let empty = OrdinalMap::identity(0);
    assert_eq!(ordinal_sum(&a, &empty), a);
    assert_eq!(ordinal_sum(&empty, &a), a);
    let small: Vec<OrdinalMap> = (0..=2).flat_map(|n| (0..=2).flat_map(move |m| all_ordinal_maps(n, m))).collect();
    for x in &small {
        for y in &small {
            for z in &small {
                assert_eq!(ordinal_sum(&ordinal_sum(x, y), z), ordinal_sum(x, &ordinal_sum(y, z)));
            }
        }
    }
}

#[test]
fn ordinal_counts_and_flags() {
    // Monotone maps n -> m number C(n+m-1, n).
    assert_eq!(all_ordinal_maps(2, 3).len(), 6);
    assert_eq!(all_ordinal_maps(3, 2).len(), 4);
    assert_eq!(all_ordinal_maps(0, 0).len(), 1);
    assert!(all_ordinal_maps(1, 0).is_empty());
    let top: Vec<_> = all_ordinal_maps(2, 3).into_iter().filter(|f| f.preserves_top()).collect();
    assert_eq!(top.len(), 3);
    assert!(OrdinalMap::new(2, 2, vec![1, 0]).is_none());
    assert_eq!(om(2, 3, &[0, 2]).to_string(), "[2]->[3]: (0,2)");
    // Gap duality is a contravariant bijection.
    let d = om(3, 3, &[0, 0, 2]).gap_dual().unwrap();
    assert_eq!(d, om(2, 2, &[1, 1]));
    for f in all_ordinal_maps(3, 4).into_iter().filter(|f| f.preserves_bottom() && f.preserves_top()) {
        for g in all_ordinal_maps(4, 3).into_iter().filter(|f| f.preserves_bottom() && f.preserves_top()) {
            let gf = g.after(&f).unwrap();
            assert_eq!(gf.gap_dual().unwrap(), f.gap_dual().unwrap().after(&g.gap_dual().unwrap()).unwrap());
        }
    }
}

#[test]
fn parse_examples() {
    let w = parse_word("eps F ∘ F eta").unwrap();
    assert_eq!(w.source().to_string(), "F");
    assert_eq!(w.target().to_string(), "F");
    let w = parse_word("G eps ∘ eta G").unwrap();
    assert_eq!((w.source().to_string(), w.target().to_string()), ("G".into(), "G".into()));
    match parse_word("eta ∘ eps") {
        Err(FreeAdjError::IllTyped { pos, .. }) => assert_eq!(pos, 1),
        other => panic!("expected a type error, got {other:?}"),
    }
    let w = parse_word("(G F) eta ∘ G F").unwrap();
    assert_eq!((w.source().to_string(), w.target().to_string()), ("G F".into(), "G F G F".into()));
    let w = parse_word("eta ∘ 1").unwrap();
    assert_eq!((w.source().to_string(), w.target().to_string()), ("1_C".into(), "G F".into()));
    let w = parse_word("eps ∘ 1 F G").unwrap();
    assert_eq!(w.source().dom, Obj::D);
}

#[test]
fn parse_errors_are_located() {
    let cases = [("(F", 1), ("F )", 3), ("F ∘", 4), ("F foo", 3), ("F # G", 3), ("F F", 1), ("", 1)];
    for (text, col) in cases {
        let err = parse_word(text).unwrap_err();
        assert_eq!(err.position(), Some(col), "{text}: {err}");
    }
    assert!(matches!(parse_word("F G ∘ G F"), Err(FreeAdjError::IllTyped { .. })));
    assert!(matches!(parse_word("1_D eta"), Err(FreeAdjError::IllTyped { .. })));
}

#[test]
fn classify_examples() {
    let tri = cls("eps F ∘ F eta");
    assert_eq!(tri.tag(), HomTag::DeltaMinusInfinity);
    assert_eq!(tri.normal_form(), OrdinalMap::identity(1));
    assert_eq!(tri, cls("F"));
    assert_eq!(cls("G eps ∘ eta G"), cls("G"));
    assert!(eq("G F eta ∘ eta", "eta G F ∘ eta"));
    assert!(!eq("eta G F", "G F eta"));
    let (a, b) = (cls("eta G F"), cls("G F eta"));
    assert_eq!(a.tag(), HomTag::Delta);
    assert_eq!((a.normal_form(), b.normal_form()), (om(1, 2, &[1]), om(1, 2, &[0])));
    assert!(a.normal_form().is_injective() && b.normal_form().is_injective());
    assert!(matches!(
        equal_2cells(&parse_word("F").unwrap(), &parse_word("G").unwrap()),
        Err(FreeAdjError::BoundaryMismatch(_))
    ));
}

#[test]
fn counit_side_is_opposite() {
    let c = cls("eps");
    assert_eq!(c.tag(), HomTag::DeltaOp);
    assert_eq!(c.normal_form(), OrdinalMap::new(0, 1, vec![]).unwrap());
    // The two counits FGFG => FG are the two cofaces of the opposite side.
    let (a, b) = (cls("eps F G"), cls("F G eps"));
    assert_ne!(a, b);
    assert_eq!(a.normal_form(), om(1, 2, &[1]));
    assert_eq!(b.normal_form(), om(1, 2, &[0]));
    // FGFGFG => FG: merging the outer pairs versus the inner ones.
    let (outer, inner) = (cls("F G eps ∘ eps F G F G"), cls("F G eps ∘ F G F G eps"));
    assert_eq!(outer.regions, om(4, 2, &[0, 0, 1, 1]));
    assert_eq!(inner.regions, om(4, 2, &[0, 1, 1, 1]));
    assert_eq!((outer.normal_form(), inner.normal_form()), (om(1, 3, &[1]), om(1, 3, &[0])));
    assert_eq!(inner, cls("F G eps ∘ F G eps F G"));
    assert_eq!(cls("G eps ∘ G F G eps").tag(), HomTag::DeltaInfinity);
}

/// Well-typed words up to `max_atoms`, with their classification and oracle class.
fn agreement(max_atoms: usize, max_ops: usize, max_letters: usize) -> (usize, Vec<String>) {
    let words = common::enumerate(max_atoms);
    let classes = common::partition(&words, max_ops, max_letters);
    let mut groups: BTreeMap<(Path, Vec<Letter>), Vec<usize>> = BTreeMap::new();
    let mut normal = Vec::new();
    let mut problems = Vec::new();
    for (i, (src, ops)) in words.iter().enumerate() {
        let text = common::to_text(src, ops);
        let w = parse_word(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let tgt = common::target(src, ops).unwrap();
        if w.source() != src || w.target().letters != tgt {
            problems.push(format!("{text}: boundary {} => {}", w.source(), w.target()));
        }
        normal.push(classify(&w));
        groups.entry((src.clone(), tgt)).or_default().push(i);
    }
    for members in groups.values() {
        for &i in members {
            for &j in members {
                if (normal[i] == normal[j]) != (classes[i] == classes[j]) {
                    problems.push(format!(
                        "{} vs {}: normal forms {}, oracle {}",
                        common::to_text(&words[i].0, &words[i].1),
                        common::to_text(&words[j].0, &words[j].1),
                        normal[i] == normal[j],
                        classes[i] == classes[j]
                    ));
                }
            }
        }
    }
    (words.len(), problems)
}

#[test]
fn decision_procedure_agrees_with_oracle_up_to_four_atoms() {
    let (n, problems) = agreement(4, 4, 8);
    assert!(n >= 30, "only {n} words");
    assert!(problems.is_empty(), "{problems:#?}");
}

#[test]
fn decision_procedure_agrees_with_oracle_up_to_six_atoms() {
    let (_, problems) = agreement(6, 5, 8);
    assert!(problems.is_empty(), "{problems:#?}");
}

#[test]
fn every_ordinal_map_is_realized() {
    for (dom, cod) in [(Obj::C, Obj::C), (Obj::C, Obj::D), (Obj::D, Obj::C), (Obj::D, Obj::D)] {
        let tag = HomTag::of(dom, cod);
        for n in 0..=3 {
            for m in 0..=3 {
                for nf in all_ordinal_maps(n, m) {
                    let Some(regions) = regions_from_normal_form(tag, &nf) else { continue };
                    let src = standard_path(dom, cod, regions.source_size).unwrap();
                    let text = canonical_word(&src, &regions).unwrap();
                    let c = cls(&text);
                    assert_eq!(c.source, src, "{text}");
                    assert_eq!(c.target, standard_path(dom, cod, regions.target_size).unwrap(), "{text}");
                    assert_eq!((c.tag(), c.normal_form()), (tag, nf.clone()), "{text}");
                }
            }
        }
    }
    // Bottom/top constraints exclude exactly the maps that move an end.
    assert!(regions_from_normal_form(HomTag::DeltaMinusInfinity, &om(1, 2, &[1])).is_none());
    assert!(regions_from_normal_form(HomTag::DeltaInfinity, &om(1, 2, &[0])).is_none());
}

fn word_strategy() -> impl Strategy<Value = (Path, Vec<Op>)> {
    let sources = common::paths(3);
    (0..sources.len(), proptest::collection::vec((any::<bool>(), 0usize..8), 0..5)).prop_filter_map(
        "valid layers",
        move |(s, raw)| {
            let src = sources[s].clone();
            let mut ops = Vec::new();
            let mut w = src.letters.clone();
            for (eta, at) in raw {
                let op = if eta { Op::Eta(at) } else { Op::Eps(at) };
                if let Some(next) = common::apply(&w, src.cod, op) {
                    w = next;
                    ops.push(op);
                }
            }
            Some((src, ops))
        },
    )
}

proptest! {
    #[test]
    fn normal_form_is_a_congruence_invariant((src, ops) in word_strategy()) {
        let base = cls(&common::to_text(&src, &ops));
        for other in common::closure(&src, &ops, ops.len() + 2, 8).into_iter().take(40) {
            prop_assert_eq!(&cls(&common::to_text(&src, &other)), &base);
        }
    }

    #[test]
    fn whiskering_and_composition_are_structural((src, ops) in word_strategy(), left in any::<bool>()) {
        let text = common::to_text(&src, &ops);
        let c = cls(&text);
        let l = if src.cod == Obj::C { "F" } else { "G" };
        let whiskered = cls(&format!("{l} ({text})"));
        let expect = if src.cod == Obj::D { glued_sum(&OrdinalMap::identity(1), &c.regions).unwrap() } else { ordinal_sum(&OrdinalMap::identity(1), &c.regions) };
        prop_assert_eq!(whiskered.regions, expect);
        let tgt = c.target.to_string();
        let composed = if left { format!("{tgt} ∘ ({text})") } else { format!("({text}) ∘ {}", c.source) };
        prop_assert_eq!(cls(&composed).regions, c.regions);
    }

    #[test]
    fn interchange_law(a in 0usize..4, b in 0usize..4) {
        let all: Vec<OrdinalMap> = (0..=2).flat_map(|n| (0..=2).flat_map(move |m| all_ordinal_maps(n, m))).collect();
        let fs: Vec<&OrdinalMap> = all.iter().filter(|f| f.source_size == a.min(2)).collect();
        for f in &fs {
            for g in all.iter().filter(|g| g.source_size == f.target_size) {
                let h = OrdinalMap::identity(b.min(2));
                prop_assert_eq!(
                    ordinal_sum(&g.after(f).unwrap(), &h),
                    ordinal_sum(g, &h).after(&ordinal_sum(f, &h)).unwrap()
                );
            }
        }
    }
}

fn objects(side: Obj) -> Vec<ObjOf<FreeForget>> {
    match side {
        Obj::C => vec![Side::C(0), Side::C(1), Side::C(2)],
        Obj::D => vec![Side::D(0), Side::D(1), Side::D(2)],
    }
}

fn values(m: &MorOf<FreeForget>) -> Vec<usize> {
    match m {
        Side::C(FnMap { values, .. }) => values.clone(),
        Side::D(_) => panic!("expected a function"),
    }
}

#[test]
fn realize_examples() {
    let adj = FreeForget::new();
    let tri = parse_word("eps F ∘ F eta").unwrap();
    for x in 0..=3 {
        let m = realize(&adj, &tri, &Side::C(x)).unwrap();
        let id = realize(&adj, &parse_word("F").unwrap(), &Side::C(x)).unwrap();
        assert_eq!(side_discrepancy(&adj, &m, &id), None);
    }
    let unit = parse_word("1").unwrap();
    assert_eq!(values(&realize(&adj, &unit, &Side::C(3)).unwrap()), vec![0, 1, 2]);
    // On a two-element basis: η at GF(2) sends a subset to its singleton,
    // GFη sends it to the subset of singletons it contains.
    let outer = values(&realize(&adj, &parse_word("eta G F").unwrap(), &Side::C(2)).unwrap());
    let inner = values(&realize(&adj, &parse_word("G F eta").unwrap(), &Side::C(2)).unwrap());
    assert_eq!(outer, vec![1, 2, 4, 8]);
    assert_eq!(inner, vec![0, 2, 4, 6]);
}

fn soundness(max_atoms: usize, max_object: usize) -> usize {
    let adj = FreeForget::new();
    let mut by_cell: BTreeMap<String, Vec<PastingWord>> = BTreeMap::new();
    for (src, ops) in common::enumerate(max_atoms) {
        let w = parse_word(&common::to_text(&src, &ops)).unwrap();
        by_cell.entry(classify(&w).to_string()).or_default().push(w);
    }
    let mut compared = 0;
    for words in by_cell.values() {
        let head = &words[0];
        for x in objects(head.source().dom).into_iter().take(max_object + 1) {
            let expect = realize(&adj, head, &x).unwrap();
            for w in &words[1..] {
                let got = realize(&adj, w, &x).unwrap();
                assert_eq!(side_discrepancy(&adj, &got, &expect), None, "{} vs {} at {x:?}", w.text, head.text);
                compared += 1;
            }
        }
    }
    compared
}

#[test]
fn realize_is_sound_up_to_four_atoms() {
    assert!(soundness(4, 2) > 10);
}

#[test]
fn realize_is_sound_up_to_six_atoms_on_small_objects() {
    let n = soundness(6, 1);
    assert!(n > 10, "{n}");
}
