//! Independent relation-closure oracle for 2-cells of the free adjunction.
//!
//! A 2-cell is presented as a source 1-cell plus a sequence of layers, each
//! inserting `G F` (a unit) or deleting `F G` (a counit) at a position. Two
//! sequences are equal iff they are connected by interchange of independent
//! layers and by the triangle identities, in either direction.
#![allow(dead_code)]

pub mod f2;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use homres::freeadj::{Letter, Obj, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// Insert `G F` at region `r`, a `C`-region.
    Eta(usize),
    /// Delete letters `p, p+1`, which must read `F G`.
    Eps(usize),
}

fn region(letters: &[Letter], cod: Obj, r: usize) -> Obj {
    if r == 0 {
        cod
    } else {
        letters[r - 1].dom()
    }
}

pub fn apply(letters: &[Letter], cod: Obj, op: Op) -> Option<Vec<Letter>> {
    match op {
        Op::Eta(r) => {
            if r > letters.len() || region(letters, cod, r) != Obj::C {
                return None;
            }
            let mut out = letters.to_vec();
            out.splice(r..r, [Letter::G, Letter::F]);
            Some(out)
        }
        Op::Eps(p) => {
            if p + 1 >= letters.len() || letters[p] != Letter::F || letters[p + 1] != Letter::G {
                return None;
            }
            let mut out = letters.to_vec();
            out.drain(p..p + 2);
            Some(out)
        }
    }
}

/// The intermediate 1-cells, source first; `None` if some layer is invalid.
pub fn run(src: &Path, ops: &[Op]) -> Option<Vec<Vec<Letter>>> {
    let mut words = vec![src.letters.clone()];
    for &op in ops {
        let next = apply(words.last().unwrap(), src.cod, op)?;
        words.push(next);
    }
    Some(words)
}

pub fn target(src: &Path, ops: &[Op]) -> Option<Vec<Letter>> {
    run(src, ops).map(|mut w| w.pop().unwrap())
}

/// Generator count of the layered word: each layer is its atom plus the
/// identity letters around it.
pub fn atoms(src: &Path, ops: &[Op]) -> usize {
    if ops.is_empty() {
        return src.letters.len().max(1);
    }
    let words = run(src, ops).expect("valid layers");
    ops.iter()
        .zip(&words)
        .map(|(op, w)| match op {
            Op::Eta(_) => w.len() + 1,
            Op::Eps(_) => w.len() - 1,
        })
        .sum()
}

fn spell(letters: &[Letter]) -> Vec<&'static str> {
    letters
        .iter()
        .map(|l| match l {
            Letter::F => "F",
            Letter::G => "G",
        })
        .collect()
}

/// Text in the parser's syntax.
pub fn to_text(src: &Path, ops: &[Op]) -> String {
    if ops.is_empty() {
        return if src.letters.is_empty() {
            format!("1_{:?}", src.dom)
        } else {
            spell(&src.letters).join(" ")
        };
    }
    let words = run(src, ops).expect("valid layers");
    let mut layers: Vec<String> = ops
        .iter()
        .zip(&words)
        .map(|(op, w)| {
            let (at, rest, atom) = match *op {
                Op::Eta(r) => (r, r, "eta"),
                Op::Eps(p) => (p, p + 2, "eps"),
            };
            let mut parts = spell(&w[..at]);
            parts.push(atom);
            parts.extend(spell(&w[rest..]));
            parts.join(" ")
        })
        .collect();
    layers.reverse();
    layers.join(" ∘ ")
}

/// Valid layers applicable to a 1-cell.
fn moves(letters: &[Letter], cod: Obj) -> Vec<Op> {
    let mut out = Vec::new();
    for r in 0..=letters.len() {
        if region(letters, cod, r) == Obj::C {
            out.push(Op::Eta(r));
        }
    }
    for p in 0..letters.len().saturating_sub(1) {
        if letters[p] == Letter::F && letters[p + 1] == Letter::G {
            out.push(Op::Eps(p));
        }
    }
    out
}

/// All 1-cells with at most `max` letters.
pub fn paths(max: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for dom in [Obj::C, Obj::D] {
        let mut frontier = vec![Vec::<Letter>::new()];
        for _ in 0..=max {
            let mut next = Vec::new();
            for w in frontier {
                let cod = w.first().map_or(dom, |l| l.cod());
                out.push(Path::new(w.clone(), dom, cod).unwrap());
                let l = if cod == Obj::C { Letter::F } else { Letter::G };
                let mut longer = vec![l];
                longer.extend(w);
                next.push(longer);
            }
            frontier = next;
        }
    }
    out
}

/// Every layered word with at most `max_atoms` generators.
pub fn enumerate(max_atoms: usize) -> Vec<(Path, Vec<Op>)> {
    let mut out = Vec::new();
    for src in paths(max_atoms) {
        if src.letters.len().max(1) <= max_atoms {
            out.push((src.clone(), Vec::new()));
        }
        let mut stack: Vec<(Vec<Letter>, Vec<Op>, usize)> = vec![(src.letters.clone(), Vec::new(), 0)];
        while let Some((w, ops, used)) = stack.pop() {
            for op in moves(&w, src.cod) {
                let cost = match op {
                    Op::Eta(_) => w.len() + 1,
                    Op::Eps(_) => w.len() - 1,
                };
                if used + cost > max_atoms {
                    continue;
                }
                let next = apply(&w, src.cod, op).unwrap();
                let mut more = ops.clone();
                more.push(op);
                out.push((src.clone(), more.clone()));
                stack.push((next, more, used + cost));
            }
        }
    }
    out
}

fn swap(a: Op, b: Op) -> Vec<(Op, Op)> {
    use Op::*;
    let mut out = Vec::new();
    match (a, b) {
        (Eta(r1), Eta(r2)) => {
            if r2 < r1 {
                out.push((Eta(r2), Eta(r1 + 2)));
            }
            if r2 > r1 + 2 {
                out.push((Eta(r2 - 2), Eta(r1)));
            }
            if r2 == r1 {
                out.push((Eta(r1), Eta(r1 + 2)));
            }
            if r2 == r1 + 2 {
                out.push((Eta(r1), Eta(r1)));
            }
        }
        (Eta(r1), Eps(p)) => {
            if p + 1 < r1 {
                out.push((Eps(p), Eta(r1 - 2)));
            }
            if p > r1 + 1 {
                out.push((Eps(p - 2), Eta(r1)));
            }
        }
        (Eps(p1), Eta(r2)) => {
            if r2 < p1 {
                out.push((Eta(r2), Eps(p1 + 2)));
            }
            if r2 > p1 {
                out.push((Eta(r2 + 2), Eps(p1)));
            }
        }
        (Eps(p1), Eps(p2)) => {
            if p2 + 2 <= p1 {
                out.push((Eps(p2), Eps(p1 - 2)));
            }
            if p2 >= p1 {
                out.push((Eps(p2 + 2), Eps(p1)));
            }
        }
    }
    out
}

fn is_zigzag(a: Op, b: Op) -> bool {
    matches!((a, b), (Op::Eta(r), Op::Eps(p)) if p + 1 == r || p == r + 1)
}

/// The equivalence class of `ops` over `src`, explored within the bounds.
pub fn closure(src: &Path, ops: &[Op], max_ops: usize, max_letters: usize) -> BTreeSet<Vec<Op>> {
    let end = target(src, ops).expect("valid layers");
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(ops.to_vec());
    queue.push_back(ops.to_vec());
    let push = |cand: Vec<Op>, seen: &mut BTreeSet<Vec<Op>>, queue: &mut VecDeque<Vec<Op>>| {
        let Some(words) = run(src, &cand) else { return };
        assert_eq!(words.last().unwrap(), &end, "a relation changed the target");
        if words.iter().any(|w| w.len() > max_letters) || cand.len() > max_ops {
            return;
        }
        if seen.insert(cand.clone()) {
            queue.push_back(cand);
        }
    };
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            for (a, b) in swap(cur[i], cur[i + 1]) {
                let mut cand = cur.clone();
                cand[i] = a;
                cand[i + 1] = b;
                push(cand, &mut seen, &mut queue);
            }
            if is_zigzag(cur[i], cur[i + 1]) {
                let mut cand = cur.clone();
                cand.drain(i..i + 2);
                push(cand, &mut seen, &mut queue);
            }
        }
        let words = run(src, &cur).unwrap();
        for (i, w) in words.iter().enumerate() {
            for r in 0..=w.len() {
                if region(w, src.cod, r) != Obj::C {
                    continue;
                }
                let mut zz = Vec::new();
                if r >= 1 && w[r - 1] == Letter::F {
                    zz.push([Op::Eta(r), Op::Eps(r - 1)]);
                }
                if r < w.len() && w[r] == Letter::G {
                    zz.push([Op::Eta(r), Op::Eps(r + 1)]);
                }
                for pair in zz {
                    let mut cand = cur.clone();
                    cand.splice(i..i, pair);
                    push(cand, &mut seen, &mut queue);
                }
            }
        }
    }
    seen
}

/// Partition `words` (grouped by boundary) into oracle classes; returns the
/// class index of each word.
pub fn partition(words: &[(Path, Vec<Op>)], max_ops: usize, max_letters: usize) -> Vec<usize> {
    let mut class_of: BTreeMap<(Path, Vec<Op>), usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(words.len());
    let mut next = 0;
    for (src, ops) in words {
        let key = (src.clone(), ops.clone());
        if let Some(&c) = class_of.get(&key) {
            out.push(c);
            continue;
        }
        let members = closure(src, ops, max_ops, max_letters);
        let c = match members.iter().find_map(|m| class_of.get(&(src.clone(), m.clone()))) {
            Some(&c) => c,
            None => {
                next += 1;
                next - 1
            }
        };
        for member in members {
            class_of.insert((src.clone(), member), c);
        }
        out.push(c);
    }
    out
}
