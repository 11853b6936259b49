//! Interpreting pasting words in a concrete adjunction.

use super::word::{Letter, Node, NodeKind, PastingWord};
use crate::adjres::{AdjError, CMor, CObj, Category, DMor, DObj, DeformableAdjunction};

/// An object or morphism on one of the two sides.
pub enum Side<X, Y> {
    C(X),
    D(Y),
}

impl<X: Clone, Y: Clone> Clone for Side<X, Y> {
    fn clone(&self) -> Self {
        match self {
            Side::C(x) => Side::C(x.clone()),
            Side::D(y) => Side::D(y.clone()),
        }
    }
}

impl<X: std::fmt::Debug, Y: std::fmt::Debug> std::fmt::Debug for Side<X, Y> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::C(x) => write!(f, "C({x:?})"),
            Side::D(y) => write!(f, "D({y:?})"),
        }
    }
}

pub type ObjOf<A> = Side<CObj<A>, DObj<A>>;
pub type MorOf<A> = Side<CMor<A>, DMor<A>>;

fn wrong_side(what: &str) -> AdjError {
    AdjError::Invalid(format!("{what} applied on the wrong side"))
}

pub fn apply_path<A: DeformableAdjunction>(adj: &A, letters: &[Letter], x: &ObjOf<A>) -> Result<ObjOf<A>, AdjError> {
    let mut cur = x.clone();
    for l in letters.iter().rev() {
        cur = match (l, cur) {
            (Letter::F, Side::C(x)) => Side::D(adj.f(&x)?),
            (Letter::G, Side::D(y)) => Side::C(adj.g(&y)?),
            (l, _) => return Err(wrong_side(l.as_str())),
        };
    }
    Ok(cur)
}

pub fn apply_path_map<A: DeformableAdjunction>(adj: &A, letters: &[Letter], m: &MorOf<A>) -> Result<MorOf<A>, AdjError> {
    let mut cur = m.clone();
    for l in letters.iter().rev() {
        cur = match (l, cur) {
            (Letter::F, Side::C(h)) => Side::D(adj.f_map(&h)?),
            (Letter::G, Side::D(k)) => Side::C(adj.g_map(&k)?),
            (l, _) => return Err(wrong_side(l.as_str())),
        };
    }
    Ok(cur)
}

fn target<A: DeformableAdjunction>(adj: &A, m: &MorOf<A>) -> ObjOf<A> {
    match m {
        Side::C(h) => Side::C(adj.c().target(h)),
        Side::D(k) => Side::D(adj.d().target(k)),
    }
}

fn compose<A: DeformableAdjunction>(adj: &A, g: &MorOf<A>, f: &MorOf<A>) -> Result<MorOf<A>, AdjError> {
    match (g, f) {
        (Side::C(g), Side::C(f)) => Ok(Side::C(adj.c().compose(g, f)?)),
        (Side::D(g), Side::D(f)) => Ok(Side::D(adj.d().compose(g, f)?)),
        _ => Err(AdjError::NotComposable("morphisms on different sides".into())),
    }
}

fn component<A: DeformableAdjunction>(adj: &A, node: &Node, x: &ObjOf<A>) -> Result<MorOf<A>, AdjError> {
    match (&node.kind, x) {
        (NodeKind::Letter(l), _) => {
            let y = apply_path(adj, &[*l], x)?;
            Ok(match y {
                Side::C(c) => Side::C(adj.c().identity(&c)),
                Side::D(d) => Side::D(adj.d().identity(&d)),
            })
        }
        (NodeKind::Eta, Side::C(c)) => Ok(Side::C(adj.eta(c)?)),
        (NodeKind::Eps, Side::D(d)) => Ok(Side::D(adj.eps(d)?)),
        (NodeKind::Unit, Side::C(c)) => Ok(Side::C(adj.c().identity(c))),
        (NodeKind::Unit, Side::D(d)) => Ok(Side::D(adj.d().identity(d))),
        (NodeKind::H(parts), _) => {
            let mut acc = component(adj, parts.last().unwrap(), x)?;
            for p in parts.iter().rev().skip(1) {
                let outer = component(adj, p, &target(adj, &acc))?;
                let whiskered = apply_path_map(adj, &p.src.letters, &acc)?;
                acc = compose(adj, &outer, &whiskered)?;
            }
            Ok(acc)
        }
        (NodeKind::V(parts), _) => {
            let mut acc = component(adj, parts.last().unwrap(), x)?;
            for p in parts.iter().rev().skip(1) {
                acc = compose(adj, &component(adj, p, x)?, &acc)?;
            }
            Ok(acc)
        }
        (NodeKind::Eta, _) => Err(wrong_side("eta")),
        (NodeKind::Eps, _) => Err(wrong_side("eps")),
    }
}

/// The component of `word` at `x`, an object on the domain side of the word.
pub fn realize<A: DeformableAdjunction>(adj: &A, word: &PastingWord, x: &ObjOf<A>) -> Result<MorOf<A>, AdjError> {
    component(adj, &word.root, x)
}

/// `None` when the two morphisms agree.
pub fn side_discrepancy<A: DeformableAdjunction>(adj: &A, a: &MorOf<A>, b: &MorOf<A>) -> Option<String> {
    match (a, b) {
        (Side::C(a), Side::C(b)) => adj.c().discrepancy(a, b),
        (Side::D(a), Side::D(b)) => adj.d().discrepancy(a, b),
        _ => Some("morphisms on different sides".into()),
    }
}
