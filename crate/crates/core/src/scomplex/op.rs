//! Operators of the simplex category.
//!
//! A [`Monotone`] is an order preserving map `[n] -> [m]` between the
//! ordinals `{0..n}` and `{0..m}`. Every such map factors uniquely as a
//! surjection followed by an injection; [`SimplexOp`] records that
//! factorization as the index lists of a normal-form word
//! `s_{j1} .. s_{jp} d_{i1} .. d_{iq}` with `j1 > .. > jp` and `i1 < .. < iq`.

use serde::{Deserialize, Serialize};

/// Order preserving map `[source] -> [target]` (both ordinals non-empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monotone {
    target: usize,
    values: Vec<usize>,
}

impl Monotone {
    pub fn new(target: usize, values: Vec<usize>) -> Option<Self> {
        if values.is_empty() || values.iter().any(|&v| v > target) {
            return None;
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        Some(Self { target, values })
    }

    pub fn identity(n: usize) -> Self {
        Self { target: n, values: (0..=n).collect() }
    }

    /// Coface `δ^i : [n-1] -> [n]`, skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        Self { target: n, values: (0..n).map(|k| if k < i { k } else { k + 1 }).collect() }
    }

    /// Codegeneracy `σ^j : [n+1] -> [n]`, hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        Self { target: n, values: (0..=n + 1).map(|k| if k <= j { k } else { k - 1 }).collect() }
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, k: usize) -> usize {
        self.values[k]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Monotone) -> Monotone {
        assert_eq!(first.target, self.source_dim(), "composing incompatible operators");
        Monotone { target: self.target, values: first.values.iter().map(|&v| self.values[v]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source_dim() && self.values.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0 && *self.values.last().unwrap() == self.target && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Epi-mono factorization `self = mono ∘ epi`.
    pub fn factor(&self) -> (Monotone, Monotone) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let epi_values = self
            .values
            .iter()
            .map(|v| image.binary_search(v).expect("value in image"))
            .collect();
        let epi = Monotone { target: k, values: epi_values };
        let mono = Monotone { target: self.target, values: image };
        (mono, epi)
    }

    pub fn normal_form(&self) -> SimplexOp {
        let degeneracies = (0..self.source_dim())
            .rev()
            .filter(|&j| self.values[j] == self.values[j + 1])
            .collect();
        let faces = (0..=self.target).filter(|v| self.values.binary_search(v).is_err()).collect();
        SimplexOp { degeneracies, faces }
    }
}

/// Normal-form word for a simplicial operator.
///
/// Acting on an `m`-simplex `x`, the operator sends it to
/// `s_{j1} .. s_{jp} d_{i1} .. d_{iq} x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexOp {
    #[serde(rename = "deg")]
    pub degeneracies: Vec<usize>,
    #[serde(rename = "face")]
    pub faces: Vec<usize>,
}

impl SimplexOp {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn is_well_formed(&self) -> bool {
        self.degeneracies.windows(2).all(|w| w[0] > w[1]) && self.faces.windows(2).all(|w| w[0] < w[1])
    }

    /// Monotone map realized by this word when applied to a simplex of
    /// dimension `target_dim`.
    pub fn to_monotone(&self, target_dim: usize) -> Option<Monotone> {
        if !self.is_well_formed() || self.faces.iter().any(|&i| i > target_dim) || self.faces.len() > target_dim {
            return None;
        }
        let mid = target_dim - self.faces.len();
        let image: Vec<usize> = (0..=target_dim).filter(|v| self.faces.binary_search(v).is_err()).collect();
        if self.degeneracies.first().is_some_and(|&j| j >= mid + self.degeneracies.len()) {
            return None;
        }
        let source = mid + self.degeneracies.len();
        let mut epi = Vec::with_capacity(source + 1);
        let mut value = 0;
        for k in 0..=source {
            epi.push(value);
            if k < source && !self.degeneracies.contains(&k) {
                value += 1;
            }
        }
        Some(Monotone { target: target_dim, values: epi.into_iter().map(|e| image[e]).collect() })
    }

    /// Source dimension given the dimension the operator lands in.
    pub fn source_dim(&self, target_dim: usize) -> usize {
        target_dim - self.faces.len() + self.degeneracies.len()
    }
}

/// All monotone maps `[n] -> [m]`, in lexicographic order of values.
pub fn all_monotone(n: usize, m: usize) -> Vec<Monotone> {
    fn rec(pos: usize, n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Monotone>) {
        if pos > n {
            out.push(Monotone { target: m, values: cur.clone() });
            return;
        }
        for v in lo..=m {
            cur.push(v);
            rec(pos + 1, n, m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, 0, &mut Vec::new(), &mut out);
    out
}

/// Surjections `[n] -> [k]`.
pub fn surjections(n: usize, k: usize) -> Vec<Monotone> {
    if k > n {
        return Vec::new();
    }
    all_monotone(n, k).into_iter().filter(Monotone::is_surjective).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Builds an operator by literally composing elementary cofaces and
    /// codegeneracies in the order the normal-form word prescribes.
    fn brute_force(op: &SimplexOp, target_dim: usize) -> Monotone {
        // s_{j1} .. s_{jp} d_{i1} .. d_{iq} is the pullback along
        // δ^{iq} ∘ .. ∘ δ^{i1} ∘ σ^{jp} ∘ .. ∘ σ^{j1}.
        let source = op.source_dim(target_dim);
        let mut map = Monotone::identity(source);
        let mut dim = source;
        for &j in &op.degeneracies {
            map = Monotone::codegeneracy(dim - 1, j).after(&map);
            dim -= 1;
        }
        for &i in &op.faces {
            map = Monotone::coface(dim + 1, i).after(&map);
            dim += 1;
        }
        map
    }

    #[test]
    fn normal_form_round_trips_for_small_ordinals() {
        for n in 0..=4 {
            for m in 0..=4 {
                for f in all_monotone(n, m) {
                    let op = f.normal_form();
                    assert!(op.is_well_formed());
                    assert_eq!(op.to_monotone(m).as_ref(), Some(&f), "{op:?}");
                    assert_eq!(brute_force(&op, m), f, "{op:?}");
                    assert_eq!(op.to_monotone(m).unwrap().normal_form(), op);
                }
            }
        }
    }

    #[test]
    fn composition_is_associative() {
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for f in all_monotone(a, b) {
                        for g in all_monotone(b, c) {
                            for h in all_monotone(c, 2) {
                                assert_eq!(h.after(&g).after(&f), h.after(&g.after(&f)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_operators() {
        assert_eq!(Monotone::coface(2, 1).normal_form(), SimplexOp { degeneracies: vec![], faces: vec![1] });
        assert_eq!(Monotone::codegeneracy(1, 0).normal_form(), SimplexOp { degeneracies: vec![0], faces: vec![] });
        assert_eq!(surjections(3, 1).len(), 3);
        assert!(SimplexOp { degeneracies: vec![0, 1], faces: vec![] }.to_monotone(1).is_none());
    }

    #[test]
    fn factorization_recomposes() {
        for f in all_monotone(3, 3) {
            let (mono, epi) = f.factor();
            assert!(mono.is_injective() && epi.is_surjective());
            assert_eq!(mono.after(&epi), f);
        }
    }
}
