//! Truncated (co)simplicial objects with an identity checker.
//!
//! Levels are indexed from 0; when the diagram is augmented, level 0 is the
//! augmentation (simplicial degree −1) and level `k` has degree `k − 1`.

use serde_json::{json, Value};

use super::checks::CheckReport;
use super::Category;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Simplicial,
    Cosimplicial,
}

/// Which extra degeneracy a split augmented simplicial object carries:
/// `s_{n+1}` (forwards) or `s_{−1}` (backwards).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    Forward,
    Backward,
}

#[derive(Clone, Debug)]
pub struct TruncatedDiagram<O, M> {
    pub name: String,
    pub variance: Variance,
    pub augmented: bool,
    pub levels: Vec<O>,
    /// Simplicial: `faces[k][i] : levels[k] -> levels[k-1]`.
    /// Cosimplicial: `faces[k][i] : levels[k] -> levels[k+1]`.
    pub faces: Vec<Vec<M>>,
    /// Simplicial: `levels[k] -> levels[k+1]`; cosimplicial: `levels[k] -> levels[k-1]`.
    pub degeneracies: Vec<Vec<M>>,
    /// `extra[k] : levels[k] -> levels[k+1]`.
    pub extra: Option<(Splitting, Vec<M>)>,
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Face(usize, usize),
    Degen(usize, usize),
    Extra(usize),
}

impl<O: Clone, M: Clone> TruncatedDiagram<O, M> {
    pub fn new(name: impl Into<String>, variance: Variance, augmented: bool, levels: Vec<O>) -> Self {
        let n = levels.len();
        Self { name: name.into(), variance, augmented, levels, faces: vec![Vec::new(); n], degeneracies: vec![Vec::new(); n], extra: None }
    }

    /// Highest level index.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    /// Simplicial degree of level `k`.
    pub fn degree(&self, k: usize) -> i64 {
        k as i64 - i64::from(self.augmented)
    }

    fn op(&self, op: Op) -> Option<&M> {
        match op {
            Op::Face(k, i) => self.faces.get(k)?.get(i),
            Op::Degen(k, j) => self.degeneracies.get(k)?.get(j),
            Op::Extra(k) => self.extra.as_ref()?.1.get(k),
        }
    }

    fn op_name(&self, op: Op) -> String {
        match op {
            Op::Face(_, i) => format!("d{i}"),
            Op::Degen(_, j) => format!("s{j}"),
            Op::Extra(k) => match self.extra.as_ref().map(|e| e.0) {
                Some(Splitting::Backward) => "s-1".to_string(),
                _ => format!("s{}", self.degree(k) + 1),
            },
        }
    }

    /// Identities as pairs of chains (in order of application) starting at a level.
    fn identities(&self) -> Vec<(usize, Vec<Op>, Vec<Op>)> {
        let mut out = Vec::new();
        let len = self.levels.len();
        for k in 0..len {
            let m = self.degree(k);
            let mu = |x: i64| x.max(-1);
            match self.variance {
                Variance::Simplicial => {
                    if m >= 1 && k >= 2 {
                        for j in 1..=m as usize {
                            for i in 0..j {
                                out.push((k, vec![Op::Face(k, j), Op::Face(k - 1, i)], vec![Op::Face(k, i), Op::Face(k - 1, j - 1)]));
                            }
                        }
                    }
                    if m >= 0 && k + 2 < len {
                        for j in 0..=m as usize {
                            for i in 0..=j {
                                out.push((k, vec![Op::Degen(k, j), Op::Degen(k + 1, i)], vec![Op::Degen(k, i), Op::Degen(k + 1, j + 1)]));
                            }
                        }
                    }
                    if m >= 0 && k + 1 < len {
                        for j in 0..=m as usize {
                            for i in 0..=(m as usize + 1) {
                                let lhs = vec![Op::Degen(k, j), Op::Face(k + 1, i)];
                                let rhs = if i < j {
                                    vec![Op::Face(k, i), Op::Degen(k - 1, j - 1)]
                                } else if i == j || i == j + 1 {
                                    vec![]
                                } else {
                                    vec![Op::Face(k, i - 1), Op::Degen(k - 1, j)]
                                };
                                out.push((k, lhs, rhs));
                            }
                        }
                    }
                    if let Some((side, _)) = &self.extra {
                        if k + 1 < len {
                            let top = (mu(m) + 1) as usize;
                            let (outer, shift) = match side {
                                Splitting::Forward => (top, 0),
                                Splitting::Backward => (0, 1),
                            };
                            out.push((k, vec![Op::Extra(k), Op::Face(k + 1, outer)], vec![]));
                            if m >= 0 && k >= 1 {
                                for i in 0..=m as usize {
                                    out.push((k, vec![Op::Extra(k), Op::Face(k + 1, i + shift)], vec![Op::Face(k, i), Op::Extra(k - 1)]));
                                }
                            }
                        }
                    }
                }
                Variance::Cosimplicial => {
                    if k + 2 < len {
                        let top = (m + 2) as usize;
                        for j in 1..=top {
                            for i in 0..j {
                                out.push((k, vec![Op::Face(k, i), Op::Face(k + 1, j)], vec![Op::Face(k, j - 1), Op::Face(k + 1, i)]));
                            }
                        }
                    }
                    if m >= 2 {
                        for j in 0..=(m as usize - 2) {
                            for i in 0..=j {
                                out.push((k, vec![Op::Degen(k, i), Op::Degen(k - 1, j)], vec![Op::Degen(k, j + 1), Op::Degen(k - 1, i)]));
                            }
                        }
                    }
                    if m >= 0 && k + 1 < len {
                        for i in 0..=(m as usize + 1) {
                            for j in 0..=m as usize {
                                let lhs = vec![Op::Face(k, i), Op::Degen(k + 1, j)];
                                let rhs = if i < j {
                                    vec![Op::Degen(k, j - 1), Op::Face(k - 1, i)]
                                } else if i == j || i == j + 1 {
                                    vec![]
                                } else {
                                    vec![Op::Degen(k, j), Op::Face(k - 1, i - 1)]
                                };
                                out.push((k, lhs, rhs));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn chain_name(&self, chain: &[Op]) -> String {
        if chain.is_empty() {
            return "1".to_string();
        }
        chain.iter().rev().map(|&o| self.op_name(o)).collect::<Vec<_>>().join("")
    }

    /// Every (co)simplicial identity, and every splitting identity, that fits
    /// below the truncation.
    pub fn check_identities<K: Category<Obj = O, Mor = M>>(&self, cat: &K) -> CheckReport {
        let mut rep = CheckReport::default();
        for (k, lhs, rhs) in self.identities() {
            let ops: Option<Vec<&M>> = lhs.iter().chain(&rhs).map(|&o| self.op(o)).collect();
            if ops.is_none() {
                continue;
            }
            let eval = |chain: &[Op]| -> Result<M, super::AdjError> {
                match chain.split_first() {
                    None => Ok(cat.identity(&self.levels[k])),
                    Some((first, rest)) => {
                        let mut acc = self.op(*first).expect("present").clone();
                        for &o in rest {
                            acc = cat.compose(self.op(o).expect("present"), &acc)?;
                        }
                        Ok(acc)
                    }
                }
            };
            let name = format!("{} = {} @ [{}]", self.chain_name(&lhs), self.chain_name(&rhs), self.degree(k));
            rep.record(cat, name, self.name.clone(), eval(&lhs), eval(&rhs));
        }
        rep
    }

    /// First structure map that differs from `other`'s, if any.
    pub fn discrepancy<K: Category<Obj = O, Mor = M>>(&self, cat: &K, other: &Self) -> Option<String> {
        if self.levels.len() != other.levels.len() {
            return Some(format!("{} levels against {}", self.levels.len(), other.levels.len()));
        }
        let families = [("face", &self.faces, &other.faces), ("degeneracy", &self.degeneracies, &other.degeneracies)];
        for (what, mine, theirs) in families {
            for (k, (a, b)) in mine.iter().zip(theirs.iter()).enumerate() {
                if a.len() != b.len() {
                    return Some(format!("level {k}: {} {what} maps against {}", a.len(), b.len()));
                }
                for (i, (f, g)) in a.iter().zip(b).enumerate() {
                    if let Some(w) = cat.discrepancy(f, g) {
                        return Some(format!("level {k} {what} {i}: {w}"));
                    }
                }
            }
        }
        None
    }

    pub fn to_json<K: Category<Obj = O, Mor = M>>(&self, cat: &K, with_maps: bool) -> Value {
        let variance = match self.variance {
            Variance::Simplicial => "simplicial",
            Variance::Cosimplicial => "cosimplicial",
        };
        let mut v = json!({
            "name": self.name,
            "variance": variance,
            "augmented": self.augmented,
            "levels": self.levels.iter().map(|x| cat.describe(x)).collect::<Vec<_>>(),
            "splitting": self.extra.as_ref().map(|e| match e.0 { Splitting::Forward => "forward", Splitting::Backward => "backward" }),
        });
        if with_maps {
            let table = |fam: &Vec<Vec<M>>| -> Value {
                fam.iter().map(|lvl| lvl.iter().map(|f| cat.map_json(f)).collect::<Vec<_>>()).collect::<Vec<_>>().into()
            };
            v["faces"] = table(&self.faces);
            v["degeneracies"] = table(&self.degeneracies);
            if let Some((_, e)) = &self.extra {
                v["extra"] = e.iter().map(|f| cat.map_json(f)).collect::<Vec<_>>().into();
            }
        }
        v
    }
}
