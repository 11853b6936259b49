//! Maps of finite ordinals, with ordinal sum as the composition of `Adj`.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinalMap {
    pub source_size: usize,
    pub target_size: usize,
    pub values: Vec<usize>,
}

impl OrdinalMap {
    pub fn new(source_size: usize, target_size: usize, values: Vec<usize>) -> Option<Self> {
        let ok = values.len() == source_size && values.iter().all(|&v| v < target_size) && values.windows(2).all(|w| w[0] <= w[1]);
        ok.then_some(Self { source_size, target_size, values })
    }

    pub fn identity(n: usize) -> Self {
        Self { source_size: n, target_size: n, values: (0..n).collect() }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &OrdinalMap) -> Option<OrdinalMap> {
        (first.target_size == self.source_size).then(|| OrdinalMap {
            source_size: first.source_size,
            target_size: self.target_size,
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn preserves_bottom(&self) -> bool {
        self.source_size > 0 && self.target_size > 0 && self.values[0] == 0
    }

    pub fn preserves_top(&self) -> bool {
        self.source_size > 0 && self.target_size > 0 && self.values[self.source_size - 1] == self.target_size - 1
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.target_size).all(|t| self.values.contains(&t))
    }

    /// The dual map on gaps: for `φ : n -> m` preserving bottom and top, the
    /// map `m − 1 -> n − 1` sending the gap `(j, j+1)` to the gap of the source
    /// straddling it.
    pub fn gap_dual(&self) -> Option<OrdinalMap> {
        if !(self.preserves_bottom() && self.preserves_top()) {
            return None;
        }
        let values = (0..self.target_size - 1)
            .map(|j| (0..self.source_size - 1).find(|&i| self.values[i] <= j && self.values[i + 1] > j).expect("ends are preserved"))
            .collect();
        OrdinalMap::new(self.target_size - 1, self.source_size - 1, values)
    }
}

impl fmt::Display for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(usize::to_string).collect();
        write!(f, "[{}]->[{}]: ({})", self.source_size, self.target_size, vals.join(","))
    }
}

/// Block sum `a ⊕ b`.
pub fn ordinal_sum(a: &OrdinalMap, b: &OrdinalMap) -> OrdinalMap {
    let mut values = a.values.clone();
    values.extend(b.values.iter().map(|v| v + a.target_size));
    OrdinalMap { source_size: a.source_size + b.source_size, target_size: a.target_size + b.target_size, values }
}

/// Sum identifying the top of `a` with the bottom of `b` (both maps must
/// preserve those elements); the composition law on intervals.
pub fn glued_sum(a: &OrdinalMap, b: &OrdinalMap) -> Option<OrdinalMap> {
    if !(a.preserves_top() && b.preserves_bottom()) {
        return None;
    }
    let shift = a.target_size - 1;
    let mut values = a.values.clone();
    values.extend(b.values[1..].iter().map(|v| v + shift));
    Some(OrdinalMap { source_size: a.source_size + b.source_size - 1, target_size: a.target_size + b.target_size - 1, values })
}

/// All monotone maps between ordinals of the given sizes.
pub fn all_ordinal_maps(n: usize, m: usize) -> Vec<OrdinalMap> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<OrdinalMap>) {
        if cur.len() == n {
            out.push(OrdinalMap { source_size: n, target_size: m, values: cur.clone() });
            return;
        }
        for v in lo..m {
            cur.push(v);
            go(n, m, v, cur, out);
            cur.pop();
        }
    }
    go(n, m, 0, &mut cur, &mut out);
    out
}
