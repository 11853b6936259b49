//! Truncated cosimplicial modules, their Moore and normalized complexes, and
//! the Amitsur complex of an algebra.

use serde_json::{json, Value};

use super::complex::CochainComplex;
use super::matrix::{Matrix, Ring};
use super::CompletionError;

/// Largest level dimension built explicitly.
pub const MAX_LEVEL_DIM: usize = 1 << 17;

/// Levels `0..=N` with `cofaces[n][i] : n -> n+1` (`i ≤ n+1`) and
/// `codegeneracies[n][j] : n -> n-1` (`j < n`); optionally augmented by
/// `E -> level 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialModule {
    pub ring: Ring,
    pub dims: Vec<usize>,
    pub cofaces: Vec<Vec<Matrix>>,
    pub codegeneracies: Vec<Vec<Matrix>>,
    pub augmentation: Option<Matrix>,
}

fn same(a: &Matrix, b: &Matrix) -> bool {
    a == b
}

impl CosimplicialModule {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// Every cosimplicial identity that fails, by name.
    pub fn identity_failures(&self) -> Result<Vec<String>, CompletionError> {
        let n_top = self.top();
        let mut bad = Vec::new();
        let d = |n: usize, i: usize| &self.cofaces[n][i];
        let s = |n: usize, j: usize| &self.codegeneracies[n][j];
        for n in 0..n_top {
            if self.cofaces[n].len() != n + 2 {
                return Err(CompletionError::Shape(format!("level {n} needs {} cofaces", n + 2)));
            }
            for (i, m) in self.cofaces[n].iter().enumerate() {
                if (m.cols, m.rows) != (self.dims[n], self.dims[n + 1]) {
                    return Err(CompletionError::Shape(format!("coface d{i} at level {n} has the wrong shape")));
                }
            }
        }
        for n in 1..=n_top {
            if self.codegeneracies[n].len() != n {
                return Err(CompletionError::Shape(format!("level {n} needs {n} codegeneracies")));
            }
            for (j, m) in self.codegeneracies[n].iter().enumerate() {
                if (m.cols, m.rows) != (self.dims[n], self.dims[n - 1]) {
                    return Err(CompletionError::Shape(format!("codegeneracy s{j} at level {n} has the wrong shape")));
                }
            }
        }
        for n in 0..n_top.saturating_sub(1) {
            for j in 1..=n + 2 {
                for i in 0..j {
                    if !same(&d(n + 1, j).mul(d(n, i))?, &d(n + 1, i).mul(d(n, j - 1))?) {
                        bad.push(format!("d{j}d{i} = d{i}d{} @ {n}", j - 1));
                    }
                }
            }
        }
        for n in 2..=n_top {
            for j in 0..n - 1 {
                for i in 0..=j {
                    if !same(&s(n - 1, j).mul(s(n, i))?, &s(n - 1, i).mul(s(n, j + 1))?) {
                        bad.push(format!("s{j}s{i} = s{i}s{} @ {n}", j + 1));
                    }
                }
            }
        }
        for n in 0..n_top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = s(n + 1, j).mul(d(n, i))?;
                    let rhs = if i < j {
                        d(n - 1, i).mul(s(n, j - 1))?
                    } else if i == j || i == j + 1 {
                        Matrix::identity(self.ring, self.dims[n])
                    } else {
                        d(n - 1, i - 1).mul(s(n, j))?
                    };
                    if !same(&lhs, &rhs) {
                        bad.push(format!("s{j}d{i} @ {n}"));
                    }
                }
            }
        }
        if let (Some(e), true) = (&self.augmentation, n_top >= 1) {
            if !same(&d(0, 1).mul(e)?, &d(0, 0).mul(e)?) {
                bad.push("d1e = d0e".into());
            }
        }
        Ok(bad)
    }

    pub fn validate(&self) -> Result<(), CompletionError> {
        match self.identity_failures()?.into_iter().next() {
            Some(name) => Err(CompletionError::Identity(name)),
            None => Ok(()),
        }
    }

    /// `dⁿ = Σ (−1)ⁱ dⁱ`.
    pub fn moore_differential(&self, n: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.ring, self.dims[n + 1], self.dims[n]);
        for (i, m) in self.cofaces[n].iter().enumerate() {
            acc = acc.scaled_add(m, if i % 2 == 0 { 1 } else { -1 }).expect("coface shapes");
        }
        acc
    }

    pub fn moore_cochain(&self) -> Result<CochainComplex, CompletionError> {
        self.validate()?;
        let diffs = (0..self.top()).map(|n| self.moore_differential(n)).collect();
        CochainComplex::new(self.ring, 0, self.dims.clone(), diffs, true)
    }

    /// The Moore complex with the augmentation in degree −1.
    pub fn augmented_moore_cochain(&self) -> Result<CochainComplex, CompletionError> {
        self.validate()?;
        let e = self.augmentation.clone().ok_or_else(|| CompletionError::Invalid("not augmented".into()))?;
        let mut dims = vec![e.cols];
        dims.extend(&self.dims);
        let mut diffs = vec![e];
        diffs.extend((0..self.top()).map(|n| self.moore_differential(n)));
        CochainComplex::new(self.ring, -1, dims, diffs, true)
    }

    /// Basis of `∩ⱼ ker sʲ` at level `n`, as columns.
    pub fn normalized_basis(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::identity(self.ring, self.dims[0]);
        }
        let mut stacked = Matrix::zeros(self.ring, 0, self.dims[n]);
        for s in &self.codegeneracies[n] {
            stacked = stacked.vstack(s);
        }
        stacked.kernel()
    }

    /// The normalized subcomplex, with the inclusion bases.
    pub fn normalized_cochain(&self) -> Result<(CochainComplex, Vec<Matrix>), CompletionError> {
        if !matches!(self.ring, Ring::Fp(_)) {
            return Err(CompletionError::Invalid("normalization is implemented over F_p".into()));
        }
        self.validate()?;
        let bases: Vec<Matrix> = (0..=self.top()).map(|n| self.normalized_basis(n)).collect();
        let diffs = (0..self.top())
            .map(|n| {
                let image = self.moore_differential(n).mul(&bases[n])?;
                bases[n + 1].solve(&image).ok_or_else(|| CompletionError::Identity(format!("normalized complex not closed @ {n}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let dims = bases.iter().map(|b| b.cols).collect();
        Ok((CochainComplex::new(self.ring, 0, dims, diffs, true)?, bases))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.to_string(),
            "dims": self.dims,
            "augmentation_source": self.augmentation.as_ref().map(|e| e.cols),
        })
    }
}

/// A finite-dimensional associative unital algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub ring: Ring,
    pub labels: Vec<String>,
    /// Coordinates of the unit.
    pub unit: Vec<i64>,
    /// `mult[i][j]` = coordinates of `e_i e_j`.
    pub mult: Vec<Vec<Vec<i64>>>,
}

impl Algebra {
    pub fn new(ring: Ring, labels: Vec<String>, unit: Vec<i64>, mult: Vec<Vec<Vec<i64>>>) -> Result<Self, CompletionError> {
        let n = labels.len();
        let shaped = unit.len() == n && mult.len() == n && mult.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n));
        if !shaped {
            return Err(CompletionError::Shape("structure constants do not match the basis".into()));
        }
        let unit: Vec<i64> = unit.into_iter().map(|x| ring.reduce(x)).collect();
        let mult = mult.into_iter().map(|r| r.into_iter().map(|v| v.into_iter().map(|x| ring.reduce(x)).collect()).collect()).collect();
        let alg = Self { ring, labels, unit, mult };
        for i in 0..n {
            let e = alg.basis(i);
            if alg.product(&alg.unit, &e) != e || alg.product(&e, &alg.unit) != e {
                return Err(CompletionError::Invalid(format!("unit law fails on {}", alg.labels[i])));
            }
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (alg.basis(i), alg.basis(j), alg.basis(k));
                    if alg.product(&alg.product(&a, &b), &c) != alg.product(&a, &alg.product(&b, &c)) {
                        return Err(CompletionError::Invalid("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// `F_p[t]/tᵏ` on the basis `1, t, …`.
    pub fn truncated_polynomial(p: u64, k: usize) -> Result<Self, CompletionError> {
        let ring = Ring::fp(p)?;
        let labels = (0..k).map(|i| if i == 0 { "1".to_string() } else { format!("t^{i}") }).collect();
        let mut unit = vec![0; k];
        if k > 0 {
            unit[0] = 1;
        }
        let mult = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| i64::from(i + j == l)).collect()).collect())
            .collect();
        Self::new(ring, labels, unit, mult)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn basis(&self, i: usize) -> Vec<i64> {
        (0..self.dim()).map(|j| i64::from(i == j)).collect()
    }

    pub fn product(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.dim()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                if x * y != 0 {
                    for (l, &c) in self.mult[i][j].iter().enumerate() {
                        out[l] = self.ring.reduce(out[l] + x * y * c);
                    }
                }
            }
        }
        out
    }
}

fn digits(mut index: usize, a: usize, factors: usize) -> Vec<usize> {
    let mut out = vec![0; factors];
    for slot in out.iter_mut().rev() {
        *slot = index % a;
        index /= a;
    }
    out
}

fn undigits(ds: &[usize], a: usize) -> usize {
    ds.iter().fold(0, |acc, &d| acc * a + d)
}

/// `A^{⊗(n+1)} ⊗ V` for `n = 0..=N`: cofaces insert the unit, codegeneracies
/// multiply adjacent tensor factors of `A`.
pub fn amitsur(alg: &Algebra, v_dim: usize, n_top: usize) -> Result<CosimplicialModule, CompletionError> {
    let a = alg.dim();
    let ring = alg.ring;
    let level = |n: usize| -> Result<usize, CompletionError> {
        a.checked_pow(n as u32 + 1)
            .and_then(|x| x.checked_mul(v_dim))
            .filter(|&x| x <= MAX_LEVEL_DIM)
            .ok_or(CompletionError::TooLarge(format!("level {n} of the Amitsur complex")))
    };
    let dims = (0..=n_top).map(level).collect::<Result<Vec<_>, _>>()?;
    let mut cofaces = vec![Vec::new(); n_top + 1];
    let mut codegeneracies = vec![Vec::new(); n_top + 1];
    for n in 0..n_top {
        for i in 0..=n + 1 {
            let mut m = Matrix::zeros(ring, dims[n + 1], dims[n]);
            for col in 0..dims[n] {
                let (word, v) = (digits(col / v_dim, a, n + 1), col % v_dim);
                for (u, &c) in alg.unit.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mut longer = word.clone();
                    longer.insert(i, u);
                    m.add_to(undigits(&longer, a) * v_dim + v, col, c);
                }
            }
            cofaces[n].push(m);
        }
    }
    for n in 1..=n_top {
        for j in 0..n {
            let mut m = Matrix::zeros(ring, dims[n - 1], dims[n]);
            for col in 0..dims[n] {
                let (word, v) = (digits(col / v_dim, a, n + 1), col % v_dim);
                for (l, &c) in alg.mult[word[j]][word[j + 1]].iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mut shorter = word.clone();
                    shorter.splice(j..j + 2, [l]);
                    m.add_to(undigits(&shorter, a) * v_dim + v, col, c);
                }
            }
            codegeneracies[n].push(m);
        }
    }
    // Coaugmented by `V -> A ⊗ V`, `v ↦ 1 ⊗ v`.
    let mut e = Matrix::zeros(ring, dims[0], v_dim);
    for v in 0..v_dim {
        for (u, &c) in alg.unit.iter().enumerate() {
            e.add_to(u * v_dim + v, v, c);
        }
    }
    let out = CosimplicialModule { ring, dims, cofaces, codegeneracies, augmentation: Some(e) };
    out.validate()?;
    Ok(out)
}
