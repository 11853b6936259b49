//! Exact matrices over `F_p` and `ℤ`.

use std::fmt;

use super::CompletionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Fp(u64),
    Z,
}

impl Ring {
    pub fn fp(p: u64) -> Result<Self, CompletionError> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(CompletionError::NotPrime(p));
        }
        Ok(Ring::Fp(p))
    }

    pub fn reduce(self, x: i64) -> i64 {
        match self {
            Ring::Fp(p) => x.rem_euclid(p as i64),
            Ring::Z => x,
        }
    }

    fn inverse(self, x: i64) -> i64 {
        let Ring::Fp(p) = self else { panic!("inverse over ℤ") };
        let (p, mut base, mut exp, mut acc) = (p as i64, x.rem_euclid(p as i64), p - 2, 1i64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Fp(p) => write!(f, "F_{p}"),
            Ring::Z => write!(f, "Z"),
        }
    }
}

/// Row-major; `rows × cols`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub ring: Ring,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Self { ring, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(ring: Ring, cols: usize, rows: &[Vec<i64>]) -> Result<Self, CompletionError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CompletionError::Shape(format!("rows must all have {cols} entries")));
        }
        let entries = rows.iter().flatten().map(|&x| ring.reduce(x)).collect();
        Ok(Self { ring, rows: rows.len(), cols, entries })
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(ring: Ring, rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: i64) {
        self.entries[r * self.cols + c] = self.ring.reduce(x);
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: i64) {
        let v = self.get(r, c) + x;
        self.set(r, c, v);
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, CompletionError> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(CompletionError::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.entries[i * other.cols + j] = self.ring.reduce(out.entries[i * other.cols + j] + a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scaled_add(&self, other: &Matrix, scale: i64) -> Result<Matrix, CompletionError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(CompletionError::Shape("cannot add matrices of different shapes".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| self.ring.reduce(a + scale * b)).collect();
        Ok(Matrix { ring: self.ring, rows: self.rows, cols: self.cols, entries })
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    /// Columns `a` followed by columns `b`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row count");
        let cols: Vec<Vec<i64>> = (0..self.cols).map(|c| self.column(c)).chain((0..other.cols).map(|c| other.column(c))).collect();
        Matrix::from_columns(self.ring, self.rows, &cols)
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column count");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix { ring: self.ring, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Matrix { ring: self.ring, rows: rows.len(), cols: self.cols, entries }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let columns: Vec<Vec<i64>> = cols.iter().map(|&c| self.column(c)).collect();
        Matrix::from_columns(self.ring, self.rows, &columns)
    }

    /// Reduced row echelon form over a field and its pivot columns.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let ring = self.ring;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(src) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
            if src != row {
                for c in 0..m.cols {
                    m.entries.swap(src * m.cols + c, row * m.cols + c);
                }
            }
            let inv = ring.inverse(m.get(row, col));
            for c in col..m.cols {
                let v = m.get(row, c) * inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        match self.ring {
            Ring::Fp(_) => {
                // Eliminate along the shorter side.
                if self.rows < self.cols {
                    self.transpose().rref().1.len()
                } else {
                    self.rref().1.len()
                }
            }
            Ring::Z => self.smith_invariants().len(),
        }
    }

    /// Basis of the null space, as columns (fields only).
    pub fn kernel(&self) -> Matrix {
        assert!(matches!(self.ring, Ring::Fp(_)), "kernel over a field");
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let columns: Vec<Vec<i64>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![0; self.cols];
                v[f] = 1;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = self.ring.reduce(-m.get(r, f));
                }
                v
            })
            .collect();
        Matrix::from_columns(self.ring, self.cols, &columns)
    }

    /// A basis of the column space drawn from the columns themselves.
    pub fn column_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Solve `self · x = b` column by column; `self` must have independent
    /// columns and `b` must lie in its span.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        let aug = self.hstack(b);
        let (m, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) || pivots.len() < self.cols {
            return None;
        }
        let mut x = Matrix::zeros(self.ring, self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, m.get(r, self.cols + c));
            }
        }
        Some(x)
    }

    /// Nonzero invariant factors `d_1 | d_2 | …` of the Smith normal form
    /// (over a field: one `1` per unit of rank).
    pub fn smith_invariants(&self) -> Vec<i64> {
        if let Ring::Fp(_) = self.ring {
            return vec![1; self.rank()];
        }
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<i128>> = (0..rows).map(|r| self.row(r).iter().map(|&x| x as i128).collect()).collect();
        let mut diag = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            // Smallest nonzero entry in the remaining block as pivot.
            let mut best: Option<(usize, usize)> = None;
            for (r, row) in a.iter().enumerate().skip(t) {
                for (c, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(br, bc)| x.abs() < a[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else { break };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            loop {
                let p = a[t][t];
                let mut dirty = false;
                for r in t + 1..rows {
                    let q = a[r][t] / p;
                    if q != 0 {
                        for c in t..cols {
                            a[r][c] -= q * a[t][c];
                        }
                    }
                    dirty |= a[r][t] != 0;
                }
                for c in t + 1..cols {
                    let q = a[t][c] / p;
                    if q != 0 {
                        for row in a.iter_mut().skip(t) {
                            row[c] -= q * row[t];
                        }
                    }
                    dirty |= a[t][c] != 0;
                }
                if !dirty {
                    // Divisibility: fold in any entry the pivot does not divide.
                    let bad = (t + 1..rows).find_map(|r| (t + 1..cols).find(|&c| a[r][c] % p != 0).map(|c| (r, c)));
                    match bad {
                        None => break,
                        Some((r, _)) => {
                            for c in t..cols {
                                a[t][c] += a[r][c];
                            }
                            continue;
                        }
                    }
                }
                // Move the smallest remainder into the pivot position.
                let mut best = (t, t);
                for r in t..rows {
                    if a[r][t] != 0 && a[r][t].abs() < a[best.0][best.1].abs() {
                        best = (r, t);
                    }
                }
                for c in t..cols {
                    if a[t][c] != 0 && a[t][c].abs() < a[best.0][best.1].abs() {
                        best = (t, c);
                    }
                }
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
            diag.push(a[t][t].abs() as i64);
            t += 1;
        }
        diag
    }

    /// Reduction of an integer matrix modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Matrix, CompletionError> {
        let ring = Ring::fp(p)?;
        let entries = self.entries.iter().map(|&x| ring.reduce(x)).collect();
        Ok(Matrix { ring, rows: self.rows, cols: self.cols, entries })
    }
}
