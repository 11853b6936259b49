//! Bit-vector linear algebra over `F₂` and the classical monad resolution
//! of `T = P` (subsets with symmetric difference) written with bitmasks.
#![allow(dead_code)]

/// A vector of `F₂^n` as packed words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bits(pub Vec<u64>);

impl Bits {
    pub fn zero(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut b = Self::zero(n);
        b.flip(i);
        b
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn xor(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn lowest(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[Bits]) -> usize {
    let mut basis: Vec<(usize, Bits)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (p, b) in &basis {
            if v.get(*p) {
                v.xor(b);
            }
        }
        if let Some(p) = v.lowest() {
            for (_, b) in basis.iter_mut() {
                if b.get(p) {
                    b.xor(&v);
                }
            }
            basis.push((p, v));
        }
    }
    basis.len()
}

/// Columns of a linear map given by the images of basis vectors.
pub fn columns(images: &[Vec<usize>], rows: usize) -> Vec<Bits> {
    images
        .iter()
        .map(|img| {
            let mut b = Bits::zero(rows);
            for &i in img {
                b.flip(i);
            }
            b
        })
        .collect()
}

/// Sum of linearized functions `source -> target`.
pub fn sum_of_functions(fs: &[Vec<usize>], target: usize) -> Vec<Bits> {
    let n = fs[0].len();
    (0..n)
        .map(|c| {
            let mut b = Bits::zero(target);
            for f in fs {
                b.flip(f[c]);
            }
            b
        })
        .collect()
}

/// `η_Y : y ↦ {y}`.
pub fn eta(y: usize) -> Vec<usize> {
    (0..y).map(|i| 1 << i).collect()
}

/// `T f` for `f : Y -> Z`: a subset goes to the symmetric difference of
/// the singletons of its image.
pub fn t_fn(f: &[usize]) -> Vec<usize> {
    (0..1usize << f.len())
        .map(|mask| (0..f.len()).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc ^ (1 << f[i])))
        .collect()
}

/// `μ_Y : TTY -> TY`, the symmetric difference of a set of subsets.
pub fn mu(y: usize) -> Vec<usize> {
    let ty = 1usize << y;
    (0..1usize << ty).map(|mask| (0..ty).filter(|s| mask >> s & 1 == 1).fold(0, |acc, s| acc ^ s)).collect()
}

pub fn power(f: Vec<usize>, times: usize) -> Vec<usize> {
    (0..times).fold(f, |g, _| t_fn(&g))
}

/// `|T^k X|` for `|X| = x`.
pub fn tower(x: usize, k: usize) -> usize {
    (0..k).fold(x, |n, _| 1 << n)
}

/// Cofaces `T^i η T^{n+1-i} : T^{n+1} X -> T^{n+2} X`, `i = 0..=n+1`.
pub fn cofaces(x: usize, n: usize) -> Vec<Vec<usize>> {
    (0..=n + 1).map(|i| power(eta(tower(x, n + 1 - i)), i)).collect()
}

/// Codegeneracies `T^j μ T^{n-1-j} : T^{n+1} X -> T^n X`, `j = 0..n`.
pub fn codegeneracies(x: usize, n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|j| power(mu(tower(x, n - 1 - j)), j)).collect()
}

/// Independently written Amitsur cofaces for dual numbers: words of `s+1`
/// bits (1 = `t`), the unit inserted as a 0 bit.
pub fn amitsur_cofaces(s: usize, v: usize) -> Vec<Vec<usize>> {
    let n = (1usize << (s + 1)) * v;
    (0..=s + 1)
        .map(|i| {
            (0..n)
                .map(|col| {
                    let (w, x) = (col / v, col % v);
                    let split = s + 1 - i;
                    let longer = ((w >> split) << (split + 1)) | (w & ((1 << split) - 1));
                    longer * v + x
                })
                .collect()
        })
        .collect()
}

/// Normalized dims and page `E_2` of the one-row complex, by quotienting out
/// the images of `dⁱ` for `i ≥ 1`.
pub fn one_row_pages(levels: &[usize], cofaces: &dyn Fn(usize) -> Vec<Vec<usize>>) -> (Vec<usize>, Vec<usize>) {
    let top = levels.len() - 1;
    let degenerate = |s: usize| -> Vec<Bits> {
        if s == 0 {
            return Vec::new();
        }
        cofaces(s - 1)[1..].iter().flat_map(|f| columns(&f.iter().map(|&x| vec![x]).collect::<Vec<_>>(), levels[s])).collect()
    };
    let moore = |s: usize| sum_of_functions(&cofaces(s), levels[s + 1]);
    let e1: Vec<usize> = (0..=top).map(|s| levels[s] - rank(&degenerate(s))).collect();
    let e2 = (0..=top)
        .map(|s| {
            let den = degenerate(s);
            let base = rank(&den);
            let incoming = if s == 0 { 0 } else { rank(&[den.clone(), moore(s - 1)].concat()) - base };
            let outgoing = if s == top {
                0
            } else {
                let next = degenerate(s + 1);
                let kept = rank(&next);
                let span = |vs: &[Bits]| rank(&[next.clone(), vs.to_vec()].concat()) - kept;
                // Rank of the induced map on C/D: image of C^s modulo D^{s+1}
                // minus the part coming from D^s.
                span(&moore(s)) - span(&moore_on(&den, &moore(s)))
            };
            e1[s] - incoming - outgoing
        })
        .collect();
    (e1, e2)
}

/// Images under `d` (given by columns) of the vectors `vs`.
pub fn moore_on(vs: &[Bits], d: &[Bits]) -> Vec<Bits> {
    vs.iter()
        .map(|v| {
            let mut acc = Bits::zero(d.first().map_or(1, |c| c.0.len() * 64));
            acc.0.truncate(d.first().map_or(1, |c| c.0.len()));
            for (i, c) in d.iter().enumerate() {
                if v.get(i) {
                    for (a, b) in acc.0.iter_mut().zip(&c.0) {
                        *a ^= b;
                    }
                }
            }
            acc
        })
        .collect()
}
