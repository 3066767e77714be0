//! Dense linear algebra over the prime field `F_p`.
//!
//! Everything here is deterministic Gaussian elimination on `u32` residues.
//! Matrix sizes in this crate stay in the low thousands, so no attempt is
//! made at blocking or sparse storage.

use std::fmt;

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    add(a, p - b % p, p)
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse; `a` must be nonzero mod `p`.
pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow(a, (p - 2) as u64, p)
}

/// Reduce a signed integer into `[0, p)`.
#[inline]
pub fn reduce(x: i128, p: u32) -> u32 {
    x.rem_euclid(p as i128) as u32
}

/// Generalized binomial coefficient `C(x, k)` for integer `x` and `k >= 0`,
/// reduced mod `p`. The exact integer value is formed first.
pub fn binom_mod(x: i64, k: u32, p: u32) -> u32 {
    reduce(binom(x, k), p)
}

/// Exact generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`.
///
/// Panics on `i128` overflow, which does not happen for the
/// `|x| <= 10^4, k <= 200`-ish ranges used by the oracles.
pub fn binom(x: i64, k: u32) -> i128 {
    let mut c: i128 = 1;
    for j in 0..k as i128 {
        c = c.checked_mul(x as i128 - j).expect("binomial overflow");
        c /= j + 1;
    }
    c
}

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x % p);
            }
        }
        m
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    #[inline]
    pub fn add_to(&mut self, r: usize, c: usize, v: u32) {
        let i = r * self.cols + c;
        self.data[i] = add(self.data[i], v, self.p);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, c) as u64) % p;
                }
            }
            for (c, &x) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = x as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = add(*x, y, self.p);
        }
        out
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = sub(*x, y, self.p);
        }
        out
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = mul(*x, s, self.p);
        }
        out
    }

    pub fn pow(&self, e: u32) -> FpMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = FpMatrix::identity(self.p, self.rows);
        for _ in 0..e {
            acc = self.mul(&acc);
        }
        acc
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut s = 0u64;
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        s = (s + self.get(r, c) as u64 * x as u64) % p;
                    }
                }
                s as u32
            })
            .collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FpMatrix) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.row_reduce().len()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if pr != lead {
                for k in 0..self.cols {
                    self.data.swap(pr * self.cols + k, lead * self.cols + k);
                }
            }
            let s = inv(self.get(lead, c), p);
            for k in 0..self.cols {
                let v = mul(self.get(lead, k), s, p);
                self.set(lead, k, v);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let f = self.get(r, c);
                if f == 0 {
                    continue;
                }
                for k in 0..self.cols {
                    let v = sub(self.get(r, k), mul(f, self.get(lead, k), p), p);
                    self.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    /// Basis of the right null space `{ v : M v = 0 }`.
    pub fn null_space(&self) -> Vec<Vec<u32>> {
        let mut work = self.clone();
        let pivots = work.row_reduce();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = sub(0, work.get(r, fc), p);
                }
                v
            })
            .collect()
    }
}

/// A subspace of `F_p^dim`, kept as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    p: u32,
    dim: usize,
    // (pivot column, normalized basis vector); each vector has a 1 at its
    // pivot and zeros at every other basis vector's pivot.
    basis: Vec<(usize, Vec<u32>)>,
}

impl Subspace {
    pub fn zero(p: u32, dim: usize) -> Self {
        Subspace { p, dim, basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &[u32]> {
        self.basis.iter().map(|(_, v)| v.as_slice())
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.basis.iter().map(|(c, _)| *c).collect();
        v.sort_unstable();
        v
    }

    /// Reduce `v` modulo the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut w = v.to_vec();
        for (pc, b) in &self.basis {
            let f = w[*pc];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(b) {
                    *x = sub(*x, mul(f, y, p), p);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Add `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim);
        let p = self.p;
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(w[pc], p);
        w.iter_mut().for_each(|x| *x = mul(*x, s, p));
        for (_, b) in self.basis.iter_mut() {
            let f = b[pc];
            if f != 0 {
                for (x, &y) in b.iter_mut().zip(&w) {
                    *x = sub(*x, mul(f, y, p), p);
                }
            }
        }
        self.basis.push((pc, w));
        true
    }

    /// Smallest subspace containing `self` and stable under every operator.
    pub fn close_under(&mut self, ops: &[&FpMatrix]) {
        let mut queue: Vec<Vec<u32>> = self.basis.iter().map(|(_, v)| v.clone()).collect();
        while let Some(v) = queue.pop() {
            for op in ops {
                let w = op.apply(&v);
                if self.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
}
