//! Brute-force `SL(2)` modules over `F_p`: the restricted enveloping algebra
//! at level one and the divided-power algebra of the second Frobenius kernel.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{self, FpMatrix, Subspace};
use crate::prime::Prime;

/// A module for `u(sl_2)` in a basis of weight vectors.
#[derive(Debug, Clone, Serialize)]
pub struct SL2Module {
    p: u32,
    highest_weight: i64,
    /// Integer weight of each basis vector.
    weights: Vec<i64>,
    #[serde(skip)]
    e: FpMatrix,
    #[serde(skip)]
    f: FpMatrix,
    #[serde(skip)]
    h: FpMatrix,
}

impl SL2Module {
    /// Checks `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`, `e^p = f^p = 0` and
    /// `h^p = h`.
    pub fn new(p: Prime, highest_weight: i64, weights: Vec<i64>, e: FpMatrix, f: FpMatrix) -> Result<Self> {
        let q = p.get();
        let d = weights.len();
        for m in [&e, &f] {
            if m.rows() != d || m.cols() != d || m.p() != q {
                return Err(Error::Mismatch(format!(
                    "operator is {}x{} mod {}, module has dim {d}",
                    m.rows(),
                    m.cols(),
                    m.p()
                )));
            }
        }
        let mut h = FpMatrix::zeros(q, d, d);
        for (i, &w) in weights.iter().enumerate() {
            h.set(i, i, fp::reduce(w as i128, q));
        }
        let m = SL2Module { p: q, highest_weight, weights, e, f, h };
        m.check_relations()?;
        Ok(m)
    }

    fn check_relations(&self) -> Result<()> {
        let (e, f, h) = (&self.e, &self.f, &self.h);
        let comm = |a: &FpMatrix, b: &FpMatrix| a.mul(b).sub(&b.mul(a));
        let ok = comm(h, e) == e.scale(2)
            && comm(h, f) == f.scale(self.p - 2)
            && comm(e, f) == *h
            && e.pow(self.p).is_zero()
            && f.pow(self.p).is_zero()
            && h.pow(self.p) == *h;
        if ok {
            Ok(())
        } else {
            Err(Error::Mismatch("sl2 relations fail".into()))
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn highest_weight(&self) -> i64 {
        self.highest_weight
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn e(&self) -> &FpMatrix {
        &self.e
    }

    pub fn f(&self) -> &FpMatrix {
        &self.f
    }

    pub fn h(&self) -> &FpMatrix {
        &self.h
    }

    /// `weight -> multiplicity`.
    pub fn character(&self) -> BTreeMap<i64, u64> {
        weight_multiset(&self.weights)
    }

    pub fn direct_sum(&self, other: &SL2Module) -> Result<SL2Module> {
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        SL2Module::new(
            Prime::new(self.p)?,
            self.highest_weight.max(other.highest_weight),
            weights,
            self.e.direct_sum(&other.e),
            self.f.direct_sum(&other.f),
        )
    }

    /// `e^(i) = e^i / i!` for `i < p`.
    pub fn divided_e(&self, i: u32) -> FpMatrix {
        divided(&self.e, i, self.p)
    }

    pub fn divided_f(&self, i: u32) -> FpMatrix {
        divided(&self.f, i, self.p)
    }
}

fn divided(m: &FpMatrix, i: u32, p: u32) -> FpMatrix {
    assert!(i < p, "divided power e^({i}) needs i < p");
    let fact = (1..=i).fold(1u32, |acc, k| fp::mul(acc, k, p));
    m.pow(i).scale(fp::inv(fact, p))
}

fn weight_multiset(weights: &[i64]) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for &w in weights {
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// The `p`-dimensional baby Verma module `Z(r)` with basis `f^i v`.
pub fn baby_verma_sl2(p: Prime, r: u32) -> Result<SL2Module> {
    let q = p.get();
    if r >= q {
        return Err(Error::OutOfRange { index: r as i64, lo: 0, hi: q as i64 - 1 });
    }
    let d = q as usize;
    let mut e = FpMatrix::zeros(q, d, d);
    let mut f = FpMatrix::zeros(q, d, d);
    for i in 1..d {
        let c = (i as i128) * (r as i128 - i as i128 + 1);
        e.set(i - 1, i, fp::reduce(c, q));
        f.set(i, i - 1, 1);
    }
    let weights = (0..d as i64).map(|i| r as i64 - 2 * i).collect();
    SL2Module::new(p, r as i64, weights, e, f)
}

/// Largest proper submodule of a highest-weight module whose basis vectors
/// are weight vectors with pairwise distinct weights, vector 0 on top.
/// Grows the submodule by singular vectors of the quotient until none
/// remain.
fn maximal_submodule(dim: usize, p: u32, raising: &[&FpMatrix], all: &[&FpMatrix]) -> Subspace {
    let mut sub = Subspace::zero(p, dim);
    loop {
        let mut grew = false;
        for i in 1..dim {
            let mut v = vec![0u32; dim];
            v[i] = 1;
            if sub.contains(&v) {
                continue;
            }
            if raising.iter().all(|op| sub.contains(&op.apply(&v))) {
                sub.insert(&v);
                sub.close_under(all);
                grew = true;
            }
        }
        if !grew {
            return sub;
        }
    }
}

/// Restrict operators to the quotient by `sub`, using the non-pivot basis
/// vectors as a basis of the quotient.
fn quotient(sub: &Subspace, ops: &[&FpMatrix]) -> (Vec<usize>, Vec<FpMatrix>) {
    let dim = sub.ambient_dim();
    let pivots = sub.pivots();
    let keep: Vec<usize> = (0..dim).filter(|c| pivots.binary_search(c).is_err()).collect();
    let p = ops.first().map_or(2, |m| m.p());
    let mats = ops
        .iter()
        .map(|op| {
            let mut m = FpMatrix::zeros(p, keep.len(), keep.len());
            for (b, &cb) in keep.iter().enumerate() {
                let mut v = vec![0u32; dim];
                v[cb] = 1;
                let w = sub.reduce(&op.apply(&v));
                for (a, &ca) in keep.iter().enumerate() {
                    m.set(a, b, w[ca]);
                }
            }
            m
        })
        .collect();
    (keep, mats)
}

/// `L(r)` as the quotient of `Z(r)` by its maximal submodule.
pub fn restricted_simple_sl2(p: Prime, r: u32) -> Result<SL2Module> {
    let z = baby_verma_sl2(p, r)?;
    let sub = maximal_submodule(z.dim(), p.get(), &[&z.e], &[&z.e, &z.f]);
    let (keep, mats) = quotient(&sub, &[&z.e, &z.f]);
    let weights = keep.iter().map(|&i| z.weights[i]).collect();
    let mut it = mats.into_iter();
    let (e, f) = (it.next().expect("e"), it.next().expect("f"));
    SL2Module::new(p, r as i64, weights, e, f)
}

/// Whether a module is simple: the vectors killed by every raising operator
/// form a line, and that line generates the module.
fn is_simple(dim: usize, p: u32, raising: &[&FpMatrix], all: &[&FpMatrix]) -> bool {
    if dim == 0 {
        return false;
    }
    let mut stacked = FpMatrix::zeros(p, dim * raising.len(), dim);
    for (k, op) in raising.iter().enumerate() {
        for r in 0..dim {
            for c in 0..dim {
                stacked.set(k * dim + r, c, op.get(r, c));
            }
        }
    }
    let kernel = stacked.null_space();
    if kernel.len() != 1 {
        return false;
    }
    let mut span = Subspace::zero(p, dim);
    span.insert(&kernel[0]);
    span.close_under(all);
    span.dim() == dim
}

pub fn u_simplicity_check(m: &SL2Module) -> bool {
    is_simple(m.dim(), m.p, &[&m.e], &[&m.e, &m.f, &m.h])
}

/// A module for the divided-power algebra `Dist(SL(2)_(2))`, given by the
/// operators `e^(i)`, `f^(i)` for `i` in `1..p` and `i = p`.
#[derive(Debug, Clone, Serialize)]
pub struct Dist2Module {
    p: u32,
    highest_weight: i64,
    weights: Vec<i64>,
    #[serde(skip)]
    raise: Vec<FpMatrix>,
    #[serde(skip)]
    lower: Vec<FpMatrix>,
}

impl Dist2Module {
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn highest_weight(&self) -> i64 {
        self.highest_weight
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn character(&self) -> BTreeMap<i64, u64> {
        weight_multiset(&self.weights)
    }

    /// `e^(i)` for `i` in `1..=p`.
    pub fn e_divided(&self, i: u32) -> &FpMatrix {
        &self.raise[i as usize - 1]
    }

    pub fn f_divided(&self, i: u32) -> &FpMatrix {
        &self.lower[i as usize - 1]
    }

    pub fn is_simple(&self) -> bool {
        let raise: Vec<&FpMatrix> = self.raise.iter().collect();
        let all: Vec<&FpMatrix> = self.raise.iter().chain(&self.lower).collect();
        is_simple(self.dim(), self.p, &raise, &all)
    }
}

/// The `p²`-dimensional level-two baby Verma module with basis `f^(i) v`:
/// `e^(a) f^(b) v = C(λ - b + a, a) f^(b-a) v` and
/// `f^(a) f^(b) v = C(a + b, a) f^(a+b) v`.
pub fn dist2_baby_verma(p: Prime, lambda: u32) -> Result<Dist2Module> {
    let q = p.get();
    let d = (q * q) as usize;
    if lambda as usize >= d {
        return Err(Error::OutOfRange { index: lambda as i64, lo: 0, hi: d as i64 - 1 });
    }
    let mut raise = Vec::with_capacity(q as usize);
    let mut lower = Vec::with_capacity(q as usize);
    for a in 1..=q as usize {
        let mut e = FpMatrix::zeros(q, d, d);
        let mut f = FpMatrix::zeros(q, d, d);
        for b in 0..d {
            if b >= a {
                let x = lambda as i64 - b as i64 + a as i64;
                e.set(b - a, b, fp::binom_mod(x, a as u32, q));
            }
            if a + b < d {
                f.set(a + b, b, fp::binom_mod((a + b) as i64, a as u32, q));
            }
        }
        raise.push(e);
        lower.push(f);
    }
    let weights = (0..d as i64).map(|i| lambda as i64 - 2 * i).collect();
    Ok(Dist2Module { p: q, highest_weight: lambda as i64, weights, raise, lower })
}

/// The simple module `L(λ)` of the second Frobenius kernel, `0 <= λ < p²`.
pub fn dist2_simple_sl2(p: Prime, lambda: u32) -> Result<Dist2Module> {
    let z = dist2_baby_verma(p, lambda)?;
    let raise: Vec<&FpMatrix> = z.raise.iter().collect();
    let all: Vec<&FpMatrix> = z.raise.iter().chain(&z.lower).collect();
    let sub = maximal_submodule(z.dim(), z.p, &raise, &all);
    let (keep, mats) = quotient(&sub, &all);
    let weights = keep.iter().map(|&i| z.weights[i]).collect();
    let n = z.raise.len();
    let mut mats = mats.into_iter();
    let raise = mats.by_ref().take(n).collect();
    let lower = mats.collect();
    Ok(Dist2Module { p: z.p, highest_weight: lambda as i64, weights, raise, lower })
}

/// `L(r) ⊗ L(s)^[1]` as a level-two module: `e^(i)` for `i < p` acts on the
/// left factor, `e^(p)` acts as `e` on the twisted factor.
pub fn steinberg_tensor(p: Prime, r: u32, s: u32) -> Result<Dist2Module> {
    let q = p.get();
    let left = restricted_simple_sl2(p, r)?;
    let right = restricted_simple_sl2(p, s)?;
    let id_l = FpMatrix::identity(q, left.dim());
    let id_r = FpMatrix::identity(q, right.dim());
    let mut raise = Vec::with_capacity(q as usize);
    let mut lower = Vec::with_capacity(q as usize);
    for i in 1..q {
        raise.push(kron(&left.divided_e(i), &id_r));
        lower.push(kron(&left.divided_f(i), &id_r));
    }
    raise.push(kron(&id_l, &right.e));
    lower.push(kron(&id_l, &right.f));
    let mut weights = Vec::with_capacity(left.dim() * right.dim());
    for &a in &left.weights {
        for &b in &right.weights {
            weights.push(a + q as i64 * b);
        }
    }
    Ok(Dist2Module { p: q, highest_weight: r as i64 + q as i64 * s as i64, weights, raise, lower })
}

fn kron(a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    let p = a.p();
    let (br, bc) = (b.rows(), b.cols());
    let mut out = FpMatrix::zeros(p, a.rows() * br, a.cols() * bc);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x == 0 {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out.set(i * br + k, j * bc + l, fp::mul(x, b.get(k, l), p));
                }
            }
        }
    }
    out
}

/// Compare `L(r) ⊗ L(s)^[1]` with the simple `L(r + p s)` built from the
/// level-two baby Verma: simplicity, dimension and character.
pub fn steinberg_sl2_check(p: Prime, r: u32, s: u32) -> Result<bool> {
    let q = p.get();
    if r >= q || s >= q {
        return Err(Error::invalid(format!("({r}, {s}) must both be below p = {q}")));
    }
    let lhs = steinberg_tensor(p, r, s)?;
    let rhs = dist2_simple_sl2(p, r + q * s)?;
    Ok(lhs.is_simple() && lhs.dim() == rhs.dim() && lhs.character() == rhs.character())
}
