//! The Grothendieck ring of `Ver_p`.
//!
//! Simples are `L_1, …, L_{p-1}`, all self-dual, with the truncated
//! Clebsch–Gordan fusion rule. [`jordan`] realizes the same ring as the
//! semisimplification of `Rep k[t]/(t^p)` and is used as an independent
//! oracle for [`VerpObject::fuse`].

pub mod jordan;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::{check_same, Prime};
use crate::qcyclo::{qint, CycNum};

pub use jordan::{ext_power_jordan, sym_power_jordan, tensor_jordan, JordanModule};

/// A finite direct sum of simples of `Ver_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawObject", into = "RawObject")]
pub struct VerpObject {
    p: Prime,
    /// `mult[k - 1]` is the multiplicity of `L_k`.
    mult: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawObject {
    p: Prime,
    mult: Vec<u64>,
}

impl TryFrom<RawObject> for VerpObject {
    type Error = Error;
    fn try_from(r: RawObject) -> Result<Self> {
        VerpObject::from_mults(r.p, r.mult)
    }
}

impl From<VerpObject> for RawObject {
    fn from(o: VerpObject) -> Self {
        RawObject { p: o.p, mult: o.mult }
    }
}

impl fmt::Display for VerpObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.iter().map(|(k, m)| if m == 1 { format!("L{k}") } else { format!("L{k}^{m}") }).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl VerpObject {
    pub fn zero(p: Prime) -> Self {
        VerpObject { p, mult: vec![0; p.as_usize() - 1] }
    }

    pub fn unit(p: Prime) -> Self {
        Self::simple(p, 1).expect("L_1 always exists")
    }

    /// The simple object `L_k`, `1 <= k <= p - 1`.
    pub fn simple(p: Prime, k: usize) -> Result<Self> {
        Self::check_label(p, k)?;
        let mut o = Self::zero(p);
        o.mult[k - 1] = 1;
        Ok(o)
    }

    pub fn from_mults(p: Prime, mult: Vec<u64>) -> Result<Self> {
        if mult.len() != p.as_usize() - 1 {
            return Err(Error::invalid(format!(
                "expected {} multiplicities for p = {p}, got {}",
                p.as_usize() - 1,
                mult.len()
            )));
        }
        Ok(VerpObject { p, mult })
    }

    /// Build from `(label, multiplicity)` pairs; repeated labels accumulate.
    pub fn from_terms(p: Prime, terms: impl IntoIterator<Item = (usize, u64)>) -> Result<Self> {
        let mut o = Self::zero(p);
        for (k, m) in terms {
            Self::check_label(p, k)?;
            o.mult[k - 1] += m;
        }
        Ok(o)
    }

    fn check_label(p: Prime, k: usize) -> Result<()> {
        if k == 0 || k >= p.as_usize() {
            return Err(Error::OutOfRange { index: k as i64, lo: 1, hi: p.as_i64() - 1 });
        }
        Ok(())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn mults(&self) -> &[u64] {
        &self.mult
    }

    /// Multiplicity of `L_k`; zero for labels outside `1..p`.
    pub fn multiplicity(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.mult.get(k - 1).copied().unwrap_or(0)
    }

    /// Nonzero `(label, multiplicity)` pairs in increasing label order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, &m)| (i + 1, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn direct_sum(&self, other: &VerpObject) -> Result<VerpObject> {
        check_same(self.p, other.p)?;
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        Ok(VerpObject { p: self.p, mult })
    }

    pub fn scale(&self, s: u64) -> VerpObject {
        VerpObject { p: self.p, mult: self.mult.iter().map(|m| m * s).collect() }
    }

    /// Tensor product, bilinear extension of the truncated Clebsch–Gordan
    /// rule `L_m ⊗ L_n = ⊕_{i=1}^{min(m,n,p-m,p-n)} L_{|m-n|+2i-1}`.
    pub fn fuse(&self, other: &VerpObject) -> Result<VerpObject> {
        check_same(self.p, other.p)?;
        let p = self.p.as_usize();
        let mut out = Self::zero(self.p);
        for (m, a) in self.iter() {
            for (n, b) in other.iter() {
                let top = m.min(n).min(p - m).min(p - n);
                let base = m.abs_diff(n);
                for i in 1..=top {
                    out.mult[base + 2 * i - 2] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// All simples are self-dual.
    pub fn dual(&self) -> VerpObject {
        self.clone()
    }

    /// The Frobenius twist keeps the unit-isotypic part and kills
    /// `L_2, …, L_{p-1}`.
    pub fn frobenius_twist(&self) -> VerpObject {
        let mut out = Self::zero(self.p);
        out.mult[0] = self.mult[0];
        out
    }

    /// `Σ mult[k] · [k]` in the cyclotomic field.
    pub fn qdim(&self) -> CycNum {
        self.iter().fold(CycNum::zero(self.p), |acc, (k, m)| {
            let q = qint(k as i64, self.p).expect("labels are non-negative");
            acc.add(&q.scale_int(m as i64)).expect("same prime")
        })
    }

    /// Categorical dimension, `Σ mult[k] · k mod p`.
    pub fn fpdim(&self) -> u32 {
        let p = self.p.get() as u64;
        (self.iter().fold(0u64, |acc, (k, m)| (acc + (m % p) * k as u64) % p)) as u32
    }

    /// Integer dimension of the Jordan-model lift, `Σ mult[k] · k`.
    pub fn underlying_dim(&self) -> u64 {
        self.iter().map(|(k, m)| k as u64 * m).sum()
    }

    /// Length, `Σ mult[k]`.
    pub fn length(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn unit_multiplicity(&self) -> u64 {
        self.mult[0]
    }

    /// The object with its unit-isotypic part removed.
    pub fn without_unit(&self) -> VerpObject {
        let mut out = self.clone();
        out.mult[0] = 0;
        out
    }

    /// Split along `Ver_p = Ver_p^+ ⊠ sVec`.
    ///
    /// `L_k` with `k` odd is even and already in the plus part; for `k` even,
    /// `L_k = L_{p-k} ⊗ L_{p-1}` with `L_{p-k}` in the plus part.
    pub fn split_plus_super(&self) -> PlusSuperSplit {
        let p = self.p.as_usize();
        let mut even = Self::zero(self.p);
        let mut odd = Self::zero(self.p);
        for (k, m) in self.iter() {
            if k % 2 == 1 {
                even.mult[k - 1] += m;
            } else {
                odd.mult[p - k - 1] += m;
            }
        }
        PlusSuperSplit { even, odd }
    }

    /// Whether every summand lies in `Ver_p^+`.
    pub fn is_plus(&self) -> bool {
        self.iter().all(|(k, _)| k % 2 == 1)
    }

    /// Lift to the Jordan model: `L_k ↦ J_k`.
    pub fn lift(&self) -> JordanModule {
        let blocks = self.iter().flat_map(|(k, m)| std::iter::repeat_n(k, m as usize)).collect();
        JordanModule::new(self.p, blocks).expect("labels below p are valid block sizes")
    }
}

/// Result of [`VerpObject::split_plus_super`]: the object equals
/// `even ⊕ (odd ⊗ L_{p-1})`, with both parts supported on odd labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlusSuperSplit {
    pub even: VerpObject,
    pub odd: VerpObject,
}

impl PlusSuperSplit {
    pub fn reassemble(&self) -> VerpObject {
        let p = self.even.p;
        let sign = VerpObject::simple(p, p.as_usize() - 1).expect("p - 1 >= 1");
        let odd = self.odd.fuse(&sign).expect("same prime");
        self.even.direct_sum(&odd).expect("same prime")
    }
}

/// Semisimplification `Rep k[t]/(t^p) -> Ver_p`: `J_k ↦ L_k` for `k < p`,
/// `J_p ↦ 0`.
pub fn semisimplify(a: &JordanModule) -> VerpObject {
    let p = a.prime();
    let mut out = VerpObject::zero(p);
    for &s in a.blocks() {
        if s < p.as_usize() {
            out.mult[s - 1] += 1;
        }
    }
    out
}

/// `S^d(L_k)` for `d = 0, 1, …` up to (excluding) the first zero, via the
/// Jordan model.
pub fn sym_powers_of_simple(p: Prime, k: usize) -> Result<Vec<VerpObject>> {
    let block = JordanModule::block(p, k)?;
    VerpObject::check_label(p, k)?;
    if k == 1 {
        return Err(Error::invalid("the symmetric algebra of the unit object is infinite"));
    }
    let mut out = Vec::new();
    for d in 0..p.as_usize() {
        let s = semisimplify(&sym_power_jordan(&block, d)?);
        if s.is_zero() {
            return Ok(out);
        }
        out.push(s);
    }
    // S^{p-1}(L_k) nonzero would contradict S^p(L_k) = 0 for k >= 2; degrees
    // >= p are not computed by this model.
    Err(Error::Unsupported(format!(
        "S^d(L_{k}) nonzero up to degree p - 1 = {}; degree p is outside the model",
        p.get() - 1
    )))
}

/// Degreewise symmetric algebra `S^0(a), S^1(a), …` up to the last nonzero
/// degree. Requires `a` to have no unit-isotypic part.
pub fn sym_algebra_dims(a: &VerpObject) -> Result<Vec<VerpObject>> {
    if a.unit_multiplicity() != 0 {
        return Err(Error::invalid("object has a unit summand; its symmetric algebra is infinite"));
    }
    let p = a.p;
    let mut acc = vec![VerpObject::unit(p)];
    for (k, m) in a.iter() {
        let single = sym_powers_of_simple(p, k)?;
        for _ in 0..m {
            acc = convolve(&acc, &single)?;
        }
    }
    Ok(acc)
}

/// `S(A ⊕ B)` from `S(A)` and `S(B)`: degree `d` is `⊕_{a+b=d} S^a(A) ⊗ S^b(B)`.
pub fn convolve(a: &[VerpObject], b: &[VerpObject]) -> Result<Vec<VerpObject>> {
    let Some(first) = a.first().or(b.first()) else {
        return Ok(Vec::new());
    };
    let p = first.p;
    let len = (a.len() + b.len()).saturating_sub(1);
    let mut out = vec![VerpObject::zero(p); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].direct_sum(&x.fuse(y)?)?;
        }
    }
    while out.last().is_some_and(VerpObject::is_zero) {
        out.pop();
    }
    Ok(out)
}
