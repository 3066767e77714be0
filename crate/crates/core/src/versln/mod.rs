//! The fusion ring of `Ver_p(SL(n))`.
//!
//! Simples are partitions in the `(p - n) × (n - 1)` box. Fusion
//! coefficients come from Kac–Walton folding: expand the classical product
//! with Littlewood–Richardson coefficients, then move each `ν + ρ` into the
//! fundamental alcove at level `p` with the affine Weyl group, keeping track
//! of the sign and discarding weights fixed by a reflection.

pub mod cache;
pub mod lr;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::qcyclo::{qint, CycNum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct SLnParams {
    p: Prime,
    n: u32,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
struct RawParams {
    p: Prime,
    n: u32,
}

impl TryFrom<RawParams> for SLnParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        SLnParams::new(r.p, r.n)
    }
}

impl From<SLnParams> for RawParams {
    fn from(s: SLnParams) -> Self {
        RawParams { p: s.p, n: s.n }
    }
}

impl SLnParams {
    pub fn new(p: Prime, n: u32) -> Result<Self> {
        if n < 2 || n >= p.get() {
            return Err(Error::invalid(format!("SL({n}) needs 2 <= n < p = {p}")));
        }
        Ok(SLnParams { p, n })
    }

    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// `p - n`, the largest allowed first part.
    pub fn level(self) -> u32 {
        self.p.get() - self.n
    }

    /// Number of simples, `C(p - 1, n - 1)`.
    pub fn simple_count(self) -> u64 {
        binomial(self.p.get() as u64 - 1, self.n as u64 - 1)
    }
}

impl fmt::Display for SLnParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ver_{}(SL({}))", self.p, self.n)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A partition in the `(p - n) × (n - 1)` box, i.e. a simple of
/// `Ver_p(SL(n))`. Trailing zeros are stripped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAlcove", into = "RawAlcove")]
pub struct AlcoveWeight {
    params: SLnParams,
    parts: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawAlcove {
    params: SLnParams,
    parts: Vec<u32>,
}

impl TryFrom<RawAlcove> for AlcoveWeight {
    type Error = Error;
    fn try_from(r: RawAlcove) -> Result<Self> {
        AlcoveWeight::new(r.params, &r.parts)
    }
}

impl From<AlcoveWeight> for RawAlcove {
    fn from(w: AlcoveWeight) -> Self {
        RawAlcove { params: w.params, parts: w.parts }
    }
}

impl fmt::Display for AlcoveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl AlcoveWeight {
    pub fn new(params: SLnParams, parts: &[u32]) -> Result<Self> {
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.len() > params.n as usize - 1 {
            return Err(Error::invalid(format!("{parts:?} has more than n - 1 = {} parts", params.n - 1)));
        }
        if parts.first().is_some_and(|&a| a > params.level()) {
            return Err(Error::invalid(format!("{parts:?} has first part above p - n = {}", params.level())));
        }
        Ok(AlcoveWeight { params, parts })
    }

    pub fn empty(params: SLnParams) -> Self {
        AlcoveWeight { params, parts: Vec::new() }
    }

    /// The generator `(p - n)` of the invertible objects.
    pub fn generator(params: SLnParams) -> Self {
        AlcoveWeight { params, parts: vec![params.level()] }
    }

    pub fn params(&self) -> SLnParams {
        self.params
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `n`.
    fn padded(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.parts.iter().map(|&x| x as i64).collect();
        v.resize(self.params.n as usize, 0);
        v
    }

    /// Membership in `Ver_p^+(SL(n))`: `n` divides `|λ|`.
    pub fn is_plus(&self) -> bool {
        self.size().is_multiple_of(self.params.n)
    }

    /// Dual weight, `λ*_i = λ_1 - λ_{n+1-i}`.
    pub fn dual(&self) -> AlcoveWeight {
        let v = self.padded();
        let n = v.len();
        let parts: Vec<u32> = (0..n).map(|i| (v[0] - v[n - 1 - i]) as u32).collect();
        AlcoveWeight::new(self.params, &parts).expect("dual stays in the alcove")
    }

    /// Tensoring with the generator `(p - n)`: stack `(p - n)` on top of `λ`
    /// and delete full columns of height `n`.
    pub fn invertible_action(&self) -> AlcoveWeight {
        let n = self.params.n as usize;
        let mut stacked = Vec::with_capacity(n);
        stacked.push(self.params.level());
        stacked.extend_from_slice(&self.parts);
        stacked.resize(n, 0);
        let full_cols = stacked[n - 1];
        let parts: Vec<u32> = stacked.iter().map(|&x| x - full_cols).collect();
        AlcoveWeight::new(self.params, &parts).expect("stacking stays in the alcove")
    }

    /// `(j, σ)` with `σ` in the plus part and `invertible_action^j(σ) = λ`.
    pub fn pointed_plus_factorize(&self) -> (u32, AlcoveWeight) {
        let n = self.params.n;
        // the inverse of the action is its (n-1)-fold iterate
        let mut sigma = self.clone();
        for j in 0..n {
            if sigma.is_plus() {
                return (j, sigma);
            }
            for _ in 0..n - 1 {
                sigma = sigma.invertible_action();
            }
        }
        unreachable!("the size grading shifts by p mod n and gcd(p, n) = 1")
    }

    /// Quantum dimension by the q-Weyl formula
    /// `Π_{i<j} [λ_i - λ_j + j - i] / [j - i]`.
    pub fn qdim(&self) -> CycNum {
        let p = self.params.p;
        let v = self.padded();
        let n = v.len();
        let mut num = CycNum::one(p);
        let mut den = CycNum::one(p);
        for i in 0..n {
            for j in i + 1..n {
                let a = v[i] - v[j] + (j - i) as i64;
                num = num.mul(&qint(a, p).expect("positive")).expect("same prime");
                den = den.mul(&qint((j - i) as i64, p).expect("positive")).expect("same prime");
            }
        }
        let q = num.div(&den).expect("[k] != 0 for 0 < k < p");
        assert!(q.is_integral(), "q-Weyl quotient for {self} is not in Z[ζ]: internal error");
        q
    }
}

/// Enumerate the simples in a deterministic order: by size, then
/// lexicographically decreasing.
pub fn enumerate_simples(params: SLnParams) -> Vec<AlcoveWeight> {
    let rows = params.n as usize - 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn go(rows: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for a in 0..=bound {
            cur.push(a);
            go(rows, a, cur, out);
            cur.pop();
        }
    }
    go(rows, params.level(), &mut cur, &mut out);
    let mut ws: Vec<AlcoveWeight> =
        out.into_iter().map(|v| AlcoveWeight::new(params, &v).expect("in the box")).collect();
    ws.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    ws
}

/// A fusion product, `⊕ ν^{a_ν}` with all `a_ν >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawExpansion", into = "RawExpansion")]
pub struct FusionExpansion {
    params: SLnParams,
    terms: BTreeMap<AlcoveWeight, u64>,
}

#[derive(Serialize, Deserialize)]
struct RawExpansion {
    params: SLnParams,
    terms: Vec<(Vec<u32>, u64)>,
}

impl TryFrom<RawExpansion> for FusionExpansion {
    type Error = Error;
    fn try_from(r: RawExpansion) -> Result<Self> {
        let mut out = FusionExpansion::zero(r.params);
        for (parts, m) in r.terms {
            out.add_term(AlcoveWeight::new(r.params, &parts)?, m);
        }
        Ok(out)
    }
}

impl From<FusionExpansion> for RawExpansion {
    fn from(e: FusionExpansion) -> Self {
        let terms = e.terms.into_iter().map(|(w, m)| (w.parts, m)).collect();
        RawExpansion { params: e.params, terms }
    }
}

impl fmt::Display for FusionExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, &m)| if m == 1 { w.to_string() } else { format!("{m}·{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FusionExpansion {
    pub fn zero(params: SLnParams) -> Self {
        FusionExpansion { params, terms: BTreeMap::new() }
    }

    pub fn single(w: AlcoveWeight) -> Self {
        let params = w.params;
        FusionExpansion { params, terms: BTreeMap::from([(w, 1)]) }
    }

    pub fn params(&self) -> SLnParams {
        self.params
    }

    pub fn terms(&self) -> &BTreeMap<AlcoveWeight, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, w: &AlcoveWeight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: AlcoveWeight, m: u64) {
        if m > 0 {
            *self.terms.entry(w).or_insert(0) += m;
        }
    }

    /// Sum of multiplicities.
    pub fn length(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Bilinear extension of [`fuse_sln`].
    pub fn fuse(&self, other: &FusionExpansion) -> Result<FusionExpansion> {
        check_params(self.params, other.params)?;
        let mut out = FusionExpansion::zero(self.params);
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                for (c, mc) in fuse_sln(a, b)?.terms {
                    out.add_term(c, ma * mb * mc);
                }
            }
        }
        Ok(out)
    }

    pub fn qdim(&self) -> CycNum {
        let p = self.params.p;
        self.terms
            .iter()
            .fold(CycNum::zero(p), |acc, (w, &m)| acc.add(&w.qdim().scale_int(m as i64)).expect("same prime"))
    }
}

fn check_params(a: SLnParams, b: SLnParams) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("{a} vs {b}")))
    }
}

/// Fusion product of two simples of `Ver_p(SL(n))`, memoized.
pub fn fuse_sln(lambda: &AlcoveWeight, mu: &AlcoveWeight) -> Result<FusionExpansion> {
    check_params(lambda.params, mu.params)?;
    Ok(cache::global().get_or_compute(lambda, mu, || fuse_sln_uncached(lambda, mu)))
}

/// Fusion product without touching the memo cache.
pub fn fuse_sln_uncached(lambda: &AlcoveWeight, mu: &AlcoveWeight) -> FusionExpansion {
    let params = lambda.params;
    let n = params.n as usize;
    let p = params.p.as_i64();
    let classical = lr::lr_product(&lambda.parts, &mu.parts, n);
    let mut signed: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (nu, c) in classical {
        if let Some((parts, sign)) = fold_into_alcove(&nu, n, p) {
            *signed.entry(parts).or_insert(0) += sign * c as i64;
        }
    }
    let mut out = FusionExpansion::zero(params);
    for (parts, m) in signed {
        assert!(m >= 0, "negative fusion coefficient {m} for {parts:?}: internal error");
        if m > 0 {
            let w = AlcoveWeight::new(params, &parts).expect("folded weight lies in the alcove");
            out.add_term(w, m as u64);
        }
    }
    out
}

/// Move `ν + ρ` into the level-`p` fundamental alcove. Returns the alcove
/// partition (full columns removed) and the sign of the affine Weyl element,
/// or `None` if `ν + ρ` lies on a wall.
fn fold_into_alcove(nu: &[u32], n: usize, p: i64) -> Option<(Vec<u32>, i64)> {
    let mut v: Vec<i64> =
        (0..n).map(|i| nu.get(i).copied().unwrap_or(0) as i64 + (n - 1 - i) as i64).collect();
    let mut sign = 1i64;
    loop {
        sign *= sort_desc_with_sign(&mut v);
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let spread = v[0] - v[n - 1];
        if spread < p {
            break;
        }
        if spread == p {
            return None;
        }
        // affine reflection in the wall v_1 - v_n = p
        let (a, b) = (v[0], v[n - 1]);
        v[0] = b + p;
        v[n - 1] = a - p;
        sign = -sign;
    }
    let shift = v[n - 1];
    let parts: Vec<u32> = (0..n).map(|i| (v[i] - shift - (n - 1 - i) as i64) as u32).collect();
    let mut parts = parts;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Some((parts, sign))
}

/// Sort descending by insertion sort; returns the permutation sign.
fn sort_desc_with_sign(v: &mut [i64]) -> i64 {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verp::VerpObject;

    fn params(p: u32, n: u32) -> SLnParams {
        SLnParams::new(Prime::new(p).unwrap(), n).unwrap()
    }

    fn w(pp: SLnParams, parts: &[u32]) -> AlcoveWeight {
        AlcoveWeight::new(pp, parts).unwrap()
    }

    fn exp(pp: SLnParams, terms: &[(&[u32], u64)]) -> FusionExpansion {
        let mut e = FusionExpansion::zero(pp);
        for (parts, m) in terms {
            e.add_term(w(pp, parts), *m);
        }
        e
    }

    #[test]
    fn params_validation() {
        let p = Prime::new(5).unwrap();
        assert!(SLnParams::new(p, 1).is_err());
        assert!(SLnParams::new(p, 5).is_err());
        assert_eq!(SLnParams::new(p, 4).unwrap().level(), 1);
    }

    #[test]
    fn weight_validation() {
        let pp = params(5, 3);
        assert!(AlcoveWeight::new(pp, &[3]).is_err());
        assert!(AlcoveWeight::new(pp, &[1, 1, 1]).is_err());
        assert!(AlcoveWeight::new(pp, &[1, 2]).is_err());
        assert_eq!(w(pp, &[2, 0, 0]).parts(), &[2]);
    }

    #[test]
    fn enumeration_examples() {
        let list = |p, n| -> Vec<Vec<u32>> {
            enumerate_simples(params(p, n)).iter().map(|w| w.parts().to_vec()).collect()
        };
        assert_eq!(list(5, 2), vec![vec![], vec![1], vec![2], vec![3]]);
        assert_eq!(list(5, 3), vec![vec![], vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]);
        assert_eq!(list(7, 2).len(), 6);
        for (p, n) in [(5, 2), (5, 3), (5, 4), (7, 3), (7, 4), (11, 3), (13, 4)] {
            let pp = params(p, n);
            assert_eq!(list(p, n).len() as u64, pp.simple_count());
            let plus = enumerate_simples(pp).iter().filter(|w| w.is_plus()).count() as u64;
            assert_eq!(plus * n as u64, pp.simple_count());
        }
    }

    #[test]
    fn fusion_examples() {
        let p2 = params(5, 2);
        assert_eq!(fuse_sln(&w(p2, &[1]), &w(p2, &[1])).unwrap(), exp(p2, &[(&[], 1), (&[2], 1)]));
        let p3 = params(5, 3);
        assert_eq!(fuse_sln(&w(p3, &[1]), &w(p3, &[1])).unwrap(), exp(p3, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(fuse_sln(&w(p3, &[2]), &w(p3, &[1])).unwrap(), exp(p3, &[(&[2, 1], 1)]));
        assert!(fuse_sln(&w(p3, &[1]), &w(p2, &[1])).is_err());
    }

    #[test]
    fn level_one_is_pointed() {
        // p - n = 1: every simple is invertible, fusion is Z/n.
        let pp = params(5, 4);
        let simples = enumerate_simples(pp);
        for a in &simples {
            for b in &simples {
                assert_eq!(fuse_sln(a, b).unwrap().length(), 1);
            }
        }
    }

    #[test]
    fn invertible_action_examples() {
        let pp = params(5, 3);
        assert_eq!(AlcoveWeight::empty(pp).invertible_action(), w(pp, &[2]));
        assert_eq!(w(pp, &[2, 2]).invertible_action(), AlcoveWeight::empty(pp));
        assert_eq!(w(pp, &[1]).invertible_action(), w(pp, &[2, 1]));
        assert_eq!(
            fuse_sln(&AlcoveWeight::generator(pp), &w(pp, &[1])).unwrap(),
            FusionExpansion::single(w(pp, &[2, 1]))
        );
        for (p, n) in [(5, 2), (5, 3), (7, 3), (7, 4), (11, 4)] {
            let pp = params(p, n);
            for l in enumerate_simples(pp) {
                let mut x = l.clone();
                for _ in 0..n {
                    x = x.invertible_action();
                }
                assert_eq!(x, l);
            }
        }
    }

    #[test]
    fn plus_and_factorization_examples() {
        let p3 = params(5, 3);
        assert!(AlcoveWeight::empty(p3).is_plus());
        assert!(w(p3, &[2, 1]).is_plus());
        assert!(!w(p3, &[1]).is_plus());
        assert_eq!(w(p3, &[2, 1]).pointed_plus_factorize(), (0, w(p3, &[2, 1])));
        assert_eq!(w(p3, &[2]).pointed_plus_factorize(), (1, AlcoveWeight::empty(p3)));
        let p2 = params(5, 2);
        // for n = 2 the plus part is the even-size partitions, i.e. odd L_k
        assert_eq!(w(p2, &[2]).pointed_plus_factorize(), (0, w(p2, &[2])));
        assert_eq!(w(p2, &[1]).pointed_plus_factorize(), (1, w(p2, &[2])));
    }

    #[test]
    fn pointed_plus_is_a_bijection() {
        for (p, n) in [(5, 3), (7, 3), (7, 4), (11, 3)] {
            let pp = params(p, n);
            let simples = enumerate_simples(pp);
            let mut seen = std::collections::BTreeSet::new();
            for l in &simples {
                let (j, s) = l.pointed_plus_factorize();
                assert!(s.is_plus() && j < n);
                let mut back = s.clone();
                for _ in 0..j {
                    back = back.invertible_action();
                }
                assert_eq!(&back, l);
                assert!(seen.insert((j, s)));
            }
            assert_eq!(seen.len(), simples.len());
        }
    }

    #[test]
    fn qdim_examples() {
        let p = Prime::new(5).unwrap();
        let p2 = params(5, 2);
        let p3 = params(5, 3);
        assert_eq!(AlcoveWeight::empty(p3).qdim(), CycNum::one(p));
        assert_eq!(w(p2, &[1]).qdim(), qint(2, p).unwrap());
        assert_eq!(w(p3, &[1]).qdim(), qint(3, p).unwrap());
        // invertibles have unit-norm quantum dimension
        for (pr, n) in [(5, 3), (7, 3), (7, 4)] {
            let pp = params(pr, n);
            let g = AlcoveWeight::generator(pp);
            assert_eq!(g.qdim().mul(&g.dual().qdim()).unwrap(), CycNum::one(pp.prime()));
        }
    }

    #[test]
    fn dictionary_with_verp() {
        for p in [5u32, 7] {
            let pp = params(p, 2);
            let pr = pp.prime();
            for a in 1..p as usize {
                for b in 1..p as usize {
                    let got = fuse_sln(&w(pp, &[a as u32 - 1]), &w(pp, &[b as u32 - 1])).unwrap();
                    let want =
                        VerpObject::simple(pr, a).unwrap().fuse(&VerpObject::simple(pr, b).unwrap()).unwrap();
                    let translated = VerpObject::from_terms(
                        pr,
                        got.terms()
                            .iter()
                            .map(|(w, &m)| (w.parts().first().copied().unwrap_or(0) as usize + 1, m)),
                    )
                    .unwrap();
                    assert_eq!(translated, want);
                }
            }
        }
    }

    #[test]
    fn duality_multiplicity() {
        for (p, n) in [(5, 3), (7, 3), (7, 4)] {
            let pp = params(p, n);
            let simples = enumerate_simples(pp);
            let unit = AlcoveWeight::empty(pp);
            for a in &simples {
                for b in &simples {
                    let m = fuse_sln(a, b).unwrap().multiplicity(&unit);
                    assert_eq!(m, u64::from(*b == a.dual()), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn folding_signs() {
        // ν + ρ on the affine wall vanishes
        assert_eq!(fold_into_alcove(&[3], 3, 5), None);
        assert_eq!(fold_into_alcove(&[2, 1], 3, 5), Some((vec![2, 1], 1)));
        // (4) at p=5, n=2: v = (5,0) on the wall
        assert_eq!(fold_into_alcove(&[4], 2, 5), None);
        // (5) at p=5, n=2: v = (6,0) reflects to (5,1) -> (3, 1) sign -1 -> parts (3)
        assert_eq!(fold_into_alcove(&[5], 2, 5), Some((vec![3], -1)));
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let pp = params(7, 3);
        let a = w(pp, &[2, 1]);
        let prod = fuse_sln_uncached(&a, &a);
        let json = serde_json::to_string(&prod).unwrap();
        assert_eq!(serde_json::from_str::<FusionExpansion>(&json).unwrap(), prod);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<AlcoveWeight>(&json).unwrap(), a);
        assert!(serde_json::from_str::<AlcoveWeight>(r#"{"params":{"p":7,"n":3},"parts":[5]}"#).is_err());
        assert!(serde_json::from_str::<SLnParams>(r#"{"p":7,"n":7}"#).is_err());
    }
}
