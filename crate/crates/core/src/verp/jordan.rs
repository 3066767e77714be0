//! `Rep k[t]/(t^p)` through explicit nilpotent matrices over `F_p`.
//!
//! A module is a multiset of Jordan blocks `J_s` (`1 <= s <= p`). Tensor,
//! symmetric and exterior powers are formed on explicit bases with `t`
//! acting as a derivation, and the resulting Jordan type is read off from
//! the rank sequence `r_i = rank(N^i)`: there are `r_{s-1} - r_s` blocks of
//! size at least `s`.
//!
//! All the bases used here are graded (`N` raises the grading by one), so
//! `N` is stored as the chain of maps between consecutive graded pieces.
//! This is the same matrix, just never materialized densely.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::prime::{check_same, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawJordan", into = "RawJordan")]
pub struct JordanModule {
    p: Prime,
    /// Block sizes, sorted ascending.
    blocks: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawJordan {
    p: Prime,
    blocks: Vec<usize>,
}

impl TryFrom<RawJordan> for JordanModule {
    type Error = Error;
    fn try_from(r: RawJordan) -> Result<Self> {
        JordanModule::new(r.p, r.blocks)
    }
}

impl From<JordanModule> for RawJordan {
    fn from(j: JordanModule) -> Self {
        RawJordan { p: j.p, blocks: j.blocks }
    }
}

impl fmt::Display for JordanModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.blocks.iter().map(|s| format!("J{s}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl JordanModule {
    pub fn new(p: Prime, mut blocks: Vec<usize>) -> Result<Self> {
        if let Some(&s) = blocks.iter().find(|&&s| s == 0 || s > p.as_usize()) {
            return Err(Error::OutOfRange { index: s as i64, lo: 1, hi: p.as_i64() });
        }
        blocks.sort_unstable();
        Ok(JordanModule { p, blocks })
    }

    pub fn block(p: Prime, size: usize) -> Result<Self> {
        Self::new(p, vec![size])
    }

    pub fn zero(p: Prime) -> Self {
        JordanModule { p, blocks: Vec::new() }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn direct_sum(&self, other: &JordanModule) -> Result<JordanModule> {
        check_same(self.p, other.p)?;
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        blocks.sort_unstable();
        Ok(JordanModule { p: self.p, blocks })
    }

    /// Number of blocks of each size `1..=p`, indexed by size.
    pub fn block_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.p.as_usize() + 1];
        for &s in &self.blocks {
            c[s] += 1;
        }
        c
    }

    /// Basis vectors `(block, position)` with grading `position`.
    fn basis(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().enumerate().flat_map(|(b, &s)| (0..s).map(move |i| (b, i))).collect()
    }

    fn shift(&self, (b, i): (usize, usize)) -> Option<(usize, usize)> {
        (i + 1 < self.blocks[b]).then_some((b, i + 1))
    }
}

/// Tensor product with `t` acting as `t ⊗ 1 + 1 ⊗ t`.
pub fn tensor_jordan(a: &JordanModule, b: &JordanModule) -> Result<JordanModule> {
    check_same(a.p, b.p)?;
    let p = a.p;
    let mut out = Vec::new();
    // Tensor distributes over the block decomposition.
    for &m in &a.blocks {
        for &n in &b.blocks {
            out.extend(tensor_blocks(p, m, n));
        }
    }
    JordanModule::new(p, out)
}

fn tensor_blocks(p: Prime, m: usize, n: usize) -> Vec<usize> {
    let keys: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let g = GradedNilpotent::build(
        p,
        keys,
        |&(i, j)| i + j,
        |&(i, j)| {
            let mut img = Vec::with_capacity(2);
            if i + 1 < m {
                img.push(((i + 1, j), 1));
            }
            if j + 1 < n {
                img.push(((i, j + 1), 1));
            }
            img
        },
    );
    g.jordan_type()
}

fn check_power_degree(p: Prime, d: usize) -> Result<()> {
    if d >= p.as_usize() {
        return Err(Error::Unsupported(format!(
            "degree {d} >= p = {p}: the symmetrizing idempotent does not exist"
        )));
    }
    Ok(())
}

/// `S^d(a)` for `d < p`.
///
/// Computed on the monomial basis of the symmetric power; since `d!` is a
/// unit this module is isomorphic to the image of the symmetrizer on
/// `a^{⊗d}`.
pub fn sym_power_jordan(a: &JordanModule, d: usize) -> Result<JordanModule> {
    check_power_degree(a.p, d)?;
    let basis = a.basis();
    let keys = multisets(basis.len(), d);
    let grade = |m: &Vec<u16>| m.iter().map(|&x| basis[x as usize].1).sum::<usize>();
    let index: HashMap<(usize, usize), u16> = basis.iter().enumerate().map(|(i, &v)| (v, i as u16)).collect();
    let g = GradedNilpotent::build(a.p, keys, grade, |m| {
        let mut img = Vec::new();
        for pos in 0..m.len() {
            if pos > 0 && m[pos] == m[pos - 1] {
                // equal factors give equal terms; count them below
                continue;
            }
            let Some(next) = a.shift(basis[m[pos] as usize]) else {
                continue;
            };
            let mult = m.iter().filter(|&&x| x == m[pos]).count();
            let mut w = m.clone();
            w[pos] = index[&next];
            w.sort_unstable();
            img.push((w, mult as u32));
        }
        img
    });
    JordanModule::new(a.p, g.jordan_type())
}

/// `Λ^d(a)` for `d < p`, on the basis of strictly increasing wedges.
pub fn ext_power_jordan(a: &JordanModule, d: usize) -> Result<JordanModule> {
    check_power_degree(a.p, d)?;
    let p = a.p.get();
    let basis = a.basis();
    let keys = subsets(basis.len(), d);
    let grade = |m: &Vec<u16>| m.iter().map(|&x| basis[x as usize].1).sum::<usize>();
    let index: HashMap<(usize, usize), u16> = basis.iter().enumerate().map(|(i, &v)| (v, i as u16)).collect();
    let g = GradedNilpotent::build(a.p, keys, grade, |m| {
        let mut img = Vec::new();
        for pos in 0..m.len() {
            let Some(next) = a.shift(basis[m[pos] as usize]) else {
                continue;
            };
            let new = index[&next];
            if m.contains(&new) {
                continue;
            }
            let mut w = m.clone();
            w[pos] = new;
            // bubble into place, counting transpositions
            let mut swaps = 0usize;
            let mut k = pos;
            while k + 1 < w.len() && w[k] > w[k + 1] {
                w.swap(k, k + 1);
                k += 1;
                swaps += 1;
            }
            while k > 0 && w[k] < w[k - 1] {
                w.swap(k, k - 1);
                k -= 1;
                swaps += 1;
            }
            let coeff = if swaps.is_multiple_of(2) { 1 } else { p - 1 };
            img.push((w, coeff));
        }
        img
    });
    JordanModule::new(a.p, g.jordan_type())
}

fn multisets(n: usize, d: usize) -> Vec<Vec<u16>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x as u16);
            go(x, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Vec::with_capacity(d), &mut out);
    out
}

fn subsets(n: usize, d: usize) -> Vec<Vec<u16>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x as u16);
            go(x + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Vec::with_capacity(d), &mut out);
    out
}

/// A nilpotent operator of degree +1 on a graded space, stored as the maps
/// `V_g -> V_{g+1}`.
#[derive(Debug, Clone)]
pub struct GradedNilpotent {
    p: Prime,
    dims: Vec<usize>,
    // maps[g] : V_g -> V_{g+1}, shape dims[g+1] x dims[g]
    maps: Vec<FpMatrix>,
}

impl GradedNilpotent {
    /// Assemble from a basis, a grading, and the action of `N` on each basis
    /// element (which must land in grading + 1).
    pub fn build<K, G, F>(p: Prime, keys: Vec<K>, grade: G, act: F) -> Self
    where
        K: Eq + Hash + Clone,
        G: Fn(&K) -> usize,
        F: Fn(&K) -> Vec<(K, u32)>,
    {
        let top = keys.iter().map(&grade).max().map_or(0, |g| g + 1);
        let mut by_grade: Vec<Vec<K>> = vec![Vec::new(); top];
        let mut pos: HashMap<K, usize> = HashMap::with_capacity(keys.len());
        for k in keys {
            let g = grade(&k);
            pos.insert(k.clone(), by_grade[g].len());
            by_grade[g].push(k);
        }
        let dims: Vec<usize> = by_grade.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(top.saturating_sub(1));
        for g in 0..top.saturating_sub(1) {
            let mut m = FpMatrix::zeros(p.get(), dims[g + 1], dims[g]);
            for (c, k) in by_grade[g].iter().enumerate() {
                for (img, coeff) in act(k) {
                    debug_assert_eq!(grade(&img), g + 1, "operator must raise the grading by one");
                    let r = pos[&img];
                    m.add_to(r, c, coeff);
                }
            }
            maps.push(m);
        }
        GradedNilpotent { p, dims, maps }
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `rank(N^i)` for `i = 0, 1, …` until it reaches zero (inclusive).
    pub fn rank_sequence(&self) -> Vec<usize> {
        let top = self.dims.len();
        let mut ranks = vec![self.dim()];
        // rank(N^i) = Σ_g rank(V_g -> V_{g+i})
        let mut chains: Vec<Option<FpMatrix>> = (0..top).map(|_| None).collect();
        for i in 1..=top {
            let mut total = 0;
            for (g, chain) in chains.iter_mut().enumerate() {
                if g + i >= top {
                    *chain = None;
                    continue;
                }
                let next = match chain.take() {
                    None => self.maps[g].clone(),
                    Some(c) => self.maps[g + i - 1].mul(&c),
                };
                total += next.rank();
                *chain = Some(next);
            }
            ranks.push(total);
            if total == 0 {
                break;
            }
        }
        ranks
    }

    /// Jordan block sizes, ascending.
    pub fn jordan_type(&self) -> Vec<usize> {
        jordan_type_from_ranks(&self.rank_sequence())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }
}

/// Block sizes from a rank sequence `r_0 = dim, r_1, …, r_k = 0`.
pub fn jordan_type_from_ranks(ranks: &[usize]) -> Vec<usize> {
    let at = |i: usize| ranks.get(i).copied().unwrap_or(0);
    let mut blocks = Vec::new();
    for s in 1..ranks.len() {
        let at_least_s = at(s - 1) - at(s);
        let at_least_next = at(s) - at(s + 1);
        for _ in 0..(at_least_s - at_least_next) {
            blocks.push(s);
        }
    }
    blocks.sort_unstable();
    blocks
}
